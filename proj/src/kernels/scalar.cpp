#include "kernels_impl.hpp"

#include "../pump_arith.hpp"

namespace mepnet::kernels::scalar
{

void
pump_step(const double* q, const double* qp, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; i++)
        out[i] = detail::clamp_unit(detail::pump_rational(q[i], qp[i]));
}

void
pump_concurrence(const double* c1, const double* c2, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; i++)
        out[i] = detail::pump_isotropic(c1[i], c2[i]);
}

void
pump_fold(const double* paths, std::size_t slots, const std::int32_t* counts,
          double* out, std::size_t n, FoldOptions options)
{
    const bool bell = options.model == PumpModel::kBellDiagonal;
    for (std::size_t i = 0; i < n; i++) {
        const double first = paths[i];
        double running = first;
        auto state = detail::isotropic_state(first);
        const std::size_t used = static_cast<std::size_t>(counts[i]);
        for (std::size_t s = 1; s < used && s < slots; s++) {
            const double fresh = paths[s * n + i];
            if (bell) {
                const auto next = detail::deutsch_step(state, detail::isotropic_state(fresh));
                const double cand = detail::bell_concurrence(next);
                if (!options.adaptive_skip || cand >= running) {
                    state = next;
                    running = cand;
                }
            } else {
                const double cand = detail::pump_isotropic(running, fresh);
                if (!options.adaptive_skip || cand >= running)
                    running = cand;
            }
        }
        out[i] = running;
    }
}

}  // namespace mepnet::kernels::scalar
