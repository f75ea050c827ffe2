#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mepnet::kernels
{

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

namespace
{

Isa
detect_best()
{
#if defined(MEPNET_HAVE_AVX2)
    if (isa_supported(Isa::kAvx2))
        return Isa::kAvx2;
#endif
    return Isa::kScalar;
}

Isa
initial_isa()
{
    const char* env = std::getenv("MEPNET_SIMD");
    if (env != nullptr) {
        const std::string want(env);
        if (want == "scalar")
            return Isa::kScalar;
        if (want == "avx2" && isa_supported(Isa::kAvx2))
            return Isa::kAvx2;
    }
    return detect_best();
}

std::atomic<Isa>&
current()
{
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

void
check_sizes(std::size_t a, std::size_t b, std::size_t out, const char* what)
{
    if (a != out || b != out)
        throw std::invalid_argument(std::string(what) + ": input and output spans differ in length");
}

}  // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

std::string_view
isa_name(Isa isa)
{
    switch (isa) {
    case Isa::kScalar:
        return "scalar";
    case Isa::kAvx2:
        return "avx2";
    }
    return "unknown";
}

bool
isa_supported(Isa isa)
{
    switch (isa) {
    case Isa::kScalar:
        return true;
    case Isa::kAvx2:
#if defined(MEPNET_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa
active_isa()
{
    return current().load(std::memory_order_relaxed);
}

void
set_active_isa(Isa isa)
{
    if (!isa_supported(isa))
        throw std::invalid_argument("kernel variant not supported on this CPU: " + std::string(isa_name(isa)));
    current().store(isa, std::memory_order_relaxed);
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

void
pump_step_batch(std::span<const double> q, std::span<const double> q_prime, std::span<double> out)
{
    check_sizes(q.size(), q_prime.size(), out.size(), "pump_step_batch");
#if defined(MEPNET_HAVE_AVX2)
    if (active_isa() == Isa::kAvx2)
        return avx2::pump_step(q.data(), q_prime.data(), out.data(), out.size());
#endif
    scalar::pump_step(q.data(), q_prime.data(), out.data(), out.size());
}

void
pump_concurrence_batch(std::span<const double> c1, std::span<const double> c2, std::span<double> out)
{
    check_sizes(c1.size(), c2.size(), out.size(), "pump_concurrence_batch");
#if defined(MEPNET_HAVE_AVX2)
    if (active_isa() == Isa::kAvx2)
        return avx2::pump_concurrence(c1.data(), c2.data(), out.data(), out.size());
#endif
    scalar::pump_concurrence(c1.data(), c2.data(), out.data(), out.size());
}

void
pump_fold_batch(std::span<const double> paths,
                std::size_t slots,
                std::span<const std::int32_t> counts,
                std::span<double> out,
                FoldOptions options)
{
    const std::size_t n = out.size();
    if (counts.size() != n)
        throw std::invalid_argument("pump_fold_batch: counts and output differ in length");
    if (slots == 0 || paths.size() != slots * n)
        throw std::invalid_argument("pump_fold_batch: paths must hold slots * n values");
    for (std::int32_t c : counts) {
        if (c < 1 || static_cast<std::size_t>(c) > slots)
            throw std::invalid_argument("pump_fold_batch: counts must lie in [1, slots]");
    }
#if defined(MEPNET_HAVE_AVX2)
    if (active_isa() == Isa::kAvx2)
        return avx2::pump_fold(paths.data(), slots, counts.data(), out.data(), n, options);
#endif
    scalar::pump_fold(paths.data(), slots, counts.data(), out.data(), n, options);
}

}  // namespace mepnet::kernels
