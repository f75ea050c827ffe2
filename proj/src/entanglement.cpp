#include "mepnet/entanglement.hpp"

#include "pump_arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mepnet
{

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

namespace
{

bool
in_unit_interval(double x)
{
    return x >= 0.0 && x <= 1.0;
}

using detail::clamp_unit;

}  // anon

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

Concurrence::Concurrence(double value)
    :value_(value)
{
    if (!in_unit_interval(value))
        throw DomainError("concurrence out of [0,1]: " + std::to_string(value));
}

NoiseParam::NoiseParam(double value)
    :value_(value)
{
    if (!in_unit_interval(value))
        throw DomainError("noise parameter out of [0,1]: " + std::to_string(value));
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

EdgeDistribution::EdgeDistribution(double delta, double a, double b)
    :delta_(delta),
    a_(a),
    b_(b)
{
    if (!in_unit_interval(delta))
        throw std::invalid_argument("edge distribution: delta must lie in [0,1]");
    if (!(a >= 0.0 && a <= 1.0))
        throw std::invalid_argument("edge distribution: a must lie in [0,1]");
    if (!(b >= 1.0))
        throw std::invalid_argument("edge distribution: b must be >= 1");
    if (delta > 0.0 && b * delta > 1.0 + 1e-12)
        throw std::invalid_argument("edge distribution: b must be <= 1/delta");
    // a == 1 is only meaningful for the degenerate homogeneous case a == b == 1.
    if (a == 1.0 && b != 1.0)
        throw std::invalid_argument("edge distribution: a must be < 1 unless homogeneous");
    // Uniform on [min,max] has mean 1 - delta only if the interval is centred on it.
    if (std::abs((a + b) - 2.0) > 1e-9)
        throw std::invalid_argument("edge distribution: uniform shape requires a + b = 2");
}

EdgeDistribution
EdgeDistribution::from_moments(double min, double mean, double max)
{
    if (!(min <= mean && mean <= max) || !in_unit_interval(min) || !in_unit_interval(max))
        throw std::invalid_argument("edge distribution: need 0 <= min <= mean <= max <= 1");
    const double delta = 1.0 - mean;
    if (delta == 0.0)
        return EdgeDistribution(0.0, 1.0, 1.0);
    return EdgeDistribution(delta, (1.0 - max) / delta, (1.0 - min) / delta);
}

EdgeDistribution
EdgeDistribution::homogeneous(double concurrence)
{
    return EdgeDistribution(1.0 - concurrence, 1.0, 1.0);
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

Concurrence
concurrence_from_noise(NoiseParam q)
{
    return Concurrence(std::max(0.0, 1.0 - 1.5 * q.value()));
}

NoiseParam
noise_from_concurrence(Concurrence c)
{
    return NoiseParam((2.0 / 3.0) * (1.0 - c.value()));
}

Concurrence
swap_path(std::span<const NoiseParam> edge_noises)
{
    if (edge_noises.empty())
        throw DomainError("swap_path: empty path");
    double survival = 1.0;
    for (NoiseParam q : edge_noises)
        survival *= 1.0 - q.value();
    return Concurrence(clamp_unit(1.5 * survival - 0.5));
}

Concurrence
swap_path(std::span<const Concurrence> edge_concurrences)
{
    if (edge_concurrences.empty())
        throw DomainError("swap_path: empty path");
    double survival = 1.0;
    for (Concurrence c : edge_concurrences)
        survival *= 1.0 - noise_from_concurrence(c).value();
    return Concurrence(clamp_unit(1.5 * survival - 0.5));
}

Concurrence
pump_step(NoiseParam q, NoiseParam q_prime)
{
    return Concurrence(clamp_unit(detail::pump_rational(q.value(), q_prime.value())));
}

Concurrence
pump_concurrence(Concurrence c1, Concurrence c2)
{
    // Werner fidelity of an isotropic pair is (1+c)/2, i.e. noise (1-c)/2.
    return Concurrence(detail::pump_isotropic(c1.value(), c2.value()));
}

double
h_function(Concurrence c1)
{
    const double c = c1.value();
    if (c == 1.0)
        return std::numeric_limits<double>::infinity();
    return 2.0 * c * (c + 2.0) / ((1.0 + c) * (1.0 - c));
}

bool
pump_useful(Concurrence c1, Concurrence c2)
{
    if (c1 < c2)
        std::swap(c1, c2);
    const double h = h_function(c1);
    // 6/(h+6) -> 0 at the pole.
    const double share = std::isinf(h) ? 0.0 : 6.0 / (h + 6.0);
    const double d = c1.value() - c2.value();
    return d < share + c1.value() - 1.0;
}

double
purify_probability_bound(int l, int d, double delta)
{
    if (l < 1)
        throw DomainError("purify_probability_bound: l must be >= 1");
    if (d < 1)
        throw DomainError("purify_probability_bound: d must be >= 1");
    if (!in_unit_interval(delta))
        throw DomainError("purify_probability_bound: delta must lie in [0,1]");
    const double raw = 1.0 + (static_cast<double>(l - d) / d) * delta;
    return std::min(1.0, raw);
}

double
expected_gain(int l, int d, double delta)
{
    return (l - d) * delta / 3.0;
}

Concurrence
asymptotic_combined(int k_max, int l, double delta)
{
    if (k_max < 1)
        throw DomainError("asymptotic_combined: k_max must be >= 1");
    const double deficit = std::pow(2.0 / 3.0, k_max - 1) * l * delta;
    return Concurrence(clamp_unit(1.0 - deficit));
}

////////////////////////////////////////////////////////////
////////////////////////////////////////////////////////////

BellDiagonal
BellDiagonal::isotropic(Concurrence c)
{
    const auto s = detail::isotropic_state(c.value());
    return BellDiagonal{{s.a, s.b, s.c, s.d}};
}

Concurrence
BellDiagonal::concurrence() const
{
    const detail::BellWeights<double> s{weights[0], weights[1], weights[2], weights[3]};
    return Concurrence(detail::bell_concurrence(s));
}

BellDiagonal
deutsch_pump(const BellDiagonal& kept, const BellDiagonal& fresh)
{
    const detail::BellWeights<double> x{kept.weights[0], kept.weights[1], kept.weights[2], kept.weights[3]};
    const detail::BellWeights<double> y{fresh.weights[0], fresh.weights[1], fresh.weights[2], fresh.weights[3]};
    const auto out = detail::deutsch_step(x, y);
    return BellDiagonal{{out.a, out.b, out.c, out.d}};
}

Concurrence
sequential_pump(std::span<const Concurrence> ordered, PumpModel model)
{
    if (ordered.empty())
        throw DomainError("sequential_pump: no paths to pump");
    if (ordered.size() == 1)
        return ordered.front();

    if (model == PumpModel::kTwirled) {
        double running = ordered.front().value();
        for (size_t i = 1; i < ordered.size(); i++)
            running = detail::pump_isotropic(running, ordered[i].value());
        return Concurrence(running);
    }

    auto state = detail::isotropic_state(ordered.front().value());
    for (size_t i = 1; i < ordered.size(); i++)
        state = detail::deutsch_step(state, detail::isotropic_state(ordered[i].value()));
    return Concurrence(detail::bell_concurrence(state));
}

}  // namespace mepnet
