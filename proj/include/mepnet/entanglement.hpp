#pragma once

// Scalar algebra of isotropic two-qubit states: concurrence/noise conversion,
// swap composition along a path, Deutsch pumping and the closed-form bounds
// used to reason about multipath purification.

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

namespace mepnet
{

class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Entanglement of a two-qubit pair, 0 (separable) to 1 (maximally entangled).
class Concurrence
{
public:
    constexpr Concurrence() = default;
    explicit Concurrence(double value);

    constexpr double value() const { return value_; }

    friend constexpr bool operator==(Concurrence, Concurrence) = default;
    friend constexpr auto operator<=>(Concurrence, Concurrence) = default;

private:
    double value_{0.0};
};

/// White-noise weight q of an isotropic state (1-q)|phi+><phi+| + q*I/4.
class NoiseParam
{
public:
    constexpr NoiseParam() = default;
    explicit NoiseParam(double value);

    constexpr double value() const { return value_; }

    friend constexpr bool operator==(NoiseParam, NoiseParam) = default;
    friend constexpr auto operator<=>(NoiseParam, NoiseParam) = default;

private:
    double value_{0.0};
};

/*
 * Bounded edge-concurrence distribution:
 *      max  = 1 - a*delta
 *      mean = 1 - delta
 *      min  = 1 - b*delta
 * with 0 <= a < 1 <= b <= 1/delta.  Edges are drawn uniformly on [min, max],
 * so (a + b) must equal 2 for the mean to hold; `from_moments` enforces that.
 * */
class EdgeDistribution
{
public:
    EdgeDistribution(double delta, double a, double b);

    static EdgeDistribution from_moments(double min, double mean, double max);
    static EdgeDistribution homogeneous(double concurrence);

    double delta() const { return delta_; }
    double a() const { return a_; }
    double b() const { return b_; }

    double max() const { return 1.0 - a_ * delta_; }
    double mean() const { return 1.0 - delta_; }
    double min() const { return 1.0 - b_ * delta_; }
    double spread() const { return b_ - a_; }
    bool is_homogeneous() const { return spread() == 0.0 || delta_ == 0.0; }

private:
    double delta_;
    double a_;
    double b_;
};

Concurrence concurrence_from_noise(NoiseParam q);

/// Inverse on the entangled branch; c = 0 maps to the boundary q = 2/3.
NoiseParam noise_from_concurrence(Concurrence c);

/*
 * Concurrence of the pair obtained by swapping isotropic states along a path.
 * Isotropic states compose multiplicatively in (1-q):
 *      c_path = max(0, 1.5 * prod(1 - q_i) - 0.5)
 * Throws DomainError on an empty path.
 * */
Concurrence swap_path(std::span<const NoiseParam> edge_noises);
Concurrence swap_path(std::span<const Concurrence> edge_concurrences);

/*
 * Closed-form Deutsch pump value
 *      [q + q' - 1 + 10(1-q)(1-q')] / [1 + 2q + 2q' + 8(1-q)(1-q')]
 * clamped to [0,1].  The rational function is the output fidelity of the
 * protocol for Werner-form inputs with fidelity 1-q; `pump_concurrence`
 * applies it to isotropic pairs and returns a concurrence.
 * */
Concurrence pump_step(NoiseParam q, NoiseParam q_prime);

/// Concurrence after one successful pump of two isotropic pairs.
Concurrence pump_concurrence(Concurrence c1, Concurrence c2);

/// 2c(c+2)/((1+c)(1-c)); +infinity at c = 1.
double h_function(Concurrence c1);

/// Whether pumping the pair (c1, c2) beats the better input. Arguments are
/// reordered so that c1 >= c2.
bool pump_useful(Concurrence c1, Concurrence c2);

/// Upper bound on the probability that an alternate path of l+d hops can
/// purify the shortest path of l hops, capped at 1.
double purify_probability_bound(int l, int d, double delta);

/// First-order concurrence gain from purifying an l-hop path with an (l+d)-hop one.
double expected_gain(int l, int d, double delta);

/// 1 - (2/3)^(k_max-1) * l * delta, clamped to [0,1].
Concurrence asymptotic_combined(int k_max, int l, double delta);

/*
 * Bell-diagonal two-qubit state, weights on (phi+, psi-, psi+, phi-).
 * Deutsch pumping maps Bell-diagonal states to Bell-diagonal states, so a
 * pumping sequence is carried exactly by these four numbers.
 * */
struct BellDiagonal
{
    std::array<double, 4> weights{1.0, 0.0, 0.0, 0.0};

    static BellDiagonal isotropic(Concurrence c);

    Concurrence concurrence() const;
};

/// One Deutsch pumping step (post-selected on success).
BellDiagonal deutsch_pump(const BellDiagonal& kept, const BellDiagonal& fresh);

enum class PumpModel
{
    kBellDiagonal,  // carry the exact Bell-diagonal state between steps
    kTwirled,       // re-isotropize after every step
};

/*
 * Pump the path states in the given order: the first element is the kept
 * pair, every following element is pumped into it.  Throws DomainError on
 * an empty list.
 * */
Concurrence sequential_pump(std::span<const Concurrence> ordered,
                            PumpModel model = PumpModel::kBellDiagonal);

}  // namespace mepnet
