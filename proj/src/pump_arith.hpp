#pragma once

// Shared scalar arithmetic for Deutsch pumping on Bell-diagonal states.
// The SIMD kernels mirror this operation order exactly so every ISA
// produces bit-identical results.

#include <algorithm>

namespace mepnet::detail
{

inline double
clamp_unit(double x)
{
    return std::min(std::max(x, 0.0), 1.0);
}

/// Closed-form Deutsch output fidelity for Werner-form noise q, q'.
inline double
pump_rational(double q, double qp)
{
    const double both = (1.0 - q) * (1.0 - qp);
    const double sum = q + qp;
    const double num = sum - 1.0 + 10.0 * both;
    const double den = 1.0 + 2.0 * sum + 8.0 * both;
    return num / den;
}

/// One pump of two isotropic pairs, concurrence in and out.
inline double
pump_isotropic(double c1, double c2)
{
    const double w1 = 0.5 * (1.0 - c1);
    const double w2 = 0.5 * (1.0 - c2);
    const double fidelity = clamp_unit(pump_rational(w1, w2));
    return clamp_unit(2.0 * fidelity - 1.0);
}

template <class T>
struct BellWeights
{
    T a;  // phi+
    T b;  // psi-
    T c;  // psi+
    T d;  // phi-
};

inline BellWeights<double>
isotropic_state(double concurrence)
{
    const double other = (1.0 - concurrence) / 6.0;
    return {(1.0 + concurrence) * 0.5, other, other, other};
}

inline BellWeights<double>
deutsch_step(const BellWeights<double>& x, const BellWeights<double>& y)
{
    const double norm = (x.a + x.b) * (y.a + y.b) + (x.c + x.d) * (y.c + y.d);
    return {
        (x.a * y.a + x.b * y.b) / norm,
        (x.c * y.d + x.d * y.c) / norm,
        (x.c * y.c + x.d * y.d) / norm,
        (x.a * y.b + x.b * y.a) / norm,
    };
}

inline double
bell_concurrence(const BellWeights<double>& s)
{
    const double top = std::max(std::max(s.a, s.b), std::max(s.c, s.d));
    return clamp_unit(2.0 * top - 1.0);
}

}  // namespace mepnet::detail
