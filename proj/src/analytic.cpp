#include "mepnet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mepnet
{

namespace
{

void
check_l0(int l0)
{
    if (l0 < 1)
        throw DomainError("l0 must be >= 1, got " + std::to_string(l0));
}

double
mixture(TopologyKind topology, int l0, Concurrence c, bool reversed)
{
    double sum = 0.0;
    for (const LengthClass& cls : lattice_length_classes(topology, l0)) {
        const auto& l = cls.lengths;
        const double v = reversed ? c_k3(l[2], l[1], l[0], c).value() : c_k3(l[0], l[1], l[2], c).value();
        sum += cls.weight * v;
    }
    return std::clamp(sum, 0.0, 1.0);
}

}  // anon

Concurrence
c_k3(int l0, int l1, int l2, Concurrence c)
{
    if (l0 < 1 || l1 < 1 || l2 < 1)
        throw DomainError("c_k3: path lengths must be >= 1");
    if (c.value() <= 0.0)
        throw DomainError("c_k3: concurrence must be positive");

    const double a = l0;
    const double b = l1;
    const double d = l2;
    const double e = 1.0 - c.value();
    const double f1 = 3 * a + 3 * b + 4 * d;
    const double f2 = 4 * a * b + 5 * b * d + 5 * a * d;
    const double f3 = 6 * a * b + 4 * b * d + 4 * a * d;
    const double f4 = a * b * d;
    const double num = 1.0 - f1 * e / 6.0 + f2 * e * e / 18.0 - 7.0 * f4 * e * e * e / 54.0;
    const double den = 1.0 - (f1 - 2 * d) * e / 6.0 + f3 * e * e / 18.0 - 4.0 * f4 * e * e * e / 27.0;
    return Concurrence(std::clamp(num / den, 0.0, 1.0));
}

bool
c_k3_not_symmetric(int l0, int l1, int l2, Concurrence c)
{
    std::array<int, 3> l{l0, l1, l2};
    std::sort(l.begin(), l.end());
    double lo = 1.0;
    double hi = 0.0;
    do {
        const double v = c_k3(l[0], l[1], l[2], c).value();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    } while (std::next_permutation(l.begin(), l.end()));
    return hi - lo > 1e-12;
}

std::vector<LengthClass>
lattice_length_classes(TopologyKind topology, int l0)
{
    check_l0(l0);
    const double l = l0;
    const bool even = l0 % 2 == 0;
    std::vector<LengthClass> out;
    auto add = [&](double w, int a, int b, int c) {
        if (w > 0.0)
            out.push_back({w, {a, b, c}});
    };

    switch (topology) {
    case TopologyKind::kTLN:
        if (l0 == 1) {
            add(1.0, 1, 2, 2);
        } else {
            add(1.0 / l, l0, l0 + 1, l0 + 1);
            add((l - 1.0) / l, l0, l0, l0 + 2);
        }
        break;
    case TopologyKind::kSLN:
        if (even) {
            add(1.0 / l, l0, l0, l0 + 4);
            add((l - 1.0) / l, l0, l0 + 2, l0 + 2);
        } else {
            add(1.0, l0, l0 + 2, l0 + 2);
        }
        break;
    case TopologyKind::kHLN:
        if (even) {
            add(1.0, l0, l0 + 2, l0 + 6);
        } else {
            add((l + 1.0) / (2.0 * l), l0, l0 + 2, l0 + 6);
            add((l - 1.0) / (2.0 * l), l0, l0, l0 + 8);
        }
        break;
    case TopologyKind::kRN:
    case TopologyKind::kBAN:
        throw DomainError(std::string("no closed form for topology ") + std::string(topology_name(topology)));
    }
    return out;
}

Concurrence
avg_spf(TopologyKind topology, int l0, Concurrence c)
{
    return Concurrence(mixture(topology, l0, c, false));
}

Concurrence
avg_spl(TopologyKind topology, int l0, Concurrence c)
{
    return Concurrence(mixture(topology, l0, c, true));
}

}  // namespace mepnet
