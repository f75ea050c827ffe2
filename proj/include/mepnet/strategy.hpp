#pragma once

// Multipath purification strategies: which paths to pump, and in what order.

#include "mepnet/kernels.hpp"
#include "mepnet/paths.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mepnet
{

enum class StrategyKind
{
    kSPF,       // shortest path pumped first
    kSPL,       // shortest path pumped last
    kCustom,    // caller-supplied permutation
    kBaseline,  // shortest path alone, no purification
};

class Strategy
{
public:
    static Strategy spf() { return Strategy(StrategyKind::kSPF, {}); }
    static Strategy spl() { return Strategy(StrategyKind::kSPL, {}); }
    static Strategy baseline() { return Strategy(StrategyKind::kBaseline, {}); }

    /// Throws std::invalid_argument unless `order` is a bijection on [0, order.size()).
    static Strategy custom(std::vector<std::size_t> order);

    StrategyKind kind() const { return kind_; }
    const std::vector<std::size_t>& permutation() const { return permutation_; }

    /// "SPF", "SPL", "BASELINE" or "CUSTOM".
    std::string_view name() const;

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    Strategy(StrategyKind kind, std::vector<std::size_t> permutation)
        :kind_(kind),
        permutation_(std::move(permutation))
    {}

    StrategyKind kind_;
    std::vector<std::size_t> permutation_;
};

/// Accepts SPF, SPL, BASELINE and CUSTOM:i,j,k,...
Strategy parse_strategy(std::string_view text);

struct MepOutcome
{
    Concurrence final_concurrence;
    std::size_t paths_used{0};
    std::vector<std::size_t> order;  // pumping order over path indices
    Concurrence baseline_concurrence;
};

/*
 * Indices of the first min(k, |ps|) paths in pumping order.  SPF is
 * ascending length (discovery order), SPL its exact reverse, BASELINE [0].
 * */
std::vector<std::size_t> order_paths(const PathSet& ps, const Strategy& strategy, std::size_t k);

/// Pumps are applied even when they lower the concurrence unless
/// options.adaptive_skip is set.
MepOutcome run_mep(const PathSet& ps, const Strategy& strategy, std::size_t k,
                   kernels::FoldOptions options = {});

}  // namespace mepnet
