#include "mepnet/strategy.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace mepnet
{

Strategy
Strategy::custom(std::vector<std::size_t> order)
{
    std::vector<bool> seen(order.size(), false);
    for (std::size_t i : order) {
        if (i >= order.size() || seen[i])
            throw std::invalid_argument("custom strategy: order must be a permutation of 0..n-1");
        seen[i] = true;
    }
    if (order.empty())
        throw std::invalid_argument("custom strategy: empty permutation");
    return Strategy(StrategyKind::kCustom, std::move(order));
}

std::string_view
Strategy::name() const
{
    switch (kind_) {
    case StrategyKind::kSPF:
        return "SPF";
    case StrategyKind::kSPL:
        return "SPL";
    case StrategyKind::kCustom:
        return "CUSTOM";
    case StrategyKind::kBaseline:
        return "BASELINE";
    }
    return "?";
}

Strategy
parse_strategy(std::string_view text)
{
    if (text == "SPF")
        return Strategy::spf();
    if (text == "SPL")
        return Strategy::spl();
    if (text == "BASELINE")
        return Strategy::baseline();
    constexpr std::string_view prefix = "CUSTOM:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::vector<std::size_t> order;
        std::string_view rest = text.substr(prefix.size());
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            std::size_t value = 0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc() || ptr != item.data() + item.size())
                throw std::invalid_argument("bad index in custom strategy: '" + std::string(item) + "'");
            order.push_back(value);
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        return Strategy::custom(std::move(order));
    }
    throw std::invalid_argument("unknown strategy: " + std::string(text));
}

std::vector<std::size_t>
order_paths(const PathSet& ps, const Strategy& strategy, std::size_t k)
{
    if (ps.empty())
        throw std::invalid_argument("order_paths: empty path set");
    if (k < 1)
        throw std::invalid_argument("order_paths: k must be >= 1");

    const std::size_t m = std::min(k, ps.size());
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; i++)
        order[i] = i;
    // Discovery order is already non-decreasing in length; stable_sort keeps
    // ties in discovery order for sets assembled by hand.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ps.paths[a].length() < ps.paths[b].length();
    });

    switch (strategy.kind()) {
    case StrategyKind::kSPF:
        break;
    case StrategyKind::kSPL:
        std::reverse(order.begin(), order.end());
        break;
    case StrategyKind::kBaseline:
        order.assign(1, 0);
        break;
    case StrategyKind::kCustom:
        if (strategy.permutation().size() != m)
            throw std::invalid_argument("order_paths: custom permutation has " + std::to_string(strategy.permutation().size())
                                        + " entries, " + std::to_string(m) + " paths in use");
        order = strategy.permutation();
        break;
    }
    return order;
}

MepOutcome
run_mep(const PathSet& ps, const Strategy& strategy, std::size_t k, kernels::FoldOptions options)
{
    MepOutcome out;
    out.order = order_paths(ps, strategy, k);
    out.paths_used = out.order.size();
    out.baseline_concurrence = ps.paths.front().concurrence;

    if (strategy.kind() == StrategyKind::kBaseline) {
        out.final_concurrence = out.baseline_concurrence;
        return out;
    }

    std::vector<double> column;
    column.reserve(out.order.size());
    for (std::size_t i : out.order)
        column.push_back(ps.paths[i].concurrence.value());
    const std::int32_t count = static_cast<std::int32_t>(column.size());
    double result = 0.0;
    kernels::pump_fold_batch(column, column.size(), std::span(&count, 1), std::span(&result, 1), options);
    out.final_concurrence = Concurrence(result);
    return out;
}

}  // namespace mepnet
