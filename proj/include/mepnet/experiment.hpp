#pragma once

// Monte Carlo experiment driver: networks x distances x strategies, aggregated.

#include "mepnet/entanglement.hpp"
#include "mepnet/graph.hpp"
#include "mepnet/kernels.hpp"
#include "mepnet/strategy.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mepnet
{

/// Paths per S-D pair; `all` means every edge-disjoint path the pair has.
struct PathBudget
{
    bool all{false};
    int count{3};

    static PathBudget every() { return {true, 0}; }
    static PathBudget exactly(int k) { return {false, k}; }

    friend bool operator==(const PathBudget&, const PathBudget&) = default;
};

struct ExperimentConfig
{
    std::vector<TopologyKind> topologies{TopologyKind::kRN, TopologyKind::kBAN, TopologyKind::kTLN,
                                         TopologyKind::kSLN, TopologyKind::kHLN};
    std::size_t n_nodes{10000};
    std::size_t target_edges{50000};
    int lattice_rows{100};
    int lattice_cols{100};
    int interior_margin{0};  // 0: l0_max + 4
    EdgeDistribution distribution{EdgeDistribution::from_moments(0.97, 0.98, 0.99)};
    int l0_min{1};
    int l0_max{6};
    std::size_t n_sources{100};
    std::size_t n_dests{100};
    std::map<TopologyKind, PathBudget> k_paths{
        {TopologyKind::kRN, PathBudget::exactly(3)},  {TopologyKind::kBAN, PathBudget::exactly(3)},
        {TopologyKind::kTLN, PathBudget::every()},    {TopologyKind::kSLN, PathBudget::every()},
        {TopologyKind::kHLN, PathBudget::every()},
    };
    std::vector<Strategy> strategies{Strategy::spf()};
    std::uint64_t seed{1};
    int n_graph_realizations{1};
    kernels::FoldOptions fold{};

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// k column value: the lattice degree for "all" on lattices, 0 for "all" elsewhere.
int k_label(const ExperimentConfig& cfg, TopologyKind topology);

struct AggregateRow
{
    TopologyKind topology{TopologyKind::kRN};
    std::string strategy;
    int k{1};
    int l0{1};
    double mean_concurrence{0.0};
    double std_dev{0.0};
    std::size_t n_samples{0};
    std::uint64_t seed{0};

    friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct Shortfall
{
    TopologyKind topology;
    int realization;
    int l0;
    std::size_t requested;
    std::size_t achieved;
};

struct ExperimentResult
{
    std::vector<AggregateRow> rows;  // sorted by (topology, strategy, k, l0)
    std::vector<Shortfall> shortfalls;
};

/*
 * Runs the full protocol.  Output is a pure function of cfg: pairs are split
 * into fixed index ranges per worker and reduced in pair order, so `threads`
 * only changes wall time.  Throws on infeasible graph construction.
 * */
ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned threads = 1);

void sort_rows(std::vector<AggregateRow>& rows);

class CsvError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader = "topology,strategy,k,l0,mean_concurrence,std_dev,n_samples,seed";

void write_csv(std::ostream& out, std::span<const AggregateRow> rows);
std::vector<AggregateRow> read_csv(std::istream& in);

struct CurvePoint
{
    int l0;
    double mean;
};

/*
 * Smallest l0 from which the strategy mean stays >= the baseline mean for
 * every larger sampled l0; nullopt if the last point is still below.
 * Throws std::invalid_argument if the l0 grids differ.
 * */
std::optional<int> crossover_distance(std::span<const CurvePoint> strategy, std::span<const CurvePoint> baseline);

struct CurveKey
{
    TopologyKind topology;
    std::string strategy;
    int k;

    friend auto operator<=>(const CurveKey&, const CurveKey&) = default;
};

/// Rows grouped into curves ordered by l0.
std::map<CurveKey, std::vector<CurvePoint>> group_curves(std::span<const AggregateRow> rows);

}  // namespace mepnet
