#pragma once

// Minimal deterministic SVG line charts of experiment rows.

#include "mepnet/experiment.hpp"

#include <span>
#include <string>

namespace mepnet
{

struct ChartOptions
{
    int width{800};
    int height{500};
    std::string title{"Mean concurrence vs shortest-path distance"};
};

/*
 * One polyline per (topology, strategy, k) with point markers; BASELINE
 * series are dotted.  Throws std::invalid_argument on empty input.
 * */
std::string render_chart(std::span<const AggregateRow> rows, const ChartOptions& options = {});

}  // namespace mepnet
