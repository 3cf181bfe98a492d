#pragma once

#include "core/geometry.hpp"
#include "core/support_graph.hpp"

namespace wrac {

struct EvalReport {
    Rat profit;            // realized edge profit
    Rat total;             // profit sum over the whole graph
    Rat planar_total;      // profit sum over the greedy planar subgraph
    int contact_count;     // geometric contacts in the representation
    int realized_edges;    // edges whose endpoint boxes are placed and touch
    Rat percent_of_total;  // 100 * profit / total, 0 when total is 0
    Rat percent_of_planar;
};

// Scores a representation against its supporting graph.
EvalReport evaluate(const SupportGraph& g, const Representation& rep);

}  // namespace wrac
