#pragma once

#include <array>
#include <utility>
#include <vector>

#include "core/support_graph.hpp"

namespace wrac {

// Partition instance: 3m positive integers with sum m*B, each strictly
// between B/4 and B/2, so every part of a solution has exactly 3 elements.
struct ThreePartitionInput {
    std::vector<long> s;
    long B = 0;
};

// Tree whose realizability decides the partition instance: a flat center row
// c, five big squares pinning its corners, item sticks v_i, separator sticks
// u_j with width gauges x_j, and B x B squares w_j hanging off the
// separators. All edge profits 1. Inputs with B <= (m-1)/2 are rescaled by an
// integer factor first; scaling changes the boxes, not feasibility.
// Input after the validation and integer rescale the generators apply.
ThreePartitionInput scaled_three_partition(const ThreePartitionInput& in);

SupportGraph gen_three_partition_tree(const ThreePartitionInput& in);

// Layout realizing the tree from a solved partition, given as m index triples
// into s that each sum to B and together cover every index exactly once.
Representation witness_three_partition(const ThreePartitionInput& in,
                                       const std::vector<std::array<int, 3>>& partition);

struct KnapsackReductionItem {
    Rat width, profit;
};

// Knapsack instance: item widths and profits, capacity, decision target.
struct KnapsackReductionInput {
    std::vector<KnapsackReductionItem> items;
    Rat capacity;
    Rat target;
};

// Profit-maximization star whose optimum is 5*sum(p) plus the knapsack
// optimum: center c of size C x 1, five C x C squares with edge profit
// sum(p) each, and one w_i x 1 leaf per item with edge profit p_i. target
// is the induced decision bound 5*sum(p) + P.
struct KnapsackStarResult {
    SupportGraph star;
    Rat target;
};
KnapsackStarResult gen_knapsack_star(const KnapsackReductionInput& in);

// Strip-packing instance: integer rectangles, strip width W, height bound H,
// and a precision parameter. epsilon is rounded down to a unit fraction so
// every derived constant stays rational and the connector count integral.
struct StripPackingInput {
    std::vector<std::pair<long, long>> rects;  // (width, height)
    long strip_width = 0;                      // W
    long height_bound = 0;                     // H
    Rat epsilon = Rat(1, 2);
};

// Bounded-area path instance over the stretched rectangles: every interior
// grid line of the strip gains thickness d = epsilon / max(W, H), and a run
// of k connector squares of side x precedes each rectangle. The constants
// satisfy k*x = 4(n+3)(H + 2nW) and n(k*x^2 + 2x) = d exactly.
struct StripPathResult {
    std::vector<BoxDims> rects;  // stretched, in path order
    Rat connector_side;          // x
    Rat connectors_per_run;      // k, an integer
    int runs;                    // n: one run before each rectangle
    Rat stretched_width;         // W'
    Rat stretched_height;        // H'
    Rat grid_gap;                // d
    Rat epsilon_used;            // the unit fraction actually applied
};
StripPathResult gen_strip_packing_path(const StripPackingInput& in);

// The path supporting graph with the connector runs written out box by box;
// throws when that takes more than max_boxes boxes. All edge profits 1.
SupportGraph materialize_strip_path(const StripPathResult& r, long max_boxes = 1000000);

// Maps an integer packing of the original rectangles (lower-left cells,
// inside W x H, overlap-free) through the fattened grid. The stretched
// rectangles land inside the W' x H' box with a gap >= d between any two.
Representation stretch_strip_packing(const StripPackingInput& in,
                                     const std::vector<std::pair<long, long>>& at);

// Squares with sides 2^1 .. 2^n, ids b1 .. bn.
std::vector<BoxDims> gen_exponential_squares(int n);

}  // namespace wrac
