#pragma once

#include <string>
#include <vector>

#include "core/decompose.hpp"
#include "core/geometry.hpp"
#include "core/support_graph.hpp"

namespace wrac {

struct KnapsackItem {
    Rat size;   // > 0
    Rat value;  // >= 0
};

struct KnapsackInstance {
    std::vector<KnapsackItem> items;
    Rat capacity;
    bool strict = false;  // total size must stay strictly below the capacity
};

struct KnapsackResult {
    std::vector<int> chosen;  // ascending; lexicographically smallest among optima
    Rat value;
    bool exact;  // false when the item cap forced the greedy fallback
};

// Branch and bound on exact rationals; switches to dynamic programming when
// the sizes and capacity share a common denominator small enough for an
// integer table. Beyond item_cap items falls back to greedy by density.
KnapsackResult knapsack_exact(const KnapsackInstance& k, int item_cap = 64);

struct GapBin {
    Rat capacity;
    bool strict = false;
};

// Per-bin size and value of one item; vectors are indexed by bin. The trash
// bin is implicit: unassigned items sit there at value zero.
struct GapItem {
    std::vector<Rat> sizes, values;
};

struct GapInstance {
    std::vector<GapBin> bins;
    std::vector<GapItem> items;
};

struct GapAssignment {
    std::vector<int> bin_of;  // -1 = trash
    Rat value;
    bool exact;
};

// Bins solved in order with exact knapsack over residual values, so a later
// bin may steal an item from an earlier one. With exact knapsack the result
// is at least half of the optimal assignment value.
GapAssignment gap_sequential(const GapInstance& g, int item_cap = 64);

struct StarLeaf {
    BoxDims box;
    Rat profit;
};

// Center at the origin, assigned leaves flush along its four sides. For
// every corner the enumeration may privilege one leaf on one adjacent side
// to poke past the side's end at negligible contact length; poking frees the
// leaf from the side's capacity but makes the side's packing strict. Best
// arrangement over all corner choices wins; unassigned leaves are parked in
// a spaced column on the right. Profit is at least half the optimum star
// layout. Beyond corner_cap leaves only the top-profit ones may poke.
Representation star_approx(const BoxDims& center, const std::vector<StarLeaf>& leaves,
                           int corner_cap = 12);

struct StrategyReport {
    std::string strategy;
    Representation rep;
    Rat profit;           // realized profit, recomputed from rep
    Rat guarantee_denom;  // profit >= total profit / denom when denom > 0
    int pick = -1;        // index of the chosen forest or cycle collection
};

// Lays out every forest (stars via star_approx, uncovered boxes as
// singletons, parts composed disjointly) and reports the most profitable
// one. The forests must partition the graph's edges.
StrategyReport star_forest_approx(const SupportGraph& g, const std::vector<StarForest>& forests,
                                  int corner_cap = 12);

// Realizes every collection (cycles and paths via the chain constructors,
// parts composed disjointly) and reports the most profitable one. The
// collections must partition the graph's edges; the winner carries at least
// total profit / number of collections.
StrategyReport cycle_cover_approx(const SupportGraph& g,
                                  const std::vector<CycleCollection>& cover);

struct MaxWracOptions {
    std::string strategy = "auto";  // auto | star | starforest | cyclecover | extremal | disjoint
    int corner_cap = 12;
};

// Strategy dispatcher. Zero-profit edges are ignored for strategy selection
// (they cannot contribute), so adding one never changes the outcome; all
// profits are re-evaluated against the full graph.
StrategyReport max_wrac(const SupportGraph& g, const MaxWracOptions& opt = {});

// Exact optimum profit for tiny instances: exhausts contact/separation
// profiles over box pairs and checks each profile's two difference
// constraint systems, so the search is complete over all representations.
Rat brute_force_opt(const SupportGraph& g, int max_n = 5);

}  // namespace wrac
