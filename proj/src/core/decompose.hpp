#pragma once

#include <array>
#include <utility>
#include <vector>

#include "core/support_graph.hpp"

namespace wrac {

// Star: one center plus weighted leaf edges. Stars of a forest are pairwise
// vertex-disjoint.
struct Star {
    int center;
    std::vector<std::pair<int, Rat>> leaves;  // (leaf vertex, edge profit)
};
using StarForest = std::vector<Star>;

// Splits an acyclic graph's edges into two star forests: stars centered at
// even BFS depth vs odd BFS depth, each star owning the edges to its
// children. Throws std::invalid_argument when g has a cycle.
std::pair<StarForest, StarForest> tree_to_star_forests(const SupportGraph& g);

// Schnyder realizer of an embedded maximal planar graph (n >= 4): the inner
// edges split into three trees, each directed toward its root; roots are the
// three outer-face vertices. The three outer edges stay unassigned here.
struct Realizer {
    std::array<std::vector<std::pair<int, int>>, 3> edges;  // (child, parent)
    std::array<int, 3> roots;
};
Realizer schnyder_realizer(const SupportGraph& g, const Embedding& emb);

// Planar graph -> exactly 6 star forests partitioning the edges: triangulate,
// split into 3 trees via the realizer (outer edges joined to the trees of
// their roots), drop dummy edges, then split every tree into 2 star forests.
std::vector<StarForest> planar_to_star_forests(const SupportGraph& g);

// A set of vertex-disjoint cycles and paths; consecutive vertices are edges.
struct CycleCollection {
    std::vector<std::vector<int>> cycles;  // closed, last wraps to first
    std::vector<std::vector<int>> paths;   // open, >= 2 vertices
};

// Covers every edge exactly once across ceil(max(delta, max degree)/2)
// collections: pair odd vertices with dummy edges, orient along Eulerian
// circuits, edge-color the out/in bipartite graph, drop dummies.
std::vector<CycleCollection> cycle_cover(const SupportGraph& g, int delta);

}  // namespace wrac
