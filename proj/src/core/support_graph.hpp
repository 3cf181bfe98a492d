#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/rat.hpp"

namespace wrac {

// Undirected weighted edge between box indices; kept with a < b.
struct Edge {
    int a, b;
    Rat p;
};

// Profit-weighted supporting graph over fixed-dimension boxes.
struct SupportGraph {
    std::vector<BoxDims> boxes;
    std::vector<Edge> edges;

    int n() const { return static_cast<int>(boxes.size()); }
    int m() const { return static_cast<int>(edges.size()); }
    int find(const std::string& id) const;
    bool has_edge(int u, int v) const;
    Rat total_profit() const;
    // Neighbor lists, ascending index order.
    std::vector<std::vector<int>> adjacency() const;
};

// Rotation system: clockwise neighbor order around every vertex.
struct Embedding {
    std::vector<std::vector<int>> rot;
};

// Faces as directed closed walks. With clockwise rotations, inner faces come
// out counterclockwise and the outer face clockwise.
struct Faces {
    std::vector<std::vector<int>> list;
};

// Sum of edge profits whose endpoint boxes are placed in rep and touch.
Rat realized_profit(const Representation& rep, const SupportGraph& g);

// Planarity test; on success returns a rotation system.
std::optional<Embedding> planar_embedding(const SupportGraph& g);
bool is_planar(const SupportGraph& g);

Faces trace_faces(const SupportGraph& g, const Embedding& emb);

// Greedy planar edge filter: edges visited by descending profit, ties broken
// on the lexicographic pair (min endpoint id, max endpoint id); an edge is
// kept when the kept set plus the edge stays planar. Vertices unchanged.
SupportGraph maximal_planar_subgraph(const SupportGraph& g);

// Quadrangular outer face on the four given distinct vertices, every inner
// face a triangle, and every 3-clique bounds a face.
bool is_quasi_triangulated(const SupportGraph& g, const Embedding& emb,
                           const std::vector<int>& outer);

// g plus zero-profit dummy edges until every face is a triangle (maximal
// planar for n >= 3). Input must be planar; disconnected input is first
// connected with dummy edges. dummy[e] marks added edges of the result.
struct Triangulated {
    SupportGraph g;
    Embedding emb;
    std::vector<bool> dummy;
};
Triangulated triangulate(const SupportGraph& g, const Embedding& emb);

}  // namespace wrac
