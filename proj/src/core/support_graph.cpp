#include "core/support_graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace wrac {

int SupportGraph::find(const std::string& id) const {
    for (size_t k = 0; k < boxes.size(); ++k)
        if (boxes[k].id == id) return static_cast<int>(k);
    return -1;
}

bool SupportGraph::has_edge(int u, int v) const {
    for (const auto& e : edges)
        if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) return true;
    return false;
}

Rat SupportGraph::total_profit() const {
    Rat s(0);
    for (const auto& e : edges) s += e.p;
    return s;
}

std::vector<std::vector<int>> SupportGraph::adjacency() const {
    std::vector<std::vector<int>> adj(boxes.size());
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

Rat realized_profit(const Representation& rep, const SupportGraph& g) {
    std::unordered_map<std::string, int> where;
    for (size_t k = 0; k < rep.boxes.size(); ++k) where.emplace(rep.boxes[k].id, k);
    Rat s(0);
    for (const auto& e : g.edges) {
        auto ia = where.find(g.boxes[e.a].id);
        auto ib = where.find(g.boxes[e.b].id);
        if (ia == where.end() || ib == where.end()) continue;
        if (boxes_touch(rep.boxes[ia->second], rep.boxes[ib->second])) s += e.p;
    }
    return s;
}

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

BGraph to_boost(int n, const std::vector<Edge>& edges) {
    BGraph bg(n);
    for (const auto& e : edges) boost::add_edge(e.a, e.b, bg);
    return bg;
}

bool boost_planar(int n, const std::vector<Edge>& edges) {
    BGraph bg = to_boost(n, edges);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

std::optional<Embedding> planar_embedding(const SupportGraph& g) {
    BGraph bg = to_boost(g.n(), g.edges);
    using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> storage(g.n());
    if (!boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = bg,
            boost::boyer_myrvold_params::embedding = storage.data()))
        return std::nullopt;
    Embedding emb;
    emb.rot.resize(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (const auto& e : storage[u])
            emb.rot[u].push_back(static_cast<int>(
                boost::source(e, bg) == static_cast<size_t>(u) ? boost::target(e, bg)
                                                               : boost::source(e, bg)));
    return emb;
}

bool is_planar(const SupportGraph& g) { return boost_planar(g.n(), g.edges); }

Faces trace_faces(const SupportGraph& g, const Embedding& emb) {
    int n = g.n();
    std::vector<std::unordered_map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (size_t k = 0; k < emb.rot[v].size(); ++k) pos[v][emb.rot[v][k]] = static_cast<int>(k);

    Faces out;
    std::vector<std::vector<char>> used(n);
    for (int v = 0; v < n; ++v) used[v].assign(emb.rot[v].size(), 0);
    for (int s = 0; s < n; ++s)
        for (size_t k0 = 0; k0 < emb.rot[s].size(); ++k0) {
            if (used[s][k0]) continue;
            std::vector<int> face;
            int u = s, k = static_cast<int>(k0);
            while (!used[u][k]) {
                used[u][k] = 1;
                face.push_back(u);
                int v = emb.rot[u][k];
                int kn = (pos[v][u] + 1) % static_cast<int>(emb.rot[v].size());
                u = v;
                k = kn;
            }
            out.list.push_back(std::move(face));
        }
    return out;
}

SupportGraph maximal_planar_subgraph(const SupportGraph& g) {
    std::vector<int> order(g.edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto key = [&](int i) {
        const Edge& e = g.edges[i];
        const std::string& ia = g.boxes[e.a].id;
        const std::string& ib = g.boxes[e.b].id;
        return std::pair<std::string, std::string>(std::min(ia, ib), std::max(ia, ib));
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (g.edges[i].p != g.edges[j].p) return g.edges[j].p < g.edges[i].p;
        return key(i) < key(j);
    });
    SupportGraph out;
    out.boxes = g.boxes;
    for (int i : order) {
        out.edges.push_back(g.edges[i]);
        if (!boost_planar(out.n(), out.edges)) out.edges.pop_back();
    }
    return out;
}

namespace {

bool connected(const SupportGraph& g) {
    if (g.n() == 0) return true;
    auto adj = g.adjacency();
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == g.n();
}

}  // namespace

bool is_quasi_triangulated(const SupportGraph& g, const Embedding& emb,
                           const std::vector<int>& outer) {
    if (g.n() < 4 || outer.size() != 4) return false;
    std::set<int> oset(outer.begin(), outer.end());
    if (oset.size() != 4) return false;
    for (int v : outer)
        if (v < 0 || v >= g.n()) return false;
    if (!connected(g)) return false;

    Faces faces = trace_faces(g, emb);
    int quad = -1;
    std::set<std::array<int, 3>> triangles;
    for (size_t f = 0; f < faces.list.size(); ++f) {
        const auto& walk = faces.list[f];
        std::set<int> vs(walk.begin(), walk.end());
        if (walk.size() == 4 && vs == oset && quad == -1) {
            quad = static_cast<int>(f);
            continue;
        }
        if (walk.size() != 3 || vs.size() != 3) return false;
        std::array<int, 3> t{walk[0], walk[1], walk[2]};
        std::sort(t.begin(), t.end());
        triangles.insert(t);
    }
    if (quad == -1) return false;

    // Euler audit: connected planar embedding satisfies n - m + f = 2.
    if (g.n() - g.m() + static_cast<int>(faces.list.size()) != 2) return false;

    // Every 3-clique must bound a face (no separating triangles).
    auto adj = g.adjacency();
    for (const auto& e : g.edges) {
        std::vector<int> common;
        std::set_intersection(adj[e.a].begin(), adj[e.a].end(), adj[e.b].begin(), adj[e.b].end(),
                              std::back_inserter(common));
        for (int c : common) {
            std::array<int, 3> t{e.a, e.b, c};
            std::sort(t.begin(), t.end());
            if (!triangles.count(t)) return false;
        }
    }
    return true;
}

Triangulated triangulate(const SupportGraph& g, const Embedding& emb) {
    Triangulated t;
    t.g = g;
    t.emb = emb;
    t.dummy.assign(g.edges.size(), false);

    std::set<std::pair<int, int>> have;
    for (const auto& e : t.g.edges) have.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
    auto add_edge = [&](int u, int v) {
        t.g.edges.push_back({std::min(u, v), std::max(u, v), Rat(0)});
        t.dummy.push_back(true);
        have.insert({std::min(u, v), std::max(u, v)});
    };
    auto adjacent = [&](int u, int v) {
        return have.count({std::min(u, v), std::max(u, v)}) > 0;
    };
    auto reembed = [&]() {
        auto e = planar_embedding(t.g);
        if (!e) throw std::logic_error("triangulate: augmented graph not planar");
        t.emb = std::move(e.value());
    };

    if (!connected(t.g)) {
        auto adj = t.g.adjacency();
        std::vector<int> comp(t.g.n(), -1);
        int nc = 0;
        for (int s = 0; s < t.g.n(); ++s) {
            if (comp[s] != -1) continue;
            comp[s] = nc;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : adj[u])
                    if (comp[v] == -1) {
                        comp[v] = nc;
                        stack.push_back(v);
                    }
            }
            ++nc;
        }
        std::vector<int> rep(nc, -1);
        for (int v = 0; v < t.g.n(); ++v)
            if (rep[comp[v]] == -1) rep[comp[v]] = v;
        for (int c = 1; c < nc; ++c) add_edge(rep[0], rep[c]);
        reembed();
    }

    while (true) {
        Faces faces = trace_faces(t.g, t.emb);
        bool progressed = false;
        for (const auto& walk : faces.list) {
            int len = static_cast<int>(walk.size());
            if (len <= 3) continue;
            std::set<int> vs(walk.begin(), walk.end());
            if (static_cast<int>(vs.size()) == len) {
                // Simple cycle: ear a corner whose short chord is absent.
                for (int i = 0; i < len && !progressed; ++i) {
                    int x = walk[(i - 1 + len) % len], via = walk[i], y = walk[(i + 1) % len];
                    if (adjacent(x, y)) continue;
                    add_edge(x, y);
                    // Triangle (x, via, y) splits off: rot[y] gains x right
                    // after via, rot[x] gains y right before via.
                    auto& ry = t.emb.rot[y];
                    ry.insert(ry.begin() +
                                  (std::find(ry.begin(), ry.end(), via) - ry.begin()) + 1,
                              x);
                    auto& rx = t.emb.rot[x];
                    rx.insert(rx.begin() + (std::find(rx.begin(), rx.end(), via) - rx.begin()),
                              y);
                    progressed = true;
                }
                if (progressed) break;
            }
            // Defective walk or fully chorded corners: any non-adjacent pair.
            for (int i = 0; i < len && !progressed; ++i)
                for (int j = i + 1; j < len && !progressed; ++j) {
                    if (walk[i] == walk[j] || adjacent(walk[i], walk[j])) continue;
                    add_edge(walk[i], walk[j]);
                    reembed();
                    progressed = true;
                }
            if (progressed) break;
        }
        if (!progressed) break;
    }
    return t;
}

}  // namespace wrac
