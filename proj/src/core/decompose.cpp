#include "core/decompose.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wrac {

std::pair<StarForest, StarForest> tree_to_star_forests(const SupportGraph& g) {
    auto adj = g.adjacency();
    std::map<std::pair<int, int>, Rat> profit;
    for (const auto& e : g.edges) {
        if (!profit.emplace(std::pair<int, int>{e.a, e.b}, e.p).second)
            throw std::invalid_argument("tree_to_star_forests: duplicate edge");
    }
    std::vector<int> depth(g.n(), -1);
    std::vector<std::vector<int>> children(g.n());
    int visited_edges = 0;
    for (int root = 0; root < g.n(); ++root) {
        if (depth[root] != -1) continue;
        depth[root] = 0;
        std::deque<int> bfs{root};
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            for (int v : adj[u]) {
                if (depth[v] != -1) continue;
                depth[v] = depth[u] + 1;
                children[u].push_back(v);
                ++visited_edges;
                bfs.push_back(v);
            }
        }
    }
    if (visited_edges != g.m())
        throw std::invalid_argument("tree_to_star_forests: input has a cycle");

    std::pair<StarForest, StarForest> out;
    for (int u = 0; u < g.n(); ++u) {
        if (children[u].empty()) continue;
        Star s{u, {}};
        for (int v : children[u])
            s.leaves.push_back({v, profit.at({std::min(u, v), std::max(u, v)})});
        (depth[u] % 2 == 0 ? out.first : out.second).push_back(std::move(s));
    }
    return out;
}

namespace {

// Canonical ordering by contour peeling; per vertex also the ordered fan of
// contour neighbors it covered, from the v1 side to the v2 side.
struct Canonical {
    std::vector<int> order;  // order[k] for k = 1..n (1-based)
    std::vector<std::vector<int>> fan;
    int v1, v2, vn;
};

Canonical canonical_ordering(const SupportGraph& g, const Embedding& emb) {
    int n = g.n();
    Faces faces = trace_faces(g, emb);
    if (faces.list.empty() || faces.list[0].size() != 3)
        throw std::invalid_argument("canonical ordering: not a triangulation");
    int v1 = faces.list[0][0], v2 = faces.list[0][1], vn = faces.list[0][2];

    auto adj = g.adjacency();
    std::vector<int> contour{v1, vn, v2};
    std::vector<int> pos(n, -1);
    auto reindex = [&]() {
        std::fill(pos.begin(), pos.end(), -1);
        for (size_t i = 0; i < contour.size(); ++i) pos[contour[i]] = static_cast<int>(i);
    };
    reindex();

    std::vector<char> alive(n, 1);
    Canonical out;
    out.order.assign(n + 1, -1);
    out.fan.resize(n);
    out.v1 = v1;
    out.v2 = v2;
    out.vn = vn;
    out.order[1] = v1;
    out.order[2] = v2;

    for (int k = n; k >= 3; --k) {
        int chosen = -1;
        for (size_t i = 1; i + 1 < contour.size() && chosen == -1; ++i) {
            int u = contour[i];
            bool chord = false;
            for (int w : adj[u]) {
                if (!alive[w] || pos[w] == -1) continue;
                if (std::abs(pos[w] - static_cast<int>(i)) != 1) {
                    chord = true;
                    break;
                }
            }
            if (!chord) chosen = static_cast<int>(i);
        }
        if (chosen == -1) throw std::logic_error("canonical ordering: no removable vertex");
        int u = contour[chosen];
        int cl = contour[chosen - 1], cr = contour[chosen + 1];
        out.order[k] = u;

        // Fan: alive neighbors of u in rotation order, linearized cl .. cr.
        std::vector<int> ring;
        for (int w : emb.rot[u])
            if (alive[w]) ring.push_back(w);
        auto at = std::find(ring.begin(), ring.end(), cl);
        if (at == ring.end()) throw std::logic_error("canonical ordering: contour neighbor missing");
        std::rotate(ring.begin(), at, ring.end());
        if (ring.back() != cr) {
            std::reverse(ring.begin(), ring.end());
            std::rotate(ring.begin(), std::find(ring.begin(), ring.end(), cl), ring.end());
        }
        if (ring.front() != cl || ring.back() != cr)
            throw std::logic_error("canonical ordering: fan not contiguous");
        out.fan[u] = ring;

        alive[u] = 0;
        contour.erase(contour.begin() + chosen);
        contour.insert(contour.begin() + chosen, ring.begin() + 1, ring.end() - 1);
        reindex();
    }
    return out;
}

}  // namespace

Realizer schnyder_realizer(const SupportGraph& g, const Embedding& emb) {
    int n = g.n();
    if (n < 4) throw std::invalid_argument("schnyder_realizer: need at least 4 vertices");
    if (g.m() != 3 * n - 6) throw std::invalid_argument("schnyder_realizer: not maximal planar");
    Canonical c = canonical_ordering(g, emb);

    Realizer r;
    r.roots = {c.v1, c.v2, c.vn};
    for (int k = 3; k <= n; ++k) {
        int v = c.order[k];
        const auto& fan = c.fan[v];
        if (v != c.vn) {
            r.edges[0].push_back({v, fan.front()});
            r.edges[1].push_back({v, fan.back()});
        }
        for (size_t i = 1; i + 1 < fan.size(); ++i) r.edges[2].push_back({fan[i], v});
    }
    return r;
}

std::vector<StarForest> planar_to_star_forests(const SupportGraph& g) {
    std::map<std::pair<int, int>, Rat> profit;
    for (const auto& e : g.edges) profit[{e.a, e.b}] = e.p;

    std::vector<std::vector<std::pair<int, int>>> trees(3);
    if (g.n() >= 4 && g.m() > 0) {
        auto emb0 = planar_embedding(g);
        if (!emb0) throw std::invalid_argument("planar_to_star_forests: input not planar");
        Triangulated t = triangulate(g, *emb0);
        Realizer r = schnyder_realizer(t.g, t.emb);
        trees[0] = r.edges[0];
        trees[1] = r.edges[1];
        trees[2] = r.edges[2];
        // Outer edges join a tree rooted at one of their endpoints.
        trees[0].push_back({r.roots[1], r.roots[0]});  // v2 - v1
        trees[0].push_back({r.roots[2], r.roots[0]});  // vn - v1
        trees[1].push_back({r.roots[2], r.roots[1]});  // vn - v2
    } else {
        // Tiny graphs: edges at vertex 0 form one star, the rest the other.
        for (const auto& e : g.edges)
            (e.a == 0 ? trees[0] : trees[1]).push_back({e.b, e.a});
    }

    std::vector<StarForest> out;
    for (const auto& tree : trees) {
        SupportGraph tg;
        tg.boxes = g.boxes;
        for (auto [u, v] : tree) {
            auto it = profit.find({std::min(u, v), std::max(u, v)});
            if (it == profit.end()) continue;  // dummy edge from triangulation
            tg.edges.push_back({std::min(u, v), std::max(u, v), it->second});
        }
        auto [even, odd] = tree_to_star_forests(tg);
        out.push_back(std::move(even));
        out.push_back(std::move(odd));
    }
    while (out.size() < 6) out.push_back({});
    return out;
}

namespace {

struct MultiEdge {
    int u, v;
    bool real;
};

}  // namespace

std::vector<CycleCollection> cycle_cover(const SupportGraph& g, int delta) {
    auto adj = g.adjacency();
    int maxdeg = 0;
    for (const auto& row : adj) maxdeg = std::max(maxdeg, static_cast<int>(row.size()));
    int k = (std::max(delta, maxdeg) + 1) / 2;
    std::vector<CycleCollection> out(std::max(k, 0));
    if (g.m() == 0) return out;

    std::vector<MultiEdge> edges;
    for (const auto& e : g.edges) edges.push_back({e.a, e.b, true});
    std::vector<int> odd;
    for (int v = 0; v < g.n(); ++v)
        if (adj[v].size() % 2 == 1) odd.push_back(v);
    for (size_t i = 0; i + 1 < odd.size(); i += 2) edges.push_back({odd[i], odd[i + 1], false});

    // Eulerian circuit per component orients every edge; in = out = deg/2.
    int n = g.n();
    std::vector<std::vector<int>> inc(n);
    for (size_t e = 0; e < edges.size(); ++e) {
        inc[edges[e].u].push_back(static_cast<int>(e));
        inc[edges[e].v].push_back(static_cast<int>(e));
    }
    std::vector<char> used(edges.size(), 0);
    std::vector<std::tuple<int, int, bool>> directed;  // (tail, head, real)
    std::vector<size_t> it(n, 0);
    for (int s = 0; s < n; ++s) {
        if (inc[s].empty()) continue;
        std::vector<std::pair<int, int>> stack{{s, -1}};  // (vertex, incoming edge)
        while (!stack.empty()) {
            auto [v, via] = stack.back();
            bool advanced = false;
            while (it[v] < inc[v].size()) {
                int eid = inc[v][it[v]++];
                if (used[eid]) continue;
                used[eid] = 1;
                int w = edges[eid].u == v ? edges[eid].v : edges[eid].u;
                stack.push_back({w, eid});
                advanced = true;
                break;
            }
            if (!advanced) {
                stack.pop_back();
                if (via != -1) directed.push_back({stack.back().first, v, edges[via].real});
            }
        }
    }
    if (directed.size() != edges.size())
        throw std::logic_error("cycle_cover: orientation missed an edge");

    // Koenig edge coloring of the out/in bipartite multigraph with k colors.
    std::vector<std::vector<int>> colorL(n, std::vector<int>(k, -1));
    std::vector<std::vector<int>> colorR(n, std::vector<int>(k, -1));
    std::vector<int> color(directed.size(), -1);
    auto slot = [&](bool right, int v, int c) -> int& {
        return right ? colorR[v][c] : colorL[v][c];
    };
    // Frees c1 at vertex x (on the given side) by flipping the alternating
    // c1/c2 chain hanging off it. The chain is a path because its far end
    // misses one of the two colors.
    std::function<void(int, bool, int, int)> flip = [&](int x, bool right, int c1, int c2) {
        int eid = slot(right, x, c1);
        if (eid == -1) return;
        int lu = std::get<0>(directed[eid]), rv = std::get<1>(directed[eid]);
        int far = right ? lu : rv;
        flip(far, !right, c2, c1);
        if (colorL[lu][c1] == eid) colorL[lu][c1] = -1;
        if (colorR[rv][c1] == eid) colorR[rv][c1] = -1;
        colorL[lu][c2] = eid;
        colorR[rv][c2] = eid;
        color[eid] = c2;
    };
    auto free_color = [&](const std::vector<int>& slots) {
        for (int c = 0; c < k; ++c)
            if (slots[c] == -1) return c;
        throw std::logic_error("cycle_cover: no free color");
    };
    for (size_t e = 0; e < directed.size(); ++e) {
        int u = std::get<0>(directed[e]), v = std::get<1>(directed[e]);
        int a = free_color(colorL[u]);
        if (colorR[v][a] != -1) {
            int b = free_color(colorR[v]);
            flip(v, true, a, b);
        }
        color[e] = a;
        colorL[u][a] = static_cast<int>(e);
        colorR[v][a] = static_cast<int>(e);
    }

    // Each color class has in- and out-degree <= 1 per vertex: its components
    // are directed paths and cycles. Dummy edges are cut out afterwards.
    for (int c = 0; c < k; ++c) {
        std::vector<int> nxt(n, -1), prv(n, -1);
        std::vector<char> real_out(n, 0);
        for (size_t e = 0; e < directed.size(); ++e) {
            if (color[e] != c) continue;
            auto [u, v, real] = directed[e];
            nxt[u] = v;
            prv[v] = u;
            real_out[u] = real;
        }
        // Splits a linear vertex run at dummy edges, emitting real paths.
        auto emit_linear = [&](const std::vector<int>& run) {
            std::vector<int> cur{run[0]};
            for (size_t i = 0; i + 1 < run.size(); ++i) {
                if (real_out[run[i]]) {
                    cur.push_back(run[i + 1]);
                } else {
                    if (cur.size() >= 2) out[c].paths.push_back(cur);
                    cur = {run[i + 1]};
                }
            }
            if (cur.size() >= 2) out[c].paths.push_back(cur);
        };
        std::vector<char> seen(n, 0);
        for (int v = 0; v < n; ++v) {  // open runs
            if (prv[v] != -1 || nxt[v] == -1) continue;
            std::vector<int> run{v};
            for (int x = v; nxt[x] != -1; x = nxt[x]) run.push_back(nxt[x]);
            for (int x : run) seen[x] = 1;
            emit_linear(run);
        }
        for (int v = 0; v < n; ++v) {  // cycles
            if (seen[v] || nxt[v] == -1) continue;
            std::vector<int> cyc{v};
            for (int x = nxt[v]; x != v; x = nxt[x]) cyc.push_back(x);
            for (int x : cyc) seen[x] = 1;
            int cut = -1;
            for (size_t i = 0; i < cyc.size() && cut == -1; ++i)
                if (!real_out[cyc[i]]) cut = static_cast<int>(i);
            if (cut == -1) {
                out[c].cycles.push_back(cyc);
            } else {
                std::vector<int> run;
                for (size_t i = 0; i <= cyc.size(); ++i)
                    run.push_back(cyc[(cut + 1 + i) % cyc.size()]);
                run.pop_back();  // run now starts after the cut dummy edge
                emit_linear(run);
            }
        }
    }
    return out;
}

}  // namespace wrac
