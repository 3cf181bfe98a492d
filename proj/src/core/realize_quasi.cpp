#include "core/realize_quasi.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "core/constructive.hpp"

namespace wrac {

namespace {

bool is_outer(const std::vector<int>& outer, int v) {
    return std::find(outer.begin(), outer.end(), v) != outer.end();
}

// Unplaced inner vertex adjacent to both a and b; -1 when none. Adjacency
// lists are ascending, so ties (impossible on valid inputs) resolve to the
// smallest index.
int fitting_of(const Staircase& s, const std::vector<std::vector<int>>& adj, int a, int b) {
    for (int v : adj[a]) {
        if (s.done[v] || is_outer(s.outer, v)) continue;
        if (std::binary_search(adj[b].begin(), adj[b].end(), v)) return v;
    }
    return -1;
}

// Placed vertex whose box's right edge lies on x and covers heights just
// above y. Unique because placements are overlap-free.
int wall_vertex_at(const Staircase& s, const Rat& x, const Rat& y) {
    for (int v = 0; v < static_cast<int>(s.done.size()); ++v) {
        if (!s.done[v]) continue;
        const PlacedBox& b = s.boxes[v];
        if (b.right() == x && b.bottom() <= y && y < b.top()) return v;
    }
    return -1;
}

// Placed vertex whose box's top edge lies on y and covers widths just right
// of x.
int shelf_vertex_at(const Staircase& s, const Rat& x, const Rat& y) {
    for (int v = 0; v < static_cast<int>(s.done.size()); ++v) {
        if (!s.done[v]) continue;
        const PlacedBox& b = s.boxes[v];
        if (b.top() == y && b.left() <= x && x < b.right()) return v;
    }
    return -1;
}

std::vector<Concavity> frontier_with_fittings(const Staircase& s, const SupportGraph& g) {
    auto adj = g.adjacency();
    std::vector<Concavity> out = s.frontier;
    for (Concavity& c : out) c.fitting = fitting_of(s, adj, c.above, c.below);
    return out;
}

// One-dimensional feasible set: an optional pinned value plus strict lower
// and upper bounds.
struct Range1 {
    std::optional<Rat> pin, lo, hi;
    bool dead = false;

    void pin_to(const Rat& v) {
        if (pin && *pin != v) dead = true;
        pin = v;
    }
    void above(const Rat& v) {
        if (!lo || v > *lo) lo = v;
    }
    void below(const Rat& v) {
        if (!hi || v < *hi) hi = v;
    }
    bool ok() const {
        if (dead) return false;
        if (pin) return (!lo || *pin > *lo) && (!hi || *pin < *hi);
        return !lo || !hi || *lo < *hi;
    }
    Rat value() const {
        if (pin) return *pin;
        if (lo && hi) return (*lo + *hi) / 2;
        if (lo) return *lo + 1;
        if (hi) return *hi - 1;
        return Rat(0);
    }
};

// No inner vertices: outer quadrilateral plus one chord. A two-row brick
// (bottom row a b, top row c d spanning the seam) realizes exactly the five
// needed contacts; roles are picked so the chord maps onto the brick's
// diagonal-free pair c-b.
QuasiResult place_outer_brick(const SupportGraph& g, const std::vector<int>& outer) {
    int vn = outer[0], ve = outer[1], vs = outer[2], vw = outer[3];
    int a, b, c, d;
    if (g.has_edge(vn, vs)) {
        a = ve, b = vs, c = vn, d = vw;
    } else {
        a = vn, b = vw, c = ve, d = vs;
    }
    Representation brick = extremal_small({g.boxes[a], g.boxes[b], g.boxes[c], g.boxes[d]});
    QuasiResult r;
    Representation rep;
    for (const BoxDims& box : g.boxes) rep.boxes.push_back(brick.boxes[brick.find(box.id)]);
    r.rep = std::move(rep);
    return r;
}

}  // namespace

Staircase staircase_begin(const SupportGraph& g, const std::vector<int>& outer) {
    if (outer.size() != 4) throw std::invalid_argument("outer cycle must list four vertices");
    for (int v : outer)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("outer vertex out of range");
    Staircase s;
    s.outer = outer;
    s.done.assign(g.n(), 0);
    s.boxes.assign(g.n(), PlacedBox{});
    Rat big(1);
    for (const BoxDims& b : g.boxes) big += b.w + b.h;
    s.big = big;
    int vs = outer[2], vw = outer[3];
    s.boxes[vw] = PlacedBox{g.boxes[vw].id, big, big, -big, Rat(0)};
    s.boxes[vs] = PlacedBox{g.boxes[vs].id, big, big, Rat(0), -big};
    s.done[vw] = s.done[vs] = 1;
    s.frontier.push_back({Rat(0), Rat(0), vw, vs, -1});
    return s;
}

std::vector<std::pair<int, Concavity>> applicable_vertices(const Staircase& s,
                                                           const SupportGraph& g) {
    auto adj = g.adjacency();
    std::vector<std::pair<int, Concavity>> out;
    for (std::size_t k = 0; k < s.frontier.size(); ++k) {
        Concavity c = s.frontier[k];
        c.fitting = fitting_of(s, adj, c.above, c.below);
        if (c.fitting == -1) continue;
        Rat stack_top = k == 0 ? s.big : s.frontier[k - 1].y;
        Rat shelf_right = k + 1 == s.frontier.size() ? s.big : s.frontier[k + 1].x;
        const BoxDims& d = g.boxes[c.fitting];
        if (c.y + d.h <= stack_top && c.x + d.w <= shelf_right) out.emplace_back(c.fitting, c);
    }
    return out;
}

void staircase_place(Staircase& s, int vertex, const Concavity& c, const SupportGraph& g) {
    std::size_t k = 0;
    while (k < s.frontier.size() && !(s.frontier[k].x == c.x && s.frontier[k].y == c.y)) ++k;
    if (k == s.frontier.size()) throw std::invalid_argument("concavity is not on the frontier");
    if (vertex < 0 || vertex >= g.n() || s.done[vertex] || is_outer(s.outer, vertex))
        throw std::invalid_argument("vertex cannot be placed");
    Rat stack_top = k == 0 ? s.big : s.frontier[k - 1].y;
    Rat shelf_right = k + 1 == s.frontier.size() ? s.big : s.frontier[k + 1].x;
    const BoxDims& d = g.boxes[vertex];
    Rat top = c.y + d.h, right = c.x + d.w;
    if (top > stack_top || right > shelf_right)
        throw std::invalid_argument("box does not fit the concavity");
    s.boxes[vertex] = PlacedBox{d.id, d.w, d.h, c.x, c.y};
    s.done[vertex] = 1;
    std::vector<Concavity> repl;
    if (top < stack_top) repl.push_back({c.x, top, wall_vertex_at(s, c.x, top), vertex, -1});
    if (right < shelf_right)
        repl.push_back({right, c.y, vertex, shelf_vertex_at(s, right, c.y), -1});
    s.frontier.erase(s.frontier.begin() + static_cast<std::ptrdiff_t>(k));
    s.frontier.insert(s.frontier.begin() + static_cast<std::ptrdiff_t>(k), repl.begin(),
                      repl.end());
}

QuasiResult assemble_frame(const Staircase& s, const SupportGraph& g) {
    int vn = s.outer[0], ve = s.outer[1], vs = s.outer[2], vw = s.outer[3];
    auto fail = [&](const std::string& step, const std::string& detail) {
        QuasiResult r;
        r.infeasible = QuasiInfeasible{step, detail, frontier_with_fittings(s, g)};
        return r;
    };
    for (int v = 0; v < g.n(); ++v)
        if (!s.done[v] && !is_outer(s.outer, v)) return fail("staircase", "no applicable vertex");
    if (s.frontier.size() != 2 || s.frontier[0].x != Rat(0) || s.frontier[1].y != Rat(0))
        return fail("frame", "inner region is not a rectangle");
    Rat rw = s.frontier[1].x, rh = s.frontier[0].y;
    Rat wn = g.boxes[vn].w, hn = g.boxes[vn].h;
    Rat we = g.boxes[ve].w, he = g.boxes[ve].h;
    Rat ws = g.boxes[vs].w, hs = g.boxes[vs].h;
    Rat ww = g.boxes[vw].w, hw = g.boxes[vw].h;

    // Base intervals: each outer box must overlap every inner neighbor's span
    // on its side of the rectangle, and those neighbors must already be flush
    // with that side.
    Range1 nx0, ey0, sx0, wy0;
    auto adj = g.adjacency();
    for (int u : adj[vn]) {
        if (is_outer(s.outer, u)) continue;
        const PlacedBox& b = s.boxes[u];
        if (b.top() != rh) return fail("frame", "an inner neighbor misses the top side");
        nx0.above(b.left() - wn);
        nx0.below(b.right());
    }
    for (int u : adj[ve]) {
        if (is_outer(s.outer, u)) continue;
        const PlacedBox& b = s.boxes[u];
        if (b.right() != rw) return fail("frame", "an inner neighbor misses the right side");
        ey0.above(b.bottom() - he);
        ey0.below(b.top());
    }
    for (int u : adj[vs]) {
        if (is_outer(s.outer, u)) continue;
        const PlacedBox& b = s.boxes[u];
        if (b.bottom() != Rat(0)) return fail("frame", "an inner neighbor misses the bottom side");
        sx0.above(b.left() - ws);
        sx0.below(b.right());
    }
    for (int u : adj[vw]) {
        if (is_outer(s.outer, u)) continue;
        const PlacedBox& b = s.boxes[u];
        if (b.left() != Rat(0)) return fail("frame", "an inner neighbor misses the left side");
        wy0.above(b.bottom() - hw);
        wy0.below(b.top());
    }

    // At every corner of the rectangle exactly one of the two meeting outer
    // boxes sticks out past it while the other ends flush, which yields the
    // corner contact. Sixteen sign patterns; each fixes or bounds one
    // coordinate per box, so feasibility separates per coordinate.
    for (int mask = 0; mask < 16; ++mask) {
        Range1 nx = nx0, ey = ey0, sx = sx0, wy = wy0;
        if (mask & 1) {  // east sticks up past the top-right corner
            nx.pin_to(rw - wn);
            ey.above(rh - he);
        } else {  // north sticks right
            nx.above(rw - wn);
            ey.pin_to(rh - he);
        }
        if (mask & 2) {  // east sticks down past the bottom-right corner
            ey.below(Rat(0));
            sx.pin_to(rw - ws);
        } else {  // south sticks right
            ey.pin_to(Rat(0));
            sx.above(rw - ws);
        }
        if (mask & 4) {  // west sticks down past the bottom-left corner
            wy.below(Rat(0));
            sx.pin_to(Rat(0));
        } else {  // south sticks left
            wy.pin_to(Rat(0));
            sx.below(Rat(0));
        }
        if (mask & 8) {  // west sticks up past the top-left corner
            wy.above(rh - hw);
            nx.pin_to(Rat(0));
        } else {  // north sticks left
            wy.pin_to(rh - hw);
            nx.below(Rat(0));
        }
        if (!nx.ok() || !ey.ok() || !sx.ok() || !wy.ok()) continue;
        Representation rep;
        rep.boxes.reserve(g.boxes.size());
        for (int v = 0; v < g.n(); ++v) {
            if (v == vn)
                rep.boxes.push_back({g.boxes[v].id, wn, hn, nx.value(), rh});
            else if (v == ve)
                rep.boxes.push_back({g.boxes[v].id, we, he, rw, ey.value()});
            else if (v == vs)
                rep.boxes.push_back({g.boxes[v].id, ws, hs, sx.value(), -hs});
            else if (v == vw)
                rep.boxes.push_back({g.boxes[v].id, ww, hw, -ww, wy.value()});
            else
                rep.boxes.push_back(s.boxes[v]);
        }
        QuasiResult r;
        r.rep = std::move(rep);
        return r;
    }
    return fail("frame", "no outer box arrangement fits the inner rectangle");
}

QuasiResult realize_quasi_triangulated(const SupportGraph& g, const Embedding& emb,
                                       const std::vector<int>& outer,
                                       std::vector<QuasiStep>* trace) {
    if (!is_quasi_triangulated(g, emb, outer))
        throw std::invalid_argument("graph is not quasi-triangulated on the given outer cycle");
    if (g.n() == 4) return place_outer_brick(g, outer);
    Staircase s = staircase_begin(g, outer);
    while (true) {
        auto apps = applicable_vertices(s, g);
        if (apps.empty()) break;
        if (trace) trace->push_back({apps.front().first, apps.front().second.x,
                                     apps.front().second.y});
        staircase_place(s, apps.front().first, apps.front().second, g);
    }
    return assemble_frame(s, g);
}

}  // namespace wrac
