#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "core/diffcon.hpp"
#include "core/geometry.hpp"
#include "core/hierarchy.hpp"
#include "doctest.h"
#include "support/testgen.hpp"

using namespace wrac;
using wractest::brick_instance;
using wractest::BrickCase;

namespace {

void check_witness(const std::vector<Rat>& x, const std::vector<DiffConstraint>& cons) {
    for (const auto& r : cons) {
        Rat d = x[r.u] - x[r.v];
        if (r.strict)
            CHECK(d < r.c);
        else
            CHECK(d <= r.c);
    }
}

// The certificate must chain head-to-tail and sum below zero, or to exactly
// zero while using a strict constraint.
void check_cycle(const DiffSolution& sol, const std::vector<DiffConstraint>& cons) {
    REQUIRE(!sol.cycle.empty());
    Rat sum(0);
    long stricts = 0;
    for (size_t i = 0; i < sol.cycle.size(); ++i) {
        const auto& r = cons[sol.cycle[i]];
        const auto& next = cons[sol.cycle[(i + 1) % sol.cycle.size()]];
        CHECK(r.v == next.u);
        sum = sum + r.c;
        stricts += r.strict;
    }
    CHECK((sum < Rat(0) || (sum == Rat(0) && stricts > 0)));
}

// Transitive-closure feasibility oracle over (constant, strict) weights.
struct FwDist {
    bool inf = true;
    Rat a;
    long s = 0;
};

bool fw_less(const FwDist& p, const FwDist& q) {
    if (p.inf || q.inf) return !p.inf && q.inf;
    if (p.a != q.a) return p.a < q.a;
    return p.s > q.s;
}

bool closure_feasible(int n, const std::vector<DiffConstraint>& cons) {
    std::vector<std::vector<FwDist>> d(n, std::vector<FwDist>(n));
    for (int i = 0; i < n; ++i) d[i][i] = {false, Rat(0), 0};
    for (const auto& r : cons) {
        FwDist w{false, r.c, r.strict ? 1L : 0L};
        if (fw_less(w, d[r.v][r.u])) d[r.v][r.u] = w;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (d[i][k].inf || d[k][j].inf) continue;
                FwDist cand{false, d[i][k].a + d[k][j].a, d[i][k].s + d[k][j].s};
                if (fw_less(cand, d[i][j])) d[i][j] = cand;
            }
    for (int i = 0; i < n; ++i)
        if (d[i][i].a < Rat(0) || (d[i][i].a == Rat(0) && d[i][i].s > 0)) return false;
    return true;
}

HiInstance sandwich_instance() {
    // Narrow top box cannot reach both lower flanks across the wide middle.
    HiInstance in;
    in.boxes = {{"a", Rat(100), Rat(1)},
                {"b", Rat(10), Rat(1)},
                {"e", Rat(50), Rat(1)},
                {"c", Rat(10), Rat(1)},
                {"d", Rat(1), Rat(1)}};
    in.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    in.rot = {{1, 2, 3}, {0, 4}, {0, 4}, {0, 4}, {3, 2, 1}};
    return in;
}

HiInstance seam_instance() {
    // s covers e exactly, so s meets p and q only in a corner; the flanks are
    // reachable without the minimum-overlap margin but not with it.
    HiInstance in;
    in.boxes = {
        {"p", Rat(2), Rat(1)}, {"e", Rat(5), Rat(1)}, {"q", Rat(2), Rat(1)}, {"s", Rat(5), Rat(1)}};
    in.edges = {{0, 3}, {1, 3}, {2, 3}};
    in.rot = {{3}, {3}, {3}, {2, 1, 0}};
    return in;
}

void audit_drawing(const HiInstance& in, const Representation& rep) {
    REQUIRE(rep.boxes.size() == in.boxes.size());
    CHECK(overlap_free(rep));
    for (size_t i = 0; i < rep.boxes.size(); ++i) CHECK(rep.boxes[i].id == in.boxes[i].id);
    for (auto [a, b] : in.edges) {
        CHECK(rep.boxes[a].top() == rep.boxes[b].bottom());
        Rat lo = max(rep.boxes[a].left(), rep.boxes[b].left());
        Rat hi = min(rep.boxes[a].right(), rep.boxes[b].right());
        CHECK(lo < hi);
    }
}

void all_paths(const std::vector<RotBlocks>& blocks, int v, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    cur.push_back(v);
    if (blocks[v].outs.empty()) out.push_back(cur);
    for (int u : blocks[v].outs) all_paths(blocks, u, cur, out);
    cur.pop_back();
}

std::vector<int> out_positions(const std::vector<RotBlocks>& blocks, const std::vector<int>& path) {
    std::vector<int> key;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& outs = blocks[path[i]].outs;
        key.push_back(
            static_cast<int>(std::find(outs.begin(), outs.end(), path[i + 1]) - outs.begin()));
    }
    return key;
}

}  // namespace

TEST_CASE("difference constraints: witness satisfies strict and loose bounds") {
    std::vector<DiffConstraint> cons{
        {0, 1, Rat(3)}, {1, 2, Rat(-2), true}, {2, 0, Rat(0)}, {0, 2, Rat(2), true}};
    DiffSolution sol = solve_difference_constraints(3, cons);
    REQUIRE(sol.ok());
    check_witness(*sol.x, cons);
}

TEST_CASE("difference constraints: opposing bounds yield a chained negative cycle") {
    std::vector<DiffConstraint> cons{{0, 1, Rat(-5)}, {1, 0, Rat(3)}};
    DiffSolution sol = solve_difference_constraints(2, cons);
    REQUIRE(!sol.ok());
    check_cycle(sol, cons);
}

TEST_CASE("difference constraints: zero cycle is infeasible exactly when strict") {
    std::vector<DiffConstraint> strict{{0, 1, Rat(2), true}, {1, 0, Rat(-2)}};
    DiffSolution sol = solve_difference_constraints(2, strict);
    REQUIRE(!sol.ok());
    check_cycle(sol, strict);

    std::vector<DiffConstraint> loose{{0, 1, Rat(2)}, {1, 0, Rat(-2)}};
    sol = solve_difference_constraints(2, loose);
    REQUIRE(sol.ok());
    check_witness(*sol.x, loose);
    CHECK((*sol.x)[0] - (*sol.x)[1] == Rat(2));
}

TEST_CASE("difference constraints agree with a transitive closure oracle") {
    std::mt19937_64 rng(818283);
    for (int it = 0; it < 120; ++it) {
        int n = std::uniform_int_distribution<int>(2, 6)(rng);
        int m = std::uniform_int_distribution<int>(1, 10)(rng);
        std::vector<DiffConstraint> cons;
        for (int r = 0; r < m; ++r) {
            int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
            int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (u == v) continue;
            Rat c(std::uniform_int_distribution<int>(-4, 4)(rng));
            cons.push_back({u, v, c, std::uniform_int_distribution<int>(0, 3)(rng) == 0});
        }
        DiffSolution sol = solve_difference_constraints(n, cons);
        CHECK(sol.ok() == closure_feasible(n, cons));
        if (sol.ok())
            check_witness(*sol.x, cons);
        else
            check_cycle(sol, cons);
    }
}

TEST_CASE("orientation: a directed cycle is rejected") {
    HiInstance in;
    in.boxes = {{"a", Rat(1), Rat(1)}, {"b", Rat(1), Rat(1)}};
    in.edges = {{0, 1}, {1, 0}};
    in.rot = {{1, 1}, {0, 0}};
    auto bad = check_orientation(in);
    REQUIRE(bad.has_value());
    CHECK(bad->phase == "orientation");
    CHECK(bad->detail.find("cycle") != std::string::npos);
}

TEST_CASE("orientation: more than one sink is rejected") {
    HiInstance in;
    in.boxes = {{"a", Rat(1), Rat(1)}, {"b", Rat(1), Rat(1)}, {"c", Rat(1), Rat(1)}};
    in.edges = {{0, 1}, {0, 2}};
    in.rot = {{1, 2}, {0}, {0}};
    auto bad = check_orientation(in);
    REQUIRE(bad.has_value());
    CHECK(bad->phase == "orientation");
    CHECK(bad->detail.find("outgoing") != std::string::npos);
    CHECK(bad->vertex == 2);
}

TEST_CASE("orientation: interleaved incoming and outgoing edges are rejected") {
    HiInstance in;
    in.boxes = {{"p", Rat(1), Rat(1)}, {"q", Rat(1), Rat(1)}, {"x", Rat(4), Rat(1)},
                {"s", Rat(1), Rat(1)}, {"t", Rat(1), Rat(1)}, {"z", Rat(4), Rat(1)}};
    in.edges = {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    in.rot = {{2}, {2}, {0, 3, 1, 4}, {2, 5}, {2, 5}, {4, 3}};
    auto bad = check_orientation(in);
    REQUIRE(bad.has_value());
    CHECK(bad->phase == "orientation");
    CHECK(bad->vertex == 2);
    CHECK(bad->detail.find("interleave") != std::string::npos);

    in.rot[2] = {0, 1, 3, 4};
    CHECK(!check_orientation(in).has_value());
}

TEST_CASE("rotation blocks: ins lead regardless of the stored anchor") {
    HiInstance in;
    in.boxes = {{"p", Rat(1), Rat(1)}, {"q", Rat(1), Rat(1)}, {"x", Rat(4), Rat(1)},
                {"s", Rat(1), Rat(1)}, {"t", Rat(1), Rat(1)}, {"z", Rat(4), Rat(1)}};
    in.edges = {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    in.rot = {{2}, {2}, {0, 1, 3, 4}, {2, 5}, {2, 5}, {4, 3}};

    RotBlocks b = split_rotation(in, 2);
    CHECK(b.ins == std::vector<int>{0, 1});
    CHECK(b.outs == std::vector<int>{3, 4});

    in.rot[2] = {3, 4, 0, 1};
    b = split_rotation(in, 2);
    CHECK(b.ins == std::vector<int>{0, 1});
    CHECK(b.outs == std::vector<int>{3, 4});

    b = split_rotation(in, 5);
    CHECK(b.ins == std::vector<int>{4, 3});
    CHECK(b.outs.empty());
}

TEST_CASE("vertical: tail tops meet head bottoms along a chain") {
    HiInstance in;
    in.boxes = {{"c", Rat(1), Rat(1)}, {"b", Rat(1), Rat(2)}, {"a", Rat(1), Rat(4)}};
    in.edges = {{0, 1}, {1, 2}};
    in.rot = {{1}, {0, 2}, {1}};
    VerticalResult v = assign_vertical(in);
    REQUIRE(v.ok());
    CHECK(v.coords->low == std::vector<Rat>{Rat(0), Rat(1), Rat(3)});
    CHECK(v.coords->high == std::vector<Rat>{Rat(1), Rat(3), Rat(7)});
}

TEST_CASE("vertical: mismatched diamond heights conflict") {
    HiInstance in;
    in.boxes = {
        {"s", Rat(1), Rat(1)}, {"p", Rat(1), Rat(5)}, {"q", Rat(1), Rat(7)}, {"r", Rat(1), Rat(2)}};
    in.edges = {{1, 0}, {2, 0}, {3, 1}, {3, 2}};
    in.rot = {{1, 2}, {3, 0}, {3, 0}, {1, 2}};
    VerticalResult v = assign_vertical(in);
    REQUIRE(!v.ok());
    CHECK(v.conflict == 2);  // head of the violated edge
}

TEST_CASE("vertical: single box sits on the baseline") {
    HiInstance in;
    in.boxes = {{"a", Rat(3), Rat(4)}};
    in.rot = {{}};
    VerticalResult v = assign_vertical(in);
    REQUIRE(v.ok());
    CHECK(v.coords->low == std::vector<Rat>{Rat(0)});
    CHECK(v.coords->high == std::vector<Rat>{Rat(4)});
}

TEST_CASE("relation: tails of one sink follow the stored bottom order") {
    HiInstance in;
    in.boxes = {{"a", Rat(2), Rat(1)}, {"b", Rat(2), Rat(1)}, {"s", Rat(5), Rat(1)}};
    in.edges = {{0, 2}, {1, 2}};
    in.rot = {{2}, {2}, {1, 0}};  // clockwise: b is the rightmost bottom contact
    VerticalResult v = assign_vertical(in);
    REQUIRE(v.ok());
    auto rel = left_right_relation(in, *v.coords);
    CHECK(rel == std::vector<std::pair<int, int>>{{0, 1}});

    in.rot[2] = {0, 1};
    rel = left_right_relation(in, *v.coords);
    CHECK(rel == std::vector<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("relation: boxes along a directed path are never compared") {
    HiInstance in;
    in.boxes = {{"a", Rat(1), Rat(1)}, {"b", Rat(1), Rat(2)}, {"c", Rat(1), Rat(1)}};
    in.edges = {{0, 1}, {1, 2}};
    in.rot = {{1}, {0, 2}, {1}};
    VerticalResult v = assign_vertical(in);
    REQUIRE(v.ok());
    CHECK(left_right_relation(in, *v.coords).empty());
}

TEST_CASE("relation: derived order reproduces the generating layout") {
    std::mt19937_64 rng(909192);
    for (int it = 0; it < 30; ++it) {
        int rows = std::uniform_int_distribution<int>(2, 5)(rng);
        BrickCase c = brick_instance(rows, rng);
        VerticalResult v = assign_vertical(c.inst);
        REQUIRE(v.ok());
        auto rel = left_right_relation(c.inst, *v.coords);
        for (auto [a, b] : rel) CHECK(c.layout.boxes[a].right() <= c.layout.boxes[b].left());

        // Same-row bricks all overlap vertically, rows never do, so each
        // same-row pair must be ordered exactly once.
        size_t expect = 0;
        for (size_t i = 0; i < c.layout.boxes.size(); ++i)
            for (size_t j = i + 1; j < c.layout.boxes.size(); ++j)
                expect += c.layout.boxes[i].y == c.layout.boxes[j].y;
        CHECK(rel.size() == expect);
    }
}

TEST_CASE("relation: extreme paths match exhaustive enumeration") {
    std::mt19937_64 rng(929394);
    for (int it = 0; it < 10; ++it) {
        BrickCase c = brick_instance(std::uniform_int_distribution<int>(3, 4)(rng), rng);
        const int n = static_cast<int>(c.inst.boxes.size());
        std::vector<RotBlocks> blocks(n);
        for (int v = 0; v < n; ++v) blocks[v] = split_rotation(c.inst, v);
        for (int v = 0; v < n; ++v) {
            std::vector<std::vector<int>> paths;
            std::vector<int> cur;
            all_paths(blocks, v, cur, paths);
            auto cmp = [&](const std::vector<int>& p, const std::vector<int>& q) {
                return out_positions(blocks, p) < out_positions(blocks, q);
            };
            auto leftmost = *std::min_element(paths.begin(), paths.end(), cmp);
            auto rightmost = *std::max_element(paths.begin(), paths.end(), cmp);

            std::vector<int> walk_left{v}, walk_right{v};
            while (!blocks[walk_left.back()].outs.empty())
                walk_left.push_back(blocks[walk_left.back()].outs.front());
            while (!blocks[walk_right.back()].outs.empty())
                walk_right.push_back(blocks[walk_right.back()].outs.back());
            CHECK(walk_left == leftmost);
            CHECK(walk_right == rightmost);
        }
    }
}

TEST_CASE("pipeline: single box lands at the origin") {
    HiInstance in;
    in.boxes = {{"a", Rat(3), Rat(2)}};
    in.rot = {{}};
    HiResult res = hi_wrac(in);
    REQUIRE(res.ok());
    CHECK(res.rep->boxes[0].x == Rat(0));
    CHECK(res.rep->boxes[0].y == Rat(0));
}

TEST_CASE("pipeline: brick walls realize every edge with the head on top") {
    std::mt19937_64 rng(959697);
    for (int it = 0; it < 40; ++it) {
        int rows = std::uniform_int_distribution<int>(2, 5)(rng);
        BrickCase c = brick_instance(rows, rng);
        HiResult res = hi_wrac(c.inst);
        REQUIRE(res.ok());
        CHECK(!res.tightening_flipped);
        audit_drawing(c.inst, *res.rep);
    }
}

TEST_CASE("pipeline: narrow head over a wide spacer is infeasible with certificate") {
    HiInstance in = sandwich_instance();
    HiResult res = hi_wrac(in);
    REQUIRE(!res.ok());
    CHECK(res.infeasible.phase == "horizontal");
    CHECK(!res.tightening_flipped);
    REQUIRE(!res.infeasible.cycle.empty());
    Rat sum(0);
    for (size_t i = 0; i < res.infeasible.cycle.size(); ++i) {
        const auto& r = res.infeasible.cycle[i];
        const auto& next = res.infeasible.cycle[(i + 1) % res.infeasible.cycle.size()];
        CHECK(r.v == next.u);
        sum = sum + r.c;
    }
    CHECK(sum < Rat(0));
}

TEST_CASE("pipeline: exact seam cover flips feasibility under the margin") {
    HiInstance in = seam_instance();
    VerticalResult v = assign_vertical(in);
    REQUIRE(v.ok());
    CHECK(left_right_relation(in, *v.coords).size() == 3);

    HiResult res = hi_wrac(in);
    REQUIRE(!res.ok());
    CHECK(res.infeasible.phase == "horizontal");
    CHECK(res.tightening_flipped);
}

TEST_CASE("pipeline: earlier phases surface their own failures") {
    HiInstance cyc;
    cyc.boxes = {{"a", Rat(1), Rat(1)}, {"b", Rat(1), Rat(1)}};
    cyc.edges = {{0, 1}, {1, 0}};
    cyc.rot = {{1, 1}, {0, 0}};
    CHECK(hi_wrac(cyc).infeasible.phase == "orientation");

    HiInstance dia;
    dia.boxes = {
        {"s", Rat(1), Rat(1)}, {"p", Rat(1), Rat(5)}, {"q", Rat(1), Rat(7)}, {"r", Rat(1), Rat(2)}};
    dia.edges = {{1, 0}, {2, 0}, {3, 1}, {3, 2}};
    dia.rot = {{1, 2}, {3, 0}, {3, 0}, {1, 2}};
    HiResult res = hi_wrac(dia);
    CHECK(res.infeasible.phase == "vertical");
    CHECK(res.infeasible.vertex == 2);
}

TEST_CASE("pipeline: mutated walls fail in the matching phase") {
    std::mt19937_64 rng(979899);

    // Interleaving the rotation of a box with two ins and two outs.
    bool found = false;
    for (int it = 0; it < 50 && !found; ++it) {
        BrickCase c = brick_instance(4, rng);
        const int n = static_cast<int>(c.inst.boxes.size());
        for (int v = 0; v < n && !found; ++v) {
            RotBlocks b = split_rotation(c.inst, v);
            if (b.ins.size() < 2 || b.outs.size() < 2) continue;
            std::vector<int> rot{b.ins[0], b.outs[0], b.ins[1], b.outs[1]};
            rot.insert(rot.end(), b.ins.begin() + 2, b.ins.end());
            rot.insert(rot.end(), b.outs.begin() + 2, b.outs.end());
            c.inst.rot[v] = rot;
            HiResult res = hi_wrac(c.inst);
            REQUIRE(!res.ok());
            CHECK(res.infeasible.phase == "orientation");
            CHECK(res.infeasible.vertex == v);
            found = true;
        }
    }
    REQUIRE(found);

    // Two bricks with a shared tail and a shared head must have equal
    // heights; stretching one of them breaks the level equations.
    int stretched = 0;
    for (int it = 0; it < 50 && stretched < 10; ++it) {
        BrickCase c = brick_instance(std::uniform_int_distribution<int>(3, 5)(rng), rng);
        const int n = static_cast<int>(c.inst.boxes.size());
        std::vector<std::set<int>> tails(n), heads(n);
        for (auto [a, b] : c.inst.edges) {
            tails[b].insert(a);
            heads[a].insert(b);
        }
        int victim = -1;
        for (int x = 0; x < n && victim < 0; ++x)
            for (int y = x + 1; y < n && victim < 0; ++y) {
                auto shares = [](const std::set<int>& p, const std::set<int>& q) {
                    for (int e : p)
                        if (q.count(e)) return true;
                    return false;
                };
                if (shares(tails[x], tails[y]) && shares(heads[x], heads[y])) victim = x;
            }
        if (victim < 0) continue;
        c.inst.boxes[victim].h = c.inst.boxes[victim].h + Rat(1);
        HiResult res = hi_wrac(c.inst);
        REQUIRE(!res.ok());
        CHECK(res.infeasible.phase == "vertical");
        ++stretched;
    }
    REQUIRE(stretched == 10);
}

TEST_CASE("pipeline: scaling widths preserves the verdict") {
    std::mt19937_64 rng(101102);
    BrickCase c = brick_instance(3, rng);
    for (auto& b : c.inst.boxes) b.w = b.w * Rat(7);
    HiResult res = hi_wrac(c.inst);
    REQUIRE(res.ok());
    audit_drawing(c.inst, *res.rep);

    HiInstance seam = seam_instance();
    for (auto& b : seam.boxes) b.w = b.w * Rat(7);
    res = hi_wrac(seam);
    REQUIRE(!res.ok());
    CHECK(res.tightening_flipped);
}
