#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "core/constructive.hpp"
#include "core/generators.hpp"
#include "core/optimize.hpp"
#include "doctest.h"
#include "support/testgen.hpp"

using namespace wrac;

namespace {

bool connected(const SupportGraph& g) {
    if (g.n() == 0) return true;
    const auto adj = g.adjacency();
    std::vector<bool> seen(g.n(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == g.n();
}

// Random feasible instance: m triples summing to B = 24, flattened in
// shuffled order; triples reports the index groups after the shuffle.
ThreePartitionInput random_partition_instance(std::mt19937_64& rng, int m,
                                              std::vector<std::array<int, 3>>& triples) {
    const long B = 24;
    std::vector<std::pair<long, int>> flat;  // (value, triple id)
    std::uniform_int_distribution<long> part(7, 11);
    for (int t = 0; t < m; ++t) {
        long a, b, c;
        do {
            a = part(rng);
            b = part(rng);
            c = B - a - b;
        } while (c < 7 || c > 11);
        flat.push_back({a, t});
        flat.push_back({b, t});
        flat.push_back({c, t});
    }
    std::shuffle(flat.begin(), flat.end(), rng);

    ThreePartitionInput in;
    in.B = B;
    triples.assign(m, {-1, -1, -1});
    std::vector<int> filled(m, 0);
    for (int i = 0; i < 3 * m; ++i) {
        in.s.push_back(flat[i].first);
        triples[flat[i].second][filled[flat[i].second]++] = i;
    }
    return in;
}

void audit_partition_witness(const ThreePartitionInput& in,
                             const std::vector<std::array<int, 3>>& triples) {
    const SupportGraph g = gen_three_partition_tree(in);
    const Representation rep = witness_three_partition(in, triples);
    REQUIRE(rep.boxes.size() == g.boxes.size());
    CHECK(overlap_free(rep));
    CHECK(realized_profit(rep, g) == g.total_profit());
}

// Exhaustive best profit of an item subset whose widths fit the capacity.
Rat knapsack_subset_opt(const KnapsackReductionInput& in) {
    const int n = static_cast<int>(in.items.size());
    Rat best(0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Rat width(0), profit(0);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                width += in.items[i].width;
                profit += in.items[i].profit;
            }
        if (width <= in.capacity && profit > best) best = profit;
    }
    return best;
}

}  // namespace

TEST_CASE("partition tree reproduces the worked dimensions") {
    const ThreePartitionInput in{{6, 7, 7, 6, 7, 7}, 20};
    const SupportGraph g = gen_three_partition_tree(in);

    REQUIRE(g.n() == 16);  // 2n + 4 for n = 6
    CHECK(g.m() == 15);
    CHECK(connected(g));

    const auto box = [&](const std::string& id) {
        const int i = g.find(id);
        REQUIRE(i >= 0);
        return g.boxes[i];
    };
    CHECK(box("c").w == Rat(41));
    CHECK(box("c").h == Rat(1));
    CHECK(box("a1").w == Rat(41));
    CHECK(box("a1").h == Rat(41));
    CHECK(box("u1").w == Rat(1));
    CHECK(box("u1").h == Rat(21));
    CHECK(box("x1").w == Rat(41));
    CHECK(box("x1").h == Rat(1));
    CHECK(box("w1").w == Rat(20));
    CHECK(box("w1").h == Rat(20));
    CHECK(box("v1").w == Rat(6));
    CHECK(box("v1").h == Rat(1));

    // The center is adjacent to everything except the w's and x's.
    const int c = g.find("c");
    for (const auto& b : g.boxes) {
        const bool expect = b.id != "c" && b.id[0] != 'w' && b.id[0] != 'x';
        CHECK(g.has_edge(c, g.find(b.id)) == expect);
    }
    CHECK(g.has_edge(g.find("u1"), g.find("w1")));
    CHECK(g.has_edge(g.find("u1"), g.find("w2")));
    CHECK(g.has_edge(g.find("u1"), g.find("x1")));
}

TEST_CASE("partition tree is a tree whose item and separator widths fill the center") {
    std::mt19937_64 rng(61);
    for (int m : {1, 2, 3, 5}) {
        std::vector<std::array<int, 3>> triples;
        const ThreePartitionInput in = random_partition_instance(rng, m, triples);
        const SupportGraph g = gen_three_partition_tree(in);
        const int n = 3 * m;
        CHECK(g.n() == 2 * n + 4);
        CHECK(g.m() == g.n() - 1);
        CHECK(connected(g));

        Rat widths(0);
        for (const auto& b : g.boxes)
            if (b.id[0] == 'v' || b.id[0] == 'u') widths += b.w;
        CHECK(widths == g.boxes[g.find("c")].w);
    }
}

TEST_CASE("partition tree rescales until B clears half of m - 1") {
    // B = 3 with m = 7 violates B > (m-1)/2; the doubled instance does not.
    ThreePartitionInput in;
    in.B = 3;
    in.s.assign(21, 1);
    const SupportGraph g = gen_three_partition_tree(in);
    CHECK(g.boxes[g.find("v1")].w == Rat(2));
    CHECK(g.boxes[g.find("u1")].h == Rat(7));
    CHECK(g.boxes[g.find("c")].w == Rat(48));

    std::vector<std::array<int, 3>> triples;
    for (int t = 0; t < 7; ++t) triples.push_back({3 * t, 3 * t + 1, 3 * t + 2});
    audit_partition_witness(in, triples);
}

TEST_CASE("partition witness realizes every tree edge without overlap") {
    audit_partition_witness({{6, 7, 7, 6, 7, 7}, 20}, {{{0, 1, 2}}, {{3, 4, 5}}});

    std::mt19937_64 rng(62);
    for (int m : {1, 2, 3, 4, 6}) {
        std::vector<std::array<int, 3>> triples;
        const ThreePartitionInput in = random_partition_instance(rng, m, triples);
        audit_partition_witness(in, triples);
    }
}

TEST_CASE("partition generator and witness reject malformed input") {
    CHECK_THROWS_AS(gen_three_partition_tree({{}, 20}), std::invalid_argument);
    CHECK_THROWS_AS(gen_three_partition_tree({{6, 7}, 20}), std::invalid_argument);
    CHECK_THROWS_AS(gen_three_partition_tree({{6, 7, 6}, 20}), std::invalid_argument);
    CHECK_THROWS_AS(gen_three_partition_tree({{5, 7, 8}, 20}), std::invalid_argument);
    CHECK_THROWS_AS(gen_three_partition_tree({{10, 4, 6}, 20}), std::invalid_argument);
    CHECK_THROWS_AS(gen_three_partition_tree({{6, 7, 7}, 0}), std::invalid_argument);

    const ThreePartitionInput ok{{6, 7, 7, 6, 7, 7}, 20};
    CHECK_THROWS_AS(witness_three_partition(ok, {{{0, 1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(witness_three_partition(ok, {{{0, 1, 3}}, {{2, 4, 5}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(witness_three_partition(ok, {{{0, 1, 2}}, {{3, 4, 4}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(witness_three_partition(ok, {{{0, 1, 2}}, {{3, 4, 6}}}),
                    std::invalid_argument);
}

TEST_CASE("knapsack star reproduces the worked instance") {
    KnapsackReductionInput in;
    in.items = {{Rat(2), Rat(3)}, {Rat(3), Rat(4)}};
    in.capacity = Rat(4);
    in.target = Rat(4);
    const KnapsackStarResult out = gen_knapsack_star(in);

    CHECK(out.target == Rat(39));
    REQUIRE(out.star.n() == 8);
    REQUIRE(out.star.m() == 7);
    const auto& g = out.star;
    CHECK(g.boxes[g.find("c")].w == Rat(4));
    CHECK(g.boxes[g.find("c")].h == Rat(1));
    CHECK(g.boxes[g.find("a3")].w == Rat(4));
    CHECK(g.boxes[g.find("a3")].h == Rat(4));
    CHECK(g.boxes[g.find("v1")].w == Rat(2));
    CHECK(g.boxes[g.find("v2")].w == Rat(3));
    for (const auto& e : g.edges) {
        CHECK(e.a == g.find("c"));
        const std::string& id = g.boxes[e.b].id;
        if (id[0] == 'a') CHECK(e.p == Rat(7));
        if (id == "v1") CHECK(e.p == Rat(3));
        if (id == "v2") CHECK(e.p == Rat(4));
    }
}

TEST_CASE("knapsack star with no items reduces the target to P") {
    KnapsackReductionInput in;
    in.capacity = Rat(3);
    in.target = Rat(11);
    const KnapsackStarResult out = gen_knapsack_star(in);
    CHECK(out.target == Rat(11));
    CHECK(out.star.n() == 6);
    CHECK(out.star.m() == 5);
    CHECK(out.star.total_profit() == Rat(0));
}

TEST_CASE("star payoff equals five profit sums plus the knapsack optimum") {
    std::mt19937_64 rng(63);
    std::uniform_int_distribution<long> cap(2, 10), profit(1, 9), count(1, 8);
    for (int trial = 0; trial < 30; ++trial) {
        KnapsackReductionInput in;
        in.capacity = Rat(cap(rng));
        const int n = static_cast<int>(count(rng));
        std::uniform_int_distribution<long> width(1, in.capacity.num().get_si());
        Rat psum(0);
        for (int i = 0; i < n; ++i) {
            in.items.push_back({Rat(width(rng)), Rat(profit(rng))});
            psum += in.items.back().profit;
        }
        const Rat opt = knapsack_subset_opt(in);
        in.target = Rat(profit(rng));  // any positive value; payoff ignores it

        const KnapsackStarResult out = gen_knapsack_star(in);
        std::vector<StarLeaf> leaves;
        for (const auto& e : out.star.edges) leaves.push_back({out.star.boxes[e.b], e.p});
        const Representation rep = star_approx(out.star.boxes[0], leaves);
        const Rat payoff = realized_profit(rep, out.star);
        CHECK(payoff == Rat(5) * psum + opt);
        CHECK(overlap_free(rep));

        // Decision view: the target is cleared exactly when the knapsack is.
        CHECK((payoff >= out.target) == (opt + Rat(5) * psum >= out.target));
    }
}

TEST_CASE("strip path reproduces the worked constants") {
    StripPackingInput in;
    in.rects = {{2, 2}};
    in.strip_width = 2;
    in.height_bound = 2;
    in.epsilon = Rat(1, 2);
    const StripPathResult r = gen_strip_packing_path(in);

    CHECK(r.epsilon_used == Rat(1, 2));
    CHECK(r.grid_gap == Rat(1, 4));
    CHECK(r.connector_side == Rat(1, 392));
    CHECK(r.connectors_per_run == Rat(37632));
    CHECK(r.connectors_per_run * r.connector_side == Rat(96));
    CHECK(r.stretched_width == Rat(9, 4));
    CHECK(r.stretched_height == Rat(9, 4));
    REQUIRE(r.rects.size() == 1);
    CHECK(r.rects[0].w == Rat(9, 4));
    CHECK(r.rects[0].h == Rat(9, 4));
}

TEST_CASE("strip path constants satisfy both connector identities") {
    std::mt19937_64 rng(64);
    std::uniform_int_distribution<long> side(1, 8), cnt(1, 6), num(1, 5), den(2, 9);
    for (int trial = 0; trial < 50; ++trial) {
        StripPackingInput in;
        in.strip_width = side(rng);
        in.height_bound = side(rng);
        const long n = cnt(rng);
        std::uniform_int_distribution<long> rw(1, in.strip_width), rh(1, in.height_bound);
        for (long i = 0; i < n; ++i) in.rects.push_back({rw(rng), rh(rng)});
        const long a = num(rng);
        in.epsilon = Rat(a, a + den(rng));

        const StripPathResult r = gen_strip_packing_path(in);
        CHECK(r.epsilon_used.num() == 1);
        CHECK(r.epsilon_used.sign() > 0);
        CHECK(r.epsilon_used <= in.epsilon);
        CHECK(r.connectors_per_run.is_integer());

        const Rat rhs(4 * (n + 3) * (in.height_bound + 2 * n * in.strip_width));
        CHECK(r.connectors_per_run * r.connector_side == rhs);
        const Rat k = r.connectors_per_run, x = r.connector_side;
        CHECK(Rat(n) * (k * x * x + Rat(2) * x) == r.grid_gap);
    }
}

TEST_CASE("strip path materializes as a path and respects the box limit") {
    StripPackingInput in;
    in.rects = {{1, 1}};
    in.strip_width = 1;
    in.height_bound = 1;
    in.epsilon = Rat(1, 2);
    const StripPathResult r = gen_strip_packing_path(in);
    CHECK(r.connectors_per_run == Rat(4800));

    const SupportGraph g = materialize_strip_path(r);
    REQUIRE(g.n() == 4801);
    REQUIRE(g.m() == 4800);
    for (int i = 0; i < g.m(); ++i) {
        CHECK(g.edges[i].a == i);
        CHECK(g.edges[i].b == i + 1);
    }
    CHECK(g.boxes[42].w == Rat(1, 100));
    CHECK(g.boxes[42].h == Rat(1, 100));
    CHECK(g.boxes[4800].id == "r1");
    CHECK(g.boxes[4800].w == Rat(1));

    CHECK_THROWS_AS(materialize_strip_path(r, 100), std::invalid_argument);
}

TEST_CASE("stretched packing stays inside the stretched strip") {
    StripPackingInput in;
    in.rects = {{2, 2}, {2, 1}, {1, 2}, {1, 1}};
    in.strip_width = 4;
    in.height_bound = 3;
    in.epsilon = Rat(1, 3);
    const StripPathResult r = gen_strip_packing_path(in);
    const Representation rep = stretch_strip_packing(in, {{0, 0}, {2, 0}, {2, 1}, {3, 1}});

    REQUIRE(rep.boxes.size() == 4);
    CHECK(overlap_free(rep));
    for (size_t i = 0; i < rep.boxes.size(); ++i) {
        CHECK(rep.boxes[i].w == r.rects[i].w);
        CHECK(rep.boxes[i].h == r.rects[i].h);
        CHECK(rep.boxes[i].x >= Rat(0));
        CHECK(rep.boxes[i].y >= Rat(0));
        CHECK(rep.boxes[i].right() <= r.stretched_width);
        CHECK(rep.boxes[i].top() <= r.stretched_height);
    }

    CHECK_THROWS_AS(stretch_strip_packing(in, {{0, 0}, {2, 0}, {2, 2}, {3, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(stretch_strip_packing(in, {{0, 0}, {1, 0}, {2, 1}, {3, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(stretch_strip_packing(in, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("exponential squares double in side and admit the extremal layout") {
    CHECK_THROWS_AS(gen_exponential_squares(0), std::invalid_argument);

    const auto one = gen_exponential_squares(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].w == Rat(2));

    const auto three = gen_exponential_squares(3);
    REQUIRE(three.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(three[i].id == "b" + std::to_string(i + 1));
        CHECK(three[i].w == Rat(2 << i));
        CHECK(three[i].h == three[i].w);
    }

    const auto five = gen_exponential_squares(5);
    const Representation rep = extremal_complete(five);
    CHECK(overlap_free(rep));
    const auto touches = contacts(rep);
    CHECK(touches.size() == 8);
    // Every contact is strictly ordered along its axis, so both orientation
    // classes are acyclic by the coordinate potential.
    for (const auto& t : touches) {
        const auto& a = rep.boxes[t.i];
        const auto& b = rep.boxes[t.j];
        if (t.horizontal)
            CHECK(((a.top() == b.bottom() && a.y < b.y) || (b.top() == a.bottom() && b.y < a.y)));
        else
            CHECK(((a.right() == b.left() && a.x < b.x) || (b.right() == a.left() && b.x < a.x)));
    }
}
