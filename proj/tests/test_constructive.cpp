#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "core/constructive.hpp"
#include "core/geometry.hpp"
#include "doctest.h"
#include "support/testgen.hpp"

using namespace wrac;
using wractest::random_boxes;
using wractest::unit_boxes;

namespace {

bool touching(const Representation& rep, int a, int b) {
    return boxes_touch(rep.boxes[a], rep.boxes[b]);
}

// All cycle edges order[k] - order[k+1] (wrapping) are contacts.
void check_cycle_realized(const Representation& rep, int n) {
    REQUIRE(overlap_free(rep));
    for (int k = 0; k < n; ++k) REQUIRE(touching(rep, k, (k + 1) % n));
}

// Batches must start with {0, n-1} and then extend the two chains: each batch
// is the next top index, the next bottom index, or both at once.
void check_batches(const std::vector<std::vector<int>>& batches, int n) {
    REQUIRE(!batches.empty());
    REQUIRE(batches[0] == std::vector<int>{0, n - 1});
    int i = 0, j = n - 1;
    for (size_t t = 1; t < batches.size(); ++t) {
        const auto& b = batches[t];
        if (b.size() == 2) {
            REQUIRE(b == std::vector<int>{i + 1, j - 1});
            ++i;
            --j;
        } else {
            REQUIRE(b.size() == 1);
            REQUIRE((b[0] == i + 1 || b[0] == j - 1));
            (b[0] == i + 1 ? i : j) = b[0];
        }
        REQUIRE(i < j);
    }
    REQUIRE(j - i <= 1);
}

}  // namespace

TEST_CASE("cycle staircase reproduces the reference insertion order") {
    std::vector<long> widths{5, 1, 1, 1, 2, 1, 2, 2, 4, 3};
    std::vector<BoxDims> order;
    for (size_t i = 0; i < widths.size(); ++i)
        order.push_back({"v" + std::to_string(i), Rat(widths[i]), Rat(1)});
    std::vector<std::vector<int>> batches;
    auto rep = realize_cycle(order, &batches);
    std::vector<std::vector<int>> want{{0, 9}, {8}, {1}, {2}, {3, 7}, {4}, {6}, {5}};
    CHECK(batches == want);
    check_cycle_realized(rep, 10);
}

TEST_CASE("three unit squares realize the triangle") {
    auto rep = realize_cycle(unit_boxes(3));
    check_cycle_realized(rep, 3);
    CHECK(contacts(rep).size() == 3);
}

TEST_CASE("cycles below three boxes are rejected") {
    CHECK_THROWS_AS(realize_cycle(unit_boxes(2)), std::invalid_argument);
    CHECK_THROWS_AS(realize_cycle({}), std::invalid_argument);
}

TEST_CASE("random cycles realize every edge without overlap") {
    std::mt19937_64 rng(23);
    for (int n : {3, 4, 5, 6, 9, 17, 40, 120}) {
        for (int t = 0; t < 6; ++t) {
            auto order = random_boxes(rng, n);
            std::vector<std::vector<int>> batches;
            auto rep = realize_cycle(order, &batches);
            check_cycle_realized(rep, n);
            check_batches(batches, n);
        }
    }
}

TEST_CASE("all-equal squares force the flush branches") {
    for (int n : {3, 4, 5, 8, 13}) {
        std::vector<std::vector<int>> batches;
        auto rep = realize_cycle(unit_boxes(n), &batches);
        check_cycle_realized(rep, n);
        check_batches(batches, n);
    }
}

TEST_CASE("path layout keeps consecutive contacts only") {
    CHECK(realize_path(unit_boxes(1)).boxes.size() == 1);
    CHECK(contacts(realize_path(unit_boxes(1))).empty());
    CHECK(contacts(realize_path(unit_boxes(2))).size() == 1);

    std::mt19937_64 rng(29);
    auto order = random_boxes(rng, 50);
    auto rep = realize_path(order);
    REQUIRE(overlap_free(rep));
    auto cs = contacts(rep);
    CHECK(cs.size() == 49);
    for (int k = 0; k + 1 < 50; ++k) CHECK(touching(rep, k, k + 1));
    CHECK_THROWS_AS(realize_path({}), std::invalid_argument);
}

TEST_CASE("small complete layouts reach 2n-3 contacts") {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 20; ++t) {
            auto dims = random_boxes(rng, n);
            auto rep = extremal_small(dims);
            REQUIRE(overlap_free(rep));
            CHECK(static_cast<int>(contacts(rep).size()) == std::max(0, 2 * n - 3));
        }
    }
    CHECK(contacts(extremal_small(unit_boxes(4))).size() == 5);
    CHECK_THROWS_AS(extremal_small(unit_boxes(5)), std::invalid_argument);
    CHECK_THROWS_AS(extremal_small({}), std::invalid_argument);
}

TEST_CASE("extremal layout reaches 2n-2 contacts on distinct dims") {
    std::mt19937_64 rng(37);
    for (int n : {5, 6, 7, 10, 19, 40}) {
        for (int t = 0; t < 8; ++t) {
            auto dims = random_boxes(rng, n);
            auto rep = extremal_complete(dims);
            REQUIRE(overlap_free(rep));
            CHECK(static_cast<int>(contacts(rep).size()) >= 2 * n - 2);
        }
    }
    CHECK_THROWS_AS(extremal_complete(unit_boxes(4)), std::invalid_argument);
}

TEST_CASE("ten unit squares still reach 18 contacts") {
    auto rep = extremal_complete(unit_boxes(10));
    REQUIRE(overlap_free(rep));
    CHECK(static_cast<int>(contacts(rep).size()) >= 18);
}

namespace {

// Union-find cycle check over one orientation class of contacts.
bool contact_class_is_forest(const Representation& rep, bool horizontal) {
    std::vector<int> parent(rep.boxes.size());
    for (size_t v = 0; v < parent.size(); ++v) parent[v] = static_cast<int>(v);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& c : contacts(rep)) {
        if (c.horizontal != horizontal) continue;
        int a = find(c.i), b = find(c.j);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

}  // namespace

TEST_CASE("doubling squares give exactly 2n-2 contacts and two forests") {
    std::vector<BoxDims> dims;
    Rat side(2);
    for (int i = 1; i <= 6; ++i) {
        dims.push_back({"s" + std::to_string(i), side, side});
        side *= Rat(2);
    }
    auto rep = extremal_complete(dims);
    REQUIRE(overlap_free(rep));
    CHECK(contacts(rep).size() == 10);
    CHECK(contact_class_is_forest(rep, true));
    CHECK(contact_class_is_forest(rep, false));
}

TEST_CASE("constructions are deterministic") {
    std::mt19937_64 rng(41);
    auto dims = random_boxes(rng, 12);
    auto a = extremal_complete(dims);
    auto b = extremal_complete(dims);
    REQUIRE(a.boxes.size() == b.boxes.size());
    for (size_t k = 0; k < a.boxes.size(); ++k) {
        CHECK(a.boxes[k].id == b.boxes[k].id);
        CHECK(a.boxes[k].x == b.boxes[k].x);
        CHECK(a.boxes[k].y == b.boxes[k].y);
    }
}
