#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/support_graph.hpp"

namespace wrac {

// Reflex corner of the staircase boundary. above is the vertex whose box
// forms the wall ending at the point from above; below the one whose top
// edge leaves it to the right. fitting is the unplaced inner vertex that
// could fill the corner, -1 when none exists.
struct Concavity {
    Rat x, y;
    int above = -1, below = -1;
    int fitting = -1;
};

// Growing partial representation. The west and south outer boxes hold
// oversized placeholder rectangles (rays) until the frame is assembled;
// their extent exceeds the sum of all box dimensions, which no inner
// placement can ever reach.
struct Staircase {
    std::vector<PlacedBox> boxes;    // by vertex, valid iff done[v]
    std::vector<char> done;
    std::vector<Concavity> frontier; // ordered from top-left to bottom-right
    Rat big;                         // ray extent
    std::vector<int> outer;          // n, e, s, w
};

// Why a realization attempt stopped: the staircase ran out of applicable
// vertices, the filled inner region was not a rectangle, or no placement of
// the four outer boxes around it works. Carries the frozen frontier.
struct QuasiInfeasible {
    std::string step;  // "staircase" or "frame"
    std::string detail;
    std::vector<Concavity> frontier;
};

struct QuasiResult {
    std::optional<Representation> rep;
    QuasiInfeasible infeasible;

    bool ok() const { return rep.has_value(); }
};

// One placement, for optional step traces.
struct QuasiStep {
    int vertex;
    Rat x, y;
};

// Staircase over the inner vertices, starting from the two rays. outer
// lists the four outer vertices clockwise: north, east, south, west.
Staircase staircase_begin(const SupportGraph& g, const std::vector<int>& outer);

// Every (vertex, concavity) pair that can be placed next: the concavity's
// fitting vertex, provided its box does not outgrow the wall above or the
// shelf right of the corner. Fitting vertices in the result are refreshed
// against the current placement state.
std::vector<std::pair<int, Concavity>> applicable_vertices(const Staircase& s,
                                                           const SupportGraph& g);

// Places vertex with its lower-left corner at the concavity point and
// updates the frontier. The concavity is identified by its point.
void staircase_place(Staircase& s, int vertex, const Concavity& c, const SupportGraph& g);

// Checks that the staircase filled a rectangle and arranges the four outer
// boxes around it so that all outer-cycle and outer-inner contacts hold.
QuasiResult assemble_frame(const Staircase& s, const SupportGraph& g);

// Full run: precondition check (throws std::invalid_argument when the input
// is not quasi-triangulated on the given outer cycle), staircase to fixpoint,
// frame assembly. Order-independent; the scan order cannot change the
// verdict.
QuasiResult realize_quasi_triangulated(const SupportGraph& g, const Embedding& emb,
                                       const std::vector<int>& outer,
                                       std::vector<QuasiStep>* trace = nullptr);

}  // namespace wrac
