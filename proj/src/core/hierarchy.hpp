#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/diffcon.hpp"
#include "core/geometry.hpp"
#include "core/io.hpp"

namespace wrac {

// Why a hierarchical instance cannot be drawn. phase is "orientation",
// "vertical" or "horizontal"; vertex is the offending box for the first two
// phases, cycle carries an unsatisfiable constraint loop for the third.
struct HiInfeasible {
    std::string phase;
    std::string detail;
    int vertex = -1;
    std::vector<DiffConstraint> cycle;
};

struct HiResult {
    std::optional<Representation> rep;
    HiInfeasible infeasible;
    // Set when only the minimum-overlap margin made the system unsatisfiable,
    // i.e. a drawing exists in which some required contact degenerates to a
    // corner touch.
    bool tightening_flipped = false;

    bool ok() const { return rep.has_value(); }
};

// Vertical span of each box: bottom edge low[i], top edge high[i] = low[i] + h.
struct VerticalCoords {
    std::vector<Rat> low, high;
};

struct VerticalResult {
    std::optional<VerticalCoords> coords;
    int conflict = -1;  // box that would need two different bottom edges

    bool ok() const { return coords.has_value(); }
};

// Difference constraints over one variable per box (its left edge).
struct HorizontalSystem {
    int n = 0;
    std::vector<DiffConstraint> cons;
};

// Rotation of a box split into its incoming and outgoing blocks. Clockwise
// order means outs run left to right along the top edge and ins right to
// left along the bottom edge; for a box with both kinds the blocks are
// rotated so ins come first, for a box with one kind the stored order is
// kept and already carries that geometry.
struct RotBlocks {
    std::vector<int> ins, outs;
};

// Checks that the edges form a DAG with exactly one sink and that every
// rotation lists the box's neighbours with ins and outs each consecutive in
// cyclic order. nullopt when the instance passes.
std::optional<HiInfeasible> check_orientation(const HiInstance& inst);

RotBlocks split_rotation(const HiInstance& inst, int v);

// Propagates bottom edges from the sink through every edge (tail's top edge
// equals head's bottom edge), then shifts the minimum to zero.
VerticalResult assign_vertical(const HiInstance& inst);

// Ordered pairs (a, b) with box a strictly left of box b, derived by joining
// extreme tail-to-sink paths; only pairs whose open vertical spans overlap
// are compared. Requires a valid orientation.
std::vector<std::pair<int, int>> left_right_relation(const HiInstance& inst,
                                                     const VerticalCoords& vc);

// mu > 0 forces every required contact to have length at least mu; mu = 0
// admits degenerate corner touching.
HorizontalSystem build_horizontal(const HiInstance& inst,
                                  const std::vector<std::pair<int, int>>& left_of,
                                  const Rat& mu);

DiffSolution solve_horizontal(const HorizontalSystem& sys);

// Full pipeline. Feasible instances get a drawing in which every edge is a
// horizontal contact of positive length with the head on top.
HiResult hi_wrac(const HiInstance& inst);

}  // namespace wrac
