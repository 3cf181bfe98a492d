#pragma once

#include <optional>
#include <vector>

#include "core/rat.hpp"

namespace wrac {

// x_u - x_v <= c, with < instead when strict is set.
struct DiffConstraint {
    int u, v;
    Rat c;
    bool strict = false;
};

// Witness assignment, or a violating cycle of constraint indices: chained,
// its constants sum to a negative value, or to zero with a strict member.
struct DiffSolution {
    std::optional<std::vector<Rat>> x;
    std::vector<int> cycle;

    bool ok() const { return x.has_value(); }
};

// Bellman-Ford over the constraint graph with lexicographic weights
// (constant, strict count), so strict inequalities are exact rather than
// epsilon-approximated. Feasible systems get rational witnesses.
DiffSolution solve_difference_constraints(int n, const std::vector<DiffConstraint>& cons);

}  // namespace wrac
