#pragma once

#include <vector>

#include "core/geometry.hpp"

namespace wrac {

// Places the boxes of a cycle (order[0], ..., order[n-1], wrapping) so that
// every cycle edge becomes a contact. Two staircase chains grow rightward
// from a stacked start pair; runs in O(n). Requires n >= 3.
//
// When batches is non-null it receives the insertion batches: indices into
// order, one vector per placement step.
Representation realize_cycle(const std::vector<BoxDims>& order,
                             std::vector<std::vector<int>>* batches = nullptr);

// Places the boxes in a single row on a common baseline; all n-1 consecutive
// contacts realized. Requires n >= 1.
Representation realize_path(const std::vector<BoxDims>& order);

// Contact-rich placement for complete supports, n >= 5: a five-box pinwheel
// seed with 8 contacts, then each further box is attached with 2 contacts,
// for 2n-2 in total. Falls back to a seed-role search, a brick wall, and a
// plain cycle when ties make the pinwheel degenerate; returns the best
// audited layout.
Representation extremal_complete(const std::vector<BoxDims>& dims);

// Companion for n in 1..4: hand-coded layouts with max(0, 2n-3) contacts.
Representation extremal_small(const std::vector<BoxDims>& dims);

}  // namespace wrac
