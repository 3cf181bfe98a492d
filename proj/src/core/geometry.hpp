#pragma once

#include <string>
#include <vector>

#include "core/rat.hpp"

namespace wrac {

// Axis-aligned box dimensions; w, h > 0.
struct BoxDims {
    std::string id;
    Rat w, h;
};

// Placed box; (x, y) is the lower-left corner, y grows upward.
struct PlacedBox {
    std::string id;
    Rat w, h, x, y;

    Rat left() const { return x; }
    Rat right() const { return x + w; }
    Rat bottom() const { return y; }
    Rat top() const { return y + h; }
};

struct Representation {
    std::vector<PlacedBox> boxes;

    // Index of box with the given id, -1 when absent.
    int find(const std::string& id) const;
};

// Positive-length shared boundary segment between boxes i and j (indices into
// the representation). Corner touching does not count as a contact.
struct Contact {
    int i, j;
    bool horizontal;  // true: shared segment lies on a horizontal line
    Rat length;
};

struct BoundingBox {
    Rat xmin, ymin, xmax, ymax;
    Rat w() const { return xmax - xmin; }
    Rat h() const { return ymax - ymin; }
};

// Open interiors pairwise disjoint (boxes may touch on their boundary).
bool overlap_free(const Representation& rep);

// All contacts, pairwise scan; i < j in each entry.
std::vector<Contact> contacts(const Representation& rep);

// True when boxes i and j of rep share a boundary segment of positive length.
bool boxes_touch(const PlacedBox& a, const PlacedBox& b);

BoundingBox bounding_box(const Representation& rep);

// Places the parts left to right with gap 1 between consecutive bounding
// boxes, all aligned on the common baseline y = 0. Empty parts are skipped.
Representation compose_disjoint(const std::vector<Representation>& parts);

}  // namespace wrac
