#include "core/geometry.hpp"

#include <stdexcept>

namespace wrac {

namespace {

// Length of the overlap of [a1, a2] and [b1, b2]; nonpositive means disjoint
// or point touch.
Rat overlap_len(const Rat& a1, const Rat& a2, const Rat& b1, const Rat& b2) {
    return min(a2, b2) - max(a1, b1);
}

}  // namespace

int Representation::find(const std::string& id) const {
    for (size_t k = 0; k < boxes.size(); ++k)
        if (boxes[k].id == id) return static_cast<int>(k);
    return -1;
}

bool overlap_free(const Representation& rep) {
    const auto& b = rep.boxes;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) {
            if (overlap_len(b[i].left(), b[i].right(), b[j].left(), b[j].right()).sign() > 0 &&
                overlap_len(b[i].bottom(), b[i].top(), b[j].bottom(), b[j].top()).sign() > 0)
                return false;
        }
    return true;
}

bool boxes_touch(const PlacedBox& a, const PlacedBox& b) {
    if (a.top() == b.bottom() || b.top() == a.bottom())
        return overlap_len(a.left(), a.right(), b.left(), b.right()).sign() > 0;
    if (a.right() == b.left() || b.right() == a.left())
        return overlap_len(a.bottom(), a.top(), b.bottom(), b.top()).sign() > 0;
    return false;
}

std::vector<Contact> contacts(const Representation& rep) {
    std::vector<Contact> out;
    const auto& b = rep.boxes;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) {
            if (b[i].top() == b[j].bottom() || b[j].top() == b[i].bottom()) {
                Rat len = overlap_len(b[i].left(), b[i].right(), b[j].left(), b[j].right());
                if (len.sign() > 0)
                    out.push_back({static_cast<int>(i), static_cast<int>(j), true, len});
            } else if (b[i].right() == b[j].left() || b[j].right() == b[i].left()) {
                Rat len = overlap_len(b[i].bottom(), b[i].top(), b[j].bottom(), b[j].top());
                if (len.sign() > 0)
                    out.push_back({static_cast<int>(i), static_cast<int>(j), false, len});
            }
        }
    return out;
}

BoundingBox bounding_box(const Representation& rep) {
    if (rep.boxes.empty()) return {Rat(0), Rat(0), Rat(0), Rat(0)};
    BoundingBox bb{rep.boxes[0].left(), rep.boxes[0].bottom(), rep.boxes[0].right(),
                   rep.boxes[0].top()};
    for (const auto& b : rep.boxes) {
        bb.xmin = min(bb.xmin, b.left());
        bb.ymin = min(bb.ymin, b.bottom());
        bb.xmax = max(bb.xmax, b.right());
        bb.ymax = max(bb.ymax, b.top());
    }
    return bb;
}

Representation compose_disjoint(const std::vector<Representation>& parts) {
    Representation out;
    Rat cursor(0);
    bool first = true;
    for (const auto& part : parts) {
        if (part.boxes.empty()) continue;
        if (!first) cursor += Rat(1);
        first = false;
        BoundingBox bb = bounding_box(part);
        Rat dx = cursor - bb.xmin;
        Rat dy = -bb.ymin;
        for (const auto& b : part.boxes)
            out.boxes.push_back({b.id, b.w, b.h, b.x + dx, b.y + dy});
        cursor += bb.w();
    }
    return out;
}

}  // namespace wrac
