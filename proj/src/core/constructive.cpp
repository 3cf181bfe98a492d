#include "core/constructive.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wrac {

namespace {

Rat min_height(const std::vector<BoxDims>& dims) {
    Rat m = dims[0].h;
    for (const auto& d : dims) m = std::min(m, d.h);
    return m;
}

PlacedBox at(const BoxDims& d, Rat x, Rat y) { return {d.id, d.w, d.h, x, y}; }

}  // namespace

Representation realize_cycle(const std::vector<BoxDims>& order,
                             std::vector<std::vector<int>>* batches) {
    int n = static_cast<int>(order.size());
    if (n < 3) throw std::invalid_argument("realize_cycle: need at least 3 boxes");
    Rat delta = min_height(order) / Rat(4 * n);

    Representation rep;
    rep.boxes.resize(n);
    auto note = [&](std::vector<int> b) {
        if (batches) batches->push_back(std::move(b));
    };

    // order[0] sits on top of order[n-1], left edges flush at x = 0; the two
    // chains then grow rightward from the shared contact line.
    rep.boxes[0] = at(order[0], Rat(0), Rat(0));
    rep.boxes[n - 1] = at(order[n - 1], Rat(0), -order[n - 1].h);
    note({0, n - 1});
    int i = 0, j = n - 1;  // frontier: top chain ends at i, bottom chain at j
    Rat yf(0);             // current line of the frontier horizontal contact
    while (j - i >= 2) {
        Rat ri = rep.boxes[i].right(), rj = rep.boxes[j].right();
        if (ri > rj) {  // bottom side ends first: extend it under the top
            int k = j - 1;
            rep.boxes[k] = at(order[k], rj, yf - order[k].h);
            note({k});
            j = k;
        } else if (ri < rj) {  // top side ends first: extend it over the bottom
            int k = i + 1;
            rep.boxes[k] = at(order[k], ri, yf);
            note({k});
            i = k;
        } else if (j - i == 2) {
            // Last box with flush right sides: nudged up, it meets both
            // chain ends along their common right edge.
            int k = i + 1;
            rep.boxes[k] = at(order[k], ri, yf + delta - order[k].h);
            note({k});
            break;
        } else {
            // Flush right sides: raise the contact line by delta and grow
            // both chains from the shared corner in one step.
            int kt = i + 1, kb = j - 1;
            rep.boxes[kb] = at(order[kb], ri, yf + delta - order[kb].h);
            rep.boxes[kt] = at(order[kt], ri, yf + delta);
            note({kt, kb});
            i = kt;
            j = kb;
            yf += delta;
        }
    }
    return rep;
}

Representation realize_path(const std::vector<BoxDims>& order) {
    if (order.empty()) throw std::invalid_argument("realize_path: need at least 1 box");
    Representation rep;
    Rat x(0);
    for (const auto& d : order) {
        rep.boxes.push_back(at(d, x, Rat(0)));
        x += d.w;
    }
    return rep;
}

namespace {

// Pinwheel around center c: w left, e right, n above, s below, each flush
// with one side of c and poking past it to touch the next ring box. Needs
// strictly taller w/e and strictly wider n/s than c.
bool pinwheel_fits(const std::vector<BoxDims>& dims, const std::array<int, 5>& roles) {
    auto [w, e, nn, s, c] = roles;
    return dims[w].h > dims[c].h && dims[e].h > dims[c].h && dims[nn].w > dims[c].w &&
           dims[s].w > dims[c].w;
}

Representation pinwheel(const std::vector<BoxDims>& dims, const std::array<int, 5>& roles,
                        const std::vector<int>& queue) {
    auto [w, e, nn, s, c] = roles;
    int n = static_cast<int>(dims.size());
    Rat wc = dims[c].w, hc = dims[c].h;
    Representation rep;
    rep.boxes.resize(n);
    rep.boxes[c] = at(dims[c], Rat(0), Rat(0));
    rep.boxes[nn] = at(dims[nn], Rat(0), hc);               // flush left, pokes right
    rep.boxes[e] = at(dims[e], wc, hc - dims[e].h);         // flush top, pokes down
    rep.boxes[s] = at(dims[s], wc - dims[s].w, -dims[s].h); // flush right, pokes left
    rep.boxes[w] = at(dims[w], -dims[w].w, Rat(0));         // flush bottom, pokes up

    // Remaining boxes join along the n/e contact line, two contacts each.
    Rat delta = min_height(dims) / Rat(4 * n);
    int top = nn, bot = e;
    Rat yf = hc;
    for (int q : queue) {
        Rat rt = rep.boxes[top].right(), rb = rep.boxes[bot].right();
        if (rt > rb) {
            rep.boxes[q] = at(dims[q], rb, yf - dims[q].h);
            bot = q;
        } else if (rt < rb) {
            rep.boxes[q] = at(dims[q], rt, yf);
            top = q;
        } else {
            // Flush chain ends: drop the new top slightly so it touches both
            // old chain ends along their shared right edge.
            yf -= delta;
            rep.boxes[q] = at(dims[q], rt, yf);
            top = q;
        }
    }
    return rep;
}

// Rows of equal-height boxes stacked top to bottom, centers aligned, odd
// rows nudged by a quarter of the narrowest width so row junctions land
// inside boxes instead of on their corners.
Representation brick_wall(const std::vector<BoxDims>& dims) {
    int n = static_cast<int>(dims.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return dims[a].h > dims[b].h; });

    int k = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(n)))));
    std::vector<int> sizes(k, n / k);
    // Middle rows take the leftovers so end rows stay small.
    std::vector<int> by_center(k);
    std::iota(by_center.begin(), by_center.end(), 0);
    std::stable_sort(by_center.begin(), by_center.end(), [&](int a, int b) {
        return std::abs(2 * a - (k - 1)) < std::abs(2 * b - (k - 1));
    });
    for (int r = 0; r < n % k; ++r) sizes[by_center[r]] += 1;

    // A row must be one height for both of its contact lines to be flat, so
    // rows also split where the sorted heights change.
    std::vector<std::vector<int>> rows;
    int next = 0;
    for (size_t plan = 0; next < n; ++plan) {
        int want = plan < sizes.size() ? std::max(sizes[plan], 1) : std::max(n / k, 1);
        std::vector<int> row{idx[next++]};
        while (next < n && static_cast<int>(row.size()) < want &&
               dims[idx[next]].h == dims[row[0]].h)
            row.push_back(idx[next++]);
        rows.push_back(std::move(row));
    }

    Rat minw = dims[0].w;
    for (const auto& d : dims) minw = std::min(minw, d.w);

    Representation rep;
    rep.boxes.resize(n);
    Rat top(0);
    for (size_t r = 0; r < rows.size(); ++r) {
        Rat width(0);
        for (int b : rows[r]) width += dims[b].w;
        Rat x = -width / Rat(2);
        if (r % 2 == 1) x += minw / Rat(4);
        Rat h = dims[rows[r][0]].h;
        for (int b : rows[r]) {
            rep.boxes[b] = at(dims[b], x, top - h);
            x += dims[b].w;
        }
        top -= h;
    }
    return rep;
}

int contact_count(const Representation& rep) {
    return static_cast<int>(contacts(rep).size());
}

}  // namespace

Representation extremal_complete(const std::vector<BoxDims>& dims) {
    int n = static_cast<int>(dims.size());
    if (n < 5) throw std::invalid_argument("extremal_complete: need at least 5 boxes");

    // Seeds: two tallest boxes flank the center, two widest of the rest sit
    // above and below it; ties keep the lower index.
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return dims[a].h > dims[b].h; });
    int b1 = idx[0], b2 = idx[1];
    std::vector<int> rest(idx.begin() + 2, idx.end());
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return dims[a].w > dims[b].w; });
    int b3 = rest[0], b4 = rest[1];
    std::vector<int> others(rest.begin() + 2, rest.end());
    std::sort(others.begin(), others.end());
    int b5 = others.front();
    std::vector<int> queue(others.begin() + 1, others.end());

    std::array<int, 5> roles{b1, b2, b3, b4, b5};
    if (pinwheel_fits(dims, roles)) {
        Representation rep = pinwheel(dims, roles, queue);
        if (contact_count(rep) >= 2 * n - 2) return rep;
    }

    Representation best;
    int best_count = -1;
    auto consider = [&](Representation rep) {
        if (!overlap_free(rep)) return;
        int c = contact_count(rep);
        if (c > best_count) {
            best_count = c;
            best = std::move(rep);
        }
    };

    // Ties can break the pinwheel; try every role assignment of the seeds.
    std::array<int, 5> perm = roles;
    std::sort(perm.begin(), perm.end());
    do {
        if (!pinwheel_fits(dims, perm)) continue;
        consider(pinwheel(dims, perm, queue));
        if (best_count >= 2 * n - 2) return best;
    } while (std::next_permutation(perm.begin(), perm.end()));

    consider(brick_wall(dims));
    if (best_count >= 2 * n - 2) return best;
    std::vector<BoxDims> order = dims;
    consider(realize_cycle(order));
    return best;
}

Representation extremal_small(const std::vector<BoxDims>& dims) {
    int n = static_cast<int>(dims.size());
    if (n < 1 || n > 4) throw std::invalid_argument("extremal_small: need 1 to 4 boxes");
    Representation rep;
    if (n == 1) {
        rep.boxes.push_back(at(dims[0], Rat(0), Rat(0)));
        return rep;
    }
    if (n == 2) return realize_path(dims);

    // Bottom row a, b with tops at y = 0; c bridges their junction from
    // above; with four boxes, d follows c and reaches over onto b.
    const BoxDims &a = dims[0], &b = dims[1], &c = dims[2];
    Rat lo = a.w - c.w;
    Rat hi = n == 3 ? a.w : std::min(a.w, a.w + b.w - c.w);
    Rat xc = (lo + hi) / Rat(2);
    rep.boxes.push_back(at(a, Rat(0), -a.h));
    rep.boxes.push_back(at(b, a.w, -b.h));
    rep.boxes.push_back(at(c, xc, Rat(0)));
    if (n == 4) rep.boxes.push_back(at(dims[3], xc + c.w, Rat(0)));
    return rep;
}

}  // namespace wrac
