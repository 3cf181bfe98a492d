#include "core/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wrac {

// Validates the partition invariants and applies the integer rescale that
// restores B > (m-1)/2; feasibility is invariant under the rescale.
ThreePartitionInput scaled_three_partition(const ThreePartitionInput& in) {
    const long n = static_cast<long>(in.s.size());
    if (n == 0 || n % 3 != 0)
        throw std::invalid_argument("three-partition: need 3m integers");
    if (in.B <= 0) throw std::invalid_argument("three-partition: B must be positive");
    long sum = 0;
    for (long v : in.s) {
        if (4 * v <= in.B || 2 * v >= in.B)
            throw std::invalid_argument(
                "three-partition: every s_i must lie strictly between B/4 and B/2");
        sum += v;
    }
    const long m = n / 3;
    if (sum != m * in.B)
        throw std::invalid_argument("three-partition: the s_i must sum to m*B");

    ThreePartitionInput out = in;
    if (2 * out.B <= m - 1) {
        const long t = (m - 1) / (2 * out.B) + 1;
        out.B *= t;
        for (long& v : out.s) v *= t;
    }
    return out;
}

SupportGraph gen_three_partition_tree(const ThreePartitionInput& raw) {
    const ThreePartitionInput in = scaled_three_partition(raw);
    const int n = static_cast<int>(in.s.size());
    const int m = n / 3;
    const long B = in.B;
    const Rat L(m * B + m - 1);

    SupportGraph g;
    g.boxes.push_back({"c", L, Rat(1)});
    for (int k = 1; k <= 5; ++k) g.boxes.push_back({"a" + std::to_string(k), L, L});
    for (int i = 1; i <= n; ++i)
        g.boxes.push_back({"v" + std::to_string(i), Rat(in.s[i - 1]), Rat(1)});
    for (int j = 1; j <= m; ++j) g.boxes.push_back({"w" + std::to_string(j), Rat(B), Rat(B)});
    for (long j = 1; j + 1 <= m; ++j)
        g.boxes.push_back({"u" + std::to_string(j), Rat(1), Rat(B + j)});
    for (long j = 1; j + 1 <= m; ++j)
        g.boxes.push_back({"x" + std::to_string(j), Rat(j * B + B + j), Rat(1)});

    const int vi = 6, wi = 6 + n, ui = wi + m, xi = ui + (m - 1);
    for (int k = 1; k <= 5; ++k) g.edges.push_back({0, k, Rat(1)});
    for (int i = 0; i < n; ++i) g.edges.push_back({0, vi + i, Rat(1)});
    for (int j = 0; j + 1 < m; ++j) g.edges.push_back({0, ui + j, Rat(1)});
    for (int j = 0; j + 1 < m; ++j) {
        g.edges.push_back({wi + j, ui + j, Rat(1)});
        g.edges.push_back({ui + j, xi + j, Rat(1)});
    }
    if (m >= 2)
        g.edges.push_back({wi + m - 1, ui + m - 2, Rat(1)});
    else
        g.edges.push_back({vi, wi, Rat(1)});  // m = 1: w_1 hangs off v_1
    return g;
}

Representation witness_three_partition(const ThreePartitionInput& raw,
                                       const std::vector<std::array<int, 3>>& partition) {
    const ThreePartitionInput in = scaled_three_partition(raw);
    const int n = static_cast<int>(in.s.size());
    const int m = n / 3;
    if (static_cast<int>(partition.size()) != m)
        throw std::invalid_argument("three-partition: partition must have m triples");
    std::vector<bool> used(n, false);
    for (const auto& triple : partition) {
        long sum = 0;
        for (int idx : triple) {
            if (idx < 0 || idx >= n || used[idx])
                throw std::invalid_argument(
                    "three-partition: partition must cover every index exactly once");
            used[idx] = true;
            sum += in.s[idx];
        }
        if (sum != in.B)
            throw std::invalid_argument("three-partition: every triple must sum to B");
    }

    const long B = in.B;
    const Rat L(m * B + m - 1);
    const Rat half(1, 2);

    // c lies flat at the origin; one big square covers its whole top, two
    // flank each vertical side split at y = 1/2. Item and separator sticks
    // hang off the bottom, each group of items spanning exactly B between
    // consecutive separators. w_j sits flush left of u_j (w_m flush right of
    // u_{m-1}), and each gauge x_j hangs below the tip of its separator.
    Representation rep;
    rep.boxes.push_back({"c", L, Rat(1), Rat(0), Rat(0)});
    rep.boxes.push_back({"a1", L, L, Rat(0), Rat(1)});
    rep.boxes.push_back({"a2", L, L, -L, half - L});
    rep.boxes.push_back({"a3", L, L, -L, half});
    rep.boxes.push_back({"a4", L, L, L, half - L});
    rep.boxes.push_back({"a5", L, L, L, half});

    Rat cur(0);
    for (int q = 0; q < m; ++q) {
        for (int idx : partition[q]) {
            const Rat w(in.s[idx]);
            rep.boxes.push_back({"v" + std::to_string(idx + 1), w, Rat(1), cur, Rat(-1)});
            cur += w;
        }
        if (q + 1 < m) {
            const long j = q + 1;
            rep.boxes.push_back(
                {"u" + std::to_string(j), Rat(1), Rat(B + j), cur, Rat(-(B + j))});
            cur += Rat(1);
        }
    }
    for (long j = 1; j <= m; ++j)
        rep.boxes.push_back(
            {"w" + std::to_string(j), Rat(B), Rat(B), Rat((j - 1) * (B + 1)), Rat(-1 - B)});
    for (long j = 1; j + 1 <= m; ++j)
        rep.boxes.push_back({"x" + std::to_string(j), Rat(j * B + B + j), Rat(1), Rat(0),
                             Rat(-(B + j) - 1)});
    return rep;
}

KnapsackStarResult gen_knapsack_star(const KnapsackReductionInput& in) {
    if (in.capacity.sign() <= 0)
        throw std::invalid_argument("knapsack star: capacity must be positive");
    if (in.target.sign() <= 0)
        throw std::invalid_argument("knapsack star: target must be positive");
    Rat psum(0);
    for (const auto& it : in.items) {
        if (it.width.sign() <= 0 || it.profit.sign() <= 0)
            throw std::invalid_argument("knapsack star: item widths and profits must be positive");
        psum += it.profit;
    }

    KnapsackStarResult out;
    out.target = Rat(5) * psum + in.target;
    SupportGraph& g = out.star;
    g.boxes.push_back({"c", in.capacity, Rat(1)});
    for (int k = 1; k <= 5; ++k) {
        g.boxes.push_back({"a" + std::to_string(k), in.capacity, in.capacity});
        g.edges.push_back({0, k, psum});
    }
    for (size_t i = 0; i < in.items.size(); ++i) {
        g.boxes.push_back({"v" + std::to_string(i + 1), in.items[i].width, Rat(1)});
        g.edges.push_back({0, static_cast<int>(6 + i), in.items[i].profit});
    }
    return out;
}

StripPathResult gen_strip_packing_path(const StripPackingInput& in) {
    const long n = static_cast<long>(in.rects.size());
    if (n == 0) throw std::invalid_argument("strip path: need at least one rectangle");
    if (in.strip_width <= 0 || in.height_bound <= 0)
        throw std::invalid_argument("strip path: W and H must be positive");
    for (auto [w, h] : in.rects)
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("strip path: rectangle sides must be positive");
    if (in.epsilon.sign() <= 0 || in.epsilon >= Rat(1))
        throw std::invalid_argument("strip path: epsilon must lie in (0, 1)");

    StripPathResult out;
    const mpz_class q = (in.epsilon.den() + in.epsilon.num() - 1) / in.epsilon.num();
    out.epsilon_used = Rat(1) / Rat(q);
    const long W = in.strip_width, H = in.height_bound;
    out.grid_gap = out.epsilon_used / Rat(std::max(W, H));

    // x = d / (2n(2Hn + 6H + 4n^2 W + 12nW + 1)) and k = 4(n+3)(H + 2nW) / x,
    // which force k*x = 4(n+3)(H + 2nW) and n(k*x^2 + 2x) = d.
    const mpz_class nz(n), Wz(W), Hz(H);
    const mpz_class D = 2 * Hz * nz + 6 * Hz + 4 * nz * nz * Wz + 12 * nz * Wz + 1;
    out.connector_side = out.grid_gap / Rat(mpz_class(2 * nz * D));
    out.connectors_per_run =
        Rat(mpz_class(4 * (nz + 3) * (Hz + 2 * nz * Wz))) / out.connector_side;
    out.runs = static_cast<int>(n);

    const Rat& d = out.grid_gap;
    out.stretched_width = Rat(W) + Rat(W - 1) * d;
    out.stretched_height = Rat(H) + Rat(H - 1) * d;
    for (long i = 0; i < n; ++i) {
        const auto [w, h] = in.rects[i];
        out.rects.push_back(
            {"r" + std::to_string(i + 1), Rat(w) + Rat(w - 1) * d, Rat(h) + Rat(h - 1) * d});
    }
    return out;
}

SupportGraph materialize_strip_path(const StripPathResult& r, long max_boxes) {
    if (!r.connectors_per_run.is_integer() || r.connectors_per_run.sign() < 0)
        throw std::invalid_argument("strip path: connector count must be a nonnegative integer");
    const mpz_class k = r.connectors_per_run.num();
    const mpz_class total = mpz_class(r.runs) * k + r.runs;
    if (total > max_boxes)
        throw std::invalid_argument("strip path: materialization needs " + total.get_str() +
                                    " boxes, limit " + std::to_string(max_boxes));

    SupportGraph g;
    const long kk = k.get_si();
    for (int run = 1; run <= r.runs; ++run) {
        for (long i = 1; i <= kk; ++i)
            g.boxes.push_back({"c" + std::to_string(run) + "_" + std::to_string(i),
                               r.connector_side, r.connector_side});
        g.boxes.push_back(r.rects[run - 1]);
    }
    for (int i = 0; i + 1 < g.n(); ++i) g.edges.push_back({i, i + 1, Rat(1)});
    return g;
}

Representation stretch_strip_packing(const StripPackingInput& in,
                                     const std::vector<std::pair<long, long>>& at) {
    const StripPathResult r = gen_strip_packing_path(in);
    if (at.size() != in.rects.size())
        throw std::invalid_argument("strip path: one position per rectangle required");
    const long W = in.strip_width, H = in.height_bound;
    for (size_t i = 0; i < at.size(); ++i) {
        const auto [px, py] = at[i];
        const auto [w, h] = in.rects[i];
        if (px < 0 || py < 0 || px + w > W || py + h > H)
            throw std::invalid_argument("strip path: placement leaves the strip");
        for (size_t j = 0; j < i; ++j) {
            const auto [qx, qy] = at[j];
            const auto [vw, vh] = in.rects[j];
            if (px < qx + vw && qx < px + w && py < qy + vh && qy < py + h)
                throw std::invalid_argument("strip path: placements overlap");
        }
    }

    // Integer cell (px, py) lands at (px, py) * (1 + d): every interior grid
    // line left of or below the cell inflates to thickness d.
    const Rat unit = Rat(1) + r.grid_gap;
    Representation rep;
    for (size_t i = 0; i < at.size(); ++i) {
        const auto& b = r.rects[i];
        rep.boxes.push_back(
            {b.id, b.w, b.h, Rat(at[i].first) * unit, Rat(at[i].second) * unit});
    }
    return rep;
}

std::vector<BoxDims> gen_exponential_squares(int n) {
    if (n < 1) throw std::invalid_argument("exponential squares: n must be at least 1");
    std::vector<BoxDims> out;
    for (int i = 1; i <= n; ++i) {
        const Rat side{mpz_class(mpz_class(1) << i)};
        out.push_back({"b" + std::to_string(i), side, side});
    }
    return out;
}

}  // namespace wrac
