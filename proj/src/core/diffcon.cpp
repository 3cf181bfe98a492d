#include "core/diffcon.hpp"

#include <stdexcept>

namespace wrac {

namespace {

// Path weight: accumulated constant plus how many strict constraints the
// path uses. Smaller constant wins; at equal constants more stricts win,
// since the witness must sit strictly below every strict chain.
struct LexDist {
    Rat a;
    long s = 0;
};

bool improves(const LexDist& cand, const LexDist& cur) {
    if (cand.a != cur.a) return cand.a < cur.a;
    return cand.s > cur.s;
}

}  // namespace

DiffSolution solve_difference_constraints(int n, const std::vector<DiffConstraint>& cons) {
    for (const auto& r : cons) {
        if (r.u < 0 || r.u >= n || r.v < 0 || r.v >= n)
            throw std::invalid_argument("difference constraint references unknown variable");
    }
    const int m = static_cast<int>(cons.size());
    std::vector<LexDist> dist(n);
    std::vector<int> pred(n, -1);

    // Implicit source at distance (0, 0) to every variable; n full passes,
    // then one more to detect a still-relaxable constraint.
    int relaxed_vertex = -1;
    for (int round = 0; round <= n && relaxed_vertex < 0; ++round) {
        bool any = false;
        for (int r = 0; r < m; ++r) {
            LexDist cand{dist[cons[r].v].a + cons[r].c, dist[cons[r].v].s + (cons[r].strict ? 1 : 0)};
            if (improves(cand, dist[cons[r].u])) {
                dist[cons[r].u] = cand;
                pred[cons[r].u] = r;
                any = true;
                if (round == n) {
                    relaxed_vertex = cons[r].u;
                    break;
                }
            }
        }
        if (!any) break;
    }

    DiffSolution out;
    if (relaxed_vertex >= 0) {
        // Walk predecessors until a vertex repeats; the loop between the two
        // visits is a cycle whose constants sum lexicographically below zero.
        std::vector<char> seen(n, 0);
        int w = relaxed_vertex;
        while (pred[w] >= 0 && !seen[w]) {
            seen[w] = 1;
            w = cons[pred[w]].v;
        }
        if (pred[w] < 0) throw std::logic_error("relaxable system without predecessor cycle");
        const int start = w;
        do {
            out.cycle.push_back(pred[w]);
            w = cons[pred[w]].v;
        } while (w != start);
        return out;
    }

    // delta below half the smallest positive slack keeps every constraint
    // satisfied after the strict-count perturbation.
    Rat delta(1);
    bool have_gap = false;
    for (const auto& r : cons) {
        Rat gap = dist[r.v].a + r.c - dist[r.u].a;
        if (gap > Rat(0) && (!have_gap || gap < delta)) {
            delta = gap;
            have_gap = true;
        }
    }
    delta = delta / Rat(2 * (n + m + 2));

    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = dist[i].a - delta * Rat(dist[i].s);
    out.x = std::move(x);
    return out;
}

}  // namespace wrac
