#include "core/optimize.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "core/constructive.hpp"
#include "core/diffcon.hpp"

namespace wrac {

namespace {

void check_knapsack(const KnapsackInstance& k) {
    for (const auto& it : k.items) {
        if (it.size.sign() <= 0) throw std::invalid_argument("knapsack: item sizes must be positive");
        if (it.value.sign() < 0) throw std::invalid_argument("knapsack: item values must be nonnegative");
    }
}

bool size_fits(const Rat& size, const Rat& rem, bool strict) {
    return strict ? size < rem : size <= rem;
}

// Indices by descending value density, ties by index.
std::vector<int> density_order(const std::vector<KnapsackItem>& items) {
    std::vector<int> ord(items.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        return items[a].value * items[b].size > items[b].value * items[a].size;
    });
    return ord;
}

struct ValueSearch {
    const std::vector<KnapsackItem>& items;
    bool strict;
    std::vector<int> ord;  // candidate indices, density order
    Rat best;

    // Fractional relaxation; upper bound for every completion from pos.
    Rat bound(size_t pos, Rat rem, Rat value) const {
        for (size_t t = pos; t < ord.size(); ++t) {
            const auto& it = items[ord[t]];
            if (it.size <= rem) {
                value += it.value;
                rem -= it.size;
            } else {
                if (rem.sign() > 0) value += it.value * rem / it.size;
                break;
            }
        }
        return value;
    }

    void run(size_t pos, const Rat& rem, const Rat& value) {
        if (value > best) best = value;
        if (pos == ord.size() || bound(pos, rem, value) <= best) return;
        const auto& it = items[ord[pos]];
        if (size_fits(it.size, rem, strict)) run(pos + 1, rem - it.size, value + it.value);
        run(pos + 1, rem, value);
    }
};

// Best achievable value over the given candidate indices.
Rat branch_opt(const std::vector<KnapsackItem>& items, std::vector<int> cand, const Rat& cap,
               bool strict) {
    if (strict && cap.sign() <= 0) return Rat(0);
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
        return items[a].value * items[b].size > items[b].value * items[a].size;
    });
    ValueSearch vs{items, strict, std::move(cand), Rat(0)};
    vs.run(0, cap, Rat(0));
    return vs.best;
}

// Chooses the lexicographically smallest optimal index set: walk the items in
// order, stop once the residual target hits zero, otherwise include an item
// exactly when some optimal completion contains it.
KnapsackResult branch_knapsack(const KnapsackInstance& k) {
    const int n = static_cast<int>(k.items.size());
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    KnapsackResult out{{}, branch_opt(k.items, all, k.capacity, k.strict), true};
    Rat rem_cap = k.capacity;
    Rat rem_target = out.value;
    for (int i = 0; i < n && rem_target.sign() > 0; ++i) {
        if (!size_fits(k.items[i].size, rem_cap, k.strict)) continue;
        std::vector<int> rest;
        for (int j = i + 1; j < n; ++j) rest.push_back(j);
        if (k.items[i].value + branch_opt(k.items, std::move(rest), rem_cap - k.items[i].size,
                                          k.strict) == rem_target) {
            out.chosen.push_back(i);
            rem_cap -= k.items[i].size;
            rem_target -= k.items[i].value;
        }
    }
    if (rem_target.sign() != 0) throw std::logic_error("knapsack reconstruction mismatch");
    return out;
}

// Integer-table mode when sizes and capacity share a small denominator.
// Strictness folds into the table bound: integral totals < W equal <= W - 1.
std::optional<KnapsackResult> table_knapsack(const KnapsackInstance& k) {
    static const long kDenLimit = 1000000;
    static const long kTableLimit = 200000;
    if (k.capacity.sign() < 0) return std::nullopt;
    mpz_class d(1);
    for (const auto& it : k.items) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), it.size.den().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), k.capacity.den().get_mpz_t());
    if (d > kDenLimit) return std::nullopt;
    const mpz_class wz = (k.capacity * Rat(d)).num();
    if (wz > kTableLimit) return std::nullopt;
    const long cap = wz.get_si() - (k.strict ? 1 : 0);
    if (cap < 0) return KnapsackResult{{}, Rat(0), true};

    const int n = static_cast<int>(k.items.size());
    std::vector<long> units(n);
    for (int i = 0; i < n; ++i) {
        const mpz_class s = (k.items[i].size * Rat(d)).num();
        units[i] = s > cap ? cap + 1 : s.get_si();
    }

    // Values over their shared denominator usually fit machine words; the
    // scaling is exact, so the integer rows pick the same table entries.
    mpz_class dv(1);
    for (const auto& it : k.items)
        mpz_lcm(dv.get_mpz_t(), dv.get_mpz_t(), it.value.den().get_mpz_t());
    std::vector<long> vunits(n);
    mpz_class vsum(0);
    for (int i = 0; i < n; ++i) {
        const mpz_class vz = k.items[i].value.num() * (dv / k.items[i].value.den());
        vsum += vz;
        vunits[i] = vz.fits_slong_p() ? vz.get_si() : 0;
    }
    std::vector<std::vector<bool>> take(n, std::vector<bool>(cap + 1, false));
    if (vsum.fits_slong_p()) {
        std::vector<long> next(cap + 1, 0), cur(cap + 1, 0);
        for (int i = n - 1; i >= 0; --i) {
            for (long c = 0; c <= cap; ++c) {
                cur[c] = next[c];
                if (units[i] <= c) {
                    const long with = vunits[i] + next[c - units[i]];
                    if (with > cur[c]) cur[c] = with;
                    take[i][c] = with == cur[c];
                }
            }
            next.swap(cur);
        }
        KnapsackResult out{{}, Rat(mpz_class(next[cap])) / Rat(dv), true};
        long rem_target = next[cap];
        long c = cap;
        for (int i = 0; i < n && rem_target > 0; ++i) {
            if (!take[i][c]) continue;
            out.chosen.push_back(i);
            rem_target -= vunits[i];
            c -= units[i];
        }
        if (rem_target != 0) throw std::logic_error("knapsack table walk mismatch");
        return out;
    }

    std::vector<Rat> next(cap + 1), cur(cap + 1);
    for (int i = n - 1; i >= 0; --i) {
        for (long c = 0; c <= cap; ++c) {
            cur[c] = next[c];
            if (units[i] <= c) {
                const Rat with = k.items[i].value + next[c - units[i]];
                if (with > cur[c]) cur[c] = with;
                take[i][c] = with == cur[c];
            }
        }
        next.swap(cur);
    }
    KnapsackResult out{{}, next[cap], true};
    Rat rem_target = out.value;
    long c = cap;
    for (int i = 0; i < n && rem_target.sign() > 0; ++i) {
        if (!take[i][c]) continue;
        out.chosen.push_back(i);
        rem_target -= k.items[i].value;
        c -= units[i];
    }
    if (rem_target.sign() != 0) throw std::logic_error("knapsack table walk mismatch");
    return out;
}

KnapsackResult greedy_knapsack(const KnapsackInstance& k) {
    KnapsackResult out{{}, Rat(0), false};
    Rat rem = k.capacity;
    for (int idx : density_order(k.items)) {
        if (!size_fits(k.items[idx].size, rem, k.strict)) continue;
        out.chosen.push_back(idx);
        rem -= k.items[idx].size;
        out.value += k.items[idx].value;
    }
    std::sort(out.chosen.begin(), out.chosen.end());
    return out;
}

}  // namespace

KnapsackResult knapsack_exact(const KnapsackInstance& k, int item_cap) {
    check_knapsack(k);
    if (static_cast<int>(k.items.size()) > item_cap) return greedy_knapsack(k);
    if (auto tab = table_knapsack(k)) return *tab;
    return branch_knapsack(k);
}

GapAssignment gap_sequential(const GapInstance& g, int item_cap) {
    const int nb = static_cast<int>(g.bins.size());
    const int ni = static_cast<int>(g.items.size());
    for (const auto& it : g.items) {
        if (static_cast<int>(it.sizes.size()) != nb || static_cast<int>(it.values.size()) != nb)
            throw std::invalid_argument("gap: item sizes/values must cover every bin");
        for (const auto& s : it.sizes)
            if (s.sign() <= 0) throw std::invalid_argument("gap: item sizes must be positive");
        for (const auto& v : it.values)
            if (v.sign() < 0) throw std::invalid_argument("gap: item values must be nonnegative");
    }
    GapAssignment out{std::vector<int>(ni, -1), Rat(0), true};
    std::vector<Rat> held(ni, Rat(0));  // value of each item's current bin
    for (int b = 0; b < nb; ++b) {
        // Residual values let a later bin steal an item from an earlier one;
        // that exchange is what gives the half guarantee.
        std::vector<int> cand;
        KnapsackInstance sub{{}, g.bins[b].capacity, g.bins[b].strict};
        for (int j = 0; j < ni; ++j) {
            const Rat gain = g.items[j].values[b] - held[j];
            if (gain.sign() <= 0) continue;
            cand.push_back(j);
            sub.items.push_back({g.items[j].sizes[b], gain});
        }
        const KnapsackResult res = knapsack_exact(sub, item_cap);
        out.exact = out.exact && res.exact;
        for (int pos : res.chosen) {
            const int j = cand[pos];
            out.bin_of[j] = b;
            held[j] = g.items[j].values[b];
        }
    }
    for (int j = 0; j < ni; ++j)
        if (out.bin_of[j] >= 0) out.value += held[j];
    return out;
}

namespace {

// Sides 0 N, 1 E, 2 S, 3 W around the center; corners 0 NE, 1 SE, 2 SW, 3 NW.
constexpr int kCornerSides[4][2] = {{0, 1}, {2, 1}, {2, 3}, {3, 0}};
// Corner sitting at the low coordinate end of each side.
constexpr int kLowCorner[4] = {3, 1, 2, 2};

Rat side_cap(const BoxDims& center, int s) { return s % 2 == 0 ? center.w : center.h; }
Rat side_extent(const BoxDims& b, int s) { return s % 2 == 0 ? b.w : b.h; }

struct StarConfig {
    std::array<int, 4> leaf{-1, -1, -1, -1};  // per corner
    std::array<int, 4> side{-1, -1, -1, -1};
};

Representation singleton_rep(const BoxDims& b) {
    return Representation{{PlacedBox{b.id, b.w, b.h, Rat(0), Rat(0)}}};
}

}  // namespace

Representation star_approx(const BoxDims& center, const std::vector<StarLeaf>& leaves,
                           int corner_cap) {
    const int n = static_cast<int>(leaves.size());
    if (center.w.sign() <= 0 || center.h.sign() <= 0)
        throw std::invalid_argument("star_approx: box dimensions must be positive");
    for (const auto& l : leaves) {
        if (l.box.w.sign() <= 0 || l.box.h.sign() <= 0)
            throw std::invalid_argument("star_approx: box dimensions must be positive");
        if (l.profit.sign() < 0)
            throw std::invalid_argument("star_approx: profits must be nonnegative");
    }

    // Corner candidates: every leaf when few, otherwise the top profits.
    std::vector<int> cand(n);
    std::iota(cand.begin(), cand.end(), 0);
    const int keep = std::clamp(corner_cap, 0, 60);
    if (n > keep) {
        std::stable_sort(cand.begin(), cand.end(),
                         [&](int a, int b) { return leaves[a].profit > leaves[b].profit; });
        cand.resize(keep);
        std::sort(cand.begin(), cand.end());
    }
    const int opts = 2 * static_cast<int>(cand.size());

    // The achievable value of a corner assignment depends only on the poker
    // set and the per-side strict/consumed flags, so solve and cache per key
    // and walk the corners recursively, pruning invalid prefixes.
    struct GapKey {
        std::uint64_t mask;
        int strict_bits, zero_bits;
        bool operator==(const GapKey&) const = default;
    };
    struct GapKeyHash {
        size_t operator()(const GapKey& k) const {
            const std::uint64_t mixed = k.mask * 0x9e3779b97f4a7c15ULL +
                                        (std::uint64_t(k.strict_bits) << 4 | std::uint64_t(k.zero_bits));
            return std::hash<std::uint64_t>()(mixed);
        }
    };
    struct Solved {
        Rat total;
        GapAssignment gap;
    };
    std::unordered_map<GapKey, Solved, GapKeyHash> memo;

    bool have = false;
    Rat best_value;
    StarConfig best_cfg;
    const GapAssignment* best_gap = nullptr;

    StarConfig cfg;
    GapKey key{0, 0, 0};
    auto eval_config = [&]() {
        auto it = memo.find(key);
        if (it == memo.end()) {
            Rat poker_profit(0);
            std::vector<bool> poked(n, false);
            for (size_t pos = 0; pos < cand.size(); ++pos)
                if (key.mask >> pos & 1) {
                    poked[cand[pos]] = true;
                    poker_profit += leaves[cand[pos]].profit;
                }
            GapInstance gi;
            for (int s = 0; s < 4; ++s)
                gi.bins.push_back({(key.zero_bits >> s & 1) ? Rat(0) : side_cap(center, s),
                                   (key.strict_bits >> s & 1) != 0});
            for (int j = 0; j < n; ++j) {
                if (poked[j]) continue;
                GapItem item;
                for (int s = 0; s < 4; ++s) {
                    item.sizes.push_back(side_extent(leaves[j].box, s));
                    item.values.push_back(leaves[j].profit);
                }
                gi.items.push_back(std::move(item));
            }
            GapAssignment ga = gap_sequential(gi);
            it = memo.emplace(key, Solved{poker_profit + ga.value, std::move(ga)}).first;
        }
        if (!have || it->second.total > best_value) {
            have = true;
            best_value = it->second.total;
            best_cfg = cfg;
            best_gap = &it->second.gap;
        }
    };
    auto walk = [&](auto&& self, int corner) -> void {
        if (corner == 4) {
            eval_config();
            return;
        }
        self(self, corner + 1);  // corner left free
        for (int o = 0; o < opts; ++o) {
            const int pos = o / 2;
            const int lf = cand[pos];
            const int sd = kCornerSides[corner][o % 2];
            bool valid = true;
            int zadd = 0;
            for (int other = 0; other < corner && valid; ++other) {
                if (cfg.leaf[other] != lf) continue;
                if (cfg.side[other] != sd)
                    valid = false;  // one box cannot reach two sides
                else if (side_extent(leaves[lf].box, sd) > side_cap(center, sd))
                    zadd |= 1 << sd;  // spans the side, both ends poked
                else
                    valid = false;
            }
            if (!valid) continue;
            const GapKey saved = key;
            cfg.leaf[corner] = lf;
            cfg.side[corner] = sd;
            key.mask |= std::uint64_t(1) << pos;
            key.strict_bits |= 1 << sd;
            key.zero_bits |= zadd;
            self(self, corner + 1);
            cfg.leaf[corner] = -1;
            cfg.side[corner] = -1;
            key = saved;
        }
    };
    walk(walk, 0);

    // Rebuild the winning layout. Pokers touch their side over a sliver of
    // length eps next to the poked end; packed boxes sit flush in between.
    Representation rep;
    rep.boxes.push_back({center.id, center.w, center.h, Rat(0), Rat(0)});

    std::array<int, 4> low_poke{-1, -1, -1, -1}, high_poke{-1, -1, -1, -1};
    std::vector<bool> poked(n, false);
    for (int corner = 0; corner < 4; ++corner) {
        const int lf = best_cfg.leaf[corner];
        if (lf < 0) continue;
        poked[lf] = true;
        const int s = best_cfg.side[corner];
        (corner == kLowCorner[s] ? low_poke[s] : high_poke[s]) = lf;
    }

    std::array<std::vector<int>, 4> side_items;
    std::vector<int> trash;
    {
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (poked[j]) continue;
            const int b = best_gap->bin_of[pos++];
            if (b >= 0)
                side_items[b].push_back(j);
            else
                trash.push_back(j);
        }
    }

    auto place = [&](int j, int s, const Rat& pos) {
        const auto& b = leaves[j].box;
        switch (s) {
            case 0: rep.boxes.push_back({b.id, b.w, b.h, pos, center.h}); break;
            case 1: rep.boxes.push_back({b.id, b.w, b.h, center.w, pos}); break;
            case 2: rep.boxes.push_back({b.id, b.w, b.h, pos, -b.h}); break;
            default: rep.boxes.push_back({b.id, b.w, b.h, -b.w, pos}); break;
        }
    };

    for (int s = 0; s < 4; ++s) {
        const Rat cap = side_cap(center, s);
        if (low_poke[s] >= 0 && low_poke[s] == high_poke[s]) {
            const Rat ext = side_extent(leaves[low_poke[s]].box, s);
            place(low_poke[s], s, (cap - ext) / Rat(2));  // spans the whole side
            continue;
        }
        Rat load(0);
        for (int j : side_items[s]) load += side_extent(leaves[j].box, s);
        const bool poked_side = low_poke[s] >= 0 || high_poke[s] >= 0;
        const Rat eps = poked_side ? (cap - load) / Rat(4) : Rat(0);
        if (low_poke[s] >= 0) place(low_poke[s], s, eps - side_extent(leaves[low_poke[s]].box, s));
        Rat cursor = eps;
        for (int j : side_items[s]) {
            place(j, s, cursor);
            cursor += side_extent(leaves[j].box, s);
        }
        if (high_poke[s] >= 0) place(high_poke[s], s, cap - eps);
    }

    if (!trash.empty()) {
        Rat xr = rep.boxes[0].right();
        for (const auto& b : rep.boxes) xr = max(xr, b.right());
        xr += Rat(1);
        Rat y(0);
        for (int j : trash) {
            const auto& b = leaves[j].box;
            rep.boxes.push_back({b.id, b.w, b.h, xr, y});
            y += b.h + Rat(1);
        }
    }
    return rep;
}

StrategyReport star_forest_approx(const SupportGraph& g, const std::vector<StarForest>& forests,
                                  int corner_cap) {
    std::multiset<std::tuple<int, int, Rat>> want, got;
    for (const auto& e : g.edges) want.insert({e.a, e.b, e.p});
    for (const auto& forest : forests) {
        std::set<int> seen;
        for (const auto& st : forest) {
            if (st.center < 0 || st.center >= g.n())
                throw std::invalid_argument("star_forest_approx: vertex out of range");
            if (!seen.insert(st.center).second)
                throw std::invalid_argument("star_forest_approx: stars of one forest share a vertex");
            for (const auto& [leaf, p] : st.leaves) {
                if (leaf < 0 || leaf >= g.n())
                    throw std::invalid_argument("star_forest_approx: vertex out of range");
                if (!seen.insert(leaf).second)
                    throw std::invalid_argument("star_forest_approx: stars of one forest share a vertex");
                got.insert({std::min(st.center, leaf), std::max(st.center, leaf), p});
            }
        }
    }
    if (want != got)
        throw std::invalid_argument("star_forest_approx: forests must partition the graph's edges");

    StrategyReport out{"starforest", {}, Rat(0), Rat(0), -1};
    bool have = false;
    for (size_t fi = 0; fi < forests.size(); ++fi) {
        std::vector<Representation> parts;
        std::vector<bool> used(g.n(), false);
        for (const auto& st : forests[fi]) {
            std::vector<StarLeaf> ls;
            used[st.center] = true;
            for (const auto& [leaf, p] : st.leaves) {
                ls.push_back({g.boxes[leaf], p});
                used[leaf] = true;
            }
            parts.push_back(star_approx(g.boxes[st.center], ls, corner_cap));
        }
        for (int v = 0; v < g.n(); ++v)
            if (!used[v]) parts.push_back(singleton_rep(g.boxes[v]));
        Representation rep = compose_disjoint(parts);
        const Rat profit = realized_profit(rep, g);
        if (!have || profit > out.profit) {
            have = true;
            out.rep = std::move(rep);
            out.profit = profit;
            out.pick = static_cast<int>(fi);
        }
    }
    if (!have) {
        std::vector<Representation> parts;
        for (const auto& b : g.boxes) parts.push_back(singleton_rep(b));
        out.rep = compose_disjoint(parts);
    }
    return out;
}

StrategyReport cycle_cover_approx(const SupportGraph& g,
                                  const std::vector<CycleCollection>& cover) {
    std::multiset<std::pair<int, int>> want, got;
    for (const auto& e : g.edges) want.insert({e.a, e.b});
    for (const auto& col : cover) {
        std::set<int> seen;
        auto eat = [&](const std::vector<int>& walk, bool closed) {
            if (static_cast<int>(walk.size()) < (closed ? 3 : 2))
                throw std::invalid_argument("cycle_cover_approx: walk too short");
            for (size_t t = 0; t < walk.size(); ++t) {
                if (walk[t] < 0 || walk[t] >= g.n())
                    throw std::invalid_argument("cycle_cover_approx: vertex out of range");
                if (!seen.insert(walk[t]).second)
                    throw std::invalid_argument("cycle_cover_approx: walks of one collection share a vertex");
                if (!closed && t + 1 == walk.size()) continue;
                const int u = walk[t], v = walk[(t + 1) % walk.size()];
                got.insert({std::min(u, v), std::max(u, v)});
            }
        };
        for (const auto& cyc : col.cycles) eat(cyc, true);
        for (const auto& path : col.paths) eat(path, false);
    }
    if (want != got)
        throw std::invalid_argument("cycle_cover_approx: collections must cover every edge exactly once");

    StrategyReport out{"cyclecover", {}, Rat(0), Rat(static_cast<long>(cover.size())), -1};
    bool have = false;
    for (size_t ci = 0; ci < cover.size(); ++ci) {
        std::vector<Representation> parts;
        std::vector<bool> used(g.n(), false);
        auto dims_of = [&](const std::vector<int>& walk) {
            std::vector<BoxDims> dims;
            for (int v : walk) {
                dims.push_back(g.boxes[v]);
                used[v] = true;
            }
            return dims;
        };
        for (const auto& cyc : cover[ci].cycles) parts.push_back(realize_cycle(dims_of(cyc)));
        for (const auto& path : cover[ci].paths) parts.push_back(realize_path(dims_of(path)));
        for (int v = 0; v < g.n(); ++v)
            if (!used[v]) parts.push_back(singleton_rep(g.boxes[v]));
        Representation rep = compose_disjoint(parts);
        const Rat profit = realized_profit(rep, g);
        if (!have || profit > out.profit) {
            have = true;
            out.rep = std::move(rep);
            out.profit = profit;
            out.pick = static_cast<int>(ci);
        }
    }
    if (!have) {
        std::vector<Representation> parts;
        for (const auto& b : g.boxes) parts.push_back(singleton_rep(b));
        out.rep = compose_disjoint(parts);
    }
    return out;
}

namespace {

bool graph_acyclic(const SupportGraph& g) {
    std::vector<int> up(g.n());
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int v) {
        while (up[v] != v) v = up[v] = up[up[v]];
        return v;
    };
    for (const auto& e : g.edges) {
        const int ra = find(e.a), rb = find(e.b);
        if (ra == rb) return false;
        up[ra] = rb;
    }
    return true;
}

// Vertex incident to every edge, -1 when none. Edge endpoints are ordered, so
// for a single edge this picks the smaller one.
int common_center(const SupportGraph& g) {
    if (g.m() == 0) return -1;
    for (int c : {g.edges[0].a, g.edges[0].b}) {
        bool ok = true;
        for (const auto& e : g.edges) ok = ok && (e.a == c || e.b == c);
        if (ok) return c;
    }
    return -1;
}

}  // namespace

StrategyReport max_wrac(const SupportGraph& g, const MaxWracOptions& opt) {
    static const std::set<std::string> kNames = {"auto",       "star",     "starforest",
                                                 "cyclecover", "extremal", "disjoint"};
    if (!kNames.count(opt.strategy))
        throw std::invalid_argument("max_wrac: unknown strategy '" + opt.strategy + "'");
    const bool all = opt.strategy == "auto";
    auto want = [&](const char* name) { return all || opt.strategy == name; };

    // Zero-profit edges cannot contribute; strategies work on the rest.
    SupportGraph h;
    h.boxes = g.boxes;
    for (const auto& e : g.edges)
        if (e.p.sign() > 0) h.edges.push_back(e);

    std::vector<StrategyReport> cands;
    auto add = [&](StrategyReport r) {
        r.profit = realized_profit(r.rep, g);
        cands.push_back(std::move(r));
    };

    if (want("disjoint")) {
        std::vector<Representation> parts;
        for (const auto& b : g.boxes) parts.push_back(singleton_rep(b));
        add({"disjoint", compose_disjoint(parts), Rat(0), Rat(0), -1});
    }
    if (want("star")) {
        const int c = common_center(h);
        if (c >= 0) {
            std::vector<StarLeaf> ls;
            std::vector<bool> used(g.n(), false);
            used[c] = true;
            for (const auto& e : h.edges) {
                const int other = e.a == c ? e.b : e.a;
                ls.push_back({g.boxes[other], e.p});
                used[other] = true;
            }
            std::vector<Representation> parts{star_approx(g.boxes[c], ls, opt.corner_cap)};
            for (int v = 0; v < g.n(); ++v)
                if (!used[v]) parts.push_back(singleton_rep(g.boxes[v]));
            add({"star", compose_disjoint(parts), Rat(0), Rat(0), -1});
        } else if (!all) {
            throw std::invalid_argument("max_wrac: edges do not form a star");
        }
    }
    if (want("starforest")) {
        if (h.m() >= 1) {
            const SupportGraph base = is_planar(h) ? h : maximal_planar_subgraph(h);
            std::vector<StarForest> forests;
            if (graph_acyclic(base)) {
                auto [even, odd] = tree_to_star_forests(base);
                forests = {std::move(even), std::move(odd)};
            } else {
                forests = planar_to_star_forests(base);
            }
            StrategyReport r = star_forest_approx(base, forests, opt.corner_cap);
            add({"starforest", std::move(r.rep), Rat(0), Rat(0), r.pick});
        } else if (!all) {
            throw std::invalid_argument("max_wrac: no positive-profit edges to decompose");
        }
    }
    if (want("cyclecover")) {
        if (h.m() >= 1) {
            int delta = 0;
            for (const auto& row : h.adjacency()) delta = std::max(delta, static_cast<int>(row.size()));
            StrategyReport r = cycle_cover_approx(h, cycle_cover(h, delta));
            add({"cyclecover", std::move(r.rep), Rat(0), r.guarantee_denom, r.pick});
        } else if (!all) {
            throw std::invalid_argument("max_wrac: no positive-profit edges to decompose");
        }
    }
    if (want("extremal")) {
        const long need = static_cast<long>(g.n()) * (g.n() - 1) / 2;
        if (g.n() >= 1 && g.m() == need) {
            add({"extremal", g.n() >= 5 ? extremal_complete(g.boxes) : extremal_small(g.boxes),
                 Rat(0), Rat(0), -1});
        } else if (!all) {
            throw std::invalid_argument("max_wrac: support is not complete");
        }
    }
    if (cands.empty()) throw std::invalid_argument("max_wrac: strategy not applicable");

    size_t best = 0;
    for (size_t i = 1; i < cands.size(); ++i) {
        if (cands[i].profit > cands[best].profit ||
            (cands[i].profit == cands[best].profit && cands[i].strategy < cands[best].strategy))
            best = i;
    }
    return std::move(cands[best]);
}

namespace {

// Pair relations for the exhaustive optimum: on one axis the first box ends
// at (touch) or before (separation) the second box's start; a touch also
// forces strict overlap on the perpendicular axis, so a touch claims the
// pair's profit exactly and a separation claims nothing.
struct PairRel {
    int axis;    // 0 = x, 1 = y
    int dir;     // 0: i before j, 1: j before i
    bool touch;
};

constexpr PairRel kTouchRels[4] = {{0, 0, true}, {0, 1, true}, {1, 0, true}, {1, 1, true}};
constexpr PairRel kSepRels[4] = {{0, 0, false}, {0, 1, false}, {1, 0, false}, {1, 1, false}};

struct PairCase {
    int i, j;
    Rat p;
    bool edge;
};

struct ProfileSearch {
    const SupportGraph& g;
    std::vector<PairCase> pairs;
    std::vector<Rat> rem;  // rem[t]: profit still claimable from pair t on
    std::vector<DiffConstraint> xc, yc;
    Rat best{0};

    Rat extent(int v, int axis) const { return axis == 0 ? g.boxes[v].w : g.boxes[v].h; }

    void attempt(size_t t, const Rat& cur, const PairRel& r) {
        const auto& pc = pairs[t];
        const int u = r.dir == 0 ? pc.i : pc.j;
        const int v = r.dir == 0 ? pc.j : pc.i;
        auto& main = r.axis == 0 ? xc : yc;
        auto& perp = r.axis == 0 ? yc : xc;
        const size_t mn = main.size(), pn = perp.size();
        main.push_back({u, v, -extent(u, r.axis), false});
        if (r.touch) {
            main.push_back({v, u, extent(u, r.axis), false});
            perp.push_back({u, v, extent(v, 1 - r.axis), true});
            perp.push_back({v, u, extent(u, 1 - r.axis), true});
        }
        // Only the grown system needs a re-check; the other was feasible.
        const bool ok = solve_difference_constraints(g.n(), main).ok() &&
                        (!r.touch || solve_difference_constraints(g.n(), perp).ok());
        if (ok) run(t + 1, r.touch ? cur + pc.p : cur);
        main.resize(mn);
        perp.resize(pn);
    }

    void run(size_t t, const Rat& cur) {
        if (t == pairs.size()) {
            if (cur > best) best = cur;
            return;
        }
        if (cur + rem[t] <= best) return;
        // Mirroring along either axis preserves contacts, so the very first
        // pair only needs the i-before-j direction.
        const bool first = t == 0;
        if (pairs[t].edge)
            for (const auto& r : kTouchRels)
                if (!(first && r.dir == 1)) attempt(t, cur, r);
        for (const auto& r : kSepRels)
            if (!(first && r.dir == 1)) attempt(t, cur, r);
    }
};

}  // namespace

Rat brute_force_opt(const SupportGraph& g, int max_n) {
    const int n = g.n();
    if (n > max_n) throw std::invalid_argument("brute_force_opt: instance too large");
    if (n < 2) return Rat(0);

    std::map<std::pair<int, int>, Rat> profit;
    for (const auto& e : g.edges) profit[{e.a, e.b}] = e.p;
    ProfileSearch search{g, {}, {}, {}, {}, Rat(0)};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto it = profit.find({i, j});
            search.pairs.push_back(
                {i, j, it == profit.end() ? Rat(0) : it->second, it != profit.end()});
        }
    std::stable_sort(search.pairs.begin(), search.pairs.end(), [](const PairCase& a, const PairCase& b) {
        if (a.edge != b.edge) return a.edge;
        return a.p > b.p;
    });
    search.rem.assign(search.pairs.size() + 1, Rat(0));
    for (size_t t = search.pairs.size(); t-- > 0;)
        search.rem[t] = search.rem[t + 1] + search.pairs[t].p;

    search.run(0, Rat(0));
    return search.best;
}

}  // namespace wrac
