#include "core/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace wrac {

namespace {

struct Adjacency {
    std::vector<std::vector<int>> out, in;
};

Adjacency adjacency_of(const HiInstance& inst) {
    const int n = static_cast<int>(inst.boxes.size());
    Adjacency adj;
    adj.out.resize(n);
    adj.in.resize(n);
    for (const auto& [a, b] : inst.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge references unknown box");
        adj.out[a].push_back(b);
        adj.in[b].push_back(a);
    }
    return adj;
}

void check_rotation_lists(const HiInstance& inst, const Adjacency& adj) {
    const int n = static_cast<int>(inst.boxes.size());
    if (static_cast<int>(inst.rot.size()) != n)
        throw std::invalid_argument("rotation must list every box");
    for (int v = 0; v < n; ++v) {
        std::vector<int> want = adj.out[v];
        want.insert(want.end(), adj.in[v].begin(), adj.in[v].end());
        std::vector<int> got = inst.rot[v];
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got) throw std::invalid_argument("rotation does not match the edge set");
    }
}

}  // namespace

std::optional<HiInfeasible> check_orientation(const HiInstance& inst) {
    const int n = static_cast<int>(inst.boxes.size());
    Adjacency adj = adjacency_of(inst);
    check_rotation_lists(inst, adj);
    if (n == 0) return std::nullopt;

    for (const auto& [a, b] : inst.edges)
        if (a == b) return HiInfeasible{"orientation", "edges contain a directed cycle", a, {}};

    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(adj.in[v].size());
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    std::vector<char> done(n, 0);
    int processed = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        done[v] = 1;
        ++processed;
        for (int u : adj.out[v])
            if (--indeg[u] == 0) q.push(u);
    }
    if (processed < n) {
        int witness = 0;
        while (done[witness]) ++witness;
        return HiInfeasible{"orientation", "edges contain a directed cycle", witness, {}};
    }

    std::vector<int> sinks;
    for (int v = 0; v < n; ++v)
        if (adj.out[v].empty()) sinks.push_back(v);
    if (sinks.size() != 1) {
        return HiInfeasible{"orientation",
                            "expected exactly one box without outgoing edges, found " +
                                std::to_string(sinks.size()),
                            sinks.size() > 1 ? sinks[1] : -1,
                            {}};
    }

    for (int v = 0; v < n; ++v) {
        const auto& rot = inst.rot[v];
        const int k = static_cast<int>(rot.size());
        if (k < 3) continue;
        std::vector<char> is_out(k);
        for (int p = 0; p < k; ++p)
            is_out[p] = std::find(adj.out[v].begin(), adj.out[v].end(), rot[p]) != adj.out[v].end();
        int transitions = 0;
        for (int p = 0; p < k; ++p) transitions += is_out[p] != is_out[(p + 1) % k];
        if (transitions > 2) {
            return HiInfeasible{
                "orientation", "incoming and outgoing edges interleave around a box", v, {}};
        }
    }
    return std::nullopt;
}

RotBlocks split_rotation(const HiInstance& inst, int v) {
    Adjacency adj = adjacency_of(inst);
    const auto& rot = inst.rot[v];
    const int k = static_cast<int>(rot.size());
    std::vector<char> is_out(k);
    bool mixed_in = false, mixed_out = false;
    for (int p = 0; p < k; ++p) {
        is_out[p] = std::find(adj.out[v].begin(), adj.out[v].end(), rot[p]) != adj.out[v].end();
        (is_out[p] ? mixed_out : mixed_in) = true;
    }
    RotBlocks blocks;
    if (!mixed_in || !mixed_out) {
        auto& side = mixed_out ? blocks.outs : blocks.ins;
        side = rot;
        return blocks;
    }
    int start = 0;
    while (!(is_out[(start + k - 1) % k] && !is_out[start])) ++start;
    for (int p = 0; p < k; ++p) {
        int q = (start + p) % k;
        (is_out[q] ? blocks.outs : blocks.ins).push_back(rot[q]);
    }
    return blocks;
}

VerticalResult assign_vertical(const HiInstance& inst) {
    const int n = static_cast<int>(inst.boxes.size());
    Adjacency adj = adjacency_of(inst);
    if (n == 0) return {VerticalCoords{}, -1};

    int sink = -1;
    for (int v = 0; v < n; ++v)
        if (adj.out[v].empty()) sink = v;

    std::vector<Rat> low(n);
    std::vector<char> set(n, 0);
    low[sink] = Rat(0);
    set[sink] = 1;
    std::queue<int> q;
    q.push(sink);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj.out[v]) {
            if (set[u]) continue;
            low[u] = low[v] + inst.boxes[v].h;
            set[u] = 1;
            q.push(u);
        }
        for (int u : adj.in[v]) {
            if (set[u]) continue;
            low[u] = low[v] - inst.boxes[u].h;
            set[u] = 1;
            q.push(u);
        }
    }

    // Single-sink instances are connected through the sink only when every
    // box has a path to it; an acyclic graph with one sink guarantees that.
    for (const auto& [a, b] : inst.edges)
        if (low[a] + inst.boxes[a].h != low[b]) return {std::nullopt, b};

    Rat shift = low[0];
    for (int v = 1; v < n; ++v) shift = min(shift, low[v]);
    VerticalCoords vc;
    vc.low.resize(n);
    vc.high.resize(n);
    for (int v = 0; v < n; ++v) {
        vc.low[v] = low[v] - shift;
        vc.high[v] = vc.low[v] + inst.boxes[v].h;
    }
    return {vc, -1};
}

std::vector<std::pair<int, int>> left_right_relation(const HiInstance& inst,
                                                     const VerticalCoords& vc) {
    const int n = static_cast<int>(inst.boxes.size());
    std::vector<RotBlocks> blocks(n);
    std::vector<std::map<int, int>> in_pos(n);
    for (int v = 0; v < n; ++v) {
        blocks[v] = split_rotation(inst, v);
        for (int p = 0; p < static_cast<int>(blocks[v].ins.size()); ++p)
            in_pos[v][blocks[v].ins[p]] = p;
    }

    auto walk = [&](int v, bool leftmost) {
        std::vector<int> path{v};
        while (!blocks[path.back()].outs.empty()) {
            const auto& outs = blocks[path.back()].outs;
            path.push_back(leftmost ? outs.front() : outs.back());
        }
        return path;
    };
    std::vector<std::vector<int>> lpath(n), rpath(n);
    for (int v = 0; v < n; ++v) {
        lpath[v] = walk(v, true);
        rpath[v] = walk(v, false);
    }

    // At the join of two leftmost paths the box entering later in the
    // incoming block lies further left (ins run right to left); at the join
    // of two rightmost paths the earlier entry lies further right.
    std::set<std::pair<int, int>> rel;
    auto join = [&](int i, int j, const std::vector<std::vector<int>>& paths, bool left_join) {
        std::map<int, int> where;
        for (int p = 0; p < static_cast<int>(paths[j].size()); ++p) where[paths[j][p]] = p;
        for (int k = 0; k < static_cast<int>(paths[i].size()); ++k) {
            auto it = where.find(paths[i][k]);
            if (it == where.end()) continue;
            if (k == 0 || it->second == 0) return;  // one box lies on the other's path
            int v = paths[i][k];
            int pi = in_pos[v].at(paths[i][k - 1]);
            int pj = in_pos[v].at(paths[j][it->second - 1]);
            if (left_join)
                rel.insert(pi > pj ? std::make_pair(i, j) : std::make_pair(j, i));
            else
                rel.insert(pi < pj ? std::make_pair(j, i) : std::make_pair(i, j));
            return;
        }
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (max(vc.low[i], vc.low[j]) >= min(vc.high[i], vc.high[j])) continue;
            join(i, j, lpath, true);
            join(i, j, rpath, false);
        }
    }
    return {rel.begin(), rel.end()};
}

HorizontalSystem build_horizontal(const HiInstance& inst,
                                  const std::vector<std::pair<int, int>>& left_of,
                                  const Rat& mu) {
    HorizontalSystem sys;
    sys.n = static_cast<int>(inst.boxes.size());
    for (const auto& [a, b] : left_of) sys.cons.push_back({a, b, -inst.boxes[a].w});
    for (const auto& [i, j] : inst.edges) {
        sys.cons.push_back({j, i, inst.boxes[i].w - mu});
        sys.cons.push_back({i, j, inst.boxes[j].w - mu});
    }
    return sys;
}

DiffSolution solve_horizontal(const HorizontalSystem& sys) {
    return solve_difference_constraints(sys.n, sys.cons);
}

HiResult hi_wrac(const HiInstance& inst) {
    HiResult out;
    const int n = static_cast<int>(inst.boxes.size());
    if (n == 0) {
        out.rep = Representation{};
        return out;
    }

    if (auto bad = check_orientation(inst)) {
        out.infeasible = *bad;
        return out;
    }
    VerticalResult vert = assign_vertical(inst);
    if (!vert.ok()) {
        out.infeasible =
            HiInfeasible{"vertical", "edges force two different bottom edges", vert.conflict, {}};
        return out;
    }
    const VerticalCoords& vc = *vert.coords;
    auto left_of = left_right_relation(inst, vc);

    Rat min_w = inst.boxes[0].w;
    for (const auto& b : inst.boxes) min_w = min(min_w, b.w);
    Rat mu = min_w / Rat(2 * n);

    HorizontalSystem tight = build_horizontal(inst, left_of, mu);
    DiffSolution sol = solve_horizontal(tight);
    if (!sol.ok()) {
        out.infeasible.phase = "horizontal";
        out.infeasible.detail = "no x-placement satisfies the contact and ordering constraints";
        for (int idx : sol.cycle) out.infeasible.cycle.push_back(tight.cons[idx]);
        DiffSolution loose = solve_horizontal(build_horizontal(inst, left_of, Rat(0)));
        out.tightening_flipped = loose.ok();
        return out;
    }

    Representation rep;
    rep.boxes.resize(n);
    for (int v = 0; v < n; ++v)
        rep.boxes[v] = PlacedBox{inst.boxes[v].id, inst.boxes[v].w, inst.boxes[v].h, (*sol.x)[v],
                                 vc.low[v]};
    out.rep = std::move(rep);
    return out;
}

}  // namespace wrac
