#include "core/eval.hpp"

namespace wrac {

EvalReport evaluate(const SupportGraph& g, const Representation& rep) {
    EvalReport r;
    r.profit = realized_profit(rep, g);
    r.total = g.total_profit();
    r.planar_total = maximal_planar_subgraph(g).total_profit();
    r.contact_count = static_cast<int>(contacts(rep).size());
    r.realized_edges = 0;
    for (const auto& e : g.edges) {
        const int i = rep.find(g.boxes[e.a].id);
        const int j = rep.find(g.boxes[e.b].id);
        if (i >= 0 && j >= 0 && boxes_touch(rep.boxes[i], rep.boxes[j])) ++r.realized_edges;
    }
    r.percent_of_total = r.total.sign() > 0 ? Rat(100) * r.profit / r.total : Rat(0);
    r.percent_of_planar = r.planar_total.sign() > 0 ? Rat(100) * r.profit / r.planar_total : Rat(0);
    return r;
}

}  // namespace wrac
