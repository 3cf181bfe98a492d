#include "wrac/wrac.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/constructive.hpp"
#include "core/eval.hpp"
#include "core/generators.hpp"
#include "core/hierarchy.hpp"
#include "core/io.hpp"
#include "core/optimize.hpp"
#include "core/realize_quasi.hpp"
#include "core/render.hpp"
#include "core/support_graph.hpp"
#include "core/textpipe.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace wrac;

struct wrac_ctx {
    std::string error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** slot, const std::string& s) {
    if (slot) *slot = dup_string(s);
}

void set_error(wrac_ctx* ctx, const std::string& msg) {
    if (ctx) ctx->error = msg;
}

template <class F>
wrac_status guarded(wrac_ctx* ctx, F&& body) {
    set_error(ctx, "");
    try {
        return body();
    } catch (const ParseError& e) {
        set_error(ctx, e.what());
        return WRAC_ERR_PARSE;
    } catch (const json::exception& e) {
        set_error(ctx, e.what());
        return WRAC_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        set_error(ctx, e.what());
        return WRAC_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(ctx, e.what());
        return WRAC_ERR_INTERNAL;
    }
}

json parse_params(const char* text, const char* what) {
    if (!text || !*text) return json::object();
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    return j;
}

long int_param(const json& j, const char* key, long fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer())
        throw std::invalid_argument(std::string(key) + ": expected an integer");
    return j.at(key).get<long>();
}

std::string str_param(const json& j, const char* key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_string())
        throw std::invalid_argument(std::string(key) + ": expected a string");
    return j.at(key).get<std::string>();
}

Rat rat_param(const json& j, const char* key, const Rat& fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    std::optional<Rat> r;
    if (v.is_string())
        r = Rat::parse(v.get<std::string>());
    else if (v.is_number_integer())
        r = Rat::parse(std::to_string(v.get<long long>()));
    if (!r)
        throw std::invalid_argument(std::string(key) +
                                    ": expected a rational as \"num\" or \"num/den\"");
    return *r;
}

json rep_to_json(const Representation& rep) { return json::parse(serialize_representation(rep)); }

json instance_to_json(const SupportGraph& g) { return json::parse(serialize_instance({g, {}})); }

json eval_to_json(const EvalReport& r) {
    return json{{"profit", r.profit.str()},
                {"total", r.total.str()},
                {"planar_total", r.planar_total.str()},
                {"percent_of_total", decimal_string(r.percent_of_total)},
                {"percent_of_planar", decimal_string(r.percent_of_planar)},
                {"contacts", r.contact_count},
                {"realized_edges", r.realized_edges}};
}

CloudConfig cloud_config(const json& j) {
    CloudConfig c;
    c.top_k = static_cast<int>(int_param(j, "top_k", c.top_k));
    c.base_size = rat_param(j, "base_size", c.base_size);
    c.char_width = rat_param(j, "char_width", c.char_width);
    c.line_height = rat_param(j, "line_height", c.line_height);
    c.threshold = rat_param(j, "threshold", c.threshold);
    c.stopwords = str_param(j, "stopwords", c.stopwords);
    return c;
}

const char* need(const char* arg, const char* what) {
    if (!arg) throw std::invalid_argument(std::string(what) + ": null argument");
    return arg;
}

void need_slot(char** slot, const char* what) {
    if (!slot) throw std::invalid_argument(std::string(what) + ": null output slot");
    *slot = nullptr;
}

}  // namespace

extern "C" {

const char* wrac_version(void) { return "0.1.0"; }

wrac_ctx* wrac_ctx_new(void) { return new (std::nothrow) wrac_ctx(); }

void wrac_ctx_free(wrac_ctx* ctx) { delete ctx; }

const char* wrac_ctx_error(const wrac_ctx* ctx) { return ctx ? ctx->error.c_str() : ""; }

void wrac_string_free(char* s) { std::free(s); }

wrac_status wrac_realize_quasi(wrac_ctx* ctx, const char* instance_json, char** out_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(out_json, "realize");
        const Instance in = parse_instance(need(instance_json, "realize"));
        if (in.outer.size() != 4)
            throw std::invalid_argument("realize: instance must name the four outer boxes");
        const auto emb = planar_embedding(in.g);
        if (!emb) throw std::invalid_argument("realize: instance is not planar");
        const QuasiResult res = realize_quasi_triangulated(in.g, *emb, in.outer);
        if (res.ok()) {
            put(out_json, serialize_representation(*res.rep));
            return WRAC_OK;
        }
        json cert{{"step", res.infeasible.step}, {"detail", res.infeasible.detail}};
        cert["frontier"] = json::array();
        for (const Concavity& c : res.infeasible.frontier) {
            json pt{{"x", c.x.str()}, {"y", c.y.str()}};
            pt["above"] = c.above >= 0 ? json(in.g.boxes[c.above].id) : json();
            pt["below"] = c.below >= 0 ? json(in.g.boxes[c.below].id) : json();
            cert["frontier"].push_back(pt);
        }
        put(out_json, cert.dump(2));
        set_error(ctx, res.infeasible.detail);
        return WRAC_ERR_INFEASIBLE;
    });
}

wrac_status wrac_hierarchy_solve(wrac_ctx* ctx, const char* hi_json, char** out_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(out_json, "hierarchy");
        const HiInstance hi = parse_hi_instance(need(hi_json, "hierarchy"));
        const HiResult res = hi_wrac(hi);
        if (res.ok()) {
            put(out_json, serialize_representation(*res.rep));
            return WRAC_OK;
        }
        json cert{{"phase", res.infeasible.phase},
                  {"detail", res.infeasible.detail},
                  {"degenerate_only", res.tightening_flipped}};
        cert["vertex"] =
            res.infeasible.vertex >= 0 ? json(hi.boxes[res.infeasible.vertex].id) : json();
        cert["cycle"] = json::array();
        for (const DiffConstraint& c : res.infeasible.cycle)
            cert["cycle"].push_back({{"u", hi.boxes[c.u].id},
                                     {"v", hi.boxes[c.v].id},
                                     {"bound", c.c.str()},
                                     {"strict", c.strict}});
        put(out_json, cert.dump(2));
        set_error(ctx, res.infeasible.detail);
        return WRAC_ERR_INFEASIBLE;
    });
}

wrac_status wrac_maximize(wrac_ctx* ctx, const char* instance_json, const char* options_json,
                          char** report_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(report_json, "maximize");
        const Instance in = parse_instance(need(instance_json, "maximize"));
        const json opts = parse_params(options_json, "maximize options");
        MaxWracOptions mo;
        mo.strategy = str_param(opts, "strategy", mo.strategy);
        mo.corner_cap = static_cast<int>(int_param(opts, "corner_cap", mo.corner_cap));
        const StrategyReport r = max_wrac(in.g, mo);
        json out{{"strategy", r.strategy},
                 {"pick", r.pick},
                 {"guarantee_denom", r.guarantee_denom.str()},
                 {"representation", rep_to_json(r.rep)},
                 {"eval", eval_to_json(evaluate(in.g, r.rep))}};
        put(report_json, out.dump(2));
        return WRAC_OK;
    });
}

wrac_status wrac_extremal(wrac_ctx* ctx, const char* instance_json, char** rep_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(rep_json, "extremal");
        const Instance in = parse_instance(need(instance_json, "extremal"));
        if (in.g.boxes.empty()) throw std::invalid_argument("extremal: no boxes");
        const Representation rep = in.g.n() <= 4 ? extremal_small(in.g.boxes)
                                                 : extremal_complete(in.g.boxes);
        put(rep_json, serialize_representation(rep));
        return WRAC_OK;
    });
}

wrac_status wrac_generate(wrac_ctx* ctx, const char* kind, const char* params_json,
                          char** out_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(out_json, "generate");
        const std::string what = need(kind, "generate");
        const json params = parse_params(params_json, "generate params");
        json out;
        if (what == "3part") {
            ThreePartitionInput tp;
            if (!params.contains("s") || !params.at("s").is_array())
                throw std::invalid_argument("3part: need \"s\" as an integer array");
            for (const json& v : params.at("s")) {
                if (!v.is_number_integer())
                    throw std::invalid_argument("3part: s entries must be integers");
                tp.s.push_back(v.get<long>());
            }
            tp.B = int_param(params, "B", 0);
            out["instance"] = instance_to_json(gen_three_partition_tree(tp));
            const ThreePartitionInput scaled = scaled_three_partition(tp);
            out["provenance"] = {{"m", static_cast<long>(tp.s.size()) / 3},
                                 {"B", tp.B},
                                 {"scaled_B", scaled.B},
                                 {"scale", scaled.B / tp.B}};
            if (params.contains("partition")) {
                if (!params.at("partition").is_array())
                    throw std::invalid_argument("3part: \"partition\" must be an array of triples");
                std::vector<std::array<int, 3>> triples;
                for (const json& t : params.at("partition")) {
                    if (!t.is_array() || t.size() != 3)
                        throw std::invalid_argument("3part: each partition entry needs 3 indices");
                    std::array<int, 3> tri{};
                    for (int i = 0; i < 3; ++i) {
                        if (!t[i].is_number_integer())
                            throw std::invalid_argument("3part: partition indices must be integers");
                        tri[i] = t[i].get<int>();
                    }
                    triples.push_back(tri);
                }
                out["witness"] = rep_to_json(witness_three_partition(tp, triples));
            }
        } else if (what == "knapstar") {
            KnapsackReductionInput in;
            if (!params.contains("items") || !params.at("items").is_array())
                throw std::invalid_argument("knapstar: need an \"items\" array");
            for (const json& it : params.at("items")) {
                if (!it.is_object())
                    throw std::invalid_argument("knapstar: items must be objects with w and p");
                in.items.push_back(
                    {rat_param(it, "w", Rat(0)), rat_param(it, "p", Rat(0))});
            }
            in.capacity = rat_param(params, "capacity", Rat(0));
            in.target = rat_param(params, "target", Rat(0));
            const KnapsackStarResult res = gen_knapsack_star(in);
            out["instance"] = instance_to_json(res.star);
            out["provenance"] = {{"target", res.target.str()}};
        } else if (what == "strippath") {
            StripPackingInput sp;
            if (!params.contains("rects") || !params.at("rects").is_array())
                throw std::invalid_argument("strippath: need a \"rects\" array of [w, h] pairs");
            for (const json& r : params.at("rects")) {
                if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
                    !r[1].is_number_integer())
                    throw std::invalid_argument("strippath: each rect is an integer [w, h] pair");
                sp.rects.emplace_back(r[0].get<long>(), r[1].get<long>());
            }
            sp.strip_width = int_param(params, "strip_width", 0);
            sp.height_bound = int_param(params, "height_bound", 0);
            sp.epsilon = rat_param(params, "epsilon", sp.epsilon);
            const long max_boxes = int_param(params, "max_boxes", 1000000);
            const StripPathResult r = gen_strip_packing_path(sp);
            out["instance"] = instance_to_json(materialize_strip_path(r, max_boxes));
            out["provenance"] = {{"d", r.grid_gap.str()},
                                 {"x", r.connector_side.str()},
                                 {"k", r.connectors_per_run.str()},
                                 {"runs", r.runs},
                                 {"epsilon_used", r.epsilon_used.str()},
                                 {"stretched_width", r.stretched_width.str()},
                                 {"stretched_height", r.stretched_height.str()}};
        } else if (what == "expsquares") {
            const long n = int_param(params, "n", 0);
            SupportGraph g;
            g.boxes = gen_exponential_squares(static_cast<int>(n));
            for (int i = 0; i < g.n(); ++i)
                for (int j = i + 1; j < g.n(); ++j) g.edges.push_back({i, j, Rat(1)});
            out["instance"] = instance_to_json(g);
            json sides = json::array();
            for (const BoxDims& b : g.boxes) sides.push_back(b.w.str());
            out["provenance"] = {{"sides", sides}};
        } else {
            set_error(ctx, "generate: unknown kind '" + what + "'");
            return WRAC_ERR_UNSUPPORTED;
        }
        put(out_json, out.dump(2));
        return WRAC_OK;
    });
}

wrac_status wrac_oracle_opt(wrac_ctx* ctx, const char* instance_json, int max_n,
                            char** out_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(out_json, "oracle");
        const Instance in = parse_instance(need(instance_json, "oracle"));
        const Rat opt = brute_force_opt(in.g, max_n > 0 ? max_n : 5);
        put(out_json, json{{"opt", opt.str()}}.dump(2));
        return WRAC_OK;
    });
}

wrac_status wrac_evaluate(wrac_ctx* ctx, const char* instance_json, const char* rep_json,
                          char** report_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(report_json, "evaluate");
        const Instance in = parse_instance(need(instance_json, "evaluate"));
        const Representation rep = parse_representation(need(rep_json, "evaluate"));
        put(report_json, eval_to_json(evaluate(in.g, rep)).dump(2));
        return WRAC_OK;
    });
}

wrac_status wrac_render_svg(wrac_ctx* ctx, const char* rep_json, const char* labels_json,
                            int contact_overlay, char** svg) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(svg, "render");
        const Representation rep = parse_representation(need(rep_json, "render"));
        std::map<std::string, std::string> labels;
        const json lj = parse_params(labels_json, "render labels");
        for (const auto& [key, value] : lj.items()) {
            if (!value.is_string())
                throw std::invalid_argument("render labels: values must be strings");
            labels[key] = value.get<std::string>();
        }
        RenderOptions opt;
        opt.contact_overlay = contact_overlay != 0;
        put(svg, to_svg(rep, labels, opt));
        return WRAC_OK;
    });
}

wrac_status wrac_text_to_instance(wrac_ctx* ctx, const char* text, const char* config_json,
                                  char** instance_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(instance_json, "text_to_instance");
        const CloudConfig config = cloud_config(parse_params(config_json, "cloud config"));
        const auto stats = ingest(need(text, "text_to_instance"), config);
        put(instance_json, serialize_instance({similarity_profits(stats, config), {}}));
        return WRAC_OK;
    });
}

wrac_status wrac_cloud(wrac_ctx* ctx, const char* text, const char* config_json, char** svg,
                       char** report_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(svg, "cloud");
        need_slot(report_json, "cloud");
        const json cj = parse_params(config_json, "cloud config");
        const CloudConfig config = cloud_config(cj);
        const auto stats = ingest(need(text, "cloud"), config);
        const SupportGraph g = similarity_profits(stats, config);
        const SupportGraph planar = maximal_planar_subgraph(g);
        MaxWracOptions mo;
        mo.strategy = "starforest";
        mo.corner_cap = static_cast<int>(int_param(cj, "corner_cap", mo.corner_cap));
        const StrategyReport r = max_wrac(planar, mo);

        std::map<std::string, std::string> labels;
        for (const TermStats& t : stats) labels[t.stem] = t.surface;
        put(svg, to_svg(r.rep, labels));

        json report = eval_to_json(evaluate(g, r.rep));
        report["terms"] = g.n();
        report["edges"] = g.m();
        report["planar_edges"] = planar.m();
        report["strategy"] = r.strategy;
        put(report_json, report.dump(2));
        return WRAC_OK;
    });
}

wrac_status wrac_bundled_text_ids(wrac_ctx* ctx, char** ids_json) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(ids_json, "bundled_text_ids");
        json ids = json::array();
        for (const std::string& id : bundled_text_ids()) ids.push_back(id);
        put(ids_json, ids.dump());
        return WRAC_OK;
    });
}

wrac_status wrac_bundled_text(wrac_ctx* ctx, const char* id, char** text) {
    return guarded(ctx, [&]() -> wrac_status {
        need_slot(text, "bundled_text");
        put(text, bundled_text(need(id, "bundled_text")));
        return WRAC_OK;
    });
}

}  // extern "C"
