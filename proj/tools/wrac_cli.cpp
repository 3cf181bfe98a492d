#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wrac/wrac.h"

using nlohmann::json;

namespace {

int log_level() {
    const char* env = std::getenv("WRAC_LOG");
    if (!env || !*env) return 0;
    return std::string(env) == "debug" ? 2 : 1;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[wrac] " << msg << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

// Session around the C interface; frees output strings on take().
struct Api {
    wrac_ctx* ctx = wrac_ctx_new();
    ~Api() { wrac_ctx_free(ctx); }

    std::string take(char* s) {
        std::string out = s ? s : "";
        wrac_string_free(s);
        return out;
    }

    std::string error() const { return wrac_ctx_error(ctx); }
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << "\n";
    } else {
        write_file(out_path, content);
        log_info("wrote " + out_path);
    }
}

// Result or certificate goes to --out / stdout; exit mirrors the status:
// 0 solved, 2 infeasible with certificate, 1 anything else.
int finish_solver(Api& api, wrac_status st, char* payload, const std::string& out_path,
                  const std::string& what) {
    const std::string body = api.take(payload);
    if (st == WRAC_OK) {
        emit(out_path, body);
        return 0;
    }
    if (st == WRAC_ERR_INFEASIBLE) {
        emit(out_path, body);
        std::cerr << what << ": infeasible: " << api.error() << "\n";
        return 2;
    }
    std::cerr << what << ": " << api.error() << "\n";
    return 1;
}

int fail(Api& api, const std::string& what) {
    std::cerr << what << ": " << api.error() << "\n";
    return 1;
}

std::string params_text(const std::string& params) {
    if (params.empty()) return "{}";
    if (params.front() == '{') return params;
    return read_file(params);
}

// Instance files may be generator bundles {"instance": ..., "provenance": ...};
// unwrap so gen output feeds the solvers directly. Malformed JSON passes
// through untouched and gets the library's parse diagnostics.
std::string instance_text(const std::string& path) {
    std::string text = read_file(path);
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_object() && doc.contains("instance")) return doc.at("instance").dump();
    return text;
}

std::string format_rows(const json& rows, const std::string& format,
                        const std::vector<std::string>& columns) {
    if (format == "json") return rows.dump(2);
    std::ostringstream out;
    if (format == "csv") {
        for (size_t c = 0; c < columns.size(); ++c)
            out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
        for (const json& row : rows) {
            for (size_t c = 0; c < columns.size(); ++c)
                out << row.at(columns[c]).get<std::string>()
                    << (c + 1 < columns.size() ? "," : "\n");
        }
        return out.str();
    }
    // Markdown table.
    out << "|";
    for (const auto& c : columns) out << " " << c << " |";
    out << "\n|";
    for (const auto& c : columns) out << std::string(c.size() + 2, '-') << "|";
    out << "\n";
    for (const json& row : rows) {
        out << "|";
        for (const auto& c : columns) out << " " << row.at(c).get<std::string>() << " |";
        out << "\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contact representations of word clouds"};
    app.set_version_flag("--version", wrac_version());
    app.require_subcommand(1);

    unsigned long seed = 0;
    app.add_option("--seed", seed, "Seed for randomized steps (all current paths are "
                                   "deterministic; accepted for reproducibility contracts)")
        ->capture_default_str();

    std::string instance_path, rep_path, out_path, strategy = "auto", params = "{}";
    int corner_cap = 12, oracle_max_n = 0;

    auto* realize = app.add_subcommand("realize", "Contact representation of a "
                                                  "quasi-triangulated instance");
    realize->add_option("--instance", instance_path, "Instance JSON (boxes, edges, outer)")
        ->required();
    realize->add_option("--out", out_path, "Write the drawing or certificate here");

    auto* hierarchy = app.add_subcommand("hierarchy", "Drawing of an embedded single-sink DAG");
    hierarchy->add_option("--instance", instance_path, "Instance JSON (boxes, edges, rotation)")
        ->required();
    hierarchy->add_option("--out", out_path, "Write the drawing or certificate here");

    auto* maximize = app.add_subcommand("maximize", "Profit-maximizing layout");
    maximize->add_option("--instance", instance_path, "Instance JSON")->required();
    maximize->add_option("--strategy", strategy,
                         "auto | star | starforest | cyclecover | extremal | disjoint")
        ->capture_default_str();
    maximize->add_option("--corner-cap", corner_cap, "Corner-poking candidates per star")
        ->capture_default_str();
    maximize->add_option("--oracle-max-n", oracle_max_n,
                         "Also report the exhaustive optimum for instances up to this size");
    maximize->add_option("--out", out_path, "Write the report here");

    auto* extremal = app.add_subcommand("extremal", "Contact-maximizing layout of the boxes");
    extremal->add_option("--instance", instance_path, "Instance JSON (edges ignored)")
        ->required();
    extremal->add_option("--out", out_path, "Write the drawing here");

    std::string gen_kind;
    auto* gen = app.add_subcommand("gen", "Instance generators");
    gen->add_option("kind", gen_kind, "3part | knapstar | strippath | expsquares")->required();
    gen->add_option("--params", params, "Parameter JSON, inline or a file path")
        ->capture_default_str();
    gen->add_option("--out", out_path, "Write the instance bundle here");

    auto* eval = app.add_subcommand("eval", "Score a representation against an instance");
    eval->add_option("--instance", instance_path, "Instance JSON")->required();
    eval->add_option("--rep", rep_path, "Representation JSON")->required();
    eval->add_option("--out", out_path, "Write the report here");

    std::string cloud_file, bundled_id, emit_instance, svg_path = "cloud.svg";
    std::string threshold = "1/10", base_size = "10";
    int top_k = 100;
    auto* cloud = app.add_subcommand("cloud", "Word cloud from text: ingest, similarity, "
                                              "planar subgraph, star forests, SVG");
    cloud->add_option("textfile", cloud_file, "UTF-8 text file");
    cloud->add_option("--bundled", bundled_id, "Use a bundled sample text instead of a file");
    cloud->add_option("--out", svg_path, "SVG output path")->capture_default_str();
    cloud->add_option("--emit-instance", emit_instance, "Also dump the intermediate instance");
    cloud->add_option("--top-k", top_k, "Terms kept")->capture_default_str();
    cloud->add_option("--threshold", threshold, "Similarity floor")->capture_default_str();
    cloud->add_option("--base-size", base_size, "Font size at frequency 1")
        ->capture_default_str();
    cloud->add_option("--corner-cap", corner_cap, "Corner-poking candidates per star")
        ->capture_default_str();

    std::string suite = "bundled", format = "md", artifacts_dir;
    std::vector<std::string> strategies{"starforest", "cyclecover"};
    auto* bench = app.add_subcommand("bench", "Realized-profit table over a text suite");
    bench->add_option("--suite", suite, "Only \"bundled\" is available")
        ->check(CLI::IsMember({"bundled"}))
        ->capture_default_str();
    bench->add_option("--strategy", strategies, "Strategies to compare")->capture_default_str();
    bench->add_option("--format", format, "json | csv | md")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    bench->add_option("--artifacts", artifacts_dir,
                      "Save per-row instance and representation files; eval on them "
                      "reproduces every percentage in the table");
    bench->add_option("--out", out_path, "Write the table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Api api;
    if (!api.ctx) {
        std::cerr << "out of memory\n";
        return 1;
    }
    log_info("seed " + std::to_string(seed));

    try {
        if (realize->parsed()) {
            const std::string inst = instance_text(instance_path);
            char* out = nullptr;
            const wrac_status st = wrac_realize_quasi(api.ctx, inst.c_str(), &out);
            return finish_solver(api, st, out, out_path, "realize");
        }

        if (hierarchy->parsed()) {
            const std::string inst = instance_text(instance_path);
            char* out = nullptr;
            const wrac_status st = wrac_hierarchy_solve(api.ctx, inst.c_str(), &out);
            return finish_solver(api, st, out, out_path, "hierarchy");
        }

        if (maximize->parsed()) {
            const std::string inst = instance_text(instance_path);
            const json options{{"strategy", strategy}, {"corner_cap", corner_cap}};
            char* out = nullptr;
            const wrac_status st =
                wrac_maximize(api.ctx, inst.c_str(), options.dump().c_str(), &out);
            if (st != WRAC_OK) return fail(api, "maximize");
            json report = json::parse(api.take(out));
            if (oracle_max_n > 0) {
                char* oracle = nullptr;
                if (wrac_oracle_opt(api.ctx, inst.c_str(), oracle_max_n, &oracle) == WRAC_OK)
                    report["oracle_opt"] = json::parse(api.take(oracle))["opt"];
                else
                    log_info("oracle skipped: " + api.error());
            }
            emit(out_path, report.dump(2));
            return 0;
        }

        if (extremal->parsed()) {
            const std::string inst = instance_text(instance_path);
            char* out = nullptr;
            const wrac_status st = wrac_extremal(api.ctx, inst.c_str(), &out);
            return finish_solver(api, st, out, out_path, "extremal");
        }

        if (gen->parsed()) {
            const std::string p = params_text(params);
            char* out = nullptr;
            const wrac_status st = wrac_generate(api.ctx, gen_kind.c_str(), p.c_str(), &out);
            return finish_solver(api, st, out, out_path, "gen");
        }

        if (eval->parsed()) {
            const std::string inst = instance_text(instance_path);
            const std::string rep = read_file(rep_path);
            char* out = nullptr;
            const wrac_status st = wrac_evaluate(api.ctx, inst.c_str(), rep.c_str(), &out);
            return finish_solver(api, st, out, out_path, "eval");
        }

        if (cloud->parsed()) {
            if (cloud_file.empty() == bundled_id.empty()) {
                std::cerr << "cloud: pass exactly one of a text file or --bundled\n";
                return 1;
            }
            std::string text;
            if (!bundled_id.empty()) {
                char* t = nullptr;
                if (wrac_bundled_text(api.ctx, bundled_id.c_str(), &t) != WRAC_OK)
                    return fail(api, "cloud");
                text = api.take(t);
            } else {
                text = read_file(cloud_file);
            }
            const json config{{"top_k", top_k},
                              {"threshold", threshold},
                              {"base_size", base_size},
                              {"corner_cap", corner_cap}};
            if (!emit_instance.empty()) {
                char* inst = nullptr;
                if (wrac_text_to_instance(api.ctx, text.c_str(), config.dump().c_str(), &inst) !=
                    WRAC_OK)
                    return fail(api, "cloud");
                write_file(emit_instance, api.take(inst));
                log_info("wrote " + emit_instance);
            }
            char* svg = nullptr;
            char* report = nullptr;
            if (wrac_cloud(api.ctx, text.c_str(), config.dump().c_str(), &svg, &report) !=
                WRAC_OK)
                return fail(api, "cloud");
            write_file(svg_path, api.take(svg));
            log_info("wrote " + svg_path);
            std::cout << api.take(report) << "\n";
            return 0;
        }

        if (bench->parsed()) {
            if (!artifacts_dir.empty()) std::filesystem::create_directories(artifacts_dir);
            char* ids_raw = nullptr;
            if (wrac_bundled_text_ids(api.ctx, &ids_raw) != WRAC_OK) return fail(api, "bench");
            const json ids = json::parse(api.take(ids_raw));
            json rows = json::array();
            for (const json& id_val : ids) {
                const std::string id = id_val.get<std::string>();
                char* t = nullptr;
                if (wrac_bundled_text(api.ctx, id.c_str(), &t) != WRAC_OK)
                    return fail(api, "bench");
                const std::string text = api.take(t);
                char* inst_raw = nullptr;
                if (wrac_text_to_instance(api.ctx, text.c_str(), nullptr, &inst_raw) != WRAC_OK)
                    return fail(api, "bench");
                const std::string inst = api.take(inst_raw);
                if (!artifacts_dir.empty())
                    write_file(artifacts_dir + "/" + id + ".instance.json", inst);
                for (const std::string& strat : strategies) {
                    log_info("bench " + id + " / " + strat);
                    const json options{{"strategy", strat}};
                    char* rep_raw = nullptr;
                    if (wrac_maximize(api.ctx, inst.c_str(), options.dump().c_str(), &rep_raw) !=
                        WRAC_OK)
                        return fail(api, "bench");
                    const json report = json::parse(api.take(rep_raw));
                    if (!artifacts_dir.empty())
                        write_file(artifacts_dir + "/" + id + "." + strat + ".rep.json",
                                   report.at("representation").dump(2));
                    rows.push_back({{"text", id},
                                    {"strategy", strat},
                                    {"profit", report["eval"]["profit"]},
                                    {"percent_of_total", report["eval"]["percent_of_total"]},
                                    {"percent_of_planar", report["eval"]["percent_of_planar"]}});
                }
            }
            emit(out_path, format_rows(rows, format,
                                       {"text", "strategy", "profit", "percent_of_total",
                                        "percent_of_planar"}));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
