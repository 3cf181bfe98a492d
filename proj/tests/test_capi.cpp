#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "wrac/wrac.h"

using nlohmann::json;

namespace {

// Owns a ctx and frees every string it hands out.
struct Session {
    wrac_ctx* ctx = wrac_ctx_new();
    ~Session() { wrac_ctx_free(ctx); }

    std::string take(char* s) {
        REQUIRE(s != nullptr);
        std::string out = s;
        wrac_string_free(s);
        return out;
    }

    const char* error() const { return wrac_ctx_error(ctx); }
};

const char* kWheelFeasible = R"({
  "boxes": [{"id":"n","w":"3","h":"1"},{"id":"e","w":"1","h":"3"},
            {"id":"s","w":"3","h":"1"},{"id":"w","w":"1","h":"3"},
            {"id":"u","w":"1","h":"1"}],
  "edges": [{"a":"n","b":"e"},{"a":"e","b":"s"},{"a":"s","b":"w"},{"a":"n","b":"w"},
            {"a":"n","b":"u"},{"a":"e","b":"u"},{"a":"s","b":"u"},{"a":"w","b":"u"}],
  "outer": ["n","e","s","w"]
})";

const char* kWheelAllUnit = R"({
  "boxes": [{"id":"n","w":"1","h":"1"},{"id":"e","w":"1","h":"1"},
            {"id":"s","w":"1","h":"1"},{"id":"w","w":"1","h":"1"},
            {"id":"u","w":"1","h":"1"}],
  "edges": [{"a":"n","b":"e"},{"a":"e","b":"s"},{"a":"s","b":"w"},{"a":"n","b":"w"},
            {"a":"n","b":"u"},{"a":"e","b":"u"},{"a":"s","b":"u"},{"a":"w","b":"u"}],
  "outer": ["n","e","s","w"]
})";

}  // namespace

TEST_CASE("version and context lifecycle") {
    CHECK(std::string(wrac_version()) == "0.1.0");
    Session s;
    REQUIRE(s.ctx != nullptr);
    CHECK(std::string(s.error()).empty());
    CHECK(std::string(wrac_ctx_error(nullptr)).empty());
    wrac_string_free(nullptr);
}

TEST_CASE("realize returns a drawing that evaluates to full profit") {
    Session s;
    char* rep = nullptr;
    REQUIRE(wrac_realize_quasi(s.ctx, kWheelFeasible, &rep) == WRAC_OK);
    const std::string rep_json = s.take(rep);
    CHECK(json::parse(rep_json)["boxes"].size() == 5);

    char* report = nullptr;
    REQUIRE(wrac_evaluate(s.ctx, kWheelFeasible, rep_json.c_str(), &report) == WRAC_OK);
    const json ev = json::parse(s.take(report));
    CHECK(ev["profit"] == "8");
    CHECK(ev["realized_edges"] == 8);
    CHECK(ev["percent_of_total"] == "100");
}

TEST_CASE("realize reports infeasibility with a frontier certificate") {
    Session s;
    char* out = nullptr;
    REQUIRE(wrac_realize_quasi(s.ctx, kWheelAllUnit, &out) == WRAC_ERR_INFEASIBLE);
    const json cert = json::parse(s.take(out));
    CHECK(cert.contains("step"));
    CHECK(cert.contains("frontier"));
    CHECK(!std::string(s.error()).empty());
}

TEST_CASE("realize distinguishes parse and argument errors") {
    Session s;
    char* out = nullptr;
    CHECK(wrac_realize_quasi(s.ctx, "{oops", &out) == WRAC_ERR_PARSE);
    CHECK(out == nullptr);
    const char* no_outer = R"({"boxes":[{"id":"a","w":"1","h":"1"},{"id":"b","w":"1","h":"1"}],
                               "edges":[{"a":"a","b":"b"}]})";
    CHECK(wrac_realize_quasi(s.ctx, no_outer, &out) == WRAC_ERR_INVALID_ARGUMENT);
    CHECK(wrac_realize_quasi(s.ctx, nullptr, &out) == WRAC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("hierarchy solves a stack and certifies a two-sink instance") {
    Session s;
    const char* chain = R"({
      "boxes": [{"id":"a","w":"2","h":"1"},{"id":"b","w":"2","h":"1"}],
      "edges": [{"from":"a","to":"b"}],
      "rotation": {"a":["b"],"b":["a"]}
    })";
    char* out = nullptr;
    REQUIRE(wrac_hierarchy_solve(s.ctx, chain, &out) == WRAC_OK);
    CHECK(json::parse(s.take(out))["boxes"].size() == 2);

    const char* two_sinks = R"({
      "boxes": [{"id":"a","w":"1","h":"1"},{"id":"b","w":"1","h":"1"},{"id":"c","w":"1","h":"1"}],
      "edges": [{"from":"a","to":"b"},{"from":"a","to":"c"}],
      "rotation": {"a":["b","c"],"b":["a"],"c":["a"]}
    })";
    REQUIRE(wrac_hierarchy_solve(s.ctx, two_sinks, &out) == WRAC_ERR_INFEASIBLE);
    const json cert = json::parse(s.take(out));
    CHECK(cert["phase"] == "orientation");
}

TEST_CASE("maximize reports strategy, representation, and evaluation") {
    Session s;
    const char* inst = R"({
      "boxes": [{"id":"a","w":"1","h":"1"},{"id":"b","w":"1","h":"1"},{"id":"c","w":"1","h":"1"}],
      "edges": [{"a":"a","b":"b","p":"2"},{"a":"b","b":"c","p":"1"}]
    })";
    char* out = nullptr;
    REQUIRE(wrac_maximize(s.ctx, inst, nullptr, &out) == WRAC_OK);
    const json report = json::parse(s.take(out));
    CHECK(report.contains("strategy"));
    CHECK(report["representation"]["boxes"].size() == 3);
    CHECK(report["eval"]["percent_of_total"] == "100");

    REQUIRE(wrac_maximize(s.ctx, inst, R"({"strategy":"starforest"})", &out) == WRAC_OK);
    CHECK(json::parse(s.take(out))["strategy"] == "starforest");
    CHECK(wrac_maximize(s.ctx, inst, R"({"strategy":"warp"})", &out) ==
          WRAC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("extremal lays out boxes from an edgeless instance") {
    Session s;
    const char* five = R"({
      "boxes": [{"id":"b1","w":"2","h":"2"},{"id":"b2","w":"4","h":"4"},
                {"id":"b3","w":"8","h":"8"},{"id":"b4","w":"16","h":"16"},
                {"id":"b5","w":"32","h":"32"}]
    })";
    char* out = nullptr;
    REQUIRE(wrac_extremal(s.ctx, five, &out) == WRAC_OK);
    CHECK(json::parse(s.take(out))["boxes"].size() == 5);
}

TEST_CASE("generate covers all four reduction families") {
    Session s;
    char* out = nullptr;

    REQUIRE(wrac_generate(s.ctx, "expsquares", R"({"n":5})", &out) == WRAC_OK);
    json exp = json::parse(s.take(out));
    CHECK(exp["instance"]["boxes"].size() == 5);
    CHECK(exp["instance"]["edges"].size() == 10);
    CHECK(exp["provenance"]["sides"] == json({"2", "4", "8", "16", "32"}));

    REQUIRE(wrac_generate(s.ctx, "3part",
                          R"({"s":[6,7,7,6,7,7],"B":20,"partition":[[0,1,2],[3,4,5]]})",
                          &out) == WRAC_OK);
    json part = json::parse(s.take(out));
    CHECK(part["instance"]["boxes"].size() == 16);
    CHECK(part["provenance"]["scale"] == 1);
    CHECK(part["witness"]["boxes"].size() == 16);

    REQUIRE(wrac_generate(s.ctx, "knapstar",
                          R"({"items":[{"w":"2","p":"3"},{"w":"2","p":"4"}],
                              "capacity":"3","target":"4"})",
                          &out) == WRAC_OK);
    json star = json::parse(s.take(out));
    CHECK(star["instance"]["boxes"].size() == 8);
    CHECK(star["provenance"]["target"] == "39");

    REQUIRE(wrac_generate(s.ctx, "strippath",
                          R"({"rects":[[2,2]],"strip_width":2,"height_bound":2,"epsilon":"1/2"})",
                          &out) == WRAC_OK);
    json strip = json::parse(s.take(out));
    CHECK(strip["provenance"]["d"] == "1/4");
    CHECK(strip["provenance"]["x"] == "1/392");
    CHECK(strip["provenance"]["k"] == "37632");
    CHECK(strip["instance"]["boxes"].size() == 37633);

    CHECK(wrac_generate(s.ctx, "strippath",
                        R"({"rects":[[2,2]],"strip_width":2,"height_bound":2,
                            "epsilon":"1/2","max_boxes":10})",
                        &out) == WRAC_ERR_INVALID_ARGUMENT);
    CHECK(wrac_generate(s.ctx, "mystery", "{}", &out) == WRAC_ERR_UNSUPPORTED);
    CHECK(!std::string(s.error()).empty());
}

TEST_CASE("render draws labeled rectangles from a representation") {
    Session s;
    const char* rep = R"({
      "boxes": [{"id":"a","w":"2","h":"1","x":"0","y":"0"},
                {"id":"b","w":"2","h":"1","x":"2","y":"0"}]
    })";
    char* svg = nullptr;
    REQUIRE(wrac_render_svg(s.ctx, rep, R"({"a":"alpha"})", 1, &svg) == WRAC_OK);
    const std::string doc = s.take(svg);
    CHECK(doc.find("<svg ") == 0);
    CHECK(doc.find(">alpha</text>") != std::string::npos);
    CHECK(doc.find("<line ") != std::string::npos);

    CHECK(wrac_render_svg(s.ctx, rep, R"({"a":7})", 0, &svg) == WRAC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("text pipeline round-trips through the C surface") {
    Session s;
    const char* fixture =
        "The cat met the dog. The cat met the dog. The cat met the bird. "
        "The dog met the bird. The cat met the dog and the bird.";
    char* out = nullptr;
    REQUIRE(wrac_text_to_instance(s.ctx, fixture, nullptr, &out) == WRAC_OK);
    const json inst = json::parse(s.take(out));
    CHECK(inst["boxes"].size() == 4);
    CHECK(inst["edges"].size() == 6);

    REQUIRE(wrac_text_to_instance(s.ctx, fixture, R"({"top_k":2})", &out) == WRAC_OK);
    CHECK(json::parse(s.take(out))["boxes"].size() == 2);
    CHECK(wrac_text_to_instance(s.ctx, "", nullptr, &out) == WRAC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cloud builds a deterministic svg and report from bundled text") {
    Session s;
    char* ids_json = nullptr;
    REQUIRE(wrac_bundled_text_ids(s.ctx, &ids_json) == WRAC_OK);
    const json ids = json::parse(s.take(ids_json));
    REQUIRE(ids.size() == 3);

    char* text = nullptr;
    REQUIRE(wrac_bundled_text(s.ctx, ids[0].get<std::string>().c_str(), &text) == WRAC_OK);
    const std::string sample = s.take(text);
    CHECK(wrac_bundled_text(s.ctx, "nope", &text) == WRAC_ERR_INVALID_ARGUMENT);

    char* svg = nullptr;
    char* report = nullptr;
    REQUIRE(wrac_cloud(s.ctx, sample.c_str(), nullptr, &svg, &report) == WRAC_OK);
    const std::string doc = s.take(svg);
    const json rj = json::parse(s.take(report));
    CHECK(doc.find("<svg ") == 0);
    CHECK(rj["terms"].get<int>() >= 40);
    CHECK(rj.contains("percent_of_planar"));
    CHECK(rj["strategy"] == "starforest");

    char* svg2 = nullptr;
    char* report2 = nullptr;
    REQUIRE(wrac_cloud(s.ctx, sample.c_str(), nullptr, &svg2, &report2) == WRAC_OK);
    CHECK(s.take(svg2) == doc);
    CHECK(s.take(report2) == rj.dump(2));
}
