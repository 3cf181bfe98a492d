#include "core/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace wrac {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j, const std::string& where) {
    std::optional<Rat> r;
    if (j.is_string())
        r = Rat::parse(j.get<std::string>());
    else if (j.is_number_integer())
        r = Rat::parse(std::to_string(j.get<long long>()));
    if (!r) throw ParseError(where + ": expected rational as \"num\" or \"num/den\"");
    return *r;
}

Rat positive_rat(const json& j, const std::string& where) {
    Rat r = rat_from_json(j, where);
    if (r.sign() <= 0) throw ParseError(where + ": value must be positive");
    return r;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

std::vector<BoxDims> boxes_from_json(const json& j) {
    if (!j.is_object() || !j.contains("boxes") || !j["boxes"].is_array())
        throw ParseError("missing \"boxes\" array");
    std::vector<BoxDims> boxes;
    std::set<std::string> seen;
    for (const auto& b : j["boxes"]) {
        if (!b.is_object() || !b.contains("id") || !b["id"].is_string())
            throw ParseError("box: missing string \"id\"");
        std::string id = b["id"].get<std::string>();
        if (id.empty()) throw ParseError("box: empty id");
        if (!seen.insert(id).second) throw ParseError("box: duplicate id \"" + id + "\"");
        if (!b.contains("w") || !b.contains("h")) throw ParseError("box " + id + ": missing w/h");
        boxes.push_back({id, positive_rat(b["w"], "box " + id + " w"),
                         positive_rat(b["h"], "box " + id + " h")});
    }
    return boxes;
}

int index_of(const std::vector<BoxDims>& boxes, const std::string& id, const std::string& where) {
    for (size_t k = 0; k < boxes.size(); ++k)
        if (boxes[k].id == id) return static_cast<int>(k);
    throw ParseError(where + ": unknown box id \"" + id + "\"");
}

}  // namespace

int HiInstance::find(const std::string& id) const {
    for (size_t k = 0; k < boxes.size(); ++k)
        if (boxes[k].id == id) return static_cast<int>(k);
    return -1;
}

Instance parse_instance(const std::string& text) {
    json j = parse_json(text);
    Instance in;
    in.g.boxes = boxes_from_json(j);
    std::set<std::pair<int, int>> seen;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e["a"].is_string() ||
                !e["b"].is_string())
                throw ParseError("edge: need string ids \"a\" and \"b\"");
            int a = index_of(in.g.boxes, e["a"].get<std::string>(), "edge");
            int b = index_of(in.g.boxes, e["b"].get<std::string>(), "edge");
            if (a == b) throw ParseError("edge: self loop on \"" + in.g.boxes[a].id + "\"");
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
                throw ParseError("edge: duplicate between \"" + in.g.boxes[a].id + "\" and \"" +
                                 in.g.boxes[b].id + "\"");
            Rat p = e.contains("p") ? positive_rat(e["p"], "edge p") : Rat(1);
            in.g.edges.push_back({std::min(a, b), std::max(a, b), p});
        }
    }
    if (j.contains("outer")) {
        if (!j["outer"].is_array() || j["outer"].size() != 4)
            throw ParseError("\"outer\" must list exactly 4 box ids");
        std::set<int> distinct;
        for (const auto& o : j["outer"]) {
            if (!o.is_string()) throw ParseError("outer: expected box id string");
            int v = index_of(in.g.boxes, o.get<std::string>(), "outer");
            if (!distinct.insert(v).second) throw ParseError("outer: ids must be distinct");
            in.outer.push_back(v);
        }
    }
    return in;
}

std::string serialize_instance(const Instance& in, int indent) {
    json j;
    j["boxes"] = json::array();
    for (const auto& b : in.g.boxes)
        j["boxes"].push_back({{"id", b.id}, {"w", b.w.str()}, {"h", b.h.str()}});
    j["edges"] = json::array();
    for (const auto& e : in.g.edges)
        j["edges"].push_back(
            {{"a", in.g.boxes[e.a].id}, {"b", in.g.boxes[e.b].id}, {"p", e.p.str()}});
    if (!in.outer.empty()) {
        j["outer"] = json::array();
        for (int v : in.outer) j["outer"].push_back(in.g.boxes[v].id);
    }
    return j.dump(indent);
}

Representation parse_representation(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("boxes") || !j["boxes"].is_array())
        throw ParseError("missing \"boxes\" array");
    Representation rep;
    std::set<std::string> seen;
    for (const auto& b : j["boxes"]) {
        if (!b.is_object() || !b.contains("id") || !b["id"].is_string())
            throw ParseError("box: missing string \"id\"");
        std::string id = b["id"].get<std::string>();
        if (!seen.insert(id).second) throw ParseError("box: duplicate id \"" + id + "\"");
        for (const char* f : {"w", "h", "x", "y"})
            if (!b.contains(f)) throw ParseError("box " + id + ": missing " + f);
        rep.boxes.push_back({id, positive_rat(b["w"], "box " + id + " w"),
                             positive_rat(b["h"], "box " + id + " h"),
                             rat_from_json(b["x"], "box " + id + " x"),
                             rat_from_json(b["y"], "box " + id + " y")});
    }
    return rep;
}

std::string serialize_representation(const Representation& rep, int indent) {
    json j;
    j["boxes"] = json::array();
    for (const auto& b : rep.boxes)
        j["boxes"].push_back({{"id", b.id},
                              {"w", b.w.str()},
                              {"h", b.h.str()},
                              {"x", b.x.str()},
                              {"y", b.y.str()}});
    return j.dump(indent);
}

HiInstance parse_hi_instance(const std::string& text) {
    json j = parse_json(text);
    HiInstance hi;
    hi.boxes = boxes_from_json(j);
    int n = static_cast<int>(hi.boxes.size());
    std::set<std::pair<int, int>> seen;
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("missing \"edges\" array");
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e["from"].is_string() ||
            !e["to"].is_string())
            throw ParseError("edge: need string ids \"from\" and \"to\"");
        int a = index_of(hi.boxes, e["from"].get<std::string>(), "edge");
        int b = index_of(hi.boxes, e["to"].get<std::string>(), "edge");
        if (a == b) throw ParseError("edge: self loop on \"" + hi.boxes[a].id + "\"");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw ParseError("edge: duplicate between \"" + hi.boxes[a].id + "\" and \"" +
                             hi.boxes[b].id + "\"");
        hi.edges.push_back({a, b});
    }
    if (!j.contains("rotation") || !j["rotation"].is_object())
        throw ParseError("missing \"rotation\" object");
    hi.rot.assign(n, {});
    std::vector<std::set<int>> nbrs(n);
    for (const auto& e : hi.edges) {
        nbrs[e.first].insert(e.second);
        nbrs[e.second].insert(e.first);
    }
    for (const auto& [key, val] : j["rotation"].items()) {
        int v = index_of(hi.boxes, key, "rotation");
        if (!val.is_array()) throw ParseError("rotation " + key + ": expected array");
        std::set<int> listed;
        for (const auto& u : val) {
            if (!u.is_string()) throw ParseError("rotation " + key + ": expected box id string");
            int w = index_of(hi.boxes, u.get<std::string>(), "rotation " + key);
            if (!listed.insert(w).second)
                throw ParseError("rotation " + key + ": duplicate neighbor");
            hi.rot[v].push_back(w);
        }
        if (listed != nbrs[v])
            throw ParseError("rotation " + key + ": must list exactly the neighbors");
    }
    for (int v = 0; v < n; ++v)
        if (hi.rot[v].size() != nbrs[v].size())
            throw ParseError("rotation: missing entry for \"" + hi.boxes[v].id + "\"");
    return hi;
}

std::string serialize_hi_instance(const HiInstance& hi, int indent) {
    json j;
    j["boxes"] = json::array();
    for (const auto& b : hi.boxes)
        j["boxes"].push_back({{"id", b.id}, {"w", b.w.str()}, {"h", b.h.str()}});
    j["edges"] = json::array();
    for (const auto& e : hi.edges)
        j["edges"].push_back({{"from", hi.boxes[e.first].id}, {"to", hi.boxes[e.second].id}});
    j["rotation"] = json::object();
    for (size_t v = 0; v < hi.boxes.size(); ++v) {
        json row = json::array();
        for (int u : hi.rot[v]) row.push_back(hi.boxes[u].id);
        j["rotation"][hi.boxes[v].id] = row;
    }
    return j.dump(indent);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace wrac
