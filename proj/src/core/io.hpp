#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/support_graph.hpp"

namespace wrac {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance: boxes + weighted edges, optionally the four outer vertices
// (clockwise north, east, south, west) for realization of quasi-triangulated
// inputs.
struct Instance {
    SupportGraph g;
    std::vector<int> outer;  // empty or 4 vertex indices
};

// Embedded single-sink DAG instance: direction on every edge plus the
// clockwise neighbor order around every vertex.
struct HiInstance {
    std::vector<BoxDims> boxes;
    std::vector<std::pair<int, int>> edges;  // from -> to (head drawn on top)
    std::vector<std::vector<int>> rot;       // clockwise neighbor order
    int find(const std::string& id) const;
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& in, int indent = 2);

Representation parse_representation(const std::string& text);
std::string serialize_representation(const Representation& rep, int indent = 2);

HiInstance parse_hi_instance(const std::string& text);
std::string serialize_hi_instance(const HiInstance& hi, int indent = 2);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace wrac
