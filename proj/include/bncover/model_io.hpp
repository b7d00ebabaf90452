// model_io.hpp -- the on-disk model format: a JSON object describing the
// process (states, alphabet, initials, transitions) and an optional fixed
// communication topology for fixed-graph queries.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bncover/graph.hpp"
#include "bncover/process.hpp"

namespace bncover {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Topology {
    std::vector<std::string> vertex_names;
    Shape shape;

    bool operator==(const Topology&) const = default;
};

struct ModelFile {
    ProcessSpec spec;
    std::optional<Topology> topology;

    bool operator==(const ModelFile&) const = default;
};

// Parses and validates a model document. Diagnostics name the offending
// field; syntax errors carry the line reported by the JSON parser.
// Duplicate transitions (same source, label, vector and target) are
// dropped, keeping the first.
ModelFile parse_model(const std::string& text);

ModelFile load_model(const std::string& path);

// Canonical serialization; parsing it back yields an equal ModelFile.
std::string serialize_model(const ModelFile& model);

// Target syntax: "q" for finite models, "q:[n1,n2,...]" for vass.
ProcessConfig parse_target(const std::string& text, const ProcessSpec& spec);

}  // namespace bncover
