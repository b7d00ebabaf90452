#include "bncover/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bncover {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key)) throw ParseError(where + ": unknown field '" + key + "'");
    }
}

const json& require(const json& obj, const std::string& field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end()) throw ParseError(where + ": missing field '" + field + "'");
    return *it;
}

std::string require_string(const json& obj, const std::string& field, const std::string& where) {
    const json& v = require(obj, field, where);
    if (!v.is_string()) throw ParseError(where + "." + field + ": expected a string");
    return v.get<std::string>();
}

std::vector<std::string> require_string_list(const json& obj, const std::string& field,
                                             const std::string& where) {
    const json& v = require(obj, field, where);
    if (!v.is_array()) throw ParseError(where + "." + field + ": expected a list");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw ParseError(where + "." + field + ": expected a list of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

TransitionRule parse_transition(const json& j, std::size_t index, const ProcessSpec& spec) {
    std::string where = "transitions[" + std::to_string(index) + "]";
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    std::set<std::string> allowed = {"id", "from", "kind", "letter", "to"};
    if (spec.kind == ModelKind::Vass) allowed.insert("vector");
    reject_unknown_fields(j, allowed, where);
    TransitionRule t;
    t.id = require_string(j, "id", where);
    t.from = require_string(j, "from", where);
    t.to = require_string(j, "to", where);
    t.letter = require_string(j, "letter", where);
    std::string kind = require_string(j, "kind", where);
    if (kind == "broadcast")
        t.kind = ActionKind::Broadcast;
    else if (kind == "receive")
        t.kind = ActionKind::Receive;
    else
        throw ParseError(where + ".kind: expected \"broadcast\" or \"receive\", got \"" + kind +
                         "\"");
    if (spec.kind == ModelKind::Vass) {
        const json& vec = require(j, "vector", where);
        if (!vec.is_array()) throw ParseError(where + ".vector: expected a list of integers");
        for (const auto& e : vec) {
            if (!e.is_number_integer())
                throw ParseError(where + ".vector: expected a list of integers");
            t.delta.push_back(e.get<std::int64_t>());
        }
    }
    if (!spec.has_state(t.from))
        throw ParseError(where + ".from: undeclared state '" + t.from + "'");
    if (!spec.has_state(t.to)) throw ParseError(where + ".to: undeclared state '" + t.to + "'");
    if (!spec.has_letter(t.letter))
        throw ParseError(where + ".letter: undeclared letter '" + t.letter + "'");
    if (t.delta.size() != spec.dimension)
        throw ParseError(where + ".vector: length " + std::to_string(t.delta.size()) +
                         " does not match dimension " + std::to_string(spec.dimension));
    return t;
}

Topology parse_topology(const json& j) {
    if (!j.is_object()) throw ParseError("topology: expected an object");
    reject_unknown_fields(j, {"vertices", "edges"}, "topology");
    Topology topo;
    topo.vertex_names = require_string_list(j, "vertices", "topology");
    if (topo.vertex_names.empty()) throw ParseError("topology.vertices: must be nonempty");
    std::set<std::string> seen;
    for (const auto& v : topo.vertex_names)
        if (!seen.insert(v).second)
            throw ParseError("topology.vertices: duplicate vertex '" + v + "'");
    auto index_of = [&](const std::string& name, const std::string& where) {
        auto it = std::find(topo.vertex_names.begin(), topo.vertex_names.end(), name);
        if (it == topo.vertex_names.end())
            throw ParseError(where + ": undeclared vertex '" + name + "'");
        return static_cast<std::size_t>(it - topo.vertex_names.begin());
    };
    topo.shape = Shape(topo.vertex_names.size());
    const json& edges = require(j, "edges", "topology");
    if (!edges.is_array()) throw ParseError("topology.edges: expected a list of pairs");
    std::size_t i = 0;
    for (const auto& e : edges) {
        std::string where = "topology.edges[" + std::to_string(i++) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError(where + ": expected a pair of vertex names");
        std::size_t u = index_of(e[0].get<std::string>(), where);
        std::size_t v = index_of(e[1].get<std::string>(), where);
        if (u == v) throw ParseError(where + ": self-loops are not allowed");
        if (topo.shape.adjacent(u, v)) throw ParseError(where + ": duplicate edge");
        topo.shape.add_edge(u, v);
    }
    return topo;
}

}  // namespace

ModelFile parse_model(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) throw ParseError("model: top-level value must be an object");
    reject_unknown_fields(
        j, {"kind", "dimension", "states", "initial", "alphabet", "transitions", "topology"},
        "model");

    ModelFile model;
    ProcessSpec& spec = model.spec;
    std::string kind = require_string(j, "kind", "model");
    if (kind == "finite")
        spec.kind = ModelKind::Finite;
    else if (kind == "vass")
        spec.kind = ModelKind::Vass;
    else
        throw ParseError("model.kind: expected \"finite\" or \"vass\", got \"" + kind + "\"");

    if (spec.kind == ModelKind::Vass) {
        const json& dim = require(j, "dimension", "model");
        if (!dim.is_number_unsigned())
            throw ParseError("model.dimension: expected a nonnegative integer");
        spec.dimension = dim.get<std::size_t>();
    } else if (j.contains("dimension")) {
        throw ParseError("model.dimension: only valid for vass models");
    }

    spec.states = require_string_list(j, "states", "model");
    spec.alphabet = require_string_list(j, "alphabet", "model");
    spec.initial_states = require_string_list(j, "initial", "model");

    const json& trans = require(j, "transitions", "model");
    if (!trans.is_array()) throw ParseError("model.transitions: expected a list");
    std::size_t i = 0;
    for (const auto& t : trans) spec.transitions.push_back(parse_transition(t, i++, spec));

    try {
        spec = dedupe_transitions(std::move(spec));
        validate(spec);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("model: ") + e.what());
    }

    if (j.contains("topology")) model.topology = parse_topology(j.at("topology"));
    return model;
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

std::string serialize_model(const ModelFile& model) {
    ordered_json j;
    const ProcessSpec& spec = model.spec;
    j["kind"] = spec.kind == ModelKind::Finite ? "finite" : "vass";
    if (spec.kind == ModelKind::Vass) j["dimension"] = spec.dimension;
    j["states"] = spec.states;
    j["initial"] = spec.initial_states;
    j["alphabet"] = spec.alphabet;
    j["transitions"] = ordered_json::array();
    for (const auto& t : spec.transitions) {
        ordered_json jt;
        jt["id"] = t.id;
        jt["from"] = t.from;
        jt["kind"] = t.kind == ActionKind::Broadcast ? "broadcast" : "receive";
        jt["letter"] = t.letter;
        if (spec.kind == ModelKind::Vass) jt["vector"] = t.delta;
        jt["to"] = t.to;
        j["transitions"].push_back(std::move(jt));
    }
    if (model.topology) {
        ordered_json jt;
        jt["vertices"] = model.topology->vertex_names;
        jt["edges"] = ordered_json::array();
        for (auto [u, v] : model.topology->shape.edges())
            jt["edges"].push_back(ordered_json::array(
                {model.topology->vertex_names[u], model.topology->vertex_names[v]}));
        j["topology"] = std::move(jt);
    }
    return j.dump(2) + "\n";
}

ProcessConfig parse_target(const std::string& text, const ProcessSpec& spec) {
    ProcessConfig c;
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        c.state = text;
    } else {
        c.state = text.substr(0, colon);
        std::string vec = text.substr(colon + 1);
        if (vec.size() < 2 || vec.front() != '[' || vec.back() != ']')
            throw ParseError("target: expected \"state\" or \"state:[n1,n2,...]\"");
        std::string inner = vec.substr(1, vec.size() - 2);
        if (!inner.empty()) {
            std::istringstream is(inner);
            std::string item;
            while (std::getline(is, item, ',')) {
                try {
                    std::size_t pos = 0;
                    long long v = std::stoll(item, &pos);
                    if (pos != item.size()) throw std::invalid_argument(item);
                    c.counters.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError("target: bad counter value '" + item + "'");
                }
            }
        }
    }
    if (colon == std::string::npos && spec.dimension > 0)
        throw ParseError("target: vass models need a counter vector, e.g. \"" + c.state +
                         ":[0]\"");
    try {
        validate_config(c, spec);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("target: ") + e.what());
    }
    return c;
}

}  // namespace bncover
