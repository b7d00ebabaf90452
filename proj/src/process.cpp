#include "bncover/process.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bncover {

std::string to_string(ActionKind k) {
    return k == ActionKind::Broadcast ? "broadcast" : "receive";
}

std::string to_string(const ActionLabel& label) {
    return (label.kind == ActionKind::Broadcast ? "!!" : "??") + label.letter;
}

std::string to_string(const ProcessConfig& c) {
    if (c.counters.empty()) return c.state;
    std::ostringstream os;
    os << c.state << ":[";
    for (std::size_t i = 0; i < c.counters.size(); ++i) {
        if (i) os << ',';
        os << c.counters[i];
    }
    os << ']';
    return os.str();
}

bool ProcessSpec::has_state(const std::string& s) const {
    return std::find(states.begin(), states.end(), s) != states.end();
}

bool ProcessSpec::has_letter(const std::string& a) const {
    return std::find(alphabet.begin(), alphabet.end(), a) != alphabet.end();
}

bool ProcessSpec::is_initial(const std::string& s) const {
    return std::find(initial_states.begin(), initial_states.end(), s) != initial_states.end();
}

void validate(const ProcessSpec& spec) {
    if (spec.kind == ModelKind::Finite && spec.dimension != 0)
        throw std::invalid_argument("finite model must have dimension 0");
    if (spec.states.empty()) throw std::invalid_argument("state set must be nonempty");
    {
        std::set<std::string> seen;
        for (const auto& s : spec.states)
            if (!seen.insert(s).second)
                throw std::invalid_argument("duplicate state '" + s + "'");
    }
    {
        std::set<std::string> seen;
        for (const auto& a : spec.alphabet)
            if (!seen.insert(a).second)
                throw std::invalid_argument("duplicate letter '" + a + "'");
    }
    if (spec.initial_states.empty())
        throw std::invalid_argument("initial state set must be nonempty");
    for (const auto& s : spec.initial_states)
        if (!spec.has_state(s))
            throw std::invalid_argument("initial state '" + s + "' is not declared");
    std::set<std::string> ids;
    for (const auto& t : spec.transitions) {
        if (t.id.empty()) throw std::invalid_argument("transition with empty id");
        if (!ids.insert(t.id).second)
            throw std::invalid_argument("duplicate transition id '" + t.id + "'");
        if (!spec.has_state(t.from))
            throw std::invalid_argument("transition '" + t.id + "': unknown source state '" +
                                        t.from + "'");
        if (!spec.has_state(t.to))
            throw std::invalid_argument("transition '" + t.id + "': unknown target state '" +
                                        t.to + "'");
        if (!spec.has_letter(t.letter))
            throw std::invalid_argument("transition '" + t.id + "': unknown letter '" + t.letter +
                                        "'");
        if (t.delta.size() != spec.dimension)
            throw std::invalid_argument("transition '" + t.id + "': vector length " +
                                        std::to_string(t.delta.size()) + " does not match dimension " +
                                        std::to_string(spec.dimension));
    }
}

void validate_config(const ProcessConfig& c, const ProcessSpec& spec) {
    if (!spec.has_state(c.state))
        throw std::invalid_argument("configuration names unknown state '" + c.state + "'");
    if (c.counters.size() != spec.dimension)
        throw std::invalid_argument("configuration counter length " +
                                    std::to_string(c.counters.size()) +
                                    " does not match dimension " + std::to_string(spec.dimension));
    for (auto v : c.counters)
        if (v < 0) throw std::invalid_argument("configuration has a negative counter");
}

ProcessSpec dedupe_transitions(ProcessSpec spec) {
    std::vector<TransitionRule> kept;
    for (auto& t : spec.transitions) {
        bool dup = std::any_of(kept.begin(), kept.end(),
                               [&](const TransitionRule& k) { return k.same_effect(t); });
        if (!dup) kept.push_back(std::move(t));
    }
    spec.transitions = std::move(kept);
    return spec;
}

ProcessSpec complete_receives(const ProcessSpec& spec) {
    if (spec.kind == ModelKind::Vass)
        throw std::invalid_argument("complete-receives is only supported for finite models");
    ProcessSpec out = spec;
    std::set<std::string> ids;
    for (const auto& t : out.transitions) ids.insert(t.id);
    for (const auto& q : spec.states) {
        for (const auto& a : spec.alphabet) {
            bool has = std::any_of(spec.transitions.begin(), spec.transitions.end(),
                                   [&](const TransitionRule& t) {
                                       return t.kind == ActionKind::Receive && t.letter == a &&
                                              t.from == q;
                                   });
            if (has) continue;
            std::string id = "recv_" + q + "_" + a;
            while (ids.count(id)) id += "_";
            ids.insert(id);
            out.transitions.push_back(TransitionRule{id, q, ActionKind::Receive, a, {}, q});
        }
    }
    return out;
}

bool config_leq(const ProcessConfig& a, const ProcessConfig& b) {
    if (a.counters.size() != b.counters.size())
        throw std::invalid_argument("config_leq: configurations of different dimension");
    if (a.state != b.state) return false;
    for (std::size_t i = 0; i < a.counters.size(); ++i)
        if (a.counters[i] > b.counters[i]) return false;
    return true;
}

std::optional<ProcessConfig> step(const ProcessConfig& c, const TransitionRule& t) {
    if (c.counters.size() != t.delta.size())
        throw std::invalid_argument("step: rule dimension does not match configuration");
    if (c.state != t.from) return std::nullopt;
    ProcessConfig out{t.to, c.counters};
    for (std::size_t i = 0; i < out.counters.size(); ++i) {
        out.counters[i] += t.delta[i];
        if (out.counters[i] < 0) return std::nullopt;
    }
    return out;
}

std::vector<ProcessConfig> min_enabling(const TransitionRule& t) {
    ProcessConfig c{t.from, std::vector<std::int64_t>(t.delta.size(), 0)};
    for (std::size_t i = 0; i < t.delta.size(); ++i)
        c.counters[i] = std::max<std::int64_t>(0, -t.delta[i]);
    return {c};
}

namespace {

// Minimal predecessors of the upward closure of c through one rule:
// counters must enable the rule and land at or above c's counters.
std::vector<ProcessConfig> pre_via_rule(const ProcessConfig& c, const TransitionRule& t) {
    if (t.to != c.state) return {};
    ProcessConfig before{t.from, std::vector<std::int64_t>(c.counters.size(), 0)};
    for (std::size_t i = 0; i < c.counters.size(); ++i)
        before.counters[i] =
            std::max({std::int64_t{0}, -t.delta[i], c.counters[i] - t.delta[i]});
    return {before};
}

}  // namespace

std::vector<ProcessConfig> pre_basis_labelled(const ProcessConfig& c, const ActionLabel& label,
                                              const ProcessSpec& spec) {
    std::vector<ProcessConfig> out;
    for (const auto& t : spec.transitions) {
        if (t.label() != label) continue;
        auto pres = pre_via_rule(c, t);
        out.insert(out.end(), pres.begin(), pres.end());
    }
    return minimize(out, config_leq).elements;
}

std::vector<ProcessConfig> pre_basis_any(const ProcessConfig& c, const ProcessSpec& spec) {
    std::vector<ProcessConfig> out;
    for (const auto& t : spec.transitions) {
        auto pres = pre_via_rule(c, t);
        out.insert(out.end(), pres.begin(), pres.end());
    }
    return minimize(out, config_leq).elements;
}

std::vector<ProcessConfig> minimal_configs(const ProcessSpec& spec) {
    std::vector<ProcessConfig> out;
    out.reserve(spec.states.size());
    for (const auto& q : spec.states)
        out.push_back(ProcessConfig{q, std::vector<std::int64_t>(spec.dimension, 0)});
    return out;
}

bool init_covers(const ProcessConfig& b, const ProcessSpec& spec) {
    if (!spec.is_initial(b.state)) return false;
    // Initial counter vectors are all-zero, so domination forces equality.
    return std::all_of(b.counters.begin(), b.counters.end(),
                       [](std::int64_t v) { return v == 0; });
}

ProcessSpec restrict_transitions(const ProcessSpec& spec, const std::vector<std::string>& keep) {
    std::set<std::string> want(keep.begin(), keep.end());
    for (const auto& id : want) {
        bool known = std::any_of(spec.transitions.begin(), spec.transitions.end(),
                                 [&](const TransitionRule& t) { return t.id == id; });
        if (!known) throw std::invalid_argument("restrict_transitions: unknown id '" + id + "'");
    }
    ProcessSpec out = spec;
    std::erase_if(out.transitions,
                  [&](const TransitionRule& t) { return !want.count(t.id); });
    return out;
}

Wsts<ProcessConfig> process_wsts(const ProcessSpec& spec) {
    Wsts<ProcessConfig> sys;
    sys.leq = [](const ProcessConfig& a, const ProcessConfig& b) { return config_leq(a, b); };
    sys.pre_basis = [spec](const ProcessConfig& c) { return pre_basis_any(c, spec); };
    sys.init_covers = [spec](const ProcessConfig& b) { return init_covers(b, spec); };
    return sys;
}

}  // namespace bncover
