// process.hpp -- finite descriptions of the per-node process: finite-state
// labelled transition systems and vector addition systems with states.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bncover/order.hpp"

namespace bncover {

enum class ModelKind { Finite, Vass };
enum class ActionKind { Broadcast, Receive };

std::string to_string(ActionKind k);  // "broadcast" / "receive"

struct ActionLabel {
    ActionKind kind;
    std::string letter;

    bool operator==(const ActionLabel&) const = default;
};

// Pretty form: "!!a" for broadcasts, "??a" for receives.
std::string to_string(const ActionLabel& label);

struct TransitionRule {
    std::string id;
    std::string from;
    ActionKind kind = ActionKind::Broadcast;
    std::string letter;
    std::vector<std::int64_t> delta;  // counter update; empty for finite models
    std::string to;

    ActionLabel label() const { return ActionLabel{kind, letter}; }
    bool operator==(const TransitionRule&) const = default;

    // Equality ignoring the id; transition sets are deduplicated on load.
    bool same_effect(const TransitionRule& o) const {
        return from == o.from && kind == o.kind && letter == o.letter && delta == o.delta &&
               to == o.to;
    }
};

struct ProcessSpec {
    ModelKind kind = ModelKind::Finite;
    std::size_t dimension = 0;  // vass only; 0 behaves like a finite model
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::vector<std::string> initial_states;
    std::vector<TransitionRule> transitions;

    bool operator==(const ProcessSpec&) const = default;

    bool has_state(const std::string& s) const;
    bool has_letter(const std::string& a) const;
    bool is_initial(const std::string& s) const;
};

// One node's local configuration: a control state plus, for vass models,
// a vector of nonnegative counters.
struct ProcessConfig {
    std::string state;
    std::vector<std::int64_t> counters;

    bool operator==(const ProcessConfig&) const = default;
    friend bool operator<(const ProcessConfig& a, const ProcessConfig& b) {
        if (a.state != b.state) return a.state < b.state;
        return a.counters < b.counters;
    }
};

// "q" for finite configurations, "q:[1,2]" for vass ones.
std::string to_string(const ProcessConfig& c);

// Throws std::invalid_argument describing the first violated invariant.
void validate(const ProcessSpec& spec);

// Throws unless c names a declared state with counters of the declared
// dimension, all nonnegative.
void validate_config(const ProcessConfig& c, const ProcessSpec& spec);

// Drops later transitions whose from/label/delta/to repeat an earlier one.
ProcessSpec dedupe_transitions(ProcessSpec spec);

// Adds a (q, ??a, q) self-loop for every state/letter pair without an
// outgoing receive on that letter, turning blocking broadcasts into
// ignore semantics. Finite models only; throws for vass.
ProcessSpec complete_receives(const ProcessSpec& spec);

// The wqo on configurations: equal control state, and for vass models
// componentwise counter order on top.
bool config_leq(const ProcessConfig& a, const ProcessConfig& b);

// One step of the rule, or nullopt when the rule is not enabled.
std::optional<ProcessConfig> step(const ProcessConfig& c, const TransitionRule& t);

// Minimal configurations enabling the rule: its source state, with
// counters max(0, -delta_i) for vass rules.
std::vector<ProcessConfig> min_enabling(const TransitionRule& t);

// Basis of the one-step predecessors of the upward closure of c through
// rules carrying exactly this label.
std::vector<ProcessConfig> pre_basis_labelled(const ProcessConfig& c, const ActionLabel& label,
                                              const ProcessSpec& spec);

// Same, over every rule regardless of label.
std::vector<ProcessConfig> pre_basis_any(const ProcessConfig& c, const ProcessSpec& spec);

// A basis of the whole configuration space: every state, with zero
// counters for vass models.
std::vector<ProcessConfig> minimal_configs(const ProcessSpec& spec);

// True iff some initial configuration dominates b.
bool init_covers(const ProcessConfig& b, const ProcessSpec& spec);

// Identical spec with the transition set filtered to the given ids.
// Unknown ids are rejected.
ProcessSpec restrict_transitions(const ProcessSpec& spec, const std::vector<std::string>& keep);

// The process as a backward-coverability system over its own state space,
// ignoring any network semantics.
Wsts<ProcessConfig> process_wsts(const ProcessSpec& spec);

}  // namespace bncover
