// explore.hpp -- bounded explicit-state forward exploration of the network
// semantics, used as an independent cross-check of the symbolic engines.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bncover/graph.hpp"
#include "bncover/process.hpp"

namespace bncover {

struct ExplorationBounds {
    std::size_t max_nodes = 1;
    std::int64_t max_counter = 0;  // ignored for finite models
    std::size_t max_depth = 0;
};

// Node identities are irrelevant under full reconfiguration, so a global
// state is a sorted multiset of process configurations.
using Multiset = std::vector<ProcessConfig>;

struct RbnReceive {
    ProcessConfig before;
    std::string rule_id;
    ProcessConfig after;
};

struct RbnTraceStep {
    ProcessConfig broadcaster_before;
    std::string rule_id;
    std::string letter;
    ProcessConfig broadcaster_after;
    std::vector<RbnReceive> receivers;  // nodes not listed were left disconnected
};

struct RbnExploreResult {
    bool found = false;
    // True when every explored node count ran out of new states before any
    // bound cut the search; only then is a negative answer conclusive for
    // the explored sizes.
    bool exhausted = false;
    Multiset initial;       // populated on found
    Multiset final_config;  // populated on found
    std::vector<RbnTraceStep> trace;
    std::size_t states_explored = 0;
};

// Breadth-first search over multisets of every size up to max_nodes. A
// step picks a broadcaster and hands the message to any sub-multiset of
// the other nodes that can take a matching receive; reconfiguration makes
// every such neighborhood choice available.
RbnExploreResult explore_rbn(const ProcessSpec& spec, const ProcessConfig& target,
                             const ExplorationBounds& bounds);

// Applies the trace from the given multiset, checking every step; throws
// std::invalid_argument when a step does not apply.
Multiset replay_rbn(const ProcessSpec& spec, Multiset initial,
                    const std::vector<RbnTraceStep>& trace);

struct StaticReceive {
    std::size_t vertex;
    std::string rule_id;
};

struct StaticTraceStep {
    std::size_t broadcaster;
    std::string rule_id;
    std::string letter;
    std::vector<StaticReceive> receivers;  // exactly the broadcaster's neighbors
};

struct StaticExploreResult {
    bool found = false;
    bool exhausted = false;
    std::vector<ProcessConfig> initial;
    std::vector<ProcessConfig> final_labels;
    std::vector<StaticTraceStep> trace;
    std::size_t states_explored = 0;
};

// Breadth-first search over the labelings of one fixed shape under
// blocking broadcast steps.
StaticExploreResult explore_static(const ProcessSpec& spec, const ProcessConfig& target,
                                   const Shape& shape, const ExplorationBounds& bounds);

std::vector<ProcessConfig> replay_static(const ProcessSpec& spec, const Shape& shape,
                                         std::vector<ProcessConfig> initial,
                                         const std::vector<StaticTraceStep>& trace);

// Every one-step successor of a labeling together with the step that
// produced it. Exposed for differential tests.
std::vector<std::pair<std::vector<ProcessConfig>, StaticTraceStep>> static_successors(
    const ProcessSpec& spec, const Shape& shape, const std::vector<ProcessConfig>& labels);

}  // namespace bncover
