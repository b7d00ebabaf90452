// Shared fixtures, random generators and definition-level oracles for the
// test suites. Oracles here recompute results straight from definitions
// and stay independent of the library's own algorithms.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bncover/explore.hpp"
#include "bncover/graph.hpp"
#include "bncover/order.hpp"
#include "bncover/process.hpp"

namespace testutil {

using namespace bncover;

// ---- fixture processes -------------------------------------------------

// Two states, one receive rule: q --??a--> q'. Coverable as a plain
// transition system, never coverable in any network semantics.
inline ProcessSpec lonely_receiver_spec() {
    ProcessSpec s;
    s.kind = ModelKind::Finite;
    s.states = {"q", "qp"};
    s.alphabet = {"a"};
    s.initial_states = {"q"};
    s.transitions = {TransitionRule{"t1", "q", ActionKind::Receive, "a", {}, "qp"}};
    return s;
}

// b0 --!!a--> b1 and r0 --??a--> r1, both b0 and r0 initial.
inline ProcessSpec handshake_spec() {
    ProcessSpec s;
    s.kind = ModelKind::Finite;
    s.states = {"b0", "b1", "r0", "r1"};
    s.alphabet = {"a"};
    s.initial_states = {"b0", "r0"};
    s.transitions = {
        TransitionRule{"tb", "b0", ActionKind::Broadcast, "a", {}, "b1"},
        TransitionRule{"tr", "r0", ActionKind::Receive, "a", {}, "r1"},
    };
    return s;
}

// Two-letter cascade: only nodes that already received an a can broadcast
// b, and receiving b reaches the target state.
inline ProcessSpec cascade_spec() {
    ProcessSpec s;
    s.kind = ModelKind::Finite;
    s.states = {"q0", "q1", "t"};
    s.alphabet = {"a", "b"};
    s.initial_states = {"q0"};
    s.transitions = {
        TransitionRule{"ba", "q0", ActionKind::Broadcast, "a", {}, "q0"},
        TransitionRule{"ra", "q0", ActionKind::Receive, "a", {}, "q1"},
        TransitionRule{"bb", "q1", ActionKind::Broadcast, "b", {}, "q1"},
        TransitionRule{"rb", "q0", ActionKind::Receive, "b", {}, "t"},
    };
    return s;
}

// One-counter process: q0 broadcasts a in place, receiving a increments.
inline ProcessSpec counter_spec() {
    ProcessSpec s;
    s.kind = ModelKind::Vass;
    s.dimension = 1;
    s.states = {"q0"};
    s.alphabet = {"a"};
    s.initial_states = {"q0"};
    s.transitions = {
        TransitionRule{"tb", "q0", ActionKind::Broadcast, "a", {0}, "q0"},
        TransitionRule{"tr", "q0", ActionKind::Receive, "a", {1}, "q0"},
    };
    return s;
}

inline ProcessConfig fin(std::string q) { return ProcessConfig{std::move(q), {}}; }

inline ProcessConfig cfg(std::string q, std::vector<std::int64_t> counters) {
    return ProcessConfig{std::move(q), std::move(counters)};
}

// ---- random generators --------------------------------------------------

inline std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline ProcessSpec random_finite_spec(std::mt19937& rng, std::size_t max_states,
                                      std::size_t max_letters, std::size_t max_transitions) {
    ProcessSpec s;
    s.kind = ModelKind::Finite;
    std::size_t nstates = pick(rng, 1, max_states);
    std::size_t nletters = pick(rng, 1, max_letters);
    for (std::size_t i = 0; i < nstates; ++i) s.states.push_back("q" + std::to_string(i));
    for (std::size_t i = 0; i < nletters; ++i) s.alphabet.push_back(std::string(1, char('a' + i)));
    std::size_t ninit = pick(rng, 1, nstates);
    for (std::size_t i = 0; i < ninit; ++i) s.initial_states.push_back(s.states[i]);
    std::size_t ntrans = pick(rng, 0, max_transitions);
    for (std::size_t i = 0; i < ntrans; ++i) {
        TransitionRule t;
        t.id = "t" + std::to_string(i);
        t.from = s.states[pick(rng, 0, nstates - 1)];
        t.to = s.states[pick(rng, 0, nstates - 1)];
        t.kind = pick(rng, 0, 1) ? ActionKind::Broadcast : ActionKind::Receive;
        t.letter = s.alphabet[pick(rng, 0, nletters - 1)];
        s.transitions.push_back(std::move(t));
    }
    return dedupe_transitions(std::move(s));
}

inline ProcessSpec random_vass_spec(std::mt19937& rng, std::size_t max_states, std::size_t dim,
                                    std::size_t max_letters, std::size_t max_transitions,
                                    std::int64_t max_abs_delta) {
    ProcessSpec s;
    s.kind = ModelKind::Vass;
    s.dimension = dim;
    std::size_t nstates = pick(rng, 1, max_states);
    std::size_t nletters = pick(rng, 1, max_letters);
    for (std::size_t i = 0; i < nstates; ++i) s.states.push_back("q" + std::to_string(i));
    for (std::size_t i = 0; i < nletters; ++i) s.alphabet.push_back(std::string(1, char('a' + i)));
    std::size_t ninit = pick(rng, 1, nstates);
    for (std::size_t i = 0; i < ninit; ++i) s.initial_states.push_back(s.states[i]);
    std::uniform_int_distribution<std::int64_t> delta(-max_abs_delta, max_abs_delta);
    std::size_t ntrans = pick(rng, 0, max_transitions);
    for (std::size_t i = 0; i < ntrans; ++i) {
        TransitionRule t;
        t.id = "t" + std::to_string(i);
        t.from = s.states[pick(rng, 0, nstates - 1)];
        t.to = s.states[pick(rng, 0, nstates - 1)];
        t.kind = pick(rng, 0, 1) ? ActionKind::Broadcast : ActionKind::Receive;
        t.letter = s.alphabet[pick(rng, 0, nletters - 1)];
        for (std::size_t k = 0; k < dim; ++k) t.delta.push_back(delta(rng));
        s.transitions.push_back(std::move(t));
    }
    return dedupe_transitions(std::move(s));
}

inline std::vector<std::int64_t> random_vector(std::mt19937& rng, std::size_t dim,
                                               std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v(dim);
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    for (auto& x : v) x = dist(rng);
    return v;
}

inline ProcessConfig random_vass_config(std::mt19937& rng, const std::vector<std::string>& states,
                                        std::size_t dim, std::int64_t max_counter) {
    return ProcessConfig{states[pick(rng, 0, states.size() - 1)],
                         random_vector(rng, dim, 0, max_counter)};
}

inline Shape random_shape(std::mt19937& rng, std::size_t max_vertices) {
    std::size_t n = pick(rng, 1, max_vertices);
    Shape g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (pick(rng, 0, 1)) g.add_edge(u, v);
    return g;
}

inline LabelledGraph random_labelled_graph(std::mt19937& rng, const ProcessSpec& spec,
                                           std::size_t max_vertices) {
    Shape shape = random_shape(rng, max_vertices);
    LabelledGraph g{shape, {}};
    for (std::size_t v = 0; v < shape.size(); ++v)
        g.labels.push_back(fin(spec.states[pick(rng, 0, spec.states.size() - 1)]));
    return g;
}

inline LabelledGraph random_labelled_clique(std::mt19937& rng, const ProcessSpec& spec,
                                            std::size_t max_vertices) {
    std::size_t n = pick(rng, 1, max_vertices);
    LabelledGraph g{Shape::clique(n), {}};
    for (std::size_t v = 0; v < n; ++v)
        g.labels.push_back(fin(spec.states[pick(rng, 0, spec.states.size() - 1)]));
    return g;
}

// ---- definition-level oracles --------------------------------------------

// Pairwise domination scan: an element survives iff nothing strictly below
// it exists and no equal element precedes it.
template <typename C, typename Leq>
std::vector<C> brute_antichain(const std::vector<C>& xs, Leq&& leq) {
    std::vector<C> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool killed = false;
        for (std::size_t j = 0; j < xs.size() && !killed; ++j) {
            if (j == i) continue;
            if (!leq(xs[j], xs[i])) continue;
            if (!leq(xs[i], xs[j]) || j < i) killed = true;
        }
        if (!killed) out.push_back(xs[i]);
    }
    return out;
}

// Exhaustive backward reachability over the state set of a finite model.
inline bool finite_backward_coverable(const ProcessSpec& spec, const std::string& target_state) {
    std::set<std::string> reach{target_state};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : spec.transitions) {
            if (reach.count(t.to) && !reach.count(t.from)) {
                reach.insert(t.from);
                changed = true;
            }
        }
    }
    return std::any_of(spec.initial_states.begin(), spec.initial_states.end(),
                       [&](const std::string& q0) { return reach.count(q0) > 0; });
}

// Bounded forward breadth-first search over the plain transition system.
inline bool forward_covers(const ProcessSpec& spec, const ProcessConfig& target,
                           std::int64_t max_counter, std::size_t max_depth) {
    std::set<ProcessConfig> seen;
    std::vector<ProcessConfig> level;
    for (const auto& q0 : spec.initial_states) {
        ProcessConfig c{q0, std::vector<std::int64_t>(spec.dimension, 0)};
        if (seen.insert(c).second) level.push_back(c);
    }
    for (std::size_t depth = 0;; ++depth) {
        for (const auto& c : level)
            if (config_leq(target, c)) return true;
        if (depth == max_depth || level.empty()) return false;
        std::vector<ProcessConfig> next;
        for (const auto& c : level) {
            for (const auto& t : spec.transitions) {
                auto s = step(c, t);
                if (!s) continue;
                bool capped = std::any_of(s->counters.begin(), s->counters.end(),
                                          [&](std::int64_t v) { return v > max_counter; });
                if (capped) continue;
                if (seen.insert(*s).second) next.push_back(std::move(*s));
            }
        }
        level = std::move(next);
    }
}

// Longest simple path by enumerating every ordered vertex sequence.
inline std::size_t longest_path_by_permutations(const Shape& g) {
    const std::size_t n = g.size();
    std::size_t best = 0;
    std::vector<std::size_t> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1) subset.push_back(v);
        std::sort(subset.begin(), subset.end());
        do {
            bool path = true;
            for (std::size_t i = 0; i + 1 < subset.size() && path; ++i)
                path = g.adjacent(subset[i], subset[i + 1]);
            if (path) best = std::max(best, subset.size() - 1);
        } while (std::next_permutation(subset.begin(), subset.end()));
    }
    return best;
}

// Induced embedding by enumerating every injection via full permutations.
inline bool induced_leq_by_enumeration(const LabelledGraph& g1, const LabelledGraph& g2) {
    const std::size_t n1 = g1.size(), n2 = g2.size();
    if (n1 > n2) return false;
    std::vector<std::size_t> perm(n2);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (std::size_t u = 0; u < n1 && ok; ++u) {
            if (!config_leq(g1.labels[u], g2.labels[perm[u]])) ok = false;
            for (std::size_t v = u + 1; v < n1 && ok; ++v)
                if (g1.shape.adjacent(u, v) != g2.shape.adjacent(perm[u], perm[v])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Every labelling of the given shape with states of a finite model.
inline std::vector<LabelledGraph> all_labelings(const ProcessSpec& spec, const Shape& shape) {
    std::vector<LabelledGraph> out;
    const std::size_t n = shape.size();
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        LabelledGraph g{shape, {}};
        for (std::size_t v = 0; v < n; ++v) g.labels.push_back(fin(spec.states[idx[v]]));
        out.push_back(std::move(g));
        std::size_t v = 0;
        while (v < n) {
            if (++idx[v] < spec.states.size()) break;
            idx[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return out;
}

}  // namespace testutil
