#include "bncover/explore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bncover {

namespace {

bool covers_target(const ProcessConfig& c, const ProcessConfig& target) {
    return config_leq(target, c);
}

bool within_cap(const ProcessConfig& c, const ProcessSpec& spec, std::int64_t cap) {
    if (spec.kind != ModelKind::Vass) return true;
    return std::all_of(c.counters.begin(), c.counters.end(),
                       [cap](std::int64_t v) { return v <= cap; });
}

std::vector<ProcessConfig> initial_process_configs(const ProcessSpec& spec) {
    std::vector<ProcessConfig> out;
    for (const auto& q : spec.initial_states)
        out.push_back(ProcessConfig{q, std::vector<std::int64_t>(spec.dimension, 0)});
    return out;
}

const TransitionRule& rule_by_id(const ProcessSpec& spec, const std::string& id) {
    for (const auto& t : spec.transitions)
        if (t.id == id) return t;
    throw std::invalid_argument("replay: unknown transition id '" + id + "'");
}

void take_from(Multiset& ms, const ProcessConfig& c) {
    auto it = std::find(ms.begin(), ms.end(), c);
    if (it == ms.end())
        throw std::invalid_argument("replay: configuration " + to_string(c) + " not present");
    ms.erase(it);
}

// ---- reconfigurable semantics ----------------------------------------

struct ReceiveOption {
    std::string rule_id;  // empty: node stays put (left disconnected)
    ProcessConfig result;
};

struct RbnSucc {
    Multiset state;
    RbnTraceStep step;
};

// All distributions of `count` identical nodes over the option list.
template <typename Fn>
void for_each_distribution(std::size_t count, std::size_t slots, std::vector<std::size_t>& acc,
                           Fn&& fn) {
    if (slots == 1) {
        acc.push_back(count);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (std::size_t take = 0; take <= count; ++take) {
        acc.push_back(take);
        for_each_distribution(count - take, slots - 1, acc, fn);
        acc.pop_back();
    }
}

std::vector<RbnSucc> rbn_successors(const ProcessSpec& spec, const Multiset& ms,
                                    std::int64_t counter_cap, bool& pruned) {
    std::vector<RbnSucc> out;
    for (std::size_t pos = 0; pos < ms.size(); ++pos) {
        if (pos > 0 && ms[pos] == ms[pos - 1]) continue;  // same broadcaster config
        const ProcessConfig& c = ms[pos];
        for (const auto& t : spec.transitions) {
            if (t.kind != ActionKind::Broadcast) continue;
            auto after = step(c, t);
            if (!after) continue;
            if (!within_cap(*after, spec, counter_cap)) {
                pruned = true;
                continue;
            }
            Multiset rest = ms;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            // Group the remaining nodes by configuration.
            std::vector<std::pair<ProcessConfig, std::size_t>> groups;
            for (const auto& d : rest) {
                if (!groups.empty() && groups.back().first == d)
                    ++groups.back().second;
                else
                    groups.emplace_back(d, 1);
            }
            // Receive options per group; staying disconnected is always one.
            std::vector<std::vector<ReceiveOption>> options(groups.size());
            for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                options[gi].push_back(ReceiveOption{"", groups[gi].first});
                for (const auto& r : spec.transitions) {
                    if (r.kind != ActionKind::Receive || r.letter != t.letter) continue;
                    auto res = step(groups[gi].first, r);
                    if (!res) continue;
                    if (!within_cap(*res, spec, counter_cap)) {
                        pruned = true;
                        continue;
                    }
                    bool dup = std::any_of(
                        options[gi].begin(), options[gi].end(),
                        [&](const ReceiveOption& o) { return o.result == *res; });
                    if (!dup) options[gi].push_back(ReceiveOption{r.id, std::move(*res)});
                }
            }
            // One distribution per group, combined over all groups.
            std::vector<std::vector<std::vector<std::size_t>>> per_group(groups.size());
            for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                std::vector<std::size_t> acc;
                for_each_distribution(groups[gi].second, options[gi].size(), acc,
                                      [&](const std::vector<std::size_t>& counts) {
                                          per_group[gi].push_back(counts);
                                      });
            }
            std::vector<std::size_t> pick(groups.size(), 0);
            for (;;) {
                Multiset next{*after};
                std::vector<RbnReceive> receivers;
                for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                    const auto& counts = per_group[gi][pick[gi]];
                    for (std::size_t oi = 0; oi < counts.size(); ++oi) {
                        const ReceiveOption& opt = options[gi][oi];
                        for (std::size_t rep = 0; rep < counts[oi]; ++rep) {
                            next.push_back(opt.result);
                            if (!opt.rule_id.empty())
                                receivers.push_back(
                                    RbnReceive{groups[gi].first, opt.rule_id, opt.result});
                        }
                    }
                }
                std::sort(next.begin(), next.end());
                out.push_back(RbnSucc{std::move(next),
                                      RbnTraceStep{c, t.id, t.letter, *after, std::move(receivers)}});
                std::size_t gi = 0;
                while (gi < groups.size()) {
                    if (++pick[gi] < per_group[gi].size()) break;
                    pick[gi] = 0;
                    ++gi;
                }
                if (gi == groups.size()) break;
            }
        }
    }
    return out;
}

// Multisets of the given size over the listed configurations.
void multisets_of(const std::vector<ProcessConfig>& pool, std::size_t size, std::size_t from,
                  Multiset& acc, std::vector<Multiset>& out) {
    if (size == 0) {
        Multiset m = acc;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        acc.push_back(pool[i]);
        multisets_of(pool, size - 1, i, acc, out);
        acc.pop_back();
    }
}

}  // namespace

RbnExploreResult explore_rbn(const ProcessSpec& spec, const ProcessConfig& target,
                             const ExplorationBounds& bounds) {
    validate_config(target, spec);
    RbnExploreResult res;
    bool pruned = false;
    auto inits = initial_process_configs(spec);
    for (std::size_t n = 1; n <= bounds.max_nodes; ++n) {
        std::vector<Multiset> roots;
        {
            Multiset acc;
            multisets_of(inits, n, 0, acc, roots);
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        }
        std::set<Multiset> visited;
        std::map<Multiset, std::pair<Multiset, RbnTraceStep>> parent;
        auto finish = [&](const Multiset& hit) {
            res.found = true;
            res.final_config = hit;
            Multiset cur = hit;
            while (parent.count(cur)) {
                auto& [prev, st] = parent.at(cur);
                res.trace.push_back(st);
                cur = prev;
            }
            std::reverse(res.trace.begin(), res.trace.end());
            res.initial = cur;
            res.states_explored += visited.size();
        };
        std::vector<Multiset> level;
        for (const auto& m : roots) {
            visited.insert(m);
            level.push_back(m);
        }
        for (const auto& m : level) {
            if (std::any_of(m.begin(), m.end(),
                            [&](const ProcessConfig& c) { return covers_target(c, target); })) {
                finish(m);
                return res;
            }
        }
        std::size_t depth = 0;
        while (!level.empty()) {
            std::vector<std::pair<Multiset, std::pair<Multiset, RbnTraceStep>>> fresh;
            std::set<Multiset> fresh_seen;
            for (const auto& m : level) {
                for (auto& succ : rbn_successors(spec, m, bounds.max_counter, pruned)) {
                    if (visited.count(succ.state) || fresh_seen.count(succ.state)) continue;
                    fresh_seen.insert(succ.state);
                    fresh.emplace_back(succ.state, std::make_pair(m, std::move(succ.step)));
                }
            }
            if (fresh.empty()) break;  // this node count is fully explored
            if (depth == bounds.max_depth) {
                pruned = true;  // unexplored states beyond the depth bound
                break;
            }
            level.clear();
            for (auto& [state, link] : fresh) {
                visited.insert(state);
                parent.emplace(state, std::move(link));
                level.push_back(state);
            }
            ++depth;
            for (const auto& m : level) {
                if (std::any_of(m.begin(), m.end(), [&](const ProcessConfig& c) {
                        return covers_target(c, target);
                    })) {
                    finish(m);
                    return res;
                }
            }
        }
        res.states_explored += visited.size();
    }
    res.exhausted = !pruned;
    return res;
}

Multiset replay_rbn(const ProcessSpec& spec, Multiset initial,
                    const std::vector<RbnTraceStep>& trace) {
    Multiset current = std::move(initial);
    std::sort(current.begin(), current.end());
    for (const auto& st : trace) {
        take_from(current, st.broadcaster_before);
        const TransitionRule& t = rule_by_id(spec, st.rule_id);
        if (t.kind != ActionKind::Broadcast || t.letter != st.letter)
            throw std::invalid_argument("replay: rule '" + t.id + "' is not a !!" + st.letter);
        auto after = step(st.broadcaster_before, t);
        if (!after || !(*after == st.broadcaster_after))
            throw std::invalid_argument("replay: broadcast step does not apply");
        for (const auto& r : st.receivers) {
            take_from(current, r.before);
            const TransitionRule& rr = rule_by_id(spec, r.rule_id);
            if (rr.kind != ActionKind::Receive || rr.letter != st.letter)
                throw std::invalid_argument("replay: rule '" + rr.id + "' is not a ??" + st.letter);
            auto ra = step(r.before, rr);
            if (!ra || !(*ra == r.after))
                throw std::invalid_argument("replay: receive step does not apply");
        }
        current.push_back(st.broadcaster_after);
        for (const auto& r : st.receivers) current.push_back(r.after);
        std::sort(current.begin(), current.end());
    }
    return current;
}

// ---- static semantics -------------------------------------------------

std::vector<std::pair<std::vector<ProcessConfig>, StaticTraceStep>> static_successors(
    const ProcessSpec& spec, const Shape& shape, const std::vector<ProcessConfig>& labels) {
    if (labels.size() != shape.size())
        throw std::invalid_argument("static_successors: one label per vertex required");
    std::vector<std::pair<std::vector<ProcessConfig>, StaticTraceStep>> out;
    for (std::size_t v = 0; v < shape.size(); ++v) {
        auto nbrs = shape.neighbors(v);
        for (const auto& t : spec.transitions) {
            if (t.kind != ActionKind::Broadcast) continue;
            auto after_v = step(labels[v], t);
            if (!after_v) continue;
            std::vector<std::vector<std::pair<const TransitionRule*, ProcessConfig>>> per_nbr;
            bool blocked = false;
            for (std::size_t u : nbrs) {
                std::vector<std::pair<const TransitionRule*, ProcessConfig>> opts;
                for (const auto& r : spec.transitions) {
                    if (r.kind != ActionKind::Receive || r.letter != t.letter) continue;
                    if (auto res = step(labels[u], r)) opts.emplace_back(&r, std::move(*res));
                }
                if (opts.empty()) {
                    blocked = true;  // a deaf neighbor blocks the broadcast
                    break;
                }
                per_nbr.push_back(std::move(opts));
            }
            if (blocked) continue;
            std::vector<std::size_t> idx(per_nbr.size(), 0);
            for (;;) {
                std::vector<ProcessConfig> next = labels;
                next[v] = *after_v;
                StaticTraceStep st{v, t.id, t.letter, {}};
                for (std::size_t i = 0; i < nbrs.size(); ++i) {
                    next[nbrs[i]] = per_nbr[i][idx[i]].second;
                    st.receivers.push_back(StaticReceive{nbrs[i], per_nbr[i][idx[i]].first->id});
                }
                out.emplace_back(std::move(next), std::move(st));
                std::size_t i = 0;
                while (i < per_nbr.size()) {
                    if (++idx[i] < per_nbr[i].size()) break;
                    idx[i] = 0;
                    ++i;
                }
                if (i == per_nbr.size()) break;
            }
        }
    }
    return out;
}

StaticExploreResult explore_static(const ProcessSpec& spec, const ProcessConfig& target,
                                   const Shape& shape, const ExplorationBounds& bounds) {
    validate_config(target, spec);
    if (shape.size() == 0) throw std::invalid_argument("explore_static: shape must be nonempty");
    StaticExploreResult res;
    bool pruned = false;
    auto inits = initial_process_configs(spec);
    const std::size_t n = shape.size();
    using Labels = std::vector<ProcessConfig>;
    std::vector<Labels> roots;
    {
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            Labels l;
            l.reserve(n);
            for (std::size_t v = 0; v < n; ++v) l.push_back(inits[idx[v]]);
            roots.push_back(std::move(l));
            std::size_t v = 0;
            while (v < n) {
                if (++idx[v] < inits.size()) break;
                idx[v] = 0;
                ++v;
            }
            if (v == n) break;
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    }
    std::set<Labels> visited;
    std::map<Labels, std::pair<Labels, StaticTraceStep>> parent;
    auto hit_target = [&](const Labels& l) {
        return std::any_of(l.begin(), l.end(),
                           [&](const ProcessConfig& c) { return config_leq(target, c); });
    };
    auto finish = [&](const Labels& hit) {
        res.found = true;
        res.final_labels = hit;
        Labels cur = hit;
        while (parent.count(cur)) {
            auto& [prev, st] = parent.at(cur);
            res.trace.push_back(st);
            cur = prev;
        }
        std::reverse(res.trace.begin(), res.trace.end());
        res.initial = cur;
        res.states_explored = visited.size();
    };
    std::vector<Labels> level;
    for (const auto& l : roots) {
        visited.insert(l);
        level.push_back(l);
    }
    for (const auto& l : level) {
        if (hit_target(l)) {
            finish(l);
            return res;
        }
    }
    std::size_t depth = 0;
    while (!level.empty()) {
        std::vector<std::pair<Labels, std::pair<Labels, StaticTraceStep>>> fresh;
        std::set<Labels> fresh_seen;
        for (const auto& l : level) {
            for (auto& [next, st] : static_successors(spec, shape, l)) {
                bool capped =
                    spec.kind == ModelKind::Vass &&
                    std::any_of(next.begin(), next.end(), [&](const ProcessConfig& c) {
                        return !within_cap(c, spec, bounds.max_counter);
                    });
                if (capped) {
                    pruned = true;
                    continue;
                }
                if (visited.count(next) || fresh_seen.count(next)) continue;
                fresh_seen.insert(next);
                fresh.emplace_back(next, std::make_pair(l, std::move(st)));
            }
        }
        if (fresh.empty()) break;
        if (depth == bounds.max_depth) {
            pruned = true;
            break;
        }
        level.clear();
        for (auto& [state, link] : fresh) {
            visited.insert(state);
            parent.emplace(state, std::move(link));
            level.push_back(state);
        }
        ++depth;
        for (const auto& l : level) {
            if (hit_target(l)) {
                finish(l);
                return res;
            }
        }
    }
    res.states_explored = visited.size();
    res.exhausted = !pruned;
    return res;
}

std::vector<ProcessConfig> replay_static(const ProcessSpec& spec, const Shape& shape,
                                         std::vector<ProcessConfig> initial,
                                         const std::vector<StaticTraceStep>& trace) {
    LabelledGraph g{shape, std::move(initial)};
    if (g.labels.size() != shape.size())
        throw std::invalid_argument("replay: one label per vertex required");
    for (const auto& st : trace) {
        std::map<std::size_t, TransitionRule> choice;
        choice.emplace(st.broadcaster, rule_by_id(spec, st.rule_id));
        for (const auto& r : st.receivers) choice.emplace(r.vertex, rule_by_id(spec, r.rule_id));
        auto next = broadcast_step(g, st.broadcaster, st.letter, choice);
        if (!next) throw std::invalid_argument("replay: broadcast step does not apply");
        g = std::move(*next);
    }
    return g.labels;
}

}  // namespace bncover
