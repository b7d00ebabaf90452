#include "bncover/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bncover {

Shape::Shape(std::size_t n) : n_(n), adj_(n, 0) {
    if (n > 31) throw std::invalid_argument("Shape: graphs are limited to 31 vertices");
}

Shape Shape::clique(std::size_t n) {
    Shape g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Shape Shape::path(std::size_t n) {
    Shape g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

void Shape::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("Shape::add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("Shape::add_edge: self-loops are not allowed");
    adj_[u] |= std::uint32_t{1} << v;
    adj_[v] |= std::uint32_t{1} << u;
}

bool Shape::adjacent(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) return false;
    return (adj_[u] >> v) & 1;
}

std::size_t Shape::degree(std::size_t v) const {
    if (v >= n_) throw std::invalid_argument("Shape::degree: vertex out of range");
    return static_cast<std::size_t>(std::popcount(adj_[v]));
}

std::vector<std::size_t> Shape::neighbors(std::size_t v) const {
    if (v >= n_) throw std::invalid_argument("Shape::neighbors: vertex out of range");
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < n_; ++w)
        if ((adj_[v] >> w) & 1) out.push_back(w);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Shape::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::size_t Shape::edge_count() const { return edges().size(); }

bool is_clique(const Shape& g) {
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) return false;
    return true;
}

bool is_connected(const Shape& g) {
    const std::size_t n = g.size();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::optional<std::size_t> diameter(const Shape& g) {
    const std::size_t n = g.size();
    if (n == 0) return std::nullopt;
    std::size_t worst = 0;
    std::vector<std::size_t> dist(n);
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), SIZE_MAX);
        dist[src] = 0;
        std::vector<std::size_t> queue{src};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t v = queue[head];
            for (std::size_t w : g.neighbors(v)) {
                if (dist[w] == SIZE_MAX) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (dist[v] == SIZE_MAX) return std::nullopt;
            worst = std::max(worst, dist[v]);
        }
    }
    return worst;
}

std::size_t longest_simple_path(const Shape& g) {
    const std::size_t n = g.size();
    std::size_t best = 0;
    auto dfs = [&](auto&& self, std::size_t v, std::uint32_t visited, std::size_t len) -> void {
        best = std::max(best, len);
        for (std::size_t w = 0; w < n; ++w)
            if (g.adjacent(v, w) && !((visited >> w) & 1))
                self(self, w, visited | (std::uint32_t{1} << w), len + 1);
    };
    for (std::size_t v = 0; v < n; ++v) dfs(dfs, v, std::uint32_t{1} << v, 0);
    return best;
}

bool shape_isomorphic(const Shape& a, const Shape& b) {
    const std::size_t n = a.size();
    if (n != b.size()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    std::vector<std::size_t> da(n), db(n);
    for (std::size_t v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<std::size_t> map(n);
    std::vector<bool> used(n, false);
    auto place = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || da[i] != db[w]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (a.adjacent(i, j) != b.adjacent(map[j], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[i] = w;
            used[w] = true;
            if (self(self, i + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return place(place, 0);
}

namespace {

// Lexicographic index of the unordered pair (u, v), u < v, over n vertices.
std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < u; ++i) idx += n - 1 - i;
    return idx + (v - u - 1);
}

std::uint64_t edge_mask_under(const Shape& g, const std::vector<std::size_t>& perm) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) {
        std::size_t a = perm[u], b = perm[v];
        if (a > b) std::swap(a, b);
        mask |= std::uint64_t{1} << pair_index(g.size(), a, b);
    }
    return mask;
}

}  // namespace

std::uint64_t canonical_edge_mask(const Shape& g) {
    const std::size_t n = g.size();
    if (n > 8) throw std::invalid_argument("canonical_edge_mask: supported up to 8 vertices");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = edge_mask_under(g, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, edge_mask_under(g, perm));
    return best;
}

Shape shape_from_edge_mask(std::size_t n, std::uint64_t mask) {
    Shape g(n);
    std::size_t idx = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++idx)
            if ((mask >> idx) & 1) g.add_edge(u, v);
    return g;
}

std::string to_string(const LabelledGraph& g) {
    std::ostringstream os;
    os << '{';
    for (std::size_t v = 0; v < g.labels.size(); ++v) {
        if (v) os << ", ";
        os << to_string(g.labels[v]);
    }
    os << '}';
    auto es = g.shape.edges();
    if (!es.empty()) {
        os << " edges{";
        for (std::size_t k = 0; k < es.size(); ++k) {
            if (k) os << ", ";
            os << es[k].first << '-' << es[k].second;
        }
        os << '}';
    }
    return os.str();
}

TopologyClass TopologyClass::clique() {
    TopologyClass c;
    c.kind = Kind::Clique;
    return c;
}

TopologyClass TopologyClass::path_bounded(std::size_t k) {
    TopologyClass c;
    c.kind = Kind::PathBounded;
    c.path_bound = k;
    return c;
}

TopologyClass TopologyClass::fixed_graph(Shape shape) {
    if (shape.size() == 0) throw std::invalid_argument("fixed topology must be nonempty");
    if (!is_connected(shape)) throw std::invalid_argument("fixed topology must be connected");
    TopologyClass c;
    c.kind = Kind::FixedGraph;
    c.shape = std::move(shape);
    return c;
}

TopologyClass TopologyClass::bounded_diam_deg(std::size_t k, std::size_t d, std::size_t n_max) {
    if (k < 1 || d < 1 || n_max < 1)
        throw std::invalid_argument("bounded_diam_deg: all bounds must be at least 1");
    TopologyClass c;
    c.kind = Kind::BoundedDiamDeg;
    c.diameter_bound = k;
    c.degree_bound = d;
    c.max_vertices = n_max;
    return c;
}

bool induced_embedding_leq(const LabelledGraph& g1, const LabelledGraph& g2) {
    const std::size_t n1 = g1.size(), n2 = g2.size();
    if (n1 > n2) return false;
    std::vector<std::size_t> map(n1);
    std::vector<bool> used(n2, false);
    auto place = [&](auto&& self, std::size_t i) -> bool {
        if (i == n1) return true;
        for (std::size_t w = 0; w < n2; ++w) {
            if (used[w]) continue;
            if (!config_leq(g1.labels[i], g2.labels[w])) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (g1.shape.adjacent(i, j) != g2.shape.adjacent(map[j], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[i] = w;
            used[w] = true;
            if (self(self, i + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return place(place, 0);
}

bool clique_leq(const LabelledGraph& g1, const LabelledGraph& g2) {
    if (!is_clique(g1.shape) || !is_clique(g2.shape))
        throw std::invalid_argument("clique_leq: inputs must be cliques");
    const std::size_t n1 = g1.size(), n2 = g2.size();
    if (n1 > n2) return false;
    // Label multiset embedding via augmenting paths.
    std::vector<int> match(n2, -1);
    auto augment = [&](auto&& self, std::size_t u, std::vector<bool>& seen) -> bool {
        for (std::size_t w = 0; w < n2; ++w) {
            if (seen[w] || !config_leq(g1.labels[u], g2.labels[w])) continue;
            seen[w] = true;
            if (match[w] < 0 || self(self, static_cast<std::size_t>(match[w]), seen)) {
                match[w] = static_cast<int>(u);
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n1; ++u) {
        std::vector<bool> seen(n2, false);
        if (!augment(augment, u, seen)) return false;
    }
    return true;
}

bool pointwise_leq(const LabelledGraph& g1, const LabelledGraph& g2) {
    if (!(g1.shape == g2.shape)) return false;
    for (std::size_t v = 0; v < g1.labels.size(); ++v)
        if (!config_leq(g1.labels[v], g2.labels[v])) return false;
    return true;
}

std::function<bool(const LabelledGraph&, const LabelledGraph&)> class_order(
    const TopologyClass& cls) {
    switch (cls.kind) {
        case TopologyClass::Kind::Clique:
            return [](const LabelledGraph& a, const LabelledGraph& b) { return clique_leq(a, b); };
        case TopologyClass::Kind::PathBounded:
            return [](const LabelledGraph& a, const LabelledGraph& b) {
                return induced_embedding_leq(a, b);
            };
        case TopologyClass::Kind::FixedGraph:
        case TopologyClass::Kind::BoundedDiamDeg:
            // Labelings of a fixed vertex set; graphs of different shapes
            // are incomparable.
            return [](const LabelledGraph& a, const LabelledGraph& b) {
                return pointwise_leq(a, b);
            };
    }
    throw std::logic_error("class_order: unknown class");
}

bool in_class(const Shape& g, const TopologyClass& cls) {
    switch (cls.kind) {
        case TopologyClass::Kind::Clique:
            return is_clique(g);
        case TopologyClass::Kind::PathBounded:
            return longest_simple_path(g) <= cls.path_bound;
        case TopologyClass::Kind::FixedGraph:
            return shape_isomorphic(g, cls.shape);
        case TopologyClass::Kind::BoundedDiamDeg: {
            if (g.size() == 0 || g.size() > cls.max_vertices) return false;
            for (std::size_t v = 0; v < g.size(); ++v)
                if (g.degree(v) > cls.degree_bound) return false;
            auto diam = diameter(g);
            return diam.has_value() && *diam <= cls.diameter_bound;
        }
    }
    return false;
}

bool in_class(const LabelledGraph& g, const TopologyClass& cls) { return in_class(g.shape, cls); }

std::vector<ShapeExtension> class_extensions(const Shape& shape, const TopologyClass& cls) {
    if (cls.kind == TopologyClass::Kind::FixedGraph ||
        cls.kind == TopologyClass::Kind::BoundedDiamDeg)
        throw std::invalid_argument("class_extensions: class has a fixed vertex set");
    if (!in_class(shape, cls))
        throw std::invalid_argument("class_extensions: shape is not a member of the class");
    const std::size_t n = shape.size();
    std::vector<ShapeExtension> out;
    if (cls.kind == TopologyClass::Kind::Clique) {
        Shape ext(n + 1);
        for (auto [u, v] : shape.edges()) ext.add_edge(u, v);
        for (std::size_t v = 0; v < n; ++v) ext.add_edge(v, n);
        out.push_back(ShapeExtension{std::move(ext), n});
        return out;
    }
    // Path-bounded: any neighborhood that keeps the longest simple path in
    // bounds is admissible.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        Shape ext(n + 1);
        for (auto [u, v] : shape.edges()) ext.add_edge(u, v);
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1) ext.add_edge(v, n);
        if (longest_simple_path(ext) <= cls.path_bound)
            out.push_back(ShapeExtension{std::move(ext), n});
    }
    return out;
}

std::optional<LabelledGraph> broadcast_step(const LabelledGraph& g, std::size_t v,
                                            const std::string& letter,
                                            const std::map<std::size_t, TransitionRule>& choice) {
    if (v >= g.size()) throw std::invalid_argument("broadcast_step: no such vertex");
    auto nbrs = g.shape.neighbors(v);
    if (choice.size() != nbrs.size() + 1)
        throw std::invalid_argument(
            "broadcast_step: choice must cover exactly the broadcaster and its neighbors");
    auto bit = choice.find(v);
    if (bit == choice.end())
        throw std::invalid_argument("broadcast_step: no rule chosen for the broadcaster");
    if (bit->second.kind != ActionKind::Broadcast || bit->second.letter != letter)
        throw std::invalid_argument("broadcast_step: broadcaster rule must be labelled !!" +
                                    letter);
    for (std::size_t u : nbrs) {
        auto uit = choice.find(u);
        if (uit == choice.end())
            throw std::invalid_argument("broadcast_step: no rule chosen for neighbor " +
                                        std::to_string(u));
        if (uit->second.kind != ActionKind::Receive || uit->second.letter != letter)
            throw std::invalid_argument("broadcast_step: neighbor rule must be labelled ??" +
                                        letter);
    }
    LabelledGraph out = g;
    auto stepped = step(g.labels[v], bit->second);
    if (!stepped) return std::nullopt;
    out.labels[v] = std::move(*stepped);
    for (std::size_t u : nbrs) {
        auto s = step(g.labels[u], choice.at(u));
        if (!s) return std::nullopt;
        out.labels[u] = std::move(*s);
    }
    return out;
}

namespace {

struct Move {
    ProcessConfig before;
    ProcessConfig after;
};

// All (config, successor) pairs where the config comes from the basis and
// the move uses a rule with the given kind and letter.
std::vector<Move> moves_from(const std::vector<ProcessConfig>& basis, ActionKind kind,
                             const std::string& letter, const ProcessSpec& spec) {
    std::vector<Move> out;
    for (const auto& b : basis)
        for (const auto& t : spec.transitions) {
            if (t.kind != kind || t.letter != letter) continue;
            if (auto after = step(b, t)) out.push_back(Move{b, std::move(*after)});
        }
    return out;
}

template <typename Fn>
void for_each_combo(const std::vector<std::vector<Move>>& options, Fn&& fn) {
    std::vector<std::size_t> idx(options.size(), 0);
    for (;;) {
        fn(idx);
        std::size_t i = 0;
        while (i < options.size()) {
            if (++idx[i] < options[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == options.size()) break;
    }
}

// Receive-side pre-configurations for every neighbor, or nothing when some
// neighbor has no predecessor through ??letter (that candidate broadcast
// cannot be undone there).
std::optional<std::vector<std::vector<Move>>> receiver_moves(
    const LabelledGraph& theta, const std::vector<std::size_t>& nbrs, const std::string& letter,
    const ProcessSpec& spec) {
    std::vector<std::vector<Move>> rmoves;
    rmoves.reserve(nbrs.size());
    for (std::size_t u : nbrs) {
        auto bu = pre_basis_labelled(theta.labels[u], ActionLabel{ActionKind::Receive, letter},
                                     spec);
        if (bu.empty()) return std::nullopt;
        rmoves.push_back(moves_from(bu, ActionKind::Receive, letter, spec));
        if (rmoves.back().empty()) return std::nullopt;
    }
    return rmoves;
}

// Predecessors whose broadcaster is a vertex of theta itself: relabel the
// broadcaster with a pre-configuration of its current label and every
// neighbor with a pre-configuration of its own label, then keep the
// candidate iff stepping it lands in the given upward-closed set.
template <typename Emit>
void internal_pre(const LabelledGraph& theta, const ProcessSpec& spec, Emit&& emit) {
    const std::size_t n = theta.size();
    for (std::size_t v = 0; v < n; ++v) {
        auto nbrs = theta.shape.neighbors(v);
        for (const auto& a : spec.alphabet) {
            auto bv =
                pre_basis_labelled(theta.labels[v], ActionLabel{ActionKind::Broadcast, a}, spec);
            if (bv.empty()) continue;
            auto bmoves = moves_from(bv, ActionKind::Broadcast, a, spec);
            if (bmoves.empty()) continue;
            auto rmoves = receiver_moves(theta, nbrs, a, spec);
            if (!rmoves) continue;
            for (const Move& bm : bmoves) {
                for_each_combo(*rmoves, [&](const std::vector<std::size_t>& idx) {
                    LabelledGraph before = theta, after = theta;
                    before.labels[v] = bm.before;
                    after.labels[v] = bm.after;
                    for (std::size_t i = 0; i < nbrs.size(); ++i) {
                        const Move& m = (*rmoves)[i][idx[i]];
                        before.labels[nbrs[i]] = m.before;
                        after.labels[nbrs[i]] = m.after;
                    }
                    emit(std::move(before), std::move(after));
                });
            }
        }
    }
}

// Predecessors with one extra vertex that broadcasts into theta: the fresh
// vertex starts at a minimal enabling configuration of some broadcast rule
// and its neighbors inside theta are relabelled as above.
template <typename Emit>
void external_pre(const LabelledGraph& theta, const ProcessSpec& spec, const TopologyClass& cls,
                  Emit&& emit) {
    for (const ShapeExtension& ext : class_extensions(theta.shape, cls)) {
        const std::size_t v = ext.new_vertex;
        auto nbrs = ext.shape.neighbors(v);
        for (const auto& a : spec.alphabet) {
            std::vector<Move> bmoves;
            for (const auto& t : spec.transitions) {
                if (t.kind != ActionKind::Broadcast || t.letter != a) continue;
                for (const auto& c : min_enabling(t))
                    if (auto after = step(c, t)) bmoves.push_back(Move{c, std::move(*after)});
            }
            if (bmoves.empty()) continue;
            auto rmoves = receiver_moves(theta, nbrs, a, spec);
            if (!rmoves) continue;
            for (const Move& bm : bmoves) {
                for_each_combo(*rmoves, [&](const std::vector<std::size_t>& idx) {
                    LabelledGraph before{ext.shape, theta.labels};
                    LabelledGraph after{ext.shape, theta.labels};
                    before.labels.push_back(bm.before);
                    after.labels.push_back(bm.after);
                    for (std::size_t i = 0; i < nbrs.size(); ++i) {
                        const Move& m = (*rmoves)[i][idx[i]];
                        before.labels[nbrs[i]] = m.before;
                        after.labels[nbrs[i]] = m.after;
                    }
                    emit(std::move(before), std::move(after));
                });
            }
        }
    }
}

}  // namespace

GraphBasis graph_pre_basis(const GraphBasis& basis, const ProcessSpec& spec,
                           const TopologyClass& cls) {
    auto leq = class_order(cls);
    std::vector<LabelledGraph> collected;
    auto consider = [&](LabelledGraph before, LabelledGraph after) {
        if (basis_contains(basis, after, leq)) collected.push_back(std::move(before));
    };
    const bool extends =
        cls.kind == TopologyClass::Kind::Clique || cls.kind == TopologyClass::Kind::PathBounded;
    for (const LabelledGraph& theta : basis.elements) {
        internal_pre(theta, spec, consider);
        if (extends) external_pre(theta, spec, cls, consider);
    }
    return minimize(collected, leq);
}

bool graph_init_covers(const LabelledGraph& g, const ProcessSpec& spec) {
    return std::all_of(g.labels.begin(), g.labels.end(),
                       [&](const ProcessConfig& c) { return init_covers(c, spec); });
}

Wsts<LabelledGraph> class_wsts(const ProcessSpec& spec, const TopologyClass& cls) {
    if (cls.kind != TopologyClass::Kind::Clique && cls.kind != TopologyClass::Kind::PathBounded)
        throw std::invalid_argument("class_wsts: supported classes are clique and path-bounded");
    Wsts<LabelledGraph> sys;
    sys.leq = class_order(cls);
    sys.pre_basis = [spec, cls](const LabelledGraph& theta) {
        return graph_pre_basis(GraphBasis{{theta}}, spec, cls).elements;
    };
    sys.init_covers = [spec](const LabelledGraph& g) { return graph_init_covers(g, spec); };
    return sys;
}

Wsts<LabelledGraph> fixed_shape_wsts(const ProcessSpec& spec, const Shape& shape) {
    if (shape.size() == 0) throw std::invalid_argument("fixed_shape_wsts: shape must be nonempty");
    Wsts<LabelledGraph> sys;
    sys.leq = [](const LabelledGraph& a, const LabelledGraph& b) { return pointwise_leq(a, b); };
    sys.pre_basis = [spec](const LabelledGraph& theta) {
        std::vector<LabelledGraph> collected;
        internal_pre(theta, spec, [&](LabelledGraph before, LabelledGraph after) {
            if (pointwise_leq(theta, after)) collected.push_back(std::move(before));
        });
        return minimize(collected, pointwise_leq).elements;
    };
    sys.init_covers = [spec](const LabelledGraph& g) { return graph_init_covers(g, spec); };
    return sys;
}

CoverabilityResult<LabelledGraph> static_coverable(const ProcessSpec& spec,
                                                   const ProcessConfig& target,
                                                   const TopologyClass& cls,
                                                   std::optional<std::size_t> max_iterations) {
    validate_config(target, spec);
    LabelledGraph g0{Shape(1), {target}};
    return backward_coverability(class_wsts(spec, cls), GraphBasis{{std::move(g0)}},
                                 max_iterations);
}

CoverabilityResult<LabelledGraph> fixed_graph_coverable(const ProcessSpec& spec,
                                                        const ProcessConfig& target,
                                                        const Shape& shape,
                                                        std::optional<std::size_t> max_iterations) {
    if (shape.size() == 0)
        throw std::invalid_argument("fixed_graph_coverable: shape must be nonempty");
    validate_config(target, spec);
    const std::size_t n = shape.size();
    auto minimal = minimal_configs(spec);
    // Target basis: the target at one position, minimal configurations of
    // the process at every other.
    std::vector<LabelledGraph> tuples;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            LabelledGraph g{shape, {}};
            g.labels.reserve(n);
            for (std::size_t p = 0; p < n; ++p)
                g.labels.push_back(p == i ? target : minimal[idx[p]]);
            tuples.push_back(std::move(g));
            std::size_t p = 0;
            while (p < n) {
                if (p == i) {
                    ++p;
                    continue;
                }
                if (++idx[p] < minimal.size()) break;
                idx[p] = 0;
                ++p;
            }
            if (p == n) break;
        }
    }
    auto basis = minimize(tuples, pointwise_leq);
    return backward_coverability(fixed_shape_wsts(spec, shape), std::move(basis), max_iterations);
}

std::vector<Shape> enumerate_diam_deg_shapes(std::size_t k, std::size_t d, std::size_t n_max) {
    if (k < 1 || d < 1 || n_max < 1)
        throw std::invalid_argument("enumerate_diam_deg_shapes: bounds must be at least 1");
    if (n_max > 8)
        throw std::invalid_argument("enumerate_diam_deg_shapes: enumeration supported up to 8 vertices");
    std::vector<Shape> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        std::set<std::uint64_t> canon;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Shape g = shape_from_edge_mask(n, mask);
            bool deg_ok = true;
            for (std::size_t v = 0; v < n && deg_ok; ++v) deg_ok = g.degree(v) <= d;
            if (!deg_ok) continue;
            auto diam = diameter(g);
            if (!diam || *diam > k) continue;
            canon.insert(canonical_edge_mask(g));
        }
        for (auto m : canon) out.push_back(shape_from_edge_mask(n, m));
    }
    return out;
}

CoverabilityResult<LabelledGraph> bounded_diam_deg_coverable(
    const ProcessSpec& spec, const ProcessConfig& target, std::size_t k, std::size_t d,
    std::size_t n_max, std::optional<std::size_t> max_iterations) {
    validate_config(target, spec);
    bool limit_hit = false;
    CoverabilityResult<LabelledGraph> aggregate;
    for (const Shape& g : enumerate_diam_deg_shapes(k, d, n_max)) {
        auto res = fixed_graph_coverable(spec, target, g, max_iterations);
        res.iterations += aggregate.iterations;
        res.peak_basis_size = std::max(res.peak_basis_size, aggregate.peak_basis_size);
        if (res.verdict == Verdict::Coverable) return res;
        if (res.verdict == Verdict::LimitExceeded) limit_hit = true;
        aggregate = std::move(res);
    }
    aggregate.verdict = limit_hit ? Verdict::LimitExceeded : Verdict::Uncoverable;
    return aggregate;
}

}  // namespace bncover
