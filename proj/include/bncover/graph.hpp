// graph.hpp -- labelled-graph configurations of a broadcast network, the
// induced subgraph ordering, forward broadcast steps, and per-topology
// backward coverability (cliques, path-bounded graphs, fixed graphs,
// bounded diameter and degree).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bncover/order.hpp"
#include "bncover/process.hpp"

namespace bncover {

// Simple undirected graph on vertices 0..n-1. No self-loops. Adjacency
// is kept as per-vertex bitmasks, which caps graphs at 31 vertices; the
// engines here are explicit-state and only meant for small topologies.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::size_t n);

    static Shape clique(std::size_t n);
    static Shape path(std::size_t n);  // n vertices, n-1 edges in a line

    std::size_t size() const { return n_; }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const;

    bool operator==(const Shape&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> adj_;
};

bool is_clique(const Shape& g);
bool is_connected(const Shape& g);  // false for the empty graph
// Longest shortest-path distance; nullopt when disconnected or empty.
std::optional<std::size_t> diameter(const Shape& g);
// Maximum number of edges over all simple paths; 0 for a single vertex.
std::size_t longest_simple_path(const Shape& g);
bool shape_isomorphic(const Shape& a, const Shape& b);
// Smallest edge bitmask over all vertex relabelings; isomorphism
// invariant. Only supported up to 8 vertices.
std::uint64_t canonical_edge_mask(const Shape& g);
Shape shape_from_edge_mask(std::size_t n, std::uint64_t mask);

// A broadcast-network configuration: one process configuration per vertex.
struct LabelledGraph {
    Shape shape;
    std::vector<ProcessConfig> labels;

    std::size_t size() const { return shape.size(); }
    bool operator==(const LabelledGraph&) const = default;
};

std::string to_string(const LabelledGraph& g);

struct TopologyClass {
    enum class Kind { Clique, PathBounded, FixedGraph, BoundedDiamDeg };

    Kind kind = Kind::Clique;
    std::size_t path_bound = 0;  // PathBounded
    Shape shape;                 // FixedGraph
    std::size_t diameter_bound = 1, degree_bound = 1, max_vertices = 1;  // BoundedDiamDeg

    static TopologyClass clique();
    static TopologyClass path_bounded(std::size_t k);
    static TopologyClass fixed_graph(Shape shape);  // must be simple, connected, nonempty
    static TopologyClass bounded_diam_deg(std::size_t k, std::size_t d, std::size_t n_max);
};

using GraphBasis = UpwardBasis<LabelledGraph>;

// Induced subgraph ordering: an injection of vertices preserving edges
// and non-edges, with each label dominated by the image's label.
bool induced_embedding_leq(const LabelledGraph& g1, const LabelledGraph& g2);

// On cliques the induced ordering degenerates to multiset embedding of
// the labels; decided by bipartite matching. Rejects non-clique inputs.
bool clique_leq(const LabelledGraph& g1, const LabelledGraph& g2);

// Positionwise label order between two labelings of the same shape.
bool pointwise_leq(const LabelledGraph& g1, const LabelledGraph& g2);

// The order a class's coverability engine runs under.
std::function<bool(const LabelledGraph&, const LabelledGraph&)> class_order(
    const TopologyClass& cls);

bool in_class(const Shape& g, const TopologyClass& cls);
bool in_class(const LabelledGraph& g, const TopologyClass& cls);

// One-vertex extension of a shape inside a class. Old vertices keep
// their indices; the added vertex is new_vertex == shape.size() - 1.
struct ShapeExtension {
    Shape shape;
    std::size_t new_vertex;
};

// Every way of attaching one fresh vertex while staying in the class:
// a single all-adjacent extension for cliques, one extension per
// neighborhood subset that keeps the path bound for path-bounded graphs.
// Fixed-shape classes never extend and are rejected.
std::vector<ShapeExtension> class_extensions(const Shape& shape, const TopologyClass& cls);

// One broadcast: v takes its chosen !!a rule and every neighbor of v
// simultaneously takes its chosen ??a rule. Blocking semantics: nullopt
// unless every chosen rule is enabled. The choice must cover exactly v
// and its neighbors with rules of the right label.
std::optional<LabelledGraph> broadcast_step(const LabelledGraph& g, std::size_t v,
                                            const std::string& letter,
                                            const std::map<std::size_t, TransitionRule>& choice);

// Finite basis of the one-step predecessors (within the class) of the
// upward closure of the given basis.
GraphBasis graph_pre_basis(const GraphBasis& basis, const ProcessSpec& spec,
                           const TopologyClass& cls);

// True iff an initial relabeling of the same shape dominates g, i.e.
// every vertex label is dominated by some initial process configuration.
bool graph_init_covers(const LabelledGraph& g, const ProcessSpec& spec);

// Coverability of a single process configuration over all clique or all
// k-path-bounded topologies.
CoverabilityResult<LabelledGraph> static_coverable(const ProcessSpec& spec,
                                                   const ProcessConfig& target,
                                                   const TopologyClass& cls,
                                                   std::optional<std::size_t> max_iterations = {});

// Coverability over the labelings of one fixed shape, under the
// positionwise order.
CoverabilityResult<LabelledGraph> fixed_graph_coverable(
    const ProcessSpec& spec, const ProcessConfig& target, const Shape& shape,
    std::optional<std::size_t> max_iterations = {});

// All connected shapes up to isomorphism with at most n_max vertices,
// diameter at most k and degree at most d, in a deterministic order.
std::vector<Shape> enumerate_diam_deg_shapes(std::size_t k, std::size_t d, std::size_t n_max);

// Coverability over every connected topology with diameter <= k and
// degree <= d, enumerated explicitly up to n_max vertices.
CoverabilityResult<LabelledGraph> bounded_diam_deg_coverable(
    const ProcessSpec& spec, const ProcessConfig& target, std::size_t k, std::size_t d,
    std::size_t n_max, std::optional<std::size_t> max_iterations = {});

// The network over all clique or all k-path-bounded topologies as a
// backward-coverability system.
Wsts<LabelledGraph> class_wsts(const ProcessSpec& spec, const TopologyClass& cls);

// The network over the labelings of one fixed shape.
Wsts<LabelledGraph> fixed_shape_wsts(const ProcessSpec& spec, const Shape& shape);

}  // namespace bncover
