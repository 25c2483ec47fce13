#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "monosplit/field.hpp"
#include "monosplit/ideal.hpp"
#include "monosplit/splitting.hpp"

namespace monosplit {

/// Undirected simple graph on vertices 0..vertex_count-1.
class SimpleGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit SimpleGraph(std::size_t vertex_count = 0) : n_(vertex_count) {}
    /// Throws std::invalid_argument on loops or out-of-range endpoints;
    /// repeated edges collapse.
    SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges);

    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    std::size_t vertex_count() const noexcept { return n_; }
    /// Edges (u, v) with u < v, ascending.
    const std::set<Edge>& edges() const noexcept { return edges_; }
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

    /// Deletes v and its incident edges; v stays as an isolated vertex so
    /// indices (and the ambient ring) are unchanged.
    SimpleGraph without(std::size_t v) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::size_t n_;
    std::set<Edge> edges_;
};

/// Bipartite graph on x_1..x_n, y_1..y_n; an edge (i, j) joins x_i and y_j
/// (0-based here). As a SimpleGraph, x_i is vertex i and y_j is vertex n + j.
class BipartiteLabeledGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit BipartiteLabeledGraph(std::size_t n = 0) : n_(n) {}
    BipartiteLabeledGraph(std::size_t n, const std::vector<Edge>& edges);

    void add_edge(std::size_t x, std::size_t y);
    bool has_edge(std::size_t x, std::size_t y) const { return edges_.count({x, y}) > 0; }

    std::size_t part_size() const noexcept { return n_; }
    const std::set<Edge>& edges() const noexcept { return edges_; }

    SimpleGraph to_simple_graph() const;
    /// Induced subgraph on the pairs (x_k, y_k) for k in `keep`, relabelled
    /// 0.. in ascending order of k.
    BipartiteLabeledGraph induced_on_pairs(const std::vector<std::size_t>& keep) const;

    friend bool operator==(const BipartiteLabeledGraph&, const BipartiteLabeledGraph&) = default;

private:
    std::size_t n_;
    std::set<Edge> edges_;
};

MonomialIdeal edge_ideal(const SimpleGraph& g);

/// Non-isolated vertices v such that removing v leaves at least one edge.
std::vector<std::size_t> splitting_vertices(const SimpleGraph& g);

/// Verifies the x_v-partition of the edge ideal. Throws std::invalid_argument
/// unless v is a splitting vertex.
SplitReport edge_ideal_split(const SimpleGraph& g, std::size_t v, FieldSpec field);

inline constexpr std::size_t kVertexCoverCap = 24;

/// Every minimal vertex cover as a vertex bitmask, ascending. The edgeless
/// graph has the single cover ∅. Throws CapacityError above kVertexCoverCap vertices.
std::vector<std::uint64_t> minimal_vertex_covers(const SimpleGraph& g);

/// Generated by the squarefree monomials of the minimal vertex covers, in the
/// ring with one variable per vertex. Edgeless graphs give the unit ideal.
MonomialIdeal cover_ideal(const SimpleGraph& g);

/// The three Herzog-Hibi labelling conditions: (x_i, y_i) always an edge;
/// edges (x_i, y_j) only with i <= j; (x_i, y_j), (x_j, y_k) with i < j < k
/// force (x_i, y_k).
bool herzog_hibi_validate(const BipartiteLabeledGraph& g);

/// A relabelling that makes a Cohen-Macaulay bipartite graph satisfy
/// herzog_hibi_validate. New x-index of old x_i is x_position[i]; likewise
/// for y.
struct Relabeling {
    std::vector<std::size_t> x_position;
    std::vector<std::size_t> y_position;
    BipartiteLabeledGraph graph;
};

/// nullopt if no labelling (with x and y sides kept) satisfies the conditions.
std::optional<Relabeling> canonical_labeling(const BipartiteLabeledGraph& g);

/// Perfect matching (x_i, y_i) plus each (x_i, y_j), i < j, with probability
/// `density`, then closed under the transitivity condition. Deterministic per seed.
BipartiteLabeledGraph cm_bipartite_random(std::size_t n, double density, std::uint64_t seed);

/// Total Betti numbers of the cover ideal through the recursion
/// β_i(G) = β_i(G') + β_i(G'') + β_{i-1}(G''), with G' = G minus {x_n, y_n}
/// and G'' = G minus every pair (x_k, y_k) with x_k adjacent to y_n.
/// Non-canonical labellings are relabelled first; throws
/// std::invalid_argument if the graph is not Cohen-Macaulay bipartite.
std::vector<std::uint64_t> cover_betti_recursive(const BipartiteLabeledGraph& g);

/// The decomposition behind one recursion step, as ideals of the ring of G:
/// cover(G) = y_part + x_part with y_part = y_n·cover(G'),
/// x_part = x_{i_1}···x_{i_s}x_n·cover(G''), and
/// predicted_intersection = y_n·x_{i_1}···x_{i_s}x_n·cover(G'').
/// Requires a canonical labelling with n >= 1.
struct CoverSplit {
    std::size_t y_variable = 0;
    MonomialIdeal y_part;
    MonomialIdeal x_part;
    MonomialIdeal predicted_intersection;
    BipartiteLabeledGraph g_prime;
    BipartiteLabeledGraph g_double_prime;
};

CoverSplit cover_split(const BipartiteLabeledGraph& g);

/// Largest set of pairwise 3-disjoint edges: any two have four distinct
/// endpoints and no edge between them.
std::size_t three_disjoint_number(const SimpleGraph& g);

/// pd(cover ideal) == a(G) == reg(edge ideal) - 1.
bool cm_pd_reg_check(const BipartiteLabeledGraph& g, FieldSpec field);

}  // namespace monosplit
