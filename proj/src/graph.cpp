#include "monosplit/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "monosplit/errors.hpp"

namespace monosplit {

SimpleGraph::SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges) : n_(vertex_count) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
    edges_.emplace(std::min(u, v), std::max(u, v));
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
    return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph SimpleGraph::without(std::size_t v) const {
    SimpleGraph out(n_);
    for (const auto& [a, b] : edges_) {
        if (a != v && b != v) out.edges_.emplace(a, b);
    }
    return out;
}

BipartiteLabeledGraph::BipartiteLabeledGraph(std::size_t n, const std::vector<Edge>& edges) : n_(n) {
    for (const auto& [x, y] : edges) add_edge(x, y);
}

void BipartiteLabeledGraph::add_edge(std::size_t x, std::size_t y) {
    if (x >= n_ || y >= n_) throw std::invalid_argument("bipartite edge endpoint out of range");
    edges_.emplace(x, y);
}

SimpleGraph BipartiteLabeledGraph::to_simple_graph() const {
    SimpleGraph g(2 * n_);
    for (const auto& [x, y] : edges_) g.add_edge(x, n_ + y);
    return g;
}

BipartiteLabeledGraph BipartiteLabeledGraph::induced_on_pairs(const std::vector<std::size_t>& keep) const {
    std::vector<std::size_t> sorted(keep);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> position(n_, n_);
    for (std::size_t k = 0; k < sorted.size(); ++k) position.at(sorted[k]) = k;
    BipartiteLabeledGraph out(sorted.size());
    for (const auto& [x, y] : edges_) {
        if (position[x] < n_ && position[y] < n_) out.edges_.emplace(position[x], position[y]);
    }
    return out;
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
    std::vector<Monomial> gens;
    for (const auto& [u, v] : g.edges()) {
        gens.push_back(Monomial::variable(g.vertex_count(), u) * Monomial::variable(g.vertex_count(), v));
    }
    return minimalize(g.vertex_count(), gens);
}

std::vector<std::size_t> splitting_vertices(const SimpleGraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 0 && !g.without(v).edges().empty()) out.push_back(v);
    }
    return out;
}

SplitReport edge_ideal_split(const SimpleGraph& g, std::size_t v, FieldSpec field) {
    const auto vertices = splitting_vertices(g);
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) {
        throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is not a splitting vertex");
    }
    return split_report(xi_partition(edge_ideal(g), v), v, field);
}

std::vector<std::uint64_t> minimal_vertex_covers(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kVertexCoverCap) {
        throw CapacityError("vertex cover enumeration is capped at " + std::to_string(kVertexCoverCap) + " vertices");
    }
    std::vector<std::uint64_t> adjacency(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adjacency[u] |= std::uint64_t{1} << v;
        adjacency[v] |= std::uint64_t{1} << u;
    }
    const std::vector<SimpleGraph::Edge> edges(g.edges().begin(), g.edges().end());

    std::vector<std::uint64_t> covers;
    // Branch on the first uncovered edge (u, v): either u is in the cover, or
    // u is out and then all of N(u) must be in. Each cover is reached once.
    std::function<void(std::uint64_t, std::uint64_t)> branch = [&](std::uint64_t in, std::uint64_t out) {
        const auto uncovered = std::find_if(edges.begin(), edges.end(), [&](const auto& e) {
            return !(in >> e.first & 1u) && !(in >> e.second & 1u);
        });
        if (uncovered == edges.end()) {
            for (std::uint64_t rest = in; rest; rest &= rest - 1) {
                const auto w = static_cast<std::size_t>(std::countr_zero(rest));
                if ((adjacency[w] & ~in) == 0) return;  // w is redundant
            }
            covers.push_back(in);
            return;
        }
        const std::size_t u = uncovered->first;
        branch(in | std::uint64_t{1} << u, out);
        if ((adjacency[u] & out) == 0) branch(in | adjacency[u], out | std::uint64_t{1} << u);
    };
    branch(0, 0);
    std::sort(covers.begin(), covers.end());
    return covers;
}

MonomialIdeal cover_ideal(const SimpleGraph& g) {
    std::vector<Monomial> gens;
    for (std::uint64_t cover : minimal_vertex_covers(g)) gens.push_back(Monomial::from_mask(g.vertex_count(), cover));
    return minimalize(g.vertex_count(), gens);
}

bool herzog_hibi_validate(const BipartiteLabeledGraph& g) {
    const std::size_t n = g.part_size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.has_edge(i, i)) return false;
    }
    for (const auto& [x, y] : g.edges()) {
        if (x > y) return false;
    }
    for (const auto& [i, j] : g.edges()) {
        if (i == j) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
            if (g.has_edge(j, k) && !g.has_edge(i, k)) return false;
        }
    }
    return true;
}

std::optional<Relabeling> canonical_labeling(const BipartiteLabeledGraph& g) {
    const std::size_t n = g.part_size();
    std::vector<std::size_t> match(n, n);  // x_i is paired with y_match[i]
    std::vector<bool> y_used(n, false);

    // For a pairing, x_i -> x_j whenever x_i is adjacent to the partner of x_j.
    // The pairing works iff that relation is a partial order.
    auto try_pairing = [&]() -> std::optional<Relabeling> {
        auto related = [&](std::size_t i, std::size_t j) { return g.has_edge(i, match[j]); };
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !related(i, j)) continue;
                if (related(j, i)) return std::nullopt;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != i && related(j, k) && !related(i, k)) return std::nullopt;
                }
            }
        }
        // Linear extension: repeatedly take the smallest index with no
        // unplaced predecessor.
        std::vector<std::size_t> position(n, n);
        for (std::size_t placed = 0; placed < n; ++placed) {
            for (std::size_t j = 0; j < n; ++j) {
                if (position[j] != n) continue;
                bool ready = true;
                for (std::size_t i = 0; i < n && ready; ++i) {
                    if (i != j && position[i] == n && related(i, j)) ready = false;
                }
                if (ready) {
                    position[j] = placed;
                    break;
                }
            }
        }
        Relabeling r;
        r.x_position = position;
        r.y_position.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) r.y_position[match[i]] = position[i];
        r.graph = BipartiteLabeledGraph(n);
        for (const auto& [x, y] : g.edges()) r.graph.add_edge(r.x_position[x], r.y_position[y]);
        return r;
    };

    std::function<std::optional<Relabeling>(std::size_t)> assign = [&](std::size_t i) -> std::optional<Relabeling> {
        if (i == n) return try_pairing();
        for (std::size_t y = 0; y < n; ++y) {
            if (y_used[y] || !g.has_edge(i, y)) continue;
            y_used[y] = true;
            match[i] = y;
            auto found = assign(i + 1);
            y_used[y] = false;
            if (found) return found;
        }
        return std::nullopt;
    };
    return assign(0);
}

BipartiteLabeledGraph cm_bipartite_random(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        related[i][i] = true;
        for (std::size_t j = i + 1; j < n; ++j) related[i][j] = uniform() < density;
    }
    for (std::size_t mid = 0; mid < n; ++mid) {
        for (std::size_t i = 0; i < mid; ++i) {
            if (!related[i][mid]) continue;
            for (std::size_t k = mid + 1; k < n; ++k) {
                if (related[mid][k]) related[i][k] = true;
            }
        }
    }
    BipartiteLabeledGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (related[i][j]) g.add_edge(i, j);
        }
    }
    return g;
}

namespace {

BipartiteLabeledGraph require_canonical(const BipartiteLabeledGraph& g) {
    if (herzog_hibi_validate(g)) return g;
    if (auto r = canonical_labeling(g)) return r->graph;
    throw std::invalid_argument("graph admits no Cohen-Macaulay bipartite labelling");
}

// x_k adjacent to y_last, ascending; always contains `last` in a canonical graph.
std::vector<std::size_t> neighbors_of_last_y(const BipartiteLabeledGraph& g) {
    const std::size_t last = g.part_size() - 1;
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < g.part_size(); ++k) {
        if (g.has_edge(k, last)) out.push_back(k);
    }
    return out;
}

using CoverMemo = std::map<std::pair<std::size_t, std::set<BipartiteLabeledGraph::Edge>>, std::vector<std::uint64_t>>;

std::vector<std::uint64_t> recurse(const BipartiteLabeledGraph& g, CoverMemo& memo) {
    const std::size_t n = g.part_size();
    if (n == 0) return {1};
    const auto key = std::make_pair(n, g.edges());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const std::vector<std::size_t> nbrs = neighbors_of_last_y(g);
    std::vector<std::size_t> keep_prime, keep_double_prime;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        keep_prime.push_back(k);
        if (!std::binary_search(nbrs.begin(), nbrs.end(), k)) keep_double_prime.push_back(k);
    }
    const auto b1 = recurse(g.induced_on_pairs(keep_prime), memo);
    const auto b2 = recurse(g.induced_on_pairs(keep_double_prime), memo);

    std::vector<std::uint64_t> out(std::max(b1.size(), b2.size() + 1), 0);
    for (std::size_t i = 0; i < b1.size(); ++i) out[i] += b1[i];
    for (std::size_t i = 0; i < b2.size(); ++i) {
        out[i] += b2[i];
        out[i + 1] += b2[i];
    }
    memo.emplace(key, out);
    return out;
}

}  // namespace

std::vector<std::uint64_t> cover_betti_recursive(const BipartiteLabeledGraph& g) {
    CoverMemo memo;
    return recurse(require_canonical(g), memo);
}

CoverSplit cover_split(const BipartiteLabeledGraph& g) {
    if (!herzog_hibi_validate(g)) throw std::invalid_argument("cover_split needs a canonical Herzog-Hibi labelling");
    const std::size_t n = g.part_size();
    if (n == 0) throw std::invalid_argument("cover_split needs at least one pair");
    const std::size_t last = n - 1;
    const std::size_t vars = 2 * n;
    const SimpleGraph simple = g.to_simple_graph();

    CoverSplit split;
    split.y_variable = n + last;
    const std::vector<std::size_t> nbrs = neighbors_of_last_y(g);

    SimpleGraph minus_y = simple.without(split.y_variable);
    SimpleGraph minus_closed_nbhd = minus_y;
    Monomial x_product(vars);
    for (std::size_t k : nbrs) {
        minus_closed_nbhd = minus_closed_nbhd.without(k);
        x_product = x_product * Monomial::variable(vars, k);
    }
    const Monomial y = Monomial::variable(vars, split.y_variable);
    const MonomialIdeal cover_double_prime = cover_ideal(minus_closed_nbhd);
    split.y_part = multiply(y, cover_ideal(minus_y));
    split.x_part = multiply(x_product, cover_double_prime);
    split.predicted_intersection = multiply(y * x_product, cover_double_prime);

    std::vector<std::size_t> keep_prime, keep_double_prime;
    for (std::size_t k = 0; k < last; ++k) {
        keep_prime.push_back(k);
        if (!std::binary_search(nbrs.begin(), nbrs.end(), k)) keep_double_prime.push_back(k);
    }
    split.g_prime = g.induced_on_pairs(keep_prime);
    split.g_double_prime = g.induced_on_pairs(keep_double_prime);
    return split;
}

std::size_t three_disjoint_number(const SimpleGraph& g) {
    const std::vector<SimpleGraph::Edge> edges(g.edges().begin(), g.edges().end());
    if (edges.size() > 64) throw CapacityError("3-disjoint search is capped at 64 edges");
    std::vector<std::uint64_t> compatible(edges.size(), 0);
    for (std::size_t s = 0; s < edges.size(); ++s) {
        for (std::size_t t = s + 1; t < edges.size(); ++t) {
            const auto [a, b] = edges[s];
            const auto [c, d] = edges[t];
            const bool distinct = a != c && a != d && b != c && b != d;
            if (distinct && !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d)) {
                compatible[s] |= std::uint64_t{1} << t;
                compatible[t] |= std::uint64_t{1} << s;
            }
        }
    }
    // Maximum clique of the compatibility graph; compatibility is not
    // transitive, so candidates are intersected at every step.
    std::size_t best = 0;
    std::function<void(std::uint64_t, std::size_t)> grow = [&](std::uint64_t candidates, std::size_t size) {
        if (size > best) best = size;
        while (candidates) {
            if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
            const auto e = static_cast<std::size_t>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            grow(candidates & compatible[e], size + 1);
        }
    };
    const std::uint64_t all = edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
    grow(all, 0);
    return best;
}

bool cm_pd_reg_check(const BipartiteLabeledGraph& g, FieldSpec field) {
    const SimpleGraph simple = require_canonical(g).to_simple_graph();
    const MonomialIdeal edges = edge_ideal(simple);
    const std::size_t a = three_disjoint_number(simple);
    if (edges.is_zero()) return a == 0;
    const std::size_t pd = proj_dim(betti_table(cover_ideal(simple), field));
    const std::int64_t reg = regularity(betti_table(edges, field));
    return pd == a && reg - 1 == static_cast<std::int64_t>(a);
}

}  // namespace monosplit
