#pragma once

// Shared fixtures, seeded generators and brute-force oracles for the test
// suites. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "monosplit/graph.hpp"
#include "monosplit/ideal.hpp"
#include "monosplit/monomial.hpp"

namespace monosplit::testing {

/// Squarefree monomial from 1-based variable indices.
inline Monomial sq(std::size_t n, std::initializer_list<std::size_t> vars) {
    std::vector<Exponent> e(n, 0);
    for (auto v : vars) e[v - 1] += 1;
    return Monomial(std::move(e));
}

inline MonomialIdeal sq_ideal(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> gens) {
    std::vector<Monomial> out;
    for (auto g : gens) out.push_back(sq(n, g));
    return minimalize(n, out);
}

inline MonomialIdeal ek_example() {
    return sq_ideal(5, {{1, 2, 3}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}});
}

inline MonomialIdeal rp2_ideal() {
    return sq_ideal(6, {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 4}, {1, 5, 6},
                        {2, 4, 5}, {2, 3, 6}, {2, 3, 5}, {3, 4, 6}, {4, 5, 6}});
}

inline MonomialIdeal seven_var_ideal() {
    return sq_ideal(7, {{2, 6, 7}, {1, 6, 7}, {4, 5, 7}, {3, 4, 7}, {1, 4, 7}, {2, 3, 7}, {1, 3, 7}, {4, 5, 6},
                        {2, 5, 6}, {1, 5, 6}, {3, 4, 6}, {2, 4, 6}, {2, 4, 5}, {2, 3, 5}, {1, 3, 5}, {1, 3, 4},
                        {1, 2, 4}});
}

inline MonomialIdeal seven_var_minus() {
    std::vector<Monomial> gens;
    const auto full = seven_var_ideal();
    for (const auto& g : full.generators()) {
        if (g != sq(7, {1, 3, 4})) gens.push_back(g);
    }
    return minimalize(7, gens);
}

inline MonomialIdeal borel_example() {
    const std::vector<Monomial> seeds{Monomial{1, 0, 0, 0, 0, 3}, Monomial{0, 0, 2, 0, 0, 1}};
    return borel_closure(6, seeds);
}

/// Random monomial ideal: n in [2, max_vars], up to max_gens generators,
/// exponents in [0, max_exp]. Never the zero ideal.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_gens,
                                  Exponent max_exp) {
    const std::size_t n = 2 + rng() % (max_vars - 1);
    const std::size_t count = 1 + rng() % max_gens;
    std::vector<Monomial> gens;
    while (gens.size() < count) {
        std::vector<Exponent> e(n);
        for (auto& x : e) x = static_cast<Exponent>(rng() % (max_exp + 1));
        Monomial m(std::move(e));
        if (!m.is_unit()) gens.push_back(std::move(m));
    }
    return minimalize(n, gens);
}

/// Random squarefree ideal in exactly n variables.
inline MonomialIdeal random_squarefree(std::mt19937_64& rng, std::size_t n, std::size_t max_gens) {
    const std::size_t count = 1 + rng() % max_gens;
    std::vector<Monomial> gens;
    while (gens.size() < count) {
        const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
        if (mask) gens.push_back(Monomial::from_mask(n, mask));
    }
    return minimalize(n, gens);
}

/// Membership by explicit divisibility, independent of MonomialIdeal.
inline bool divides_brute(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline bool member_brute(const std::vector<Monomial>& gens, const Monomial& m) {
    for (const auto& g : gens) {
        if (divides_brute(g, m)) return true;
    }
    return false;
}

/// Every monomial with all exponents <= bound.
inline std::vector<Monomial> box_monomials(std::size_t n, Exponent bound) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(n, 0);
    while (true) {
        out.emplace_back(e);
        std::size_t i = 0;
        while (i < n && e[i] == bound) e[i++] = 0;
        if (i == n) return out;
        ++e[i];
    }
}

/// { lcm(S) : S a nonempty subset of gens } by enumeration.
inline std::vector<Monomial> lcm_set_brute(const std::vector<Monomial>& gens, std::size_t n) {
    std::vector<Monomial> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << gens.size()); ++mask) {
        std::vector<Exponent> e(n, 0);
        for (std::size_t t = 0; t < gens.size(); ++t) {
            if (!(mask >> t & 1u)) continue;
            for (std::size_t i = 0; i < n; ++i) e[i] = std::max(e[i], gens[t][i]);
        }
        out.emplace_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), MonomialOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Minimal vertex covers by scanning all 2^n vertex subsets.
inline std::vector<std::uint64_t> covers_brute(const SimpleGraph& g) {
    auto is_cover = [&](std::uint64_t s) {
        for (const auto& [u, v] : g.edges()) {
            if (!(s >> u & 1u) && !(s >> v & 1u)) return false;
        }
        return true;
    };
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertex_count()); ++s) {
        if (!is_cover(s)) continue;
        bool minimal = true;
        for (std::size_t v = 0; v < g.vertex_count() && minimal; ++v) {
            if ((s >> v & 1u) && is_cover(s & ~(std::uint64_t{1} << v))) minimal = false;
        }
        if (minimal) out.push_back(s);
    }
    return out;
}

inline SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
        }
    }
    return g;
}

/// Connected simple graphs on n vertices up to isomorphism, via the
/// lexicographically smallest adjacency bitstring over all relabellings.
std::vector<SimpleGraph> connected_graphs_up_to_iso(std::size_t n);

}  // namespace monosplit::testing
