#pragma once

#include <span>
#include <vector>

#include "monosplit/monomial.hpp"

namespace monosplit {

/// A monomial ideal held by its minimal generating set G(I).
///
/// Generators are minimal, duplicate-free and sorted by MonomialOrder. The
/// zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(std::size_t n);

    std::size_t num_vars() const noexcept { return n_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
    bool is_squarefree() const noexcept;

    /// lcm of all generators (1 for the zero ideal).
    Monomial lcm_all() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal minimalize(std::size_t n, std::span<const Monomial> gens);

    std::size_t n_;
    std::vector<Monomial> gens_;
};

/// Drops every generator divisible by another one (and duplicates).
MonomialIdeal minimalize(std::size_t n, std::span<const Monomial> gens);

bool membership(const MonomialIdeal& ideal, const Monomial& m);

/// Minimal generators of the intersection: minimalized pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& j, const MonomialIdeal& k);

/// Ideal generated by G(J) and G(K) together.
MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k);

/// m * I.
MonomialIdeal multiply(const Monomial& m, const MonomialIdeal& ideal);

/// The closure of G(I) under pairwise lcm, sorted by MonomialOrder.
/// Equals { lcm(S) : S a nonempty subset of G(I) }. Empty for the zero ideal.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

/// Minimal generators of the smallest strongly stable ideal containing seeds:
/// closed under replacing a factor x_j by x_i for any i < j.
MonomialIdeal borel_closure(std::size_t n, std::span<const Monomial> seeds);

/// Squarefree image of an ideal under polarization.
///
/// Variable i with top exponent e_i becomes e_i new variables; x_i^a maps to
/// the product of the first a of them. `offsets[i]` is the first polarized
/// index belonging to variable i.
struct Polarization {
    MonomialIdeal ideal;
    std::size_t original_vars = 0;
    std::vector<std::size_t> offsets;
    std::vector<Exponent> top_exponents;

    Monomial polarize(const Monomial& m) const;
    /// Collapses a polarized multidegree back to the original ring.
    Monomial depolarize(const Monomial& b) const;
};

Polarization polarize(const MonomialIdeal& ideal);

}  // namespace monosplit
