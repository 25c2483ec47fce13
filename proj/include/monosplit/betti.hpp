#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "monosplit/field.hpp"
#include "monosplit/ideal.hpp"
#include "monosplit/simplicial.hpp"

namespace monosplit {

/// Position of a multigraded Betti number: homological index and multidegree.
struct BettiKey {
    std::size_t index = 0;
    Monomial degree;

    friend bool operator==(const BettiKey&, const BettiKey&) = default;
};

struct BettiKeyOrder {
    bool operator()(const BettiKey& a, const BettiKey& b) const noexcept {
        if (a.index != b.index) return a.index < b.index;
        return MonomialOrder{}(a.degree, b.degree);
    }
};

/// Multigraded Betti numbers β_{i,b}(I) = dim_k Tor_i(k, I)_b of the ideal
/// itself, so β_0 counts minimal generators. Only nonzero ranks are stored.
class BettiTable {
public:
    using Entries = std::map<BettiKey, std::uint64_t, BettiKeyOrder>;

    BettiTable(std::size_t num_vars, FieldSpec field) : n_(num_vars), field_(field) {}

    std::size_t num_vars() const noexcept { return n_; }
    FieldSpec field() const noexcept { return field_; }
    const Entries& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    std::uint64_t at(std::size_t index, const Monomial& degree) const;
    /// Adds rank to the entry; zero ranks are ignored.
    void add(std::size_t index, const Monomial& degree, std::uint64_t rank);

    /// Compares ranks only, ignoring the field tag.
    bool same_entries(const BettiTable& other) const { return n_ == other.n_ && entries_ == other.entries_; }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::size_t n_;
    FieldSpec field_;
    Entries entries_;
};

/// K^b(I) = { squarefree τ ≤ b : x^(b-τ) ∈ I } on the vertex set supp(b);
/// vertex k is the k-th variable of supp(b) in increasing order.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b);

/// All multigraded Betti numbers via β_{i,b} = dim H̃_{i-1}(K^b(I)) over the
/// lcm lattice.
BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field);

/// Largest generator count accepted by the subset-enumerating routines.
inline constexpr std::size_t kTaylorGeneratorCap = 20;

/// Independent route through the Taylor complex: β_{i,b} = dim H̃_{i-1}(Δ_{<b})
/// where Δ_{<b} collects generator subsets whose lcm strictly divides b.
/// Throws CapacityError above kTaylorGeneratorCap generators.
BettiTable betti_table_taylor(const MonomialIdeal& ideal, FieldSpec field);

/// β_i summed over multidegrees, indexed by i.
std::vector<std::uint64_t> total_betti(const BettiTable& table);
/// β_{i,d} summed over multidegrees of total degree d, keyed by (i, d).
std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> graded_betti(const BettiTable& table);

/// max{ deg b - i }. Throws std::domain_error on an empty table.
std::int64_t regularity(const BettiTable& table);
/// max{ i }. Throws std::domain_error on an empty table.
std::size_t proj_dim(const BettiTable& table);

/// One generator degree d and β_{i,b} = 0 unless deg b = d + i.
bool has_linear_resolution(const BettiTable& table);
bool has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field);

/// Euler characteristic test: Σ_i (-1)^i β_{i,b} must equal the inclusion-
/// exclusion sum Σ_{lcm(S)=b} (-1)^(|S|+1) at every b.
bool k_polynomial_check(const MonomialIdeal& ideal, const BettiTable& table);
bool k_polynomial_check(const MonomialIdeal& ideal, FieldSpec field);

struct BettiDifference {
    std::size_t index = 0;
    Monomial degree;
    std::uint64_t rational_rank = 0;
    std::uint64_t modular_rank = 0;
};

/// Per prime, every (i, b) where the table over ZZ/p differs from the one
/// over QQ; sorted by (i, b). Throws std::invalid_argument on a non-prime.
std::map<std::uint32_t, std::vector<BettiDifference>> char_scan(const MonomialIdeal& ideal,
                                                                std::span<const std::uint32_t> primes);

}  // namespace monosplit
