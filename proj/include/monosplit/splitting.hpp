#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monosplit/betti.hpp"
#include "monosplit/ideal.hpp"

namespace monosplit {

/// I = J + K with G(I) the disjoint union of G(J) and G(K), both nonempty.
class Partition {
public:
    /// Throws std::invalid_argument unless G(J) ⊔ G(K) is a minimal generating set.
    static Partition from_parts(MonomialIdeal j, MonomialIdeal k);
    /// J is generated by `j_gens` (each a minimal generator of I), K by the rest.
    static Partition from_subset(const MonomialIdeal& ideal, std::span<const Monomial> j_gens);

    const MonomialIdeal& whole() const noexcept { return whole_; }
    const MonomialIdeal& j() const noexcept { return j_; }
    const MonomialIdeal& k() const noexcept { return k_; }
    const MonomialIdeal& intersection() const noexcept { return intersection_; }

    /// Same partition with the roles of J and K exchanged.
    Partition swapped() const;

private:
    Partition() = default;
    MonomialIdeal whole_, j_, k_, intersection_;
};

/// J = generators divisible by x_var (0-based), K = the others.
/// Throws DegeneratePartitionError if either part would be empty.
Partition xi_partition(const MonomialIdeal& ideal, std::size_t var);

/// Betti tables of I, J, K and J ∩ K over one field.
struct PartitionTables {
    BettiTable whole;
    BettiTable j;
    BettiTable k;
    BettiTable intersection;
};

PartitionTables partition_tables(const Partition& p, FieldSpec field);

/// β_{i,b}(I) = β_{i,b}(J) + β_{i,b}(K) + β_{i-1,b}(J∩K) for every i and multidegree b.
bool is_betti_splitting(const PartitionTables& t);
bool is_betti_splitting(const Partition& p, FieldSpec field);

/// β_{i,b}(J∩K) > 0 forces β_{i,b}(J) = β_{i,b}(K) = 0. Sufficient for a Betti splitting.
bool disjoint_support_condition(const PartitionTables& t);
bool disjoint_support_condition(const Partition& p, FieldSpec field);

/// The J-only half of disjoint_support_condition, meaningful for an
/// x_var-partition. The table overload always runs the full check.
bool one_sided_support_condition(const PartitionTables& t);
/// Returns true straight away when J has a linear resolution.
/// Throws std::invalid_argument if some generator of J is not divisible by x_var.
bool one_sided_support_condition(const Partition& p, std::size_t var, FieldSpec field);

/// β_{i,b}(I) ≤ β_{i,b}(J) + β_{i,b}(K) + β_{i-1,b}(J∩K) entrywise. Holds for every partition.
bool mapping_cone_bound(const PartitionTables& t);
bool mapping_cone_bound(const Partition& p, FieldSpec field);

/// reg(I) = max{reg J, reg K, reg(J∩K) - 1} and pd(I) = max{pd J, pd K, pd(J∩K) + 1};
/// an empty J∩K table contributes nothing.
std::pair<std::int64_t, std::size_t> reg_pd_via_splitting(const BettiTable& j, const BettiTable& k,
                                                          const BettiTable& intersection);

// ---------------------------------------------------------------------------
// Eliahou-Kervaire splitting functions
// ---------------------------------------------------------------------------

/// w ↦ (φ(w), ψ(w)) for one minimal generator w of J ∩ K.
struct EkAssignment {
    Monomial w;
    Monomial phi;
    Monomial psi;
};

enum class EkVerdict { found, absent, capped };

/// A forced assignment (every w had exactly one candidate pair) together with a
/// subset S whose φ- or ψ-lcm fails to strictly divide lcm(S).
struct EkWitness {
    std::vector<EkAssignment> assignment;
    std::vector<Monomial> subset;
    bool phi_side = true;
};

struct EkResult {
    EkVerdict verdict = EkVerdict::capped;
    std::vector<EkAssignment> function;  // valid when verdict == found
    std::optional<EkWitness> witness;    // only for some absent verdicts
};

inline constexpr std::size_t kDefaultEkCap = 16;

/// Exhaustive backtracking for a splitting function G(J∩K) → G(J) × G(K).
/// Candidate pairs are tried in canonical order. More than `cap` generators in
/// J ∩ K yields `capped` rather than a guess.
EkResult ek_search(const Partition& p, std::size_t cap = kDefaultEkCap);

/// Brute-force check of both splitting-function conditions over every nonempty
/// subset; also requires the domain to be exactly G(J∩K).
bool verify_ek_function(const Partition& p, std::span<const EkAssignment> function);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct SplitReport {
    std::optional<std::size_t> variable;  // 0-based; nullopt for a user partition
    FieldSpec field = FieldSpec::rationals();
    bool betti_splitting = false;
    bool disjoint_support = false;
    EkVerdict ek = EkVerdict::capped;
};

SplitReport split_report(const Partition& p, std::optional<std::size_t> variable, FieldSpec field,
                         std::size_t ek_cap = kDefaultEkCap);

/// One report per variable that admits an x_i-partition, ascending by variable.
std::vector<SplitReport> xi_splitting_scan(const MonomialIdeal& ideal, FieldSpec field,
                                           std::size_t ek_cap = kDefaultEkCap);

}  // namespace monosplit
