#include "monosplit/splitting.hpp"

#include <algorithm>
#include <stdexcept>

#include "monosplit/errors.hpp"

namespace monosplit {

Partition Partition::from_parts(MonomialIdeal j, MonomialIdeal k) {
    if (j.num_vars() != k.num_vars()) throw DimensionError("partition parts live in different rings");
    if (j.is_zero() || k.is_zero()) throw DegeneratePartitionError("both parts of a partition must be nonempty");
    MonomialIdeal whole = ideal_sum(j, k);
    if (whole.size() != j.size() + k.size()) {
        throw std::invalid_argument("G(J) and G(K) do not form a disjoint minimal generating set");
    }
    Partition p;
    p.intersection_ = intersect(j, k);
    p.whole_ = std::move(whole);
    p.j_ = std::move(j);
    p.k_ = std::move(k);
    return p;
}

Partition Partition::from_subset(const MonomialIdeal& ideal, std::span<const Monomial> j_gens) {
    std::vector<Monomial> in_j, in_k;
    for (const auto& g : j_gens) {
        const auto& gens = ideal.generators();
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) {
            throw std::invalid_argument(to_string(g) + " is not a minimal generator of the ideal");
        }
    }
    for (const auto& g : ideal.generators()) {
        (std::find(j_gens.begin(), j_gens.end(), g) != j_gens.end() ? in_j : in_k).push_back(g);
    }
    return from_parts(minimalize(ideal.num_vars(), in_j), minimalize(ideal.num_vars(), in_k));
}

Partition Partition::swapped() const {
    Partition p(*this);
    std::swap(p.j_, p.k_);
    return p;
}

Partition xi_partition(const MonomialIdeal& ideal, std::size_t var) {
    if (var >= ideal.num_vars()) throw DimensionError("variable index out of range");
    std::vector<Monomial> in_j, in_k;
    for (const auto& g : ideal.generators()) (g[var] > 0 ? in_j : in_k).push_back(g);
    if (in_j.empty() || in_k.empty()) {
        throw DegeneratePartitionError("x" + std::to_string(var + 1) + " divides " +
                                       (in_j.empty() ? "no" : "every") + " generator");
    }
    return Partition::from_parts(minimalize(ideal.num_vars(), in_j), minimalize(ideal.num_vars(), in_k));
}

PartitionTables partition_tables(const Partition& p, FieldSpec field) {
    return PartitionTables{betti_table(p.whole(), field), betti_table(p.j(), field), betti_table(p.k(), field),
                           betti_table(p.intersection(), field)};
}

namespace {

// Every key at which any of the four tables might be nonzero, with the
// intersection shifted up one homological step.
BettiTable::Entries candidate_keys(const PartitionTables& t) {
    BettiTable::Entries keys = t.whole.entries();
    keys.insert(t.j.entries().begin(), t.j.entries().end());
    keys.insert(t.k.entries().begin(), t.k.entries().end());
    for (const auto& [key, rank] : t.intersection.entries()) keys.emplace(BettiKey{key.index + 1, key.degree}, rank);
    return keys;
}

std::uint64_t cone_rank(const PartitionTables& t, const BettiKey& key) {
    const std::uint64_t shifted = key.index == 0 ? 0 : t.intersection.at(key.index - 1, key.degree);
    return t.j.at(key.index, key.degree) + t.k.at(key.index, key.degree) + shifted;
}

}  // namespace

bool is_betti_splitting(const PartitionTables& t) {
    const auto keys = candidate_keys(t);
    return std::all_of(keys.begin(), keys.end(), [&](const auto& entry) {
        return t.whole.at(entry.first.index, entry.first.degree) == cone_rank(t, entry.first);
    });
}

bool is_betti_splitting(const Partition& p, FieldSpec field) {
    return is_betti_splitting(partition_tables(p, field));
}

bool mapping_cone_bound(const PartitionTables& t) {
    const auto keys = candidate_keys(t);
    return std::all_of(keys.begin(), keys.end(), [&](const auto& entry) {
        return t.whole.at(entry.first.index, entry.first.degree) <= cone_rank(t, entry.first);
    });
}

bool mapping_cone_bound(const Partition& p, FieldSpec field) {
    return mapping_cone_bound(partition_tables(p, field));
}

bool disjoint_support_condition(const PartitionTables& t) {
    return std::all_of(t.intersection.entries().begin(), t.intersection.entries().end(), [&](const auto& entry) {
        const auto& [i, b] = entry.first;
        return t.j.at(i, b) == 0 && t.k.at(i, b) == 0;
    });
}

bool disjoint_support_condition(const Partition& p, FieldSpec field) {
    return disjoint_support_condition(partition_tables(p, field));
}

bool one_sided_support_condition(const PartitionTables& t) {
    return std::all_of(t.intersection.entries().begin(), t.intersection.entries().end(),
                       [&](const auto& entry) { return t.j.at(entry.first.index, entry.first.degree) == 0; });
}

bool one_sided_support_condition(const Partition& p, std::size_t var, FieldSpec field) {
    if (var >= p.whole().num_vars()) throw DimensionError("variable index out of range");
    for (const auto& g : p.j().generators()) {
        if (g[var] == 0) {
            throw std::invalid_argument("not an x" + std::to_string(var + 1) + "-partition: " + to_string(g) +
                                        " lies in J");
        }
    }
    if (p.intersection().is_zero()) return true;
    if (has_linear_resolution(p.j(), field)) return true;
    const BettiTable tj = betti_table(p.j(), field);
    const BettiTable tjk = betti_table(p.intersection(), field);
    return std::all_of(tjk.entries().begin(), tjk.entries().end(),
                       [&](const auto& entry) { return tj.at(entry.first.index, entry.first.degree) == 0; });
}

std::pair<std::int64_t, std::size_t> reg_pd_via_splitting(const BettiTable& j, const BettiTable& k,
                                                          const BettiTable& intersection) {
    std::int64_t reg = std::max(regularity(j), regularity(k));
    std::size_t pd = std::max(proj_dim(j), proj_dim(k));
    if (!intersection.empty()) {
        reg = std::max(reg, regularity(intersection) - 1);
        pd = std::max(pd, proj_dim(intersection) + 1);
    }
    return {reg, pd};
}

// ---------------------------------------------------------------------------

namespace {

class EkSearch {
public:
    EkSearch(const Partition& p, std::vector<std::vector<std::pair<std::size_t, std::size_t>>> candidates)
        : p_(p),
          w_(p.intersection().generators()),
          candidates_(std::move(candidates)),
          choice_(w_.size()),
          lcm_w_(std::size_t{1} << w_.size(), Monomial(p.whole().num_vars())),
          lcm_phi_(lcm_w_),
          lcm_psi_(lcm_w_) {
        for (std::size_t mask = 1; mask < lcm_w_.size(); ++mask) {
            const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
            lcm_w_[mask] = monomial_lcm(lcm_w_[mask & (mask - 1)], w_[low]);
        }
    }

    bool run(std::size_t depth = 0) {
        if (depth == w_.size()) return true;
        for (std::size_t c = 0; c < candidates_[depth].size(); ++c) {
            choice_[depth] = c;
            if (extend(depth) && run(depth + 1)) return true;
        }
        return false;
    }

    std::vector<EkAssignment> assignment(std::size_t upto) const {
        std::vector<EkAssignment> out;
        for (std::size_t k = 0; k < upto; ++k) {
            const auto [a, b] = candidates_[k][choice_[k]];
            out.push_back({w_[k], p_.j().generators()[a], p_.k().generators()[b]});
        }
        return out;
    }

    // Recomputes the lcms of every subset whose top element is `depth` under
    // the current choice there; returns false on the first subset S where
    // lcm(φ(S)) or lcm(ψ(S)) equals lcm(S). Since φ(w) | w, "strictly
    // divides" reduces to "differs".
    bool extend(std::size_t depth, std::vector<Monomial>* violating = nullptr, bool* phi_side = nullptr) {
        const auto [a, b] = candidates_[depth][choice_[depth]];
        const Monomial& phi = p_.j().generators()[a];
        const Monomial& psi = p_.k().generators()[b];
        const std::size_t top = std::size_t{1} << depth;
        for (std::size_t rest = 0; rest < top; ++rest) {
            const std::size_t mask = rest | top;
            lcm_phi_[mask] = monomial_lcm(lcm_phi_[rest], phi);
            lcm_psi_[mask] = monomial_lcm(lcm_psi_[rest], psi);
            const bool phi_bad = lcm_phi_[mask] == lcm_w_[mask];
            if (phi_bad || lcm_psi_[mask] == lcm_w_[mask]) {
                if (violating) {
                    violating->clear();
                    for (std::size_t k = 0; k <= depth; ++k) {
                        if (mask >> k & 1u) violating->push_back(w_[k]);
                    }
                    *phi_side = phi_bad;
                }
                return false;
            }
        }
        return true;
    }

    std::size_t size() const { return w_.size(); }

private:
    const Partition& p_;
    const std::vector<Monomial>& w_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> candidates_;
    std::vector<std::size_t> choice_;
    std::vector<Monomial> lcm_w_, lcm_phi_, lcm_psi_;
};

}  // namespace

EkResult ek_search(const Partition& p, std::size_t cap) {
    EkResult result;
    const auto& w = p.intersection().generators();
    if (w.size() > cap || w.size() > 24) {
        result.verdict = EkVerdict::capped;
        return result;
    }
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> candidates(w.size());
    bool forced = true;
    for (std::size_t t = 0; t < w.size(); ++t) {
        for (std::size_t a = 0; a < p.j().size(); ++a) {
            for (std::size_t b = 0; b < p.k().size(); ++b) {
                if (monomial_lcm(p.j().generators()[a], p.k().generators()[b]) == w[t]) {
                    candidates[t].emplace_back(a, b);
                }
            }
        }
        if (candidates[t].empty()) {
            result.verdict = EkVerdict::absent;
            return result;
        }
        forced = forced && candidates[t].size() == 1;
    }

    EkSearch search(p, candidates);
    if (search.run()) {
        result.verdict = EkVerdict::found;
        result.function = search.assignment(w.size());
        return result;
    }
    result.verdict = EkVerdict::absent;
    if (forced) {
        EkSearch replay(p, std::move(candidates));
        EkWitness witness;
        for (std::size_t depth = 0; depth < replay.size(); ++depth) {
            if (!replay.extend(depth, &witness.subset, &witness.phi_side)) break;
        }
        witness.assignment = replay.assignment(replay.size());
        result.witness = std::move(witness);
    }
    return result;
}

bool verify_ek_function(const Partition& p, std::span<const EkAssignment> function) {
    const auto& w = p.intersection().generators();
    if (function.size() != w.size() || w.size() >= 63) return false;
    const auto& gj = p.j().generators();
    const auto& gk = p.k().generators();
    for (const auto& a : function) {
        if (std::find(w.begin(), w.end(), a.w) == w.end()) return false;
        if (std::find(gj.begin(), gj.end(), a.phi) == gj.end()) return false;
        if (std::find(gk.begin(), gk.end(), a.psi) == gk.end()) return false;
        if (monomial_lcm(a.phi, a.psi) != a.w) return false;
    }
    for (std::size_t s = 0; s < w.size(); ++s) {
        for (std::size_t t = s + 1; t < w.size(); ++t) {
            if (function[s].w == function[t].w) return false;
        }
    }
    const std::size_t n = p.whole().num_vars();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << function.size()); ++mask) {
        Monomial lw(n), lphi(n), lpsi(n);
        for (std::size_t t = 0; t < function.size(); ++t) {
            if (!(mask >> t & 1u)) continue;
            lw = monomial_lcm(lw, function[t].w);
            lphi = monomial_lcm(lphi, function[t].phi);
            lpsi = monomial_lcm(lpsi, function[t].psi);
        }
        if (!strictly_divides(lphi, lw) || !strictly_divides(lpsi, lw)) return false;
    }
    return true;
}

SplitReport split_report(const Partition& p, std::optional<std::size_t> variable, FieldSpec field,
                         std::size_t ek_cap) {
    const PartitionTables tables = partition_tables(p, field);
    SplitReport report;
    report.variable = variable;
    report.field = field;
    report.betti_splitting = is_betti_splitting(tables);
    report.disjoint_support = disjoint_support_condition(tables);
    report.ek = ek_search(p, ek_cap).verdict;
    return report;
}

std::vector<SplitReport> xi_splitting_scan(const MonomialIdeal& ideal, FieldSpec field, std::size_t ek_cap) {
    std::vector<SplitReport> reports;
    for (std::size_t var = 0; var < ideal.num_vars(); ++var) {
        std::size_t divisible = 0;
        for (const auto& g : ideal.generators()) divisible += g[var] > 0;
        if (divisible == 0 || divisible == ideal.size()) continue;
        reports.push_back(split_report(xi_partition(ideal, var), var, field, ek_cap));
    }
    return reports;
}

}  // namespace monosplit
