#include "monosplit/betti.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "monosplit/errors.hpp"

namespace monosplit {

std::uint64_t BettiTable::at(std::size_t index, const Monomial& degree) const {
    const auto it = entries_.find(BettiKey{index, degree});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(std::size_t index, const Monomial& degree, std::uint64_t rank) {
    if (rank == 0) return;
    if (degree.num_vars() != n_) throw DimensionError("Betti degree outside the ambient ring");
    entries_[BettiKey{index, degree}] += rank;
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b) {
    if (b.num_vars() != ideal.num_vars()) throw DimensionError("multidegree outside the ambient ring");
    const std::vector<std::size_t> supp = b.support();
    if (supp.size() > 64) throw CapacityError("multidegree support exceeds 64 variables");

    // x^(b-τ) ∈ I iff some g | b avoids every vertex where g is tight against b,
    // so the facets are supp(b) minus the tight set of each such g.
    std::vector<std::uint64_t> facets;
    for (const auto& g : ideal.generators()) {
        if (!divides(g, b)) continue;
        std::uint64_t facet = 0;
        for (std::size_t k = 0; k < supp.size(); ++k) {
            if (g[supp[k]] < b[supp[k]]) facet |= std::uint64_t{1} << k;
        }
        facets.push_back(facet);
    }
    if (facets.empty()) return SimplicialComplex::void_complex(supp.size());
    return SimplicialComplex::from_facets(supp.size(), facets);
}

BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field) {
    BettiTable table(ideal.num_vars(), field);
    for (const Monomial& b : lcm_lattice(ideal)) {
        const auto ranks = reduced_homology_ranks(upper_koszul(ideal, b), field);
        // ranks[d+1] = H̃_d, and β_{i,b} = H̃_{i-1}, so β_i sits at ranks[i].
        for (std::size_t i = 0; i < ranks.size(); ++i) table.add(i, b, ranks[i]);
    }
    return table;
}

namespace {

struct SubsetLcms {
    std::vector<Monomial> distinct;      // distinct lcm values; index 0 is lcm(∅) = 1
    std::vector<std::uint32_t> id_of;    // subset mask -> index into distinct
};

SubsetLcms enumerate_subset_lcms(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    if (gens.size() > kTaylorGeneratorCap) {
        throw CapacityError(std::to_string(gens.size()) + " generators exceed the subset enumeration cap of " +
                            std::to_string(kTaylorGeneratorCap));
    }
    SubsetLcms out;
    const std::size_t count = std::size_t{1} << gens.size();
    out.id_of.assign(count, 0);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    out.distinct.push_back(Monomial(ideal.num_vars()));
    index.emplace(out.distinct.front(), 0);
    for (std::size_t mask = 1; mask < count; ++mask) {
        const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
        const Monomial l = monomial_lcm(out.distinct[out.id_of[mask & (mask - 1)]], gens[low]);
        auto [it, inserted] = index.emplace(l, static_cast<std::uint32_t>(out.distinct.size()));
        if (inserted) out.distinct.push_back(l);
        out.id_of[mask] = it->second;
    }
    return out;
}

}  // namespace

BettiTable betti_table_taylor(const MonomialIdeal& ideal, FieldSpec field) {
    BettiTable table(ideal.num_vars(), field);
    if (ideal.is_zero()) return table;
    if (ideal.is_unit()) {
        table.add(0, Monomial(ideal.num_vars()), 1);
        return table;
    }
    const SubsetLcms lcms = enumerate_subset_lcms(ideal);
    const std::size_t m = ideal.size();
    const std::size_t count = std::size_t{1} << m;

    // Every nonempty-subset lcm is a candidate degree; lcm(∅) = 1 is not.
    std::vector<bool> is_degree(lcms.distinct.size(), false);
    for (std::size_t mask = 1; mask < count; ++mask) is_degree[lcms.id_of[mask]] = true;

    for (std::uint32_t bid = 0; bid < lcms.distinct.size(); ++bid) {
        if (!is_degree[bid]) continue;
        const Monomial& b = lcms.distinct[bid];
        std::vector<bool> below(lcms.distinct.size());
        for (std::uint32_t id = 0; id < lcms.distinct.size(); ++id) {
            below[id] = strictly_divides(lcms.distinct[id], b);
        }
        std::vector<std::uint64_t> faces;
        for (std::size_t mask = 0; mask < count; ++mask) {
            if (below[lcms.id_of[mask]]) faces.push_back(mask);
        }
        const auto ranks = reduced_homology_ranks(SimplicialComplex::from_faces(m, faces), field);
        for (std::size_t i = 0; i < ranks.size(); ++i) table.add(i, b, ranks[i]);
    }
    return table;
}

std::vector<std::uint64_t> total_betti(const BettiTable& table) {
    std::vector<std::uint64_t> totals;
    for (const auto& [key, rank] : table.entries()) {
        if (totals.size() <= key.index) totals.resize(key.index + 1, 0);
        totals[key.index] += rank;
    }
    return totals;
}

std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> graded_betti(const BettiTable& table) {
    std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> graded;
    for (const auto& [key, rank] : table.entries()) graded[{key.index, key.degree.degree()}] += rank;
    return graded;
}

std::int64_t regularity(const BettiTable& table) {
    if (table.empty()) throw std::domain_error("regularity of an empty Betti table is undefined");
    std::int64_t reg = INT64_MIN;
    for (const auto& [key, rank] : table.entries()) {
        reg = std::max(reg, static_cast<std::int64_t>(key.degree.degree()) - static_cast<std::int64_t>(key.index));
    }
    return reg;
}

std::size_t proj_dim(const BettiTable& table) {
    if (table.empty()) throw std::domain_error("projective dimension of an empty Betti table is undefined");
    return std::prev(table.entries().end())->first.index;
}

bool has_linear_resolution(const BettiTable& table) {
    if (table.empty()) throw std::invalid_argument("linear resolution test needs a nonzero ideal");
    const std::uint64_t d = table.entries().begin()->first.degree.degree();
    return std::all_of(table.entries().begin(), table.entries().end(), [d](const auto& entry) {
        return entry.first.degree.degree() == d + entry.first.index;
    });
}

bool has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field) {
    if (ideal.is_zero()) throw std::invalid_argument("linear resolution test needs a nonzero ideal");
    const std::uint64_t d = ideal.generators().front().degree();
    for (const auto& g : ideal.generators()) {
        if (g.degree() != d) return false;
    }
    return has_linear_resolution(betti_table(ideal, field));
}

bool k_polynomial_check(const MonomialIdeal& ideal, const BettiTable& table) {
    std::unordered_map<Monomial, std::int64_t, MonomialHash> expected;
    if (!ideal.is_zero()) {
        const SubsetLcms lcms = enumerate_subset_lcms(ideal);
        for (std::size_t mask = 1; mask < lcms.id_of.size(); ++mask) {
            const int parity = __builtin_popcountll(mask) % 2;
            expected[lcms.distinct[lcms.id_of[mask]]] += parity == 1 ? 1 : -1;
        }
    }
    std::unordered_map<Monomial, std::int64_t, MonomialHash> observed;
    for (const auto& [key, rank] : table.entries()) {
        observed[key.degree] += (key.index % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(rank);
    }
    auto agrees = [](const auto& lhs, const auto& rhs) {
        for (const auto& [b, value] : lhs) {
            const auto it = rhs.find(b);
            if ((it == rhs.end() ? 0 : it->second) != value) return false;
        }
        return true;
    };
    return agrees(expected, observed) && agrees(observed, expected);
}

bool k_polynomial_check(const MonomialIdeal& ideal, FieldSpec field) {
    return k_polynomial_check(ideal, betti_table(ideal, field));
}

std::map<std::uint32_t, std::vector<BettiDifference>> char_scan(const MonomialIdeal& ideal,
                                                                std::span<const std::uint32_t> primes) {
    std::vector<FieldSpec> fields;
    for (std::uint32_t p : primes) fields.push_back(FieldSpec::prime(p));

    const BettiTable rational = betti_table(ideal, FieldSpec::rationals());
    std::map<std::uint32_t, std::vector<BettiDifference>> report;
    for (FieldSpec field : fields) {
        const BettiTable modular = betti_table(ideal, field);
        BettiTable::Entries keys = rational.entries();
        keys.insert(modular.entries().begin(), modular.entries().end());
        auto& diffs = report[field.characteristic()];
        for (const auto& [key, unused] : keys) {
            const auto q = rational.at(key.index, key.degree);
            const auto p = modular.at(key.index, key.degree);
            if (q != p) diffs.push_back({key.index, key.degree, q, p});
        }
    }
    return report;
}

}  // namespace monosplit
