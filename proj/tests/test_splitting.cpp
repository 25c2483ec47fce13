#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "monosplit/errors.hpp"
#include "monosplit/splitting.hpp"
#include "support/fixtures.hpp"

using namespace monosplit;
using monosplit::testing::sq;
using monosplit::testing::sq_ideal;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Monomial lcm_of(const std::vector<Monomial>& ms, std::size_t n) {
    std::vector<Exponent> e(n, 0);
    for (const auto& m : ms) {
        for (std::size_t i = 0; i < n; ++i) e[i] = std::max(e[i], m[i]);
    }
    return Monomial(std::move(e));
}

// Both splitting-function conditions checked literally over every subset.
bool ek_valid_brute(const Partition& p, const std::vector<EkAssignment>& f) {
    const auto& dom = p.intersection().generators();
    const std::size_t n = p.whole().num_vars();
    if (f.size() != dom.size()) return false;
    for (const auto& a : f) {
        if (std::find(dom.begin(), dom.end(), a.w) == dom.end()) return false;
        const auto& jg = p.j().generators();
        const auto& kg = p.k().generators();
        if (std::find(jg.begin(), jg.end(), a.phi) == jg.end()) return false;
        if (std::find(kg.begin(), kg.end(), a.psi) == kg.end()) return false;
        if (lcm_of({a.phi, a.psi}, n) != a.w) return false;
    }
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << f.size()); ++s) {
        std::vector<Monomial> ws, phis, psis;
        for (std::size_t t = 0; t < f.size(); ++t) {
            if (!(s >> t & 1u)) continue;
            ws.push_back(f[t].w);
            phis.push_back(f[t].phi);
            psis.push_back(f[t].psi);
        }
        const auto top = lcm_of(ws, n);
        if (!strictly_divides(lcm_of(phis, n), top) || !strictly_divides(lcm_of(psis, n), top)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("x_i-partitions") {
    const auto p = xi_partition(monosplit::testing::ek_example(), 0);
    CHECK(p.j() == sq_ideal(5, {{1, 2, 3}, {1, 3, 5}, {1, 4, 5}}));
    CHECK(p.k() == sq_ideal(5, {{2, 3, 4}, {2, 4, 5}}));
    CHECK(p.intersection() == sq_ideal(5, {{1, 2, 3, 4}, {1, 2, 4, 5}}));
    CHECK_THROWS_AS(xi_partition(sq_ideal(3, {{1, 2}, {1, 3}}), 0), DegeneratePartitionError);
    CHECK_THROWS_AS(xi_partition(sq_ideal(3, {{2}, {3}}), 0), DegeneratePartitionError);

    const auto rp2 = xi_partition(monosplit::testing::rp2_ideal(), 0);
    CHECK(rp2.j().size() == 5);
    CHECK(rp2.k().size() == 5);
    for (const auto& g : rp2.j().generators()) CHECK(g[0] == 1);
}

TEST_CASE("partitions must split a minimal generating set") {
    const auto j = sq_ideal(3, {{1, 2}});
    CHECK_THROWS_AS(Partition::from_parts(j, sq_ideal(3, {{1}})), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts(j, sq_ideal(3, {{1, 2}})), std::invalid_argument);
    const auto p = Partition::from_parts(j, sq_ideal(3, {{3}}));
    CHECK(p.whole() == sq_ideal(3, {{1, 2}, {3}}));
    CHECK(p.intersection() == sq_ideal(3, {{1, 2, 3}}));
    const std::vector<Monomial> stray{sq(3, {1})};
    CHECK_THROWS_AS(Partition::from_subset(p.whole(), stray), std::invalid_argument);
}

TEST_CASE("Betti splitting verdicts") {
    const auto ek = xi_partition(monosplit::testing::ek_example(), 0);
    CHECK(is_betti_splitting(ek, QQ));
    CHECK(is_betti_splitting(ek, F2));
    CHECK(disjoint_support_condition(ek, QQ));

    const auto rp2 = xi_partition(monosplit::testing::rp2_ideal(), 0);
    CHECK_FALSE(is_betti_splitting(rp2, QQ));
    CHECK(is_betti_splitting(rp2, F2));
    CHECK_FALSE(one_sided_support_condition(rp2, 0, QQ));
}

TEST_CASE("Borel example violates disjoint support at the top squarefree degree") {
    const auto borel = monosplit::testing::borel_example();
    const auto p = xi_partition(borel, 0);
    const auto t = partition_tables(p, QQ);
    const Monomial top = sq(6, {1, 2, 3, 4, 5, 6});
    CHECK(t.j.at(2, top) > 0);
    CHECK(t.intersection.at(2, top) > 0);
    CHECK_FALSE(disjoint_support_condition(t));
    CHECK(is_betti_splitting(t));
}

TEST_CASE("an empty intersection table is vacuous for the support conditions") {
    const auto p = Partition::from_parts(sq_ideal(2, {{1}}), sq_ideal(2, {{2}}));
    const auto t = partition_tables(p, QQ);
    PartitionTables vacuous{t.whole, t.j, t.k, BettiTable(2, QQ)};
    CHECK(disjoint_support_condition(vacuous));
    CHECK(one_sided_support_condition(vacuous));
    const auto [reg, pd] = reg_pd_via_splitting(t.j, t.k, BettiTable(2, QQ));
    CHECK(reg == 1);
    CHECK(pd == 0);
}

TEST_CASE("one-sided support condition") {
    const auto ek = xi_partition(monosplit::testing::ek_example(), 0);
    CHECK(one_sided_support_condition(ek, 0, QQ));
    CHECK_THROWS_AS(one_sided_support_condition(ek, 1, QQ), std::invalid_argument);

    // Edge ideal of a 4-path split at x2: J = x2 (x1, x3) is linear.
    const auto path = sq_ideal(4, {{1, 2}, {2, 3}, {3, 4}});
    const auto p = xi_partition(path, 1);
    CHECK(one_sided_support_condition(p, 1, QQ));
    CHECK(one_sided_support_condition(partition_tables(p, QQ)));
    CHECK(is_betti_splitting(p, QQ));
}

TEST_CASE("Eliahou-Kervaire search") {
    const auto ek = xi_partition(monosplit::testing::ek_example(), 0);
    const auto none = ek_search(ek);
    CHECK(none.verdict == EkVerdict::absent);
    REQUIRE(none.witness.has_value());
    CHECK_FALSE(ek_valid_brute(ek, none.witness->assignment));

    const auto path = xi_partition(sq_ideal(4, {{1, 2}, {2, 3}, {3, 4}}), 1);
    const auto found = ek_search(path);
    REQUIRE(found.verdict == EkVerdict::found);
    CHECK(found.function.size() == 1);
    CHECK(found.function[0].w == sq(4, {2, 3, 4}));
    CHECK(found.function[0].phi == sq(4, {2, 3}));
    CHECK(found.function[0].psi == sq(4, {3, 4}));
    CHECK(ek_valid_brute(path, found.function));
    CHECK(verify_ek_function(path, found.function));

    CHECK(ek_search(ek, 1).verdict == EkVerdict::capped);
    CHECK_FALSE(verify_ek_function(ek, {}));
}

TEST_CASE("found splitting functions pass the brute-force verifier and force Betti splittings") {
    std::mt19937_64 rng(31);
    int found = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto i = monosplit::testing::random_ideal(rng, 5, 7, 2);
        for (std::size_t v = 0; v < i.num_vars(); ++v) {
            std::optional<Partition> p;
            try {
                p = xi_partition(i, v);
            } catch (const DegeneratePartitionError&) {
                continue;
            }
            const auto r = ek_search(*p);
            if (r.verdict != EkVerdict::found) continue;
            ++found;
            CHECK(ek_valid_brute(*p, r.function));
            CHECK(is_betti_splitting(*p, QQ));
            CHECK(is_betti_splitting(*p, F2));
        }
    }
    CHECK(found > 20);
}

TEST_CASE("mapping cone bound") {
    const auto rp2 = partition_tables(xi_partition(monosplit::testing::rp2_ideal(), 0), QQ);
    CHECK(mapping_cone_bound(rp2));
    CHECK_FALSE(is_betti_splitting(rp2));
    const Monomial top = sq(6, {1, 2, 3, 4, 5, 6});
    CHECK(rp2.whole.at(2, top) < rp2.j.at(2, top) + rp2.k.at(2, top) + rp2.intersection.at(1, top));

    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const auto i = monosplit::testing::random_ideal(rng, 5, 7, 2);
        if (i.size() < 2) continue;
        std::vector<Monomial> j_gens;
        for (const auto& g : i.generators()) {
            if (rng() % 2) j_gens.push_back(g);
        }
        if (j_gens.empty() || j_gens.size() == i.size()) continue;
        const auto p = Partition::from_subset(i, j_gens);
        CHECK(mapping_cone_bound(p, QQ));
        CHECK(is_betti_splitting(p, QQ) == is_betti_splitting(p.swapped(), QQ));
    }
}

TEST_CASE("reg and pd through a splitting") {
    const auto t = partition_tables(xi_partition(monosplit::testing::ek_example(), 0), QQ);
    const auto [reg, pd] = reg_pd_via_splitting(t.j, t.k, t.intersection);
    CHECK(regularity(t.intersection) == 4);
    CHECK(reg == 3);
    CHECK(pd == 2);
    CHECK(reg == regularity(t.whole));
    CHECK(pd == proj_dim(t.whole));
}

TEST_CASE("x_i-splitting scans") {
    const auto rp2 = monosplit::testing::rp2_ideal();
    const auto over_q = xi_splitting_scan(rp2, QQ);
    const auto over_2 = xi_splitting_scan(rp2, F2);
    REQUIRE(over_q.size() == 6);
    REQUIRE(over_2.size() == 6);
    for (std::size_t v = 0; v < 6; ++v) {
        CHECK(over_q[v].variable == v);
        CHECK_FALSE(over_q[v].betti_splitting);
        CHECK(over_2[v].betti_splitting);
    }

    auto splitters = [](const MonomialIdeal& i, FieldSpec f) {
        std::vector<std::size_t> out;
        for (const auto& r : xi_splitting_scan(i, f)) {
            if (r.betti_splitting) out.push_back(*r.variable);
        }
        return out;
    };
    CHECK(splitters(monosplit::testing::seven_var_ideal(), F2) == std::vector<std::size_t>{3});
    CHECK(splitters(monosplit::testing::seven_var_ideal(), QQ).empty());
    CHECK(splitters(monosplit::testing::seven_var_minus(), F2).empty());
    CHECK(splitters(monosplit::testing::seven_var_minus(), QQ).empty());
}

TEST_CASE("split reports for a user partition") {
    const auto p = xi_partition(monosplit::testing::ek_example(), 0);
    const auto r = split_report(p, std::nullopt, F2);
    CHECK_FALSE(r.variable.has_value());
    CHECK(r.betti_splitting);
    CHECK(r.disjoint_support);
    CHECK(r.ek == EkVerdict::absent);
}
