#include <doctest.h>

#include <algorithm>
#include <random>

#include "monosplit/errors.hpp"
#include "monosplit/ideal.hpp"
#include "support/fixtures.hpp"

using namespace monosplit;
using monosplit::testing::sq;

TEST_CASE("lcm is the componentwise maximum") {
    CHECK(monomial_lcm(sq(5, {1, 2, 3}), sq(5, {2, 3, 4})) == sq(5, {1, 2, 3, 4}));
    const Monomial m{2, 0, 1};
    CHECK(monomial_lcm(m, Monomial(3)) == m);
    CHECK(monomial_lcm(Monomial{2, 1}, Monomial{1, 3}) == Monomial{2, 3});
    CHECK_THROWS_AS(monomial_lcm(Monomial(2), Monomial(3)), DimensionError);
}

TEST_CASE("divides and strictly_divides") {
    const Monomial top = sq(5, {1, 2, 3, 4, 5});
    CHECK_FALSE(strictly_divides(top, top));
    CHECK(divides(top, top));
    CHECK(divides(Monomial(3), Monomial{0, 4, 1}));
    CHECK(strictly_divides(sq(3, {1, 2}), sq(3, {1, 2, 3})));
    CHECK_FALSE(divides(Monomial{2, 0}, Monomial{1, 5}));
    CHECK_THROWS_AS(divides(Monomial(2), Monomial(4)), DimensionError);
}

TEST_CASE("monomial helpers") {
    const Monomial m{1, 0, 2, 0, 0, 1};
    CHECK(m.degree() == 4);
    CHECK(to_string(m) == "x1*x3^2*x6");
    CHECK(to_string(Monomial(4)) == "1");
    CHECK_FALSE(m.is_squarefree());
    CHECK_FALSE(m.squarefree_mask().has_value());
    CHECK(sq(6, {1, 3}).squarefree_mask() == 0b101u);
    CHECK(Monomial::from_mask(6, 0b101) == sq(6, {1, 3}));
    CHECK(m / Monomial::variable(6, 2) == Monomial{1, 0, 1, 0, 0, 1});
    CHECK_THROWS(Monomial::variable(6, 1) / m);
}

TEST_CASE("minimalize") {
    CHECK(minimalize(3, std::vector{sq(3, {1, 2}), sq(3, {1, 2, 3})}).generators() == std::vector{sq(3, {1, 2})});
    const auto ek = monosplit::testing::ek_example();
    CHECK(ek.size() == 5);
    const auto unit = minimalize(2, std::vector{Monomial(2), sq(2, {1})});
    CHECK(unit.is_unit());
    CHECK(minimalize(4, std::vector<Monomial>{}).is_zero());
    CHECK(minimalize(2, std::vector{sq(2, {1}), sq(2, {1})}).size() == 1);
}

TEST_CASE("generators come out in canonical order") {
    const auto i = minimalize(3, std::vector{sq(3, {3}), sq(3, {2}), sq(3, {1})});
    CHECK(i.generators() == std::vector{sq(3, {1}), sq(3, {2}), sq(3, {3})});
}

TEST_CASE("minimalize is idempotent and minimal on random input") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto i = monosplit::testing::random_ideal(rng, 6, 12, 3);
        CHECK(minimalize(i.num_vars(), i.generators()) == i);
        for (const auto& a : i.generators()) {
            for (const auto& b : i.generators()) {
                if (a != b) CHECK_FALSE(divides(a, b));
            }
        }
    }
}

TEST_CASE("intersection of the five-cubic example parts") {
    const auto j = monosplit::testing::sq_ideal(5, {{1, 2, 3}, {1, 3, 5}, {1, 4, 5}});
    const auto k = monosplit::testing::sq_ideal(5, {{2, 3, 4}, {2, 4, 5}});
    const auto jk = intersect(j, k);
    CHECK(jk.generators() == std::vector{sq(5, {1, 2, 3, 4}), sq(5, {1, 2, 4, 5})});
    CHECK(membership(jk, sq(5, {1, 2, 4, 5})));
    CHECK(intersect(j, MonomialIdeal::unit(5)) == j);
    CHECK(intersect(j, MonomialIdeal::zero(5)).is_zero());
}

TEST_CASE("membership") {
    const auto i = monosplit::testing::sq_ideal(4, {{1, 2, 3}, {2, 4}});
    CHECK(membership(i, sq(4, {1, 2, 3, 4})));
    CHECK_FALSE(membership(i, sq(4, {1, 3, 4})));
    CHECK_FALSE(membership(MonomialIdeal::zero(4), sq(4, {1})));
    CHECK(membership(MonomialIdeal::unit(4), Monomial(4)));
}

TEST_CASE("intersection agrees with brute-force membership on squarefree monomials") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto j = monosplit::testing::random_squarefree(rng, 6, 5);
        const auto k = monosplit::testing::random_squarefree(rng, 6, 5);
        const auto jk = intersect(j, k);
        for (std::uint64_t mask = 0; mask < 64; ++mask) {
            const auto m = Monomial::from_mask(6, mask);
            const bool expected = monosplit::testing::member_brute(j.generators(), m) &&
                                  monosplit::testing::member_brute(k.generators(), m);
            CHECK(monosplit::testing::member_brute(jk.generators(), m) == expected);
        }
    }
}

TEST_CASE("intersection is commutative, associative and exact on bounded-degree monomials") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3;
        auto pick = [&] {
            auto i = monosplit::testing::random_ideal(rng, 3, 4, 2);
            while (i.num_vars() != n) i = monosplit::testing::random_ideal(rng, 3, 4, 2);
            return i;
        };
        const auto a = pick(), b = pick(), c = pick();
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        for (const auto& m : monosplit::testing::box_monomials(n, 4)) {
            CHECK(membership(intersect(a, b), m) == (membership(a, m) && membership(b, m)));
        }
    }
}

TEST_CASE("lcm lattice") {
    const auto lattice = lcm_lattice(monosplit::testing::sq_ideal(2, {{1}, {2}}));
    CHECK(lattice == std::vector{sq(2, {1, 2}), sq(2, {1}), sq(2, {2})});
    const auto ek_lattice = lcm_lattice(monosplit::testing::ek_example());
    CHECK(std::find(ek_lattice.begin(), ek_lattice.end(), sq(5, {1, 2, 3, 4, 5})) != ek_lattice.end());
    CHECK(lcm_lattice(MonomialIdeal::zero(3)).empty());
}

TEST_CASE("lcm lattice equals the set of subset lcms") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto i = monosplit::testing::random_ideal(rng, 6, 6, 2);
        const auto lattice = lcm_lattice(i);
        CHECK(lattice == monosplit::testing::lcm_set_brute(i.generators(), i.num_vars()));
        for (const auto& a : lattice) {
            for (const auto& b : lattice) {
                CHECK(std::binary_search(lattice.begin(), lattice.end(), monomial_lcm(a, b), MonomialOrder{}));
            }
        }
    }
}

TEST_CASE("borel closure") {
    CHECK(borel_closure(2, std::vector{Monomial{2, 0}}).generators() == std::vector{Monomial{2, 0}});
    CHECK(borel_closure(2, std::vector{Monomial{0, 1}}).generators() == std::vector{sq(2, {1}), sq(2, {2})});

    const auto borel = monosplit::testing::borel_example();
    CHECK(membership(borel, Monomial{1, 0, 0, 0, 0, 3}));
    CHECK(membership(borel, Monomial{0, 0, 2, 0, 0, 1}));
    // Exchange closure: g * x_i / x_j stays in the ideal for i < j.
    for (const auto& g : borel.generators()) {
        for (std::size_t j = 1; j < 6; ++j) {
            if (g[j] == 0) continue;
            for (std::size_t i = 0; i < j; ++i) {
                CHECK(membership(borel, g * Monomial::variable(6, i) / Monomial::variable(6, j)));
            }
        }
    }
}

TEST_CASE("polarization maps to a squarefree ideal and back") {
    const auto borel = monosplit::testing::borel_example();
    const auto p = polarize(borel);
    CHECK(p.ideal.is_squarefree());
    CHECK(p.ideal.size() == borel.size());
    for (const auto& g : borel.generators()) {
        CHECK(p.depolarize(p.polarize(g)) == g);
    }
}
