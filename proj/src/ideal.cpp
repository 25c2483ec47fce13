#include "monosplit/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "monosplit/errors.hpp"

namespace monosplit {

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
    const Monomial one(n);
    return minimalize(n, std::span<const Monomial>(&one, 1));
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

Monomial MonomialIdeal::lcm_all() const {
    Monomial out(n_);
    for (const auto& g : gens_) out = monomial_lcm(out, g);
    return out;
}

MonomialIdeal minimalize(std::size_t n, std::span<const Monomial> gens) {
    for (const auto& g : gens) {
        if (g.num_vars() != n) throw DimensionError("generator outside the ambient ring");
    }
    // Sorting by degree first means a generator can only be divided by one
    // already kept.
    std::vector<Monomial> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
        const auto da = a.degree(), db = b.degree();
        return da != db ? da < db : MonomialOrder{}(a, b);
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    MonomialIdeal out(n);
    for (auto& m : sorted) {
        const bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                           [&](const Monomial& g) { return divides(g, m); });
        if (!redundant) out.gens_.push_back(std::move(m));
    }
    std::sort(out.gens_.begin(), out.gens_.end(), MonomialOrder{});
    return out;
}

bool membership(const MonomialIdeal& ideal, const Monomial& m) {
    if (m.num_vars() != ideal.num_vars()) throw DimensionError("monomial outside the ambient ring");
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal intersect(const MonomialIdeal& j, const MonomialIdeal& k) {
    if (j.num_vars() != k.num_vars()) throw DimensionError("intersecting ideals of different rings");
    std::vector<Monomial> lcms;
    lcms.reserve(j.size() * k.size());
    for (const auto& a : j.generators()) {
        for (const auto& b : k.generators()) lcms.push_back(monomial_lcm(a, b));
    }
    return minimalize(j.num_vars(), lcms);
}

MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k) {
    if (j.num_vars() != k.num_vars()) throw DimensionError("adding ideals of different rings");
    std::vector<Monomial> all(j.generators());
    all.insert(all.end(), k.generators().begin(), k.generators().end());
    return minimalize(j.num_vars(), all);
}

MonomialIdeal multiply(const Monomial& m, const MonomialIdeal& ideal) {
    std::vector<Monomial> out;
    out.reserve(ideal.size());
    for (const auto& g : ideal.generators()) out.push_back(m * g);
    return minimalize(ideal.num_vars(), out);
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
    std::deque<Monomial> frontier(gens.begin(), gens.end());
    // Every lcm(S) is reached by adjoining generators one at a time.
    while (!frontier.empty()) {
        Monomial x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            Monomial l = monomial_lcm(x, g);
            if (seen.insert(l).second) frontier.push_back(std::move(l));
        }
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

MonomialIdeal borel_closure(std::size_t n, std::span<const Monomial> seeds) {
    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> frontier;
    for (const auto& s : seeds) {
        if (s.num_vars() != n) throw DimensionError("seed outside the ambient ring");
        if (seen.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        const Monomial m = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t j = 1; j < n; ++j) {
            if (m[j] == 0) continue;
            for (std::size_t i = 0; i < j; ++i) {
                std::vector<Exponent> e = m.exponents();
                --e[j];
                ++e[i];
                Monomial moved(std::move(e));
                if (seen.insert(moved).second) frontier.push_back(std::move(moved));
            }
        }
    }
    std::vector<Monomial> all(seen.begin(), seen.end());
    return minimalize(n, all);
}

Monomial Polarization::polarize(const Monomial& m) const {
    std::vector<Exponent> e(ideal.num_vars(), 0);
    for (std::size_t i = 0; i < original_vars; ++i) {
        if (m[i] > top_exponents[i]) throw std::domain_error("exponent exceeds polarization range");
        for (Exponent k = 0; k < m[i]; ++k) e[offsets[i] + k] = 1;
    }
    return Monomial(std::move(e));
}

Monomial Polarization::depolarize(const Monomial& b) const {
    std::vector<Exponent> e(original_vars, 0);
    for (std::size_t i = 0; i < original_vars; ++i) {
        for (Exponent k = 0; k < top_exponents[i]; ++k) e[i] += b[offsets[i] + k];
    }
    return Monomial(std::move(e));
}

Polarization polarize(const MonomialIdeal& ideal) {
    Polarization p;
    p.original_vars = ideal.num_vars();
    p.top_exponents.assign(p.original_vars, 0);
    for (const auto& g : ideal.generators()) {
        for (std::size_t i = 0; i < p.original_vars; ++i) {
            p.top_exponents[i] = std::max(p.top_exponents[i], g[i]);
        }
    }
    std::size_t total = 0;
    p.offsets.resize(p.original_vars);
    for (std::size_t i = 0; i < p.original_vars; ++i) {
        p.offsets[i] = total;
        total += p.top_exponents[i];
    }
    p.ideal = MonomialIdeal(total);
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(p.polarize(g));
    p.ideal = minimalize(total, gens);
    return p;
}

}  // namespace monosplit
