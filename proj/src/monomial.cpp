#include "monosplit/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "monosplit/errors.hpp"

namespace monosplit {

namespace {

void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) {
        throw DimensionError("monomials in " + std::to_string(a.num_vars()) + " and " +
                             std::to_string(b.num_vars()) + " variables");
    }
}

}  // namespace

Monomial Monomial::variable(std::size_t n, std::size_t var, Exponent power) {
    if (var >= n) throw DimensionError("variable index out of range");
    Monomial m(n);
    m.exponents_[var] = power;
    return m;
}

Monomial Monomial::from_mask(std::size_t n, std::uint64_t mask) {
    Monomial m(n);
    for (std::size_t i = 0; i < n && i < 64; ++i) {
        if (mask >> i & 1u) m.exponents_[i] = 1;
    }
    return m;
}

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const noexcept {
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > 0) out.push_back(i);
    }
    return out;
}

std::optional<std::uint64_t> Monomial::squarefree_mask() const noexcept {
    if (exponents_.size() > 64 || !is_squarefree()) return std::nullopt;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i]) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
    check_same_ring(*this, other);
    Monomial out(*this);
    for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!divides(other, *this)) throw std::domain_error("monomial quotient is not exact");
    Monomial out(*this);
    for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= other.exponents_[i];
    return out;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    std::vector<Exponent> e(a.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    std::vector<Exponent> e(a.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

bool strictly_divides(const Monomial& a, const Monomial& b) {
    return divides(a, b) && a != b;
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = m.num_vars();
    for (Exponent e : m.exponents()) h = h * 1000003u ^ e;
    return h;
}

}  // namespace monosplit
