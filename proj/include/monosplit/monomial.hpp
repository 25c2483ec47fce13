#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace monosplit {

using Exponent = std::uint32_t;

/// A monomial x^a in k[x1..xn], stored as its exponent vector a.
///
/// The ambient variable count n is part of the value; mixing monomials of
/// different n in lcm/divisibility throws DimensionError.
class Monomial {
public:
    /// The unit monomial 1 in n variables.
    explicit Monomial(std::size_t n = 0) : exponents_(n, 0) {}
    explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}
    Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

    /// x_var^power, var 0-based.
    static Monomial variable(std::size_t n, std::size_t var, Exponent power = 1);
    /// Squarefree monomial with support given by the low n bits of mask.
    static Monomial from_mask(std::size_t n, std::uint64_t mask);

    std::size_t num_vars() const noexcept { return exponents_.size(); }
    const std::vector<Exponent>& exponents() const noexcept { return exponents_; }
    Exponent operator[](std::size_t i) const { return exponents_[i]; }

    std::uint64_t degree() const noexcept;
    bool is_unit() const noexcept;
    bool is_squarefree() const noexcept;
    /// Indices of variables with positive exponent, ascending.
    std::vector<std::size_t> support() const;

    /// Packed view of a squarefree monomial with n <= 64; nullopt otherwise.
    std::optional<std::uint64_t> squarefree_mask() const noexcept;

    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; throws std::domain_error unless other divides *this.
    Monomial operator/(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exponents_;
};

/// Canonical order used everywhere output is produced: lexicographic on
/// exponent vectors, largest first (so x1 sorts before x2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return a.exponents() > b.exponents();
    }
};

Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
bool strictly_divides(const Monomial& a, const Monomial& b);

/// `x1*x3^2*x6`, or `1` for the unit monomial.
std::string to_string(const Monomial& m);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace monosplit
