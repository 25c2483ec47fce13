#pragma once

#include <cstdint>
#include <string>

namespace monosplit {

/// Coefficient field: characteristic 0 (the rationals) or a prime p < 2^31.
class FieldSpec {
public:
    static FieldSpec rationals() noexcept { return FieldSpec(0); }
    /// Throws std::invalid_argument unless p is prime and below 2^31.
    static FieldSpec prime(std::uint32_t p);
    /// 0 or a prime.
    static FieldSpec from_characteristic(std::uint32_t c) { return c == 0 ? rationals() : prime(c); }

    std::uint32_t characteristic() const noexcept { return characteristic_; }
    bool is_rational() const noexcept { return characteristic_ == 0; }

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(std::uint32_t c) noexcept : characteristic_(c) {}
    std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t p) noexcept;

/// "QQ" or "ZZ/p".
std::string to_string(FieldSpec f);

}  // namespace monosplit
