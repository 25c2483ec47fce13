#include "monosplit/field.hpp"

#include <stdexcept>

namespace monosplit {

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }
    return FieldSpec(p);
}

std::string to_string(FieldSpec f) {
    return f.is_rational() ? "QQ" : "ZZ/" + std::to_string(f.characteristic());
}

}  // namespace monosplit
