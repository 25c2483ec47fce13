#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monosplit/field.hpp"

namespace monosplit {

/// Integer matrix stored column by column; each column is a list of
/// (row, value) pairs with strictly increasing rows and nonzero values.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;
};

/// Rank of the matrix over the given field. Exact in every characteristic:
/// characteristic 0 runs rational elimination with GMP, characteristic p
/// reduces entries mod p.
std::size_t matrix_rank(const SparseIntMatrix& m, FieldSpec field);

}  // namespace monosplit
