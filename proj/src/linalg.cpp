#include "monosplit/linalg.hpp"

#include <algorithm>
#include <numeric>

#include <gmpxx.h>

namespace monosplit {

namespace {

struct PrimeArithmetic {
    using Elem = std::uint64_t;
    std::uint64_t p;

    Elem from_int(std::int64_t v) const {
        const auto r = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
        return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b % p; }
    Elem inv(Elem a) const {
        // Fermat: a^(p-2).
        Elem result = 1;
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
        }
        return result;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
};

struct RationalArithmetic {
    using Elem = mpq_class;

    Elem from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
};

template <class Arith>
using Column = std::vector<std::pair<std::uint32_t, typename Arith::Elem>>;

// column - factor * pivot, both sorted by row.
template <class Arith>
Column<Arith> axpy(const Arith& f, const Column<Arith>& column, const typename Arith::Elem& factor,
                   const Column<Arith>& pivot) {
    Column<Arith> out;
    out.reserve(column.size() + pivot.size());
    std::size_t a = 0, b = 0;
    while (a < column.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < column.size() && column[a].first < pivot[b].first)) {
            out.push_back(column[a++]);
        } else if (a == column.size() || pivot[b].first < column[a].first) {
            out.emplace_back(pivot[b].first, f.sub(f.from_int(0), f.mul(factor, pivot[b].second)));
            ++b;
        } else {
            auto v = f.sub(column[a].second, f.mul(factor, pivot[b].second));
            if (!f.is_zero(v)) out.emplace_back(column[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

// Column reduction keyed on the lowest nonzero row; each surviving column
// owns a distinct pivot row, so the number of survivors is the rank.
template <class Arith>
std::size_t column_rank(const SparseIntMatrix& m, const Arith& f) {
    std::vector<std::size_t> order(m.columns.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return m.columns[a].size() < m.columns[b].size();
    });

    std::vector<std::int64_t> pivot_of_row(m.rows, -1);
    std::vector<Column<Arith>> reduced;
    for (std::size_t c : order) {
        Column<Arith> col;
        for (const auto& [row, value] : m.columns[c]) {
            auto v = f.from_int(value);
            if (!f.is_zero(v)) col.emplace_back(row, std::move(v));
        }
        while (!col.empty()) {
            const std::uint32_t low = col.back().first;
            const std::int64_t owner = pivot_of_row[low];
            if (owner < 0) {
                pivot_of_row[low] = static_cast<std::int64_t>(reduced.size());
                reduced.push_back(std::move(col));
                break;
            }
            const auto& pivot = reduced[static_cast<std::size_t>(owner)];
            const auto factor = f.div(col.back().second, pivot.back().second);
            col = axpy(f, col, factor, pivot);
        }
    }
    return reduced.size();
}

}  // namespace

std::size_t matrix_rank(const SparseIntMatrix& m, FieldSpec field) {
    if (field.is_rational()) return column_rank(m, RationalArithmetic{});
    return column_rank(m, PrimeArithmetic{field.characteristic()});
}

}  // namespace monosplit
