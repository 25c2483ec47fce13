#include "monosplit/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "monosplit/linalg.hpp"

namespace monosplit {

namespace {

bool face_order(std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
    if (vertex_count > 64) throw std::invalid_argument("simplicial complexes are limited to 64 vertices");
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 std::span<const std::uint64_t> facets) {
    SimplicialComplex c = void_complex(vertex_count);
    const std::uint64_t universe = vertex_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertex_count) - 1;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack;
    for (std::uint64_t f : facets) {
        if (f & ~universe) throw std::invalid_argument("face uses a vertex outside the complex");
        if (seen.insert(f).second) stack.push_back(f);
    }
    while (!stack.empty()) {
        const std::uint64_t f = stack.back();
        stack.pop_back();
        for (std::uint64_t rest = f; rest; rest &= rest - 1) {
            const std::uint64_t sub = f & ~(rest & -rest);
            if (seen.insert(sub).second) stack.push_back(sub);
        }
    }
    c.faces_.assign(seen.begin(), seen.end());
    std::sort(c.faces_.begin(), c.faces_.end(), face_order);
    return c;
}

std::vector<std::uint64_t> SimplicialComplex::facets() const {
    std::vector<std::uint64_t> out;
    // A face is maximal iff no face one vertex larger contains it.
    std::unordered_set<std::uint64_t> all(faces_.begin(), faces_.end());
    for (std::uint64_t f : faces_) {
        bool maximal = true;
        for (std::size_t v = 0; v < vertex_count_ && maximal; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (!(f & bit) && all.count(f | bit)) maximal = false;
        }
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::contains(std::uint64_t face) const {
    return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int SimplicialComplex::dimension() const noexcept {
    if (faces_.empty()) return -2;
    return std::popcount(faces_.back()) - 1;
}

std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field) {
    if (complex.is_void()) return {0};
    const int top = complex.dimension();
    // by_size[s] holds the faces with s vertices (dimension s-1).
    std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(top) + 2);
    for (std::uint64_t f : complex.faces()) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    // boundary_rank[s] = rank of the boundary map out of faces with s vertices.
    std::vector<std::size_t> boundary_rank(by_size.size() + 1, 0);
    for (std::size_t s = 1; s < by_size.size(); ++s) {
        std::unordered_map<std::uint64_t, std::uint32_t> row_index;
        for (std::uint32_t r = 0; r < by_size[s - 1].size(); ++r) row_index.emplace(by_size[s - 1][r], r);

        SparseIntMatrix boundary;
        boundary.rows = by_size[s - 1].size();
        boundary.columns.reserve(by_size[s].size());
        for (std::uint64_t f : by_size[s]) {
            std::vector<std::pair<std::uint32_t, std::int64_t>> column;
            std::int64_t sign = 1;
            for (std::uint64_t rest = f; rest; rest &= rest - 1) {
                column.emplace_back(row_index.at(f & ~(rest & -rest)), sign);
                sign = -sign;
            }
            std::sort(column.begin(), column.end());
            boundary.columns.push_back(std::move(column));
        }
        boundary_rank[s] = matrix_rank(boundary, field);
    }

    std::vector<std::uint64_t> ranks(by_size.size());
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        ranks[s] = by_size[s].size() - boundary_rank[s] - boundary_rank[s + 1];
    }
    return ranks;
}

}  // namespace monosplit
