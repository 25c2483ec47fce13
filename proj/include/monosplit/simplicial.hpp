#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monosplit/field.hpp"

namespace monosplit {

/// Abstract simplicial complex on vertices 0..vertex_count-1 (at most 64).
///
/// Faces are bitmasks. The void complex has no faces at all and is distinct
/// from the irrelevant complex {∅}.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(std::size_t vertex_count);
    /// Complex generated by the given faces (closed under subsets).
    static SimplicialComplex from_facets(std::size_t vertex_count, std::span<const std::uint64_t> facets);
    /// Same closure as from_facets; input is usually already downward closed.
    static SimplicialComplex from_faces(std::size_t vertex_count, std::span<const std::uint64_t> faces) {
        return from_facets(vertex_count, faces);
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    bool is_void() const noexcept { return faces_.empty(); }
    /// All faces, ordered by size then mask value; ∅ first when nonvoid.
    const std::vector<std::uint64_t>& faces() const noexcept { return faces_; }
    /// Inclusion-maximal faces, ascending by mask value.
    std::vector<std::uint64_t> facets() const;
    bool contains(std::uint64_t face) const;
    /// -1 for {∅}; -2 for the void complex.
    int dimension() const noexcept;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::uint64_t> faces_;
};

/// dim H̃_d(C; k) for d = -1..dim(C); entry d+1 holds dimension d.
/// The void complex yields {0}.
std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field);

}  // namespace monosplit
