#pragma once

#include <cstddef>
#include <string>

#include "spine/linalg.hpp"

namespace spine {

// A subspace L of ℚⁿ held in canonical form: the nonzero rows of its reduced
// row echelon basis, sorted by pivot column. Two subspaces are equal iff
// their canonical bases are identical.
class RationalSubspace {
 public:
  // Span of the given rows; rows may be dependent or zero.
  RationalSubspace(std::size_t ambient_dim, Matrix generators);

  static RationalSubspace zero(std::size_t ambient_dim);
  static RationalSubspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return _n; }
  std::size_t dim() const noexcept { return _basis.size(); }
  Matrix const& basis() const noexcept { return _basis; }

  bool is_zero() const noexcept { return _basis.empty(); }
  bool is_full() const noexcept { return _basis.size() == _n; }

  bool contains(RationalVector const& v) const;
  bool is_subspace_of(RationalSubspace const& other) const;

  // {x : x·l = 0 for all l ∈ L}, the complement used by the projection
  // formulas.
  RationalSubspace orthogonal_complement() const;

  bool operator==(RationalSubspace const&) const = default;

 private:
  std::size_t _n;
  Matrix _basis;
};

// Structural order on canonical forms; used for map keys, not inclusion.
bool operator<(RationalSubspace const& a, RationalSubspace const& b);

RationalSubspace subspace_sum(RationalSubspace const& a, RationalSubspace const& b);
RationalSubspace subspace_intersect(RationalSubspace const& a, RationalSubspace const& b);

// {x ∈ ℚᵐ : A·x ∈ L} for A an n×m matrix and L ⊆ ℚⁿ.
RationalSubspace preimage(Matrix const& a, std::size_t columns, RationalSubspace const& l);

// "span[[1,0],[0,1]]"; the zero subspace prints as "span[]".
std::string to_string(RationalSubspace const& l);

}  // namespace spine
