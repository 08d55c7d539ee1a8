#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spine/graded_algebra.hpp"

namespace spine {

using IntegerVector = std::vector<Integer>;

// A finite-index subgroup of ℤᵐ, held as the row-style Hermite normal form
// of its generators: upper triangular, positive diagonal, and entries above
// each pivot reduced into [0, pivot). Equal subgroups have equal forms.
class IntegerLattice {
 public:
  // Rows are generators. Throws Error(semantic) for a non-square matrix and
  // Error(unsupported_scope) when the determinant is zero (infinite index).
  IntegerLattice(std::size_t m, std::vector<IntegerVector> generators);

  static IntegerLattice full(std::size_t m);
  static IntegerLattice scaled(std::size_t m, Integer const& k);  // kℤᵐ

  std::size_t dim() const noexcept { return _rows.size(); }
  std::vector<IntegerVector> const& hnf() const noexcept { return _rows; }
  Integer index() const;

  // Canonical representative of x + lattice, with 0 ≤ x_i < hnf[i][i].
  IntegerVector reduce(IntegerVector x) const;
  bool contains(IntegerVector const& x) const;

  // The annihilator {θ ∈ ℚᵐ/ℤᵐ : θ·h ∈ ℤ for h in the lattice}, i.e. the
  // dual of ℤᵐ/lattice; index() elements, sorted.
  std::vector<Frequency> dual_group() const;

  bool operator==(IntegerLattice const&) const = default;

 private:
  std::vector<IntegerVector> _rows;
};

struct Coset {
  IntegerVector offset;  // reduced modulo the lattice
  IntegerLattice lattice;

  Coset(IntegerVector offset, IntegerLattice lattice);

  bool contains(IntegerVector const& x) const;
  bool operator==(Coset const&) const = default;
};

enum class SetOp { unite, intersect, subtract };

// An element of the coset ring of ℤᵐ: cosets of finite-index subgroups
// combined by union, intersection and difference.
class CosetRingExpr {
 public:
  static CosetRingExpr leaf(Coset c);
  static CosetRingExpr combine(SetOp op, CosetRingExpr lhs, CosetRingExpr rhs);

  std::size_t dim() const;
  bool is_leaf() const;
  Coset const& coset() const;         // requires is_leaf()
  SetOp op() const;                   // requires !is_leaf()
  CosetRingExpr const& lhs() const;   // requires !is_leaf()
  CosetRingExpr const& rhs() const;   // requires !is_leaf()

  // Set membership, straight from the lattice tests.
  bool contains(IntegerVector const& x) const;

  bool operator==(CosetRingExpr const& other) const;

 private:
  struct Node;
  explicit CosetRingExpr(std::shared_ptr<Node const> node);
  std::shared_ptr<Node const> _node;
};

std::string to_string(IntegerLattice const& l);
std::string to_string(Coset const& c);
std::string to_string(CosetRingExpr const& e);

// 1_Y as an element at the τ_ap grade of the ℤᵐ model: each coset is
//   1_{t+H} = (1/[ℤᵐ:H]) Σ_{θ ∈ H^⊥} e^{-2πiθ·t} χ_θ
// and the ring operations follow 1_{A∩B} = 1_A 1_B,
// 1_{A∪B} = 1_A + 1_B - 1_A 1_B, 1_{A∖B} = 1_A - 1_A 1_B.
GradedElement synthesize_idempotent(CosetRingExpr const& y);

struct RestrictionRow {
  IntegerVector point;
  CharacterValue value;
};

// Values of u (over ℤᵐ) at the points t + Σ k_i h_i of the coset, where h_i
// are its Hermite basis rows and 0 ≤ k_i < per_axis.
std::vector<RestrictionRow> restrict_check(GradedElement const& u, Coset const& coset,
                                           std::size_t per_axis = 4);

}  // namespace spine
