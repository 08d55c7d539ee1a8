#pragma once

#include "spine/graded_algebra.hpp"
#include "spine/linalg.hpp"

namespace spine {

// h ↦ A·h + b from ℤᵐ into ℝⁿ, A rational n×m.
struct AffineMap {
  Matrix a;             // n rows of length m
  RationalVector b;     // length n
  std::size_t m = 0;

  // Throws Error(dimension_mismatch) on inconsistent shapes.
  AffineMap(Matrix a, RationalVector b);

  std::size_t source_dim() const noexcept { return m; }
  std::size_t target_dim() const noexcept { return b.size(); }
  RationalVector operator()(RationalVector const& h) const;
};

// The model of the source: ℤ when m = 1 and u lives on ℝ, ℤᵐ otherwise.
Model pullback_model(AffineMap const& alpha, Model const& target);

// {x ∈ ℚᵐ : A·x ∈ L}.
TopologyGrade pullback_grade(AffineMap const& alpha, Model const& target, TopologyGrade const& g);

// Ψ_α u: each term c·χ_θ at grade L becomes c·e^{2πiθ·b}·χ_{Aᵀθ mod ℤᵐ} at
// pullback_grade(L). As functions Ψ_α u(h) = u(α(h)) for every h ∈ ℤᵐ.
// u must live on ℝ or ℝⁿ.
GradedElement affine_pullback(AffineMap const& alpha, GradedElement const& u);

}  // namespace spine
