#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace spine {

// The group families whose semilattice of non-quotient topologies is known
// in closed form.
enum class ModelKind {
  compact,         // any compact group: a single grade
  real_line,       // ℝ: {ap, full}
  integers,        // ℤ: {ap, full}
  real_vector,     // ℝⁿ: subspace lattice of ℚⁿ
  integer_vector,  // ℤⁿ: the same lattice
  rationals,       // discrete ℚ: free sub-semilattice on R and the primes, plus TOP
  axb,             // ax+b group: ap < realline < full
  min_wap,         // minimally weakly almost periodic groups: {ap, full}
  p_adic,          // ℚ_p: {ap, full}
};

struct Model {
  ModelKind kind = ModelKind::compact;
  std::size_t dim = 1;        // n for ℝⁿ / ℤⁿ, 1 otherwise
  std::uint64_t prime = 0;    // p for ℚ_p, 0 otherwise

  static Model vector(ModelKind kind, std::size_t n) { return {kind, n, 0}; }
  static Model of(ModelKind kind) { return {kind, 1, 0}; }
  static Model padic(std::uint64_t p) { return {ModelKind::p_adic, 1, p}; }

  bool operator==(Model const&) const = default;
};

// Canonical spelling: "compact", "R", "Z", "R^n", "Z^n", "Q", "axb",
// "minWAP", "Q_p".
std::string to_string(Model const& m);

bool is_abelian(Model const& m);
bool is_vector_model(Model const& m);   // ℝⁿ or ℤⁿ
bool has_finite_grades(Model const& m);

// Models on which group elements are integer points (frequencies mod 1).
bool is_discrete_lattice(Model const& m);

// Number of rational coordinates in a dense-image representative: n for the
// vector models, 1 for ℝ, ℤ, ℚ and ℚ_p, 2 for ax+b, 0 for compact / minWAP.
std::size_t representative_arity(Model const& m);

// Models on which the graded algebra is carried by rational characters.
bool supports_graded_algebra(Model const& m);

}  // namespace spine
