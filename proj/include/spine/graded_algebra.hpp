#pragma once

#include <map>
#include <optional>

#include "spine/cyclotomic.hpp"
#include "spine/model.hpp"
#include "spine/spine_semigroup.hpp"
#include "spine/topology.hpp"

namespace spine {

// Where character frequencies live: θ ∈ ℚⁿ, reduced mod ℤⁿ when the group
// is a lattice (the dual of ℤⁿ is the torus).
struct FrequencyDomain {
  std::size_t dim = 1;
  bool modulo_integers = false;

  bool operator==(FrequencyDomain const&) const = default;
};

// Throws Error(unsupported_scope) for models without a rational character
// carrier (compact, minWAP, ax+b, ℚ_p).
FrequencyDomain frequency_domain(Model const& m);

using Frequency = RationalVector;

// A norm that stays exact while every |c| is rational.
struct NormValue {
  std::optional<Rational> exact;
  double approx = 0;

  static NormValue of(Cyclotomic const& c);

  friend NormValue operator+(NormValue const& a, NormValue const& b);
  friend NormValue operator*(NormValue const& a, NormValue const& b);
};

// a ≤ b exactly when both are exact, within kNumericTolerance otherwise.
bool norm_leq(NormValue const& a, NormValue const& b);

// Finite sum Σ c_θ χ_θ with χ_θ(x) = e^{2πi θ·x}. No zero coefficients are
// stored and frequencies are kept in canonical (reduced) form, so two
// polynomials are equal iff they define the same function.
class TrigPolynomial {
 public:
  using Terms = std::map<Frequency, Cyclotomic, RationalVectorLess>;

  explicit TrigPolynomial(FrequencyDomain domain);

  static TrigPolynomial constant(FrequencyDomain domain, Cyclotomic c);
  static TrigPolynomial character(FrequencyDomain domain, Frequency theta, Cyclotomic c = 1);

  FrequencyDomain const& domain() const noexcept { return _domain; }
  Terms const& terms() const noexcept { return _terms; }
  bool empty() const noexcept { return _terms.empty(); }

  void add_term(Frequency theta, Cyclotomic const& c);

  CharacterValue evaluate(RationalVector const& x) const;

  TrigPolynomial scaled(Cyclotomic const& c) const;

  friend TrigPolynomial operator+(TrigPolynomial const& a, TrigPolynomial const& b);
  friend TrigPolynomial operator-(TrigPolynomial const& a, TrigPolynomial const& b);

  bool operator==(TrigPolynomial const&) const = default;

 private:
  FrequencyDomain _domain;
  Terms _terms;
};

Frequency canonical_frequency(FrequencyDomain const& d, Frequency theta);

// Pairwise products of terms with frequencies added.
TrigPolynomial trig_mul(TrigPolynomial const& a, TrigPolynomial const& b);

NormValue norm(TrigPolynomial const& p);

// Σ_τ u_τ over the grades of one model, each u_τ a trigonometric
// polynomial. Parts are never empty.
class GradedElement {
 public:
  using Parts = std::map<TopologyGrade, TrigPolynomial>;

  explicit GradedElement(Model model);

  // The constant 1 at the unit grade τ_ap.
  static GradedElement unit(Model model);
  static GradedElement single(Model model, TopologyGrade grade, TrigPolynomial part);

  Model const& model() const noexcept { return _model; }
  Parts const& parts() const noexcept { return _parts; }
  bool empty() const noexcept { return _parts.empty(); }

  // Adds p into the part at grade g.
  void add_part(TopologyGrade const& g, TrigPolynomial const& p);

  // The function Σ_τ u_τ on the group, forgetting the grading.
  TrigPolynomial flatten() const;

  friend GradedElement operator+(GradedElement const& a, GradedElement const& b);
  friend GradedElement operator-(GradedElement const& a, GradedElement const& b);

  bool operator==(GradedElement const&) const = default;

 private:
  Model _model;
  Parts _parts;
};

// Part at g = Σ_{g₁ ∨ g₂ = g} u_{g₁} v_{g₂}.
GradedElement graded_mul(GradedElement const& u, GradedElement const& v);

// ℓ¹ norm: the sum of the part norms.
NormValue norm(GradedElement const& u);

// χ_s(u) = Σ_{τ ≤ grade(s)} u_τ(s), evaluated at the representative.
CharacterValue char_eval(SpineElement const& s, GradedElement const& u);

}  // namespace spine
