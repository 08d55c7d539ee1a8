#pragma once

#include <string>
#include <vector>

#include "spine/model.hpp"
#include "spine/rational.hpp"
#include "spine/topology.hpp"

namespace spine {

// A point η_τ(x) of the spine compactification G*, where τ is the grade and
// x ∈ G a dense-image representative. Representatives are normalised by the
// kernel of η_τ at construction, so equality is structural.
//
// Representative coordinates by model: ℝⁿ / ℤⁿ a vector (integral for ℤⁿ);
// ℝ, ℤ, ℚ, ℚ_p a single rational; ax+b the pair (a, b) with a > 0; compact
// and minWAP groups carry none and are represented by the identity only.
class SpineElement {
 public:
  SpineElement(Model model, TopologyGrade grade, RationalVector representative);

  Model const& model() const noexcept { return _model; }
  TopologyGrade const& grade() const noexcept { return _grade; }
  RationalVector const& representative() const noexcept { return _rep; }

  bool operator==(SpineElement const&) const = default;

 private:
  Model _model;
  TopologyGrade _grade;
  RationalVector _rep;
};

std::string to_string(SpineElement const& s);

RationalVector group_identity(Model const& m);
RationalVector group_product(Model const& m, RationalVector const& x, RationalVector const& y);

// Grade = meet of the grades, representative = group product.
SpineElement spine_mul(SpineElement const& s, SpineElement const& t);

// e_τ = η_τ(e).
SpineElement spine_idempotent(Model const& m, TopologyGrade const& g);

// η^{τ₂}_{τ₁}: the image of s at a grade below its own.
SpineElement pushforward(SpineElement const& s, TopologyGrade const& lower);

// One component per grade of a hereditary set of a finite grade semilattice.
struct CompatibleTuple {
  Model model;
  std::vector<SpineElement> components;
};

struct TupleViolation {
  TopologyGrade lower;
  TopologyGrade upper;
};

// Checks that the component grades form a hereditary set of `context`
// (Error(invalid_argument) otherwise) and reports every pair τ₁ ≤ τ₂ whose
// τ₁-component differs from the pushforward of the τ₂-component.
std::vector<TupleViolation> validate_tuple(GradeSemilattice const& context,
                                           CompatibleTuple const& t);

// The tuple obtained by pushing s down to every grade below its own.
CompatibleTuple principal_tuple(GradeSemilattice const& context, SpineElement const& s);

struct CliffordCell {
  TopologyGrade grade;
  std::vector<SpineElement> members;
  SpineElement idempotent;
};

// Cells are the maximal subgroups met by the input, ordered by grade.
struct CliffordDecomposition {
  Model model;
  std::vector<CliffordCell> cells;

  std::vector<TopologyGrade> occupied_grades() const;
};

CliffordDecomposition clifford_decompose(std::vector<SpineElement> const& elements);

// Appends products of cell representatives until the occupied grades are
// closed under meet.
CliffordDecomposition close_under_products(CliffordDecomposition const& d);

bool occupied_grades_meet_closed(CliffordDecomposition const& d);

}  // namespace spine
