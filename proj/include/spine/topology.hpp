#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spine/model.hpp"
#include "spine/semilattice.hpp"
#include "spine/subspace.hpp"

namespace spine {

// τ_L on ℝⁿ or ℤⁿ; L = {0} is τ_ap and L = ℚⁿ is the group topology.
struct VectorGrade {
  RationalSubspace space;

  bool operator==(VectorGrade const&) const = default;
};

enum class TwoPointLevel { ap, full };

// {τ_ap, τ_G} for ℝ, ℤ, ℚ_p and minimally weakly almost periodic groups;
// the compact model only has `full`.
struct TwoPointGrade {
  TwoPointLevel level;

  bool operator==(TwoPointGrade const&) const = default;
};

enum class AxbLevel { ap, realline, full };

// τ_ap ⊂ τ̃_ℝ = j⁻¹(τ_ℝ) ⊂ τ_H on the ax+b group, j(a,b) = log a.
struct AxbGrade {
  AxbLevel level;

  bool operator==(AxbGrade const&) const = default;
};

// A point of the free sub-semilattice of T_nq(ℚ) generated by τ_R and the
// τ_p, plus the discrete topology TOP which absorbs every join. The empty
// generator set is τ_ap. This is a sub-semilattice only: T_nq(ℚ) contains
// topologies outside it.
struct QGrade {
  bool top = false;
  bool real = false;                 // contains τ_R
  std::vector<std::uint64_t> primes; // sorted, duplicate-free

  bool operator==(QGrade const&) const = default;
};

class TopologyGrade {
 public:
  using Value = std::variant<VectorGrade, TwoPointGrade, AxbGrade, QGrade>;

  TopologyGrade(VectorGrade g) : _value(std::move(g)) {}
  TopologyGrade(TwoPointGrade g) : _value(g) {}
  TopologyGrade(AxbGrade g) : _value(g) {}
  TopologyGrade(QGrade g);

  Value const& value() const noexcept { return _value; }

  template <typename T>
  bool holds() const noexcept {
    return std::holds_alternative<T>(_value);
  }
  template <typename T>
  T const& as() const {
    return std::get<T>(_value);
  }

  bool operator==(TopologyGrade const&) const = default;

 private:
  Value _value;
};

// Structural total order (for containers), not the semilattice order.
bool operator<(TopologyGrade const& a, TopologyGrade const& b);

// DSL spelling: span[...] for vector grades, ap/full, ap/realline/full,
// {R,2,3} / {} / TOP for ℚ.
std::string to_string(TopologyGrade const& g);

QGrade make_q_grade(bool real, std::vector<std::uint64_t> primes);
QGrade q_top();

bool belongs_to(Model const& m, TopologyGrade const& g);
void require_belongs(Model const& m, TopologyGrade const& g);

TopologyGrade unit_grade(Model const& m);  // τ_ap
TopologyGrade top_grade(Model const& m);   // τ_G (TOP for ℚ)

// Throw Error(model_mismatch) when the grades come from different families
// or, for vector grades, different ambient dimensions.
TopologyGrade grade_join(TopologyGrade const& a, TopologyGrade const& b);
TopologyGrade grade_meet(TopologyGrade const& a, TopologyGrade const& b);
bool grade_leq(TopologyGrade const& a, TopologyGrade const& b);

// A finite set of grades of one model, closed under join, with its join
// table. Element i of `lattice` is grades[i].
struct GradeSemilattice {
  Model model;
  std::vector<TopologyGrade> grades;
  FiniteSemilattice lattice;

  std::optional<ElementId> index_of(TopologyGrade const& g) const;
};

// Infinite models are described, not enumerated.
struct SymbolicGrades {
  Model model;
  std::string description;
};

using GradeSpace = std::variant<GradeSemilattice, SymbolicGrades>;

GradeSpace enumerate_grades(Model const& m);

// Join closure of the generators together with the unit grade.
GradeSemilattice restrict_grades(Model const& m, std::vector<TopologyGrade> const& generators);

// A locally precompact topology on ℝⁿ / ℤⁿ before nq-closure: the vector
// part τ_L, optionally joined with τ_ap. include_ap holds exactly for the
// descriptors that equal their own nq-closure.
struct RawTopologyDescriptor {
  RationalSubspace space;
  bool include_ap = false;

  bool operator==(RawTopologyDescriptor const&) const = default;
};

// τ ↦ τ ∨ τ_ap.
TopologyGrade nq_closure(RawTopologyDescriptor const& d);
RawTopologyDescriptor nq_closure_descriptor(RawTopologyDescriptor const& d);

// Whether a is a quotient of b (the identity map b → a has compact kernel
// on completions). Only dropping the almost periodic factor qualifies;
// shrinking L leaves a vector direction in the kernel.
bool is_quotient(RawTopologyDescriptor const& a, RawTopologyDescriptor const& b);

// τ̂_L on the dual group: L is an open subgroup carrying its usual topology.
struct DualDescriptor {
  RationalSubspace open_subgroup;

  bool operator==(DualDescriptor const&) const = default;
};

DualDescriptor dual_descriptor(TopologyGrade const& g);
TopologyGrade grade_of(DualDescriptor const& d);

// dual(a ∨ b) carries a.L + b.L, i.e. τ̂_{L₁} ∩ τ̂_{L₂} = τ̂_{L₁+L₂}.
bool dual_join_law(TopologyGrade const& a, TopologyGrade const& b);

}  // namespace spine
