#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spine {

using ElementId = std::uint32_t;

// A finite commutative idempotent semigroup written as a dense join table.
// Identifiers are 0..size()-1; labels are only for display and lookup.
// Construction checks that the table is total and in range, but not the
// semilattice laws: those are reported by verify_axioms().
class FiniteSemilattice {
 public:
  FiniteSemilattice(std::vector<std::string> labels,
                    std::vector<ElementId> join_table,
                    std::optional<ElementId> unit = std::nullopt);

  // Chain 0 < 1 < ... < n-1 with join = max; the bottom is the unit.
  static FiniteSemilattice chain(std::vector<std::string> labels);

  // Subsets of the generators under union. Element id = subset bitmask, so
  // id 0 is the empty set (the unit).
  static FiniteSemilattice free_on(std::vector<std::string> const& generators);

  std::size_t size() const noexcept { return _labels.size(); }
  std::string const& label(ElementId x) const;
  std::optional<ElementId> find(std::string const& label) const;
  std::optional<ElementId> unit() const noexcept { return _unit; }

  ElementId join(ElementId x, ElementId y) const;

  bool operator==(FiniteSemilattice const&) const = default;

 private:
  void check(ElementId x) const;

  std::vector<std::string> _labels;
  std::vector<ElementId> _table;
  std::optional<ElementId> _unit;
};

// Sorted, duplicate-free member list. Use make_hereditary_set() to build a
// validated one.
struct HereditarySet {
  std::vector<ElementId> members;

  bool contains(ElementId x) const;
  bool operator==(HereditarySet const&) const = default;
};

enum class Law { commutativity, associativity, idempotency, unit };

struct AxiomViolation {
  Law law;
  std::vector<ElementId> witnesses;  // the offending pair / triple / element

  bool operator==(AxiomViolation const&) const = default;
};

std::vector<AxiomViolation> verify_axioms(FiniteSemilattice const& s);

// x ≤ y iff x ∨ y = y.
bool leq(FiniteSemilattice const& s, ElementId x, ElementId y);

// The greatest lower bound of x and y, when one exists.
std::optional<ElementId> meet(FiniteSemilattice const& s, ElementId x, ElementId y);

// Non-empty, downward closed and closed under join.
bool is_hereditary_set(FiniteSemilattice const& s, std::vector<ElementId> const& members);

// Sorts and validates; throws Error(invalid_argument) if the invariants fail.
HereditarySet make_hereditary_set(FiniteSemilattice const& s, std::vector<ElementId> members);

HereditarySet principal_set(FiniteSemilattice const& s, ElementId x);

// Largest semilattice accepted by the brute-force enumerations below.
inline constexpr std::size_t kMaxEnumerationSize = 20;

// Every hereditary directed subset, ordered by the bitmask of its members.
std::vector<HereditarySet> enumerate_hereditary_sets(FiniteSemilattice const& s);

using Semicharacter = std::vector<std::uint8_t>;  // value in {0,1} per element

// Every non-zero {0,1}-valued ω with ω(x ∨ y) = ω(x)ω(y).
std::vector<Semicharacter> semicharacters(FiniteSemilattice const& s);

bool is_semicharacter(FiniteSemilattice const& s, Semicharacter const& w);

Semicharacter indicator(FiniteSemilattice const& s, HereditarySet const& h);

// The witness x with h = principal_set(s, x), if any.
std::optional<ElementId> is_principal(FiniteSemilattice const& s, HereditarySet const& h);

}  // namespace spine
