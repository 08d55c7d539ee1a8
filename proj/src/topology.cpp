#include "spine/topology.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "spine/error.hpp"
#include "spine/padic.hpp"

namespace spine {

namespace {

[[noreturn]] void mismatch(TopologyGrade const& a, TopologyGrade const& b) {
  throw Error(ErrorKind::model_mismatch,
              "grades from different models: " + to_string(a) + " and " + to_string(b));
}

void require_compatible(TopologyGrade const& a, TopologyGrade const& b) {
  if (a.value().index() != b.value().index()) mismatch(a, b);
  if (a.holds<VectorGrade>() &&
      a.as<VectorGrade>().space.ambient_dim() != b.as<VectorGrade>().space.ambient_dim()) {
    mismatch(a, b);
  }
}

std::string level_name(TwoPointLevel l) { return l == TwoPointLevel::ap ? "ap" : "full"; }

std::string level_name(AxbLevel l) {
  switch (l) {
    case AxbLevel::ap: return "ap";
    case AxbLevel::realline: return "realline";
    case AxbLevel::full: return "full";
  }
  return "?";
}

// Largest join closure restrict_grades() will build.
constexpr std::size_t kMaxClosure = 4096;

}  // namespace

TopologyGrade::TopologyGrade(QGrade g) : _value(make_q_grade(g.real, g.primes)) {
  if (g.top) _value = q_top();
}

QGrade make_q_grade(bool real, std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes) {
    if (!is_prime(Integer(static_cast<unsigned long>(p)))) {
      throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
    }
  }
  return QGrade{false, real, std::move(primes)};
}

QGrade q_top() { return QGrade{true, false, {}}; }

bool operator<(TopologyGrade const& a, TopologyGrade const& b) {
  if (a.value().index() != b.value().index()) return a.value().index() < b.value().index();
  return std::visit(
      [&](auto const& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        auto const& y = b.as<T>();
        if constexpr (std::is_same_v<T, VectorGrade>) {
          return x.space < y.space;
        } else if constexpr (std::is_same_v<T, QGrade>) {
          return std::tie(x.top, x.real, x.primes) < std::tie(y.top, y.real, y.primes);
        } else {
          return x.level < y.level;
        }
      },
      a.value());
}

std::string to_string(TopologyGrade const& g) {
  return std::visit(
      [](auto const& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VectorGrade>) {
          return to_string(x.space);
        } else if constexpr (std::is_same_v<T, QGrade>) {
          if (x.top) return "TOP";
          std::string out = "{";
          bool first = true;
          if (x.real) {
            out += "R";
            first = false;
          }
          for (auto p : x.primes) {
            if (!first) out += ",";
            out += std::to_string(p);
            first = false;
          }
          return out + "}";
        } else {
          return level_name(x.level);
        }
      },
      g.value());
}

bool belongs_to(Model const& m, TopologyGrade const& g) {
  switch (m.kind) {
    case ModelKind::compact:
      return g.holds<TwoPointGrade>() && g.as<TwoPointGrade>().level == TwoPointLevel::full;
    case ModelKind::real_line:
    case ModelKind::integers:
    case ModelKind::min_wap:
    case ModelKind::p_adic: return g.holds<TwoPointGrade>();
    case ModelKind::real_vector:
    case ModelKind::integer_vector:
      return g.holds<VectorGrade>() && g.as<VectorGrade>().space.ambient_dim() == m.dim;
    case ModelKind::rationals: return g.holds<QGrade>();
    case ModelKind::axb: return g.holds<AxbGrade>();
  }
  return false;
}

void require_belongs(Model const& m, TopologyGrade const& g) {
  if (!belongs_to(m, g)) {
    throw Error(ErrorKind::model_mismatch,
                "grade " + to_string(g) + " is not in model " + to_string(m));
  }
}

TopologyGrade unit_grade(Model const& m) {
  switch (m.kind) {
    case ModelKind::compact: return TwoPointGrade{TwoPointLevel::full};
    case ModelKind::real_vector:
    case ModelKind::integer_vector: return VectorGrade{RationalSubspace::zero(m.dim)};
    case ModelKind::rationals: return QGrade{};
    case ModelKind::axb: return AxbGrade{AxbLevel::ap};
    default: return TwoPointGrade{TwoPointLevel::ap};
  }
}

TopologyGrade top_grade(Model const& m) {
  switch (m.kind) {
    case ModelKind::real_vector:
    case ModelKind::integer_vector: return VectorGrade{RationalSubspace::full(m.dim)};
    case ModelKind::rationals: return q_top();
    case ModelKind::axb: return AxbGrade{AxbLevel::full};
    default: return TwoPointGrade{TwoPointLevel::full};
  }
}

TopologyGrade grade_join(TopologyGrade const& a, TopologyGrade const& b) {
  require_compatible(a, b);
  return std::visit(
      [&](auto const& x) -> TopologyGrade {
        using T = std::decay_t<decltype(x)>;
        auto const& y = b.as<T>();
        if constexpr (std::is_same_v<T, VectorGrade>) {
          return VectorGrade{subspace_sum(x.space, y.space)};
        } else if constexpr (std::is_same_v<T, QGrade>) {
          if (x.top || y.top) return q_top();
          std::vector<std::uint64_t> primes;
          std::set_union(x.primes.begin(), x.primes.end(), y.primes.begin(), y.primes.end(),
                         std::back_inserter(primes));
          return QGrade{false, x.real || y.real, std::move(primes)};
        } else {
          return T{std::max(x.level, y.level)};
        }
      },
      a.value());
}

TopologyGrade grade_meet(TopologyGrade const& a, TopologyGrade const& b) {
  require_compatible(a, b);
  return std::visit(
      [&](auto const& x) -> TopologyGrade {
        using T = std::decay_t<decltype(x)>;
        auto const& y = b.as<T>();
        if constexpr (std::is_same_v<T, VectorGrade>) {
          return VectorGrade{subspace_intersect(x.space, y.space)};
        } else if constexpr (std::is_same_v<T, QGrade>) {
          if (x.top) return y;
          if (y.top) return x;
          std::vector<std::uint64_t> primes;
          std::set_intersection(x.primes.begin(), x.primes.end(), y.primes.begin(),
                                y.primes.end(), std::back_inserter(primes));
          return QGrade{false, x.real && y.real, std::move(primes)};
        } else {
          return T{std::min(x.level, y.level)};
        }
      },
      a.value());
}

bool grade_leq(TopologyGrade const& a, TopologyGrade const& b) {
  if (a.holds<VectorGrade>() && b.holds<VectorGrade>()) {
    require_compatible(a, b);
    return a.as<VectorGrade>().space.is_subspace_of(b.as<VectorGrade>().space);
  }
  return grade_join(a, b) == b;
}

std::optional<ElementId> GradeSemilattice::index_of(TopologyGrade const& g) const {
  auto it = std::find(grades.begin(), grades.end(), g);
  if (it == grades.end()) return std::nullopt;
  return ElementId(it - grades.begin());
}

namespace {

GradeSemilattice build(Model const& m, std::vector<TopologyGrade> grades) {
  std::size_t n = grades.size();
  std::vector<ElementId> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(to_string(grades[i]));
    for (std::size_t j = 0; j < n; ++j) {
      auto joined = grade_join(grades[i], grades[j]);
      auto it = std::find(grades.begin(), grades.end(), joined);
      if (it == grades.end()) {
        throw Error(ErrorKind::invalid_argument, "grade set is not closed under join");
      }
      table[i * n + j] = ElementId(it - grades.begin());
    }
  }
  auto unit = std::find(grades.begin(), grades.end(), unit_grade(m));
  std::optional<ElementId> unit_id;
  if (unit != grades.end()) unit_id = ElementId(unit - grades.begin());
  FiniteSemilattice lattice(std::move(labels), std::move(table), unit_id);
  return GradeSemilattice{m, std::move(grades), std::move(lattice)};
}

}  // namespace

GradeSpace enumerate_grades(Model const& m) {
  switch (m.kind) {
    case ModelKind::compact: return build(m, {TwoPointGrade{TwoPointLevel::full}});
    case ModelKind::real_line:
    case ModelKind::integers:
    case ModelKind::min_wap:
    case ModelKind::p_adic:
      return build(m, {TwoPointGrade{TwoPointLevel::ap}, TwoPointGrade{TwoPointLevel::full}});
    case ModelKind::axb:
      return build(m, {AxbGrade{AxbLevel::ap}, AxbGrade{AxbLevel::realline},
                       AxbGrade{AxbLevel::full}});
    case ModelKind::real_vector:
    case ModelKind::integer_vector:
      return SymbolicGrades{m, "isomorphic to the lattice of subspaces of Q^" +
                                   std::to_string(m.dim) +
                                   " (infinite); join = sum, meet = intersection"};
    case ModelKind::rationals:
      return SymbolicGrades{m,
                            "free semilattice on R and the primes, plus the absorbing "
                            "discrete topology TOP (infinite; a proper sub-semilattice)"};
  }
  throw Error(ErrorKind::unsupported_scope, "unsupported model");
}

GradeSemilattice restrict_grades(Model const& m, std::vector<TopologyGrade> const& generators) {
  std::vector<TopologyGrade> closure{unit_grade(m)};
  std::set<TopologyGrade> seen{unit_grade(m)};
  for (auto const& g : generators) {
    require_belongs(m, g);
    if (seen.insert(g).second) closure.push_back(g);
  }
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto joined = grade_join(closure[i], closure[j]);
      if (seen.insert(joined).second) {
        closure.push_back(std::move(joined));
        if (closure.size() > kMaxClosure) {
          throw Error(ErrorKind::size_limit, "join closure exceeds " +
                                                 std::to_string(kMaxClosure) + " grades");
        }
      }
    }
  }
  // Bottom-up order: fewer elements below first, ties broken structurally.
  std::vector<std::pair<std::size_t, TopologyGrade>> keyed;
  for (auto const& g : closure) {
    std::size_t below = 0;
    for (auto const& h : closure) below += grade_leq(h, g) ? 1 : 0;
    keyed.emplace_back(below, g);
  }
  std::sort(keyed.begin(), keyed.end(), [](auto const& x, auto const& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  std::vector<TopologyGrade> ordered;
  for (auto& [below, g] : keyed) ordered.push_back(std::move(g));
  return build(m, std::move(ordered));
}

TopologyGrade nq_closure(RawTopologyDescriptor const& d) { return VectorGrade{d.space}; }

RawTopologyDescriptor nq_closure_descriptor(RawTopologyDescriptor const& d) {
  return {d.space, true};
}

bool is_quotient(RawTopologyDescriptor const& a, RawTopologyDescriptor const& b) {
  if (a.space.ambient_dim() != b.space.ambient_dim()) {
    throw Error(ErrorKind::dimension_mismatch, "descriptors on different ambient groups");
  }
  return a.space == b.space && (!a.include_ap || b.include_ap);
}

DualDescriptor dual_descriptor(TopologyGrade const& g) {
  if (!g.holds<VectorGrade>()) {
    throw Error(ErrorKind::unsupported_scope,
                "dual descriptors are modelled for vector grades only, got " + to_string(g));
  }
  return {g.as<VectorGrade>().space};
}

TopologyGrade grade_of(DualDescriptor const& d) { return VectorGrade{d.open_subgroup}; }

bool dual_join_law(TopologyGrade const& a, TopologyGrade const& b) {
  auto joined = dual_descriptor(grade_join(a, b));
  return joined.open_subgroup ==
         subspace_sum(dual_descriptor(a).open_subgroup, dual_descriptor(b).open_subgroup);
}

}  // namespace spine
