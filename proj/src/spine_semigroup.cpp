#include "spine/spine_semigroup.hpp"

#include <algorithm>
#include <map>

#include "spine/error.hpp"

namespace spine {

namespace {

void require_same_model(Model const& a, Model const& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::model_mismatch,
                "elements of different models: " + to_string(a) + " and " + to_string(b));
  }
}

void normalise(Model const& m, TopologyGrade const& g, RationalVector& rep) {
  // η_ap and η at τ̃_ℝ factor through j(a,b) = log a.
  if (m.kind == ModelKind::axb && g.as<AxbGrade>().level != AxbLevel::full) rep[1] = 0;
}

}  // namespace

SpineElement::SpineElement(Model model, TopologyGrade grade, RationalVector representative)
    : _model(model), _grade(std::move(grade)), _rep(std::move(representative)) {
  require_belongs(_model, _grade);
  for (auto& c : _rep) c.canonicalize();
  if (_rep.size() != representative_arity(_model)) {
    throw Error(ErrorKind::dimension_mismatch,
                "model " + to_string(_model) + " expects " +
                    std::to_string(representative_arity(_model)) +
                    " representative coordinates, got " + std::to_string(_rep.size()));
  }
  if (is_discrete_lattice(_model)) {
    for (auto const& c : _rep) {
      if (!is_integer(c)) {
        throw Error(ErrorKind::invalid_argument,
                    "representative of " + to_string(_model) + " must be integral");
      }
    }
  }
  if (_model.kind == ModelKind::axb && _rep[0] <= 0) {
    throw Error(ErrorKind::invalid_argument, "ax+b representative needs a > 0");
  }
  normalise(_model, _grade, _rep);
}

std::string to_string(SpineElement const& s) {
  auto const& rep = s.representative();
  std::string v;
  switch (s.model().kind) {
    case ModelKind::real_vector:
    case ModelKind::integer_vector: v = to_string(rep); break;
    case ModelKind::axb: v = "(" + rep[0].get_str() + "," + rep[1].get_str() + ")"; break;
    case ModelKind::compact:
    case ModelKind::min_wap: v = "e"; break;
    default: v = rep[0].get_str(); break;
  }
  std::string key = is_vector_model(s.model()) ? "L" : "g";
  return "(" + key + "=" + to_string(s.grade()) + ", v=" + v + ")";
}

RationalVector group_identity(Model const& m) {
  RationalVector e(representative_arity(m), Rational(0));
  if (m.kind == ModelKind::axb) e[0] = 1;
  return e;
}

RationalVector group_product(Model const& m, RationalVector const& x, RationalVector const& y) {
  if (m.kind == ModelKind::axb) {
    // (a,b)(a₁,b₁) = (aa₁, ab₁ + b)
    return {x[0] * y[0], x[0] * y[1] + x[1]};
  }
  RationalVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

SpineElement spine_mul(SpineElement const& s, SpineElement const& t) {
  require_same_model(s.model(), t.model());
  return SpineElement(s.model(), grade_meet(s.grade(), t.grade()),
                      group_product(s.model(), s.representative(), t.representative()));
}

SpineElement spine_idempotent(Model const& m, TopologyGrade const& g) {
  return SpineElement(m, g, group_identity(m));
}

SpineElement pushforward(SpineElement const& s, TopologyGrade const& lower) {
  if (!grade_leq(lower, s.grade())) {
    throw Error(ErrorKind::invalid_argument,
                to_string(lower) + " is not below " + to_string(s.grade()));
  }
  return SpineElement(s.model(), lower, s.representative());
}

std::vector<TupleViolation> validate_tuple(GradeSemilattice const& context,
                                           CompatibleTuple const& t) {
  require_same_model(context.model, t.model);
  std::vector<ElementId> ids;
  for (auto const& c : t.components) {
    require_same_model(t.model, c.model());
    auto id = context.index_of(c.grade());
    if (!id) {
      throw Error(ErrorKind::unknown_element,
                  "grade " + to_string(c.grade()) + " is not in the grade semilattice");
    }
    ids.push_back(*id);
  }
  auto sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::invalid_argument, "tuple has two components at one grade");
  }
  make_hereditary_set(context.lattice, sorted);

  std::vector<TupleViolation> out;
  for (std::size_t hi = 0; hi < t.components.size(); ++hi) {
    for (std::size_t lo = 0; lo < t.components.size(); ++lo) {
      if (lo == hi || !leq(context.lattice, ids[lo], ids[hi])) continue;
      auto const& upper = t.components[hi];
      auto const& lower = t.components[lo];
      if (!(pushforward(upper, lower.grade()) == lower)) {
        out.push_back({lower.grade(), upper.grade()});
      }
    }
  }
  return out;
}

CompatibleTuple principal_tuple(GradeSemilattice const& context, SpineElement const& s) {
  require_same_model(context.model, s.model());
  auto top = context.index_of(s.grade());
  if (!top) {
    throw Error(ErrorKind::unknown_element, "grade is not in the grade semilattice");
  }
  CompatibleTuple t{s.model(), {}};
  for (auto id : principal_set(context.lattice, *top).members) {
    t.components.push_back(pushforward(s, context.grades[id]));
  }
  return t;
}

std::vector<TopologyGrade> CliffordDecomposition::occupied_grades() const {
  std::vector<TopologyGrade> out;
  for (auto const& c : cells) out.push_back(c.grade);
  return out;
}

CliffordDecomposition clifford_decompose(std::vector<SpineElement> const& elements) {
  if (elements.empty()) {
    throw Error(ErrorKind::invalid_argument, "nothing to decompose");
  }
  Model m = elements.front().model();
  std::map<TopologyGrade, std::vector<SpineElement>> by_grade;
  for (auto const& s : elements) {
    require_same_model(m, s.model());
    auto& cell = by_grade[s.grade()];
    if (std::find(cell.begin(), cell.end(), s) == cell.end()) cell.push_back(s);
  }
  CliffordDecomposition d{m, {}};
  for (auto& [grade, members] : by_grade) {
    d.cells.push_back({grade, std::move(members), spine_idempotent(m, grade)});
  }
  return d;
}

CliffordDecomposition close_under_products(CliffordDecomposition const& d) {
  std::vector<SpineElement> all;
  for (auto const& c : d.cells) all.insert(all.end(), c.members.begin(), c.members.end());
  auto current = clifford_decompose(all);
  while (!occupied_grades_meet_closed(current)) {
    std::size_t n = current.cells.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        all.push_back(spine_mul(current.cells[i].members.front(),
                                current.cells[j].members.front()));
      }
    }
    current = clifford_decompose(all);
  }
  return current;
}

bool occupied_grades_meet_closed(CliffordDecomposition const& d) {
  auto grades = d.occupied_grades();
  for (auto const& a : grades) {
    for (auto const& b : grades) {
      if (std::find(grades.begin(), grades.end(), grade_meet(a, b)) == grades.end()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace spine
