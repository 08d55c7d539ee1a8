#include "spine/model.hpp"

namespace spine {

std::string to_string(Model const& m) {
  switch (m.kind) {
    case ModelKind::compact: return "compact";
    case ModelKind::real_line: return "R";
    case ModelKind::integers: return "Z";
    case ModelKind::real_vector: return "R^" + std::to_string(m.dim);
    case ModelKind::integer_vector: return "Z^" + std::to_string(m.dim);
    case ModelKind::rationals: return "Q";
    case ModelKind::axb: return "axb";
    case ModelKind::min_wap: return "minWAP";
    case ModelKind::p_adic: return "Q_" + std::to_string(m.prime);
  }
  return "?";
}

bool is_abelian(Model const& m) {
  return m.kind != ModelKind::axb && m.kind != ModelKind::min_wap;
}

bool is_vector_model(Model const& m) {
  return m.kind == ModelKind::real_vector || m.kind == ModelKind::integer_vector;
}

bool has_finite_grades(Model const& m) {
  return !is_vector_model(m) && m.kind != ModelKind::rationals;
}

bool is_discrete_lattice(Model const& m) {
  return m.kind == ModelKind::integers || m.kind == ModelKind::integer_vector;
}

std::size_t representative_arity(Model const& m) {
  switch (m.kind) {
    case ModelKind::compact:
    case ModelKind::min_wap: return 0;
    case ModelKind::real_vector:
    case ModelKind::integer_vector: return m.dim;
    case ModelKind::axb: return 2;
    default: return 1;
  }
}

bool supports_graded_algebra(Model const& m) {
  switch (m.kind) {
    case ModelKind::real_line:
    case ModelKind::integers:
    case ModelKind::real_vector:
    case ModelKind::integer_vector:
    case ModelKind::rationals: return true;
    default: return false;
  }
}

}  // namespace spine
