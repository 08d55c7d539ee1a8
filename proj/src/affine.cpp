#include "spine/affine.hpp"

#include "spine/error.hpp"

namespace spine {

namespace {

std::size_t target_dim_of(Model const& m) {
  if (m.kind == ModelKind::real_line) return 1;
  if (m.kind == ModelKind::real_vector) return m.dim;
  throw Error(ErrorKind::unsupported_scope,
              "affine pullback needs an element over R or R^n, got " + to_string(m));
}

RationalSubspace as_subspace(Model const& m, TopologyGrade const& g) {
  if (g.holds<VectorGrade>()) return g.as<VectorGrade>().space;
  bool full = g.as<TwoPointGrade>().level == TwoPointLevel::full;
  (void)m;
  return full ? RationalSubspace::full(1) : RationalSubspace::zero(1);
}

TopologyGrade from_subspace(Model const& m, RationalSubspace const& l) {
  if (m.kind == ModelKind::integers) {
    return TwoPointGrade{l.is_full() ? TwoPointLevel::full : TwoPointLevel::ap};
  }
  return VectorGrade{l};
}

}  // namespace

AffineMap::AffineMap(Matrix a_, RationalVector b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::dimension_mismatch, "matrix has " + std::to_string(a.size()) +
                                                   " rows but the offset has length " +
                                                   std::to_string(b.size()));
  }
  if (a.empty()) throw Error(ErrorKind::dimension_mismatch, "affine map needs at least one row");
  m = a.front().size();
  if (m == 0) throw Error(ErrorKind::dimension_mismatch, "affine map needs at least one column");
  for (auto const& row : a) {
    if (row.size() != m) throw Error(ErrorKind::dimension_mismatch, "ragged matrix");
  }
}

RationalVector AffineMap::operator()(RationalVector const& h) const {
  if (h.size() != m) throw Error(ErrorKind::dimension_mismatch, "point has the wrong dimension");
  auto y = spine::apply(a, h);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
  return y;
}

Model pullback_model(AffineMap const& alpha, Model const& target) {
  std::size_t n = target_dim_of(target);
  if (n != alpha.target_dim()) {
    throw Error(ErrorKind::dimension_mismatch, "map lands in dimension " +
                                                   std::to_string(alpha.target_dim()) +
                                                   " but the element lives on " + to_string(target));
  }
  if (target.kind == ModelKind::real_line && alpha.source_dim() == 1) {
    return Model::of(ModelKind::integers);
  }
  return Model::vector(ModelKind::integer_vector, alpha.source_dim());
}

TopologyGrade pullback_grade(AffineMap const& alpha, Model const& target, TopologyGrade const& g) {
  Model source = pullback_model(alpha, target);
  require_belongs(target, g);
  return from_subspace(source, preimage(alpha.a, alpha.source_dim(), as_subspace(target, g)));
}

GradedElement affine_pullback(AffineMap const& alpha, GradedElement const& u) {
  Model source = pullback_model(alpha, u.model());
  auto domain = frequency_domain(source);
  auto at = transpose(alpha.a, alpha.source_dim());
  GradedElement out(source);
  for (auto const& [grade, part] : u.parts()) {
    TrigPolynomial p(domain);
    for (auto const& [theta, c] : part.terms()) {
      p.add_term(spine::apply(at, theta), c * Cyclotomic::root_of_unity(dot(theta, alpha.b)));
    }
    out.add_part(pullback_grade(alpha, u.model(), grade), p);
  }
  return out;
}

}  // namespace spine
