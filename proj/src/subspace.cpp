#include "spine/subspace.hpp"

#include "spine/error.hpp"

namespace spine {

namespace {

void require_same_dim(RationalSubspace const& a, RationalSubspace const& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::dimension_mismatch,
                "subspaces of Q^" + std::to_string(a.ambient_dim()) + " and Q^" +
                    std::to_string(b.ambient_dim()));
  }
}

}  // namespace

RationalSubspace::RationalSubspace(std::size_t ambient_dim, Matrix generators)
    : _n(ambient_dim), _basis(std::move(generators)) {
  if (_n == 0) throw Error(ErrorKind::invalid_argument, "ambient dimension must be positive");
  for (auto const& row : _basis) {
    if (row.size() != _n) {
      throw Error(ErrorKind::dimension_mismatch,
                  "generator of length " + std::to_string(row.size()) + " in Q^" +
                      std::to_string(_n));
    }
  }
  rref(_basis, _n);
}

RationalSubspace RationalSubspace::zero(std::size_t ambient_dim) {
  return RationalSubspace(ambient_dim, {});
}

RationalSubspace RationalSubspace::full(std::size_t ambient_dim) {
  Matrix id(ambient_dim, RationalVector(ambient_dim, Rational(0)));
  for (std::size_t i = 0; i < ambient_dim; ++i) id[i][i] = 1;
  return RationalSubspace(ambient_dim, std::move(id));
}

bool RationalSubspace::contains(RationalVector const& v) const {
  if (v.size() != _n) throw Error(ErrorKind::dimension_mismatch, "vector length mismatch");
  Matrix m = _basis;
  m.push_back(v);
  return rank(std::move(m), _n) == _basis.size();
}

bool RationalSubspace::is_subspace_of(RationalSubspace const& other) const {
  require_same_dim(*this, other);
  for (auto const& row : _basis) {
    if (!other.contains(row)) return false;
  }
  return true;
}

RationalSubspace RationalSubspace::orthogonal_complement() const {
  return RationalSubspace(_n, kernel(_basis, _n));
}

bool operator<(RationalSubspace const& a, RationalSubspace const& b) {
  if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  RationalVectorLess less;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (less(a.basis()[i], b.basis()[i])) return true;
    if (less(b.basis()[i], a.basis()[i])) return false;
  }
  return false;
}

RationalSubspace subspace_sum(RationalSubspace const& a, RationalSubspace const& b) {
  require_same_dim(a, b);
  Matrix stacked = a.basis();
  stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
  return RationalSubspace(a.ambient_dim(), std::move(stacked));
}

RationalSubspace subspace_intersect(RationalSubspace const& a, RationalSubspace const& b) {
  require_same_dim(a, b);
  std::size_t n = a.ambient_dim();
  std::size_t ka = a.dim(), kb = b.dim();
  if (ka == 0 || kb == 0) return RationalSubspace::zero(n);
  // Solve x·A = y·B: the kernel of the n×(ka+kb) system [Aᵀ | -Bᵀ].
  Matrix system(n, RationalVector(ka + kb));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < ka; ++i) system[j][i] = a.basis()[i][j];
    for (std::size_t i = 0; i < kb; ++i) system[j][ka + i] = -b.basis()[i][j];
  }
  Matrix gens;
  for (auto const& coeffs : kernel(std::move(system), ka + kb)) {
    RationalVector v(n, Rational(0));
    for (std::size_t i = 0; i < ka; ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += coeffs[i] * a.basis()[i][j];
    }
    gens.push_back(std::move(v));
  }
  return RationalSubspace(n, std::move(gens));
}

RationalSubspace preimage(Matrix const& a, std::size_t columns, RationalSubspace const& l) {
  if (a.size() != l.ambient_dim()) {
    throw Error(ErrorKind::dimension_mismatch, "matrix rows do not match the target dimension");
  }
  for (auto const& row : a) {
    if (row.size() != columns) throw Error(ErrorKind::dimension_mismatch, "ragged matrix");
  }
  // A·x ∈ L iff every annihilator of L kills A·x.
  Matrix annihilator = kernel(l.basis(), l.ambient_dim());
  Matrix composite = multiply(annihilator, a, columns);
  return RationalSubspace(columns, kernel(std::move(composite), columns));
}

std::string to_string(RationalSubspace const& l) {
  std::string out = "span[";
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (i != 0) out += ",";
    out += to_string(l.basis()[i]);
  }
  return out + "]";
}

}  // namespace spine
