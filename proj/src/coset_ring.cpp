#include "spine/coset_ring.hpp"

#include <algorithm>
#include <variant>

#include "spine/error.hpp"

namespace spine {

namespace {

Integer floor_div(Integer const& a, Integer const& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy(IntegerVector& row, Integer const& f, IntegerVector const& other) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * other[j];
}

RationalVector to_rational(IntegerVector const& x) {
  RationalVector out;
  for (auto const& v : x) out.emplace_back(v);
  return out;
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t m, std::vector<IntegerVector> generators)
    : _rows(std::move(generators)) {
  if (m == 0) throw Error(ErrorKind::semantic, "lattice dimension must be positive");
  if (_rows.size() != m) {
    throw Error(ErrorKind::semantic, "generator matrix must be square: " +
                                         std::to_string(_rows.size()) + " rows in Z^" +
                                         std::to_string(m));
  }
  for (auto const& r : _rows) {
    if (r.size() != m) throw Error(ErrorKind::semantic, "generator matrix must be square");
  }
  for (std::size_t c = 0; c < m; ++c) {
    while (true) {
      std::size_t pick = m;
      for (std::size_t r = c; r < m; ++r) {
        if (_rows[r][c] == 0) continue;
        if (pick == m || abs(_rows[r][c]) < abs(_rows[pick][c])) pick = r;
      }
      if (pick == m) {
        throw Error(ErrorKind::unsupported_scope,
                    "generator matrix has zero determinant (infinite index subgroup)");
      }
      std::swap(_rows[c], _rows[pick]);
      bool clear = true;
      for (std::size_t r = c + 1; r < m; ++r) {
        if (_rows[r][c] == 0) continue;
        axpy(_rows[r], floor_div(_rows[r][c], _rows[c][c]), _rows[c]);
        clear = clear && _rows[r][c] == 0;
      }
      if (clear) break;
    }
    if (_rows[c][c] < 0) {
      for (auto& v : _rows[c]) v = -v;
    }
    for (std::size_t r = 0; r < c; ++r) axpy(_rows[r], floor_div(_rows[r][c], _rows[c][c]), _rows[c]);
  }
}

IntegerLattice IntegerLattice::full(std::size_t m) { return scaled(m, 1); }

IntegerLattice IntegerLattice::scaled(std::size_t m, Integer const& k) {
  std::vector<IntegerVector> rows(m, IntegerVector(m, Integer(0)));
  for (std::size_t i = 0; i < m; ++i) rows[i][i] = k;
  return IntegerLattice(m, std::move(rows));
}

Integer IntegerLattice::index() const {
  Integer d = 1;
  for (std::size_t i = 0; i < _rows.size(); ++i) d *= _rows[i][i];
  return d;
}

IntegerVector IntegerLattice::reduce(IntegerVector x) const {
  if (x.size() != dim()) throw Error(ErrorKind::dimension_mismatch, "point has the wrong dimension");
  for (std::size_t c = 0; c < dim(); ++c) axpy(x, floor_div(x[c], _rows[c][c]), _rows[c]);
  return x;
}

bool IntegerLattice::contains(IntegerVector const& x) const {
  auto r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](Integer const& v) { return v == 0; });
}

std::vector<Frequency> IntegerLattice::dual_group() const {
  if (index() > 1000000) {
    throw Error(ErrorKind::size_limit, "dual group too large to enumerate");
  }
  std::size_t m = dim();
  std::vector<Frequency> out;
  Frequency theta(m, Rational(0));
  // Back-substitution through the triangular system H θ ∈ ℤᵐ.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    Rational rest = 0;
    for (std::size_t j = i + 1; j < m; ++j) rest += Rational(_rows[i][j]) * theta[j];
    Integer h = _rows[i][i];
    for (Integer k = 0; k < h; ++k) {
      theta[i] = frac((Rational(k) - rest) / Rational(h));
      if (i == 0) {
        out.push_back(theta);
      } else {
        self(self, i - 1);
      }
    }
  };
  recurse(recurse, m - 1);
  std::sort(out.begin(), out.end(), RationalVectorLess{});
  return out;
}

Coset::Coset(IntegerVector offset_, IntegerLattice lattice_)
    : offset(lattice_.reduce(std::move(offset_))), lattice(std::move(lattice_)) {}

bool Coset::contains(IntegerVector const& x) const {
  if (x.size() != offset.size()) {
    throw Error(ErrorKind::dimension_mismatch, "point has the wrong dimension");
  }
  IntegerVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - offset[i];
  return lattice.contains(d);
}

struct CosetRingExpr::Node {
  struct Binary {
    SetOp op;
    CosetRingExpr lhs, rhs;
  };
  std::variant<Coset, Binary> value;
};

CosetRingExpr::CosetRingExpr(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

CosetRingExpr CosetRingExpr::leaf(Coset c) {
  return CosetRingExpr(std::make_shared<Node const>(Node{std::move(c)}));
}

CosetRingExpr CosetRingExpr::combine(SetOp op, CosetRingExpr lhs, CosetRingExpr rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "coset expressions in different dimensions");
  }
  return CosetRingExpr(
      std::make_shared<Node const>(Node{Node::Binary{op, std::move(lhs), std::move(rhs)}}));
}

bool CosetRingExpr::is_leaf() const { return std::holds_alternative<Coset>(_node->value); }

Coset const& CosetRingExpr::coset() const { return std::get<Coset>(_node->value); }

SetOp CosetRingExpr::op() const { return std::get<Node::Binary>(_node->value).op; }

CosetRingExpr const& CosetRingExpr::lhs() const { return std::get<Node::Binary>(_node->value).lhs; }

CosetRingExpr const& CosetRingExpr::rhs() const { return std::get<Node::Binary>(_node->value).rhs; }

std::size_t CosetRingExpr::dim() const {
  return is_leaf() ? coset().offset.size() : lhs().dim();
}

bool CosetRingExpr::contains(IntegerVector const& x) const {
  if (is_leaf()) return coset().contains(x);
  bool a = lhs().contains(x), b = rhs().contains(x);
  switch (op()) {
    case SetOp::unite: return a || b;
    case SetOp::intersect: return a && b;
    case SetOp::subtract: return a && !b;
  }
  return false;
}

bool CosetRingExpr::operator==(CosetRingExpr const& other) const {
  if (is_leaf() != other.is_leaf()) return false;
  if (is_leaf()) return coset() == other.coset();
  return op() == other.op() && lhs() == other.lhs() && rhs() == other.rhs();
}

std::string to_string(IntegerLattice const& l) {
  auto const& h = l.hnf();
  if (l.dim() == 1) return h[0][0] == 1 ? "Z" : h[0][0].get_str() + "Z";
  if (l == IntegerLattice::scaled(l.dim(), h[0][0])) {
    return (h[0][0] == 1 ? "" : h[0][0].get_str()) + "Z^" + std::to_string(l.dim());
  }
  std::string out = "lattice[";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i != 0) out += ",";
    out += "[";
    for (std::size_t j = 0; j < h[i].size(); ++j) {
      if (j != 0) out += ",";
      out += h[i][j].get_str();
    }
    out += "]";
  }
  return out + "]";
}

std::string to_string(Coset const& c) {
  bool zero = std::all_of(c.offset.begin(), c.offset.end(), [](Integer const& v) { return v == 0; });
  if (zero) return to_string(c.lattice);
  std::string t;
  if (c.offset.size() == 1) {
    t = c.offset[0].get_str();
  } else {
    t = "[";
    for (std::size_t i = 0; i < c.offset.size(); ++i) {
      if (i != 0) t += ",";
      t += c.offset[i].get_str();
    }
    t += "]";
  }
  return t + "+" + to_string(c.lattice);
}

std::string to_string(CosetRingExpr const& e) {
  if (e.is_leaf()) return to_string(e.coset());
  char const* op = e.op() == SetOp::unite ? " | " : e.op() == SetOp::intersect ? " & " : " \\ ";
  return "(" + to_string(e.lhs()) + ")" + op + "(" + to_string(e.rhs()) + ")";
}

GradedElement synthesize_idempotent(CosetRingExpr const& y) {
  Model model = Model::vector(ModelKind::integer_vector, y.dim());
  if (y.is_leaf()) {
    auto const& c = y.coset();
    auto domain = frequency_domain(model);
    TrigPolynomial p(domain);
    Rational weight(Integer(1), c.lattice.index());
    RationalVector t = to_rational(c.offset);
    for (auto const& theta : c.lattice.dual_group()) {
      p.add_term(theta, Cyclotomic::root_of_unity(-dot(theta, t)) * Cyclotomic(weight));
    }
    return GradedElement::single(model, unit_grade(model), p);
  }
  auto a = synthesize_idempotent(y.lhs());
  auto b = synthesize_idempotent(y.rhs());
  auto ab = graded_mul(a, b);
  switch (y.op()) {
    case SetOp::intersect: return ab;
    case SetOp::unite: return a + b - ab;
    case SetOp::subtract: return a - ab;
  }
  return ab;
}

std::vector<RestrictionRow> restrict_check(GradedElement const& u, Coset const& coset,
                                           std::size_t per_axis) {
  std::size_t m = coset.offset.size();
  if (frequency_domain(u.model()) != FrequencyDomain{m, true}) {
    throw Error(ErrorKind::model_mismatch, "restriction needs an element over Z^" + std::to_string(m));
  }
  if (per_axis == 0) throw Error(ErrorKind::invalid_argument, "per_axis must be positive");
  auto f = u.flatten();
  std::vector<RestrictionRow> rows;
  std::vector<std::size_t> k(m, 0);
  while (true) {
    IntegerVector x = coset.offset;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        x[j] += Integer(static_cast<unsigned long>(k[i])) * coset.lattice.hnf()[i][j];
      }
    }
    rows.push_back({x, f.evaluate(to_rational(x))});
    std::size_t i = 0;
    while (i < m && ++k[i] == per_axis) k[i++] = 0;
    if (i == m) break;
  }
  return rows;
}

}  // namespace spine
