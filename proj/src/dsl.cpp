#include "spine/dsl.hpp"

#include <cctype>
#include <string>

#include "spine/error.hpp"
#include "spine/padic.hpp"

namespace spine {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : _text(text) {}

  [[noreturn]] void fail(std::string const& what) const { fail_at(_pos, what); }

  [[noreturn]] void fail_at(std::size_t pos, std::string const& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < _text.size(); ++i) {
      if (_text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(what, line, col);
  }

  void skip_ws() {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) ++_pos;
  }

  bool at_end() {
    skip_ws();
    return _pos >= _text.size();
  }

  char peek() {
    skip_ws();
    return _pos < _text.size() ? _text[_pos] : '\0';
  }

  std::size_t pos() const noexcept { return _pos; }
  void reset(std::size_t p) noexcept { _pos = p; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++_pos;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : ""));
    }
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (_text.substr(_pos, w.size()) != w) return false;
    std::size_t end = _pos + w.size();
    if (end < _text.size() && is_ident(_text[end])) return false;
    _pos = end;
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = _pos;
    while (_pos < _text.size() && is_ident(_text[_pos])) ++_pos;
    return std::string(_text.substr(start, _pos - start));
  }

  Integer integer() {
    skip_ws();
    std::size_t start = _pos;
    if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) ++_pos;
    std::size_t digits = _pos;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) ++_pos;
    if (_pos == digits) fail_at(start, "expected an integer");
    std::string s(_text.substr(start, _pos - start));
    if (s[0] == '+') s.erase(0, 1);
    return Integer{s};
  }

  Rational rational() {
    skip_ws();
    std::size_t start = _pos;
    if (_pos < _text.size() && _text[_pos] == '-') ++_pos;
    auto digits = [&] {
      std::size_t d = _pos;
      while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) ++_pos;
      return _pos > d;
    };
    if (!digits()) fail_at(start, "expected a rational number");
    if (_pos < _text.size() && _text[_pos] == '/') {
      ++_pos;
      if (!digits()) fail("expected a denominator");
    }
    return parse_rational(_text.substr(start, _pos - start));
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  static bool is_ident(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

RationalVector vector_of(Cursor& c) {
  c.expect('[');
  RationalVector v;
  if (c.accept(']')) return v;
  do {
    v.push_back(c.rational());
  } while (c.accept(','));
  c.expect(']');
  return v;
}

Matrix matrix_of(Cursor& c) {
  std::size_t start = c.pos();
  c.expect('[');
  Matrix m;
  if (c.accept(']')) return m;
  do {
    m.push_back(vector_of(c));
  } while (c.accept(','));
  c.expect(']');
  for (auto const& row : m) {
    if (row.size() != m.front().size()) c.fail_at(start, "matrix rows have different lengths");
  }
  return m;
}

std::vector<IntegerVector> integer_matrix_of(Cursor& c) {
  std::size_t start = c.pos();
  std::vector<IntegerVector> out;
  for (auto const& row : matrix_of(c)) {
    IntegerVector r;
    for (auto const& x : row) {
      if (!is_integer(x)) c.fail_at(start, "lattice generators must be integers");
      r.push_back(x.get_num());
    }
    out.push_back(std::move(r));
  }
  return out;
}

RationalSubspace subspace_of(Cursor& c, std::optional<std::size_t> dim) {
  std::size_t start = c.pos();
  c.expect_word("span");
  Matrix gens = matrix_of(c);
  std::size_t n = 0;
  if (!gens.empty()) {
    n = gens.front().size();
    if (dim && *dim != n) {
      throw Error(ErrorKind::dimension_mismatch, "subspace generators have length " +
                                                     std::to_string(n) + ", expected " +
                                                     std::to_string(*dim));
    }
  } else if (dim) {
    n = *dim;
  } else {
    c.fail_at(start, "span[] needs an ambient dimension");
  }
  if (n == 0) c.fail_at(start, "generators must have at least one coordinate");
  return RationalSubspace(n, std::move(gens));
}

TopologyGrade grade_of(Cursor& c, Model const& m) {
  std::size_t start = c.pos();
  if (is_vector_model(m)) {
    if (c.accept_word("ap")) return VectorGrade{RationalSubspace::zero(m.dim)};
    if (c.accept_word("full")) return VectorGrade{RationalSubspace::full(m.dim)};
    return VectorGrade{subspace_of(c, m.dim)};
  }
  if (m.kind == ModelKind::rationals) {
    if (c.accept_word("TOP")) return q_top();
    bool real = false;
    std::vector<std::uint64_t> primes;
    auto generator = [&] {
      if (c.accept_word("R")) {
        real = true;
        return;
      }
      std::size_t at = c.pos();
      Integer p = c.integer();
      if (p <= 1 || !p.fits_ulong_p() || !is_prime(p)) {
        c.fail_at(at, "expected R or a prime, got " + p.get_str());
      }
      primes.push_back(p.get_ui());
    };
    if (c.accept('{')) {
      if (!c.accept('}')) {
        do {
          generator();
        } while (c.accept(','));
        c.expect('}');
      }
    } else {
      generator();
    }
    return make_q_grade(real, std::move(primes));
  }
  std::string word = c.identifier();
  if (m.kind == ModelKind::axb) {
    if (word == "ap") return AxbGrade{AxbLevel::ap};
    if (word == "realline") return AxbGrade{AxbLevel::realline};
    if (word == "full") return AxbGrade{AxbLevel::full};
    c.fail_at(start, "expected ap, realline or full");
  }
  if (word == "full") return TwoPointGrade{TwoPointLevel::full};
  if (word == "ap" && m.kind != ModelKind::compact) return TwoPointGrade{TwoPointLevel::ap};
  c.fail_at(start, m.kind == ModelKind::compact ? "expected full" : "expected ap or full");
}

RationalVector representative_of(Cursor& c, Model const& m) {
  switch (m.kind) {
    case ModelKind::real_vector:
    case ModelKind::integer_vector: return vector_of(c);
    case ModelKind::axb: {
      c.expect('(');
      Rational a = c.rational();
      c.expect(',');
      Rational b = c.rational();
      c.expect(')');
      return {a, b};
    }
    case ModelKind::compact:
    case ModelKind::min_wap: c.expect_word("e"); return {};
    default: return {c.rational()};
  }
}

IntegerVector offset_of(Cursor& c) {
  if (c.peek() == '[') {
    std::size_t start = c.pos();
    IntegerVector t;
    for (auto const& x : vector_of(c)) {
      if (!is_integer(x)) c.fail_at(start, "coset offsets must be integers");
      t.push_back(x.get_num());
    }
    if (t.empty()) c.fail_at(start, "empty offset");
    return t;
  }
  return {c.integer()};
}

// [k] 'Z' ['^' m]  |  'lattice' matrix
IntegerLattice lattice_of(Cursor& c, std::optional<Integer> scale) {
  if (!scale && c.accept_word("lattice")) {
    auto rows = integer_matrix_of(c);
    if (rows.empty()) c.fail("lattice needs generators");
    std::size_t m = rows.front().size();
    return IntegerLattice(m, std::move(rows));
  }
  std::size_t start = c.pos();
  if (!scale && std::isdigit(static_cast<unsigned char>(c.peek()))) scale = c.integer();
  std::string word = c.identifier();
  if (word != "Z") c.fail_at(start, "expected Z, kZ or lattice[...]");
  std::size_t m = 1;
  if (c.accept('^')) {
    std::size_t at = c.pos();
    Integer e = c.integer();
    if (e < 1 || e > 64) c.fail_at(at, "exponent must be between 1 and 64");
    m = e.get_ui();
  }
  return IntegerLattice::scaled(m, scale.value_or(Integer(1)));
}

Coset coset_of(Cursor& c) {
  std::size_t start = c.pos();
  if (c.peek() == '[') {
    auto t = offset_of(c);
    c.expect('+');
    auto l = lattice_of(c, std::nullopt);
    if (l.dim() != t.size()) {
      throw Error(ErrorKind::dimension_mismatch, "offset and lattice dimensions differ");
    }
    return Coset(std::move(t), std::move(l));
  }
  char first = c.peek();
  if (first == '-' || first == '+' || std::isdigit(static_cast<unsigned char>(first))) {
    Integer k = c.integer();
    // Either an offset "t+..." or the scale of "kZ".
    if (c.accept('+')) {
      auto l = lattice_of(c, std::nullopt);
      if (l.dim() != 1) c.fail_at(start, "a scalar offset needs a lattice in Z");
      return Coset({k}, std::move(l));
    }
    auto l = lattice_of(c, k);
    IntegerVector zero(l.dim(), Integer(0));
    return Coset(std::move(zero), std::move(l));
  }
  auto l = lattice_of(c, std::nullopt);
  IntegerVector zero(l.dim(), Integer(0));
  return Coset(std::move(zero), std::move(l));
}

CosetRingExpr expr_of(Cursor& c);

CosetRingExpr primary_of(Cursor& c) {
  if (c.accept('(')) {
    auto e = expr_of(c);
    c.expect(')');
    return e;
  }
  if (c.at_end()) c.fail("expected a coset");
  return CosetRingExpr::leaf(coset_of(c));
}

CosetRingExpr expr_of(Cursor& c) {
  auto e = primary_of(c);
  while (true) {
    SetOp op;
    if (c.accept('|')) {
      op = SetOp::unite;
    } else if (c.accept('&')) {
      op = SetOp::intersect;
    } else if (c.accept('\\')) {
      op = SetOp::subtract;
    } else {
      return e;
    }
    e = CosetRingExpr::combine(op, e, primary_of(c));
  }
}

}  // namespace

Model parse_model(std::string_view text) {
  Cursor c(text);
  std::size_t start = c.pos();
  std::string word = c.identifier();
  Model m;
  auto dimension = [&](ModelKind kind) {
    std::size_t at = c.pos();
    Integer n = c.integer();
    if (n < 1) throw Error(ErrorKind::semantic, "dimension must be at least 1, got " + n.get_str());
    if (n > 64) c.fail_at(at, "dimension too large");
    return Model::vector(kind, n.get_ui());
  };
  if (word == "compact") {
    m = Model::of(ModelKind::compact);
  } else if (word == "R" || word == "Z") {
    ModelKind scalar = word == "R" ? ModelKind::real_line : ModelKind::integers;
    ModelKind vec = word == "R" ? ModelKind::real_vector : ModelKind::integer_vector;
    m = c.accept('^') ? dimension(vec) : Model::of(scalar);
  } else if (word == "Q") {
    m = Model::of(ModelKind::rationals);
  } else if (word.rfind("Q_", 0) == 0 && word.size() > 2) {
    std::string digits = word.substr(2);
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) c.fail_at(start, "expected Q_p with p a prime");
    }
    Integer p{digits};
    if (!p.fits_ulong_p() || !is_prime(p)) throw Error(ErrorKind::semantic, p.get_str() + " is not a prime");
    m = Model::padic(p.get_ui());
  } else if (word == "axb") {
    m = Model::of(ModelKind::axb);
  } else if (word == "minWAP") {
    m = Model::of(ModelKind::min_wap);
  } else {
    c.fail_at(start, word.empty() ? "expected a model" : "unknown model '" + word + "'");
  }
  c.finish();
  return m;
}

RationalVector parse_vector(std::string_view text) {
  Cursor c(text);
  auto v = vector_of(c);
  c.finish();
  return v;
}

Matrix parse_matrix(std::string_view text) {
  Cursor c(text);
  auto m = matrix_of(c);
  c.finish();
  return m;
}

RationalSubspace parse_subspace(std::string_view text, std::optional<std::size_t> dim) {
  Cursor c(text);
  auto l = subspace_of(c, dim);
  c.finish();
  return l;
}

TopologyGrade parse_grade(Model const& m, std::string_view text) {
  Cursor c(text);
  auto g = grade_of(c, m);
  c.finish();
  return g;
}

SpineElement parse_spine(Model const& m, std::string_view text) {
  Cursor c(text);
  c.expect('(');
  c.expect_word(is_vector_model(m) ? "L" : "g");
  c.expect('=');
  auto g = grade_of(c, m);
  c.expect(',');
  c.expect_word("v");
  c.expect('=');
  auto v = representative_of(c, m);
  c.expect(')');
  c.finish();
  return SpineElement(m, g, std::move(v));
}

CosetRingExpr parse_coset_expr(std::string_view text) {
  Cursor c(text);
  auto e = expr_of(c);
  c.finish();
  return e;
}

}  // namespace spine
