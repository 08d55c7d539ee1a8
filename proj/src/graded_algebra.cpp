#include "spine/graded_algebra.hpp"

#include <cmath>
#include <numbers>

#include "spine/error.hpp"

namespace spine {

namespace {

void require_domain(FrequencyDomain const& a, FrequencyDomain const& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::model_mismatch, "trigonometric polynomials on different groups");
  }
}

void require_model(Model const& a, Model const& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::model_mismatch,
                "graded elements of different models: " + to_string(a) + " and " + to_string(b));
  }
}

}  // namespace

FrequencyDomain frequency_domain(Model const& m) {
  switch (m.kind) {
    case ModelKind::real_line:
    case ModelKind::rationals: return {1, false};
    case ModelKind::integers: return {1, true};
    case ModelKind::real_vector: return {m.dim, false};
    case ModelKind::integer_vector: return {m.dim, true};
    default:
      throw Error(ErrorKind::unsupported_scope,
                  "no rational character carrier for model " + to_string(m));
  }
}

NormValue NormValue::of(Cyclotomic const& c) { return {c.exact_modulus(), c.modulus()}; }

NormValue operator+(NormValue const& a, NormValue const& b) {
  NormValue r;
  if (a.exact && b.exact) r.exact = *a.exact + *b.exact;
  r.approx = a.approx + b.approx;
  return r;
}

NormValue operator*(NormValue const& a, NormValue const& b) {
  NormValue r;
  if (a.exact && b.exact) r.exact = *a.exact * *b.exact;
  r.approx = a.approx * b.approx;
  return r;
}

bool norm_leq(NormValue const& a, NormValue const& b) {
  if (a.exact && b.exact) return *a.exact <= *b.exact;
  return a.approx <= b.approx + kNumericTolerance;
}

Frequency canonical_frequency(FrequencyDomain const& d, Frequency theta) {
  if (theta.size() != d.dim) {
    throw Error(ErrorKind::dimension_mismatch,
                "frequency of length " + std::to_string(theta.size()) + ", expected " +
                    std::to_string(d.dim));
  }
  if (d.modulo_integers) {
    for (auto& x : theta) x = frac(x);
  }
  return theta;
}

TrigPolynomial::TrigPolynomial(FrequencyDomain domain) : _domain(domain) {}

TrigPolynomial TrigPolynomial::constant(FrequencyDomain domain, Cyclotomic c) {
  return character(domain, Frequency(domain.dim, Rational(0)), std::move(c));
}

TrigPolynomial TrigPolynomial::character(FrequencyDomain domain, Frequency theta, Cyclotomic c) {
  TrigPolynomial p(domain);
  p.add_term(std::move(theta), c);
  return p;
}

void TrigPolynomial::add_term(Frequency theta, Cyclotomic const& c) {
  if (c.is_zero()) return;
  theta = canonical_frequency(_domain, std::move(theta));
  auto it = _terms.find(theta);
  if (it == _terms.end()) {
    _terms.emplace(std::move(theta), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) _terms.erase(it);
}

CharacterValue TrigPolynomial::evaluate(RationalVector const& x) const {
  if (x.size() != _domain.dim) {
    throw Error(ErrorKind::dimension_mismatch, "evaluation point has the wrong dimension");
  }
  std::vector<Rational> phases;
  std::uint64_t conductor = 1;
  for (auto const& [theta, c] : _terms) {
    phases.push_back(frac(dot(theta, x)));
    conductor = lcm_conductor(conductor, phase_conductor(phases.back()));
    conductor = lcm_conductor(conductor, c.conductor());
  }
  std::size_t i = 0;
  if (conductor <= kMaxExactConductor) {
    Cyclotomic sum;
    for (auto const& [theta, c] : _terms) sum += c * Cyclotomic::root_of_unity(phases[i++]);
    return CharacterValue(std::move(sum));
  }
  std::complex<double> sum = 0;
  for (auto const& [theta, c] : _terms) {
    double angle = 2 * std::numbers::pi * phases[i++].get_d();
    sum += c.to_complex() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return CharacterValue(sum);
}

TrigPolynomial TrigPolynomial::scaled(Cyclotomic const& c) const {
  TrigPolynomial out(_domain);
  for (auto const& [theta, coeff] : _terms) out.add_term(theta, coeff * c);
  return out;
}

TrigPolynomial operator+(TrigPolynomial const& a, TrigPolynomial const& b) {
  require_domain(a._domain, b._domain);
  TrigPolynomial out = a;
  for (auto const& [theta, c] : b._terms) out.add_term(theta, c);
  return out;
}

TrigPolynomial operator-(TrigPolynomial const& a, TrigPolynomial const& b) {
  return a + b.scaled(Cyclotomic(-1));
}

TrigPolynomial trig_mul(TrigPolynomial const& a, TrigPolynomial const& b) {
  require_domain(a.domain(), b.domain());
  TrigPolynomial out(a.domain());
  for (auto const& [ta, ca] : a.terms()) {
    for (auto const& [tb, cb] : b.terms()) {
      Frequency sum(ta.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ta[i] + tb[i];
      out.add_term(std::move(sum), ca * cb);
    }
  }
  return out;
}

NormValue norm(TrigPolynomial const& p) {
  NormValue total{Rational(0), 0.0};
  for (auto const& [theta, c] : p.terms()) total = total + NormValue::of(c);
  return total;
}

GradedElement::GradedElement(Model model) : _model(model) { frequency_domain(model); }

GradedElement GradedElement::unit(Model model) {
  GradedElement u(model);
  u.add_part(unit_grade(model), TrigPolynomial::constant(frequency_domain(model), 1));
  return u;
}

GradedElement GradedElement::single(Model model, TopologyGrade grade, TrigPolynomial part) {
  GradedElement u(model);
  u.add_part(grade, part);
  return u;
}

void GradedElement::add_part(TopologyGrade const& g, TrigPolynomial const& p) {
  require_belongs(_model, g);
  require_domain(frequency_domain(_model), p.domain());
  if (p.empty()) return;
  auto it = _parts.find(g);
  if (it == _parts.end()) {
    _parts.emplace(g, p);
    return;
  }
  it->second = it->second + p;
  if (it->second.empty()) _parts.erase(it);
}

TrigPolynomial GradedElement::flatten() const {
  TrigPolynomial out(frequency_domain(_model));
  for (auto const& [g, p] : _parts) out = out + p;
  return out;
}

GradedElement operator+(GradedElement const& a, GradedElement const& b) {
  require_model(a._model, b._model);
  GradedElement out = a;
  for (auto const& [g, p] : b._parts) out.add_part(g, p);
  return out;
}

GradedElement operator-(GradedElement const& a, GradedElement const& b) {
  require_model(a._model, b._model);
  GradedElement out = a;
  for (auto const& [g, p] : b._parts) out.add_part(g, p.scaled(Cyclotomic(-1)));
  return out;
}

GradedElement graded_mul(GradedElement const& u, GradedElement const& v) {
  require_model(u.model(), v.model());
  GradedElement out(u.model());
  for (auto const& [g1, p1] : u.parts()) {
    for (auto const& [g2, p2] : v.parts()) out.add_part(grade_join(g1, g2), trig_mul(p1, p2));
  }
  return out;
}

NormValue norm(GradedElement const& u) {
  NormValue total{Rational(0), 0.0};
  for (auto const& [g, p] : u.parts()) total = total + norm(p);
  return total;
}

CharacterValue char_eval(SpineElement const& s, GradedElement const& u) {
  require_model(s.model(), u.model());
  CharacterValue total(Cyclotomic(0));
  for (auto const& [g, p] : u.parts()) {
    if (grade_leq(g, s.grade())) total = total + p.evaluate(s.representative());
  }
  return total;
}

}  // namespace spine
