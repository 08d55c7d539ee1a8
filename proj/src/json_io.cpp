#include "spine/json_io.hpp"

#include <algorithm>

#include "spine/dsl.hpp"
#include "spine/error.hpp"
#include "spine/padic.hpp"

namespace spine {

namespace {

[[noreturn]] void schema(std::string const& what) {
  throw Error(ErrorKind::semantic, "malformed JSON document: " + what);
}

Json const& field(Json const& j, char const* key) {
  if (!j.is_object()) schema(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

std::string const& string_of(Json const& j, char const* what) {
  if (!j.is_string()) schema(std::string(what) + " must be a string");
  return j.get_ref<std::string const&>();
}

Rational rational_from_json(Json const& j) {
  auto const& s = string_of(j, "rational");
  try {
    return parse_rational(s);
  } catch (Error const&) {
    schema("'" + s + "' is not a rational");
  }
}

}  // namespace

Json to_json(RationalVector const& v) {
  Json out = Json::array();
  for (auto const& x : v) out.push_back(to_string(x));
  return out;
}

RationalVector vector_from_json(Json const& j) {
  if (!j.is_array()) schema("expected an array of rationals");
  RationalVector v;
  for (auto const& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(RationalSubspace const& l) {
  Json out = Json::array();
  for (auto const& row : l.basis()) out.push_back(to_json(row));
  return out;
}

RationalSubspace subspace_from_json(Json const& j, std::size_t dim) {
  if (!j.is_array()) schema("subspace must be an array of rows");
  Matrix rows;
  for (auto const& r : j) {
    rows.push_back(vector_from_json(r));
    if (rows.back().size() != dim) schema("subspace row has the wrong length");
  }
  return RationalSubspace(dim, std::move(rows));
}

Json to_json(TopologyGrade const& g) {
  if (g.holds<VectorGrade>()) {
    auto const& l = g.as<VectorGrade>().space;
    return {{"kind", "subspace"}, {"dim", l.ambient_dim()}, {"basis", to_json(l)}};
  }
  if (g.holds<QGrade>()) {
    auto const& q = g.as<QGrade>();
    Json gens = Json::array();
    if (q.real) gens.push_back("R");
    for (auto p : q.primes) gens.push_back(std::to_string(p));
    return {{"kind", "q"}, {"top", q.top}, {"generators", gens}};
  }
  if (g.holds<AxbGrade>()) return {{"kind", "axb"}, {"level", to_string(g)}};
  return {{"kind", "two_point"}, {"level", to_string(g)}};
}

TopologyGrade grade_from_json(Model const& m, Json const& j) {
  auto const& kind = string_of(field(j, "kind"), "kind");
  std::optional<TopologyGrade> g;
  if (kind == "subspace") {
    auto const& d = field(j, "dim");
    if (!d.is_number_unsigned()) schema("dim must be a non-negative integer");
    g = VectorGrade{subspace_from_json(field(j, "basis"), d.get<std::size_t>())};
  } else if (kind == "q") {
    auto const& top = field(j, "top");
    if (!top.is_boolean()) schema("top must be a boolean");
    auto const& gens = field(j, "generators");
    if (!gens.is_array()) schema("generators must be an array");
    if (top.get<bool>()) {
      if (!gens.empty()) schema("TOP carries no generators");
      g = q_top();
    } else {
      bool real = false;
      std::vector<std::uint64_t> primes;
      for (auto const& x : gens) {
        auto const& s = string_of(x, "generator");
        if (s == "R") {
          real = true;
          continue;
        }
        Integer p;
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
            p.set_str(s, 10) != 0 || !p.fits_ulong_p() || !is_prime(p)) {
          schema("generator '" + s + "' is neither R nor a prime");
        }
        primes.push_back(p.get_ui());
      }
      g = make_q_grade(real, std::move(primes));
    }
  } else if (kind == "axb" || kind == "two_point") {
    if ((kind == "axb") != (m.kind == ModelKind::axb)) schema("grade kind does not fit the model");
    try {
      g = parse_grade(m, string_of(field(j, "level"), "level"));
    } catch (SyntaxError const& e) {
      schema(e.what());
    }
  } else {
    schema("unknown grade kind '" + kind + "'");
  }
  require_belongs(m, *g);
  return *g;
}

Json to_json(Cyclotomic const& c) {
  if (c.is_gaussian()) return {{"re", to_string(c.real_part())}, {"im", to_string(c.imag_part())}};
  return {{"conductor", c.conductor()}, {"coords", to_json(c.coordinates())}};
}

Cyclotomic cyclotomic_from_json(Json const& j) {
  if (!j.is_object()) schema("coefficient must be an object");
  if (j.contains("conductor")) {
    auto const& n = field(j, "conductor");
    if (!n.is_number_unsigned()) schema("conductor must be a positive integer");
    try {
      return Cyclotomic::from_coordinates(n.get<std::uint64_t>(), vector_from_json(field(j, "coords")));
    } catch (Error const& e) {
      schema(e.what());
    }
  }
  return Cyclotomic::gaussian(rational_from_json(field(j, "re")), rational_from_json(field(j, "im")));
}

Json to_json(SpineElement const& s) {
  return {{"model", to_string(s.model())},
          {"grade", to_json(s.grade())},
          {"representative", to_json(s.representative())}};
}

SpineElement spine_from_json(Json const& j) {
  Model m;
  try {
    m = parse_model(string_of(field(j, "model"), "model"));
  } catch (SyntaxError const& e) {
    schema(e.what());
  }
  return SpineElement(m, grade_from_json(m, field(j, "grade")),
                      vector_from_json(field(j, "representative")));
}

Json to_json(GradedElement const& u) {
  std::vector<std::pair<std::string, Json>> parts;
  for (auto const& [grade, poly] : u.parts()) {
    Json terms = Json::array();
    for (auto const& [theta, c] : poly.terms()) {
      terms.push_back({{"freq", to_json(theta)}, {"coeff", to_json(c)}});
    }
    Json g = to_json(grade);
    parts.emplace_back(g.dump(), Json{{"grade", g}, {"terms", terms}});
  }
  std::sort(parts.begin(), parts.end(),
            [](auto const& a, auto const& b) { return a.first < b.first; });
  Json out = {{"model", to_string(u.model())}, {"parts", Json::array()}};
  for (auto& p : parts) out["parts"].push_back(std::move(p.second));
  return out;
}

GradedElement graded_from_json(Json const& j) {
  Model m;
  try {
    m = parse_model(string_of(field(j, "model"), "model"));
  } catch (SyntaxError const& e) {
    schema(e.what());
  }
  auto domain = frequency_domain(m);
  auto const& parts = field(j, "parts");
  if (!parts.is_array()) schema("parts must be an array");
  GradedElement u(m);
  for (auto const& part : parts) {
    auto g = grade_from_json(m, field(part, "grade"));
    auto const& terms = field(part, "terms");
    if (!terms.is_array()) schema("terms must be an array");
    TrigPolynomial p(domain);
    for (auto const& t : terms) {
      auto theta = vector_from_json(field(t, "freq"));
      if (theta.size() != domain.dim) schema("frequency has the wrong length");
      p.add_term(std::move(theta), cyclotomic_from_json(field(t, "coeff")));
    }
    u.add_part(g, p);
  }
  return u;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (Json::parse_error const& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError("invalid JSON", line, col);
  }
}

std::string dump(Json const& j) { return j.dump(2); }

}  // namespace spine
