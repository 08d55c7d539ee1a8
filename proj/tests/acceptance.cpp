// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "oracle/linear.hpp"
#include "spine/affine.hpp"
#include "spine/coset_ring.hpp"
#include "spine/dsl.hpp"
#include "spine/json_io.hpp"
#include "spine/padic.hpp"
#include "support/random.hpp"

using namespace spine;
using testing::Rng;

namespace {

// Collects failures; the first few are kept for the report.
struct Check {
  std::size_t cases = 0, failures = 0;
  std::string first;

  void operator()(bool ok, std::string const& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome verdict(Check const& c, std::string const& summary) {
  if (c.failures == 0) return {true, summary + ", " + std::to_string(c.cases) + " checks"};
  return {false, std::to_string(c.failures) + "/" + std::to_string(c.cases) +
                     " checks failed, first: " + c.first};
}

TopologyGrade vgrade(std::size_t n, Matrix const& gens) { return VectorGrade{RationalSubspace(n, gens)}; }

RationalSubspace const& space(TopologyGrade const& g) { return g.as<VectorGrade>().space; }

Matrix concat(Matrix a, Matrix const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// 1. Subspace lattice of ℚ⁴.
Outcome subspace_lattice() {
  Rng rng(1001);
  Check check;
  auto zero = TopologyGrade(VectorGrade{RationalSubspace::zero(4)});
  for (int i = 0; i < 1000; ++i) {
    auto ga = testing::random_generators(rng, 4), gb = testing::random_generators(rng, 4),
         gc = testing::random_generators(rng, 4);
    auto a = vgrade(4, ga), b = vgrade(4, gb), c = vgrade(4, gc);
    auto ab = grade_join(a, b), m = grade_meet(a, b);
    std::string at = "case " + std::to_string(i);
    check(ab == grade_join(b, a), at + ": join commutativity");
    check(grade_join(ab, c) == grade_join(a, grade_join(b, c)), at + ": join associativity");
    check(grade_join(a, a) == a, at + ": join idempotency");
    check(grade_join(a, zero) == a, at + ": unit");
    check(m == grade_meet(b, a), at + ": meet commutativity");
    check(grade_meet(m, c) == grade_meet(a, grade_meet(b, c)), at + ": meet associativity");
    check(grade_meet(a, a) == a, at + ": meet idempotency");
    check(grade_join(a, m) == a && grade_meet(a, ab) == a, at + ": absorption");
    check(space(a).dim() + space(b).dim() == space(ab).dim() + space(m).dim(), at + ": modular law");
    check(oracle::same_span(space(ab).basis(), concat(ga, gb), 4), at + ": join vs oracle sum");
    check(oracle::same_span(space(m).basis(), oracle::intersection(ga, gb, 4), 4),
          at + ": meet vs oracle intersection");
  }
  return verdict(check, "1000 triples in Q^4");
}

// 2. Grade counts of the finite models.
Outcome model_cardinalities() {
  Check check;
  std::map<std::string, std::size_t> expect{{"compact", 1}, {"R", 2}, {"Z", 2}, {"minWAP", 2}, {"axb", 3}};
  for (auto const& [spec, n] : expect) {
    auto g = std::get<GradeSemilattice>(enumerate_grades(parse_model(spec)));
    check(g.grades.size() == n, spec + " has " + std::to_string(g.grades.size()) + " grades");
  }
  auto axb = std::get<GradeSemilattice>(enumerate_grades(parse_model("axb")));
  std::vector<std::string> labels;
  for (auto const& g : axb.grades) labels.push_back(to_string(g));
  check(labels == std::vector<std::string>{"ap", "realline", "full"}, "axb order");
  for (ElementId x = 0; x < 3; ++x) {
    for (ElementId y = 0; y < 3; ++y) check(leq(axb.lattice, x, y) == (x <= y), "axb chain order");
  }
  return verdict(check, "compact 1, R/Z/minWAP 2, axb chain of 3");
}

// 3. Semicharacters versus hereditary directed sets, by brute force.
Outcome duality(FiniteSemilattice const& s, std::size_t expect, Check& check, std::string const& name) {
  std::size_t n = s.size();
  std::set<std::vector<std::uint8_t>> chars, indicators;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::uint8_t> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1u;
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x) {
      for (ElementId y = 0; y < n && ok; ++y) ok = w[s.join(x, y)] == (w[x] & w[y]);
    }
    if (ok) chars.insert(w);
    // The same mask read as a subset: hereditary, directed (join-closed).
    bool hereditary = true;
    for (ElementId x = 0; x < n && hereditary; ++x) {
      for (ElementId y = 0; y < n && hereditary; ++y) {
        if (w[x] && w[y] && !w[s.join(x, y)]) hereditary = false;
        if (w[y] && leq(s, x, y) && !w[x]) hereditary = false;
      }
    }
    if (!hereditary) continue;
    ElementId top = 0;
    bool first = true;
    for (ElementId x = 0; x < n; ++x) {
      if (!w[x]) continue;
      top = first ? x : s.join(top, x);
      first = false;
    }
    bool principal = true;
    for (ElementId x = 0; x < n; ++x) principal = principal && (w[x] == leq(s, x, top));
    check(principal, name + ": hereditary set not principal");
    indicators.insert(w);
  }
  check(chars.size() == expect, name + ": " + std::to_string(chars.size()) + " semicharacters");
  check(indicators.size() == expect, name + ": " + std::to_string(indicators.size()) + " hereditary sets");
  check(chars == indicators, name + ": indicators do not biject onto semicharacters");
  // The library agrees with the brute force.
  auto lib = enumerate_hereditary_sets(s);
  check(lib.size() == indicators.size(), name + ": library hereditary count");
  std::set<std::vector<std::uint8_t>> lib_ind;
  for (auto const& h : lib) {
    lib_ind.insert(indicator(s, h));
    check(is_principal(s, h).has_value(), name + ": library says non-principal");
  }
  check(lib_ind == chars, name + ": library indicators");
  auto sc = semicharacters(s);
  check(std::set<std::vector<std::uint8_t>>(sc.begin(), sc.end()) == chars, name + ": library semicharacters");
  return {true, ""};
}

Outcome duality_enumeration() {
  Check check;
  auto axb = std::get<GradeSemilattice>(enumerate_grades(parse_model("axb")));
  duality(axb.lattice, 3, check, "axb");
  auto q = parse_model("Q");
  auto free = restrict_grades(q, {parse_grade(q, "R"), parse_grade(q, "2"), parse_grade(q, "3")});
  duality(free.lattice, 8, check, "Q{R,2,3}");
  return verdict(check, "axb 3 = 3, Q{R,2,3} 8 = 8, all principal, indicators biject");
}

// 4. Spine semigroup laws on the abelian models, and the plane oracle.
Outcome spine_semigroup() {
  Rng rng(1004);
  Check check;
  std::vector<Model> models;
  for (char const* spec : {"compact", "R", "Z", "R^2", "Z^2", "R^3", "Z^3", "Q", "minWAP", "Q_2", "Q_5", "axb"}) {
    auto m = parse_model(spec);
    if (is_abelian(m)) models.push_back(m);
  }
  for (auto const& m : models) {
    auto name = to_string(m);
    for (int i = 0; i < 1000; ++i) {
      auto s = testing::random_spine(rng, m), t = testing::random_spine(rng, m),
           u = testing::random_spine(rng, m);
      auto st = spine_mul(s, t);
      check(spine_mul(st, u) == spine_mul(s, spine_mul(t, u)), name + ": associativity");
      check(st == spine_mul(t, s), name + ": commutativity");
      check(st.grade() == grade_meet(s.grade(), t.grade()), name + ": grading law");
      auto e1 = spine_idempotent(m, s.grade()), e2 = spine_idempotent(m, t.grade());
      check(spine_mul(e1, e2) == spine_idempotent(m, grade_meet(s.grade(), t.grade())),
            name + ": idempotent law");
    }
  }
  // s = (s_L, s_ap) ∈ L × (L')^ap with L' = L^⊥; p projects onto L∩M along
  // L'+M' = (L∩M)^⊥.
  auto r2 = parse_model("R^2");
  auto d = frequency_domain(r2);
  std::size_t oracle_pairs = 0;
  for (int i = 0; i < 200; ++i) {
    auto gl = testing::random_generators(rng, 2, 4), gm = testing::random_generators(rng, 2, 4);
    auto v = rng.vector(2, -6, 6, testing::kPointDens), w = rng.vector(2, -6, 6, testing::kPointDens);
    SpineElement s(r2, vgrade(2, gl), v), t(r2, vgrade(2, gm), w);
    auto st = spine_mul(s, t);
    auto lb = space(s.grade()).basis(), mb = space(t.grade()).basis();
    auto s_l = oracle::project(lb, v), s_ap = oracle::sub(v, s_l);
    auto t_m = oracle::project(mb, w), t_ap = oracle::sub(w, t_m);
    auto k = oracle::intersection(gl, gm, 2);
    auto p = [&](RationalVector const& x) { return oracle::project(k, x); };
    auto x = oracle::add(p(s_l), p(t_m));
    auto y = oracle::add(oracle::add(oracle::sub(s_l, p(s_l)), s_ap),
                         oracle::add(oracle::sub(t_m, p(t_m)), t_ap));
    check(oracle::same_span(space(st.grade()).basis(), k, 2), "plane: product grade is not L∩M");
    check(k.empty() || oracle::in_span(k, x, 2), "plane: projected part outside L∩M");
    for (int j = 0; j < 50; ++j) {
      Frequency theta = testing::random_frequency(rng, d);
      auto chi = GradedElement::single(r2, unit_grade(r2), TrigPolynomial::character(d, theta));
      auto expect = Cyclotomic::root_of_unity(dot(theta, x) + dot(theta, y));
      auto got = char_eval(st, chi);
      check(got.is_exact() && got.exact() == expect, "plane: character value differs from oracle");
      double phase = 2 * M_PI * Rational(dot(theta, x) + dot(theta, y)).get_d();
      check(std::abs(got.numeric() - std::polar(1.0, phase)) < 1e-9, "plane: numeric cross-check");
    }
    ++oracle_pairs;
  }
  return verdict(check, std::to_string(models.size()) + " abelian models x 1000 triples, " +
                            std::to_string(oracle_pairs) + " plane pairs x 50 characters");
}

// 5. χ_s(uv) = χ_s(u)χ_s(v).
Outcome character_multiplicativity() {
  Rng rng(1005);
  Check check;
  std::size_t exact = 0, numeric = 0;
  for (char const* spec : {"R^2", "Z^2"}) {
    auto m = parse_model(spec);
    for (int i = 0; i < 500; ++i) {
      auto u = testing::random_graded(rng, m), v = testing::random_graded(rng, m);
      auto s = testing::random_spine(rng, m);
      auto lhs = char_eval(s, graded_mul(u, v)), rhs = char_eval(s, u) * char_eval(s, v);
      if (lhs.is_exact() && rhs.is_exact()) {
        ++exact;
        check(lhs.exact() == rhs.exact(), std::string(spec) + ": exact values differ");
      } else {
        ++numeric;
        check(std::abs(lhs.numeric() - rhs.numeric()) <= 1e-9, std::string(spec) + ": |delta| > 1e-9");
      }
    }
  }
  return verdict(check, "1000 instances on R^2 and Z^2 (" + std::to_string(exact) + " exact, " +
                            std::to_string(numeric) + " numeric)");
}

// 6. ℓ¹ structure.
Outcome l1_structure() {
  Rng rng(1006);
  Check check;
  for (char const* spec : {"R^2", "Z^2"}) {
    auto m = parse_model(spec);
    for (int i = 0; i < 500; ++i) {
      auto u = testing::random_graded(rng, m), v = testing::random_graded(rng, m);
      for (auto const* x : {&u, &v}) {
        Rational sum = 0;
        bool exact = true;
        for (auto const& [g, p] : x->parts()) {
          auto n = norm(p);
          exact = exact && n.exact.has_value();
          if (n.exact) sum += *n.exact;
        }
        auto n = norm(*x);
        check(exact && n.exact == sum, std::string(spec) + ": norm is not the sum of part norms");
        auto back = graded_from_json(parse_json(dump(to_json(*x))));
        check(back == *x, std::string(spec) + ": JSON round trip changed the element");
        check(norm(back).exact == sum, std::string(spec) + ": norm changed across round trip");
      }
      auto nuv = norm(graded_mul(u, v)), nu = norm(u), nv = norm(v);
      check(nuv.exact && nu.exact && nv.exact && *nuv.exact <= *nu.exact * *nv.exact,
            std::string(spec) + ": submultiplicativity");
    }
  }
  return verdict(check, "500 pairs each on R^2 and Z^2, exact rationals");
}

// 7. Idempotents of coset-ring sets.
Outcome idempotent_synthesis() {
  Check check;
  for (char const* text : {"2Z^2", "(2Z) \\ (4Z)"}) {
    auto y = parse_coset_expr(text);
    auto q = synthesize_idempotent(y);
    check(graded_mul(q, q) == q, std::string(text) + ": q*q != q");
    auto f = q.flatten();
    std::size_t m = y.dim();
    std::vector<long> k(m, -8);
    while (true) {
      IntegerVector x;
      RationalVector xr;
      for (long c : k) {
        x.emplace_back(c);
        xr.emplace_back(c);
      }
      auto v = f.evaluate(xr);
      check(v.is_exact() && v.exact() == Cyclotomic(y.contains(x) ? 1 : 0),
            std::string(text) + ": indicator mismatch at " + to_string(xr));
      std::size_t i = 0;
      while (i < m && ++k[i] > 8) k[i++] = -8;
      if (i == m) break;
    }
  }
  return verdict(check, "2Z x 2Z on [-8,8]^2 and 2Z \\ 4Z on [-8,8], exact");
}

// 8. Affine pullbacks.
Outcome affine_homomorphism() {
  Rng rng(1008);
  Check check;
  auto r2 = parse_model("R^2");
  std::size_t invertible = 0, exact = 0, numeric = 0;
  for (int i = 0; i < 200; ++i) {
    Matrix a{rng.vector(2, -3, 3, testing::kPointDens), rng.vector(2, -3, 3, testing::kPointDens)};
    AffineMap alpha(a, rng.vector(2, -3, 3, testing::kPointDens));
    auto u = testing::random_graded(rng, r2), v = testing::random_graded(rng, r2);
    auto pu = affine_pullback(alpha, u), pv = affine_pullback(alpha, v);
    auto z2 = pu.model();
    for (long h1 = -3; h1 <= 3; ++h1) {
      for (long h2 = -3; h2 <= 3; ++h2) {
        RationalVector h{Rational(h1), Rational(h2)};
        auto lhs = char_eval(SpineElement(z2, top_grade(z2), h), pu);
        auto rhs = char_eval(SpineElement(r2, top_grade(r2), alpha(h)), u);
        if (lhs.is_exact() && rhs.is_exact()) {
          ++exact;
          check(lhs.exact() == rhs.exact(), "evaluation identity (exact)");
        } else {
          ++numeric;
          check(std::abs(lhs.numeric() - rhs.numeric()) <= 1e-9, "evaluation identity (numeric)");
        }
      }
    }
    auto puv = affine_pullback(alpha, graded_mul(u, v));
    auto prod = graded_mul(pu, pv);
    check(puv.flatten() == prod.flatten(), "Psi(uv) != Psi(u)Psi(v) as functions");
    if (a[0][0] * a[1][1] != a[0][1] * a[1][0]) {
      ++invertible;
      check(puv == prod, "Psi(uv) != Psi(u)Psi(v) grade by grade for invertible A");
    }
  }
  return verdict(check, "200 maps Z^2 -> R^2 x 49 points (" + std::to_string(exact) + " exact, " +
                            std::to_string(numeric) + " numeric), products as functions, grade by grade on " +
                            std::to_string(invertible) + " invertible maps");
}

// 9. p-adic norms.
Outcome padic_model() {
  Rng rng(1009);
  Check check;
  check(abs_p(2, Rational(12)) == Rational(1, 4), "|12|_2 != 1/4");
  std::vector<long> primes{2, 3, 5, 7, 11};
  for (int i = 0; i < 1000; ++i) {
    Integer p = rng.pick(primes);
    Rational x = rng.rational(-500, 500, {1, 2, 3, 4, 5, 7, 9, 16, 25, 27});
    Rational y = rng.rational(-500, 500, {1, 2, 3, 4, 5, 7, 9, 16, 25, 27});
    check(abs_p(p, x * y) == abs_p(p, x) * abs_p(p, y), "multiplicativity");
    check(abs_p(p, x + y) <= std::max(abs_p(p, x), abs_p(p, y)), "ultrametric inequality");
  }
  auto rows = q_distinctness_witness(2, 3, 20);
  check(rows.size() == 20, "witness table length");
  Rational two_n = 1, three_n = 1;
  for (auto const& row : rows) {
    two_n *= 2;
    three_n *= 3;
    check(row.abs_at_p == 1 / two_n && row.abs_at_q == three_n, "witness row " + std::to_string(row.n));
    Rational r = two_n / three_n;
    check(abs_p(2, r) == row.abs_at_p && abs_p(3, r) == row.abs_at_q, "witness recomputation");
  }
  return verdict(check, "|12|_2 = 1/4, 1000 random pairs, witness n <= 20");
}

// 10. Dual relabeling.
Outcome dual_relabeling() {
  Rng rng(1010);
  Check check;
  for (int i = 0; i < 500; ++i) {
    auto ga = testing::random_generators(rng, 4), gb = testing::random_generators(rng, 4);
    auto j = grade_join(vgrade(4, ga), vgrade(4, gb));
    check(oracle::same_span(dual_descriptor(j).open_subgroup.basis(), concat(ga, gb), 4),
          "dual(join).L != sum");
  }
  return verdict(check, "500 pairs in Q^4");
}

// 11. Command line.
struct Result {
  int code;
  std::string out, err;
};

std::string slurp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Result shell(std::string const& command) {
  char name[] = "/tmp/spine-acceptance-XXXXXX";
  int fd = mkstemp(name);
  if (fd < 0) return {-1, "", ""};
  close(fd);
  std::string err_file = name;
  std::string full = "cd '" GOLDEN_DIR "' && " + command + " 2>'" + err_file + "'";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, "", ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  auto err = slurp(err_file);
  std::remove(err_file.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, err};
}

std::vector<std::pair<std::string, std::string>> read_table(std::string const& file) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + file);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    rows.emplace_back(line.substr(0, bar), line.substr(bar + 1));
  }
  return rows;
}

Outcome command_line() {
  Check check;
  std::string cli = std::string("'") + SPINE_CLI + "'";
  auto corpus = read_table("corpus.txt");
  check(corpus.size() == 20, "corpus has " + std::to_string(corpus.size()) + " commands");
  std::size_t round_trips = 0;
  for (auto const& [name, args] : corpus) {
    auto first = shell(cli + " " + args), second = shell(cli + " " + args);
    check(first.code == 0, name + ": exit code " + std::to_string(first.code));
    check(first.out == second.out, name + ": output differs between runs");
    check(first.out == slurp(std::string(GOLDEN_DIR) + "/expected/" + name + ".out"),
          name + ": output differs from expected/" + name + ".out");
    if (name.rfind("json_", 0) == 0) {
      auto again = shell(cli + " " + args + " | " + cli + " canonical -");
      check(again.code == 0 && again.out == first.out, name + ": JSON round trip not bit-exact");
      ++round_trips;
    }
  }
  // Library-level round trips over random documents.
  Rng rng(1011);
  for (char const* spec : {"R^2", "Z^2", "Q", "R", "Z^1"}) {
    auto m = parse_model(spec);
    for (int i = 0; i < 40; ++i) {
      auto u = testing::random_graded(rng, m);
      auto text = dump(to_json(u));
      check(dump(to_json(graded_from_json(parse_json(text)))) == text, std::string(spec) + ": round trip");
      auto s = testing::random_spine(rng, m);
      check(dump(to_json(spine_from_json(parse_json(dump(to_json(s)))))) == dump(to_json(s)),
            std::string(spec) + ": spine round trip");
      check(parse_spine(m, to_string(s)) == s, std::string(spec) + ": spine literal round trip");
    }
  }
  auto malformed = read_table("malformed.txt");
  check(malformed.size() >= 15, "malformed corpus too small");
  for (auto const& [code, args] : malformed) {
    auto r = shell(cli + " " + args);
    // The diagnostic must come from the binary, not from the shell.
    bool diagnosed = !r.err.empty() && r.err.rfind("sh:", 0) != 0;
    check(std::to_string(r.code) == code && r.out.empty() && diagnosed,
          "'" + args + "' exited " + std::to_string(r.code) + ", expected " + code);
  }
  return verdict(check, "20 golden commands twice, " + std::to_string(round_trips) + " CLI round trips, " +
                            std::to_string(malformed.size()) + " malformed inputs");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"subspace lattice", subspace_lattice},
      {"model cardinalities", model_cardinalities},
      {"duality enumeration", duality_enumeration},
      {"spine semigroup", spine_semigroup},
      {"character multiplicativity", character_multiplicativity},
      {"l1 structure", l1_structure},
      {"idempotent synthesis", idempotent_synthesis},
      {"affine homomorphism", affine_homomorphism},
      {"p-adic model", padic_model},
      {"dual relabeling", dual_relabeling},
      {"command line", command_line},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
