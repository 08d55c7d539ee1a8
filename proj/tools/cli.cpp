#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "spine/affine.hpp"
#include "spine/coset_ring.hpp"
#include "spine/dsl.hpp"
#include "spine/error.hpp"
#include "spine/hasse.hpp"
#include "spine/json_io.hpp"
#include "spine/padic.hpp"
#include "spine/semilattice.hpp"

namespace spine::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(std::string const& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::string numeric(std::complex<double> z) {
  std::ostringstream s;
  s << std::setprecision(12) << z.real() << (std::signbit(z.imag()) ? " - " : " + ")
    << std::abs(z.imag()) << "i";
  return s.str();
}

std::string valuation_text(Valuation const& v) {
  return v.exponent ? std::to_string(*v.exponent) : "inf";
}

GradeSemilattice finite_grades(Model const& m, std::vector<std::string> const& generators) {
  if (!generators.empty()) {
    std::vector<TopologyGrade> gens;
    for (auto const& g : generators) gens.push_back(parse_grade(m, g));
    return restrict_grades(m, gens);
  }
  auto space = enumerate_grades(m);
  if (auto const* finite = std::get_if<GradeSemilattice>(&space)) return *finite;
  throw Error(ErrorKind::unsupported_scope,
              to_string(m) + " has infinitely many grades; pass --generators");
}

void print_semilattice(std::ostream& out, GradeSemilattice const& g) {
  auto const& s = g.lattice;
  out << "model: " << to_string(g.model) << "\n";
  out << "elements: " << s.size() << "\n";
  auto h = hasse_diagram(s);
  bool chain = h.edges.size() + 1 == s.size();
  for (ElementId x = 0; chain && x + 1 < s.size(); ++x) chain = leq(s, x, x + 1);
  if (chain) {
    out << "order:";
    for (ElementId x = 0; x < s.size(); ++x) out << (x == 0 ? " " : " < ") << s.label(x);
    out << "\n";
  } else {
    for (ElementId x = 0; x < s.size(); ++x) out << "  " << s.label(x) << "\n";
    for (auto const& [x, y] : h.edges) out << "cover: " << s.label(x) << " < " << s.label(y) << "\n";
  }
  auto violations = verify_axioms(s);
  out << "axioms: " << (violations.empty() ? "ok" : std::to_string(violations.size()) + " violations")
      << "\n";
  if (s.size() <= kMaxEnumerationSize) {
    auto sets = enumerate_hereditary_sets(s);
    std::size_t principal = 0;
    for (auto const& hs : sets) principal += is_principal(s, hs).has_value();
    out << "hereditary sets: " << sets.size() << "\n";
    out << "semicharacters: " << semicharacters(s).size() << "\n";
    out << "principal: " << principal << "/" << sets.size() << "\n";
  }
}

Matrix parse_matrix_arg(std::string const& text) {
  auto m = parse_matrix(text);
  if (m.empty()) throw Error(ErrorKind::dimension_mismatch, "matrix needs at least one row");
  return m;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on spine semilattices, compactifications and graded algebras",
               "spine"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string spec, a, b, file, expr, matrix, offset, format = "dot", p_text, q_text, r_text;
  std::vector<std::string> generators;
  long long n_max = 0;

  auto* semilattice = app.add_subcommand("semilattice", "Enumerate and verify the grade semilattice");
  semilattice->add_option("model", spec, "Model")->required();
  semilattice->add_option("--generators", generators, "Grades generating a finite sub-semilattice");

  auto* join = app.add_subcommand("join", "Join of two grades");
  auto* meet = app.add_subcommand("meet", "Meet of two grades");
  for (auto* c : {join, meet}) {
    c->add_option("model", spec, "Model")->required();
    c->add_option("g1", a, "Grade")->required();
    c->add_option("g2", b, "Grade")->required();
  }

  auto* mul = app.add_subcommand("spine-mul", "Product of two spine elements");
  mul->add_option("model", spec, "Model")->required();
  mul->add_option("s", a, "Spine element")->required();
  mul->add_option("t", b, "Spine element")->required();

  auto* eval = app.add_subcommand("char-eval", "Evaluate the character of a spine element");
  eval->add_option("model", spec, "Model")->required();
  eval->add_option("s", a, "Spine element")->required();
  eval->add_option("u", file, "Graded element JSON file, - for stdin")->required();

  auto* idem = app.add_subcommand("idempotent", "Synthesize the idempotent of a coset-ring set");
  idem->add_option("model", spec, "Z or Z^m")->required();
  idem->add_option("--expr", expr, "Coset-ring expression")->required();

  auto* pull = app.add_subcommand("pullback", "Pull a graded element back along h -> A h + b");
  pull->add_option("--matrix", matrix, "A as [[..],..]")->required();
  pull->add_option("--offset", offset, "b as [..]")->required();
  pull->add_option("u", file, "Graded element JSON file, - for stdin")->required();

  auto* padic = app.add_subcommand("padic", "p-adic valuation and norm");
  padic->add_option("--p", p_text, "Prime")->required();
  padic->add_option("--r", r_text, "Rational")->required();

  auto* witness = app.add_subcommand("witness", "Sequence p^n/q^n separating two p-adic topologies");
  witness->add_option("--p", p_text, "Prime")->required();
  witness->add_option("--q", q_text, "Prime")->required();
  witness->add_option("--n", n_max, "Rows")->required();

  auto* dual = app.add_subcommand("dual", "Dual-group descriptor of a grade");
  dual->add_option("model", spec, "Model")->required();
  dual->add_option("g", a, "Grade")->required();

  auto* hasse = app.add_subcommand("export-hasse", "Hasse diagram as DOT or JSON");
  hasse->add_option("model", spec, "Model")->required();
  hasse->add_option("--generators", generators, "Grades generating a finite sub-semilattice");
  hasse->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* canon = app.add_subcommand("canonical", "Re-serialize a graded element JSON document");
  canon->add_option("u", file, "Graded element JSON file, - for stdin")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (semilattice->parsed()) {
      auto m = parse_model(spec);
      if (generators.empty()) {
        auto space = enumerate_grades(m);
        if (auto const* sym = std::get_if<SymbolicGrades>(&space)) {
          out << "model: " << to_string(m) << "\n" << "grades: " << sym->description << "\n";
          return 0;
        }
      }
      print_semilattice(out, finite_grades(m, generators));
    } else if (join->parsed() || meet->parsed()) {
      auto m = parse_model(spec);
      auto g1 = parse_grade(m, a), g2 = parse_grade(m, b);
      out << to_string(join->parsed() ? grade_join(g1, g2) : grade_meet(g1, g2)) << "\n";
    } else if (mul->parsed()) {
      auto m = parse_model(spec);
      out << to_string(spine_mul(parse_spine(m, a), parse_spine(m, b))) << "\n";
    } else if (eval->parsed()) {
      auto m = parse_model(spec);
      auto s = parse_spine(m, a);
      auto u = graded_from_json(parse_json(read_input(file)));
      if (!(u.model() == m)) {
        throw Error(ErrorKind::model_mismatch, "element lives on " + to_string(u.model()) +
                                                   ", spine element on " + to_string(m));
      }
      auto v = char_eval(s, u);
      out << "exact: " << (v.is_exact() ? to_string(v.exact()) : "unavailable") << "\n";
      out << "numeric: " << numeric(v.numeric()) << "\n";
    } else if (idem->parsed()) {
      auto m = parse_model(spec);
      if (m.kind != ModelKind::integers && m.kind != ModelKind::integer_vector) {
        throw Error(ErrorKind::model_mismatch, "idempotents are synthesized on Z or Z^m");
      }
      auto y = parse_coset_expr(expr);
      if (y.dim() != m.dim) {
        throw Error(ErrorKind::dimension_mismatch, "expression lives in Z^" + std::to_string(y.dim()) +
                                                       ", model is " + to_string(m));
      }
      out << dump(to_json(synthesize_idempotent(y))) << "\n";
    } else if (pull->parsed()) {
      AffineMap alpha(parse_matrix_arg(matrix), parse_vector(offset));
      auto u = graded_from_json(parse_json(read_input(file)));
      out << dump(to_json(affine_pullback(alpha, u))) << "\n";
    } else if (padic->parsed()) {
      Integer p{};
      if (p.set_str(p_text, 10) != 0) throw UsageError("--p must be an integer");
      auto w = padic_witness(p, parse_rational(r_text));
      out << "nu=" << valuation_text(w.valuation) << " abs=" << to_string(w.norm) << "\n";
    } else if (witness->parsed()) {
      Integer p{}, q{};
      if (p.set_str(p_text, 10) != 0 || q.set_str(q_text, 10) != 0) {
        throw UsageError("--p and --q must be integers");
      }
      for (auto const& row : q_distinctness_witness(p, q, n_max)) {
        Rational r(Integer(1), Integer(1));
        for (std::int64_t i = 0; i < row.n; ++i) r *= Rational(p, q);
        out << "n=" << row.n << " r=" << to_string(r) << " abs_" << p.get_str() << "="
            << to_string(row.abs_at_p) << " abs_" << q.get_str() << "=" << to_string(row.abs_at_q)
            << "\n";
      }
    } else if (dual->parsed()) {
      auto m = parse_model(spec);
      auto d = dual_descriptor(parse_grade(m, a));
      out << "open_subgroup=" << to_string(d.open_subgroup) << "\n";
    } else if (hasse->parsed()) {
      auto g = finite_grades(parse_model(spec), generators);
      auto h = hasse_diagram(g.lattice);
      out << (format == "json" ? dump(to_json(h)) + "\n" : to_dot(h));
    } else if (canon->parsed()) {
      out << dump(to_json(graded_from_json(parse_json(read_input(file))))) << "\n";
    }
  } catch (SyntaxError const& e) {
    err << "spine: " << e.what() << "\n";
    return 2;
  } catch (UsageError const& e) {
    err << "spine: " << e.what() << "\n";
    return 2;
  } catch (Error const& e) {
    err << "spine: " << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    err << "spine: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace spine::cli
