#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "weakhopf/duality.hpp"
#include "weakhopf/fixture_io.hpp"

using namespace weakhopf;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Options {
  std::string format = "text";
  std::string fixtures_dir;
};

// What a subcommand produces: informational key/value lines, a report, and the
// verdict that decides the exit code.
struct Outcome {
  std::vector<std::pair<std::string, Json>> info;
  Report report;
  bool pass = true;
};

std::string resolve(const Options& opt, const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path) || opt.fixtures_dir.empty()) return path;
  fs::path alt = fs::path(opt.fixtures_dir) / path;
  if (fs::exists(alt)) return alt.string();
  if (fs::exists(alt.string() + ".json")) return alt.string() + ".json";
  return path;
}

Json load(const Options& opt, const std::string& path) { return read_json_file(resolve(opt, path)); }

std::string info_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const Options& opt, const std::string& command, const Outcome& out, int code) {
  if (opt.format == "json") {
    Json info = Json::object();
    for (const auto& [k, v] : out.info) info[k] = v;
    Json j = {{"command", command}, {"info", info}, {"report", report_to_json(out.report)}, {"exit", code}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : out.info) std::cout << k << ": " << info_text(v) << "\n";
  for (const auto& c : out.report.checks()) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.anchor.empty()) std::cout << ": " << c.anchor;
    if (!c.pass && !c.locus.empty()) std::cout << " [" << c.locus << "]";
    std::cout << "\n";
  }
  const std::size_t failed = out.report.failures();
  std::cout << (out.report.checks().size() - failed) << " passed, " << failed << " failed\n";
}

Json ranks_of(const WeakBialgebra& b) {
  try {
    CanonicalIdempotents c = canonical_idempotents(b);
    return {{"s", rank(c.s)}, {"t", rank(c.t)}, {"z", rank(c.z)}, {"r", rank(c.r)}};
  } catch (const Error& e) {
    return std::string("unavailable (") + e.what() + ")";
  }
}

bool all_pass_except_prefix(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks())
    if (!c.pass && c.id.rfind(prefix, 0) != 0) return false;
  return true;
}

bool all_pass_with_prefix(const Report& r, const std::string& prefix) {
  bool any = false;
  for (const auto& c : r.checks())
    if (c.id.rfind(prefix, 0) == 0) {
      if (!c.pass) return false;
      any = true;
    }
  return any;
}

// ------------------------------------------------------------------ commands

Outcome cmd_check(const Options& opt, const std::string& kind, const std::string& file) {
  Json j = load(opt, file);
  Outcome out;
  out.info.push_back({"kind", kind});
  if (kind == "wba") {
    WeakBialgebra b = wba_from_json(j);
    out.info.push_back({"dim", b.dim()});
    out.info.push_back({"barbell", format_scalar(barbell(b))});
    out.report = check_weak_bialgebra(b);
  } else if (kind == "wha") {
    WeakHopf h = wha_from_json(j);
    out.info.push_back({"dim", h.dim()});
    out.info.push_back({"barbell", format_scalar(barbell(h.wba()))});
    out.report = check_weak_bialgebra(h.wba());
    out.report.append(check_weak_hopf(h));
  } else if (kind == "frobenius") {
    FrobeniusAlgebra c = frobalg_from_json(j);
    out.info.push_back({"dim", c.dim()});
    out.report.append(check_algebra(c.alg.mu(), c.alg.eta()), "algebra/");
    out.report.append(check_coalgebra(c.coalg.delta(), c.coalg.eps()), "coalgebra/");
    out.report.append(check_frobenius(c.alg, c.coalg), "frobenius/");
  } else {
    FunctorData f = functor_from_json(j);
    out.info.push_back({"objects", f.count()});
    out.report = validate_functor_data(f);
    out.info.push_back({"strong", is_strong(out.report)});
    out.pass = is_separable_frobenius(out.report);
    return out;
  }
  out.pass = out.report.all_pass();
  return out;
}

Outcome cmd_equation(const Options& opt, const std::string& file, const std::string& equation) {
  GenEnv env = env_from_json(load(opt, file));
  const auto eq = equation.find('=');
  if (eq == std::string::npos || equation.find('=', eq + 1) != std::string::npos)
    throw SyntaxError(eq == std::string::npos ? equation.size() : equation.find('=', eq + 1),
                      "an equation needs exactly one '='");
  EquationVerdict v = equation_holds(std::string_view(equation).substr(0, eq),
                                     std::string_view(equation).substr(eq + 1), env);
  Outcome out;
  out.info.push_back({"boundary", format_word(v.boundary.dom) + " -> " + format_word(v.boundary.cod)});
  std::string locus;
  if (v.difference)
    locus = "(" + std::to_string(v.difference->row) + "," + std::to_string(v.difference->col) +
            "): " + format_scalar(v.difference->lhs) + " vs " + format_scalar(v.difference->rhs);
  out.report.add("equation", equation, v.holds, locus);
  out.pass = v.holds;
  return out;
}

Outcome cmd_tannaka(const Options& opt, const std::string& file, bool antipode, bool strong, const std::string& out_path) {
  Json j = load(opt, file);
  FunctorData f = functor_from_json(j);
  TannakaResult t = tannaka(f, antipode);
  Outcome out;
  WeakBialgebra b = t.wba();
  out.info.push_back({"dim", t.dim()});
  out.info.push_back({"barbell", format_scalar(barbell(b))});
  out.info.push_back({"idempotent-ranks", ranks_of(b)});
  out.report = bialgebra_verdict(t, strong);
  if (antipode) out.report.append(hopf_verdict(t, strong));
  if (strong) out.info.push_back({"non-weak", all_pass_with_prefix(out.report, "strong/")});
  out.pass = all_pass_except_prefix(out.report, "strong/");
  if (!out_path.empty()) {
    const std::string name = "tan " + j.value("name", std::string("F"));
    write_json_file(out_path, antipode ? to_json(t.weak_hopf(), name) : to_json(b, name));
    out.info.push_back({"written", out_path});
  }
  return out;
}

Outcome cmd_mod(const Options& opt, const std::string& file) {
  ModuleFixture m = modules_from_json(load(opt, file));
  Outcome out;
  out.info.push_back({"modules", m.modules.size()});
  std::vector<ModuleQ> valid;
  for (std::size_t i = 0; i < m.modules.size(); ++i) {
    Report r = check_module(m.algebra, m.modules[i].action, m.modules[i].idem);
    out.report.append(r, "module-" + std::to_string(i) + "/");
    if (r.all_pass()) valid.emplace_back(m.algebra, m.modules[i].action, m.modules[i].idem);
  }
  if (valid.size() == m.modules.size() && !valid.empty())
    out.report.append(forgetful_frobenius_check(m.algebra, valid), "forgetful/");
  out.pass = out.report.all_pass();
  return out;
}

std::vector<ModuleQ> sample_modules(const Json& j, WeakBialgebra& h) {
  if (fixture_kind(j) == "module") {
    ModuleFixture m = modules_from_json(j);
    h = m.algebra;
    std::vector<ModuleQ> samples;
    for (const auto& spec : m.modules) samples.emplace_back(h, spec.action, spec.idem);
    return samples;
  }
  h = wba_from_json(j);
  return {regular_module(h)};
}

Outcome cmd_adjunction(const Options& opt, const std::string& file, int triangle) {
  Json j = load(opt, file);
  Outcome out;
  out.info.push_back({"triangle", triangle});
  if (triangle == 1) {
    if (fixture_kind(j) == "functor") {
      TannakaResult t = tannaka(functor_from_json(j), false);
      out.info.push_back({"source", "tan F"});
      out.report = triangle_one(t.wba(), adjunction_counit(t).modules);
    } else {
      WeakBialgebra h = WeakBialgebra::make_unchecked(Mat(1, 1), Mat(1, 1), Mat(1, 1), Mat(1, 1));
      std::vector<ModuleQ> samples = sample_modules(j, h);
      if (!check_weak_bialgebra(h).all_pass()) throw NotVerified("the algebra fixture is not a weak bialgebra");
      out.info.push_back({"samples", samples.size()});
      out.report = triangle_one(h, samples);
    }
  } else {
    if (fixture_kind(j) != "functor") throw FixtureError("triangle 2 needs a functor fixture");
    TannakaResult t = tannaka(functor_from_json(j), false);
    out.info.push_back({"dim", t.dim()});
    out.report.append(check_adjunction_counit(t, adjunction_counit(t)), "counit/");
    out.report.append(triangle_two(t).first);
  }
  out.pass = out.report.all_pass();
  return out;
}

Outcome cmd_transport(const Options& opt, const std::string& file, const std::string& frob, const std::string& out_path) {
  Json j = load(opt, file);
  FrobEndofunctor phi{frobalg_from_json(load(opt, frob))};
  Outcome out;
  out.info.push_back({"carrier", phi.carrier()});
  const std::string name = "transport " + j.value("name", std::string("B"));
  if (fixture_kind(j) == "functor") {
    FunctorData f = functor_from_json(j);
    TannakaResult t = tannaka(f, false);
    TannakaResult tp = tannaka(phi_functor(phi, f), false);
    out.info.push_back({"dim", tp.dim()});
    out.report = check_rho(phi, t, tp);
    if (!out_path.empty()) write_json_file(out_path, to_json(tp.wba(), name));
  } else {
    WeakBialgebra b = wba_from_json(j);
    if (!check_weak_bialgebra(b).all_pass()) throw NotVerified("the algebra fixture is not a weak bialgebra");
    WeakBialgebra tb = wba_transport(phi, b);
    out.info.push_back({"dim", tb.dim()});
    out.info.push_back({"barbell", format_scalar(barbell(tb))});
    out.report = check_weak_bialgebra(tb);
    if (!out_path.empty()) write_json_file(out_path, to_json(tb, name));
  }
  if (!out_path.empty()) out.info.push_back({"written", out_path});
  out.pass = out.report.all_pass();
  return out;
}

int run(const Options& opt, const std::string& command, const std::function<Outcome()>& body) {
  try {
    Outcome out = body();
    const int code = out.pass ? kPass : kFail;
    emit(opt, command, out, code);
    return code;
  } catch (const SyntaxError& e) {
    std::cerr << "error: SyntaxError at offset " << e.offset() << ": " << e.what() << "\n";
  } catch (const TypeMismatch& e) {
    std::cerr << "error: TypeMismatch: " << e.what() << "\n";
  } catch (const BoundaryMismatch& e) {
    std::cerr << "error: BoundaryMismatch: " << e.what() << "\n";
  } catch (const UnboundGenerator& e) {
    std::cerr << "error: UnboundGenerator: " << e.what() << "\n";
  } catch (const UnboundObject& e) {
    std::cerr << "error: UnboundObject: " << e.what() << "\n";
  } catch (const MissingDuals& e) {
    std::cerr << "error: MissingDuals: " << e.what() << "\n";
  } catch (const NotBraided& e) {
    std::cerr << "error: NotBraided: " << e.what() << "\n";
  } catch (const NotSeparableFrobenius& e) {
    std::cerr << "error: NotSeparableFrobenius: " << e.what() << "\n";
  } catch (const NotVerified& e) {
    std::cerr << "error: NotVerified: " << e.what() << "\n";
  } catch (const FixtureError& e) {
    std::cerr << "error: FixtureError: " << e.what() << "\n";
  } catch (const ShapeError& e) {
    std::cerr << "error: ShapeError: " << e.what() << "\n";
  } catch (const InvalidModule& e) {
    std::cerr << "error: InvalidModule: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    std::cerr << "error: FixtureError: " << e.what() << "\n";
  }
  return kInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of weak bialgebras, weak Hopf algebras and their Tannaka duals"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fixtures-dir", opt.fixtures_dir, "Directory searched for fixture files not found as given");

  std::string kind, file, equation, out_path, frob;
  bool antipode = false, strong = false;
  int triangle = 2;

  auto* check = app.add_subcommand("check", "Check the axioms of a fixture");
  check->add_option("kind", kind)->required()->check(CLI::IsMember({"wba", "wha", "functor", "frobenius", "equation"}));
  check->add_option("file", file)->required();
  check->add_option("equation", equation, "For kind equation: \"lhs = rhs\"");

  auto* eq = app.add_subcommand("equation", "Check an equation of string diagrams in an environment");
  eq->add_option("env", file)->required();
  eq->add_option("equation", equation, "\"lhs = rhs\"")->required();

  auto* tan = app.add_subcommand("tannaka", "Build tan F from a functor fixture");
  tan->add_option("file", file)->required();
  tan->add_flag("--antipode", antipode, "Build the antipode from the duals");
  tan->add_flag("--strong-checks", strong, "Also test the non-weak bialgebra axioms");
  tan->add_option("--out", out_path, "Write the constructed algebra fixture here");

  auto* mod = app.add_subcommand("mod", "Check the modules of a module fixture");
  mod->add_option("file", file)->required();

  auto* adj = app.add_subcommand("adjunction", "Check a triangle identity of the Tannaka adjunction");
  adj->add_option("file", file)->required();
  adj->add_option("--triangle", triangle)->check(CLI::IsMember({1, 2}));

  auto* tr = app.add_subcommand("transport", "Change of base along (-) ⊗ C");
  tr->add_option("file", file)->required();
  tr->add_option("--frobalg", frob, "Commutative separable Frobenius algebra C")->required();
  tr->add_option("--out", out_path, "Write the transported algebra fixture here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  if (check->parsed()) {
    if (kind == "equation") {
      if (equation.empty()) {
        std::cerr << "error: check equation needs an equation argument\n";
        return kInput;
      }
      return run(opt, "check equation", [&] { return cmd_equation(opt, file, equation); });
    }
    return run(opt, "check " + kind, [&] { return cmd_check(opt, kind, file); });
  }
  if (eq->parsed()) return run(opt, "equation", [&] { return cmd_equation(opt, file, equation); });
  if (tan->parsed()) return run(opt, "tannaka", [&] { return cmd_tannaka(opt, file, antipode, strong, out_path); });
  if (mod->parsed()) return run(opt, "mod", [&] { return cmd_mod(opt, file); });
  if (adj->parsed()) return run(opt, "adjunction", [&] { return cmd_adjunction(opt, file, triangle); });
  return run(opt, "transport", [&] { return cmd_transport(opt, file, frob, out_path); });
}
