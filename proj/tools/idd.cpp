#include "idd/classify.hpp"
#include "idd/derivations.hpp"
#include "idd/identities.hpp"
#include "idd/report.hpp"
#include "idd/sweep.hpp"
#include "idd/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace idd;

struct Config {
  std::string command;
  std::string spec;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  int window_margin = kDefaultWindowMargin;
  int n_max = 12;
  std::string scope = "all";
  int jobs = 0;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Json config_json(const Config& c) {
  Json j{{"command", c.command}, {"seed", c.seed}, {"window_margin", c.window_margin}};
  if (!c.spec.empty()) j["spec"] = c.spec;
  return j;
}

void emit(const Config& c, const Json& doc, const std::string& title) {
  const std::string text = c.format == "markdown" ? render_markdown(doc, title) : render_json(doc);
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::trunc);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + c.out);
}

AlgebraSpec require_spec(const Config& c) {
  if (c.spec.empty()) throw UsageError(c.command + " needs a spec argument");
  return AlgebraSpec::parse(c.spec);
}

int cmd_table(const Config& c) {
  const AlgebraSpec s = require_spec(c);
  emit(c, {{"config", config_json(c)}, {"report", to_json(build_table(s))}}, "Multiplication table " + s.to_string());
  return 0;
}

int cmd_classify(const Config& c) {
  const AlgebraSpec s = require_spec(c);
  const Classification cl = assess(s, c.seed);
  emit(c, {{"config", config_json(c)}, {"report", to_json(cl)}}, "Classification " + s.to_string());
  return 0;
}

int cmd_derive(const Config& c) {
  const AlgebraSpec s = require_spec(c);
  if (s.is_window()) {
    const InfiniteFamilyReport r = infinite_family_check(s, c.window_margin);
    emit(c, {{"config", config_json(c)}, {"report", to_json(r)}}, "Derivations " + s.to_string());
    return r.pass() || !r.discrepancies.empty() ? 0 : 1;
  }
  const DerivationReport r = solve_derivations(s);
  emit(c, {{"config", config_json(c)}, {"report", to_json(r)}}, "Derivations " + s.to_string());
  return 0;
}

int cmd_identities(const Config& c) {
  const AlgebraSpec s = require_spec(c);
  const StructureTable t = build_table(s);
  Json reports = Json::array();
  bool ok = true;
  auto add = [&](const IdentityReport& r) {
    reports.push_back(to_json(r));
    ok = ok && r.pass;
  };
  add(check_left_commutative(t));
  try {
    const StarTable star(s);
    add(check_generalized_associative(t, star));
    add(check_conservative(t, star));
  } catch (const PreconditionError& e) {
    for (const char* name : {"generalized-associative", "conservative"})
      reports.push_back({{"identity", name}, {"spec", s.to_string()}, {"rejected", e.what()}});
  }
  emit(c, {{"config", config_json(c)}, {"report", reports}}, "Identities " + s.to_string());
  return ok ? 0 : 1;
}

int cmd_verify(const Config& c) {
  VerifyOptions o;
  o.scope = c.scope;
  o.n_max = c.n_max;
  o.window_margin = c.window_margin;
  o.seed = c.seed;
  o.jobs = c.jobs;
  const VerifySummary s = verify_paper(o);
  emit(c, to_json(s), "Paper verification (" + c.scope + ")");
  if (!c.out.empty()) {
    for (const auto& r : s.records)
      std::cout << to_string(r.status) << "  " << r.scope << "  " << r.instance << "  " << r.detail << '\n';
    std::cout << "pass " << s.count(Status::Pass) << ", discrepancy " << s.count(Status::Discrepancy) << ", fail "
              << s.count(Status::Fail) << '\n';
  }
  return s.exit_code();
}

int cmd_sweep(const Config& c) {
  if (c.spec.empty()) throw UsageError("sweep needs a grid file argument");
  const auto grid = read_grid(c.spec);
  SweepOptions o;
  o.out_path = c.out.empty() ? c.spec + ".json" : c.out;
  o.seed = c.seed;
  o.jobs = c.jobs;
  const SweepResult r = run_sweep(grid, o);
  std::cout << grid.size() << " points, " << r.computed << " computed, " << r.resumed << " resumed -> " << o.out_path
            << '\n';
  if (c.format == "markdown") {
    std::ofstream md(o.out_path + ".md", std::ios::trunc);
    md << render_markdown(r.document, "Sweep " + c.spec);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on integro-derivation Dzhumadildaev algebras"};
  Config c;
  app.add_option("command", c.command, "table | classify | derive | identities | verify-paper | sweep")
      ->required()
      ->check(CLI::IsMember({"table", "classify", "derive", "identities", "verify-paper", "sweep"}));
  app.add_option("spec", c.spec, "algebra spec such as K0:5:1,0 or K1:inf@30:-1,-1; grid file for sweep");
  app.add_option("--format", c.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--out", c.out, "output path");
  app.add_option("--seed", c.seed, "seed for random probes");
  app.add_option("--window-margin", c.window_margin, "interior margin for infinite windows");
  app.add_option("--n-max", c.n_max, "largest n for verify-paper");
  app.add_option("--scope", c.scope, "verify-paper scope");
  app.add_option("--jobs", c.jobs, "worker threads (0: all)")->check(CLI::NonNegativeNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (c.command == "table") return cmd_table(c);
    if (c.command == "classify") return cmd_classify(c);
    if (c.command == "derive") return cmd_derive(c);
    if (c.command == "identities") return cmd_identities(c);
    if (c.command == "verify-paper") return cmd_verify(c);
    return cmd_sweep(c);
  } catch (const SpecParseError& e) {
    std::cerr << "SpecParseError: " << e.what() << '\n';
    return 2;
  } catch (const GridParseError& e) {
    std::cerr << "GridParseError: " << e.what() << '\n';
    return 2;
  } catch (const WindowTooSmall& e) {
    std::cerr << "WindowTooSmall: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "PreconditionError: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
