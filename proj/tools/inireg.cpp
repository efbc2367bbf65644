#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "inireg/depth_oracle.hpp"
#include "inireg/fixtures.hpp"
#include "inireg/problem.hpp"
#include "inireg/report.hpp"
#include "inireg/sequences.hpp"

namespace {

using namespace inireg;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerification = 3;
constexpr int kExitSizeGuard = 4;

struct Options {
  std::string command;
  std::string file;
  std::string fixture;
  std::string order_spec;
  std::string strategy = "auto";
  int restarts = 8;
  unsigned long long seed = 0;
  bool relaxed = false;
  bool polarize_flag = false;
  bool oracle = false;
  bool json_output = false;
  bool force = false;
};

std::string read_input(const Options& opt) {
  if (!opt.fixture.empty()) {
    const Fixture* f = find_fixture(opt.fixture);
    if (!f) {
      std::string known;
      for (const auto& fx : fixtures()) known += " " + fx.name;
      throw std::invalid_argument("unknown fixture '" + opt.fixture + "'; available:" + known);
    }
    return f->text;
  }
  if (!opt.file.empty() && opt.file != "-") {
    std::ifstream in(opt.file);
    if (!in) throw std::invalid_argument("cannot open " + opt.file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

PipelineConfig pipeline_config(const Options& opt) {
  PipelineConfig cfg;
  if (opt.strategy == "greedy")
    cfg.strategy = PipelineConfig::Strategy::Greedy;
  else if (opt.strategy == "exhaustive")
    cfg.strategy = PipelineConfig::Strategy::Exhaustive;
  else
    cfg.strategy = PipelineConfig::Strategy::Auto;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;
  cfg.relaxed_degrees = opt.relaxed;
  return cfg;
}

std::optional<MonomialIdeal> as_monomial_ideal(const PolyIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators) {
    auto term = g.as_single_term();
    if (!term) return std::nullopt;
    gens.push_back(term->monomial);
  }
  if (gens.empty()) return MonomialIdeal::zero(ideal.ring);
  return MonomialIdeal::from_generators(ideal.ring, std::move(gens));
}

json config_echo(const Options& opt, const ProblemFile& problem) {
  return json{{"order", problem.order.to_string(problem.ring)},
              {"strategy", opt.strategy},
              {"restarts", opt.restarts},
              {"seed", opt.seed},
              {"relaxed_degrees", opt.relaxed},
              {"polarize", opt.polarize_flag},
              {"force", opt.force}};
}

void print_certificate_text(const IniRegCertificate& cert, const Ring& fallback) {
  const Ring& ring = cert.base ? cert.base->ring : fallback;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    std::cout << "  " << (i + 1) << ". [" << to_string(s.provenance) << "] "
              << s.form.to_string(ring, s.order) << "  on I_" << (i + 1) << " = "
              << s.ideal.to_string() << (s.regular ? "" : "  (NOT regular)") << "\n";
  }
  for (const auto& note : cert.notes) std::cout << "  note: " << note << "\n";
}

int run_command(const Options& opt) {
  const auto started = std::chrono::steady_clock::now();
  ProblemFile problem = parse_problem(read_input(opt));
  if (!opt.order_spec.empty()) problem.order = parse_order_spec(opt.order_spec, problem.ring);

  PolyIdeal ideal = problem.ideal();
  PipelineConfig cfg = pipeline_config(opt);
  OracleOptions oracle_opt{16, opt.force};

  json out{{"schema", 1}, {"command", opt.command}, {"ring", problem.ring.variables()},
           {"config", config_echo(opt, problem)}};
  if (!opt.fixture.empty()) out["fixture"] = opt.fixture;
  int exit_code = kExitOk;

  if (opt.command == "initial") {
    MonomialIdeal ini = initial_ideal(ideal, problem.order);
    out["initial_ideal"] = ini.generator_strings();
    if (!opt.json_output) std::cout << "initial ideal: " << ini.to_string() << "\n";
  } else if (opt.command == "bound" || opt.command == "report") {
    DepthReport report;
    std::optional<MonomialIdeal> monomial = as_monomial_ideal(ideal);
    if (opt.polarize_flag) {
      // A non-monomial ideal is first replaced by its initial ideal; the
      // polarized bound then applies to R/ini(I) and hence to R/I.
      MonomialIdeal target = monomial ? *monomial : initial_ideal(ideal, problem.order);
      report = polarized_bound(target, cfg);
      if (opt.oracle || opt.command == "report") report.oracle_depth = oracle_depth(target, oracle_opt);
    } else {
      report = depth_lower_bound(ideal, problem.order, cfg);
      if (opt.oracle || opt.command == "report") {
        MonomialIdeal ini = monomial ? *monomial : initial_ideal(ideal, problem.order);
        report.oracle_depth = oracle_depth(ini, oracle_opt);
      }
    }
    if (report.oracle_depth && report.lower_bound > *report.oracle_depth) {
      std::cerr << "DEFECT: certified bound " << report.lower_bound
                << " exceeds the oracle depth " << *report.oracle_depth
                << "; this indicates a bug in the certificate verifier or the oracle\n";
      return kExitError;
    }
    out["report"] = depth_report_to_json(report, problem.ring);
    if (!opt.json_output) {
      std::cout << "bound: depth >= " << report.lower_bound << "\n";
      if (report.polarization) {
        std::cout << "  polarized bound: " << report.polarization->bound_polarized << " with "
                  << report.polarization->new_variables << " new variables\n";
      }
      if (report.oracle_depth) std::cout << "oracle depth: " << *report.oracle_depth << "\n";
      if (report.squarefree_equality)
        std::cout << "initial ideal is squarefree: the depth of R/I equals the depth of R/ini(I)\n";
      std::cout << "certificate (q = " << report.certificate.length() << ", "
                << (report.certificate.verified ? "verified" : "NOT verified") << "):\n";
      print_certificate_text(report.certificate, problem.ring);
      for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
    }
  } else if (opt.command == "verify") {
    if (problem.steps.empty())
      throw std::invalid_argument("verify needs a steps: section in the problem file");
    std::vector<VerifyStep> steps;
    for (const auto& s : problem.steps)
      steps.push_back(VerifyStep{s.form, s.order, StepProvenance::Manual});
    IniRegCertificate cert = verify_initially_regular(ideal, steps);
    out["certificate"] = certificate_to_json(cert, problem.ring);
    if (!opt.json_output) {
      std::cout << (cert.verified ? "verified" : "NOT verified") << " (q = " << cert.length()
                << ")\n";
      print_certificate_text(cert, problem.ring);
    }
    if (!cert.verified) exit_code = kExitVerification;
  } else if (opt.command == "oracle-depth") {
    std::optional<MonomialIdeal> monomial = as_monomial_ideal(ideal);
    MonomialIdeal target = monomial ? *monomial : initial_ideal(ideal, problem.order);
    if (!monomial)
      out["note"] = "input is not monomial; the oracle ran on its initial ideal";
    int depth = oracle_depth(target, oracle_opt);
    out["oracle_depth"] = depth;
    if (!opt.json_output) {
      if (!monomial) std::cout << "input is not monomial; using ini(I) = " << target.to_string() << "\n";
      std::cout << "oracle depth: " << depth << "\n";
    }
  } else if (opt.command == "polarize") {
    std::optional<MonomialIdeal> monomial = as_monomial_ideal(ideal);
    if (!monomial) throw std::invalid_argument("polarize needs a monomial ideal");
    auto [pol, map] = polarize(*monomial);
    out["polarized_ring"] = pol.ring().variables();
    out["polarized_ideal"] = pol.generator_strings();
    out["new_variables"] = map.new_variable_count;
    if (!opt.json_output) {
      std::cout << "polarized ring:";
      for (const auto& v : pol.ring().variables()) std::cout << " " << v;
      std::cout << "\npolarized ideal: " << pol.to_string() << "\n"
                << "new variables: " << map.new_variable_count << "\n";
    }
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  out["timing_ms"] =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
  if (opt.json_output) std::cout << out.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inireg: certified depth lower bounds from initially regular sequences"};
  app.get_formatter()->column_width(30);

  Options opt;
  bool list_fixtures = false;
  app.add_option("command", opt.command, "initial | bound | verify | oracle-depth | polarize | report")
      ->check(CLI::IsMember({"initial", "bound", "verify", "oracle-depth", "polarize", "report"}));
  app.add_option("file", opt.file, "problem file ('-' or omitted reads stdin)");
  app.add_option("--fixture", opt.fixture, "load a built-in example instead of a file");
  app.add_flag("--list-fixtures", list_fixtures, "list built-in examples and exit");
  app.add_option("--order", opt.order_spec, "override the term order, e.g. 'grevlex x1 > x2'");
  app.add_option("--strategy", opt.strategy, "greedy | exhaustive | auto")
      ->check(CLI::IsMember({"greedy", "exhaustive", "auto"}));
  app.add_option("--restarts", opt.restarts, "seeded greedy restarts (default 8)");
  app.add_option("--seed", opt.seed, "restart seed (default 0)");
  app.add_flag("--relaxed-degrees", opt.relaxed, "allow constant higher tail degrees");
  app.add_flag("--polarize", opt.polarize_flag, "bound through the polarization");
  app.add_flag("--oracle", opt.oracle, "also run the brute-force depth oracle");
  app.add_flag("--json", opt.json_output, "emit a JSON report");
  app.add_flag("--force", opt.force, "override the oracle size guard");

  CLI11_PARSE(app, argc, argv);

  if (list_fixtures) {
    for (const auto& f : inireg::fixtures())
      std::cout << f.name << ": " << f.description << "\n";
    return kExitOk;
  }
  if (opt.command.empty()) {
    std::cerr << app.help();
    return kExitError;
  }

  try {
    return run_command(opt);
  } catch (const inireg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const inireg::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const inireg::UnitIdealError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
