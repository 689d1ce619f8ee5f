// Command-line front end: classify / verify / simulate / construct / sweep
// over equation spec documents (JSON with rational-string values).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratde/commands.hpp"

namespace {

struct CliState {
  std::string spec_path;
  std::string out_path;
  std::string ics_csv;
  std::string constructor;
  std::string mode = "exact";
  ratde::CommandOptions opts;
  std::string threshold = "1000000";
  // sweep
  std::string param = "A";
  std::string from, to;
  long count = 9;
};

void add_common(CLI::App* cmd, CliState& st) {
  cmd->add_option("spec", st.spec_path, "equation spec file (JSON)")->required();
  cmd->add_option("--steps", st.opts.steps, "simulation horizon");
  cmd->add_option("--mode", st.mode, "arithmetic mode: exact|float");
  cmd->add_option("--precision-bits", st.opts.precision_bits, "float precision");
  cmd->add_option("--tolerance", st.opts.tolerance, "convergence tolerance");
  cmd->add_option("--window", st.opts.window, "residual window (0 = auto)");
  cmd->add_option("--seed", st.opts.seed, "seed for random initial conditions");
  cmd->add_option("--trials", st.opts.random_trials, "random orbits per check");
  cmd->add_option("--threshold", st.threshold, "unboundedness threshold (rational)");
  cmd->add_option("--ics", st.ics_csv, "comma-separated rational ICs (x_-1 ... x_-k)");
  cmd->add_option("--constructor", st.constructor,
                  "t1-periodic|t2-periodic|t4iv-periodic|t1-unbounded");
  cmd->add_option("--out", st.out_path, "write report/CSV here instead of stdout");
}

ratde::EquationSpec load_spec(CliState& st) {
  ratde::EquationSpec spec = ratde::EquationSpec::from_file(st.spec_path);
  if (!st.ics_csv.empty()) {
    std::vector<ratde::Ratio> ics;
    std::stringstream ss(st.ics_csv);
    std::string item;
    while (std::getline(ss, item, ',')) ics.push_back(ratde::Ratio::parse(item));
    spec.initial_conditions = std::move(ics);
  }
  if (!st.constructor.empty())
    spec.constructor = ratde::parse_constructor(st.constructor);
  if (st.mode == "float")
    st.opts.mode = ratde::ArithmeticMode::Float;
  else if (st.mode != "exact")
    throw ratde::ParseError("mode must be exact or float");
  st.opts.threshold = ratde::Ratio::parse(st.threshold);

  std::vector<std::string> warnings;
  spec.equation(&warnings);  // validate early, surface dropped coefficients
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return spec;
}

int emit_report(const ratde::RunReport& rep, const CliState& st) {
  std::cout << rep.to_text();
  if (!st.out_path.empty()) {
    std::ofstream out(st.out_path);
    if (!out) throw ratde::ParseError("cannot open " + st.out_path);
    out << rep.to_json() << "\n";
  }
  return rep.exit_status;
}

int run_csv_command(const CliState& st, const std::function<void(std::ostream&)>& fn) {
  if (!st.out_path.empty()) {
    std::ofstream out(st.out_path);
    if (!out) throw ratde::ParseError("cannot open " + st.out_path);
    fn(out);
  } else {
    fn(std::cout);
  }
  return ratde::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trichotomy analysis of linear fractional rational difference equations"};
  app.require_subcommand(1);

  CliState st;
  CLI::App* classify = app.add_subcommand("classify", "hypothesis checks and verdict");
  CLI::App* verify = app.add_subcommand("verify", "classify, construct, certify, simulate");
  CLI::App* simulate = app.add_subcommand("simulate", "trajectory CSV");
  CLI::App* construct = app.add_subcommand("construct", "constructed initial conditions");
  CLI::App* sweep = app.add_subcommand("sweep", "scan a parameter across the boundary");
  for (CLI::App* cmd : {classify, verify, simulate, construct, sweep}) add_common(cmd, st);
  sweep->add_option("--param", st.param, "A or alpha")->required();
  sweep->add_option("--from", st.from, "grid start (rational)")->required();
  sweep->add_option("--to", st.to, "grid end (rational)")->required();
  sweep->add_option("--count", st.count, "grid points (>= 2)");

  CLI11_PARSE(app, argc, argv);

  try {
    ratde::EquationSpec spec = load_spec(st);
    if (classify->parsed()) return emit_report(ratde::cmd_classify(spec, st.opts), st);
    if (verify->parsed()) return emit_report(ratde::cmd_verify(spec, st.opts), st);
    if (simulate->parsed())
      return run_csv_command(
          st, [&](std::ostream& os) { ratde::cmd_simulate(spec, st.opts, os); });
    if (construct->parsed()) {
      if (!spec.constructor)
        throw ratde::ParseError("construct needs --constructor or a spec constructor");
      ratde::InitialConditions ics = ratde::construct_ics(spec, *spec.constructor);
      nlohmann::json arr = ics.to_strings();
      if (!st.out_path.empty()) {
        std::ofstream out(st.out_path);
        out << arr.dump() << "\n";
      } else {
        std::cout << arr.dump() << "\n";
      }
      return ratde::kExitOk;
    }
    if (sweep->parsed()) {
      ratde::SweepParams params;
      params.param = st.param;
      params.from = ratde::Ratio::parse(st.from);
      params.to = ratde::Ratio::parse(st.to);
      params.count = st.count;
      return run_csv_command(st, [&](std::ostream& os) {
        ratde::cmd_sweep(spec, params, st.opts, os);
      });
    }
  } catch (const ratde::ZeroDenominator& e) {
    std::cerr << "error: " << e.what() << " (step " << e.step << ")\n";
    return ratde::kExitInputError;
  } catch (const ratde::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ratde::kExitInputError;
  } catch (const ratde::InvalidEquation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ratde::kExitInputError;
  } catch (const ratde::HypothesisViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ratde::kExitOutOfScope;
  } catch (const ratde::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ratde::kExitInputError;
  }
  return ratde::kExitOk;
}
