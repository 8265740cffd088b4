#include "gqaoa/cli.hpp"

#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqaoa/charfn.hpp"
#include "gqaoa/ensemble.hpp"
#include "gqaoa/errors.hpp"
#include "gqaoa/experiments.hpp"
#include "gqaoa/io.hpp"
#include "gqaoa/optimize.hpp"
#include "gqaoa/problems.hpp"
#include "gqaoa/simulator.hpp"

namespace gqaoa::cli {

namespace {

using nlohmann::json;

// Malformed command-line values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not a decimal number");
    }
  }
  if (out.empty()) throw UsageError(flag + " needs at least one value");
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (double v : parse_list(text, flag)) {
    if (v != static_cast<int>(v)) throw UsageError(flag + " expects integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

CharacteristicFunction ensemble_cf(const std::string& name) {
  if (name == "gaussian") return CharacteristicFunction::gaussian();
  if (name == "chisq1") return CharacteristicFunction::chi_square_1();
  throw UsageError("--ensemble must be gaussian or chisq1");
}

struct Source {
  std::string ensemble;
  std::string spectrum_path;

  void attach(CLI::App* cmd) {
    auto* e = cmd->add_option("--ensemble", ensemble, "gaussian | chisq1");
    auto* s = cmd->add_option("--spectrum", spectrum_path, "spectrum file (text or JSON)");
    e->excludes(s);
    s->excludes(e);
  }

  CharacteristicFunction cf() const {
    if (!spectrum_path.empty()) {
      return CharacteristicFunction::empirical(io::read_spectrum(spectrum_path));
    }
    if (ensemble.empty()) throw UsageError("one of --ensemble or --spectrum is required");
    return ensemble_cf(ensemble);
  }
};

std::string invocation_text(const std::vector<std::string>& args) {
  std::string s = "gqaoa";
  for (const auto& a : args) s += " " + a;
  return s;
}

json invocation_json(const std::vector<std::string>& args, std::uint64_t seed) {
  return json{{"argv", invocation_text(args)}, {"seed", seed}};
}

std::string invocation_comment(const std::vector<std::string>& args, std::uint64_t seed) {
  return "invocation: " + invocation_text(args) + "\nseed: " + std::to_string(seed);
}

AngleSchedule schedule_from(const std::string& gammas, const std::string& betas) {
  return AngleSchedule(parse_list(gammas, "--gammas"), parse_list(betas, "--betas"));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover-driven QAOA angle schedules from characteristic functions", "gqaoa"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads, 0 = auto (results are unaffected)")
      ->check(CLI::NonNegativeNumber);

  // angles
  auto* angles = app.add_subcommand("angles", "optimize a depth-p schedule for an ensemble");
  Source angles_src;
  angles_src.attach(angles);
  int angles_depth = 1;
  int angles_starts = 64;
  std::uint64_t angles_seed = 0;
  std::string angles_out;
  angles->add_option("--depth", angles_depth, "QAOA depth p")->required()->check(CLI::Range(1, kDefaultMaxDepth));
  angles->add_option("--starts", angles_starts, "random start points")->check(CLI::PositiveNumber);
  angles->add_option("--seed", angles_seed, "master seed");
  angles->add_option("--out", angles_out, "result JSON path (stdout if omitted)");

  // expectation
  auto* expect = app.add_subcommand("expectation", "evaluate E_p for a schedule");
  Source expect_src;
  expect_src.attach(expect);
  std::string expect_gammas, expect_betas;
  expect->add_option("--gammas", expect_gammas, "comma-separated gammas")->required();
  expect->add_option("--betas", expect_betas, "comma-separated betas")->required();

  // landscape
  auto* land = app.add_subcommand("landscape", "depth-1 landscape grid as CSV");
  Source land_src;
  land_src.attach(land);
  GridAxis gamma_axis = kDefaultGammaAxis;
  GridAxis beta_axis = kDefaultBetaAxis;
  std::string land_out;
  land->add_option("--gamma-min", gamma_axis.min);
  land->add_option("--gamma-max", gamma_axis.max);
  land->add_option("--gamma-steps", gamma_axis.steps);
  land->add_option("--beta-min", beta_axis.min);
  land->add_option("--beta-max", beta_axis.max);
  land->add_option("--beta-steps", beta_axis.steps);
  land->add_option("--out", land_out, "CSV path")->required();

  // converge
  auto* conv = app.add_subcommand("converge", "finite-size convergence of optimal angles");
  std::string conv_problem, conv_sizes = "8,12,16";
  int conv_depth = 1, conv_instances = 30, conv_starts = 16;
  double conv_tol = 1e-6;
  std::uint64_t conv_seed = 0;
  std::string conv_out;
  conv->add_option("--problem", conv_problem, "npp | rcm")->required();
  conv->add_option("--depth", conv_depth)->required()->check(CLI::Range(1, kDefaultMaxDepth));
  conv->add_option("--sizes", conv_sizes, "comma-separated qubit counts");
  conv->add_option("--instances", conv_instances)->check(CLI::PositiveNumber);
  conv->add_option("--starts", conv_starts, "random starts per instance")->check(CLI::PositiveNumber);
  conv->add_option("--gradient-tolerance", conv_tol)->check(CLI::PositiveNumber);
  conv->add_option("--seed", conv_seed);
  conv->add_option("--out", conv_out, "CSV path")->required();

  // simulate
  auto* sim = app.add_subcommand("simulate", "statevector expectation and sampling");
  std::string sim_spectrum, sim_gammas, sim_betas, sim_out;
  std::int64_t sim_shots = 0;
  std::uint64_t sim_seed = 0;
  sim->add_option("--spectrum", sim_spectrum)->required();
  sim->add_option("--gammas", sim_gammas)->required();
  sim->add_option("--betas", sim_betas)->required();
  sim->add_option("--shots", sim_shots, "bitstring samples to draw");
  sim->add_option("--seed", sim_seed);
  sim->add_option("--out", sim_out, "result JSON path");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "sample an instance and write its spectrum");
  std::string spec_problem, spec_out;
  int spec_n = 0;
  std::uint64_t spec_seed = 0;
  spec->add_option("--problem", spec_problem, "npp | rcm")->required();
  spec->add_option("--n", spec_n, "qubit count")->required();
  spec->add_option("--seed", spec_seed);
  spec->add_option("--out", spec_out, "spectrum path; instance goes to <out>.instance.json")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (angles->parsed()) {
      OptimizationConfig config;
      config.starts = angles_starts;
      config.seed = angles_seed;
      config.threads = threads;
      const OptimizationResult result = minimize_ep(angles_src.cf(), angles_depth, config);
      json doc = io::result_json(result);
      doc["invocation"] = invocation_json(args, angles_seed);
      if (angles_out.empty()) {
        out << doc.dump(2) << '\n';
      } else {
        io::write_atomic(angles_out, doc.dump(2) + "\n");
      }
    } else if (expect->parsed()) {
      const AngleSchedule schedule = schedule_from(expect_gammas, expect_betas);
      out << fmt(ep_full(expect_src.cf(), schedule)) << '\n';
    } else if (land->parsed()) {
      const CharacteristicFunction cf = land_src.cf();
      const LandscapeGrid grid = landscape_scan(cf, gamma_axis, beta_axis, threads);
      io::write_atomic(land_out, io::landscape_csv(grid, invocation_comment(args, 0)));
    } else if (conv->parsed()) {
      OptimizationConfig config;
      config.starts = conv_starts;
      config.seed = conv_seed;
      config.gradient_tolerance = conv_tol;
      config.threads = threads;
      const ConvergenceTable table =
          convergence_study(parse_problem_kind(conv_problem), conv_depth,
                            parse_int_list(conv_sizes, "--sizes"), conv_instances, conv_seed,
                            config);
      io::write_atomic(conv_out, io::convergence_csv(table, invocation_comment(args, conv_seed)));
    } else if (sim->parsed()) {
      if (sim_shots < 0) throw UsageError("--shots must be non-negative");
      const Spectrum spectrum = io::read_spectrum(sim_spectrum);
      const AngleSchedule schedule = schedule_from(sim_gammas, sim_betas);
      const StateVector state = prepare_qaoa(spectrum, schedule);
      const double value = expectation(state, spectrum);
      std::vector<std::uint64_t> samples;
      if (sim_shots > 0) samples = sample_bitstrings(state, sim_seed, sim_shots);
      out << fmt(value) << '\n';
      if (!sim_out.empty()) {
        json doc{{"expectation", value},
                 {"norm", state.norm_squared()},
                 {"samples", samples},
                 {"invocation", invocation_json(args, sim_seed)}};
        io::write_atomic(sim_out, doc.dump(2) + "\n");
      } else if (!samples.empty()) {
        for (std::size_t i = 0; i < samples.size(); ++i) out << (i ? " " : "") << samples[i];
        out << '\n';
      }
    } else if (spec->parsed()) {
      const ProblemKind kind = parse_problem_kind(spec_problem);
      const std::string comment = invocation_comment(args, spec_seed);
      json instance;
      std::optional<Spectrum> spectrum;
      if (kind == ProblemKind::npp) {
        const NppInstance inst = sample_npp(spec_n, spec_seed);
        spectrum = npp_spectrum(inst);
        instance = io::instance_json(inst);
      } else {
        const RcmInstance inst = sample_rcm(spec_n, spec_seed);
        spectrum = rcm_spectrum(inst);
        instance = io::instance_json(inst);
      }
      instance["invocation"] = invocation_json(args, spec_seed);
      const std::filesystem::path path(spec_out);
      if (path.extension() == ".json") {
        json doc = io::spectrum_json(*spectrum);
        doc["invocation"] = invocation_json(args, spec_seed);
        io::write_atomic(path, doc.dump() + "\n");
      } else {
        io::write_atomic(path, io::format_spectrum_text(*spectrum, comment));
      }
      io::write_atomic(path.string() + ".instance.json", instance.dump(2) + "\n");
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace gqaoa::cli
