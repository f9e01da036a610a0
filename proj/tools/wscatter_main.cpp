#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wscatter/oracles.hpp"
#include "wscatter/report.hpp"
#include "wscatter/resonance.hpp"
#include "wscatter/scattering.hpp"
#include "wscatter/validate.hpp"

namespace {

using namespace wscatter;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitValidation = 3;

struct CommonFlags {
  std::string potential;
  double v0 = 1.0;
  double epsilon = 0.5;
  double width = 1.0;
  double v_minus = 0.0;
  double v_plus = 0.0;
  std::string file;
  double h = 0.01;
  double plateau_tol = 1e-8;
  int window = 50;
  double x_max = 5.0;
  std::string format = "csv";
  std::string output;
  int jobs = 0;  // 0 = machine parallelism
};

void add_potential_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--potential", f.potential, "potential family")
      ->required()
      ->check(CLI::IsMember({"free", "gaussian-barrier", "gaussian-well",
                             "sech2-well", "square-barrier", "step",
                             "tabulated"}));
  cmd->add_option("--v0", f.v0, "dimensionless height/depth");
  cmd->add_option("--width", f.width, "square-barrier width");
  cmd->add_option("--v-minus", f.v_minus, "left asymptotic level");
  cmd->add_option("--v-plus", f.v_plus, "right asymptotic level");
  cmd->add_option("--file", f.file, "tabulated potential file");
}

void add_numeric_flags(CLI::App* cmd, CommonFlags& f) {
  // free the short -h so the step-size flag --h stays available
  cmd->set_help_flag("--help", "print this help message and exit");
  cmd->add_option("--h", f.h, "integration step size");
  cmd->add_option("--plateau-tol", f.plateau_tol, "plateau tolerance");
  cmd->add_option("--window", f.window, "plateau window (nodes)");
  cmd->add_option("--x-max", f.x_max, "initial half-range");
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", f.output, "output path (default stdout)");
}

PotentialModel model_from_flags(const CommonFlags& f) {
  if (f.potential == "free") return PotentialModel::free();
  if (f.potential == "gaussian-barrier") return PotentialModel::gaussian_barrier(f.v0);
  if (f.potential == "gaussian-well") return PotentialModel::gaussian_well(f.v0);
  if (f.potential == "sech2-well") return PotentialModel::sech2_well(f.v0);
  if (f.potential == "square-barrier") return PotentialModel::square_barrier(f.v0, f.width);
  if (f.potential == "step") return PotentialModel::step(f.v_minus, f.v_plus);
  // tabulated
  std::ifstream in(f.file);
  if (!in) throw Error("cannot open potential file: " + f.file);
  return PotentialModel::tabulated(load_tabulated(in));
}

IntegrationConfig integration_config(const CommonFlags& f) {
  IntegrationConfig cfg;
  cfg.h = f.h;
  cfg.initial_half_range = f.x_max;
  cfg.hard_x_limit = std::max(20.0, f.x_max);
  cfg.max_steps_per_side =
      static_cast<int>(std::llround(cfg.hard_x_limit / cfg.h));
  return cfg;
}

PlateauConfig plateau_config(const CommonFlags& f) {
  return PlateauConfig{f.plateau_tol, f.window};
}

int resolve_jobs(const CommonFlags& f) {
  if (f.jobs > 0) return f.jobs;
  if (const char* env = std::getenv("WRONSKIAN_SCATTER_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 0;  // let the runtime decide
}

void write_out(const CommonFlags& f, const std::string& text) {
  if (f.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.output, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + f.output);
  out << text;
}

std::map<std::string, std::string> echo_flags(const CommonFlags& f,
                                              const std::string& command) {
  std::map<std::string, std::string> meta;
  meta["command"] = command;
  meta["potential"] = f.potential;
  meta["v0"] = format_double(f.v0);
  meta["epsilon"] = format_double(f.epsilon);
  meta["width"] = format_double(f.width);
  meta["v_minus"] = format_double(f.v_minus);
  meta["v_plus"] = format_double(f.v_plus);
  if (!f.file.empty()) meta["file"] = f.file;
  meta["h"] = format_double(f.h);
  meta["plateau_tol"] = format_double(f.plateau_tol);
  meta["window"] = std::to_string(f.window);
  meta["x_max"] = format_double(f.x_max);
  return meta;
}

std::string status_of(const Error& e) {
  if (dynamic_cast<const EvanescentChannel*>(&e)) return "evanescent";
  if (dynamic_cast<const NoPlateau*>(&e)) return "no_plateau";
  if (dynamic_cast<const DeterminantDrift*>(&e)) return "no_plateau";
  if (dynamic_cast<const NumericalOverflow*>(&e)) return "overflow";
  return "";
}

int cmd_transmit(const CommonFlags& f) {
  const PotentialModel model = model_from_flags(f);
  std::vector<OutputRecord> records;
  int exit_code = kExitOk;
  try {
    records.push_back(
        make_record(f.epsilon, scatter(model, f.epsilon, integration_config(f),
                                       plateau_config(f))));
  } catch (const Error& e) {
    const std::string status = status_of(e);
    if (status.empty()) throw;
    std::cerr << "error: " << e.what() << "\n";
    records.push_back(OutputRecord{f.epsilon, std::nullopt, status});
    exit_code = kExitDomain;
  }
  if (f.format == "json")
    write_out(f, to_json(echo_flags(f, "transmit"), records));
  else
    write_out(f, to_csv(records));
  return exit_code;
}

int cmd_scan(const CommonFlags& f, const std::string& axis, double lo,
             double hi, int steps) {
  const int jobs = resolve_jobs(f);
  const IntegrationConfig cfg = integration_config(f);
  const PlateauConfig pcfg = plateau_config(f);
  ScanResult scan_result;
  if (axis == "epsilon") {
    scan_result = scan_epsilon(model_from_flags(f), lo, hi, steps, cfg, pcfg,
                               jobs == 0 ? -1 : jobs);
  } else {
    CommonFlags g = f;
    const ModelFactory factory = [g](double v0) {
      CommonFlags h = g;
      h.v0 = v0;
      return model_from_flags(h);
    };
    scan_result = scan_v0(factory, f.epsilon, lo, hi, steps, cfg, pcfg,
                          jobs == 0 ? -1 : jobs);
  }
  std::vector<OutputRecord> records;
  records.reserve(scan_result.points.size());
  for (const auto& p : scan_result.points) records.push_back(make_record(p));

  auto meta = echo_flags(f, "scan");
  meta["axis"] = axis;
  meta["min"] = format_double(lo);
  meta["max"] = format_double(hi);
  meta["steps"] = std::to_string(steps);
  if (f.format == "json")
    write_out(f, to_json(meta, records));
  else
    write_out(f, to_csv(records));
  return kExitOk;
}

int cmd_resonances(const CommonFlags& f, double v0_min, double v0_max,
                   int steps, double min_t, double xtol) {
  const int jobs = resolve_jobs(f);
  const IntegrationConfig cfg = integration_config(f);
  const PlateauConfig pcfg = plateau_config(f);
  CommonFlags g = f;
  const ModelFactory factory = [g](double v0) {
    CommonFlags h = g;
    h.v0 = v0;
    return model_from_flags(h);
  };
  const ScanResult scan_result = scan_v0(factory, f.epsilon, v0_min, v0_max,
                                         steps, cfg, pcfg, jobs == 0 ? -1 : jobs);
  std::vector<ResonancePeak> peaks;
  for (const PeakBracket& b : find_peaks(scan_result, min_t))
    peaks.push_back(refine_peak(factory, f.epsilon, b, xtol, cfg, pcfg));

  auto meta = echo_flags(f, "resonances");
  meta["v0_min"] = format_double(v0_min);
  meta["v0_max"] = format_double(v0_max);
  meta["steps"] = std::to_string(steps);
  if (f.format == "json")
    write_out(f, peaks_to_json(meta, peaks));
  else
    write_out(f, peaks_to_csv(peaks));
  return kExitOk;
}

int cmd_validate(const CommonFlags& f) {
  const auto results = run_validation(integration_config(f), plateau_config(f));
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n";
    all_ok = all_ok && r.passed;
  }
  return all_ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D quantum transmission via Wronskian connection matrices"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CommonFlags f;

  auto* transmit = app.add_subcommand("transmit", "single-point transmission");
  add_potential_flags(transmit, f);
  transmit->add_option("--epsilon", f.epsilon, "dimensionless energy")->required();
  add_numeric_flags(transmit, f);
  add_output_flags(transmit, f);

  std::string axis;
  double lo = 0.0, hi = 1.0;
  int steps = 100;
  auto* scan = app.add_subcommand("scan", "T along an epsilon or v0 axis");
  add_potential_flags(scan, f);
  scan->add_option("--epsilon", f.epsilon, "fixed energy (v0 axis)");
  scan->add_option("--axis", axis, "scan axis")
      ->required()
      ->check(CLI::IsMember({"epsilon", "v0"}));
  scan->add_option("--min", lo, "axis lower bound")->required();
  scan->add_option("--max", hi, "axis upper bound")->required();
  scan->add_option("--steps", steps, "number of points")
      ->required()
      ->check(CLI::Range(2, 1000000));
  add_numeric_flags(scan, f);
  add_output_flags(scan, f);
  scan->add_option("--jobs", f.jobs, "scan worker count");

  double v0_min = 0.0, v0_max = 10.0, min_t = 0.99, xtol = 1e-6;
  int res_steps = 240;
  auto* resonances = app.add_subcommand("resonances", "locate T=1 well depths");
  add_potential_flags(resonances, f);
  resonances->add_option("--epsilon", f.epsilon, "fixed energy");
  resonances->add_option("--v0-min", v0_min, "depth scan lower bound");
  resonances->add_option("--v0-max", v0_max, "depth scan upper bound")->required();
  resonances->add_option("--steps", res_steps, "scan points")
      ->check(CLI::Range(3, 1000000));
  resonances->add_option("--min-T", min_t, "peak acceptance threshold");
  resonances->add_option("--xtol", xtol, "refinement half-width");
  add_numeric_flags(resonances, f);
  add_output_flags(resonances, f);
  resonances->add_option("--jobs", f.jobs, "scan worker count");

  auto* validate = app.add_subcommand("validate", "run the validation suites");
  add_numeric_flags(validate, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (transmit->parsed()) return cmd_transmit(f);
    if (scan->parsed()) return cmd_scan(f, axis, lo, hi, steps);
    if (resonances->parsed())
      return cmd_resonances(f, v0_min, v0_max, res_steps, min_t, xtol);
    if (validate->parsed()) return cmd_validate(f);
  } catch (const wscatter::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
