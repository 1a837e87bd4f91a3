#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abf/closed_form.hpp"
#include "abf/csv.hpp"
#include "abf/errors.hpp"
#include "abf/geometry.hpp"
#include "abf/optimizer.hpp"
#include "abf/quadrature.hpp"
#include "abf/radiated_power.hpp"
#include "abf/scenario.hpp"
#include "abf/scenario_io.hpp"
#include "abf/synthesis.hpp"

namespace {

using json = nlohmann::ordered_json;
constexpr double kDegToRad = std::numbers::pi / 180.0;

struct CommonArgs {
  std::string band = "28ghz";
  double fmin_hz = 0.0;
  double fmax_hz = 0.0;
  double theta_deg = 60.0;
  std::string cn_dbhz = "100";
  std::string out;
  std::string config;
};

abf::Band resolve_band(const CommonArgs& args, const abf::ScenarioFile* file) {
  if (args.band == "custom") {
    if (!(args.fmin_hz > 0.0) || !(args.fmax_hz > args.fmin_hz)) {
      throw abf::InvalidArgumentError("custom band requires --fmin-hz and --fmax-hz");
    }
    return {args.fmin_hz, args.fmax_hz};
  }
  if (!args.band.empty()) return abf::preset_band(args.band);
  if (file) return file->band;
  throw abf::InvalidArgumentError("no band given");
}

// Output stream selection: file when --out is set, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw abf::InvalidArgumentError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string sidecar_path(const std::string& report_path, const std::string& tag) {
  const size_t dot = report_path.rfind('.');
  const std::string stem =
      (dot == std::string::npos) ? report_path : report_path.substr(0, dot);
  return stem + "." + tag + ".csv";
}

int run_gain(const CommonArgs& args, const abf::ScenarioFile* file) {
  const abf::Band band = resolve_band(args, file);
  const double gain = abf::max_flat_gain(args.theta_deg * kDegToRad, band.f_min, band.f_max);
  json report;
  report["gain_linear"] = gain;
  report["gain_db"] = 10.0 * std::log10(gain);
  report["regime"] = "around-broadside";
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_pattern(const CommonArgs& args, const abf::ScenarioFile* file, const std::string& array,
                int n, double spacing, double radius_m, int freq_points, int angle_points) {
  const abf::Band band = resolve_band(args, file);
  const double f_c = 0.5 * (band.f_min + band.f_max);
  const bool is_uca = array == "uca";
  if (!is_uca && array != "ula") {
    throw abf::InvalidArgumentError("pattern: --array must be ula or uca");
  }
  abf::ArrayGeometry geom =
      is_uca ? abf::ArrayGeometry::uca(
                   n, radius_m > 0.0 ? radius_m : abf::ArrayGeometry::uca_arc_radius(n, f_c), f_c)
             : abf::ArrayGeometry::ula(n, spacing, f_c);

  // Matched at (f_c, steering angle). For the UCA the swept angle is the
  // azimuth in the array plane; for the ULA it is the polar angle off axis.
  auto direction_at = [&](double angle_rad) {
    return is_uca ? abf::Direction(std::numbers::pi / 2.0, angle_rad)
                  : abf::Direction(angle_rad, 0.0);
  };
  const double theta_rad = args.theta_deg * kDegToRad;
  const abf::Beamformer bf = abf::matched_beamformer(geom, f_c, direction_at(theta_rad));

  OutputTarget target(args.out);
  abf::CsvWriter csv(target.stream());
  const char* cols[] = {"freq_hz", "theta_deg", "intensity"};
  csv.header(cols);
  const std::vector<double> freqs = abf::uniform_grid(band.f_min, band.f_max, freq_points);
  const double angle_max = is_uca ? 360.0 : 180.0;
  for (double f : freqs) {
    for (int i = 0; i < angle_points; ++i) {
      const double angle_deg = angle_max * i / (is_uca ? angle_points : angle_points - 1);
      const double intensity =
          abf::radiation_intensity(geom, bf, f, direction_at(angle_deg * kDegToRad));
      const double row[] = {f, angle_deg, intensity};
      csv.row(row);
    }
  }
  return 0;
}

int run_rate_curve(const CommonArgs& args, const abf::ScenarioFile* file) {
  const abf::Band band = resolve_band(args, file);
  const std::vector<double> sweep = abf::parse_cn_sweep(args.cn_dbhz);
  OutputTarget target(args.out);
  abf::CsvWriter csv(target.stream());
  const char* cols[] = {"cn_dbhz", "rate_bps_flat", "rate_bps_endfire"};
  csv.header(cols);
  for (double dbhz : sweep) {
    const double cn = abf::dbhz_to_hz(dbhz);
    std::vector<std::string> row{abf::format_value(dbhz), "", ""};
    try {
      abf::Scenario sc =
          abf::Scenario::from_band(band.f_min, band.f_max, args.theta_deg * kDegToRad, cn);
      row[1] = abf::format_value(abf::flat_rate(sc));
    } catch (const abf::RegimeError& e) {
      std::cerr << "warning: cn_dbhz=" << dbhz << ": " << e.what() << "\n";
    }
    abf::Scenario end_sc = abf::Scenario::from_band(band.f_min, band.f_max, 0.0, cn);
    row[2] = abf::format_value(abf::endfire_rate(end_sc));
    csv.row_raw(row);
  }
  return 0;
}

int run_bandwidth_opt(const CommonArgs& args, double fc_hz) {
  const std::vector<double> sweep = abf::parse_cn_sweep(args.cn_dbhz);
  OutputTarget target(args.out);
  abf::CsvWriter csv(target.stream());
  const char* cols[] = {"cn_dbhz", "b_opt_hz", "rate_bps"};
  csv.header(cols);
  for (double dbhz : sweep) {
    const abf::BandwidthOptimum opt =
        abf::optimal_bandwidth(fc_hz, args.theta_deg * kDegToRad, abf::dbhz_to_hz(dbhz));
    const double row[] = {dbhz, opt.bandwidth_hz, opt.rate_bps};
    csv.row(row);
  }
  return 0;
}

int run_optimize(const CommonArgs& args) {
  if (args.config.empty()) {
    throw abf::InvalidArgumentError("optimize requires --config <scenario file>");
  }
  const abf::ScenarioFile file = abf::load_scenario_file(args.config);
  if (file.cn_dbhz.size() != 1) {
    throw abf::InvalidArgumentError("optimize expects a scalar cn_dbhz, not a sweep");
  }
  const double cn_dbhz = file.cn_dbhz.front();
  const abf::Scenario sc = abf::make_scenario(file, cn_dbhz);
  const abf::FlatSolution init = abf::flat_solution(sc);
  const abf::OptimizationResult result =
      abf::alternating_optimize(init.g, sc, file.max_iterations);

  const std::string report_path = args.out.empty() ? "abf_optimize.json" : args.out;
  const std::string g_path = sidecar_path(report_path, "g");
  const std::string s0_path = sidecar_path(report_path, "s0");

  json report;
  report["band"] = {{"f_min_hz", sc.f_min}, {"f_max_hz", sc.f_max}};
  report["theta_c_deg"] = file.theta_c_deg;
  report["cn_dbhz"] = cn_dbhz;
  report["rate_bps"] = result.rate_bps;
  report["mu"] = result.mu;
  report["kkt_residual"] = result.kkt_residual;
  report["power_gap"] = result.power_gap;
  report["iterations"] = result.iterations;
  report["files"] = {{"g_csv", g_path}, {"s0_csv", s0_path}};

  {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw abf::InvalidArgumentError("cannot open output file: " + report_path);
    out << report.dump(2) << "\n";
  }
  {
    std::ofstream out(g_path, std::ios::binary);
    if (!out) throw abf::InvalidArgumentError("cannot open output file: " + g_path);
    abf::CsvWriter csv(out);
    const char* cols[] = {"omega_hz", "g"};
    csv.header(cols);
    for (size_t i = 0; i < result.g.grid().size(); ++i) {
      const double row[] = {result.g.grid()[i], result.g.values()[i]};
      csv.row(row);
    }
  }
  {
    std::ofstream out(s0_path, std::ios::binary);
    if (!out) throw abf::InvalidArgumentError("cannot open output file: " + s0_path);
    abf::CsvWriter csv(out);
    const char* cols[] = {"freq_hz", "s0_w_per_hz"};
    csv.header(cols);
    for (size_t i = 0; i < result.s0.grid().size(); ++i) {
      const double row[] = {result.s0.grid()[i], result.s0.values()[i]};
      csv.row(row);
    }
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_synthesize(const CommonArgs& args, const abf::ScenarioFile* file, int n, double beta) {
  const abf::Band band = resolve_band(args, file);
  abf::Scenario sc =
      abf::Scenario::from_band(band.f_min, band.f_max, args.theta_deg * kDegToRad,
                               abf::dbhz_to_hz(abf::parse_cn_sweep(args.cn_dbhz).front()));
  if (file) {
    sc.grid = file->grid;
    sc.tol = file->tol;
  }
  const abf::Beamformer bf = abf::synthesize_normalized_beamformer(n, sc, beta);
  const abf::SynthesisReport rep = abf::finite_n_report(n, sc, beta);

  const std::string weights_path = args.out.empty() ? "weights.csv" : args.out;
  {
    std::ofstream out(weights_path, std::ios::binary);
    if (!out) throw abf::InvalidArgumentError("cannot open output file: " + weights_path);
    abf::CsvWriter csv(out);
    const char* cols[] = {"index", "re", "im"};
    csv.header(cols);
    for (size_t i = 0; i < bf.weights.size(); ++i) {
      const double row[] = {static_cast<double>(i), bf.weights[i].real(), bf.weights[i].imag()};
      csv.row(row);
    }
  }

  json report;
  report["n"] = rep.n;
  report["achieved_min_gain"] = rep.achieved_min_gain;
  report["achieved_max_gain"] = rep.achieved_max_gain;
  report["bound"] = rep.bound;
  report["gap_db"] = rep.gap_db;
  report["weights_csv"] = weights_path;
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency-flat transmit beamforming rate limits"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string array = "ula";
  int n_elements = 16;
  double spacing = 0.5;
  double radius_m = 0.0;
  int freq_points = 101;
  int angle_points = 181;
  double fc_hz = 60e9;
  double beta = 8.0;

  auto add_common = [&](CLI::App* cmd, bool with_cn) {
    cmd->add_option("--band", args.band, "band preset (28ghz, 60ghz) or 'custom'");
    cmd->add_option("--fmin-hz", args.fmin_hz, "custom band lower edge");
    cmd->add_option("--fmax-hz", args.fmax_hz, "custom band upper edge");
    cmd->add_option("--theta", args.theta_deg, "steering angle, degrees");
    if (with_cn) {
      cmd->add_option("--cn-dbhz", args.cn_dbhz,
                      "carrier-to-noise density, dB-Hz; value or start:stop:step");
    }
    cmd->add_option("--out", args.out, "output path");
    cmd->add_option("--config", args.config, "scenario file with defaults");
  };

  CLI::App* gain = app.add_subcommand("gain", "flat in-band gain bound");
  add_common(gain, false);

  CLI::App* pattern = app.add_subcommand("pattern", "radiation intensity grid CSV");
  add_common(pattern, false);
  pattern->add_option("--array", array, "ula or uca");
  pattern->add_option("--n", n_elements, "element count");
  pattern->add_option("--spacing", spacing, "ULA spacing in wavelengths at f_c");
  pattern->add_option("--radius-m", radius_m, "UCA radius (default: half-wavelength arc rule)");
  pattern->add_option("--freq-points", freq_points, "frequency samples");
  pattern->add_option("--angle-points", angle_points, "angle samples");

  CLI::App* rate_curve = app.add_subcommand("rate-curve", "flat and end-fire rates vs C/N");
  add_common(rate_curve, true);

  CLI::App* bw = app.add_subcommand("bandwidth-opt", "optimal bandwidth vs C/N");
  add_common(bw, true);
  bw->add_option("--fc-hz", fc_hz, "center frequency");

  CLI::App* optimize = app.add_subcommand("optimize", "alternating rate maximization");
  optimize->add_option("--config", args.config, "scenario file (required)");
  optimize->add_option("--out", args.out, "report path (default abf_optimize.json)");

  CLI::App* synth = app.add_subcommand("synthesize", "finite-N beamformer synthesis");
  add_common(synth, true);
  synth->add_option("--n", n_elements, "element count");
  synth->add_option("--beta", beta, "Kaiser window beta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(abf::ExitCode::usage);
  }

  try {
    std::optional<abf::ScenarioFile> file;
    if (!args.config.empty() && !optimize->parsed()) {
      file = abf::load_scenario_file(args.config);
      // Config supplies defaults for flags the user did not pass.
      CLI::App* active = gain->parsed()         ? gain
                         : pattern->parsed()    ? pattern
                         : rate_curve->parsed() ? rate_curve
                         : bw->parsed()         ? bw
                                                : synth;
      if (active->count("--band") == 0) args.band = "";
      if (active->count("--theta") == 0) args.theta_deg = file->theta_c_deg;
      if (active->count("--cn-dbhz") == 0 && !file->cn_dbhz.empty() &&
          active->get_option_no_throw("--cn-dbhz") != nullptr) {
        args.cn_dbhz = abf::format_value(file->cn_dbhz.front());
      }
    }
    const abf::ScenarioFile* file_ptr = file ? &*file : nullptr;

    if (gain->parsed()) return run_gain(args, file_ptr);
    if (pattern->parsed()) {
      return run_pattern(args, file_ptr, array, n_elements, spacing, radius_m, freq_points,
                         angle_points);
    }
    if (rate_curve->parsed()) return run_rate_curve(args, file_ptr);
    if (bw->parsed()) return run_bandwidth_opt(args, fc_hz);
    if (optimize->parsed()) return run_optimize(args);
    if (synth->parsed()) return run_synthesize(args, file_ptr, n_elements, beta);
    return static_cast<int>(abf::ExitCode::usage);
  } catch (const abf::InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(abf::ExitCode::usage);
  } catch (const abf::DivergentGainError& e) {
    std::cerr << "error: divergent gain at broadside: " << e.what() << "\n";
    return static_cast<int>(abf::ExitCode::regime);
  } catch (const abf::RegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(abf::ExitCode::regime);
  } catch (const abf::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(abf::ExitCode::regime);
  } catch (const abf::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(abf::ExitCode::no_convergence);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(abf::ExitCode::usage);
  }
}
