#include "upf/commands.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <variant>

#include <CLI11.hpp>

#include "upf/csv.hpp"
#include "upf/scenario_io.hpp"
#include "upf/sim.hpp"

namespace upf::cli {
namespace fs = std::filesystem;

namespace {

bool prepare_out_dir(const fs::path& dir, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err << "error: cannot create output directory " << dir << ": " << ec.message() << '\n';
    return false;
  }
  return true;
}

template <class Writer>
bool write_file(const fs::path& path, std::ostream& err, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  writer(out);
  out.flush();
  if (!out) {
    err << "error: write failed for " << path << '\n';
    return false;
  }
  return true;
}

}  // namespace

std::vector<double> parse_rate_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw ConfigError("--R: cannot parse '" + std::string(item) + "' as a number");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

int cmd_run(const fs::path& config, const fs::path& out_dir,
            const std::optional<std::vector<double>>& total_rates, std::ostream& err) {
  std::optional<Scenario> scenario;
  try {
    scenario = load_scenario(config);
    if (total_rates) scenario = scenario->with_total_rates(*total_rates);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: --R: " << e.what() << '\n';
    return kExitUsage;
  }

  SweepResult sweep;
  try {
    sweep = run_sweep(*scenario);
  } catch (const SweepError& e) {
    err << "error: allocation failed at " << e.what() << '\n';
    return kExitRuntime;
  }

  if (!prepare_out_dir(out_dir, err)) return kExitUsage;
  const auto ids = scenario->user_ids();
  for (const auto& entry : sweep.entries) {
    const fs::path path = out_dir / ("traj_R" + format_number(entry.total_rate) + ".csv");
    if (!write_file(path, err, [&](std::ostream& o) { write_trajectory_csv(o, ids, entry.result); })) {
      return kExitUsage;
    }
  }
  if (!write_file(out_dir / "summary.csv", err,
                  [&](std::ostream& o) { write_summary_csv(o, *scenario, sweep); })) {
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_curves(const fs::path& config, const fs::path& out_dir, std::ostream& err) {
  std::optional<Scenario> scenario;
  try {
    scenario = load_scenario(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!prepare_out_dir(out_dir, err)) return kExitUsage;
  if (!write_file(out_dir / "curves.csv", err, [&](std::ostream& o) { write_curves_csv(o, *scenario); })) {
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_fit(double r_low, double s_low, double r_high, double s_high, std::ostream& out,
            std::ostream& err) {
  try {
    const UtilityFunction u = fit_sigmoid_from_qoe({r_low, s_low}, {r_high, s_high});
    const auto& s = std::get<Sigmoid>(u.shape());
    out << "a=" << format_number(s.a) << " b=" << format_number(s.b) << " c=" << format_number(s.c)
        << " d=" << format_number(s.d) << '\n';
    return kExitOk;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Utility proportional fairness rate allocation simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string rates_text;

  auto* run = app.add_subcommand("run", "Sweep a scenario and write trajectory and summary CSVs");
  run->add_option("--config", config_path, "Scenario JSON file")->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--R", rates_text, "Comma separated total rates, replaces R_values");

  auto* curves = app.add_subcommand("curves", "Write utility curves on r = 0..100");
  curves->add_option("--config", config_path, "Scenario JSON file")->required();
  curves->add_option("--out", out_dir, "Output directory")->required();

  double fit_args[4] = {0, 0, 0, 0};
  auto* fit = app.add_subcommand("fit", "Fit a sigmoid through two (rate, satisfaction) points");
  fit->add_option("r_low", fit_args[0], "Lower rate")->required();
  fit->add_option("s_low", fit_args[1], "Satisfaction at the lower rate, in (0,1)")->required();
  fit->add_option("r_high", fit_args[2], "Upper rate")->required();
  fit->add_option("s_high", fit_args[3], "Satisfaction at the upper rate, in (0,1)")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (run->parsed()) {
    std::optional<std::vector<double>> rates;
    if (!rates_text.empty()) {
      try {
        rates = parse_rate_list(rates_text);
      } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      }
    }
    return cmd_run(config_path, out_dir, rates, err);
  }
  if (curves->parsed()) return cmd_curves(config_path, out_dir, err);
  return cmd_fit(fit_args[0], fit_args[1], fit_args[2], fit_args[3], out, err);
}

}  // namespace upf::cli
