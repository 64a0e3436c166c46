#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace upf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;    // bad config, arguments or output location
inline constexpr int kExitRuntime = 3;  // an allocation run failed

// Runs the scenario sweep; writes traj_R<R>.csv per total rate and summary.csv
// into out_dir. `total_rates` replaces the file's R_values when set.
int cmd_run(const std::filesystem::path& config, const std::filesystem::path& out_dir,
            const std::optional<std::vector<double>>& total_rates, std::ostream& err);

// Writes curves.csv (utility and log-utility slope samples) into out_dir.
int cmd_curves(const std::filesystem::path& config, const std::filesystem::path& out_dir,
               std::ostream& err);

// Prints `a=<v> b=<v> c=<v> d=<v>` for the sigmoid through the two QoE points.
int cmd_fit(double r_low, double s_low, double r_high, double s_high, std::ostream& out,
            std::ostream& err);

// "10,20,30" -> {10, 20, 30}. Throws upf::ConfigError on malformed input.
std::vector<double> parse_rate_list(std::string_view text);

// Full command line dispatch; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upf::cli
