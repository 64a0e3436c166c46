#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "upf/error.hpp"
#include "upf/sim.hpp"

namespace upf {

// Scenario file rejected. what() names the line (syntax errors) or the field
// path (e.g. "users[2].type") at fault.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// JSON scenario document:
//
//   {
//     "name": "canonical",
//     "users": [
//       {"id": "Sig1", "type": "sigmoid", "params": {"a": 5, "b": 10}},
//       {"id": "Log1", "type": "log", "params": {"k": 15, "r_max": 100}}
//     ],
//     "R_values": [20, 40, 60],
//     "config": {
//       "delta": 0.001, "max_iter": 1000, "initial_bid": 10,
//       "decay": {"type": "exponential", "l1": 5, "l2": 10},
//       "solver": {"bracket_lo": 0.001, "bracket_hi": 1000, "rel_tol": 1e-10}
//     }
//   }
//
// Everything under "config" is optional. "solver" additionally accepts
// "hi_cap" and "max_iter". Unknown keys are rejected.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

// Inverse of parse_scenario; every field is written out explicitly.
std::string dump_scenario(const Scenario& s);

}  // namespace upf
