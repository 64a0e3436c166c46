#include "upf/scenario_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <variant>

#include <json.hpp>

namespace upf {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(path.empty() ? key : path + "." + key, "unknown key");
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "required key missing");
  return *it;
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

template <class F>
auto checked(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParameterError& e) {
    fail(path, e.what());
  }
}

void read_number(const json& obj, const char* key, const std::string& path, double& out) {
  if (auto it = obj.find(key); it != obj.end()) out = as_number(*it, path + "." + key);
}

ScenarioUser parse_user(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"id", "type", "params"});
  std::string id = as_string(require(j, "id", path), path + ".id");
  const std::string type = as_string(require(j, "type", path), path + ".type");
  const std::string ppath = path + ".params";
  const json& params = require_object(require(j, "params", path), ppath);
  if (type == "sigmoid") {
    reject_unknown(params, ppath, {"a", "b"});
    const double a = as_number(require(params, "a", ppath), ppath + ".a");
    const double b = as_number(require(params, "b", ppath), ppath + ".b");
    return {std::move(id), checked(ppath, [&] { return make_sigmoid(a, b); })};
  }
  if (type == "log") {
    reject_unknown(params, ppath, {"k", "r_max"});
    const double k = as_number(require(params, "k", ppath), ppath + ".k");
    const double r_max = as_number(require(params, "r_max", ppath), ppath + ".r_max");
    return {std::move(id), checked(ppath, [&] { return make_log(k, r_max); })};
  }
  fail(path + ".type", "unknown utility type '" + type + "' (expected \"sigmoid\" or \"log\")");
}

DecayPolicy parse_decay(const json& j, const std::string& path) {
  require_object(j, path);
  const std::string type = as_string(require(j, "type", path), path + ".type");
  if (type == "none") {
    reject_unknown(j, path, {"type"});
    return DecayPolicy::none();
  }
  if (type == "exponential") {
    reject_unknown(j, path, {"type", "l1", "l2"});
    ExponentialDecay e;
    read_number(j, "l1", path, e.l1);
    read_number(j, "l2", path, e.l2);
    return checked(path, [&] { return DecayPolicy::exponential(e.l1, e.l2); });
  }
  if (type == "rational") {
    reject_unknown(j, path, {"type", "l3"});
    RationalDecay r;
    read_number(j, "l3", path, r.l3);
    return checked(path, [&] { return DecayPolicy::rational(r.l3); });
  }
  fail(path + ".type", "unknown decay type '" + type + "' (expected none, exponential or rational)");
}

AllocationConfig parse_config(const json& j) {
  const std::string path = "config";
  require_object(j, path);
  reject_unknown(j, path, {"delta", "max_iter", "initial_bid", "decay", "solver"});
  AllocationConfig cfg;
  read_number(j, "delta", path, cfg.delta);
  read_number(j, "initial_bid", path, cfg.initial_bid);
  if (auto it = j.find("max_iter"); it != j.end()) cfg.max_iter = as_count(*it, path + ".max_iter");
  if (auto it = j.find("decay"); it != j.end()) cfg.decay = parse_decay(*it, path + ".decay");
  if (auto it = j.find("solver"); it != j.end()) {
    const std::string spath = path + ".solver";
    require_object(*it, spath);
    reject_unknown(*it, spath, {"bracket_lo", "bracket_hi", "hi_cap", "rel_tol", "max_iter"});
    read_number(*it, "bracket_lo", spath, cfg.solver.bracket_lo);
    read_number(*it, "bracket_hi", spath, cfg.solver.bracket_hi);
    read_number(*it, "hi_cap", spath, cfg.solver.hi_cap);
    read_number(*it, "rel_tol", spath, cfg.solver.rel_tol);
    if (auto m = it->find("max_iter"); m != it->end()) cfg.solver.max_iter = as_count(*m, spath + ".max_iter");
  }
  checked(path, [&] {
    cfg.validate();
    return 0;
  });
  return cfg;
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json dump_decay(const DecayPolicy& p) {
  return std::visit(
      [](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ExponentialDecay>) {
          return {{"type", "exponential"}, {"l1", k.l1}, {"l2", k.l2}};
        } else if constexpr (std::is_same_v<K, RationalDecay>) {
          return {{"type", "rational"}, {"l3", k.l3}};
        } else {
          return {{"type", "none"}};
        }
      },
      p.kind());
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("syntax error at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("document: expected a JSON object");
  reject_unknown(doc, "", {"name", "users", "R_values", "config"});

  std::string name = as_string(require(doc, "name", ""), "name");

  const json& users_j = require(doc, "users", "");
  if (!users_j.is_array()) fail("users", "expected an array");
  if (users_j.empty()) fail("users", "at least one user is required");
  std::vector<ScenarioUser> users;
  for (std::size_t i = 0; i < users_j.size(); ++i) {
    users.push_back(parse_user(users_j[i], "users[" + std::to_string(i) + "]"));
  }

  const json& rates_j = require(doc, "R_values", "");
  if (!rates_j.is_array()) fail("R_values", "expected an array");
  std::vector<double> rates;
  for (std::size_t i = 0; i < rates_j.size(); ++i) {
    rates.push_back(as_number(rates_j[i], "R_values[" + std::to_string(i) + "]"));
  }

  AllocationConfig cfg;
  if (auto it = doc.find("config"); it != doc.end()) cfg = parse_config(*it);

  try {
    return Scenario(std::move(name), std::move(users), std::move(rates), cfg);
  } catch (const ParameterError& e) {
    std::string msg = e.what();
    const char* field = msg.find("user") != std::string::npos ? "users" : "R_values";
    throw ConfigError(std::string(field) + ": " + msg);
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open scenario file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string dump_scenario(const Scenario& s) {
  json users = json::array();
  for (const auto& u : s.users()) {
    json params = std::visit(
        [](const auto& shape) -> json {
          using S = std::decay_t<decltype(shape)>;
          if constexpr (std::is_same_v<S, Sigmoid>) {
            return {{"a", shape.a}, {"b", shape.b}};
          } else {
            return {{"k", shape.k}, {"r_max", shape.r_max}};
          }
        },
        u.utility.shape());
    users.push_back({{"id", u.id}, {"type", u.utility.is_sigmoid() ? "sigmoid" : "log"}, {"params", params}});
  }
  const AllocationConfig& c = s.config();
  json doc = {
      {"name", s.name()},
      {"users", users},
      {"R_values", s.total_rates()},
      {"config",
       {{"delta", c.delta},
        {"max_iter", c.max_iter},
        {"initial_bid", c.initial_bid},
        {"decay", dump_decay(c.decay)},
        {"solver",
         {{"bracket_lo", c.solver.bracket_lo},
          {"bracket_hi", c.solver.bracket_hi},
          {"hi_cap", c.solver.hi_cap},
          {"rel_tol", c.solver.rel_tol},
          {"max_iter", c.solver.max_iter}}}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace upf
