#include "upf/csv.hpp"

#include <charconv>
#include <cmath>

namespace upf {

std::string format_number(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string status_name(AllocationStatus s) {
  return s == AllocationStatus::Converged ? "converged" : "iteration_cap";
}

void write_trajectory_csv(std::ostream& out, const std::vector<std::string>& user_ids,
                          const AllocationResult& result) {
  out << "n,price,user_id,bid,rate\n";
  for (const auto& rec : result.trajectory) {
    const std::string price = format_number(rec.price);
    for (std::size_t i = 0; i < user_ids.size(); ++i) {
      out << rec.n << ',' << price << ',' << user_ids[i] << ',' << format_number(rec.bids[i]) << ','
          << format_number(rec.rates[i]) << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, const Scenario& scenario, const SweepResult& sweep) {
  out << "R,user_id,final_rate,final_utility,final_price,iterations,status\n";
  const auto& users = scenario.users();
  for (const auto& entry : sweep.entries) {
    const auto& r = entry.result;
    for (std::size_t i = 0; i < users.size(); ++i) {
      out << format_number(entry.total_rate) << ',' << users[i].id << ',' << format_number(r.final_rates[i])
          << ',' << format_number(users[i].utility.eval(r.final_rates[i])) << ','
          << format_number(r.final_price) << ',' << r.iterations_used << ',' << status_name(r.status) << '\n';
    }
  }
}

void write_curves_csv(std::ostream& out, const Scenario& scenario) {
  out << "r,user_id,utility,dlogU\n";
  for (int x = 0; x <= 100; ++x) {
    const double r = x;
    for (const auto& u : scenario.users()) {
      out << x << ',' << u.id << ',' << format_number(u.utility.eval(r)) << ',';
      if (x > 0) out << format_number(u.utility.dlog(r));
      out << '\n';
    }
  }
}

}  // namespace upf
