#pragma once

#include <ostream>
#include <string>

#include "upf/sim.hpp"

namespace upf {

// Shortest decimal string that parses back to the same double.
std::string format_number(double x);

// Header `n,price,user_id,bid,rate`; one row per user per round.
void write_trajectory_csv(std::ostream& out, const std::vector<std::string>& user_ids,
                          const AllocationResult& result);

// Header `R,user_id,final_rate,final_utility,final_price,iterations,status`.
void write_summary_csv(std::ostream& out, const Scenario& scenario, const SweepResult& sweep);

// Header `r,user_id,utility,dlogU` over r = 0, 1, ..., 100; dlogU left empty at r = 0.
void write_curves_csv(std::ostream& out, const Scenario& scenario);

std::string status_name(AllocationStatus s);

}  // namespace upf
