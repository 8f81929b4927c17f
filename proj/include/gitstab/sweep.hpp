#pragma once

#include <string>

#include "gitstab/verdict.hpp"

namespace gitstab {

// GITSTAB_JOBS when set to a positive integer, else the hardware concurrency.
unsigned default_jobs();

// CSV with header "u,v,margin,verdict", u-major. The bytes do not depend on
// the number of jobs.
std::string sweep_csv(const WeightedFiltration& f, const LinearizationConfig& lin, i64 u_lo, i64 u_hi, i64 v_lo,
                      i64 v_hi, unsigned jobs);

// Same format; the first row is (u0, v0(u0)), followed by the other witnesses.
std::string thresholds_csv(const Thresholds& t);

}  // namespace gitstab
