#pragma once

#include <cstddef>
#include <vector>

#include "gitstab/filtration_model.hpp"

namespace gitstab {

// A space of sections of O(m) cut out by the divisor sum_i mult[i] Q_i.
struct DivisorSeries {
  std::vector<i64> mult;
  i64 level = 0;
  Rational weight;
};

// sum_i max_j mult < d m - 2g, which makes every listed divisor and every
// intersection of them impose independent conditions.
bool degree_hypothesis(const std::vector<DivisorSeries>& series, const GeometricContext& ctx);

i64 intersection_codim(const std::vector<DivisorSeries>& series);

// Inclusion-exclusion over all nonempty subsets.
i64 span_codim_oracle(const std::vector<DivisorSeries>& series);
// Row-major variant: `count` rows of length `width`.
i64 span_codim_oracle(const i64* mult, std::size_t count, std::size_t width);

// Square lists only: series i is the one minimal at Q_i. With diag_check the
// precondition is verified first; without it the caller vouches for it.
i64 span_codim_trace(const std::vector<DivisorSeries>& series, bool diag_check = true);
i64 span_codim_trace(const i64* mult, std::size_t count, bool diag_check = true);

constexpr std::size_t kOracleLimit = 20;

}  // namespace gitstab
