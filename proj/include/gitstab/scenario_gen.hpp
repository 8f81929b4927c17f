#pragma once

#include <cstdint>

#include "gitstab/filtration_model.hpp"

namespace gitstab {

// z = (1,1,1,N-2), r = (1/2,1/3,1/6,0), three base points entering one row
// at a time, B_i = b_i. Needs n >= 3 and N >= 3.
WeightedFiltration example1(const GeometricContext& ctx, const LinearizationConfig& lin);

// One base point at the marked point of largest b, multiplicity j at row j,
// r_j = 2 (N - j) / (N (N + 1)).
WeightedFiltration worst_candidate(const GeometricContext& ctx, const LinearizationConfig& lin);

// Random admissible filtration; deterministic in the seed. Weights have
// denominators at most 10^4 and gamma B_i <= 1/2.
WeightedFiltration random_admissible(const GeometricContext& ctx, const LinearizationConfig& lin, std::uint64_t seed);

struct Setting {
  GeometricContext ctx;
  LinearizationConfig lin;
};
// Random complete nonspecial context with g <= 4 and n <= 4; epsilon is the
// default when one exists and 1/1000 otherwise.
Setting random_setting(std::uint64_t seed);

}  // namespace gitstab
