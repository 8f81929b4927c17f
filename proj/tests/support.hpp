#pragma once

#include <chrono>
#include <vector>

#include "gitstab/filtration_model.hpp"
#include "gitstab/scenario_gen.hpp"
#include "gitstab/verdict.hpp"
#include "oracles.hpp"

namespace support {

using namespace gitstab;

inline oracle::Rows rows_of(const WeightedFiltration& f) {
  oracle::Rows r;
  r.d = f.ctx.d;
  r.g = f.ctx.g;
  r.z = f.z;
  r.r = f.r;
  r.c = f.c;
  return r;
}

inline std::vector<Rational> repeat(const Rational& x, int n) { return std::vector<Rational>(static_cast<std::size_t>(n), x); }

// Example 1 in a complete nonspecial context of genus g and degree d with
// three marked points carrying gamma b_i = 1/2.
inline Setting ex1_setting(int g, i64 d) {
  Setting s;
  s.ctx.g = g;
  s.ctx.d = d;
  s.ctx.N = d - g;
  s.ctx.n = 3;
  s.lin.gamma = Rational(1, 2);
  s.lin.b = repeat(Rational(1), 3);
  s.lin.epsilon = Rational(1, 1000);
  return s;
}

// The moduli setting g = 2, nu = 5, a_i = 4/5: d = 22, N = 20, Case A.
inline Setting ex1_moduli() {
  const auto ms = moduli_context(2, repeat(Rational(4, 5), 3), 5);
  Setting s{ms.ctx, ms.lin};
  s.lin.epsilon = *default_epsilon(s.ctx, s.lin);
  return s;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace support
