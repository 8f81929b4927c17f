#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gitstab/mult_filtration.hpp"

namespace gitstab {

// W(k,w,i): least W with weight of (V_s^{u-W} V_t^W V_0)^v at most the
// weight of stage (k,w). Defined in Cases II-IV only.
i64 W_of(const MultFiltration& mf, int k, i64 w, int i);

// (V_s^a V_t^b V_0)^v with s, t source rows of the base filtration.
struct MonomialSpace {
  int s_row = 0;
  int t_row = 0;
  i64 a = 0;
  i64 b = 0;
  i64 v = 0;
  std::vector<i64> mult;
  Rational weight;

  std::string notation() const;
};

struct Stage {
  int k = 0;
  i64 w = 0;
  bool terminal = false;
  std::vector<MonomialSpace> members;
  std::vector<i64> contrib;  // x~(k,w,i)
  i64 codim_bound = 0;
  std::optional<i64> codim_exact;
  Rational weight;
};

// Step function: the value weight[s] holds on [codim[s], codim[s+1]) and the
// last step runs to total_dim.
struct StepProfile {
  std::vector<i64> codim;
  std::vector<Rational> weight;
  i64 total_dim = 0;

  Rational area() const;
};

struct XTildeProfile {
  std::vector<Stage> stages;  // (k,w) in lexicographic order, terminal last
  i64 total_dim = 0;

  StepProfile steps() const;
};

// Contribution of Q_i to the codimension bound at stage (k,w); w may equal u,
// which reproduces stage (k+1,0).
i64 xtilde_contrib(const MultFiltration& mf, int k, i64 w, int i);

XTildeProfile build_xtilde(const MultFiltration& mf, bool with_members = true);
Rational area_A_bound(const XTildeProfile& xt);

// dim H^0(O(m)) = d m - g + 1.
i64 hilbert_dim(const MultFiltration& mf);

// Refined V~ profile with steps at (v(u-w) d_k + v w d_{k+1}, stage weight).
StepProfile baseline_profile(const MultFiltration& mf);

}  // namespace gitstab
