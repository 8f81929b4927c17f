#pragma once

#include "gitstab/mult_filtration.hpp"

namespace gitstab {

// zeta = (r_k - r_{k+1}) / (r_s - r_t), xi = (r_s - r_k) / (r_s - r_t),
// eta = <u xi> - <u zeta + <u xi>>, so that W(w) = ceil(u xi + w zeta).
struct CellParams {
  Rational zeta;
  Rational xi;
  Rational eta;
  bool zeta_zero = false;
};
CellParams cell_params(const MultFiltration& mf, int k, int i);

// Values of a staircase identity: the closed form as printed, the closed form
// valid for every input, and a direct evaluation of the left-hand side.
struct StaircaseCheck {
  Integer printed;
  Integer corrected;
  Integer brute;
  bool printed_holds() const { return printed == brute; }
};

// sum_{w<u} (W(w+1) - W(w)). Printed: floor(u zeta + <u xi>).
// Exact: ceil(<u xi> + u zeta) - ceil(<u xi>).
StaircaseCheck staircase_count(i64 u, const Rational& zeta, const Rational& xi);

// sum_{w<u} w (W(w+1) - W(w)). Printed: sum_{l=1}^{u zeta + eta}
// ceil((l - <u xi>) / zeta). Exact: sum of floor((l - <u xi>) / zeta) over the
// integers l in [<u xi>, <u xi> + u zeta).
StaircaseCheck weighted_staircase_sum(i64 u, const Rational& zeta, const Rational& xi);

// Area of the X~ profile attributable to Q_i over row k, summed directly.
Rational area_A_cell_exact(const MultFiltration& mf, int k, int i);
// Case I closed form u^2 v^2 mid dc + u v^2 (r_0 + (r_k - r_{k+1}) / 2) dc.
Rational area_A_cell_case_I(const MultFiltration& mf, int k, int i);
// Cases II-IV: the upper bound obtained by expanding the ceilings.
Rational area_A_cell_expanded_bound(const MultFiltration& mf, int k, int i);

// 7/2 u v^2 dc + 3 v^2 dc, dc the multiplicity step the cell interpolates.
Rational delta_cell_bound(const MultFiltration& mf, int k, int i);
// Sum of the cell bounds of one point when charged once per jump.
Rational delta_point_bound(const MultFiltration& mf, int i);
// 7/2 d u v^2 + 3 d v^2.
Rational delta_total_bound(i64 d, i64 u, i64 v);

}  // namespace gitstab
