#include "gitstab/discrepancy.hpp"

#include "gitstab/xtilde_profile.hpp"

namespace gitstab {

namespace {

Rational qi(i64 x) { return Rational(static_cast<long>(x)); }

Rational stage_weight(const MultFiltration& mf, int k, i64 w) {
  return qi(mf.v) * (qi(mf.u - w) * mf.r(k) + qi(w) * mf.r(k + 1) + mf.r(0));
}

i64 cell_step(const MultFiltration& mf, int k, int i, const CellCaseInfo& info) {
  if (info.kind == CellCase::Zero) return 0;
  if (info.kind == CellCase::I) return mf.c(k + 1, i) - mf.c(k, i);
  return mf.c(info.t, i) - mf.c(info.s, i);
}

}  // namespace

CellParams cell_params(const MultFiltration& mf, int k, int i) {
  const CellCaseInfo info = case_of(mf, k, i);
  if (info.kind == CellCase::Zero || info.kind == CellCase::I) throw Error("W undefined");
  const Rational span = mf.r(info.s) - mf.r(info.t);
  if (span == 0) throw Error("degenerate bracket");
  CellParams p;
  p.zeta = (mf.r(k) - mf.r(k + 1)) / span;
  p.xi = (mf.r(info.s) - mf.r(k)) / span;
  const Rational u = qi(mf.u);
  const Rational fx = frac_q(u * p.xi);
  p.eta = fx - frac_q(u * p.zeta + fx);
  p.zeta_zero = p.zeta == 0;
  return p;
}

StaircaseCheck staircase_count(i64 u, const Rational& zeta, const Rational& xi) {
  const Rational fx = frac_q(qi(u) * xi);
  StaircaseCheck out;
  out.printed = floor_q(qi(u) * zeta + fx);
  out.corrected = ceil_q(fx + qi(u) * zeta) - ceil_q(fx);
  out.brute = 0;
  for (i64 w = 0; w < u; ++w) out.brute += ceil_q(fx + qi(w + 1) * zeta) - ceil_q(fx + qi(w) * zeta);
  return out;
}

StaircaseCheck weighted_staircase_sum(i64 u, const Rational& zeta, const Rational& xi) {
  const Rational fx = frac_q(qi(u) * xi);
  StaircaseCheck out;
  out.printed = 0;
  out.corrected = 0;
  out.brute = 0;
  for (i64 w = 0; w < u; ++w)
    out.brute += Integer(static_cast<long>(w)) * (ceil_q(fx + qi(w + 1) * zeta) - ceil_q(fx + qi(w) * zeta));
  if (zeta == 0) return out;
  const Integer top = floor_q(qi(u) * zeta + fx);
  for (Integer l = 1; l <= top; ++l) out.printed += ceil_q((Rational(l) - fx) / zeta);
  const Integer lo = ceil_q(fx), hi = ceil_q(fx + qi(u) * zeta);
  for (Integer l = lo; l < hi; ++l) out.corrected += floor_q((Rational(l) - fx) / zeta);
  return out;
}

Rational area_A_cell_exact(const MultFiltration& mf, int k, int i) {
  Rational total = 0;
  i64 prev = xtilde_contrib(mf, k, 0, i);
  for (i64 w = 0; w < mf.u; ++w) {
    const i64 next = xtilde_contrib(mf, k, w + 1, i);
    total += stage_weight(mf, k, w) * qi(next - prev);
    prev = next;
  }
  return total;
}

Rational area_A_cell_case_I(const MultFiltration& mf, int k, int i) {
  if (case_of(mf, k, i).kind != CellCase::I) throw Error("not a Case I cell");
  const Rational dc = qi(mf.c(k + 1, i) - mf.c(k, i));
  const Rational u = qi(mf.u), v = qi(mf.v);
  return u * u * v * v * Rational(1, 2) * (mf.r(k + 1) + mf.r(k)) * dc +
         u * v * v * (mf.r(0) + Rational(1, 2) * (mf.r(k) - mf.r(k + 1))) * dc;
}

Rational area_A_cell_expanded_bound(const MultFiltration& mf, int k, int i) {
  const CellCaseInfo info = case_of(mf, k, i);
  const CellParams p = cell_params(mf, k, i);
  const Rational u = qi(mf.u), v = qi(mf.v);
  const Rational fx = frac_q(u * p.xi);
  const Rational ind = p.zeta_zero ? 0 : 1;
  const Rational& rk = mf.r(k);
  const Rational& rk1 = mf.r(k + 1);
  const Rational& r0 = mf.r(0);
  const Rational quad = Rational(1, 2) * (rk + rk1) * p.zeta;
  const Rational lin = p.eta * rk + p.zeta * r0 + ind * (rk - rk1) * (fx - p.eta + Rational(1, 2));
  const Rational cst = p.eta * r0 + ind * (mf.r(info.s) - mf.r(info.t)) * (p.eta * fx - Rational(1, 2) * p.eta * p.eta - p.eta);
  return v * v * qi(mf.c(info.t, i) - mf.c(info.s, i)) * (quad * u * u + lin * u + cst);
}

Rational delta_cell_bound(const MultFiltration& mf, int k, int i) {
  const i64 dc = cell_step(mf, k, i, case_of(mf, k, i));
  const Rational u = qi(mf.u), v = qi(mf.v);
  return (Rational(7, 2) * u * v * v + 3 * v * v) * qi(dc);
}

Rational delta_point_bound(const MultFiltration& mf, int i) {
  const Rational u = qi(mf.u), v = qi(mf.v);
  return (Rational(7, 2) * u * v * v + 3 * v * v) * qi(mf.c(mf.last(), i));
}

Rational delta_total_bound(i64 d, i64 u, i64 v) {
  const Rational D = qi(d), U = qi(u), V = qi(v);
  return Rational(7, 2) * D * U * V * V + 3 * D * V * V;
}

}  // namespace gitstab
