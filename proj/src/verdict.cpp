#include "gitstab/verdict.hpp"

#include <algorithm>

#include "gitstab/virtual_profile.hpp"
#include "gitstab/xtilde_profile.hpp"
#include "gitstab/discrepancy.hpp"

namespace gitstab {

namespace {

Rational qi(i64 x) { return Rational(static_cast<long>(x)); }

Rational L0(const GeometricContext& ctx, const LinearizationConfig& lin) {
  return 1 + (Rational(ctx.g - 1) + lin.gamma_b()) / qi(ctx.N + 1);
}

bool certifiable(Case c) { return c == Case::A || c == Case::B || c == Case::C; }

Rational slot_weight(const WeightedFiltration& f, i64 slot) {
  i64 seen = 0;
  for (std::size_t j = 0; j < f.z.size(); ++j) {
    seen += f.z[j];
    if (slot < seen) return f.r[j];
  }
  throw Error("slot index out of range");
}

Rational r_N_minus_1(const WeightedFiltration& f) {
  if (f.ctx.N < 1) throw Error("degenerate projective space");
  return slot_weight(f, f.ctx.N - 1);
}

}  // namespace

ZSeries Z_series(const WeightedFiltration& f) {
  ZSeries out;
  const Regions reg = regions(f);
  out.j_rr = reg.j_rr;
  out.j_cliff = reg.j_cliff;
  const i64 rr = f.ctx.N - f.ctx.g;
  i64 through = 0;
  for (int j = 0; j <= f.last(); ++j) {
    const i64 before = through;
    through += f.z[j];
    if (j < reg.j_rr) {
      out.Z.push_back(f.z[j]);
      out.alternative.push_back(f.z[j]);
    } else if (j == reg.j_rr) {
      out.Z.push_back(f.z[j] + through - rr);
      out.alternative.push_back(f.z[j] + before - rr);
    } else {
      out.Z.push_back(2 * f.z[j]);
      out.alternative.push_back(2 * f.z[j]);
    }
  }
  return out;
}

Rational creep_lhs(const WeightedFiltration& f, const LinearizationConfig& lin) {
  const auto tables = jump_tables(f);
  Rational lhs = 0;
  for (int i = 0; i < f.ctx.q; ++i) {
    const auto& J = tables[i].j;
    const int K = tables[i].K();
    if (K == 0) continue;
    lhs += (q(f.c[J[1]][i], 2) + lin.gamma * f.B[i]) * f.r[J[0]];
    for (int l = 1; l < K; ++l) lhs += q(f.c[J[l + 1]][i] - f.c[J[l - 1]][i], 2) * f.r[J[l]];
  }
  return lhs;
}

const char* creep_mode_name(CreepMode m) {
  switch (m) {
    case CreepMode::Plain: return "plain";
    case CreepMode::StrengthenedB: return "strengthened-B";
    case CreepMode::StrengthenedC: return "strengthened-C";
  }
  return "?";
}

CreepResult creep_check(const WeightedFiltration& f, const LinearizationConfig& lin, CreepMode mode) {
  CreepResult out;
  out.requested = mode;
  out.used = mode;
  out.lhs = creep_lhs(f, lin);
  const ZSeries zs = Z_series(f);
  for (int j = 0; j <= f.last(); ++j) out.rhs += qi(zs.Z[j]) * f.r[j];
  if (mode == CreepMode::StrengthenedB) {
    if (f.ctx.n < 1 || case_classify(f.ctx, lin) != Case::B) throw Error("mode inapplicable");
    const bool all_marked = std::all_of(f.B.begin(), f.B.end(), [](const Rational& x) { return x != 0; });
    if (f.ctx.q == f.ctx.n && all_marked) {
      out.used = CreepMode::Plain;
    } else {
      out.rhs -= (Rational(1, 2) - lin.gamma_b()) * r_N_minus_1(f);
    }
  } else if (mode == CreepMode::StrengthenedC) {
    if (f.ctx.n != 0) throw Error("mode inapplicable");
    out.rhs -= Rational(1, 2) * r_N_minus_1(f);
  }
  out.holds = out.lhs <= out.rhs;
  return out;
}

TailResult tail_bound(const WeightedFiltration& f) {
  TailResult out;
  const i64 g = f.ctx.g;
  if (g == 0) {
    out.holds = true;
    return out;
  }
  const auto slots = expand_slots(f);
  const i64 n = static_cast<i64>(slots.size());
  for (i64 s = std::max<i64>(0, n - g); s < n; ++s) out.tail += slots[s];
  out.bound = Rational(g - 1) / qi(f.ctx.N);
  out.holds = out.tail <= out.bound;
  return out;
}

TailResult tail_bound_B(const WeightedFiltration& f, const LinearizationConfig& lin) {
  TailResult out = tail_bound(f);
  const Rational c = Rational(1, 2) - lin.gamma_b();
  out.tail -= c * r_N_minus_1(f);
  out.bound = (Rational(f.ctx.g - 1) - c) / qi(f.ctx.N);
  out.holds = out.tail <= out.bound;
  return out;
}

TailResult tail_bound_C(const WeightedFiltration& f) {
  TailResult out = tail_bound(f);
  out.tail -= Rational(1, 2) * r_N_minus_1(f);
  out.bound = (Rational(f.ctx.g) - Rational(3, 2)) / qi(f.ctx.N);
  out.holds = out.tail <= out.bound;
  return out;
}

std::optional<Rational> epsilon_max(const GeometricContext& ctx, const LinearizationConfig& lin) {
  const Case c = case_classify(ctx, lin);
  const Rational N = qi(ctx.N);
  const Rational top = N - 2 * ctx.g + 3;
  switch (c) {
    case Case::A: return std::nullopt;
    case Case::B: return (top - 2 * lin.gamma_b()) / (2 * N * (N + 1));
    case Case::C: return top / (2 * N * (N + 1));
    default: throw Error("no admissible epsilon");
  }
}

std::optional<Rational> default_epsilon(const GeometricContext& ctx, const LinearizationConfig& lin) {
  if (ctx.N == 0) throw Error("degenerate projective space");
  const Rational N = qi(ctx.N);
  const Rational x0 = Rational(ctx.g - 1) / N;
  const Rational top = N - 2 * ctx.g + 3;
  if (ctx.n == 0) {
    if (ctx.N < 2 * static_cast<i64>(ctx.g) - 2) return std::nullopt;
    return top / (4 * N * (N + 1));
  }
  const Rational gb = lin.gamma_b();
  if (gb > x0) return (gb - x0) / (2 * (N + 1));
  if (x0 >= Rational(1, 2)) return std::nullopt;
  const Rational slack = (Rational(1, 2) - x0) / (N + 1);
  const Rational emax = (top - 2 * gb) / (2 * N * (N + 1));
  if (emax <= 0) return std::nullopt;
  return std::min(slack, emax) / 2;
}

Rational T_bound_total(const GeometricContext& ctx, const LinearizationConfig& lin, i64 u, i64 v) {
  if (!certifiable(case_classify(ctx, lin))) throw Error("hypotheses violated");
  const Rational U = qi(u), V = qi(v), d = qi(ctx.d), n(ctx.n);
  return (L0(ctx, lin) - lin.epsilon) * U * U * V * V + (n + Rational(7, 2) * d) * U * V * V + (n + 3 * d) * V * V;
}

Rational Tvir_case_bound(const MultFiltration& mf, const LinearizationConfig& lin) {
  const GeometricContext& ctx = mf.base.ctx;
  const Case c = case_classify(ctx, lin);
  if (!certifiable(c)) throw Error("hypotheses violated");
  const Rational U = qi(mf.u), V = qi(mf.v), d = qi(ctx.d);
  Rational lead;
  if (c == Case::A)
    lead = L0(ctx, lin) - lin.epsilon;
  else
    lead = 1 + (Rational(ctx.g) - Rational(3, 2) + lin.gamma_b()) / qi(ctx.N);
  const auto tables = jump_tables(mf.base);
  Rational s = 0;
  for (int i = 0; i < ctx.q; ++i) s += lin.gamma * mf.base.B[i] * mf.base.r[tables[i].j.front()];
  return lead * U * U * V * V + s * (2 * U * V * V + V * V) + (d * U * V + d * V - ctx.g + 1) * V * mf.r(0);
}

Rational criterion_rhs(const GeometricContext& ctx, const LinearizationConfig& lin, i64 u, i64 v) {
  const Rational U = qi(u), V = qi(v);
  return L0(ctx, lin) * (U * U * V * V + 2 * U * V * V + V * V) - Rational(ctx.g - 1) / qi(ctx.N + 1) * (U * V + V);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedStable: return "certified-stable";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::HypothesesViolated: return "hypotheses-violated";
  }
  return "?";
}

StabilityReport certify(const WeightedFiltration& f, const LinearizationConfig& lin, i64 u, i64 v) {
  const auto violations = validate(f, lin);
  if (!violations.empty()) {
    std::string msg = "invalid scenario: " + violations.front().what;
    if (violations.front().row >= 0) msg += " at row " + std::to_string(violations.front().row);
    throw Error(msg);
  }
  if (u < 1) throw Error("u must be positive");
  StabilityReport rep;
  rep.u = u;
  rep.v = v;
  rep.epsilon = lin.epsilon;
  rep.case_label = case_classify(f.ctx, lin);
  if (!certifiable(rep.case_label)) rep.hypothesis_failures.push_back(std::string("case ") + case_name(rep.case_label));
  for (std::size_t k = 0; k < lin.b.size(); ++k)
    if (lin.gamma * lin.b[k] >= Rational(1, 2))
      rep.hypothesis_failures.push_back("gamma b_" + std::to_string(k + 1) + " >= 1/2");

  const MultFiltration mf = build_tilde(f, u, v);
  rep.warnings = mf.warnings;
  const XTildeProfile xt = build_xtilde(mf, false);
  rep.A_bound = area_A_bound(xt);
  rep.A_vir = area_Avir(mf);
  rep.marked = marked_term(mf, lin);
  rep.T_vir = rep.A_vir + rep.marked;
  rep.delta_bound = delta_total_bound(f.ctx.d, u, v);
  rep.T_chain = rep.T_vir + rep.delta_bound;
  rep.T_direct = rep.A_bound + rep.marked;
  rep.T_sound = std::min(rep.T_chain, rep.T_direct);
  rep.rhs = criterion_rhs(f.ctx, lin, u, v);
  rep.margin = rep.rhs - rep.T_sound;
  rep.tail = tail_bound(f);

  if (certifiable(rep.case_label)) {
    rep.epsilon_max = epsilon_max(f.ctx, lin);
    if (rep.epsilon_max && lin.epsilon > *rep.epsilon_max) rep.warnings.push_back("epsilon exceeds epsilon_max");
    rep.T_vir_case_bound = Tvir_case_bound(mf, lin);
    rep.T_bound = T_bound_total(f.ctx, lin, u, v);
    rep.bound_margin = rep.rhs - *rep.T_bound;
    CreepMode mode = CreepMode::Plain;
    if (rep.case_label == Case::B) mode = CreepMode::StrengthenedB;
    if (rep.case_label == Case::C) mode = CreepMode::StrengthenedC;
    rep.creep = creep_check(f, lin, mode);
    if (rep.case_label == Case::B) rep.tail = tail_bound_B(f, lin);
    if (rep.case_label == Case::C) rep.tail = tail_bound_C(f);
  } else {
    rep.creep = creep_check(f, lin, CreepMode::Plain);
  }

  if (!rep.hypothesis_failures.empty())
    rep.verdict = Verdict::HypothesesViolated;
  else if (rep.creep.holds && rep.margin > 0)
    rep.verdict = Verdict::CertifiedStable;
  else
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

Rational UQuadratic::operator()(i64 u) const {
  const Rational U = qi(u);
  return a2 * U * U + a1 * U + a0;
}

UQuadratic threshold_quadratic(const GeometricContext& ctx, const LinearizationConfig& lin) {
  const Rational gb = lin.gamma_b();
  const Rational N1 = qi(ctx.N + 1);
  const Rational d = qi(ctx.d);
  UQuadratic p;
  p.a2 = lin.epsilon;
  p.a1 = 2 + (Rational(2 * ctx.g - 2) + 2 * gb) / N1 - 2 * gb - Rational(7, 2) * d;
  p.a0 = 1 + (Rational(ctx.g - 1) + gb) / N1 - 2 * gb - Rational(7, 2) * d;
  return p;
}

i64 u0_of(const GeometricContext& ctx, const LinearizationConfig& lin) {
  if (lin.epsilon <= 0) throw Error("epsilon must be positive");
  const UQuadratic p = threshold_quadratic(ctx, lin);
  // p is increasing from the vertex on, so the first positive value past it
  // starts the positive tail.
  i64 lo = std::max<i64>(1, to_i64(ceil_q(-p.a1 / (2 * p.a2))));
  if (p(lo) > 0) return lo;
  i64 step = 1;
  i64 hi = lo + step;
  while (!(p(hi) > 0)) {
    lo = hi;
    step = checked_mul(step, 2);
    hi = checked_add(lo, step);
  }
  while (hi - lo > 1) {
    const i64 mid = lo + (hi - lo) / 2;
    if (p(mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

i64 v0_of(const GeometricContext& ctx, const LinearizationConfig& lin, i64 u) {
  const Rational pu = threshold_quadratic(ctx, lin)(u);
  if (pu <= 0) throw Error("u below threshold");
  const Rational qu = Rational(ctx.g - 1) / qi(ctx.N + 1) * qi(u + 1);
  if (qu < 0) return 1;
  return std::max<i64>(1, to_i64(floor_q(qu / pu)) + 1);
}

Thresholds find_thresholds(const WeightedFiltration& f, const LinearizationConfig& lin) {
  if (lin.epsilon <= 0) throw Error("epsilon must be positive");
  if (!certifiable(case_classify(f.ctx, lin))) throw Error("hypotheses violated");
  Thresholds out;
  out.u0 = u0_of(f.ctx, lin);
  out.v0 = v0_of(f.ctx, lin, out.u0);
  out.v_gotzmann = gotzmann_v0(f.ctx.d, f.ctx.g, out.u0);
  for (i64 u : {out.u0, out.u0 + 5, 2 * out.u0}) {
    const i64 v = v0_of(f.ctx, lin, u);
    out.witnesses.push_back({u, v, certify(f, lin, u, v)});
  }
  return out;
}

}  // namespace gitstab
