#include "gitstab/xtilde_profile.hpp"

#include "gitstab/span_calculus.hpp"

namespace gitstab {

namespace {

Rational stage_weight(const MultFiltration& mf, int k, i64 w) {
  const Rational v(static_cast<long>(mf.v));
  return v * (Rational(static_cast<long>(mf.u - w)) * mf.r(k) + Rational(static_cast<long>(w)) * mf.r(k + 1) + mf.r(0));
}

MonomialSpace monomial(const MultFiltration& mf, int ks, int kt, i64 a, i64 b) {
  MonomialSpace sp;
  sp.s_row = mf.src[ks];
  sp.t_row = mf.src[kt];
  sp.a = a;
  sp.b = b;
  sp.v = mf.v;
  for (int i = 0; i < mf.points(); ++i)
    sp.mult.push_back(checked_mul(mf.v, checked_add(checked_mul(a, mf.c(ks, i)), checked_mul(b, mf.c(kt, i)))));
  const Rational v(static_cast<long>(mf.v));
  sp.weight = v * (Rational(static_cast<long>(a)) * mf.r(ks) + Rational(static_cast<long>(b)) * mf.r(kt) + mf.r(0));
  return sp;
}

}  // namespace

std::string MonomialSpace::notation() const {
  return "(V_" + std::to_string(s_row) + "^" + std::to_string(a) + " V_" + std::to_string(t_row) + "^" +
         std::to_string(b) + " V_0)^" + std::to_string(v);
}

i64 W_of(const MultFiltration& mf, int k, i64 w, int i) {
  const CellCaseInfo info = case_of(mf, k, i);
  if (info.kind == CellCase::Zero || info.kind == CellCase::I) throw Error("W undefined");
  const Rational& rs = mf.r(info.s);
  const Rational& rt = mf.r(info.t);
  if (rs == rt) throw Error("degenerate bracket");
  const Rational num = Rational(static_cast<long>(mf.u)) * (rs - mf.r(k)) + Rational(static_cast<long>(w)) * (mf.r(k) - mf.r(k + 1));
  return to_i64(ceil_q(num / (rs - rt)));
}

i64 xtilde_contrib(const MultFiltration& mf, int k, i64 w, int i) {
  if (k == 0 && w == 0) return 0;
  const CellCaseInfo info = case_of(mf, k, i);
  switch (info.kind) {
    case CellCase::Zero:
      return 0;
    case CellCase::I:
      return checked_mul(mf.v, checked_add(checked_mul(mf.u - w, mf.c(k, i)), checked_mul(w, mf.c(k + 1, i))));
    default: {
      const i64 W = W_of(mf, k, w, i);
      return checked_mul(mf.v, checked_add(checked_mul(mf.u - W, mf.c(info.s, i)), checked_mul(W, mf.c(info.t, i))));
    }
  }
}

i64 hilbert_dim(const MultFiltration& mf) {
  return checked_mul(mf.base.ctx.d, mf.m()) - mf.base.ctx.g + 1;
}

Rational StepProfile::area() const {
  Rational total = 0;
  for (std::size_t s = 0; s < codim.size(); ++s) {
    const i64 next = s + 1 < codim.size() ? codim[s + 1] : total_dim;
    total += weight[s] * Rational(static_cast<long>(next - codim[s]));
  }
  return total;
}

StepProfile XTildeProfile::steps() const {
  StepProfile p;
  for (const auto& st : stages) {
    p.codim.push_back(st.codim_bound);
    p.weight.push_back(st.weight);
  }
  p.total_dim = total_dim;
  return p;
}

XTildeProfile build_xtilde(const MultFiltration& mf, bool with_members) {
  XTildeProfile xt;
  xt.total_dim = hilbert_dim(mf);
  const int nt = mf.last();
  const int q = mf.points();
  for (int k = 0; k < nt; ++k) {
    for (i64 w = 0; w < mf.u; ++w) {
      Stage st;
      st.k = k;
      st.w = w;
      st.weight = stage_weight(mf, k, w);
      if (with_members) st.members.push_back(monomial(mf, k, k + 1, mf.u - w, w));
      for (int i = 0; i < q; ++i) {
        const i64 x = xtilde_contrib(mf, k, w, i);
        st.contrib.push_back(x);
        st.codim_bound = checked_add(st.codim_bound, x);
        if (!with_members || (k == 0 && w == 0)) continue;
        const CellCaseInfo info = case_of(mf, k, i);
        if (info.kind == CellCase::Zero || info.kind == CellCase::I) continue;
        const i64 W = W_of(mf, k, w, i);
        st.members.push_back(monomial(mf, info.s, info.t, mf.u - W, W));
      }
      xt.stages.push_back(std::move(st));
    }
  }
  Stage term;
  term.k = nt;
  term.terminal = true;
  term.weight = Rational(static_cast<long>(mf.v)) * mf.r(0);
  for (int i = 0; i < q; ++i) {
    term.contrib.push_back(mf.ct(nt, i));
    term.codim_bound = checked_add(term.codim_bound, mf.ct(nt, i));
  }
  if (with_members) term.members.push_back(monomial(mf, nt, nt, mf.u, 0));
  xt.stages.push_back(std::move(term));

  if (with_members && q > 0) {
    GeometricContext ctx = mf.base.ctx;
    for (auto& st : xt.stages) {
      if (st.members.size() > kOracleLimit) continue;
      std::vector<DivisorSeries> series;
      for (const auto& sp : st.members) series.push_back({sp.mult, mf.m(), sp.weight});
      if (degree_hypothesis(series, ctx)) st.codim_exact = span_codim_oracle(series);
    }
  }
  return xt;
}

Rational area_A_bound(const XTildeProfile& xt) { return xt.steps().area(); }

StepProfile baseline_profile(const MultFiltration& mf) {
  StepProfile p;
  p.total_dim = hilbert_dim(mf);
  const int nt = mf.last();
  for (int k = 0; k < nt; ++k) {
    for (i64 w = 0; w < mf.u; ++w) {
      p.codim.push_back(checked_mul(mf.v, checked_add(checked_mul(mf.u - w, mf.degree(k)), checked_mul(w, mf.degree(k + 1)))));
      p.weight.push_back(stage_weight(mf, k, w));
    }
  }
  p.codim.push_back(checked_mul(checked_mul(mf.u, mf.v), mf.degree(nt)));
  p.weight.push_back(Rational(static_cast<long>(mf.v)) * mf.r(0));
  return p;
}

}  // namespace gitstab
