#include "gitstab/virtual_profile.hpp"

#include "gitstab/xtilde_profile.hpp"

namespace gitstab {

namespace {

Rational qi(i64 x) { return Rational(static_cast<long>(x)); }

}  // namespace

Rational f_i(const MultFiltration& mf, int k, int i) {
  const int nt = mf.last();
  if (k < 0 || k > nt) throw Error("row index out of range");
  if (k == 0) return 0;
  if (k == nt) return qi(mf.ct(nt, i));
  const CellCaseInfo info = case_of(mf, k, i);
  switch (info.kind) {
    case CellCase::Zero:
      return 0;
    case CellCase::I:
      return qi(mf.ct(k, i));
    default: {
      const Rational& rs = mf.r_tilde[info.s];
      const Rational& rt = mf.r_tilde[info.t];
      const Rational lambda = (mf.r_tilde[k] - rt) / (rs - rt);
      return lambda * qi(mf.ct(info.s, i)) + (1 - lambda) * qi(mf.ct(info.t, i));
    }
  }
}

Rational f_total(const MultFiltration& mf, int k) {
  Rational s = 0;
  for (int i = 0; i < mf.points(); ++i) s += f_i(mf, k, i);
  return s;
}

std::vector<Vertex> virtual_vertices(const MultFiltration& mf) {
  std::vector<Vertex> out;
  for (int k = 0; k <= mf.last(); ++k) out.push_back({f_total(mf, k), mf.r_tilde[k]});
  return out;
}

i64 terminal_dim(const MultFiltration& mf) {
  return hilbert_dim(mf) - checked_mul(checked_mul(mf.u, mf.v), mf.degree(mf.last()));
}

Rational area_Avir(const MultFiltration& mf) {
  const auto verts = virtual_vertices(mf);
  Rational area = 0;
  for (std::size_t k = 0; k + 1 < verts.size(); ++k)
    area += Rational(1, 2) * (verts[k + 1].codim - verts[k].codim) * (verts[k + 1].weight + verts[k].weight);
  return area + qi(terminal_dim(mf)) * qi(mf.v) * mf.r(0);
}

CellArea area_Avir_cell(const MultFiltration& mf, int k, int i) {
  const CellCaseInfo info = case_of(mf, k, i);
  CellArea out;
  if (info.kind == CellCase::Zero) return out;
  const Rational mid = Rational(1, 2) * (mf.r(k + 1) + mf.r(k));
  Rational dc;
  if (info.kind == CellCase::I) {
    dc = qi(mf.c(k + 1, i) - mf.c(k, i));
  } else {
    const Rational zeta = (mf.r(k) - mf.r(k + 1)) / (mf.r(info.s) - mf.r(info.t));
    dc = qi(mf.c(info.t, i) - mf.c(info.s, i)) * zeta;
  }
  out.u2v2 = mid * dc;
  out.uv2 = mf.r(0) * dc;
  const Rational u(static_cast<long>(mf.u)), v(static_cast<long>(mf.v));
  out.value = u * u * v * v * out.u2v2 + u * v * v * out.uv2;
  return out;
}

Rational marked_term(const MultFiltration& mf, const LinearizationConfig& lin) {
  const auto tables = jump_tables(mf.base);
  Rational s = 0;
  for (int i = 0; i < mf.points(); ++i) s += mf.base.B[i] * mf.base.r[tables[i].j.front()];
  const Rational m(static_cast<long>(mf.u + 1)), v(static_cast<long>(mf.v));
  return m * m * v * v * lin.gamma * s;
}

Rational Tvir_bound(const MultFiltration& mf, const LinearizationConfig& lin) {
  return area_Avir(mf) + marked_term(mf, lin);
}

}  // namespace gitstab
