#include "gitstab/mult_filtration.hpp"

namespace gitstab {

i64 gotzmann_v0(i64 d, int g, i64 u) {
  const Integer du = Integer(static_cast<long>(d)) * Integer(static_cast<long>(u + 1));
  Rational half(du * du - du, 2);
  half.canonicalize();
  const Rational val = half - Rational(g) + 1;
  return to_i64(ceil_q(val));
}

MultFiltration build_tilde(const WeightedFiltration& base, i64 u, i64 v) {
  if (u < 0 || v < 1) throw Error("u must be nonnegative and v positive");
  MultFiltration mf;
  mf.base = base;
  mf.u = u;
  mf.v = v;
  const int nbar = base.last();
  // A run of rows sharing one base locus collapses onto its lowest-weight member.
  mf.src.push_back(0);
  for (int j = 1; j < nbar; ++j)
    if (base.row_degree(j) < base.row_degree(j + 1)) mf.src.push_back(j);
  if (nbar > 0) mf.src.push_back(nbar);

  const i64 uv = checked_mul(u, v);
  const Rational uvq(static_cast<long>(uv)), vq(static_cast<long>(v));
  for (int j : mf.src) {
    mf.r_tilde.push_back(uvq * base.r[j] + vq * base.r[0]);
    std::vector<i64> row;
    for (i64 x : base.c[j]) row.push_back(checked_mul(uv, x));
    mf.c_tilde.push_back(std::move(row));
  }
  if (u >= 1 && v < gotzmann_v0(base.ctx.d, base.ctx.g, u))
    mf.warnings.push_back("v below the Gotzmann bound");
  if (u == 0) mf.warnings.push_back("degenerate u = 0");
  return mf;
}

const char* cell_case_name(CellCase c) {
  switch (c) {
    case CellCase::Zero: return "Zero";
    case CellCase::I: return "I";
    case CellCase::II: return "II";
    case CellCase::III: return "III";
    case CellCase::IV: return "IV";
  }
  return "?";
}

CellCaseInfo case_of(const MultFiltration& mf, int k, int i) {
  const int nt = mf.last();
  if (k < 0 || k >= nt) throw Error("row index out of range");
  auto ct = [&](int x) { return mf.ct(x > nt ? nt : x, i); };
  auto jumps = [&](int x) { return x < nt && ct(x) < ct(x + 1); };

  CellCaseInfo info;
  if (ct(k + 1) == 0) return info;
  const bool up_here = ct(k) < ct(k + 1);
  const bool up_next = ct(k + 1) < ct(k + 2);
  if (up_here && up_next) {
    info.kind = CellCase::I;
    return info;
  }
  info.kind = up_here ? CellCase::IV : (up_next ? CellCase::III : CellCase::II);
  if (up_here) {
    info.s = k;
  } else {
    for (int x = k - 1; x >= 0; --x)
      if (jumps(x)) {
        info.s = x;
        break;
      }
    if (info.s < 0) throw Error("multiplicity rises without an earlier jump");
  }
  if (info.kind == CellCase::III) {
    info.t = k + 1;
  } else {
    info.t = nt;
    for (int x = k + 1; x < nt; ++x)
      if (jumps(x)) {
        info.t = x;
        break;
      }
  }
  return info;
}

std::vector<JumpTable> jump_tables(const WeightedFiltration& f) {
  const int nbar = f.last();
  std::vector<JumpTable> out(f.ctx.q);
  for (int i = 0; i < f.ctx.q; ++i) {
    for (int j = 0; j < nbar; ++j)
      if (f.c[j][i] < f.c[j + 1][i]) out[i].j.push_back(j);
    out[i].j.push_back(nbar);
  }
  return out;
}

}  // namespace gitstab
