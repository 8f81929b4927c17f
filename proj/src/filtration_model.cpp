#include "gitstab/filtration_model.hpp"

#include <algorithm>
#include <map>

namespace gitstab {

Rational LinearizationConfig::b_total() const {
  Rational s = 0;
  for (const auto& x : b) s += x;
  return s;
}

i64 WeightedFiltration::row_degree(int j) const {
  i64 s = 0;
  for (i64 m : c.at(j)) s += m;
  return s;
}

i64 WeightedFiltration::codim(int j) const {
  i64 s = 0;
  for (int t = 0; t < j; ++t) s += z[t];
  return s;
}

std::vector<Rational> normalize_weights(std::vector<Rational> s) {
  if (s.empty()) throw Error("empty weight vector");
  std::sort(s.begin(), s.end());
  Rational total = 0;
  bool all_zero = true;
  for (const auto& x : s) {
    total += x;
    if (x != 0) all_zero = false;
  }
  if (all_zero) throw Error("trivial 1-PS");
  if (total != 0) throw Error("not special-linear");
  const std::size_t n = s.size();
  const Rational scale = Rational(static_cast<long>(n)) * abs(s.front());
  std::vector<Rational> r(n);
  for (std::size_t j = 0; j < n; ++j) r[j] = (s[n - 1 - j] - s.front()) / scale;
  return r;
}

StageWeights merge_slots(const std::vector<Rational>& slot_weights) {
  StageWeights out;
  for (const auto& w : slot_weights) {
    if (!out.r.empty() && out.r.back() == w) {
      ++out.z.back();
    } else {
      out.r.push_back(w);
      out.z.push_back(1);
    }
  }
  return out;
}

std::vector<Rational> expand_slots(const WeightedFiltration& f) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < f.z.size(); ++j)
    for (i64 t = 0; t < f.z[j]; ++t) out.push_back(f.r[j]);
  return out;
}

std::vector<Violation> validate_context(const GeometricContext& ctx, const LinearizationConfig& lin) {
  std::vector<Violation> v;
  if (ctx.g < 0) v.push_back({-1, "genus must be nonnegative"});
  if (ctx.N < 0) v.push_back({-1, "N must be nonnegative"});
  if (ctx.n < 0) v.push_back({-1, "number of marked points must be nonnegative"});
  if (ctx.complete && ctx.N != ctx.d - ctx.g)
    v.push_back({-1, "complete nonspecial embedding requires N = d - g"});
  if (ctx.q > ctx.d) v.push_back({-1, "more base points than the degree allows"});
  if (static_cast<int>(lin.b.size()) != ctx.n) v.push_back({-1, "b must have one entry per marked point"});
  for (const auto& x : lin.b)
    if (x < 0 || x > 1) v.push_back({-1, "b entries must lie in [0,1]"});
  if (lin.gamma <= 0) v.push_back({-1, "gamma must be positive"});
  if (lin.epsilon <= 0) v.push_back({-1, "epsilon must be positive"});
  return v;
}

i64 row_bound(const WeightedFiltration& f, int j) {
  const i64 cum = f.codim(j);
  const i64 rr = f.ctx.N - f.ctx.g;
  if (cum <= rr) return cum;
  return 2 * cum - rr - f.ctx.h1;
}

std::vector<Violation> validate(const WeightedFiltration& f, const LinearizationConfig& lin) {
  std::vector<Violation> v = validate_context(f.ctx, lin);
  const int rows = static_cast<int>(f.z.size());
  if (rows == 0) {
    v.push_back({-1, "filtration has no stages"});
    return v;
  }
  if (static_cast<int>(f.r.size()) != rows) v.push_back({-1, "r and z differ in length"});
  if (static_cast<int>(f.c.size()) != rows) v.push_back({-1, "c must have one row per stage"});
  if (static_cast<int>(f.B.size()) != f.ctx.q) v.push_back({-1, "B must have q entries"});
  for (int j = 0; j < static_cast<int>(f.c.size()); ++j)
    if (static_cast<int>(f.c[j].size()) != f.ctx.q) v.push_back({j, "c row has wrong width"});
  if (!v.empty()) return v;

  i64 zsum = 0;
  for (int j = 0; j < rows; ++j) {
    if (f.z[j] < 1) v.push_back({j, "stage multiplicity must be positive"});
    zsum += f.z[j];
  }
  if (zsum != f.ctx.N + 1) v.push_back({-1, "stage multiplicities must sum to N + 1"});
  for (int j = 0; j + 1 < rows; ++j)
    if (f.r[j] <= f.r[j + 1]) v.push_back({j + 1, "weights not strictly decreasing"});
  if (f.r.back() != 0) v.push_back({rows - 1, "last weight must be 0"});
  Rational mass = 0;
  for (int j = 0; j < rows; ++j) mass += Rational(static_cast<long>(f.z[j])) * f.r[j];
  if (mass != 1) v.push_back({-1, "weights not normalized"});

  const int q = f.ctx.q;
  for (int i = 0; i < q; ++i)
    if (f.c[0][i] != 0) v.push_back({0, "row 0 must have empty base locus"});
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < q; ++i) {
      if (f.c[j][i] < 0) v.push_back({j, "negative multiplicity"});
      if (j > 0 && f.c[j][i] < f.c[j - 1][i]) v.push_back({j, "multiplicities not nondecreasing"});
    }
    const i64 cum = f.codim(j);
    const i64 bound = row_bound(f, j);
    if (f.row_degree(j) > bound) {
      if (cum <= f.ctx.N - f.ctx.g)
        v.push_back({j, "Riemann-Roch bound exceeded"});
      else
        v.push_back({j, "Clifford bound exceeded"});
    }
  }

  std::map<Rational, int> available;
  for (const auto& x : lin.b) ++available[x];
  for (int i = 0; i < q; ++i) {
    if (f.B[i] == 0) continue;
    auto it = available.find(f.B[i]);
    if (it == available.end() || it->second == 0)
      v.push_back({-1, "B entry is not an unused marked point weight"});
    else
      --it->second;
  }
  return v;
}

Regions regions(const WeightedFiltration& f) {
  const i64 rr = f.ctx.N - f.ctx.g;
  int j_rr = -1;
  for (int j = 0; j <= f.last(); ++j)
    if (f.codim(j) <= rr) j_rr = j;
  return {j_rr, j_rr + 1};
}

char case_name(Case c) { return static_cast<char>('A' + static_cast<int>(c)); }

Case case_classify(const GeometricContext& ctx, const LinearizationConfig& lin) {
  if (ctx.N == 0) throw Error("degenerate projective space");
  const Rational N(static_cast<long>(ctx.N));
  if (ctx.n == 0) return ctx.N >= 2 * static_cast<i64>(ctx.g) - 2 ? Case::C : Case::D;
  const Rational x = Rational(ctx.g - 1) / N + lin.epsilon * (N + 1);
  const Rational gb = lin.gamma_b();
  if (gb >= x) return Case::A;
  return x < Rational(1, 2) ? Case::B : Case::E;
}

ModuliSetting moduli_context(int g, const std::vector<Rational>& a, i64 nu) {
  if (nu < 1) throw Error("nu must be positive");
  Rational w = 2 * g - 2;
  for (const auto& x : a) w += x;
  if (w <= 0) throw Error("unstable weight data");
  const Rational d = Rational(static_cast<long>(nu)) * w;
  if (d.get_den() != 1) throw Error("non-integral degree");
  ModuliSetting out;
  out.ctx.g = g;
  out.ctx.d = to_i64(d.get_num());
  out.ctx.N = out.ctx.d - g;
  out.ctx.n = static_cast<int>(a.size());
  out.ctx.q = 0;
  out.lin.gamma = Rational(static_cast<long>(nu), static_cast<long>(2 * nu - 1));
  out.lin.gamma.canonicalize();
  out.lin.b = a;
  out.lin.nu = nu;
  out.lin.a = a;
  return out;
}

}  // namespace gitstab
