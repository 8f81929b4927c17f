// Acceptance run: one PASS/FAIL line per criterion.
//
// A criterion that fails only through a documented misprint in a closed form
// is still reported as FAIL. It is tagged "erratum" when the failure has
// exactly the documented shape and the corrected form holds everywhere; such
// lines do not change the exit status. Any other failure does.

#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gitstab/discrepancy.hpp"
#include "gitstab/io.hpp"
#include "gitstab/span_calculus.hpp"
#include "gitstab/sweep.hpp"
#include "gitstab/virtual_profile.hpp"
#include "support.hpp"

using namespace gitstab;
using support::Stopwatch;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetGolden = 1.0;
constexpr double kBudgetClosedForms = 1.0;
constexpr double kBudgetSpans = 30.0;
constexpr double kBudgetIdentities = 10.0;
constexpr double kBudgetDiscrepancy = 60.0;
constexpr double kBudgetCreep = 60.0;
constexpr double kBudgetThresholds = 60.0;

struct Outcome {
  bool pass = true;
  bool erratum = false;
  std::string detail;
};

Rational qi(i64 x) { return Rational(static_cast<long>(x)); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// 1. Stage table for Example 1 at u = 3, v = 5.
Outcome golden_table() {
  Outcome out;
  const auto st = support::ex1_moduli();
  const auto f = example1(st.ctx, st.lin);
  const auto mf = build_tilde(f, 3, 5);
  const auto xt = build_xtilde(mf);
  const std::vector<i64> codims{0, 5, 5, 5, 15, 15, 20, 30, 40, 45};
  const std::vector<Rational> weights{qi(10),          q(55, 6), q(50, 6), q(45, 6),
                                      q(40, 6), q(35, 6), qi(5),           q(25, 6),
                                      q(20, 6), q(15, 6)};
  const auto ref = oracle::xtilde_steps(support::rows_of(f), 3, 5);
  if (xt.stages.size() != codims.size() || ref.size() != codims.size()) {
    out.pass = false;
    out.detail = "stage count " + std::to_string(xt.stages.size());
    return out;
  }
  int exact_mismatch = 0;
  for (std::size_t s = 0; s < codims.size(); ++s) {
    const auto& stage = xt.stages[s];
    if (stage.codim_bound != codims[s] || stage.weight != weights[s] || ref[s].codim != codims[s] ||
        ref[s].weight != weights[s]) {
      out.pass = false;
      out.detail = "row " + std::to_string(s) + " codim " + std::to_string(stage.codim_bound) + " weight " +
                   to_string(stage.weight);
      return out;
    }
    if (stage.codim_exact && *stage.codim_exact != codims[s]) ++exact_mismatch;
  }
  if (exact_mismatch) {
    out.pass = false;
    out.detail = std::to_string(exact_mismatch) + " rows where the span codimension differs";
    return out;
  }
  out.detail = "10 rows exact, span codimensions agree";
  return out;
}

// 2. A^vir and T^vir closed forms for Example 1.
Outcome closed_forms() {
  Outcome out;
  int cases = 0, avir_bad = 0, tvir_bad = 0, tvir_shape_ok = 0;
  for (auto [g, d] : std::vector<std::pair<int, i64>>{{0, 5}, {1, 8}, {2, 22}, {3, 17}, {5, 40}}) {
    const auto st = support::ex1_setting(g, d);
    const auto f = example1(st.ctx, st.lin);
    for (auto [u, v] : std::vector<std::pair<i64, i64>>{{3, 5}, {20, 5}, {10, 7}}) {
      ++cases;
      const auto mf = build_tilde(f, u, v);
      const Rational U = qi(u), V = qi(v), D = qi(d), G = qi(g);
      const Rational avir_printed = U * U * V * V / 2 + D * U * V * V / 2 + D * V * V / 2 - (G - 1) * V / 2;
      const Rational tvir_printed =
          U * U * V * V + (D / 2 + 1) * U * V * V + (D / 2 + 1) * V * V - (G - 1) * V / 2;
      const Rational avir = area_Avir(mf);
      const Rational avir_ref = oracle::polyline_area(support::rows_of(f), u, v);
      const Rational tvir = Tvir_bound(mf, st.lin);
      if (avir != avir_printed || avir_ref != avir_printed) ++avir_bad;
      if (tvir != tvir_printed) {
        ++tvir_bad;
        // Documented shape: the v^2 coefficient is d/2 + 1/2, so the printed
        // form is high by exactly v^2 / 2, and T^vir = A^vir + (u+1)^2 v^2 / 2.
        if (tvir_printed - tvir == V * V / 2 && tvir == avir_ref + (U + 1) * (U + 1) * V * V / 2) ++tvir_shape_ok;
      }
    }
  }
  out.detail = "A^vir " + std::to_string(cases - avir_bad) + "/" + std::to_string(cases) + " exact; T^vir printed " +
               std::to_string(cases - tvir_bad) + "/" + std::to_string(cases);
  if (avir_bad || tvir_bad) out.pass = false;
  if (avir_bad == 0 && tvir_bad > 0 && tvir_shape_ok == tvir_bad) {
    out.erratum = true;
    out.detail += "; T^vir printed v^2 coefficient d/2+1 should read d/2+1/2, corrected form exact on all " +
                  std::to_string(cases);
  }
  return out;
}

// 3. Virtual vertices of Example 1.
Outcome vertices() {
  Outcome out;
  const auto st = support::ex1_moduli();
  const auto f = example1(st.ctx, st.lin);
  int checked = 0;
  for (auto [u, v] : std::vector<std::pair<i64, i64>>{{3, 5}, {20, 5}, {10, 7}, {1, 1}, {7, 12}}) {
    const auto mf = build_tilde(f, u, v);
    const auto vs = virtual_vertices(mf);
    const auto ref = oracle::virtual_polyline(support::rows_of(f), u, v);
    const Rational uv = qi(u * v);
    const std::vector<Rational> want{0, uv / 3, 7 * uv / 6, 3 * uv};
    if (vs.size() != 4 || ref.size() != 4) {
      out.pass = false;
      out.detail = "vertex count " + std::to_string(vs.size());
      return out;
    }
    for (int k = 0; k < 4; ++k) {
      if (vs[k].codim != want[k] || ref[k].codim != want[k] || vs[k].weight != ref[k].weight) {
        out.pass = false;
        out.detail = "u=" + std::to_string(u) + " v=" + std::to_string(v) + " vertex " + std::to_string(k) + " at " +
                     to_string(vs[k].codim);
        return out;
      }
    }
    ++checked;
  }
  out.detail = "(0, uv/3, 7uv/6, 3uv) exact at " + std::to_string(checked) + " (u,v) pairs";
  return out;
}

// 4. Leading coefficient of the baseline profile.
Outcome baseline() {
  Outcome out;
  const Rational want_A(3, 4), want_T(5, 4);
  for (i64 d : {13, 22, 102}) {
    const auto st = support::ex1_setting(2, d);
    const auto f = example1(st.ctx, st.lin);
    const auto rows = support::rows_of(f);
    auto A = [&](i64 u, i64 v) { return baseline_profile(build_tilde(f, u, v)).area(); };
    auto A_ref = [&](i64 u, i64 v) {
      return oracle::step_area(oracle::baseline_steps(rows, u, v), oracle::hilbert(rows, u, v));
    };
    auto T = [&](i64 u, i64 v) -> Rational { return A(u, v) + marked_term(build_tilde(f, u, v), st.lin); };
    const Rational a = oracle::leading_u2v2(A), a_ref = oracle::leading_u2v2(A_ref), t = oracle::leading_u2v2(T);
    if (a != want_A || a_ref != want_A || t != want_T) {
      out.pass = false;
      out.detail = "d=" + std::to_string(d) + " A lead " + to_string(a) + " T lead " + to_string(t);
      return out;
    }
  }
  // 1 + (g - 1 + gamma b) / (N + 1) with g = 2, gamma b = 3/2 drops below 5/4
  // from N = 10 on and decreases to 1.
  i64 first = -1;
  for (i64 N = 1; N <= 10000; ++N) {
    const Rational crit = 1 + (qi(1) + Rational(3, 2)) / qi(N + 1);
    if (want_T > crit && first < 0) first = N;
    if (first >= 0 && !(want_T > crit)) {
      out.pass = false;
      out.detail = "criterion exceeds 5/4 again at N=" + std::to_string(N);
      return out;
    }
  }
  out.detail = "A lead 3/4, T lead 5/4 at d in {13,22,102}; exceeds 1+(g-1+gamma b)/(N+1) for all N >= " +
               std::to_string(first);
  out.pass = first == 10;
  return out;
}

// 5. Trace rule against inclusion-exclusion.
Outcome spans() {
  Outcome out;
  i64 exhaustive = 0;
  const i64 top = 3;
  for (std::size_t q = 1; q <= 4; ++q) {
    // Every column: a diagonal value and off-diagonal values not below it.
    std::vector<std::vector<i64>> columns;
    std::vector<i64> col(q);
    std::function<void(std::size_t, i64)> fill = [&](std::size_t row, i64 diag) {
      if (row == q) {
        columns.push_back(col);
        return;
      }
      if (row == 0) {
        for (i64 x = 0; x <= top; ++x) {
          col[0] = x;
          fill(1, x);
        }
        return;
      }
      for (i64 x = diag; x <= top; ++x) {
        col[row] = x;
        fill(row + 1, diag);
      }
    };
    fill(0, 0);
    // col[0] holds the diagonal entry; it goes to row c of column c.
    std::vector<i64> m(q * q);
    std::vector<std::size_t> pick(q, 0);
    while (true) {
      for (std::size_t c = 0; c < q; ++c) {
        const auto& cv = columns[pick[c]];
        std::size_t off = 1;
        for (std::size_t r = 0; r < q; ++r) m[r * q + c] = r == c ? cv[0] : cv[off++];
      }
      const i64 t = span_codim_trace(m.data(), q, true);
      const i64 o = span_codim_oracle(m.data(), q, q);
      if (t != o) {
        out.pass = false;
        out.detail = "q=" + std::to_string(q) + " trace " + std::to_string(t) + " oracle " + std::to_string(o);
        return out;
      }
      ++exhaustive;
      std::size_t c = 0;
      while (c < q && ++pick[c] == columns.size()) pick[c++] = 0;
      if (c == q) break;
    }
  }

  std::mt19937_64 rng(20240517);
  i64 randomized = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t q = 5 + trial % 2;
    std::vector<std::vector<i64>> m(q, std::vector<i64>(q));
    for (std::size_t c = 0; c < q; ++c) {
      const i64 diag = std::uniform_int_distribution<i64>(0, 6)(rng);
      for (std::size_t r = 0; r < q; ++r) m[r][c] = r == c ? diag : diag + std::uniform_int_distribution<i64>(0, 6)(rng);
    }
    std::vector<DivisorSeries> series;
    for (const auto& row : m) series.push_back({row, 10, Rational(0)});
    const i64 t = span_codim_trace(series, true);
    const i64 o = span_codim_oracle(series);
    const i64 ref = oracle::span_by_subsets(m);
    if (t != o || o != ref) {
      out.pass = false;
      out.detail = "random q=" + std::to_string(q) + " trace " + std::to_string(t) + " oracle " + std::to_string(o) +
                   " reference " + std::to_string(ref);
      return out;
    }
    ++randomized;
  }

  const std::vector<DivisorSeries> pair{{{2, 0, 0}, 1, Rational(0)}, {{1, 1, 0}, 1, Rational(0)}};
  const i64 small = span_codim_oracle(pair);
  const std::vector<DivisorSeries> diag{{{1, 1}, 1, Rational(0)}, {{2, 0}, 1, Rational(0)}};
  const i64 small_trace = span_codim_trace(diag, true);
  if (small != 1 || small_trace != 1) {
    out.pass = false;
    out.detail = "two-space example gave " + std::to_string(small) + " / " + std::to_string(small_trace);
    return out;
  }
  out.detail = std::to_string(exhaustive) + " exhaustive, " + std::to_string(randomized) +
               " random, two-space example = 2+2-3 = 1";
  return out;
}

// 6. Staircase identities over u <= 40 and 200 random (zeta, xi).
Outcome identities() {
  Outcome out;
  std::mt19937_64 rng(77);
  i64 cases = 0, first_bad = 0, lsum_bad = 0, corrected_bad = 0;
  for (int p = 0; p < 200; ++p) {
    const i64 den = std::uniform_int_distribution<i64>(2, 60)(rng);
    const i64 zn = std::uniform_int_distribution<i64>(1, den - 1)(rng);
    const i64 xn = std::uniform_int_distribution<i64>(0, den - zn)(rng);
    const Rational zeta(static_cast<long>(zn), static_cast<long>(den)), xi(static_cast<long>(xn), static_cast<long>(den));
    for (i64 u = 1; u <= 40; ++u) {
      ++cases;
      const auto a = staircase_count(u, zeta, xi);
      const auto b = weighted_staircase_sum(u, zeta, xi);
      const Integer ra = oracle::stair_count(u, zeta, xi), rb = oracle::stair_weighted(u, zeta, xi);
      if (a.brute != ra || b.brute != rb || a.corrected != ra || b.corrected != rb) ++corrected_bad;
      if (a.printed != ra) ++first_bad;
      if (b.printed != rb) ++lsum_bad;
    }
  }
  out.pass = first_bad == 0 && lsum_bad == 0 && corrected_bad == 0;
  out.detail = "printed count identity fails " + std::to_string(first_bad) + "/" + std::to_string(cases) +
               ", printed l-sum fails " + std::to_string(lsum_bad) + "/" + std::to_string(cases);
  if (!out.pass && corrected_bad == 0) {
    out.erratum = true;
    out.detail += "; exact forms ceil(<u xi>+u zeta)-ceil(<u xi>) and sum floor((l-<u xi>)/zeta) hold on all";
  } else if (corrected_bad) {
    out.detail += "; exact forms fail " + std::to_string(corrected_bad);
  }
  return out;
}

// 7. A - A^vir against 7/2 d u v^2 + 3 d v^2.
Outcome discrepancy() {
  Outcome out;
  auto check = [&](const WeightedFiltration& f, i64 u, i64 v, std::string& why) {
    const auto mf = build_tilde(f, u, v);
    const auto rows = support::rows_of(f);
    const Rational A = area_A_bound(build_xtilde(mf, false));
    const Rational A_ref = oracle::step_area(oracle::xtilde_steps(rows, u, v), oracle::hilbert(rows, u, v));
    const Rational Avir = area_Avir(mf);
    const Rational Avir_ref = oracle::polyline_area(rows, u, v);
    if (A != A_ref || Avir != Avir_ref) {
      why = "engine and reference areas differ";
      return false;
    }
    if (A - Avir > delta_total_bound(f.ctx.d, u, v)) {
      why = "bound exceeded by " + to_string(A - Avir - delta_total_bound(f.ctx.d, u, v));
      return false;
    }
    return true;
  };
  std::string why;
  const auto st = support::ex1_moduli();
  const auto ex1 = example1(st.ctx, st.lin);
  int n = 0;
  for (i64 u = 3; u <= 15; ++u)
    for (i64 v : {5, 12, 20}) {
      if (!check(ex1, u, v, why)) {
        out.pass = false;
        out.detail = "Example 1 u=" + std::to_string(u) + " v=" + std::to_string(v) + ": " + why;
        return out;
      }
      ++n;
    }
  Rational worst_ratio = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto s = random_setting(seed);
    const auto f = random_admissible(s.ctx, s.lin, seed);
    const i64 u = 3 + static_cast<i64>(seed % 13), v = 5 + static_cast<i64>((seed * 7) % 16);
    if (!check(f, u, v, why)) {
      out.pass = false;
      out.detail = "seed " + std::to_string(seed) + ": " + why;
      return out;
    }
    const auto mf = build_tilde(f, u, v);
    const Rational ratio = (area_A_bound(build_xtilde(mf, false)) - area_Avir(mf)) / delta_total_bound(f.ctx.d, u, v);
    if (ratio > worst_ratio) worst_ratio = ratio;
  }
  out.detail = std::to_string(n) + " Example 1 points and 200 random scenarios; largest (A-A^vir)/bound " +
               fmt("%.4f", to_double(worst_ratio));
  return out;
}

// 8. Creep and tail inequalities.
Outcome creep() {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto s = random_setting(seed + 1000);
    const auto f = random_admissible(s.ctx, s.lin, seed + 1000);
    // Reference left side from the raw multiplicity table.
    Rational lhs = 0;
    for (int i = 0; i < f.ctx.q; ++i) {
      std::vector<int> J;
      for (int j = 0; j < f.last(); ++j)
        if (f.c[j][i] < f.c[j + 1][i]) J.push_back(j);
      if (J.empty()) continue;
      J.push_back(f.last());
      lhs += s.lin.gamma * f.B[i] * f.r[J[0]];
      for (std::size_t l = 0; l + 1 < J.size(); ++l) {
        const i64 below = l == 0 ? 0 : f.c[J[l - 1]][i];
        lhs += q(f.c[J[l + 1]][i] - below, 2) * f.r[J[l]];
      }
    }
    const auto cr = creep_check(f, s.lin, CreepMode::Plain);
    const auto tb = tail_bound(f);
    if (cr.lhs != lhs || !cr.holds || !tb.holds) {
      out.pass = false;
      out.detail = "seed " + std::to_string(seed + 1000) + (cr.lhs != lhs ? ": left side differs" : ": inequality fails");
      return out;
    }
  }
  int equalities = 0;
  for (int g = 1; g <= 6; ++g) {
    WeightedFiltration f;
    f.ctx.g = g;
    f.ctx.d = 3 * g + 5;
    f.ctx.N = f.ctx.d - g;
    f.z = {f.ctx.N, 1};
    f.r = {Rational(1) / qi(f.ctx.N), Rational(0)};
    f.c = {{}, {}};
    const auto tb = tail_bound(f);
    if (tb.tail != tb.bound) {
      out.pass = false;
      out.detail = "no equality at the uniform vertex for g=" + std::to_string(g);
      return out;
    }
    ++equalities;
  }
  out.detail = "500 random filtrations, creep and tail hold; tail equality at the uniform vertex for g=1.." +
               std::to_string(equalities);
  return out;
}

// 9. Thresholds for Example 1 in Case A.
Outcome thresholds() {
  Outcome out;
  const auto st = support::ex1_moduli();
  const auto f = example1(st.ctx, st.lin);
  if (case_classify(st.ctx, st.lin) != Case::A) {
    out.pass = false;
    out.detail = "context is not Case A";
    return out;
  }
  const auto t = find_thresholds(f, st.lin);
  // Reference quadratic from its coefficients.
  const Rational gb = st.lin.gamma_b(), N1 = qi(st.ctx.N + 1), d = qi(st.ctx.d), g = qi(st.ctx.g);
  auto P = [&](i64 u) -> Rational {
    const Rational U = qi(u);
    return st.lin.epsilon * U * U + (2 + (2 * g - 2 + 2 * gb) / N1 - 2 * gb - Rational(7, 2) * d) * U +
           (1 + (g - 1 + gb) / N1 - 2 * gb - Rational(7, 2) * d);
  };
  if (!(P(t.u0) > 0) || P(t.u0 - 1) > 0) {
    out.pass = false;
    out.detail = "u0 = " + std::to_string(t.u0) + " is not the first positive point";
    return out;
  }
  std::string where;
  for (const auto& w : t.witnesses) {
    where += " (" + std::to_string(w.u) + "," + std::to_string(w.v) + ")";
    if (w.report.verdict != Verdict::CertifiedStable) {
      out.pass = false;
      out.detail = "verdict " + std::string(verdict_name(w.report.verdict)) + " at" + where;
      return out;
    }
  }
  out.detail = "u0=" + std::to_string(t.u0) + " v0=" + std::to_string(t.v0) + ", certified-stable at" + where;
  return out;
}

// 10. Sweep determinism and exact round trips.
Outcome determinism() {
  Outcome out;
  const auto st = support::ex1_moduli();
  const auto f = example1(st.ctx, st.lin);
  if (sweep_csv(f, st.lin, 3, 14, 5, 9, 1) != sweep_csv(f, st.lin, 3, 14, 5, 9, 8)) {
    out.pass = false;
    out.detail = "Example 1 sweep differs between 1 and 8 jobs";
    return out;
  }
  const auto rs = random_setting(5);
  const auto rf = random_admissible(rs.ctx, rs.lin, 5);
  if (sweep_csv(rf, rs.lin, 1, 10, 1, 6, 1) != sweep_csv(rf, rs.lin, 1, 10, 1, 6, 8)) {
    out.pass = false;
    out.detail = "random sweep differs between 1 and 8 jobs";
    return out;
  }
  int trips = 0;
  for (std::uint64_t seed = 0; seed <= 60; ++seed) {
    Scenario sc;
    if (seed == 0) {
      sc.filtration = f;
      sc.lin = st.lin;
      sc.u = 3;
      sc.v = 5;
    } else {
      const auto s = random_setting(seed);
      sc.filtration = random_admissible(s.ctx, s.lin, seed);
      sc.lin = s.lin;
      sc.u = 1 + static_cast<i64>(seed % 9);
      sc.v = 1 + static_cast<i64>(seed % 5);
    }
    const std::string text = scenario_to_json(sc).dump(2);
    const Scenario back = parse_scenario(text);
    const bool same = back.filtration.z == sc.filtration.z && back.filtration.r == sc.filtration.r &&
                      back.filtration.c == sc.filtration.c && back.filtration.B == sc.filtration.B &&
                      back.lin.gamma == sc.lin.gamma && back.lin.b == sc.lin.b && back.lin.epsilon == sc.lin.epsilon &&
                      back.u == sc.u && back.v == sc.v && scenario_to_json(back).dump(2) == text;
    const std::string rep = report_to_json(certify(sc.filtration, sc.lin, std::max<i64>(sc.u, 1), sc.v)).dump(2);
    if (!same || nlohmann::json::parse(rep).dump(2) != rep) {
      out.pass = false;
      out.detail = "round trip differs for seed " + std::to_string(seed);
      return out;
    }
    ++trips;
  }
  out.detail = "sweeps identical for 1 and 8 jobs; " + std::to_string(trips) + " scenario and report round trips exact";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "Example 1 stage table", kBudgetGolden, golden_table},
      {2, "A^vir and T^vir closed forms", kBudgetClosedForms, closed_forms},
      {3, "virtual profile vertices", 0, vertices},
      {4, "baseline leading coefficient", 0, baseline},
      {5, "trace rule equals inclusion-exclusion", kBudgetSpans, spans},
      {6, "staircase ceiling identities", kBudgetIdentities, identities},
      {7, "discrepancy bound", kBudgetDiscrepancy, discrepancy},
      {8, "creep and tail inequalities", kBudgetCreep, creep},
      {9, "threshold certification", kBudgetThresholds, thresholds},
      {10, "determinism and round trips", 0, determinism},
  };
  int hard_failures = 0;
  for (const auto& c : criteria) {
    Stopwatch sw;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.erratum = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = sw.seconds();
    if (c.budget > 0 && secs > c.budget) {
      o.pass = false;
      o.erratum = false;
      o.detail += "; over the " + fmt("%.0f", c.budget) + " s budget";
    }
    std::printf("%s %2d %s: %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                !o.pass && o.erratum ? " [erratum]" : "");
    if (!o.pass && !o.erratum) ++hard_failures;
  }
  std::fflush(stdout);
  return hard_failures == 0 ? 0 : 1;
}
