#include "gitstab/oracle_suite.hpp"

#include <algorithm>
#include <random>

#include "gitstab/discrepancy.hpp"
#include "gitstab/scenario_gen.hpp"
#include "gitstab/span_calculus.hpp"
#include "gitstab/verdict.hpp"
#include "gitstab/virtual_profile.hpp"
#include "gitstab/xtilde_profile.hpp"

namespace gitstab {

namespace {

void check(SuiteResult& res, bool ok, const std::string& what) {
  ++res.checks;
  if (!ok) {
    ++res.failures;
    if (res.notes.size() < 10) res.notes.push_back(what);
  }
}

void spans(SuiteResult& res, std::mt19937_64& rng) {
  auto pick = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  const std::size_t q = static_cast<std::size_t>(pick(1, 6));
  std::vector<DivisorSeries> series(q);
  for (auto& s : series)
    for (std::size_t i = 0; i < q; ++i) s.mult.push_back(pick(0, 6));
  for (std::size_t i = 0; i < q; ++i) {
    i64 mn = series[0].mult[i];
    for (const auto& s : series) mn = std::min(mn, s.mult[i]);
    series[i].mult[i] = mn;
  }
  const i64 oracle = span_codim_oracle(series);
  check(res, span_codim_trace(series, true) == oracle, "trace differs from oracle");
  for (const auto& s : series) check(res, oracle <= intersection_codim({s}), "span larger than a member");
  auto grown = series;
  DivisorSeries extra;
  for (std::size_t i = 0; i < q; ++i) extra.mult.push_back(pick(0, 6));
  grown.push_back(extra);
  check(res, span_codim_oracle(grown) <= oracle, "adding a series raised the codimension");
}

Rational random_unit(std::mt19937_64& rng, bool allow_one) {
  const i64 den = std::uniform_int_distribution<i64>(1, 10000)(rng);
  const i64 num = std::uniform_int_distribution<i64>(0, allow_one ? den : den - 1)(rng);
  Rational x(static_cast<long>(num), static_cast<long>(den));
  x.canonicalize();
  return x;
}

void identities(SuiteResult& res, std::mt19937_64& rng) {
  const Rational zeta = random_unit(rng, false);
  const Rational xi = random_unit(rng, false);
  for (i64 u = 1; u <= 40; ++u) {
    const auto a = staircase_count(u, zeta, xi);
    const auto b = weighted_staircase_sum(u, zeta, xi);
    check(res, a.corrected == a.brute && b.corrected == b.brute, "exact staircase form differs from brute force");
    if (!a.printed_holds() || !b.printed_holds()) ++res.printed_mismatches;
  }
}

void creep(SuiteResult& res, std::uint64_t seed) {
  const Setting s = random_setting(seed);
  const WeightedFiltration f = random_admissible(s.ctx, s.lin, seed + 1);
  check(res, creep_check(f, s.lin, CreepMode::Plain).holds, "creep inequality fails");
  if (s.ctx.n == 0) check(res, creep_check(f, s.lin, CreepMode::StrengthenedC).holds, "strengthened creep fails");
  if (s.ctx.n > 0 && case_classify(s.ctx, s.lin) == Case::B)
    check(res, creep_check(f, s.lin, CreepMode::StrengthenedB).holds, "strengthened creep fails");
}

void delta(SuiteResult& res, std::uint64_t seed, std::mt19937_64& rng) {
  const Setting s = random_setting(seed);
  const WeightedFiltration f = random_admissible(s.ctx, s.lin, seed + 1);
  const i64 u = std::uniform_int_distribution<i64>(3, 15)(rng);
  const i64 v = std::uniform_int_distribution<i64>(5, 20)(rng);
  const MultFiltration mf = build_tilde(f, u, v);
  const Rational A = area_A_bound(build_xtilde(mf, false));
  check(res, A - area_Avir(mf) <= delta_total_bound(s.ctx.d, u, v), "total discrepancy bound fails");
  for (int k = 0; k < mf.last(); ++k)
    for (int i = 0; i < mf.points(); ++i)
      check(res, area_A_cell_exact(mf, k, i) - area_Avir_cell(mf, k, i).value <= delta_cell_bound(mf, k, i),
            "cell discrepancy bound fails");
}

void tail(SuiteResult& res, std::uint64_t seed) {
  const Setting s = random_setting(seed);
  const WeightedFiltration f = random_admissible(s.ctx, s.lin, seed + 1);
  check(res, tail_bound(f).holds, "tail bound fails");
}

}  // namespace

SuiteResult run_oracle_suite(const std::string& suite, i64 trials, std::uint64_t seed) {
  SuiteResult res;
  res.suite = suite;
  res.trials = trials;
  std::mt19937_64 rng(seed);
  for (i64 t = 0; t < trials; ++t) {
    const std::uint64_t sub = seed * 1000003ULL + static_cast<std::uint64_t>(t);
    if (suite == "spans")
      spans(res, rng);
    else if (suite == "identities")
      identities(res, rng);
    else if (suite == "creep")
      creep(res, sub);
    else if (suite == "delta")
      delta(res, sub, rng);
    else if (suite == "tail")
      tail(res, sub);
    else
      throw Error("unknown suite '" + suite + "'");
  }
  return res;
}

}  // namespace gitstab
