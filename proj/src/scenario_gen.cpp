#include "gitstab/scenario_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gitstab/verdict.hpp"

namespace gitstab {

WeightedFiltration example1(const GeometricContext& ctx, const LinearizationConfig& lin) {
  if (ctx.n < 3) throw Error("example1 needs at least three marked points");
  if (ctx.N < 3) throw Error("example1 needs N >= 3");
  WeightedFiltration f;
  f.ctx = ctx;
  f.ctx.q = 3;
  f.z = {1, 1, 1, ctx.N - 2};
  f.r = {Rational(1, 2), Rational(1, 3), Rational(1, 6), Rational(0)};
  f.c = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  f.B = {lin.b.at(0), lin.b.at(1), lin.b.at(2)};
  return f;
}

WeightedFiltration worst_candidate(const GeometricContext& ctx, const LinearizationConfig& lin) {
  if (ctx.n < 1) throw Error("worst candidate needs a marked point");
  if (ctx.N < 1) throw Error("degenerate projective space");
  WeightedFiltration f;
  f.ctx = ctx;
  f.ctx.q = 1;
  const Rational N(static_cast<long>(ctx.N));
  for (i64 j = 0; j <= ctx.N; ++j) {
    f.z.push_back(1);
    f.r.push_back(2 * (N - Rational(static_cast<long>(j))) / (N * (N + 1)));
  }
  for (int j = 0; j <= static_cast<int>(ctx.N); ++j) f.c.push_back({std::min<i64>(j, row_bound(f, j))});
  f.B = {*std::max_element(lin.b.begin(), lin.b.end())};
  return f;
}

namespace {

constexpr i64 kMaxDenominator = 10000;

bool try_random(const GeometricContext& ctx, const LinearizationConfig& lin, std::mt19937_64& rng,
                WeightedFiltration& f) {
  auto pick = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  f = WeightedFiltration{};
  f.ctx = ctx;
  const i64 slots = ctx.N + 1;
  const i64 stages = pick(2, std::min<i64>(slots, 8));
  std::vector<i64> cuts;
  for (i64 s = 1; s < slots; ++s) cuts.push_back(s);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(stages - 1);
  std::sort(cuts.begin(), cuts.end());
  i64 prev = 0;
  for (i64 c : cuts) {
    f.z.push_back(c - prev);
    prev = c;
  }
  f.z.push_back(slots - prev);

  // Distinct positive integer levels, rescaled so that sum z r = 1.
  std::vector<i64> level;
  const i64 cap = std::max<i64>(stages, kMaxDenominator / slots);
  while (static_cast<i64>(level.size()) < stages - 1) {
    const i64 x = pick(1, cap);
    if (std::find(level.begin(), level.end(), x) == level.end()) level.push_back(x);
  }
  std::sort(level.rbegin(), level.rend());
  level.push_back(0);
  i64 mass = 0;
  for (i64 j = 0; j < stages; ++j) mass += f.z[j] * level[j];
  if (mass > kMaxDenominator) return false;
  for (i64 lv : level) f.r.push_back(q(lv, mass));
  for (auto& x : f.r) x.canonicalize();

  const int q = static_cast<int>(pick(0, std::min<i64>({4, ctx.d, static_cast<i64>(ctx.n) + 2})));
  f.ctx.q = q;
  f.c.assign(stages, std::vector<i64>(q, 0));
  for (int j = 1; j < stages; ++j) {
    f.c[j] = f.c[j - 1];
    const i64 bound = std::min(row_bound(f, j), ctx.d);
    i64 sum = std::accumulate(f.c[j].begin(), f.c[j].end(), i64{0});
    if (q == 0) continue;
    const i64 bumps = pick(0, 3);
    for (i64 t = 0; t < bumps && sum < bound; ++t) {
      ++f.c[j][pick(0, q - 1)];
      ++sum;
    }
  }

  std::vector<Rational> pool;
  for (const auto& x : lin.b)
    if (x != 0 && lin.gamma * x <= Rational(1, 2)) pool.push_back(x);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (int i = 0; i < q; ++i) {
    if (!pool.empty() && pick(0, 2) > 0) {
      f.B.push_back(pool.back());
      pool.pop_back();
    } else {
      f.B.push_back(0);
    }
  }
  return validate(f, lin).empty();
}

}  // namespace

WeightedFiltration random_admissible(const GeometricContext& ctx, const LinearizationConfig& lin, std::uint64_t seed) {
  if (ctx.N < 1) throw Error("degenerate projective space");
  std::mt19937_64 rng(seed);
  WeightedFiltration f;
  for (int attempt = 0; attempt < 200; ++attempt)
    if (try_random(ctx, lin, rng, f)) return f;
  throw Error("generation failed");
}

Setting random_setting(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto pick = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  Setting s;
  s.ctx.g = static_cast<int>(pick(0, 4));
  s.ctx.d = pick(std::max<i64>(2 * s.ctx.g + 1, 3), 2 * s.ctx.g + 12);
  s.ctx.N = s.ctx.d - s.ctx.g;
  s.ctx.n = static_cast<int>(pick(0, 4));
  const i64 nu = pick(2, 6);
  s.lin.gamma = q(nu, 2 * nu - 1);
  for (int k = 0; k < s.ctx.n; ++k) s.lin.b.push_back(q(pick(1, 10), 10));
  const auto eps = default_epsilon(s.ctx, s.lin);
  s.lin.epsilon = eps ? *eps : Rational(1, 1000);
  return s;
}

}  // namespace gitstab
