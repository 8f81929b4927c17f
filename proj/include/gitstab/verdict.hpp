#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gitstab/filtration_model.hpp"
#include "gitstab/mult_filtration.hpp"

namespace gitstab {

// Per-row caps used to dominate the creep sum: z_j before the Clifford range,
// the transition row's boosted value, then 2 z_j.
struct ZSeries {
  std::vector<i64> Z;
  std::vector<i64> alternative;  // transition row read with the exclusive prefix sum
  int j_rr = -1;
  int j_cliff = 0;
};
ZSeries Z_series(const WeightedFiltration& f);

Rational creep_lhs(const WeightedFiltration& f, const LinearizationConfig& lin);

enum class CreepMode { Plain, StrengthenedB, StrengthenedC };
const char* creep_mode_name(CreepMode m);

struct CreepResult {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  CreepMode requested = CreepMode::Plain;
  CreepMode used = CreepMode::Plain;
};
CreepResult creep_check(const WeightedFiltration& f, const LinearizationConfig& lin, CreepMode mode);

struct TailResult {
  Rational tail;
  Rational bound;
  bool holds = false;
};
// Sum of the last g slot weights against (g - 1) / N.
TailResult tail_bound(const WeightedFiltration& f);
TailResult tail_bound_B(const WeightedFiltration& f, const LinearizationConfig& lin);
TailResult tail_bound_C(const WeightedFiltration& f);

// Empty in Case A, where epsilon is only limited by the case boundary.
std::optional<Rational> epsilon_max(const GeometricContext& ctx, const LinearizationConfig& lin);
// Half the tighter of the case slack and epsilon_max; empty in Cases D and E.
std::optional<Rational> default_epsilon(const GeometricContext& ctx, const LinearizationConfig& lin);

Rational T_bound_total(const GeometricContext& ctx, const LinearizationConfig& lin, i64 u, i64 v);
// Bound on T^vir from the creep and tail estimates, per case.
Rational Tvir_case_bound(const MultFiltration& mf, const LinearizationConfig& lin);
Rational criterion_rhs(const GeometricContext& ctx, const LinearizationConfig& lin, i64 u, i64 v);

enum class Verdict { CertifiedStable, Inconclusive, HypothesesViolated };
const char* verdict_name(Verdict v);

struct StabilityReport {
  i64 u = 0;
  i64 v = 0;
  Case case_label = Case::A;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> hypothesis_failures;
  std::vector<std::string> warnings;
  Rational epsilon;
  std::optional<Rational> epsilon_max;
  CreepResult creep;
  TailResult tail;
  Rational A_bound;
  Rational A_vir;
  Rational marked;
  Rational T_vir;
  Rational delta_bound;
  std::optional<Rational> T_vir_case_bound;
  std::optional<Rational> T_bound;  // closed-form total bound
  Rational T_chain;                 // T^vir + delta bound
  Rational T_direct;                // A bound + marked term
  Rational T_sound;                 // min of the two above
  Rational rhs;
  Rational margin;  // rhs - T_sound; the verdict is read from this
  std::optional<Rational> bound_margin;  // rhs - T_bound
};

StabilityReport certify(const WeightedFiltration& f, const LinearizationConfig& lin, i64 u, i64 v);

// eps u^2 + a1 u + a0 with a1 = 2 + (2g-2+2 gamma b)/(N+1) - 2 gamma b - 7d/2
// and a0 = 1 + (g-1+gamma b)/(N+1) - 2 gamma b - 7d/2.
struct UQuadratic {
  Rational a2;
  Rational a1;
  Rational a0;
  Rational operator()(i64 u) const;
};
UQuadratic threshold_quadratic(const GeometricContext& ctx, const LinearizationConfig& lin);

i64 u0_of(const GeometricContext& ctx, const LinearizationConfig& lin);
i64 v0_of(const GeometricContext& ctx, const LinearizationConfig& lin, i64 u);

struct Witness {
  i64 u = 0;
  i64 v = 0;
  StabilityReport report;
};
struct Thresholds {
  i64 u0 = 0;
  i64 v0 = 0;
  i64 v_gotzmann = 0;
  std::vector<Witness> witnesses;  // at u0, u0 + 5 and 2 u0
};
Thresholds find_thresholds(const WeightedFiltration& f, const LinearizationConfig& lin);

}  // namespace gitstab
