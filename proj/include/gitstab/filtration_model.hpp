#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab {

// Embedding data for C in P^N of degree d. With `complete` set the embedding is
// by a complete nonspecial series, so N + 1 = d - g + 1.
struct GeometricContext {
  int g = 0;
  i64 d = 0;
  i64 N = 0;
  int n = 0;
  int q = 0;
  i64 h1 = 0;
  bool complete = true;
};

struct LinearizationConfig {
  Rational gamma;
  std::vector<Rational> b;
  Rational epsilon;
  std::optional<i64> nu;
  std::optional<std::vector<Rational>> a;

  Rational b_total() const;
  Rational gamma_b() const { return gamma * b_total(); }
};

// Stages j = 0..Nbar of the filtration of H^0(O(1)). c[j][i] is the
// multiplicity of Q_i in the base locus of V_j.
struct WeightedFiltration {
  GeometricContext ctx;
  std::vector<i64> z;
  std::vector<Rational> r;
  std::vector<std::vector<i64>> c;
  std::vector<Rational> B;

  int last() const { return static_cast<int>(z.size()) - 1; }
  int points() const { return static_cast<int>(B.size()); }
  i64 row_degree(int j) const;
  // Sum of z_tau over tau < j.
  i64 codim(int j) const;
};

struct Violation {
  int row;  // -1 when the violation is not tied to a row
  std::string what;
};

// Slot weights r_0 >= ... >= r_N from the diagonal weights of a 1-PS.
std::vector<Rational> normalize_weights(std::vector<Rational> s);

struct StageWeights {
  std::vector<i64> z;
  std::vector<Rational> r;
};
StageWeights merge_slots(const std::vector<Rational>& slot_weights);
std::vector<Rational> expand_slots(const WeightedFiltration& f);

std::vector<Violation> validate(const WeightedFiltration& f, const LinearizationConfig& lin);
std::vector<Violation> validate_context(const GeometricContext& ctx, const LinearizationConfig& lin);

struct Regions {
  int j_rr;     // -1 when no row lies in the Riemann-Roch range
  int j_cliff;
};
Regions regions(const WeightedFiltration& f);

// Upper bound on sum_i c[j][i] allowed at row j.
i64 row_bound(const WeightedFiltration& f, int j);

enum class Case { A, B, C, D, E };
char case_name(Case c);
Case case_classify(const GeometricContext& ctx, const LinearizationConfig& lin);

struct ModuliSetting {
  GeometricContext ctx;
  LinearizationConfig lin;
};
// d = nu (2g - 2 + sum a). b is set to a; epsilon is left at zero.
ModuliSetting moduli_context(int g, const std::vector<Rational>& a, i64 nu);

}  // namespace gitstab
