#pragma once

#include <string>
#include <vector>

#include "gitstab/filtration_model.hpp"

namespace gitstab {

// Least v for which products of u+1 sections generate the relevant spaces,
// ceil((d^2 (u+1)^2 - d (u+1)) / 2 - g + 1).
i64 gotzmann_v0(i64 d, int g, i64 u);

// Induced filtration of H^0(O(m)) with m = (u+1) v. Row k comes from source
// row src[k] of the base filtration.
struct MultFiltration {
  WeightedFiltration base;
  i64 u = 0;
  i64 v = 0;
  std::vector<int> src;
  std::vector<Rational> r_tilde;
  std::vector<std::vector<i64>> c_tilde;
  std::vector<std::string> warnings;

  int last() const { return static_cast<int>(src.size()) - 1; }
  i64 m() const { return (u + 1) * v; }
  // Coarse data of row k.
  const Rational& r(int k) const { return base.r[src[k]]; }
  i64 c(int k, int i) const { return base.c[src[k]][i]; }
  i64 ct(int k, int i) const { return c_tilde[k][i]; }
  i64 degree(int k) const { return base.row_degree(src[k]); }
  int points() const { return base.ctx.q; }
};

MultFiltration build_tilde(const WeightedFiltration& base, i64 u, i64 v);

enum class CellCase { Zero, I, II, III, IV };
const char* cell_case_name(CellCase c);

struct CellCaseInfo {
  CellCase kind = CellCase::Zero;
  int s = -1;
  int t = -1;
};
CellCaseInfo case_of(const MultFiltration& mf, int k, int i);

// j(i,0) is the last source row where Q_i is absent from the base locus,
// j(i,1..K_i-1) the later jump rows and j(i,K_i) = Nbar.
struct JumpTable {
  std::vector<int> j;
  int K() const { return static_cast<int>(j.size()) - 1; }
};
std::vector<JumpTable> jump_tables(const WeightedFiltration& f);

}  // namespace gitstab
