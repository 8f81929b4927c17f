#pragma once

#include <vector>

#include "gitstab/filtration_model.hpp"
#include "gitstab/mult_filtration.hpp"

namespace gitstab {

// Virtual multiplicity of Q_i at row k: linear interpolation in the weight
// between the jump rows bracketing k.
Rational f_i(const MultFiltration& mf, int k, int i);
Rational f_total(const MultFiltration& mf, int k);

struct Vertex {
  Rational codim;
  Rational weight;
};
std::vector<Vertex> virtual_vertices(const MultFiltration& mf);

// Codimension of the last V~ row, i.e. the width of the v r_0 region.
i64 terminal_dim(const MultFiltration& mf);

Rational area_Avir(const MultFiltration& mf);

// Contribution of Q_i to the trapezoid between rows k and k+1, split into its
// u^2 v^2 and u v^2 coefficients.
struct CellArea {
  Rational u2v2;
  Rational uv2;
  Rational value;
};
CellArea area_Avir_cell(const MultFiltration& mf, int k, int i);

// (u+1)^2 v^2 gamma sum_i B_i r_{j(i,0)}.
Rational marked_term(const MultFiltration& mf, const LinearizationConfig& lin);
Rational Tvir_bound(const MultFiltration& mf, const LinearizationConfig& lin);

}  // namespace gitstab
