#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hkgeom/configuration/projective.hpp"
#include "hkgeom/exactmath/polymatrix.hpp"

namespace hkgeom::delpezzo {

using config::ProjPoint;
using exact::Minor;
using exact::MultiPoly;
using exact::PolyMatrix;
using exact::Scalar;
using exact::Variables;

// Plane coordinates x1, x2, x3.
const Variables& plane_variables();

struct BlowupData {
  std::vector<ProjPoint> points;

  // Throws unless the points are distinct with no three collinear.
  static BlowupData make(std::vector<ProjPoint> points);
};

// Default block names by point index: y, z, t, w, v.
std::vector<std::string> default_block_names(std::size_t k);

struct Pencil {
  std::string block;
  MultiPoly ell;  // linear forms in x1..x3 vanishing at the point
  MultiPoly m;
};

struct ProjectionRow {
  std::string block;
  std::array<MultiPoly, 3> row;  // sum_c row[c] x_c = s2 ell(x) - s1 m(x)
  Pencil pencil;
};

// `vars` must contain block+"1" and block+"2".
ProjectionRow projection_row(const ProjPoint& p, const Variables& vars, const std::string& block);

struct Check {
  std::string name;
  bool passed;
};

struct Block {
  std::string name;
  std::vector<std::size_t> vars;
};

struct DeterminantalPresentation {
  std::string label;
  Variables vars;
  std::vector<Block> blocks;
  Variables param_vars;
  std::vector<MultiPoly> parametrization;  // image of each ambient variable in param_vars
  std::optional<PolyMatrix> matrix;
  std::vector<Minor> minors;
  std::vector<MultiPoly> equations;
  std::optional<PolyMatrix> syzygy_matrix;
  std::vector<Pencil> pencils;
  std::vector<Check> checks;

  bool all_checks_pass() const;
  const Check* find_check(const std::string& name) const;
  std::vector<std::vector<std::size_t>> block_indices() const;
};

// True iff every equation vanishes identically under the parametrization.
bool vanishes_on_parametrization(const DeterminantalPresentation& p, const std::vector<MultiPoly>& polys);

// k = 1, 2: bilinear equations in P^2 x (P^1)^k.
DeterminantalPresentation graph_equations(const BlowupData& points);

// k >= 3: stacked projection rows; the surface is the rank-2 locus.
PolyMatrix dp_matrix(const BlowupData& points);
DeterminantalPresentation dp_presentation(const BlowupData& points, std::vector<std::string> block_names = {});

// det of the 3x3 matrix for the three coordinate points.
MultiPoly dp6_equation(const BlowupData& points);

enum class Dp5Variant { projection, symmetric };
DeterminantalPresentation dp5_presentation(Dp5Variant variant);

// Variables v1 v2 w1 w2 z1 z2 t1 t2 of the symmetric matrix.
const Variables& dp5_variables();
// Four trilinear equations with third coordinates eliminated.
std::vector<MultiPoly> dp5_symmetric_equations();
// The same four equations in the homogeneous coordinates v1..v3, w1..w3, z1..z3, t1..t3.
std::vector<MultiPoly> dp5_symmetric_equations_homogeneous();
const Variables& dp5_homogeneous_variables();
// Third coordinate of each block in terms of the first two: v3 = v2 - v1, ..., t3 = -t1 - t2.
std::vector<MultiPoly> dp5_eliminate_third(const Variables& target);

// lambda, mu absent: symbolic parameters.
DeterminantalPresentation dp4_presentation(std::optional<Scalar> lambda = std::nullopt,
                                           std::optional<Scalar> mu = std::nullopt);

struct ComplexTerm {
  std::size_t rank;
  std::string description;
};
std::vector<ComplexTerm> eagon_northcott_terms(int k);

struct BlockMatch {
  std::string block_a;
  std::string block_b;
  // (a1, a2) = M (b1, b2) as functions on the plane.
  std::array<std::array<Scalar, 2>, 2> transition;
};
// Matches blocks of two presentations whose pencils have the same base point.
std::vector<BlockMatch> pencil_correspondence(const DeterminantalPresentation& a, const DeterminantalPresentation& b);

struct TripleEquation {
  std::array<std::size_t, 3> factors;  // 1-based factor indices, ascending
  MultiPoly equation;
};

struct TenEquations {
  Variables vars;                       // v1..v3 w1..w3 z1..z3 t1..t3 u1..u3
  std::vector<std::string> factor_blocks;  // block name of factor 1..5: w z v t u
  std::vector<TripleEquation> equations;
  std::vector<Check> checks;
};
TenEquations dp5_ten_equations();

}  // namespace hkgeom::delpezzo
