#pragma once

#include <array>
#include <vector>

#include "hkgeom/configuration/configuration.hpp"
#include "hkgeom/exactmath/polymatrix.hpp"

namespace hkgeom::kummer {

using config::Configuration;
using config::ProjPoint;
using config::Triple;
using exact::MultiPoly;
using exact::PolyMatrix;
using exact::Scalar;
using exact::Variables;

struct Normalization {
  Configuration config;
  std::array<std::size_t, 3> basis;  // original indices of the triple sent to x0, x1, x2
  std::vector<std::size_t> order;    // new line index -> original line index
  std::array<Triple, 3> transform;   // rows of N with x' = N x
};

// First non-concurrent triple (in index order) becomes the coordinate lines.
Normalization normalize_basis(const Configuration& cfg);
bool is_normalized(const Configuration& cfg);

struct KummerCover {
  Configuration config;
  unsigned n;
  std::size_t r;                     // lines are L_0..L_r
  Variables vars;                    // z0..zr
  std::vector<MultiPoly> equations;  // F_3..F_r

  const MultiPoly& F(std::size_t j) const { return equations.at(j - 3); }
};

// F_j = l_j(z0^n, z1^n, z2^n) - z_j^n for j >= 3.
KummerCover cover_equations(const Configuration& cfg, unsigned n);

// Row j - 3 is the gradient of F_j.
PolyMatrix gradient_matrix(const KummerCover& cover);

struct PointRelation {
  ProjPoint point;
  std::size_t j, i, k;  // l_j = lambda l_i + mu l_k
  Scalar lambda, mu;
};

// v - 2 relations per singular point of valency v, against its two lowest lines.
std::vector<PointRelation> point_relations(const KummerCover& cover);

// Phi_j = sum_k dF_j/dz_k a_k.
std::vector<MultiPoly> trivial_deformation(const KummerCover& cover, const std::vector<MultiPoly>& a);

}  // namespace hkgeom::kummer
