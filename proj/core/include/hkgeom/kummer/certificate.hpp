#pragma once

#include <map>
#include <optional>
#include <string>

#include "hkgeom/exactmath/linalg.hpp"
#include "hkgeom/kummer/kummer.hpp"

namespace hkgeom::kummer {

using exact::Monomial;
using exact::SparseEchelon;
using exact::SparseVector;

struct CertifyOptions {
  std::size_t max_unknowns = 20000;
  unsigned threads = 1;
  // Sign in front of mu * Phi_k in the point relation. -1 is the linearization
  // of l_j = lambda l_i + mu l_k; +1 is kept for comparison only.
  int mu_sign = -1;
};

// Degree-n forms modulo span{F_3..F_r}, the trivial subspace T and the
// relation-constrained subspace E inside (Phi_3..Phi_r)-space.
class EquisingularSystem {
 public:
  EquisingularSystem(const KummerCover& cover, const CertifyOptions& options = {});

  const KummerCover& cover() const { return cover_; }
  std::size_t quotient_dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return basis_.size() * (cover_.r - 2); }
  std::size_t aux_unknowns() const { return aux_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<PointRelation>& relations() const { return relations_; }

  // Coordinates of a degree-n form in the quotient basis.
  SparseVector normal_form(const MultiPoly& form) const;
  SparseVector normal_form(const Monomial& m) const;
  // (Phi_3..Phi_r) as one ambient vector.
  SparseVector phi_vector(const std::vector<MultiPoly>& phis) const;

  // Images of a = z_m e_k for all k, m.
  const std::vector<SparseVector>& trivial_generators() const { return trivial_; }
  // Row space of the linear conditions cutting out E.
  const SparseEchelon& constraints() const { return constraints_; }
  bool in_E(const SparseVector& phi) const;

 private:
  KummerCover cover_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<PointRelation> relations_;
  std::size_t aux_ = 0;
  std::vector<SparseVector> trivial_;
  SparseEchelon constraints_{0};
};

struct WitnessTerm {
  std::size_t component;  // j of Phi_j
  Monomial monomial;
  Scalar coefficient;
};

struct DeformationReport {
  unsigned n = 0;
  std::size_t lines = 0;
  std::size_t relations = 0;
  std::size_t quotient_dim = 0;
  std::size_t ambient = 0;
  std::size_t aux_unknowns = 0;
  std::size_t dim_T = 0;
  std::size_t dim_E = 0;
  std::size_t dim_E_plus_T = 0;
  bool contained = false;
  bool trivial_in_E = false;
  std::size_t trivial_generators_outside_E = 0;
  std::vector<WitnessTerm> witness;  // an element of E outside T, empty when contained
  std::string soundness_note;
};

DeformationReport certify_triviality(const KummerCover& cover, const CertifyOptions& options = {});


}  // namespace hkgeom::kummer
