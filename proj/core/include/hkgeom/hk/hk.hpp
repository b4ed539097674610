#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkgeom/delpezzo/delpezzo.hpp"
#include "hkgeom/exactmath/polymatrix.hpp"

namespace hkgeom::hk {

using delpezzo::Check;
using exact::Minor;
using exact::MultiPoly;
using exact::PolyMatrix;
using exact::Scalar;
using exact::Variables;

// sign[0] C1^n + sign[1] C2^n + sign[2] C3^n for block C in {V, W, Z, T, U}.
struct FermatCurveSpec {
  unsigned n;
  std::string block;
  std::array<int, 3> sign;

  static FermatCurveSpec for_block(const std::string& block, unsigned n);
  MultiPoly equation(const Variables& vars) const;
};

// V1..V3 W1..W3 Z1..Z3 T1..T3.
const Variables& hk_variables();

struct HKPresentation {
  unsigned n;
  Variables vars;
  std::vector<FermatCurveSpec> curves;    // V, W, Z, T
  PolyMatrix matrix;                      // A', independent of n
  std::vector<Minor> minors;              // signed 3x3 minors of A'
  std::vector<MultiPoly> fermat_equations;
  std::vector<MultiPoly> binomials;       // epsilon = 1 pullback equations
  std::vector<Check> checks;

  bool all_checks_pass() const;
  // Fermat equations followed by the binomials.
  std::vector<MultiPoly> surface_equations() const;
};

HKPresentation hk_presentation(unsigned n);

struct PullbackFactorization {
  unsigned n;
  MultiPoly first;   // upper-case partner of M1
  MultiPoly second;  // of M2
  MultiPoly pulled_back;  // first^n - second^n
  std::vector<Scalar> epsilons;  // zeta_n^k, k = 0..n-1
  std::vector<MultiPoly> factors;  // first - eps * second
  bool product_matches;
};

// g = M1 - M2 with monomials in lower-case variables; each variable x is
// replaced by X^n with X its upper-case partner. Factors live over Q(zeta_n).
PullbackFactorization pullback_factorization(const MultiPoly& g, unsigned n);

struct EpsilonReport {
  unsigned n;
  // Orientation exponents a_i with prod L_i^{[a_i=1]} R_i^{[a_i=-1]} equal to the mirrored product.
  std::array<int, 4> exponents;
  MultiPoly common_monomial;
  bool identity_holds;
  std::size_t tuples_enumerated;
  std::size_t component_count;
};

EpsilonReport epsilon_constraint_check(unsigned n);

struct FiveFactorSystem {
  unsigned n;
  Variables vars;  // V W Z T U blocks, three coordinates each
  std::vector<std::string> factor_blocks;
  std::vector<MultiPoly> fermat_equations;
  std::vector<delpezzo::TripleEquation> equations;
  std::vector<Check> checks;
};

FiveFactorSystem hk_five_factor_equations(unsigned n);

// tower: lift random plane points through the Kummer tower.
// enumeration: draw uniformly from all F_p-points of the surface (small p only).
// automatic: tower, unless no plane point lifts to the open part (checked exactly for small p).
enum class SamplingMethod { automatic, tower, enumeration };
std::string to_string(SamplingMethod m);

struct SmoothnessOptions {
  unsigned n = 3;
  std::uint64_t prime = 7;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::size_t max_attempts_per_trial = 100000;
  SamplingMethod method = SamplingMethod::automatic;
};

struct SmoothnessReport {
  SmoothnessOptions options;
  std::map<std::size_t, std::size_t> rank_histogram;
  std::size_t skipped = 0;
  std::size_t equations_nonvanishing = 0;  // assembly sanity, expected 0
  std::size_t minor_vanishing_points = 0;  // points where all A' minors vanish
  std::size_t expected_rank = 6;
  SamplingMethod method_used = SamplingMethod::tower;
  std::optional<std::size_t> tower_admissible;  // plane points (with scale class) lifting to the open part
  std::optional<std::size_t> surface_points;    // |S_n(F_p)| when enumerated

  bool all_expected() const;
  static constexpr const char* kind = "corroboration";
};

SmoothnessReport smoothness_sample(const SmoothnessOptions& options);

}  // namespace hkgeom::hk
