#include <gtest/gtest.h>

#include "hkgeom/errors.hpp"
#include "hkgeom/hk/hk.hpp"
#include "oracles.hpp"

using namespace hkgeom;
using namespace hkgeom::hk;

namespace {

using Point = std::array<std::uint64_t, 12>;  // V1..V3 W1..W3 Z1..Z3 T1..T3

std::uint64_t pw(std::uint64_t a, unsigned e, std::uint64_t p) { return oracle::powmod(a, e, p); }

// Fermat curves (signs +,-,+ on V, W, Z and +,+,+ on T) and the four binomials, written out by hand.
std::vector<std::uint64_t> oracle_equations(const Point& x, unsigned n, std::uint64_t p) {
  auto m3 = [&](int a, int b, int c) { return x[a] * x[b] % p * x[c] % p; };
  auto sub = [&](std::uint64_t a, std::uint64_t b) { return (a + p - b) % p; };
  std::vector<std::uint64_t> e;
  for (int b = 0; b < 3; ++b) e.push_back(sub((pw(x[3 * b], n, p) + pw(x[3 * b + 2], n, p)) % p, pw(x[3 * b + 1], n, p)));
  e.push_back((pw(x[9], n, p) + pw(x[10], n, p) + pw(x[11], n, p)) % p);
  enum { V1, V2, V3, W1, W2, W3, Z1, Z2, Z3, T1, T2, T3 };
  e.push_back(sub(m3(V1, W1, Z1), m3(V2, W2, Z2)));
  e.push_back(sub(m3(W3, Z1, T2), m3(W2, Z3, T1)));
  e.push_back(sub(m3(Z3, V1, T3), m3(Z2, V3, T2)));
  e.push_back(sub(m3(V3, W1, T1), m3(V2, W3, T3)));
  return e;
}

// Jacobian by exact polynomial differences: for these equations each partial
// derivative is a polynomial of degree < p, so the derivative at x equals the
// coefficient extracted from the n+1 values f(x + t e_i) by Lagrange interpolation.
std::size_t oracle_jacobian_rank(const Point& x, unsigned n, std::uint64_t p) {
  unsigned deg = std::max(n, 3u);
  std::vector<std::vector<std::uint64_t>> jac(8, std::vector<std::uint64_t>(12));
  for (int i = 0; i < 12; ++i) {
    std::vector<std::vector<std::uint64_t>> vals;
    for (unsigned t = 0; t <= deg; ++t) {
      Point y = x;
      y[i] = (y[i] + t) % p;
      vals.push_back(oracle_equations(y, n, p));
    }
    for (unsigned a = 0; a <= deg; ++a) {
      // L_a'(0) for nodes 0..deg.
      std::uint64_t num = 0, den = 1;
      for (unsigned c = 0; c <= deg; ++c) {
        if (c == a) continue;
        den = den * ((a + p - c) % p) % p;
        std::uint64_t prod = 1;
        for (unsigned d = 0; d <= deg; ++d)
          if (d != a && d != c) prod = prod * ((p - d) % p) % p;
        num = (num + prod) % p;
      }
      std::uint64_t w = num * pw(den, static_cast<unsigned>(p - 2), p) % p;
      for (int k = 0; k < 8; ++k) jac[k][i] = (jac[k][i] + w * vals[a][k]) % p;
    }
  }
  return oracle::rank_mod_p(jac, p);
}

std::vector<std::array<std::uint64_t, 3>> projective_points(std::uint64_t p) {
  std::vector<std::array<std::uint64_t, 3>> out;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) out.push_back({a, b, 1});
  for (std::uint64_t a = 0; a < p; ++a) out.push_back({a, 1, 0});
  out.push_back({1, 0, 0});
  return out;
}

std::vector<Point> oracle_surface(unsigned n, std::uint64_t p) {
  auto proj = projective_points(p);
  std::array<std::vector<std::array<std::uint64_t, 3>>, 4> curve;
  for (const auto& q : proj) {
    std::uint64_t a = pw(q[0], n, p), b = pw(q[1], n, p), c = pw(q[2], n, p);
    if ((a + c + p - b) % p == 0)
      for (int blk = 0; blk < 3; ++blk) curve[blk].push_back(q);
    if ((a + b + c) % p == 0) curve[3].push_back(q);
  }
  std::vector<Point> out;
  for (const auto& v : curve[0])
    for (const auto& w : curve[1])
      for (const auto& z : curve[2])
        for (const auto& t : curve[3]) {
          Point x{v[0], v[1], v[2], w[0], w[1], w[2], z[0], z[1], z[2], t[0], t[1], t[2]};
          auto e = oracle_equations(x, n, p);
          if (std::all_of(e.begin(), e.end(), [](std::uint64_t y) { return y == 0; })) out.push_back(x);
        }
  return out;
}

std::uint64_t residue(const Scalar& s, std::uint64_t p) {
  mpq_class q = s.as_rational();
  mpz_class num = q.get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = q.get_den() % static_cast<unsigned long>(p);
  return num.get_ui() * pw(den.get_ui(), static_cast<unsigned>(p - 2), p) % p;
}

std::uint64_t eval_mod(const MultiPoly& f, const Point& x, std::uint64_t p) {
  std::uint64_t s = 0;
  for (const auto& [mono, c] : f.terms()) {
    std::uint64_t t = residue(c, p);
    for (std::size_t i = 0; i < mono.size(); ++i) t = t * pw(x[i], mono[i], p) % p;
    s = (s + t) % p;
  }
  return s;
}

}  // namespace

TEST(HKPresentation, ChecksPass) {
  for (unsigned n : {2u, 3u, 5u}) {
    auto p = hk_presentation(n);
    for (const auto& c : p.checks) EXPECT_TRUE(c.passed) << n << ": " << c.name;
    EXPECT_TRUE(p.all_checks_pass());
    EXPECT_EQ(p.matrix.rows(), 4u);
    EXPECT_EQ(p.matrix.cols(), 3u);
    EXPECT_EQ(p.minors.size(), 4u);
    EXPECT_EQ(p.surface_equations().size(), 8u);
  }
  EXPECT_THROW(hk_presentation(1), InvalidArgument);
}

TEST(HKPresentation, MinorsAnnihilateTheMatrix) {
  auto p = hk_presentation(3);
  for (std::size_t c = 0; c < 3; ++c) {
    MultiPoly s(p.vars);
    for (std::size_t j = 0; j < 4; ++j) s += p.minors[j].value * p.matrix.at(j, c);
    EXPECT_TRUE(s.is_zero()) << c;
  }
  std::vector<std::vector<MultiPoly>> sub;
  for (std::size_t r = 1; r < 4; ++r) sub.push_back({p.matrix.at(r, 0), p.matrix.at(r, 1), p.matrix.at(r, 2)});
  EXPECT_EQ(p.minors[0].value, oracle::leibniz_det(sub, p.vars));
}

TEST(HKPresentation, EquationsMatchHandWrittenSystem) {
  auto pres = hk_presentation(3);
  auto eqs = pres.surface_equations();
  std::mt19937_64 rng(99);
  const std::uint64_t p = 1000003;
  for (int trial = 0; trial < 30; ++trial) {
    Point x;
    for (auto& c : x) c = rng() % p;
    auto want = oracle_equations(x, 3, p);
    for (std::size_t k = 0; k < 8; ++k) {
      std::uint64_t got = eval_mod(eqs[k], x, p);
      EXPECT_TRUE(got == want[k] || (got + want[k]) % p == 0) << k;
    }
  }
}

TEST(Pullback, DifferenceOfSquaresAndCubes) {
  Variables v{"v1", "v2", "w1", "w2", "z1", "z2"};
  auto var = [&](const char* n) { return MultiPoly::variable(v, n); };
  MultiPoly g = var("v1") * var("w1") * var("z1") - var("v2") * var("w2") * var("z2");
  for (unsigned n : {1u, 2u, 3u, 5u}) {
    auto f = pullback_factorization(g, n);
    ASSERT_EQ(f.factors.size(), n);
    EXPECT_TRUE(f.product_matches);
    EXPECT_EQ(f.first.variables().names()[0], "V1");
    // Independent check: the product of the factors agrees with first^n - second^n at random points.
    std::mt19937_64 rng(n);
    auto field = exact::FieldSpec::cyclotomic(n);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Scalar> pt;
      for (int i = 0; i < 6; ++i) pt.push_back(oracle::random_rational(rng, 7).coerce(field));
      Scalar a = f.first.evaluate(pt), b = f.second.evaluate(pt);
      Scalar prod = Scalar::one(field);
      for (unsigned k = 0; k < n; ++k) prod *= a - Scalar::zeta(n, k) * b;
      EXPECT_EQ(prod, a.pow(n) - b.pow(n));
      EXPECT_EQ(f.pulled_back.evaluate(pt), a.pow(n) - b.pow(n));
    }
  }
  auto sq = pullback_factorization(g, 2);
  EXPECT_EQ(sq.epsilons[1], Scalar(-1).coerce(exact::FieldSpec::cyclotomic(2)));
}

TEST(Pullback, RejectsNonBinomials) {
  Variables v{"a", "b", "c"};
  auto var = [&](const char* n) { return MultiPoly::variable(v, n); };
  EXPECT_THROW(pullback_factorization(var("a") + var("b") - var("c"), 2), InvalidArgument);
  EXPECT_THROW(pullback_factorization(var("a") * Scalar(2) - var("b"), 2), InvalidArgument);
  EXPECT_THROW(pullback_factorization(var("a") - var("b"), 0), InvalidArgument);
}

TEST(EpsilonConstraint, ComponentCountIsNCubed) {
  for (unsigned n = 2; n <= 6; ++n) {
    auto r = epsilon_constraint_check(n);
    EXPECT_TRUE(r.identity_holds) << n;
    EXPECT_EQ(r.tuples_enumerated, static_cast<std::size_t>(n) * n * n * n);
    EXPECT_EQ(r.component_count, static_cast<std::size_t>(n) * n * n) << n;
  }
  auto r = epsilon_constraint_check(3);
  EXPECT_EQ(r.exponents, (std::array<int, 4>{-1, 1, 1, 1}));
  EXPECT_EQ(r.common_monomial.total_degree(), 12);
  EXPECT_EQ(r.common_monomial.term_count(), 1u);
}

TEST(FiveFactor, ChecksPass) {
  for (unsigned n : {1u, 3u}) {
    auto s = hk_five_factor_equations(n);
    EXPECT_EQ(s.equations.size(), 10u);
    EXPECT_EQ(s.fermat_equations.size(), 5u);
    for (const auto& c : s.checks) EXPECT_TRUE(c.passed) << n << ": " << c.name;
  }
}

// The eight equations also vanish at finitely many boundary points off the
// surface; there the Jacobian has full rank 8. The library enumeration must
// return exactly the rank-6 points.
TEST(Smoothness, EnumerationMatchesIndependentCount) {
  for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 5}, {3, 7}, {5, 11}}) {
    auto pts = oracle_surface(n, p);
    ASSERT_FALSE(pts.empty());
    std::map<std::size_t, std::size_t> hist;
    for (const auto& x : pts) ++hist[oracle_jacobian_rank(x, n, p)];
    for (auto [rank, count] : hist) EXPECT_TRUE(rank == 6 || rank == 8) << rank;

    SmoothnessOptions o;
    o.n = n;
    o.prime = p;
    o.trials = 50;
    o.method = SamplingMethod::enumeration;
    auto r = smoothness_sample(o);
    ASSERT_TRUE(r.surface_points.has_value());
    EXPECT_EQ(*r.surface_points, hist[6]) << n << "," << p;
    EXPECT_EQ(r.rank_histogram, (std::map<std::size_t, std::size_t>{{6, 50}}));
  }
}

TEST(Smoothness, TowerSamplingGivesExpectedRank) {
  for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 5}, {3, 7}, {4, 13}, {5, 11}}) {
    SmoothnessOptions o;
    o.n = n;
    o.prime = p;
    o.trials = 60;
    auto r = smoothness_sample(o);
    EXPECT_TRUE(r.all_expected()) << n << "," << p;
    EXPECT_EQ(r.equations_nonvanishing, 0u);
    std::size_t total = 0;
    for (auto [k, c] : r.rank_histogram) total += c;
    EXPECT_EQ(total, 60u);
  }
  SmoothnessOptions o{.n = 4, .prime = 13};
  EXPECT_EQ(smoothness_sample(o).method_used, SamplingMethod::enumeration);
  o.method = SamplingMethod::tower;
  o.max_attempts_per_trial = 1000;
  EXPECT_THROW(smoothness_sample(o), GuardrailExceeded);
}

TEST(Smoothness, DeterministicAcrossThreadCounts) {
  SmoothnessOptions o{.n = 3, .prime = 31, .trials = 80, .seed = 42};
  auto a = smoothness_sample(o);
  o.threads = 4;
  auto b = smoothness_sample(o);
  EXPECT_EQ(a.rank_histogram, b.rank_histogram);
  EXPECT_EQ(a.skipped, b.skipped);
  EXPECT_EQ(a.minor_vanishing_points, b.minor_vanishing_points);
  o.seed = 43;
  auto c = smoothness_sample(o);
  EXPECT_EQ(c.rank_histogram, a.rank_histogram);
}

TEST(Smoothness, RejectsBadParameters) {
  EXPECT_THROW(smoothness_sample({.n = 3, .prime = 9}), InvalidArgument);
  EXPECT_THROW(smoothness_sample({.n = 3, .prime = 11}), InvalidArgument);
  EXPECT_THROW(smoothness_sample({.n = 3, .prime = 7, .trials = 0}), InvalidArgument);
  EXPECT_THROW(smoothness_sample({.n = 1, .prime = 7}), InvalidArgument);
  EXPECT_THROW(smoothness_sample({.n = 3, .prime = 271, .method = SamplingMethod::enumeration}), InvalidArgument);
}
