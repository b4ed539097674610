#include <gtest/gtest.h>

#include "hkgeom/errors.hpp"
#include "hkgeom/exactmath/linalg.hpp"
#include "hkgeom/kummer/certificate.hpp"
#include "oracles.hpp"

using namespace hkgeom;
using namespace hkgeom::kummer;

namespace {

Triple t(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

KummerCover cq_cover(unsigned n) { return cover_equations(config::catalog("complete-quadrangle"), n); }

MultiPoly z(const KummerCover& c, int i) { return MultiPoly::variable(c.vars, "z" + std::to_string(i)); }

exact::Integer binomial(unsigned n, unsigned k) {
  exact::Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TEST(CoverEquations, CompleteQuadrangleDegreeFive) {
  auto c = cq_cover(5);
  ASSERT_EQ(c.r, 5u);
  EXPECT_EQ(c.F(3), z(c, 1).pow(5) - z(c, 2).pow(5) - z(c, 3).pow(5));
  EXPECT_EQ(c.F(4), z(c, 2).pow(5) - z(c, 0).pow(5) - z(c, 4).pow(5));
  EXPECT_EQ(c.F(5), z(c, 0).pow(5) - z(c, 1).pow(5) - z(c, 5).pow(5));
  for (const auto& f : c.equations) {
    EXPECT_TRUE(f.is_homogeneous());
    EXPECT_EQ(f.total_degree(), 5);
  }
}

TEST(CoverEquations, DegreeOneIsLinear) {
  auto c = cq_cover(1);
  for (const auto& f : c.equations) EXPECT_EQ(f.total_degree(), 1);
  auto g = gradient_matrix(c);
  EXPECT_TRUE(g.is_constant());
}

TEST(CoverEquations, FourGeneralLinesGiveOneQuadric) {
  auto cfg = config::Configuration::analyze({t(1, 0, 0), t(0, 1, 0), t(0, 0, 1), t(1, 2, 3)});
  auto c = cover_equations(cfg, 2);
  ASSERT_EQ(c.equations.size(), 1u);
  EXPECT_EQ(c.F(3), z(c, 0).pow(2) + z(c, 1).pow(2) * Scalar(2) + z(c, 2).pow(2) * Scalar(3) - z(c, 3).pow(2));
}

TEST(CoverEquations, UnnormalizedConfigurationRejected) {
  auto cfg = config::Configuration::analyze({t(1, 1, 0), t(0, 1, 0), t(0, 0, 1), t(1, 2, 3)});
  EXPECT_THROW(cover_equations(cfg, 3), InvalidArgument);
}

TEST(Normalize, ReversedQuadrangleBecomesCoordinateLines) {
  auto cq = config::catalog("complete-quadrangle");
  std::vector<Triple> rev(cq.forms().rbegin(), cq.forms().rend());
  auto cfg = config::Configuration::analyze(rev);
  auto norm = normalize_basis(cfg);
  EXPECT_TRUE(is_normalized(norm.config));
  EXPECT_TRUE(config::same_incidence_type(cfg, config::Configuration::analyze([&] {
    std::vector<Triple> back(cfg.line_count());
    for (std::size_t i = 0; i < norm.order.size(); ++i) back[norm.order[i]] = norm.config.forms()[i];
    return back;
  }())));
  // Each transformed form is the original composed with the inverse of N (x' = N x).
  for (std::size_t i = 0; i < norm.order.size(); ++i) {
    const Triple& orig = cfg.forms()[norm.order[i]];
    const Triple& now = norm.config.forms()[i];
    for (int trial = 0; trial < 3; ++trial) {
      Triple x{Scalar(1 + trial), Scalar(2 - trial), Scalar(trial * trial - 1)};
      Triple xp{Scalar(0), Scalar(0), Scalar(0)};
      for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) xp[r] += norm.transform[r][k] * x[k];
      Scalar a = orig[0] * x[0] + orig[1] * x[1] + orig[2] * x[2];
      Scalar b = now[0] * xp[0] + now[1] * xp[1] + now[2] * xp[2];
      EXPECT_EQ(a, b);
    }
  }
  auto same = normalize_basis(cq);
  EXPECT_EQ(same.config.forms(), cq.forms());
}

TEST(Normalize, ConcurrentLinesRejected) {
  auto pencil = config::Configuration::analyze({t(1, 0, 0), t(0, 1, 0), t(1, 1, 0), t(1, -1, 0)});
  EXPECT_THROW(normalize_basis(pencil), Error);
}

TEST(Gradient, RowsAndEulerIdentity) {
  auto c = cq_cover(3);
  auto g = gradient_matrix(c);
  ASSERT_EQ(g.rows(), 3u);
  ASSERT_EQ(g.cols(), 6u);
  std::vector<MultiPoly> expect{MultiPoly(c.vars), z(c, 1).pow(2) * Scalar(3), z(c, 2).pow(2) * Scalar(-3),
                                z(c, 3).pow(2) * Scalar(-3), MultiPoly(c.vars), MultiPoly(c.vars)};
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(g.at(0, k), expect[k]) << k;
  for (std::size_t j = 0; j < 3; ++j) {
    MultiPoly e(c.vars);
    for (std::size_t k = 0; k < 6; ++k) e += g.at(j, k) * z(c, static_cast<int>(k));
    EXPECT_EQ(e, c.equations[j] * Scalar(3));
  }
}

TEST(PointRelations, QuadrangleRelationsHoldExactly) {
  auto c = cq_cover(3);
  auto rel = point_relations(c);
  EXPECT_EQ(rel.size(), 4u);
  const auto& forms = c.config.forms();
  for (const auto& r : rel)
    for (int x = 0; x < 3; ++x) EXPECT_EQ(forms[r.j][x], r.lambda * forms[r.i][x] + r.mu * forms[r.k][x]);
  bool found = false;
  for (const auto& r : rel)
    if (r.point == config::ProjPoint(t(1, 0, 0))) {
      EXPECT_EQ(r.j, 3u);
      EXPECT_EQ(r.i, 1u);
      EXPECT_EQ(r.k, 2u);
      EXPECT_EQ(r.lambda, Scalar(1));
      EXPECT_EQ(r.mu, Scalar(-1));
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(PointRelations, ValencyFiveGivesThreeRelations) {
  auto cfg = config::Configuration::analyze(
      {t(1, 0, 0), t(0, 1, 0), t(0, 0, 1), t(0, 1, 1), t(0, 1, 2), t(0, 1, -1), t(1, 1, 1)});
  auto c = cover_equations(cfg, 3);
  std::size_t at_point = 0;
  for (const auto& r : point_relations(c)) at_point += r.point == config::ProjPoint(t(1, 0, 0));
  EXPECT_EQ(at_point, 3u);
}

TEST(TrivialDeformation, EulerFieldAndSingleGenerator) {
  auto c = cq_cover(3);
  std::vector<MultiPoly> a;
  for (int k = 0; k <= 5; ++k) a.push_back(z(c, k));
  auto phi = trivial_deformation(c, a);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(phi[j], c.equations[j] * Scalar(3));

  std::vector<MultiPoly> e(6, MultiPoly(c.vars));
  e[0] = z(c, 1);
  phi = trivial_deformation(c, e);
  EXPECT_TRUE(phi[0].is_zero());
  EXPECT_EQ(phi[1], z(c, 0).pow(2) * z(c, 1) * Scalar(-3));
  EXPECT_EQ(phi[2], z(c, 0).pow(2) * z(c, 1) * Scalar(3));

  e[0] = z(c, 1) * z(c, 1);
  EXPECT_THROW(trivial_deformation(c, e), InvalidArgument);
}

TEST(Certificate, QuotientDimensionMatchesBinomialCount) {
  for (unsigned n : {3u, 4u}) {
    auto c = cq_cover(n);
    EquisingularSystem sys(c);
    EXPECT_EQ(exact::Integer(static_cast<unsigned long>(sys.quotient_dim())), binomial(n + 5, 5) - 3);
    EXPECT_EQ(sys.ambient_dim(), 3 * sys.quotient_dim());
  }
}

TEST(Certificate, QuadrangleDegreeThreeRegression) {
  auto r = certify_triviality(cq_cover(3));
  EXPECT_TRUE(r.contained);
  EXPECT_TRUE(r.trivial_in_E);
  EXPECT_EQ(r.ambient, 159u);
  EXPECT_EQ(r.dim_T, 35u);
  EXPECT_EQ(r.dim_E, 35u);
  EXPECT_EQ(r.dim_E_plus_T, 35u);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_FALSE(r.soundness_note.empty());
}

TEST(Certificate, QuadrangleDegreeFourRegression) {
  CertifyOptions o;
  o.threads = 2;
  auto r = certify_triviality(cq_cover(4), o);
  EXPECT_TRUE(r.contained);
  EXPECT_EQ(r.ambient, 369u);
  EXPECT_EQ(r.dim_T, 35u);
  EXPECT_EQ(r.dim_E, 35u);
}

TEST(Certificate, TrivialDeformationsSatisfyEveryRelation) {
  auto c = cq_cover(3);
  EquisingularSystem sys(c);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MultiPoly> a;
    for (int k = 0; k <= 5; ++k) {
      MultiPoly f(c.vars);
      for (int m = 0; m <= 5; ++m) f += z(c, m) * oracle::random_rational(rng, 4);
      a.push_back(f);
    }
    EXPECT_TRUE(sys.in_E(sys.phi_vector(trivial_deformation(c, a)))) << trial;
  }
}

TEST(Certificate, PrintedPlusSignBreaksTrivialInclusion) {
  CertifyOptions o;
  o.mu_sign = +1;
  auto r = certify_triviality(cq_cover(3), o);
  EXPECT_FALSE(r.trivial_in_E);
  EXPECT_EQ(r.trivial_generators_outside_E, 12u);
}

TEST(Certificate, ExtendedQuadrangleStaysRigid) {
  auto ext = config::extend(config::catalog("complete-quadrangle"), t(1, 1, -1));
  auto r = certify_triviality(cover_equations(normalize_basis(ext.config).config, 3));
  EXPECT_TRUE(r.contained);
  EXPECT_EQ(r.ambient, 320u);
  EXPECT_EQ(r.dim_T, 48u);
}

TEST(Certificate, InvariantUnderPermutingNonCoordinateLines) {
  auto cq = config::catalog("complete-quadrangle");
  auto f = cq.forms();
  std::swap(f[3], f[5]);
  auto r1 = certify_triviality(cq_cover(3));
  auto r2 = certify_triviality(cover_equations(config::Configuration::analyze(f), 3));
  EXPECT_EQ(r1.dim_E, r2.dim_E);
  EXPECT_EQ(r1.dim_T, r2.dim_T);
  EXPECT_EQ(r1.ambient, r2.ambient);
  EXPECT_EQ(r1.contained, r2.contained);
}

TEST(Certificate, NonSaturatedConfigurationStillReports) {
  auto cfg = config::Configuration::analyze({t(1, 0, 0), t(0, 1, 0), t(0, 0, 1), t(0, 1, -1), t(1, 2, 5)});
  auto r = certify_triviality(cover_equations(cfg, 3));
  EXPECT_EQ(r.relations, 1u);
  EXPECT_LE(r.dim_T, r.dim_E_plus_T);
  EXPECT_EQ(r.contained, r.dim_E_plus_T == r.dim_T);
}

TEST(Certificate, PreconditionsAndGuardrail) {
  EXPECT_THROW(certify_triviality(cq_cover(2)), InvalidArgument);
  auto general = config::Configuration::analyze({t(1, 0, 0), t(0, 1, 0), t(0, 0, 1), t(1, 2, 3)});
  EXPECT_THROW(certify_triviality(cover_equations(general, 3)), Error);
  CertifyOptions o;
  o.max_unknowns = 100;
  EXPECT_THROW(certify_triviality(cq_cover(3), o), GuardrailExceeded);
}

// Coefficient comparison behind the normalization step for the quadrangle:
// Phi_3 + Phi_4 + Phi_5 written two ways forces the forms attached to the same
// z_i^{n-1} to agree away from the z_i coefficient (which span{F} can shift).
TEST(Certificate, QuadrangleCoefficientComparison) {
  auto c = cq_cover(3);
  struct Form {
    const char* name;
    int attach;
    int sign;
  };
  const std::vector<Form> forms{{"u3", 3, 1}, {"u1", 1, -1}, {"u2", 2, 1}, {"v4", 4, 1},  {"v2", 2, -1}, {"v0", 0, 1},
                                {"w5", 5, 1}, {"w0", 0, -1}, {"w1", 1, 1}, {"a3", 3, -1}, {"a4", 4, -1}, {"a5", 5, -1}};
  std::vector<MultiPoly> columns;
  for (const auto& f : forms)
    for (int m = 0; m <= 5; ++m) columns.push_back(z(c, m) * z(c, f.attach).pow(2) * Scalar(f.sign));
  for (const auto& f : c.equations) columns.push_back(-f);
  std::map<exact::Monomial, std::size_t> rows;
  for (const auto& col : columns)
    for (const auto& [mono, coef] : col.terms()) rows.emplace(mono, rows.size());
  exact::DenseMatrix m(rows.size(), exact::DenseVector(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [mono, coef] : columns[j].terms()) m[rows.at(mono)][j] = coef;
  auto kernel = exact::kernel_basis(m, columns.size());
  ASSERT_FALSE(kernel.empty());

  auto index = [&](const char* name) {
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (std::string(forms[i].name) == name) return i;
    throw std::logic_error("unknown form");
  };
  auto agree_off_diagonal = [&](const char* x, const char* y) {
    std::size_t a = index(x), b = index(y);
    if (forms[a].attach != forms[b].attach) return false;
    for (const auto& v : kernel)
      for (int mm = 0; mm <= 5; ++mm) {
        if (mm == forms[a].attach) continue;
        if (!(v[6 * a + mm] == v[6 * b + mm])) return false;
      }
    return true;
  };
  EXPECT_TRUE(agree_off_diagonal("a3", "u3"));
  EXPECT_TRUE(agree_off_diagonal("a4", "v4"));
  EXPECT_TRUE(agree_off_diagonal("a5", "w5"));
  EXPECT_TRUE(agree_off_diagonal("v0", "w0"));
  EXPECT_TRUE(agree_off_diagonal("u1", "w1"));
  EXPECT_TRUE(agree_off_diagonal("u2", "v2"));
  // Pairs attached to different monomials are not forced together.
  EXPECT_FALSE(agree_off_diagonal("u2", "w1"));
}
