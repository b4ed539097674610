#include <gtest/gtest.h>

#include "hkgeom/configuration/configuration.hpp"
#include "hkgeom/errors.hpp"
#include "oracles.hpp"

using namespace hkgeom;
using namespace hkgeom::config;

namespace {

Triple t(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

long chi_oracle(const std::vector<std::size_t>& n_per_line, std::size_t m) {
  long s = 8 - 2 * static_cast<long>(m);
  for (auto n : n_per_line) s += static_cast<long>(n) - 2;
  return s;
}

// Lines transform contravariantly: l -> l * M^{-1}; here M^{-1} is given directly.
std::vector<Triple> transform(const std::vector<Triple>& forms, const std::array<Triple, 3>& minv) {
  std::vector<Triple> out;
  for (const auto& l : forms) {
    Triple r{Scalar(0), Scalar(0), Scalar(0)};
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) r[j] += l[i] * minv[i][j];
    out.push_back(r);
  }
  return out;
}

void expect_matches_oracle(const Configuration& cfg) {
  auto inc = oracle::brute_incidence(cfg.forms());
  ASSERT_EQ(inc.points.size(), cfg.points().size());
  std::vector<std::size_t> ours, theirs = inc.valency;
  for (const auto& p : cfg.points()) ours.push_back(p.valency());
  std::sort(ours.begin(), ours.end());
  std::sort(theirs.begin(), theirs.end());
  EXPECT_EQ(ours, theirs);
  EXPECT_EQ(cfg.singular_per_line(), inc.singular_per_line);
}

}  // namespace

TEST(Catalog, CompleteQuadrangleCombinatorics) {
  auto cq = catalog("complete-quadrangle");
  EXPECT_EQ(cq.line_count(), 6u);
  EXPECT_EQ(cq.singular_count(), 4u);
  for (auto n : cq.singular_per_line()) EXPECT_EQ(n, 2u);
  EXPECT_EQ(euler_characteristic(cq), chi_oracle(cq.singular_per_line(), 4));
  EXPECT_EQ(euler_characteristic(cq), 0);
  std::size_t doubles = 0;
  for (const auto& p : cq.points()) doubles += p.valency() == 2;
  EXPECT_EQ(doubles, 3u);
  expect_matches_oracle(cq);
}

TEST(Catalog, HesseCombinatorics) {
  auto h = catalog("hesse");
  EXPECT_EQ(h.line_count(), 12u);
  EXPECT_EQ(h.singular_count(), 9u);
  for (std::size_t s = 0; s < h.singular_count(); ++s) EXPECT_EQ(h.singular_point(s).valency(), 4u);
  for (auto n : h.singular_per_line()) EXPECT_EQ(n, 3u);
  EXPECT_EQ(euler_characteristic(h), 2);
  EXPECT_EQ(h.field(), FieldSpec::cyclotomic(3));
  expect_matches_oracle(h);
}

TEST(Catalog, DualHesseCombinatorics) {
  auto d = catalog("dual-hesse");
  EXPECT_EQ(d.line_count(), 9u);
  EXPECT_EQ(d.singular_count(), 12u);
  for (std::size_t s = 0; s < d.singular_count(); ++s) EXPECT_EQ(d.singular_point(s).valency(), 3u);
  for (auto n : d.singular_per_line()) EXPECT_EQ(n, 4u);
  EXPECT_EQ(euler_characteristic(d), chi_oracle(d.singular_per_line(), 12));
  EXPECT_EQ(euler_characteristic(d), 2);
  expect_matches_oracle(d);
}

TEST(Catalog, UnknownNameIsRejected) { EXPECT_THROW(catalog("nope"), InvalidArgument); }

TEST(Catalog, HesseLinesJoinFermatFlexes) {
  // Every Hesse line passes through exactly three flexes of x^3 + y^3 + z^3.
  auto h = catalog("hesse");
  std::vector<Triple> flexes;
  for (int a = 0; a < 3; ++a) {
    Scalar w = Scalar::zeta(3, a);
    flexes.push_back({Scalar(1), -w, Scalar(0)});
    flexes.push_back({Scalar(0), Scalar(1), -w});
    flexes.push_back({-w, Scalar(0), Scalar(1)});
  }
  for (const auto& f : flexes) {
    Scalar cubic = f[0] * f[0] * f[0] + f[1] * f[1] * f[1] + f[2] * f[2] * f[2];
    EXPECT_TRUE(cubic.is_zero());
  }
  for (const auto& l : h.forms()) {
    int on = 0;
    for (const auto& f : flexes) on += (l[0] * f[0] + l[1] * f[1] + l[2] * f[2]).is_zero();
    EXPECT_EQ(on, 3);
  }
}

TEST(Rigidity, SaturationFlags) {
  auto cq = rigidity_report(catalog("complete-quadrangle"));
  EXPECT_TRUE(cq.singularly_saturated);
  EXPECT_TRUE(cq.inductive_chain_found);
  auto h = rigidity_report(catalog("hesse"));
  EXPECT_TRUE(h.singularly_saturated);
  EXPECT_TRUE(h.inductive_chain_found);
  auto d = rigidity_report(catalog("dual-hesse"));
  EXPECT_FALSE(d.singularly_saturated);
  EXPECT_TRUE(d.all_ni_ge2);
  EXPECT_TRUE(d.has_projective_basis);
}

TEST(Rigidity, DualHesseHasNoCompleteQuadrangleOfSingularPoints) {
  // Oracle: search all quadruples of singular points for one with no three
  // collinear whose six joins are all lines of the arrangement.
  auto d = catalog("dual-hesse");
  std::vector<Triple> pts;
  for (std::size_t s = 0; s < d.singular_count(); ++s) pts.push_back(d.singular_point(s).point.coords());
  auto joined = [&](const Triple& a, const Triple& b) {
    Triple l = oracle::cross(a, b);
    for (const auto& f : d.forms())
      if (oracle::proportional(l, f)) return true;
    return false;
  };
  std::size_t found = 0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        for (std::size_t e = c + 1; e < pts.size(); ++e) {
          std::array<Triple, 4> q{pts[a], pts[b], pts[c], pts[e]};
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j) {
              ok = joined(q[i], q[j]);
              for (int k = j + 1; k < 4 && ok; ++k) ok = !oracle::det3(q[i], q[j], q[k]).is_zero();
            }
          found += ok;
        }
  EXPECT_EQ(found, 0u);
  EXPECT_FALSE(rigidity_report(d).inductive_chain_found);
  EXPECT_EQ(rigidity_report(d).base_quadruples_tried, 0u);
}

TEST(Rigidity, ChainCoversAllLinesWhenFound) {
  for (const char* name : {"complete-quadrangle", "hesse"}) {
    auto cfg = catalog(name);
    auto r = rigidity_report(cfg);
    ASSERT_TRUE(r.chain.has_value());
    std::vector<bool> covered(cfg.line_count(), false);
    for (auto l : r.chain->initial) covered[l] = true;
    for (const auto& s : r.chain->steps)
      for (auto l : s.added) covered[l] = true;
    EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) << name;
  }
}

TEST(Analyze, InputErrors) {
  EXPECT_THROW(Configuration::analyze({t(1, 0, 0)}), InvalidArgument);
  EXPECT_THROW(Configuration::analyze({t(1, 0, 0), t(2, 0, 0), t(0, 1, 0)}), InvalidArgument);
  EXPECT_THROW(Configuration::analyze({t(0, 0, 0), t(0, 1, 0)}), Error);
}

TEST(Analyze, EulerCharacteristicNeedsSaturationHypotheses) {
  auto pencil = Configuration::analyze({t(1, 0, 0), t(0, 1, 0), t(1, 1, 0), t(1, -1, 0)});
  EXPECT_THROW(euler_characteristic(pencil), NotApplicable);
  EXPECT_EQ(pencil.singular_count(), 1u);
  EXPECT_FALSE(rigidity_report(pencil).chi.has_value());
}

TEST(Analyze, IncidenceTypeInvariantUnderProjectiveTransformations) {
  std::mt19937_64 rng(23);
  for (const char* name : {"complete-quadrangle", "hesse", "dual-hesse"}) {
    auto cfg = catalog(name);
    for (int trial = 0; trial < 3; ++trial) {
      std::array<Triple, 3> m;
      do {
        for (auto& row : m)
          for (auto& e : row) e = Scalar(static_cast<long>(rng() % 7) - 3);
      } while (oracle::det3(m[0], m[1], m[2]).is_zero());
      auto moved = Configuration::analyze(transform(cfg.forms(), m));
      EXPECT_TRUE(same_incidence_type(cfg, moved)) << name;
      EXPECT_EQ(moved.singular_count(), cfg.singular_count());
      expect_matches_oracle(moved);
    }
  }
}

TEST(Analyze, SameIncidenceTypeDistinguishes) {
  auto cq = catalog("complete-quadrangle");
  auto general = Configuration::analyze({t(1, 0, 0), t(0, 1, 0), t(0, 0, 1), t(1, 1, 1), t(1, 2, 3), t(1, -1, 2)});
  EXPECT_FALSE(same_incidence_type(cq, general));
  EXPECT_THROW(same_incidence_type(cq, catalog("hesse")), InvalidArgument);
}

TEST(Extend, LineThroughTwoDoublePoints) {
  auto cq = catalog("complete-quadrangle");
  auto ext = extend(cq, t(1, 1, -1));
  EXPECT_EQ(ext.kind, ExtensionCase::a);
  EXPECT_EQ(ext.double_points_on_line, 2u);
  EXPECT_EQ(ext.m_delta, 2);
  EXPECT_EQ(ext.config.line_count(), 7u);
  expect_matches_oracle(ext.config);
}

TEST(Extend, ExistingLineRejected) {
  auto cq = catalog("complete-quadrangle");
  EXPECT_THROW(extend(cq, t(0, 2, -2)), InvalidArgument);
}

TEST(Extend, ClassificationAgreesWithDirectCounts) {
  auto base = extend(catalog("complete-quadrangle"), t(1, 1, -1)).config;
  std::mt19937_64 rng(4);
  int tried = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        Triple l = t(a, b, c);
        if (a == 0 && b == 0 && c == 0) continue;
        bool present = false;
        for (const auto& f : base.forms()) present = present || oracle::proportional(l, f);
        if (present) continue;
        auto ext = extend(base, l);
        std::size_t d = 0, s = 0;
        for (const auto& p : base.points()) {
          Triple q = p.point.coords();
          bool on = (l[0] * q[0] + l[1] * q[1] + l[2] * q[2]).is_zero();
          if (!on) continue;
          if (p.valency() == 2) ++d;
          else ++s;
        }
        EXPECT_EQ(ext.double_points_on_line, d);
        EXPECT_EQ(ext.singular_points_on_line, s);
        ExtensionCase expect = d == 2 ? ExtensionCase::a
                               : (d == 1 && s >= 1) ? ExtensionCase::b
                               : (d == 0 && s >= 2) ? ExtensionCase::c
                                                    : ExtensionCase::other;
        EXPECT_EQ(ext.kind, expect);
        EXPECT_EQ(static_cast<long>(ext.config.singular_count()) - static_cast<long>(base.singular_count()), ext.m_delta);
        ++tried;
      }
  EXPECT_GT(tried, 20);
}
