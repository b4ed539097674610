#include "hkgeom/kummer/kummer.hpp"

namespace hkgeom::kummer {

using config::cross;
using config::det3;
using config::dot;

namespace {

bool is_unit_form(const Triple& f, std::size_t i) {
  for (std::size_t c = 0; c < 3; ++c)
    if (!(f[c] == Scalar(c == i ? 1 : 0))) return false;
  return true;
}

}  // namespace

bool is_normalized(const Configuration& cfg) {
  if (cfg.line_count() < 3) return false;
  for (std::size_t i = 0; i < 3; ++i)
    if (!is_unit_form(cfg.forms()[i], i)) return false;
  return true;
}

Normalization normalize_basis(const Configuration& cfg) {
  const auto& forms = cfg.forms();
  std::size_t count = forms.size();
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      for (std::size_t c = b + 1; c < count; ++c) {
        Scalar d = det3(forms[a], forms[b], forms[c]);
        if (d.is_zero()) continue;
        std::array<Triple, 3> inv_cols{cross(forms[b], forms[c]), cross(forms[c], forms[a]), cross(forms[a], forms[b])};
        Scalar dinv = d.inverse();
        Normalization norm{cfg, {a, b, c}, {a, b, c}, {forms[a], forms[b], forms[c]}};
        for (std::size_t i = 0; i < count; ++i)
          if (i != a && i != b && i != c) norm.order.push_back(i);
        std::vector<Triple> next;
        for (auto i : norm.order) {
          Triple t;
          for (std::size_t k = 0; k < 3; ++k) t[k] = dot(forms[i], inv_cols[k]) * dinv;
          next.push_back(t);
        }
        norm.config = Configuration::analyze(next);
        return norm;
      }
  throw InvalidArgument("all lines are concurrent; no projective frame to normalize to");
}

KummerCover cover_equations(const Configuration& cfg, unsigned n) {
  if (n < 1) throw InvalidArgument("Kummer exponent must be positive");
  if (!is_normalized(cfg)) throw InvalidArgument("unnormalized configuration: the first three forms must be x0, x1, x2");
  std::size_t r = cfg.line_count() - 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= r; ++i) names.push_back("z" + std::to_string(i));
  KummerCover cover{cfg, n, r, Variables(names), {}};
  for (std::size_t j = 3; j <= r; ++j) {
    MultiPoly f(cover.vars);
    const Triple& l = cfg.forms()[j];
    for (std::size_t c = 0; c < 3; ++c) {
      exact::Monomial m(r + 1, 0);
      m[c] = n;
      f.add_term(m, l[c]);
    }
    exact::Monomial m(r + 1, 0);
    m[j] = n;
    f.add_term(m, Scalar(-1));
    cover.equations.push_back(std::move(f));
  }
  return cover;
}

PolyMatrix gradient_matrix(const KummerCover& cover) {
  PolyMatrix g(cover.vars, cover.equations.size(), cover.r + 1);
  for (std::size_t j = 0; j < cover.equations.size(); ++j)
    for (std::size_t k = 0; k <= cover.r; ++k) g.set(j, k, cover.equations[j].derivative(k));
  return g;
}

std::vector<PointRelation> point_relations(const KummerCover& cover) {
  const auto& cfg = cover.config;
  const auto& forms = cfg.forms();
  std::vector<PointRelation> out;
  for (std::size_t s = 0; s < cfg.singular_count(); ++s) {
    const auto& ip = cfg.singular_point(s);
    std::size_t i = ip.lines[0], k = ip.lines[1];
    // Solve l_j = lambda l_i + mu l_k with a nonvanishing 2x2 minor of (l_i, l_k).
    std::size_t c0 = 0, c1 = 1;
    Scalar d;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        Scalar m = forms[i][a] * forms[k][b] - forms[i][b] * forms[k][a];
        if (d.is_zero() && !m.is_zero()) {
          d = m;
          c0 = a;
          c1 = b;
        }
      }
    for (std::size_t t = 2; t < ip.lines.size(); ++t) {
      std::size_t j = ip.lines[t];
      const Triple& lj = forms[j];
      Scalar lambda = (lj[c0] * forms[k][c1] - lj[c1] * forms[k][c0]) / d;
      Scalar mu = (forms[i][c0] * lj[c1] - forms[i][c1] * lj[c0]) / d;
      for (std::size_t c = 0; c < 3; ++c)
        if (!(lj[c] == lambda * forms[i][c] + mu * forms[k][c]))
          throw Error("internal: concurrent lines failed to satisfy a linear relation");
      out.push_back({ip.point, j, i, k, lambda, mu});
    }
  }
  return out;
}

std::vector<MultiPoly> trivial_deformation(const KummerCover& cover, const std::vector<MultiPoly>& a) {
  if (a.size() != cover.r + 1) throw InvalidArgument("trivial deformation needs r+1 linear forms");
  for (const auto& ak : a) {
    if (!(ak.variables() == cover.vars)) throw InvalidArgument("linear forms must be in z0..zr");
    if (!ak.is_zero() && (!ak.is_homogeneous() || ak.total_degree() != 1))
      throw InvalidArgument("trivial deformation entries must be linear forms");
  }
  std::vector<MultiPoly> phi;
  for (const auto& f : cover.equations) {
    MultiPoly s(cover.vars);
    for (std::size_t k = 0; k <= cover.r; ++k) {
      if (a[k].is_zero()) continue;
      s += f.derivative(k) * a[k];
    }
    phi.push_back(std::move(s));
  }
  return phi;
}

}  // namespace hkgeom::kummer
