#include "hkgeom/delpezzo/delpezzo.hpp"

#include "hkgeom/exactmath/linalg.hpp"

namespace hkgeom::delpezzo {

namespace {

MultiPoly linear(const Variables& vars, const Scalar& a1, const Scalar& a2, const Scalar& a3) {
  MultiPoly p(vars);
  p += MultiPoly::variable(vars, 0) * a1;
  p += MultiPoly::variable(vars, 1) * a2;
  p += MultiPoly::variable(vars, 2) * a3;
  return p;
}

std::array<Scalar, 3> coefficients(const MultiPoly& form) {
  std::array<Scalar, 3> c;
  for (std::size_t i = 0; i < 3; ++i) {
    exact::Monomial m(form.variables().size(), 0);
    m[i] = 1;
    c[i] = form.coefficient(m);
  }
  return c;
}

// (alpha, beta) with target = alpha e1 + beta e2, if it exists.
std::optional<std::array<Scalar, 2>> solve_in_span(const std::array<Scalar, 3>& t, const std::array<Scalar, 3>& e1,
                                                   const std::array<Scalar, 3>& e2) {
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) {
      Scalar d = e1[a] * e2[b] - e1[b] * e2[a];
      if (d.is_zero()) continue;
      Scalar alpha = (t[a] * e2[b] - t[b] * e2[a]) / d;
      Scalar beta = (e1[a] * t[b] - e1[b] * t[a]) / d;
      for (std::size_t c = 0; c < 3; ++c)
        if (!(t[c] == alpha * e1[c] + beta * e2[c])) return std::nullopt;
      return std::array<Scalar, 2>{alpha, beta};
    }
  return std::nullopt;
}

}  // namespace

const Variables& plane_variables() {
  static const Variables vars{"x1", "x2", "x3"};
  return vars;
}

BlowupData BlowupData::make(std::vector<ProjPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw InvalidArgument("blow-up points must be distinct");
      for (std::size_t k = j + 1; k < points.size(); ++k)
        if (config::collinear(points[i], points[j], points[k]))
          throw InvalidArgument("three blow-up points are collinear");
    }
  return BlowupData{std::move(points)};
}

std::vector<std::string> default_block_names(std::size_t k) {
  static const std::vector<std::string> names{"y", "z", "t", "w", "v"};
  if (k > names.size()) throw InvalidArgument("at most five blow-up points are supported");
  return {names.begin(), names.begin() + static_cast<long>(k)};
}

ProjectionRow projection_row(const ProjPoint& p, const Variables& vars, const std::string& block) {
  const Variables& x = plane_variables();
  MultiPoly s1 = MultiPoly::variable(vars, block + "1");
  MultiPoly s2 = MultiPoly::variable(vars, block + "2");
  MultiPoly zero(vars);
  const auto& c = p.coords();
  Scalar one(1), nil(0);
  auto is = [&](long a, long b, long d) { return c[0] == Scalar(a) && c[1] == Scalar(b) && c[2] == Scalar(d); };
  ProjectionRow out{block, {zero, zero, zero}, {block, MultiPoly(x), MultiPoly(x)}};
  if (is(0, 0, 1)) {
    out.row = {s2, -s1, zero};
    out.pencil.ell = linear(x, one, nil, nil);
    out.pencil.m = linear(x, nil, one, nil);
  } else if (is(0, 1, 0)) {
    out.row = {s1, zero, -s2};
    out.pencil.ell = linear(x, nil, nil, -one);
    out.pencil.m = linear(x, -one, nil, nil);
  } else if (is(1, 0, 0)) {
    out.row = {zero, s2, -s1};
    out.pencil.ell = linear(x, nil, one, nil);
    out.pencil.m = linear(x, nil, nil, one);
  } else if (is(1, 1, 1)) {
    out.row = {-s2, s1 + s2, -s1};
    out.pencil.ell = linear(x, -one, one, nil);
    out.pencil.m = linear(x, nil, -one, one);
  } else if (!c[1].is_zero()) {
    Scalar lambda = c[0] / c[1], mu = c[2] / c[1];
    out.row = {s2, -(s2 * lambda) - s1 * mu, s1};
    out.pencil.ell = linear(x, one, -lambda, nil);
    out.pencil.m = linear(x, nil, mu, -one);
  } else {
    out.row = {-(s1 * c[2]), s2, s1 * c[0]};
    out.pencil.ell = linear(x, nil, one, nil);
    out.pencil.m = linear(x, c[2], nil, -c[0]);
  }
  return out;
}

bool DeterminantalPresentation::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const Check* DeterminantalPresentation::find_check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::vector<std::size_t>> DeterminantalPresentation::block_indices() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : blocks) out.push_back(b.vars);
  return out;
}

bool vanishes_on_parametrization(const DeterminantalPresentation& p, const std::vector<MultiPoly>& polys) {
  for (const auto& f : polys)
    if (!f.substitute(p.parametrization).is_zero()) return false;
  return true;
}

namespace {

// Ambient variables: optional x-block followed by (name1, name2) per block.
DeterminantalPresentation blocks_skeleton(const std::vector<std::string>& names, bool with_plane) {
  std::vector<std::string> all;
  if (with_plane) all = plane_variables().names();
  for (const auto& n : names) {
    all.push_back(n + "1");
    all.push_back(n + "2");
  }
  DeterminantalPresentation p;
  p.vars = Variables(all);
  p.param_vars = plane_variables();
  for (const auto& n : names) p.blocks.push_back({n, {p.vars.index(n + "1"), p.vars.index(n + "2")}});
  return p;
}

void set_parametrization(DeterminantalPresentation& p) {
  p.parametrization.assign(p.vars.size(), MultiPoly(p.param_vars));
  for (std::size_t i = 0; i < p.param_vars.size(); ++i)
    if (auto j = p.vars.find(p.param_vars.name(i))) p.parametrization[*j] = MultiPoly::variable(p.param_vars, i);
  for (const auto& pen : p.pencils) {
    p.parametrization[p.vars.index(pen.block + "1")] = pen.ell.rebind(p.param_vars);
    p.parametrization[p.vars.index(pen.block + "2")] = pen.m.rebind(p.param_vars);
  }
}

}  // namespace

DeterminantalPresentation graph_equations(const BlowupData& points) {
  std::size_t k = points.points.size();
  if (k < 1 || k > 2) throw InvalidArgument("graph equations are used for one or two points");
  auto names = default_block_names(k);
  DeterminantalPresentation p = blocks_skeleton(names, true);
  p.label = k == 1 ? "dp8" : "dp7";
  for (std::size_t i = 0; i < k; ++i) {
    ProjectionRow row = projection_row(points.points[i], p.vars, names[i]);
    MultiPoly eq(p.vars);
    for (std::size_t c = 0; c < 3; ++c) eq += row.row[c] * MultiPoly::variable(p.vars, "x" + std::to_string(c + 1));
    p.equations.push_back(std::move(eq));
    p.pencils.push_back(row.pencil);
  }
  set_parametrization(p);
  p.checks.push_back({"parametrization_vanishing", vanishes_on_parametrization(p, p.equations)});
  return p;
}

DeterminantalPresentation dp_presentation(const BlowupData& points, std::vector<std::string> block_names) {
  std::size_t k = points.points.size();
  if (k < 3) throw InvalidArgument("determinantal presentation needs at least three points");
  if (block_names.empty()) block_names = default_block_names(k);
  if (block_names.size() != k) throw InvalidArgument("one block name per point");
  DeterminantalPresentation p = blocks_skeleton(block_names, false);
  p.label = "dp" + std::to_string(9 - k);
  PolyMatrix a(p.vars, k, 3);
  for (std::size_t i = 0; i < k; ++i) {
    ProjectionRow row = projection_row(points.points[i], p.vars, block_names[i]);
    for (std::size_t c = 0; c < 3; ++c) a.set(i, c, row.row[c]);
    p.pencils.push_back(row.pencil);
  }
  p.matrix = a;
  p.minors = exact::maximal_minors(a, 3);
  for (const auto& m : p.minors) p.equations.push_back(m.value);
  set_parametrization(p);
  p.checks.push_back({"parametrization_vanishing", vanishes_on_parametrization(p, p.equations)});
  if (k == 4) {
    p.syzygy_matrix = a;
    PolyMatrix g(p.vars, 1, 4);
    for (std::size_t j = 0; j < 4; ++j) g.set(0, j, p.equations[j]);
    p.checks.push_back({"complex", (g * a).is_zero()});
    bool syz = true;
    for (std::size_t c = 0; c < 3; ++c) {
      MultiPoly s(p.vars);
      for (std::size_t j = 0; j < 4; ++j) s += a.at(j, c) * p.equations[j];
      syz = syz && s.is_zero();
    }
    p.checks.push_back({"syzygy", syz});
  }
  return p;
}

PolyMatrix dp_matrix(const BlowupData& points) { return *dp_presentation(points).matrix; }

MultiPoly dp6_equation(const BlowupData& points) {
  if (points.points.size() != 3) throw InvalidArgument("degree-6 equation needs exactly three points");
  for (const auto& q : points.points) {
    const auto& c = q.coords();
    int nonzero = 0;
    for (const auto& v : c) nonzero += !v.is_zero();
    if (nonzero != 1) throw InvalidArgument("degree-6 equation expects the three coordinate points");
  }
  return exact::determinant(dp_matrix(points));
}

std::vector<ComplexTerm> eagon_northcott_terms(int k) {
  switch (k) {
    case 3:
      return {{1, "O(-H1-H2-H3)"}, {1, "O"}};
    case 4:
      return {{3, "O(-sum_i H_i)^3"}, {4, "sum_j O(-sum_i H_i + H_j)"}, {1, "O"}};
    case 5:
      return {{6, "O(-sum_i H_i)^6"},
              {15, "(sum_j O(-sum_i H_i + H_j))^3"},
              {10, "sum_{h<k} O(-sum_i H_i + H_h + H_k)"},
              {1, "O"}};
    default:
      throw InvalidArgument("Eagon-Northcott bookkeeping is provided for 3 <= k <= 5");
  }
}

std::vector<BlockMatch> pencil_correspondence(const DeterminantalPresentation& a, const DeterminantalPresentation& b) {
  std::vector<BlockMatch> out;
  for (const auto& pa : a.pencils) {
    for (const auto& pb : b.pencils) {
      auto e1 = coefficients(pb.ell), e2 = coefficients(pb.m);
      auto r1 = solve_in_span(coefficients(pa.ell), e1, e2);
      auto r2 = solve_in_span(coefficients(pa.m), e1, e2);
      if (!r1 || !r2) continue;
      out.push_back({pa.block, pb.block, {{{(*r1)[0], (*r1)[1]}, {(*r2)[0], (*r2)[1]}}}});
      break;
    }
  }
  return out;
}

}  // namespace hkgeom::delpezzo
