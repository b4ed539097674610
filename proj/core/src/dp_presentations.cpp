#include <map>

#include "hkgeom/delpezzo/delpezzo.hpp"
#include "hkgeom/exactmath/linalg.hpp"

namespace hkgeom::delpezzo {

namespace {

ProjPoint pt(long a, long b, long c) { return ProjPoint({Scalar(a), Scalar(b), Scalar(c)}); }

MultiPoly var(const Variables& v, const std::string& name) { return MultiPoly::variable(v, name); }

// Coefficient vectors of polynomials over a shared monomial index.
exact::DenseMatrix coefficient_rows(const std::vector<MultiPoly>& polys) {
  std::map<exact::Monomial, std::size_t, exact::GrLexLess> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) index.emplace(m, index.size());
  exact::DenseMatrix rows;
  for (const auto& p : polys) {
    exact::DenseVector r(index.size());
    for (const auto& [m, c] : p.terms()) r[index.at(m)] = c;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t span_rank(const std::vector<MultiPoly>& polys) {
  auto rows = coefficient_rows(polys);
  return rows.empty() ? 0 : exact::rank(rows, rows.front().size());
}

bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  std::vector<MultiPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t r = span_rank(both);
  return r == span_rank(a) && r == span_rank(b);
}

bool equal_up_to_sign(const MultiPoly& a, const MultiPoly& b) { return a == b || a == -b; }

std::vector<Scalar> image_point(const DeterminantalPresentation& p, const std::vector<Scalar>& x) {
  std::vector<Scalar> out;
  for (const auto& im : p.parametrization) out.push_back(im.evaluate(x));
  return out;
}

// Rank 2 at the image of x = (1:2:4); rank 3 at the first small integer point where some minor is nonzero.
void add_rank_checks(DeterminantalPresentation& p) {
  const PolyMatrix& a = *p.matrix;
  auto img = image_point(p, {Scalar(1), Scalar(2), Scalar(4)});
  p.checks.push_back({"rank_2_on_surface", exact::rank(a.evaluate(img), 3) == 2});
  std::vector<Scalar> off(p.vars.size());
  bool found = false;
  for (long seed = 1; seed < 200 && !found; ++seed) {
    for (std::size_t i = 0; i < off.size(); ++i) off[i] = Scalar((seed * static_cast<long>(2 * i + 3)) % 7 - 3);
    for (const auto& eq : p.equations)
      if (!eq.evaluate(off).is_zero()) found = true;
  }
  p.checks.push_back({"rank_3_off_surface", found && exact::rank(a.evaluate(off), 3) == 3});
}

void add_hilbert_burch_checks(DeterminantalPresentation& p) {
  const PolyMatrix& a = *p.matrix;
  PolyMatrix g(p.vars, 1, a.rows());
  for (std::size_t j = 0; j < a.rows(); ++j) g.set(0, j, p.equations[j]);
  p.checks.push_back({"complex", (g * a).is_zero()});
  bool syz = true;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    MultiPoly s(p.vars);
    for (std::size_t j = 0; j < a.rows(); ++j) s += a.at(j, c) * p.equations[j];
    syz = syz && s.is_zero();
  }
  p.checks.push_back({"syzygy", syz});
}

DeterminantalPresentation dp5_projection() {
  DeterminantalPresentation p =
      dp_presentation(BlowupData::make({pt(0, 0, 1), pt(0, 1, 0), pt(1, 0, 0), pt(1, 1, 1)}));
  p.label = "dp5-projection";
  p.checks.clear();
  p.checks.push_back({"parametrization_vanishing", vanishes_on_parametrization(p, p.equations)});
  add_hilbert_burch_checks(p);
  add_rank_checks(p);
  return p;
}

const char* kBlocks4[] = {"v", "w", "z", "t"};

DeterminantalPresentation dp5_symmetric() {
  DeterminantalPresentation p;
  p.label = "dp5-symmetric";
  p.vars = dp5_variables();
  p.param_vars = plane_variables();
  for (const char* b : kBlocks4) {
    std::string n(b);
    p.blocks.push_back({n, {p.vars.index(n + "1"), p.vars.index(n + "2")}});
  }
  const Variables& v = p.vars;
  MultiPoly zero(v);
  p.matrix = PolyMatrix(v, {{var(v, "t2"), -var(v, "t1"), var(v, "t1") + var(v, "t2")},
                            {var(v, "v1"), var(v, "v2"), zero},
                            {var(v, "w2"), zero, var(v, "w1")},
                            {zero, -var(v, "z1"), var(v, "z2")}});
  p.syzygy_matrix = p.matrix;
  p.minors = exact::maximal_minors(*p.matrix, 3);
  for (const auto& m : p.minors) p.equations.push_back(m.value);

  const Variables& x = plane_variables();
  MultiPoly x1 = var(x, "x1"), x2 = var(x, "x2"), x3 = var(x, "x3");
  MultiPoly y1 = x3 - x2, y2 = x1 - x3;
  p.pencils = {{"v", x1, x2}, {"w", x2, x3}, {"z", x3, x1}, {"t", y1, y2}};
  p.parametrization.assign(v.size(), MultiPoly(x));
  for (const auto& pen : p.pencils) {
    p.parametrization[v.index(pen.block + "1")] = pen.ell;
    p.parametrization[v.index(pen.block + "2")] = pen.m;
  }
  p.checks.push_back({"parametrization_vanishing", vanishes_on_parametrization(p, p.equations)});
  add_hilbert_burch_checks(p);
  add_rank_checks(p);

  auto sym = dp5_symmetric_equations();
  bool sym_ok = vanishes_on_parametrization(p, sym);
  for (std::size_t i = 0; i < 4; ++i) sym_ok = sym_ok && equal_up_to_sign(sym[i], p.equations[i]);
  p.checks.push_back({"symmetric_equations_match_minors", sym_ok});

  // Projection variant: rewrite its minors in symmetric-matrix coordinates via the pencil transitions.
  DeterminantalPresentation proj = dp5_projection();
  auto match = pencil_correspondence(proj, p);
  bool variant_ok = match.size() == 4;
  if (variant_ok) {
    std::vector<MultiPoly> images(proj.vars.size(), MultiPoly(v));
    for (const auto& bm : match) {
      MultiPoly b1 = var(v, bm.block_b + "1"), b2 = var(v, bm.block_b + "2");
      const auto& t = bm.transition;
      images[proj.vars.index(bm.block_a + "1")] = b1 * t[0][0] + b2 * t[0][1];
      images[proj.vars.index(bm.block_a + "2")] = b1 * t[1][0] + b2 * t[1][1];
    }
    std::vector<MultiPoly> moved;
    for (const auto& e : proj.equations) moved.push_back(e.substitute(images));
    variant_ok = same_span(moved, p.equations);
  }
  p.checks.push_back({"projection_variant_same_span", variant_ok});
  return p;
}

}  // namespace

const Variables& dp5_variables() {
  static const Variables vars{"v1", "v2", "w1", "w2", "z1", "z2", "t1", "t2"};
  return vars;
}

const Variables& dp5_homogeneous_variables() {
  static const Variables vars{"v1", "v2", "v3", "w1", "w2", "w3", "z1", "z2", "z3", "t1", "t2", "t3"};
  return vars;
}

std::vector<MultiPoly> dp5_symmetric_equations_homogeneous() {
  const Variables& h = dp5_homogeneous_variables();
  auto m = [&](const char* a, const char* b, const char* c) { return var(h, a) * var(h, b) * var(h, c); };
  return {m("v1", "w1", "z1") - m("v2", "w2", "z2"), m("w3", "z1", "t2") - m("w2", "z3", "t1"),
          m("z3", "v1", "t3") - m("z2", "v3", "t2"), m("v3", "w1", "t1") - m("v2", "w3", "t3")};
}

std::vector<MultiPoly> dp5_eliminate_third(const Variables& target) {
  const Variables& h = dp5_homogeneous_variables();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const std::string& name = h.name(i);
    std::string b = name.substr(0, 1);
    if (name[1] != '3') {
      images.push_back(var(target, name));
    } else if (b == "t") {
      images.push_back(-var(target, "t1") - var(target, "t2"));
    } else {
      images.push_back(var(target, b + "2") - var(target, b + "1"));
    }
  }
  return images;
}

std::vector<MultiPoly> dp5_symmetric_equations() {
  auto images = dp5_eliminate_third(dp5_variables());
  std::vector<MultiPoly> out;
  for (const auto& e : dp5_symmetric_equations_homogeneous()) out.push_back(e.substitute(images));
  return out;
}

DeterminantalPresentation dp5_presentation(Dp5Variant variant) {
  return variant == Dp5Variant::projection ? dp5_projection() : dp5_symmetric();
}

DeterminantalPresentation dp4_presentation(std::optional<Scalar> lambda, std::optional<Scalar> mu) {
  if (lambda.has_value() != mu.has_value()) throw InvalidArgument("give both lambda and mu or neither");
  std::vector<ProjPoint> base{pt(0, 0, 1), pt(0, 1, 0), pt(1, 0, 0), pt(1, 1, 1)};
  if (lambda) {
    base.emplace_back(config::Triple{*lambda, Scalar(1), *mu});
    DeterminantalPresentation p = dp_presentation(BlowupData::make(base));
    p.label = "dp4";
    return p;
  }
  auto names = default_block_names(5);
  std::vector<std::string> all;
  for (const auto& n : names) {
    all.push_back(n + "1");
    all.push_back(n + "2");
  }
  all.push_back("lambda");
  all.push_back("mu");
  DeterminantalPresentation p;
  p.label = "dp4";
  p.vars = Variables(all);
  p.param_vars = Variables{"x1", "x2", "x3", "lambda", "mu"};
  for (const auto& n : names) p.blocks.push_back({n, {p.vars.index(n + "1"), p.vars.index(n + "2")}});
  PolyMatrix a(p.vars, 5, 3);
  for (std::size_t i = 0; i < 4; ++i) {
    ProjectionRow row = projection_row(base[i], p.vars, names[i]);
    for (std::size_t c = 0; c < 3; ++c) a.set(i, c, row.row[c]);
    p.pencils.push_back(row.pencil);
  }
  const Variables& v = p.vars;
  MultiPoly l = var(v, "lambda"), m = var(v, "mu"), v1 = var(v, "v1"), v2 = var(v, "v2");
  a.set(4, 0, v2);
  a.set(4, 1, -(l * v2) - m * v1);
  a.set(4, 2, v1);
  p.matrix = a;
  p.minors = exact::maximal_minors(a, 3);
  for (const auto& mi : p.minors) p.equations.push_back(mi.value);

  const Variables& q = p.param_vars;
  p.parametrization.assign(v.size(), MultiPoly(q));
  for (const auto& pen : p.pencils) {
    p.parametrization[v.index(pen.block + "1")] = pen.ell.rebind(q);
    p.parametrization[v.index(pen.block + "2")] = pen.m.rebind(q);
  }
  MultiPoly ql = var(q, "lambda"), qm = var(q, "mu");
  p.parametrization[v.index("v1")] = var(q, "x1") - ql * var(q, "x2");
  p.parametrization[v.index("v2")] = qm * var(q, "x2") - var(q, "x3");
  p.parametrization[v.index("lambda")] = ql;
  p.parametrization[v.index("mu")] = qm;
  p.checks.push_back({"parametrization_vanishing", vanishes_on_parametrization(p, p.equations)});
  return p;
}

TenEquations dp5_ten_equations() {
  // Coordinates of each block as monomials in the six line forms x1 x2 x3 y1 y2 y3.
  using Exp = std::array<int, 6>;
  struct B {
    std::string name;
    std::array<Exp, 3> coords;
  };
  const std::vector<B> factors{
      {"w", {Exp{0, 1, 0, 0, 0, 0}, Exp{0, 0, 1, 0, 0, 0}, Exp{0, 0, 0, 1, 0, 0}}},
      {"z", {Exp{0, 0, 1, 0, 0, 0}, Exp{1, 0, 0, 0, 0, 0}, Exp{0, 0, 0, 0, 1, 0}}},
      {"v", {Exp{1, 0, 0, 0, 0, 0}, Exp{0, 1, 0, 0, 0, 0}, Exp{0, 0, 0, 0, 0, 1}}},
      {"t", {Exp{0, 0, 0, 1, 0, 0}, Exp{0, 0, 0, 0, 1, 0}, Exp{0, 0, 0, 0, 0, 1}}},
      {"u", {Exp{1, 0, 0, 1, 0, 0}, Exp{0, 1, 0, 0, 1, 0}, Exp{0, 0, 1, 0, 0, 1}}},
  };
  TenEquations out;
  std::vector<std::string> names;
  for (const char* b : {"v", "w", "z", "t", "u"})
    for (int i = 1; i <= 3; ++i) names.push_back(std::string(b) + std::to_string(i));
  out.vars = Variables(names);
  for (const auto& f : factors) out.factor_blocks.push_back(f.name);

  // Parametrization: x1 x2 x3 plane coordinates, y1 = x3 - x2, y2 = x1 - x3, y3 = x2 - x1.
  const Variables& x = plane_variables();
  MultiPoly x1 = var(x, "x1"), x2 = var(x, "x2"), x3 = var(x, "x3");
  std::array<MultiPoly, 6> forms{x1, x2, x3, x3 - x2, x1 - x3, x2 - x1};
  std::vector<MultiPoly> param(out.vars.size(), MultiPoly(x));
  for (const auto& f : factors)
    for (int i = 0; i < 3; ++i) {
      MultiPoly img = MultiPoly::constant(x, Scalar(1));
      for (int s = 0; s < 6; ++s)
        if (f.coords[i][s]) img *= forms[s];
      param[out.vars.index(f.name + std::to_string(i + 1))] = img;
    }

  Variables two_coord = [] {
    std::vector<std::string> n;
    for (const char* b : {"v", "w", "z", "t", "u"})
      for (int i = 1; i <= 2; ++i) n.push_back(std::string(b) + std::to_string(i));
    return Variables(n);
  }();
  std::vector<MultiPoly> elim;
  for (std::size_t i = 0; i < out.vars.size(); ++i) {
    const std::string& n = out.vars.name(i);
    std::string b = n.substr(0, 1);
    if (n[1] != '3') elim.push_back(var(two_coord, n));
    else if (b == "t" || b == "u") elim.push_back(-var(two_coord, b + "1") - var(two_coord, b + "2"));
    else elim.push_back(var(two_coord, b + "2") - var(two_coord, b + "1"));
  }

  bool unique = true, vanish = true, nontrivial = true, linear_relations = true;
  for (const auto& f : factors) {
    MultiPoly s(x);
    int sign[3] = {1, -1, 1};
    if (f.name == "t" || f.name == "u") sign[1] = 1;
    for (int i = 0; i < 3; ++i) s += param[out.vars.index(f.name + std::to_string(i + 1))] * Scalar(sign[i]);
    linear_relations = linear_relations && s.is_zero();
  }
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b)
      for (std::size_t c = b + 1; c < 5; ++c) {
        std::map<Exp, std::vector<std::array<int, 3>>> images;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
              Exp e{};
              for (int s = 0; s < 6; ++s) e[s] = factors[a].coords[i][s] + factors[b].coords[j][s] + factors[c].coords[k][s];
              images[e].push_back({i, j, k});
            }
        std::vector<std::array<int, 3>> pair;
        for (const auto& [e, tuples] : images) {
          if (tuples.size() < 2) continue;
          if (!pair.empty() || tuples.size() > 2) unique = false;
          if (pair.empty()) pair = {tuples[0], tuples[1]};
        }
        if (pair.empty()) {
          unique = false;
          continue;
        }
        auto mono = [&](const std::array<int, 3>& t) {
          return var(out.vars, factors[a].name + std::to_string(t[0] + 1)) *
                 var(out.vars, factors[b].name + std::to_string(t[1] + 1)) *
                 var(out.vars, factors[c].name + std::to_string(t[2] + 1));
        };
        MultiPoly eq = mono(pair[0]) - mono(pair[1]);
        vanish = vanish && eq.substitute(param).is_zero();
        nontrivial = nontrivial && !eq.substitute(elim).is_zero();
        out.equations.push_back({{a + 1, b + 1, c + 1}, eq});
      }
  out.checks.push_back({"block_linear_relations", linear_relations});
  out.checks.push_back({"unique_binomial_per_projection", unique && out.equations.size() == 10});
  out.checks.push_back({"parametrization_vanishing", vanish});
  out.checks.push_back({"nonzero_after_eliminating_third_coordinates", nontrivial});
  return out;
}

}  // namespace hkgeom::delpezzo
