#include "hkgeom/hk/hk.hpp"

#include <algorithm>
#include <cctype>

#include "hkgeom/errors.hpp"

namespace hkgeom::hk {

namespace {

const char* kBlocks[] = {"V", "W", "Z", "T"};

MultiPoly var(const Variables& v, const std::string& name) { return MultiPoly::variable(v, name); }

Variables block_variables(std::initializer_list<const char*> blocks) {
  std::vector<std::string> names;
  for (const char* b : blocks)
    for (int i = 1; i <= 3; ++i) names.push_back(std::string(b) + std::to_string(i));
  return Variables(names);
}

// The epsilon = 1 equations L_i - R_i.
std::vector<std::pair<MultiPoly, MultiPoly>> binomial_sides(const Variables& v) {
  auto m = [&](const char* a, const char* b, const char* c) { return var(v, a) * var(v, b) * var(v, c); };
  return {{m("V1", "W1", "Z1"), m("V2", "W2", "Z2")},
          {m("W3", "Z1", "T2"), m("W2", "Z3", "T1")},
          {m("Z3", "V1", "T3"), m("Z2", "V3", "T2")},
          {m("V3", "W1", "T1"), m("V2", "W3", "T3")}};
}

bool equal_up_to_sign(const MultiPoly& a, const MultiPoly& b) { return a == b || a == -b; }

// Images of a same-shaped variable list under index-wise renaming.
std::vector<MultiPoly> rename(const Variables& from, const Variables& to) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < from.size(); ++i) out.push_back(MultiPoly::variable(to, i));
  return out;
}

Variables lower_case(const Variables& v) {
  std::vector<std::string> names;
  for (const auto& n : v.names()) {
    std::string s = n;
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    names.push_back(s);
  }
  return Variables(names);
}

}  // namespace

FermatCurveSpec FermatCurveSpec::for_block(const std::string& block, unsigned n) {
  if (n < 1) throw InvalidArgument("Fermat exponent must be positive");
  if (block == "V" || block == "W" || block == "Z") return {n, block, {1, -1, 1}};
  if (block == "T" || block == "U") return {n, block, {1, 1, 1}};
  throw InvalidArgument("unknown Fermat block " + block);
}

MultiPoly FermatCurveSpec::equation(const Variables& vars) const {
  MultiPoly f(vars);
  for (int i = 0; i < 3; ++i) f += var(vars, block + std::to_string(i + 1)).pow(n) * Scalar(sign[i]);
  return f;
}

const Variables& hk_variables() {
  static const Variables vars = block_variables({"V", "W", "Z", "T"});
  return vars;
}

bool HKPresentation::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<MultiPoly> HKPresentation::surface_equations() const {
  std::vector<MultiPoly> out = fermat_equations;
  out.insert(out.end(), binomials.begin(), binomials.end());
  return out;
}

HKPresentation hk_presentation(unsigned n) {
  if (n < 2) throw InvalidArgument("hk_presentation requires n >= 2");
  const Variables& v = hk_variables();
  MultiPoly zero(v);
  HKPresentation p{n, v, {}, PolyMatrix(v, {{var(v, "T2"), -var(v, "T1"), -var(v, "T3")},
                                             {var(v, "V1"), var(v, "V2"), zero},
                                             {var(v, "W2"), zero, var(v, "W1")},
                                             {zero, -var(v, "Z1"), var(v, "Z2")}}),
                   {}, {}, {}, {}};
  for (const char* b : kBlocks) {
    p.curves.push_back(FermatCurveSpec::for_block(b, n));
    p.fermat_equations.push_back(p.curves.back().equation(v));
  }
  p.minors = exact::maximal_minors(p.matrix, 3);
  for (const auto& [l, r] : binomial_sides(v)) p.binomials.push_back(l - r);

  PolyMatrix g(v, 1, 4);
  for (std::size_t j = 0; j < 4; ++j) g.set(0, j, p.minors[j].value);
  p.checks.push_back({"minors_times_matrix_zero", (g * p.matrix).is_zero()});

  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t b = 0; b < 4; ++b) blocks.push_back({3 * b, 3 * b + 1, 3 * b + 2});
  // Row j of A' is linear in one block; the minor omitting it is trilinear in the other three.
  const std::size_t row_block[] = {3, 0, 1, 2};
  bool multideg = true;
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<unsigned> expected(4, 1);
    expected[row_block[j]] = 0;
    multideg = multideg && p.minors[j].value.multidegree(blocks) == expected;
  }
  p.checks.push_back({"minors_trilinear_in_complementary_blocks", multideg});
  p.checks.push_back({"first_minor_is_first_binomial", p.minors[0].value == p.binomials[0]});

  // n = 1 identification: upper-case coordinates become the Del Pezzo coordinates.
  auto to_lower = rename(v, delpezzo::dp5_homogeneous_variables());
  auto elim = delpezzo::dp5_eliminate_third(delpezzo::dp5_variables());
  auto sym = delpezzo::dp5_symmetric_equations();
  bool minors_ok = true, binomials_ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    minors_ok = minors_ok && equal_up_to_sign(p.minors[i].value.substitute(to_lower).substitute(elim), sym[i]);
    binomials_ok = binomials_ok && p.binomials[i].substitute(to_lower).substitute(elim) == sym[i];
  }
  p.checks.push_back({"minors_identify_with_dp5_symmetric", minors_ok});
  p.checks.push_back({"binomials_identify_with_dp5_symmetric", binomials_ok});

  Variables lower = lower_case(v);
  auto lower_images = rename(v, lower);
  bool pull_ok = true;
  for (const auto& b : p.binomials) {
    auto f = pullback_factorization(b.substitute(lower_images), n);
    pull_ok = pull_ok && f.product_matches && f.factors.front() == b.map_coefficients([&](const Scalar& c) {
      return c.coerce(exact::FieldSpec::cyclotomic(n));
    });
  }
  p.checks.push_back({"pullback_splits_with_binomial_factor", pull_ok});
  return p;
}

PullbackFactorization pullback_factorization(const MultiPoly& g, unsigned n) {
  if (n < 1) throw InvalidArgument("pullback exponent must be positive");
  if (g.term_count() != 2) throw InvalidArgument("pullback_factorization expects a binomial M1 - M2");
  auto it = g.terms().begin();
  std::pair<exact::Monomial, Scalar> first = *it++;
  std::pair<exact::Monomial, Scalar> second = *it;
  if (first.second == Scalar(-1)) std::swap(first, second);
  if (!(first.second == Scalar(1)) || !(second.second == Scalar(-1)))
    throw InvalidArgument("binomial coefficients must be +1 and -1");

  std::vector<std::string> names;
  for (const auto& nm : g.variables().names()) {
    std::string s = nm;
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    names.push_back(s);
  }
  Variables upper(names);
  exact::FieldSpec field = exact::FieldSpec::cyclotomic(n);
  PullbackFactorization out{n,
                            MultiPoly::monomial(upper, first.first, Scalar::one(field)),
                            MultiPoly::monomial(upper, second.first, Scalar::one(field)),
                            MultiPoly(upper),
                            {},
                            {},
                            false};
  out.pulled_back = out.first.pow(n) - out.second.pow(n);
  MultiPoly product = MultiPoly::constant(upper, Scalar::one(field));
  for (unsigned k = 0; k < n; ++k) {
    out.epsilons.push_back(Scalar::zeta(n, k));
    out.factors.push_back(out.first - out.second * out.epsilons.back());
    product *= out.factors.back();
  }
  out.product_matches = product == out.pulled_back;
  return out;
}

EpsilonReport epsilon_constraint_check(unsigned n) {
  if (n < 1) throw InvalidArgument("epsilon check requires n >= 1");
  const Variables& v = hk_variables();
  auto sides = binomial_sides(v);
  EpsilonReport rep{n, {0, 0, 0, 0}, MultiPoly(v), false, 0, 0};

  // Orientation with the most +1 entries whose two side products agree as monomials.
  int best = -1;
  for (int mask = 0; mask < 16; ++mask) {
    MultiPoly lhs = MultiPoly::constant(v, Scalar(1)), rhs = lhs;
    for (int i = 0; i < 4; ++i) {
      bool plus = mask >> i & 1;
      lhs *= plus ? sides[i].first : sides[i].second;
      rhs *= plus ? sides[i].second : sides[i].first;
    }
    if (lhs == rhs && __builtin_popcount(mask) > best) {
      best = __builtin_popcount(mask);
      for (int i = 0; i < 4; ++i) rep.exponents[i] = (mask >> i & 1) ? 1 : -1;
      rep.common_monomial = lhs;
    }
  }
  if (best < 0) return rep;

  // Twisted equations L_i = e_i R_i make the identity read prod e_i^{a_i} M = M.
  std::vector<std::string> names = v.names();
  for (int i = 1; i <= 4; ++i) names.push_back("e" + std::to_string(i));
  Variables ve(names);
  MultiPoly m = rep.common_monomial.rebind(ve);
  MultiPoly plus = m, minus = m;
  for (int i = 0; i < 4; ++i) (rep.exponents[i] > 0 ? plus : minus) *= var(ve, "e" + std::to_string(i + 1));
  MultiPoly identity = plus - minus;

  exact::FieldSpec field = exact::FieldSpec::cyclotomic(n);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < v.size(); ++i) images.push_back(MultiPoly::variable(ve, i));
  images.resize(ve.size());
  bool consistent = true;
  std::array<unsigned, 4> k{};
  std::size_t total = static_cast<std::size_t>(n) * n * n * n;
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (auto& ki : k) {
      ki = static_cast<unsigned>(rest % n);
      rest /= n;
    }
    Scalar oriented = Scalar::one(field), plain = Scalar::one(field);
    for (int i = 0; i < 4; ++i) {
      Scalar e = Scalar::zeta(n, k[i]);
      images[v.size() + i] = MultiPoly::constant(ve, e);
      plain *= e;
      oriented *= rep.exponents[i] > 0 ? e : e.inverse();
    }
    bool holds = identity.substitute(images).is_zero();
    consistent = consistent && holds == oriented.is_one();
    if (plain.is_one()) ++rep.component_count;
    ++rep.tuples_enumerated;
  }
  bool full = std::all_of(rep.exponents.begin(), rep.exponents.end(), [](int a) { return a != 0; });
  rep.identity_holds = consistent && full;
  return rep;
}

FiveFactorSystem hk_five_factor_equations(unsigned n) {
  if (n < 1) throw InvalidArgument("hk_five_factor_equations requires n >= 1");
  auto ten = delpezzo::dp5_ten_equations();
  FiveFactorSystem out{n, block_variables({"V", "W", "Z", "T", "U"}), {}, {}, {}, {}};
  auto upper = rename(ten.vars, out.vars);
  for (const auto& b : ten.factor_blocks) {
    std::string up(1, static_cast<char>(std::toupper(static_cast<unsigned char>(b[0]))));
    out.factor_blocks.push_back(up);
  }
  for (const char* b : {"V", "W", "Z", "T", "U"})
    out.fermat_equations.push_back(FermatCurveSpec::for_block(b, n).equation(out.vars));

  bool pull_ok = true;
  for (const auto& te : ten.equations) {
    MultiPoly eq = te.equation.substitute(upper);
    auto f = pullback_factorization(te.equation, n);
    pull_ok = pull_ok && f.product_matches && f.factors.front() == eq.rebind(f.first.variables()).map_coefficients([&](const Scalar& c) {
      return c.coerce(exact::FieldSpec::cyclotomic(n));
    });
    out.equations.push_back({te.factors, eq});
  }
  out.checks.push_back({"ten_equations", out.equations.size() == 10});
  for (const auto& c : ten.checks) out.checks.push_back(c);
  out.checks.push_back({"pullback_splits_with_binomial_factor", pull_ok});

  // The four u-free equations against the four-block binomials.
  auto four = binomial_sides(hk_variables());
  std::size_t u_factor = 5;
  for (std::size_t i = 0; i < out.factor_blocks.size(); ++i)
    if (out.factor_blocks[i] == "U") u_factor = i + 1;
  std::size_t matched = 0, u_free = 0;
  for (const auto& e : out.equations) {
    if (std::find(e.factors.begin(), e.factors.end(), u_factor) != e.factors.end()) continue;
    ++u_free;
    MultiPoly r = e.equation.rebind(hk_variables());
    for (const auto& [l, rr] : four)
      if (equal_up_to_sign(r, l - rr)) {
        ++matched;
        break;
      }
  }
  out.checks.push_back({"restriction_to_four_blocks", u_free == 4 && matched == 4});
  return out;
}

}  // namespace hkgeom::hk
