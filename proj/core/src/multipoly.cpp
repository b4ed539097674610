#include "hkgeom/exactmath/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace hkgeom::exact {

Variables::Variables() {
  static const auto empty = std::make_shared<const std::vector<std::string>>();
  names_ = empty;
}

Variables::Variables(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j]) throw InvalidArgument("duplicate variable name " + (*names_)[i]);
}

Variables::Variables(std::initializer_list<std::string> names) : Variables(std::vector<std::string>(names)) {}

std::optional<std::size_t> Variables::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t Variables::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InvalidArgument("unknown variable " + std::string(name));
  return *i;
}

unsigned monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrLexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(const Variables& vars, const Scalar& c) {
  MultiPoly p(vars);
  p.add_term(Monomial(vars.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Variables& vars, std::size_t index) {
  if (index >= vars.size()) throw InvalidArgument("variable index out of range");
  Monomial m(vars.size(), 0);
  m[index] = 1;
  return monomial(vars, std::move(m), Scalar(1));
}

MultiPoly MultiPoly::variable(const Variables& vars, std::string_view name) {
  return variable(vars, vars.index(name));
}

MultiPoly MultiPoly::monomial(const Variables& vars, Monomial exps, const Scalar& c) {
  if (exps.size() != vars.size()) throw InvalidArgument("exponent vector length mismatch");
  MultiPoly p(vars);
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Scalar MultiPoly::constant_term() const { return coefficient(Monomial(vars_.size(), 0)); }

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(monomial_degree(terms_.rbegin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return monomial_degree(terms_.begin()->first) == monomial_degree(terms_.rbegin()->first);
}

std::optional<std::vector<unsigned>> MultiPoly::multidegree(const std::vector<std::vector<std::size_t>>& blocks) const {
  std::optional<std::vector<unsigned>> result;
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> d;
    for (const auto& block : blocks) {
      unsigned s = 0;
      for (std::size_t v : block) s += m.at(v);
      d.push_back(s);
    }
    if (!result) result = d;
    else if (*result != d) return std::nullopt;
  }
  if (!result) result = std::vector<unsigned>(blocks.size(), 0);
  return result;
}

FieldSpec MultiPoly::field() const {
  FieldSpec f;
  for (const auto& [m, c] : terms_) f = join(f, c.field());
  return f;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != vars_.size()) throw InvalidArgument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (!(vars_ == o.vars_)) throw InvalidArgument("polynomials over different variable sets");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  MultiPoly r(a.vars_);
  Monomial m(a.vars_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (m != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, Scalar(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw InvalidArgument("variable index out of range");
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * Scalar(static_cast<long>(m[var])));
  }
  return r;
}

Scalar poly_eval(const MultiPoly& p, std::span<const Scalar> point) {
  if (point.size() != p.variables().size()) throw InvalidArgument("point length does not match variable count");
  FieldSpec pf;
  for (const auto& s : point) pf = join(pf, s.field());
  FieldSpec cf = p.field();
  if (cf.kind() == FieldKind::prime && pf.kind() != FieldKind::prime)
    throw FieldMismatch("prime-field polynomial evaluated at a point over " + pf.to_string());
  FieldSpec target = join(pf, cf);
  std::vector<std::vector<Scalar>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(Scalar::one(target));
  Scalar sum = Scalar::zero(target);
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c.coerce(target);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
      t *= pw[m[i]];
    }
    sum += t;
  }
  return sum;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const { return poly_eval(*this, point); }

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size()) throw InvalidArgument("substitution needs one image per variable");
  Variables target = images.empty() ? Variables() : images.front().variables();
  for (const auto& im : images)
    if (!(im.variables() == target)) throw InvalidArgument("substitution images over different variable sets");
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(constant(target, Scalar(1)));
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
      t *= pw[m[i]];
    }
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::rebind(const Variables& target) const {
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.find(vars_.name(i));
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw InvalidArgument("variable " + vars_.name(i) + " missing from target set");
      t[*map[i]] += m[i];
    }
    r.add_term(t, c);
  }
  return r;
}

MultiPoly MultiPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool rational = c.kind() == FieldKind::rational;
    bool negative = rational && c.as_rational() < 0;
    Scalar a = negative ? -c : c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    bool unit = a.is_one();
    bool wrote = false;
    if (!unit || monomial_degree(m) == 0) {
      os << a.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_.name(i);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace hkgeom::exact
