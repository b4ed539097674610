#include "hkgeom/exactmath/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace hkgeom::exact {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_integer(const Integer& v, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den monic
  std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

// Q[x] helpers for the extended Euclid inverse.
using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly sub_mul(const QPoly& a, const QPoly& b, const QPoly& c) {
  // a - b*c
  QPoly r = a;
  if (!b.empty() && !c.empty() && r.size() < b.size() + c.size() - 1) r.resize(b.size() + c.size() - 1, 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) r[i + j] -= b[i] * c[j];
  trim(r);
  return r;
}

void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  r = a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::cyclotomic(unsigned order) {
  if (order == 0) throw InvalidArgument("cyclotomic order must be positive");
  return FieldSpec(FieldKind::cyclotomic, order);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p)) throw InvalidArgument("not a supported prime: " + std::to_string(p));
  return FieldSpec(FieldKind::prime, p);
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::cyclotomic:
      return "Q(zeta_" + std::to_string(param_) + ")";
    case FieldKind::prime:
      return "F_" + std::to_string(param_);
  }
  return "?";
}

FieldSpec join(const FieldSpec& a, const FieldSpec& b) {
  if (a == b) return a;
  if (a.kind() == FieldKind::rational) return b;
  if (b.kind() == FieldKind::rational) return a;
  throw FieldMismatch("cannot combine scalars from " + a.to_string() + " and " + b.to_string());
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned k) {
  if (k == 0) throw InvalidArgument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<const std::vector<Integer>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return *it->second;
  }
  std::vector<Integer> num(k + 1, 0);
  num[0] = -1;
  num[k] = 1;
  for (unsigned d = 1; d < k; ++d) {
    if (k % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(k, std::make_unique<const std::vector<Integer>>(std::move(num)));
  return *it->second;
}

Scalar::Scalar(Rational v) {
  v.canonicalize();
  value_ = std::move(v);
}

Scalar Scalar::rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Scalar(Integer(s));
    Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
    return rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("malformed rational: '" + s + "'");
  }
}

void Scalar::reduce(Cyclo& x) {
  const auto& phi = cyclotomic_polynomial(x.order);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = x.c.size(); i-- > deg;) {
    if (x.c[i] == 0) continue;
    Rational c = x.c[i];
    for (std::size_t j = 0; j <= deg; ++j) x.c[i - deg + j] -= c * phi[j];
  }
  x.c.resize(deg, 0);
}

Scalar::Cyclo Scalar::lift(const Rational& q, unsigned order) {
  Cyclo c{order, std::vector<Rational>(cyclotomic_polynomial(order).size() - 1, 0)};
  c.c[0] = q;
  return c;
}

Scalar Scalar::cyclotomic(unsigned order, std::vector<Rational> coeffs) {
  Scalar s;
  Cyclo c{order, std::move(coeffs)};
  c.c.resize(std::max(c.c.size(), cyclotomic_polynomial(order).size() - 1), 0);
  for (auto& v : c.c) v.canonicalize();
  reduce(c);
  s.value_ = std::move(c);
  return s;
}

Scalar Scalar::zeta(unsigned order, long power) {
  long e = power % static_cast<long>(order);
  if (e < 0) e += order;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, 0);
  c[e] = 1;
  return cyclotomic(order, std::move(c));
}

Scalar Scalar::modp(std::uint64_t p, const Integer& value) {
  FieldSpec::prime(p);
  Scalar s;
  s.value_ = ModP{p, reduce_integer(value, p)};
  return s;
}

Scalar Scalar::zero(const FieldSpec& field) { return Scalar(0).coerce(field); }
Scalar Scalar::one(const FieldSpec& field) { return Scalar(1).coerce(field); }

FieldSpec Scalar::field() const {
  switch (value_.index()) {
    case 0:
      return FieldSpec::rationals();
    case 1:
      return FieldSpec::cyclotomic(std::get<Cyclo>(value_).order);
    default:
      return FieldSpec::prime(std::get<ModP>(value_).p);
  }
}

FieldKind Scalar::kind() const { return static_cast<FieldKind>(value_.index()); }

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0:
      return std::get<Rational>(value_) == 0;
    case 1:
      for (const auto& c : std::get<Cyclo>(value_).c)
        if (c != 0) return false;
      return true;
    default:
      return std::get<ModP>(value_).v == 0;
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0:
      return std::get<Rational>(value_) == 1;
    case 1: {
      const auto& c = std::get<Cyclo>(value_).c;
      if (c[0] != 1) return false;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
      return true;
    }
    default:
      return std::get<ModP>(value_).v == 1 % std::get<ModP>(value_).p;
  }
}

const Rational& Scalar::as_rational() const {
  if (value_.index() != 0) throw FieldMismatch("scalar is not rational");
  return std::get<Rational>(value_);
}

std::vector<Rational> Scalar::cyclotomic_coeffs() const {
  if (value_.index() != 1) throw FieldMismatch("scalar is not cyclotomic");
  return std::get<Cyclo>(value_).c;
}

std::uint64_t Scalar::prime_value() const {
  if (value_.index() != 2) throw FieldMismatch("scalar is not in a prime field");
  return std::get<ModP>(value_).v;
}

Scalar Scalar::coerce(const FieldSpec& target) const {
  FieldSpec f = field();
  if (f == target) return *this;
  if (f.kind() != FieldKind::rational)
    throw FieldMismatch("cannot move " + f.to_string() + " scalar into " + target.to_string());
  const Rational& q = std::get<Rational>(value_);
  Scalar s;
  if (target.kind() == FieldKind::cyclotomic) {
    s.value_ = lift(q, static_cast<unsigned>(target.parameter()));
  } else {
    std::uint64_t p = target.parameter();
    std::uint64_t den = reduce_integer(q.get_den(), p);
    if (den == 0) throw FieldMismatch("denominator divisible by " + std::to_string(p));
    s.value_ = ModP{p, mulmod(reduce_integer(q.get_num(), p), powmod(den, p - 2, p), p)};
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (r.value_.index()) {
    case 0:
      std::get<Rational>(r.value_) = -std::get<Rational>(r.value_);
      break;
    case 1:
      for (auto& c : std::get<Cyclo>(r.value_).c) c = -c;
      break;
    default: {
      auto& m = std::get<ModP>(r.value_);
      m.v = m.v == 0 ? 0 : m.p - m.v;
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  Scalar r = *this;
  switch (r.value_.index()) {
    case 0:
      std::get<Rational>(r.value_) = 1 / std::get<Rational>(r.value_);
      break;
    case 1: {
      auto& x = std::get<Cyclo>(r.value_);
      const auto& phi = cyclotomic_polynomial(x.order);
      QPoly a(phi.begin(), phi.end()), b = x.c;
      trim(b);
      // invariant: s0*x = a, s1*x = b (mod phi)
      QPoly s0, s1{1};
      while (b.size() > 1) {
        QPoly q, rem;
        divmod(a, b, q, rem);
        QPoly s2 = sub_mul(s0, q, s1);
        a = std::move(b);
        b = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      Rational c = b[0];
      for (auto& v : s1) v /= c;
      s1.resize(x.c.size(), 0);
      x.c = std::move(s1);
      reduce(x);
      break;
    }
    default: {
      auto& m = std::get<ModP>(r.value_);
      m.v = powmod(m.v, m.p - 2, m.p);
    }
  }
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one(field());
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (value_.index() == 0 && o.value_.index() == 0) {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
    return *this;
  }
  FieldSpec f = join(field(), o.field());
  *this = coerce(f);
  Scalar b = o.coerce(f);
  if (f.kind() == FieldKind::cyclotomic) {
    auto& x = std::get<Cyclo>(value_).c;
    const auto& y = std::get<Cyclo>(b.value_).c;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  } else {
    auto& m = std::get<ModP>(value_);
    m.v = (m.v + std::get<ModP>(b.value_).v) % m.p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (value_.index() == 0 && o.value_.index() == 0) {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
    return *this;
  }
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (value_.index() == 0 && o.value_.index() == 0) {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
    return *this;
  }
  FieldSpec f = join(field(), o.field());
  if (f.kind() == FieldKind::cyclotomic && (value_.index() == 0 || o.value_.index() == 0)) {
    const Rational& q = value_.index() == 0 ? std::get<Rational>(value_) : std::get<Rational>(o.value_);
    Cyclo x = value_.index() == 1 ? std::get<Cyclo>(value_) : std::get<Cyclo>(o.value_);
    for (auto& c : x.c) c *= q;
    value_ = std::move(x);
    return *this;
  }
  *this = coerce(f);
  Scalar b = o.coerce(f);
  if (f.kind() == FieldKind::cyclotomic) {
    auto& x = std::get<Cyclo>(value_);
    const auto& y = std::get<Cyclo>(b.value_).c;
    std::vector<Rational> prod(x.c.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.c.size(); ++i) {
      if (x.c[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] != 0) prod[i + j] += x.c[i] * y[j];
      }
    }
    x.c = std::move(prod);
    reduce(x);
  } else {
    auto& m = std::get<ModP>(value_);
    m.v = mulmod(m.v, std::get<ModP>(b.value_).v, m.p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() == 0 && b.value_.index() == 0)
    return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
  return (a - b).is_zero();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  FieldSpec f = join(a.field(), b.field());
  Scalar x = a.coerce(f), y = b.coerce(f);
  auto cmpq = [](const Rational& p, const Rational& q) {
    int c = cmp(p, q);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  };
  switch (x.value_.index()) {
    case 0:
      return cmpq(std::get<Rational>(x.value_), std::get<Rational>(y.value_));
    case 1: {
      const auto& p = std::get<Scalar::Cyclo>(x.value_).c;
      const auto& q = std::get<Scalar::Cyclo>(y.value_).c;
      for (std::size_t i = 0; i < p.size(); ++i) {
        auto c = cmpq(p[i], q[i]);
        if (c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
    default:
      return std::get<Scalar::ModP>(x.value_).v <=> std::get<Scalar::ModP>(y.value_).v;
  }
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0:
      return std::get<Rational>(value_).get_str();
    case 1: {
      const auto& x = std::get<Cyclo>(value_);
      std::ostringstream os;
      bool first = true;
      for (std::size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i] == 0) continue;
        Rational c = x.c[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational ac = abs(c);
        if (i == 0) {
          os << ac.get_str();
        } else {
          if (ac != 1) os << ac.get_str() << "*";
          os << "z" << x.order;
          if (i > 1) os << "^" << i;
        }
        first = false;
      }
      if (first) return "0";
      return "(" + os.str() + ")";
    }
    default:
      return std::to_string(std::get<ModP>(value_).v);
  }
}

}  // namespace hkgeom::exact
