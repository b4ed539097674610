#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hkgeom/errors.hpp"

namespace hkgeom::exact {

using Integer = mpz_class;
using Rational = mpq_class;

enum class FieldKind { rational, cyclotomic, prime };

// Identifies Q, Q(zeta_k) or F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return {}; }
  static FieldSpec cyclotomic(unsigned order);
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  // Cyclotomic order or characteristic; 0 for Q.
  std::uint64_t parameter() const { return param_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t param) : kind_(kind), param_(param) {}

  FieldKind kind_ = FieldKind::rational;
  std::uint64_t param_ = 0;
};

// Smallest field containing both; Q embeds everywhere, anything else must agree.
FieldSpec join(const FieldSpec& a, const FieldSpec& b);

bool is_prime(std::uint64_t n);

// Integer coefficients of the k-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(unsigned k);

class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(const Integer& v) : value_(Rational(v)) {}
  Scalar(Rational v);

  static Scalar rational(const Integer& num, const Integer& den);
  // Parses "p" or "p/q".
  static Scalar parse_rational(std::string_view text);
  // sum_i coeffs[i] zeta_k^i, reduced modulo Phi_k.
  static Scalar cyclotomic(unsigned order, std::vector<Rational> coeffs);
  static Scalar zeta(unsigned order, long power = 1);
  static Scalar modp(std::uint64_t p, const Integer& value);
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);

  FieldSpec field() const;
  FieldKind kind() const;
  bool is_zero() const;
  bool is_one() const;

  // Accessors; each throws if the scalar has a different kind.
  const Rational& as_rational() const;
  std::vector<Rational> cyclotomic_coeffs() const;
  std::uint64_t prime_value() const;

  // The same element viewed in a larger field (Q -> anything, identity otherwise).
  Scalar coerce(const FieldSpec& target) const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  // Total order inside one field, used only for canonical sorting.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Cyclo {
    unsigned order;
    std::vector<Rational> c;  // length deg Phi_order
  };
  struct ModP {
    std::uint64_t p;
    std::uint64_t v;
  };

  static void reduce(Cyclo& x);
  static Cyclo lift(const Rational& q, unsigned order);

  std::variant<Rational, Cyclo, ModP> value_;
};

}  // namespace hkgeom::exact
