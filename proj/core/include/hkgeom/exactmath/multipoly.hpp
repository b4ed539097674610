#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hkgeom/exactmath/scalar.hpp"

namespace hkgeom::exact {

// Ordered, shared list of variable names.
class Variables {
 public:
  Variables();
  explicit Variables(std::vector<std::string> names);
  Variables(std::initializer_list<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent

  friend bool operator==(const Variables& a, const Variables& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then lexicographic exponents.
struct GrLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned monomial_degree(const Monomial& m);

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(Variables vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const Variables& vars, const Scalar& c);
  static MultiPoly variable(const Variables& vars, std::size_t index);
  static MultiPoly variable(const Variables& vars, std::string_view name);
  static MultiPoly monomial(const Variables& vars, Monomial exps, const Scalar& c);

  const Variables& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // Degree in each block of variable indices if multihomogeneous.
  std::optional<std::vector<unsigned>> multidegree(const std::vector<std::vector<std::size_t>>& blocks) const;
  // Join of the coefficient fields.
  FieldSpec field() const;

  void add_term(const Monomial& m, const Scalar& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  // Replaces variable i by images[i]; all images share one variable set.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // Same polynomial over another variable set, matched by name.
  MultiPoly rebind(const Variables& target) const;
  MultiPoly map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  std::string to_string() const;

 private:
  void check_same(const MultiPoly& o) const;

  Variables vars_;
  TermMap terms_;
};

// Exact evaluation. The target field is the join of the point's field and the
// coefficient field; prime-field coefficients at a non-prime-field point are rejected.
Scalar poly_eval(const MultiPoly& p, std::span<const Scalar> point);

}  // namespace hkgeom::exact
