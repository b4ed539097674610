#pragma once

#include <array>
#include <string>

#include "hkgeom/exactmath/scalar.hpp"

namespace hkgeom::config {

using exact::FieldSpec;
using exact::Scalar;

using Triple = std::array<Scalar, 3>;

// Scales so that the first nonzero entry is 1; throws on the zero triple.
Triple canonical(const Triple& t);
FieldSpec field_of(const Triple& t);
Scalar dot(const Triple& a, const Triple& b);
Triple cross(const Triple& a, const Triple& b);
Scalar det3(const Triple& a, const Triple& b, const Triple& c);
std::string to_string(const Triple& t);

// {a0 x0 + a1 x1 + a2 x2 = 0}, canonically scaled.
class ProjLine {
 public:
  explicit ProjLine(const Triple& coeffs) : c_(canonical(coeffs)) {}
  const Triple& coeffs() const { return c_; }
  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.c_ < b.c_; }

 private:
  Triple c_;
};

class ProjPoint {
 public:
  explicit ProjPoint(const Triple& coords) : c_(canonical(coords)) {}
  const Triple& coords() const { return c_; }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

 private:
  Triple c_;
};

bool incident(const ProjLine& l, const ProjPoint& p);
ProjPoint meet(const ProjLine& a, const ProjLine& b);   // throws if equal
ProjLine join(const ProjPoint& a, const ProjPoint& b);  // throws if equal
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c);

}  // namespace hkgeom::config
