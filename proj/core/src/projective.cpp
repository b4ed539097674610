#include "hkgeom/configuration/projective.hpp"

namespace hkgeom::config {

Triple canonical(const Triple& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i].is_zero()) continue;
    Scalar inv = t[i].inverse();
    FieldSpec f = field_of(t);
    Triple r;
    for (std::size_t j = 0; j < 3; ++j) r[j] = (t[j] * inv).coerce(f);
    return r;
  }
  throw InvalidArgument("zero triple does not define a projective object");
}

FieldSpec field_of(const Triple& t) {
  return exact::join(exact::join(t[0].field(), t[1].field()), t[2].field());
}

Scalar dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar det3(const Triple& a, const Triple& b, const Triple& c) { return dot(a, cross(b, c)); }

std::string to_string(const Triple& t) {
  return "(" + t[0].to_string() + " : " + t[1].to_string() + " : " + t[2].to_string() + ")";
}

bool incident(const ProjLine& l, const ProjPoint& p) { return dot(l.coeffs(), p.coords()).is_zero(); }

ProjPoint meet(const ProjLine& a, const ProjLine& b) {
  if (a == b) throw InvalidArgument("meet of a line with itself");
  return ProjPoint(cross(a.coeffs(), b.coeffs()));
}

ProjLine join(const ProjPoint& a, const ProjPoint& b) {
  if (a == b) throw InvalidArgument("join of a point with itself");
  return ProjLine(cross(a.coords(), b.coords()));
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  return det3(a.coeffs(), b.coeffs(), c.coeffs()).is_zero();
}

}  // namespace hkgeom::config
