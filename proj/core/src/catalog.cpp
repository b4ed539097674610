#include <algorithm>

#include "hkgeom/configuration/configuration.hpp"

namespace hkgeom::config {

namespace {

Configuration complete_quadrangle() {
  auto t = [](long a, long b, long c) { return Triple{Scalar(a), Scalar(b), Scalar(c)}; };
  return Configuration::analyze({t(1, 0, 0), t(0, 1, 0), t(0, 0, 1), t(0, 1, -1), t(-1, 0, 1), t(1, -1, 0)});
}

// Lines dual to the nine flexes of the Fermat cubic.
Configuration dual_hesse() {
  std::vector<Triple> forms;
  Scalar one(1), zero(0);
  for (int a = 0; a < 3; ++a) forms.push_back({one, -Scalar::zeta(3, a), zero});
  for (int a = 0; a < 3; ++a) forms.push_back({zero, one, -Scalar::zeta(3, a)});
  for (int a = 0; a < 3; ++a) forms.push_back({-Scalar::zeta(3, a), zero, one});
  return Configuration::analyze(forms);
}

Configuration hesse() {
  std::vector<ProjPoint> flexes;
  Scalar one(1), zero(0);
  for (int a = 0; a < 3; ++a) flexes.emplace_back(Triple{one, -Scalar::zeta(3, a), zero});
  for (int a = 0; a < 3; ++a) flexes.emplace_back(Triple{zero, one, -Scalar::zeta(3, a)});
  for (int a = 0; a < 3; ++a) flexes.emplace_back(Triple{-Scalar::zeta(3, a), zero, one});
  std::vector<ProjLine> lines;
  for (std::size_t i = 0; i < flexes.size(); ++i)
    for (std::size_t j = i + 1; j < flexes.size(); ++j) {
      ProjLine l = join(flexes[i], flexes[j]);
      if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
    }
  std::vector<Triple> forms;
  for (const auto& l : lines) forms.push_back(l.coeffs());
  return Configuration::analyze(forms);
}

}  // namespace

std::vector<std::string> catalog_names() { return {"complete-quadrangle", "hesse", "dual-hesse"}; }

Configuration catalog(std::string_view name) {
  if (name == "complete-quadrangle") return complete_quadrangle();
  if (name == "hesse") return hesse();
  if (name == "dual-hesse") return dual_hesse();
  throw InvalidArgument("unknown catalog configuration '" + std::string(name) + "'");
}

}  // namespace hkgeom::config
