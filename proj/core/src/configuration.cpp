#include "hkgeom/configuration/configuration.hpp"

#include <map>
#include <set>

namespace hkgeom::config {

Configuration Configuration::analyze(const std::vector<Triple>& forms) {
  if (forms.size() < 2) throw InvalidArgument("a configuration needs at least two lines");
  Configuration cfg;
  for (const auto& f : forms) cfg.field_ = exact::join(cfg.field_, field_of(f));
  for (const auto& f : forms) {
    Triple g;
    for (std::size_t i = 0; i < 3; ++i) g[i] = f[i].coerce(cfg.field_);
    ProjLine l(g);
    for (const auto& other : cfg.lines_)
      if (other == l) throw InvalidArgument("duplicate line " + to_string(l.coeffs()));
    cfg.forms_.push_back(g);
    cfg.lines_.push_back(l);
  }
  std::map<ProjPoint, std::set<std::size_t>> groups;
  for (std::size_t i = 0; i < cfg.lines_.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.lines_.size(); ++j) groups[meet(cfg.lines_[i], cfg.lines_[j])];
  for (const auto& [p, unused] : groups) {
    IntersectionPoint ip{p, cfg.lines_through(p)};
    cfg.points_.push_back(std::move(ip));
  }
  cfg.n_.assign(cfg.lines_.size(), 0);
  for (std::size_t k = 0; k < cfg.points_.size(); ++k) {
    if (cfg.points_[k].valency() < 3) continue;
    cfg.singular_.push_back(k);
    for (auto l : cfg.points_[k].lines) ++cfg.n_[l];
  }
  return cfg;
}

std::vector<std::size_t> Configuration::lines_through(const ProjPoint& p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (incident(lines_[i], p)) out.push_back(i);
  return out;
}

std::optional<std::size_t> Configuration::find_line(const ProjLine& l) const {
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i] == l) return i;
  return std::nullopt;
}

long euler_characteristic(const Configuration& cfg) {
  long m = static_cast<long>(cfg.singular_count());
  if (m < 4) throw NotApplicable("Euler characteristic formula needs at least 4 singular points");
  long sum = 0;
  for (auto n : cfg.singular_per_line()) {
    if (n < 2) throw NotApplicable("Euler characteristic formula needs n_i >= 2 on every line");
    sum += static_cast<long>(n) - 2;
  }
  return 8 - 2 * m + sum;
}

std::string_view to_string(ExtensionCase c) {
  switch (c) {
    case ExtensionCase::a:
      return "a";
    case ExtensionCase::b:
      return "b";
    case ExtensionCase::c:
      return "c";
    case ExtensionCase::other:
      return "other";
  }
  return "other";
}

ExtensionResult extend(const Configuration& cfg, const Triple& form) {
  ProjLine line(form);
  if (cfg.find_line(line)) throw InvalidArgument("line " + to_string(line.coeffs()) + " is already in the configuration");
  std::size_t d = 0, s = 0;
  for (const auto& ip : cfg.points()) {
    if (!incident(line, ip.point)) continue;
    if (ip.valency() == 2) ++d;
    else ++s;
  }
  std::vector<Triple> forms = cfg.forms();
  forms.push_back(form);
  Configuration next = Configuration::analyze(forms);
  ExtensionCase kind = ExtensionCase::other;
  bool preserved = false;
  if (d == 2) {
    kind = ExtensionCase::a;
    preserved = s == 0;
  } else if (d == 1 && s >= 1) {
    kind = ExtensionCase::b;
    preserved = s == 1;
  } else if (d == 0 && s >= 2) {
    kind = ExtensionCase::c;
    preserved = s == 2;
  }
  long delta = static_cast<long>(next.singular_count()) - static_cast<long>(cfg.singular_count());
  return {std::move(next), kind, delta, preserved, d, s};
}

bool same_incidence_type(const Configuration& a, const Configuration& b) {
  if (a.line_count() != b.line_count()) throw InvalidArgument("configurations have different line counts");
  auto family = [](const Configuration& c) {
    std::set<std::vector<std::size_t>> f;
    for (const auto& ip : c.points()) f.insert(ip.lines);
    return f;
  };
  return family(a) == family(b);
}

}  // namespace hkgeom::config
