#include "hkgeom/configuration/configuration.hpp"

namespace hkgeom::config {

namespace {

bool no_three_collinear(const Configuration& cfg, const std::array<std::size_t, 4>& q) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(cfg.singular_point(q[i]).point, cfg.singular_point(q[j]).point, cfg.singular_point(q[k]).point))
          return false;
  return true;
}

bool joined(const Configuration& cfg, std::size_t s, std::size_t t) {
  const auto& a = cfg.singular_point(s).lines;
  const auto& b = cfg.singular_point(t).lines;
  for (auto x : a)
    for (auto y : b)
      if (x == y) return true;
  return false;
}

template <typename F>
void for_each_quadruple(std::size_t m, F&& f) {
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d)
          if (f(std::array<std::size_t, 4>{a, b, c, d})) return;
}

// Closes the set of lines with the two chain rules; returns the chain if it reaches every line.
std::optional<InductiveChain> close_chain(const Configuration& cfg, const std::array<std::size_t, 4>& base) {
  std::size_t r = cfg.line_count();
  std::vector<bool> in(r, false);
  InductiveChain chain{base, {}, {}};
  for (auto s : base)
    for (auto l : cfg.singular_point(s).lines) in[l] = true;
  for (std::size_t l = 0; l < r; ++l)
    if (in[l]) chain.initial.push_back(l);

  // singular points on each line
  std::vector<std::vector<std::size_t>> on_line(r);
  for (std::size_t s = 0; s < cfg.singular_count(); ++s)
    for (auto l : cfg.singular_point(s).lines) on_line[l].push_back(s);

  auto covered = [&](std::size_t s) {
    std::size_t c = 0;
    for (auto l : cfg.singular_point(s).lines) c += in[l];
    return c;
  };

  while (true) {
    bool done = true;
    for (bool b : in) done = done && b;
    if (done) return chain;
    std::optional<ChainStep> step;
    for (std::size_t l = 0; l < r && !step; ++l) {
      if (in[l]) continue;
      std::vector<std::size_t> twice;
      for (auto s : on_line[l]) {
        std::size_t c = covered(s);
        if (c >= 2) twice.push_back(s);
        if (c >= 3 && !step) step = ChainStep{l, {s}, {}};
      }
      if (twice.size() >= 2) step = ChainStep{l, {twice[0], twice[1]}, {}};
    }
    if (!step) return std::nullopt;
    std::vector<bool> add(r, false);
    add[step->line] = true;
    for (auto s : step->points)
      for (auto l : cfg.singular_point(s).lines) add[l] = true;
    for (std::size_t l = 0; l < r; ++l)
      if (add[l] && !in[l]) {
        in[l] = true;
        step->added.push_back(l);
      }
    chain.steps.push_back(std::move(*step));
  }
}

}  // namespace

RigidityReport rigidity_report(const Configuration& cfg) {
  RigidityReport rep;
  rep.m = cfg.singular_count();
  rep.n = cfg.singular_per_line();
  rep.all_ni_ge2 = true;
  long sum = 0;
  for (auto n : rep.n) {
    rep.all_ni_ge2 = rep.all_ni_ge2 && n >= 2;
    sum += static_cast<long>(n) - 2;
  }
  rep.inequality_holds = 2 * static_cast<long>(rep.m) - 8 <= sum;
  if (rep.m >= 4 && rep.all_ni_ge2) rep.chi = euler_characteristic(cfg);

  for_each_quadruple(rep.m, [&](const std::array<std::size_t, 4>& q) {
    rep.has_projective_basis = no_three_collinear(cfg, q);
    return rep.has_projective_basis;
  });

  bool all_joined = true;
  for (std::size_t s = 0; s < rep.m && all_joined; ++s)
    for (std::size_t t = s + 1; t < rep.m && all_joined; ++t) all_joined = joined(cfg, s, t);
  rep.singularly_saturated = rep.m >= 4 && rep.all_ni_ge2 && all_joined;

  for_each_quadruple(rep.m, [&](const std::array<std::size_t, 4>& q) {
    if (!no_three_collinear(cfg, q)) return false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!joined(cfg, q[i], q[j])) return false;
    ++rep.base_quadruples_tried;
    rep.chain = close_chain(cfg, q);
    return rep.chain.has_value();
  });
  rep.inductive_chain_found = rep.chain.has_value();
  return rep;
}

}  // namespace hkgeom::config
