#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include "hkgeom/errors.hpp"
#include "hkgeom/exactmath/linalg.hpp"
#include "hkgeom/hk/hk.hpp"
#include "hkgeom/parallel.hpp"

namespace hkgeom::hk {

namespace {

constexpr std::uint64_t kMaxPrime = 1u << 22;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, bound) by rejection, independent of the standard library.
std::uint64_t draw(std::uint64_t& state, std::uint64_t bound) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = splitmix64(state);
  while (x >= limit);
  return x % bound;
}

// n-th roots of every residue, bucketed by value.
struct RootTable {
  std::vector<std::uint32_t> start;
  std::vector<std::uint32_t> roots;

  RootTable(std::uint64_t p, unsigned n) : start(p + 1, 0), roots(p) {
    std::vector<std::uint32_t> power(p);
    for (std::uint64_t t = 0; t < p; ++t) {
      std::uint64_t r = 1;
      for (unsigned i = 0; i < n; ++i) r = r * t % p;
      power[t] = static_cast<std::uint32_t>(r);
      ++start[r + 1];
    }
    for (std::uint64_t v = 0; v < p; ++v) start[v + 1] += start[v];
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::uint64_t t = 0; t < p; ++t) roots[fill[power[t]]++] = static_cast<std::uint32_t>(t);
  }
  std::size_t count(std::uint64_t v) const { return start[v + 1] - start[v]; }
  std::uint32_t root(std::uint64_t v, std::size_t i) const { return roots[start[v] + i]; }
};

constexpr std::uint64_t kSmallPrime = 256;

using BlockPoint = std::array<std::array<std::uint64_t, 3>, 4>;

std::uint64_t powmod(std::uint64_t a, unsigned e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = r * a % p;
  return r;
}

// Lifts the six line values (x1, x2, x3, y1, y2, y3) to blocks V, W, Z, T.
BlockPoint blocks_of(const std::array<std::uint64_t, 6>& up) {
  return {{{up[0], up[1], up[5]}, {up[1], up[2], up[3]}, {up[2], up[0], up[4]}, {up[3], up[4], up[5]}}};
}

std::array<std::uint64_t, 6> line_values(const std::array<std::uint64_t, 3>& x, std::uint64_t scale, std::uint64_t p) {
  std::array<std::uint64_t, 6> v{x[0], x[1], x[2], (x[2] + p - x[1]) % p, (x[0] + p - x[2]) % p, (x[1] + p - x[0]) % p};
  for (auto& a : v) a = a * scale % p;
  return v;
}

bool no_block_vanishes(const BlockPoint& b) {
  for (const auto& blk : b)
    if (blk[0] == 0 && blk[1] == 0 && blk[2] == 0) return false;
  return true;
}

// Plane points with a scale class whose six values are n-th powers and whose lift has no zero block.
std::size_t tower_admissible_count(std::uint64_t p, const RootTable& table) {
  std::size_t count = 0;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c <= 1; ++c) {
        std::array<std::uint64_t, 3> x{a, b, c};
        if (c == 0 && !(b == 1 || (b == 0 && a == 1))) continue;  // projective representatives
        for (std::uint64_t s = 1; s < p; ++s) {
          auto v = line_values(x, s, p);
          bool ok = true;
          std::array<std::uint64_t, 6> up{};
          for (std::size_t i = 0; i < 6 && ok; ++i) {
            ok = table.count(v[i]) > 0;
            if (ok) up[i] = table.root(v[i], 0);
          }
          if (ok && no_block_vanishes(blocks_of(up))) ++count;
        }
      }
  return count;
}

std::vector<std::array<std::uint64_t, 3>> fermat_points(std::array<int, 3> sign, unsigned n, std::uint64_t p) {
  std::vector<std::array<std::uint64_t, 3>> pts;
  auto value = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t t[3] = {powmod(a, n, p), powmod(b, n, p), powmod(c, n, p)};
    std::uint64_t s = 0;
    for (int i = 0; i < 3; ++i) s = (s + (sign[i] > 0 ? t[i] : p - t[i])) % p;
    return s;
  };
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      if (value(a, b, 1) == 0) pts.push_back({a, b, 1});
  for (std::uint64_t a = 0; a < p; ++a)
    if (value(a, 1, 0) == 0) pts.push_back({a, 1, 0});
  if (value(1, 0, 0) == 0) pts.push_back({1, 0, 0});
  return pts;
}

// Coordinate c of block b is, on the open part, the lifted line value kLineOf[b][c].
constexpr std::array<std::array<int, 3>, 4> kLineOf{{{0, 1, 5}, {1, 2, 3}, {2, 0, 4}, {3, 4, 5}}};

// Multilinear binomials prod_b C_b[c_b] = prod_b C_b[c'_b] over two or more blocks
// whose two sides lift to the same monomial in the line values. They hold on the
// closure of the open part; the eight defining equations alone also admit stray
// boundary points.
struct Relation {
  std::size_t last_block;
  std::vector<std::pair<std::size_t, int>> lhs, rhs;
};

std::vector<Relation> tower_relations() {
  std::vector<Relation> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> blocks;
    for (std::size_t b = 0; b < 4; ++b)
      if (mask >> b & 1) blocks.push_back(b);
    if (blocks.size() < 2) continue;
    std::map<std::vector<int>, std::vector<std::vector<std::pair<std::size_t, int>>>> groups;
    std::size_t total = 1;
    for (std::size_t i = 0; i < blocks.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::pair<std::size_t, int>> choice;
      std::vector<int> image;
      std::size_t rest = code;
      for (auto b : blocks) {
        int c = static_cast<int>(rest % 3);
        rest /= 3;
        choice.emplace_back(b, c);
        image.push_back(kLineOf[b][c]);
      }
      std::sort(image.begin(), image.end());
      groups[image].push_back(choice);
    }
    for (const auto& [image, choices] : groups)
      for (std::size_t i = 1; i < choices.size(); ++i) out.push_back({blocks.back(), choices[0], choices[i]});
  }
  return out;
}

// All F_p-points of the surface, each block normalized at its largest-index nonzero coordinate.
std::vector<BlockPoint> surface_points(unsigned n, std::uint64_t p) {
  auto cv = fermat_points({1, -1, 1}, n, p);
  auto ct = fermat_points({1, 1, 1}, n, p);
  auto relations = tower_relations();
  BlockPoint cur{};
  auto holds_up_to = [&](std::size_t block) {
    for (const auto& r : relations) {
      if (r.last_block != block) continue;
      std::uint64_t a = 1, b = 1;
      for (auto [blk, c] : r.lhs) a = a * cur[blk][c] % p;
      for (auto [blk, c] : r.rhs) b = b * cur[blk][c] % p;
      if (a != b) return false;
    }
    return true;
  };
  std::vector<BlockPoint> out;
  for (const auto& v : cv) {
    cur[0] = v;
    for (const auto& w : cv) {
      cur[1] = w;
      if (!holds_up_to(1)) continue;
      for (const auto& z : cv) {
        cur[2] = z;
        if (!holds_up_to(2)) continue;
        for (const auto& t : ct) {
          cur[3] = t;
          if (holds_up_to(3)) out.push_back(cur);
        }
      }
    }
  }
  return out;
}

struct TrialResult {
  std::size_t rank = 0;
  std::size_t skipped = 0;
  bool equations_vanish = true;
  bool minors_vanish = false;
};

struct PointEvaluator {
  std::uint64_t p;
  const HKPresentation& hp;
  std::vector<MultiPoly> equations;
  std::vector<std::vector<MultiPoly>> jacobian;

  PointEvaluator(std::uint64_t prime, const HKPresentation& pres) : p(prime), hp(pres), equations(pres.surface_equations()) {
    for (const auto& e : equations) {
      jacobian.emplace_back();
      for (std::size_t v = 0; v < hp.vars.size(); ++v) jacobian.back().push_back(e.derivative(v));
    }
  }

  void evaluate(const BlockPoint& blocks, TrialResult& res) const {
    std::array<std::size_t, 4> chart{};
    std::vector<Scalar> point;
    for (std::size_t b = 0; b < 4; ++b) {
      for (std::size_t i = 0; i < 3; ++i)
        if (blocks[b][i] != 0) chart[b] = i;
      Scalar inv = Scalar::modp(p, blocks[b][chart[b]]).inverse();
      for (std::size_t i = 0; i < 3; ++i) point.push_back(Scalar::modp(p, blocks[b][i]) * inv);
    }
    for (const auto& e : equations) res.equations_vanish = res.equations_vanish && e.evaluate(point).is_zero();
    res.minors_vanish = true;
    for (const auto& m : hp.minors) res.minors_vanish = res.minors_vanish && m.value.evaluate(point).is_zero();
    exact::DenseMatrix j;
    for (const auto& row : jacobian) {
      exact::DenseVector r;
      for (std::size_t v = 0; v < row.size(); ++v)
        if (v % 3 != chart[v / 3]) r.push_back(row[v].evaluate(point));
      j.push_back(std::move(r));
    }
    res.rank = exact::rank(j, 8);
  }
};

std::uint64_t trial_state(std::uint64_t seed, std::size_t trial) {
  std::uint64_t state = seed;
  splitmix64(state);
  return state ^ ((trial + 1) * 0xd1b54a32d192ed03ULL);
}

}  // namespace

std::string to_string(SamplingMethod m) {
  switch (m) {
    case SamplingMethod::automatic:
      return "automatic";
    case SamplingMethod::tower:
      return "tower";
    case SamplingMethod::enumeration:
      return "enumeration";
  }
  return "?";
}

bool SmoothnessReport::all_expected() const {
  return equations_nonvanishing == 0 && rank_histogram.size() == 1 && rank_histogram.begin()->first == expected_rank;
}

SmoothnessReport smoothness_sample(const SmoothnessOptions& o) {
  if (o.n < 2) throw InvalidArgument("smoothness sampling requires n >= 2");
  if (!exact::is_prime(o.prime)) throw InvalidArgument("p must be prime");
  if (o.prime > kMaxPrime) throw InvalidArgument("p must be at most 2^22");
  if (o.prime % o.n != 1) throw InvalidArgument("p must be congruent to 1 mod n");
  if (o.trials == 0) throw InvalidArgument("trials must be positive");

  const std::uint64_t p = o.prime;
  HKPresentation hp = hk_presentation(o.n);
  PointEvaluator eval(p, hp);
  RootTable table(p, o.n);

  SmoothnessReport rep;
  rep.options = o;
  SamplingMethod method = o.method;
  if (method == SamplingMethod::automatic) {
    method = SamplingMethod::tower;
    if (p <= kSmallPrime) {
      rep.tower_admissible = tower_admissible_count(p, table);
      if (*rep.tower_admissible == 0) method = SamplingMethod::enumeration;
    }
  }
  rep.method_used = method;

  std::vector<BlockPoint> all;
  if (method == SamplingMethod::enumeration) {
    if (p > kSmallPrime) throw InvalidArgument("enumeration sampling requires p <= 256");
    all = surface_points(o.n, p);
    rep.surface_points = all.size();
    if (all.empty()) throw NotApplicable("the surface has no F_p-points");
  }

  std::vector<TrialResult> results(o.trials);
  parallel_for(o.trials, o.threads, [&](std::size_t trial) {
    std::uint64_t state = trial_state(o.seed, trial);
    TrialResult& res = results[trial];
    if (method == SamplingMethod::enumeration) {
      eval.evaluate(all[draw(state, all.size())], res);
      return;
    }
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == o.max_attempts_per_trial) throw GuardrailExceeded("no sample point found within the attempt bound");
      std::array<std::uint64_t, 3> x{draw(state, p), draw(state, p), draw(state, p)};
      // Rescaling x lets the lifted values range over every class modulo n-th powers.
      auto base = line_values(x, 1 + draw(state, p - 1), p);
      std::array<std::uint64_t, 6> up{};
      bool ok = !(x[0] == 0 && x[1] == 0 && x[2] == 0);
      for (std::size_t i = 0; i < 6 && ok; ++i) {
        std::size_t c = table.count(base[i]);
        if (c == 0) ok = false;
        else up[i] = table.root(base[i], draw(state, c));
      }
      BlockPoint blocks = blocks_of(up);
      if (!ok || !no_block_vanishes(blocks)) {
        ++res.skipped;
        continue;
      }
      eval.evaluate(blocks, res);
      return;
    }
  });

  for (const auto& r : results) {
    ++rep.rank_histogram[r.rank];
    rep.skipped += r.skipped;
    rep.equations_nonvanishing += r.equations_vanish ? 0 : 1;
    rep.minor_vanishing_points += r.minors_vanish ? 1 : 0;
  }
  return rep;
}

}  // namespace hkgeom::hk
