#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkgeom/configuration/projective.hpp"

namespace hkgeom::config {

struct IntersectionPoint {
  ProjPoint point;
  std::vector<std::size_t> lines;  // ascending indices of incident lines
  std::size_t valency() const { return lines.size(); }
};

// A list of distinct lines with its exact incidence data. The linear forms are
// kept as given; incidence uses the canonical lines.
class Configuration {
 public:
  static Configuration analyze(const std::vector<Triple>& forms);

  FieldSpec field() const { return field_; }
  std::size_t line_count() const { return lines_.size(); }
  const std::vector<ProjLine>& lines() const { return lines_; }
  const std::vector<Triple>& forms() const { return forms_; }
  // All intersection points, sorted by canonical coordinates.
  const std::vector<IntersectionPoint>& points() const { return points_; }
  // Indices into points() of the points of valency >= 3.
  const std::vector<std::size_t>& singular() const { return singular_; }
  std::size_t singular_count() const { return singular_.size(); }
  const IntersectionPoint& singular_point(std::size_t s) const { return points_[singular_[s]]; }
  // n_i: number of singular points on line i.
  const std::vector<std::size_t>& singular_per_line() const { return n_; }
  // Lines through a given point (by incidence test).
  std::vector<std::size_t> lines_through(const ProjPoint& p) const;
  std::optional<std::size_t> find_line(const ProjLine& l) const;

 private:
  FieldSpec field_;
  std::vector<Triple> forms_;
  std::vector<ProjLine> lines_;
  std::vector<IntersectionPoint> points_;
  std::vector<std::size_t> singular_;
  std::vector<std::size_t> n_;
};

// 8 - 2m + sum(n_i - 2); requires m >= 4 and all n_i >= 2.
long euler_characteristic(const Configuration& cfg);

struct ChainStep {
  std::size_t line;                 // the line entering the chain
  std::vector<std::size_t> points;  // singular-point indices used (two, or one for the three-line rule)
  std::vector<std::size_t> added;   // all lines added at this step, ascending
};

struct InductiveChain {
  std::array<std::size_t, 4> base;     // singular-point indices p1..p4
  std::vector<std::size_t> initial;    // lines through p1..p4
  std::vector<ChainStep> steps;
};

struct RigidityReport {
  std::size_t m = 0;
  std::vector<std::size_t> n;
  std::optional<long> chi;
  bool has_projective_basis = false;
  bool all_ni_ge2 = false;
  bool inequality_holds = false;
  bool singularly_saturated = false;
  bool inductive_chain_found = false;
  std::optional<InductiveChain> chain;
  std::size_t base_quadruples_tried = 0;
};

RigidityReport rigidity_report(const Configuration& cfg);

enum class ExtensionCase { a, b, c, other };
std::string_view to_string(ExtensionCase c);

struct ExtensionResult {
  Configuration config;
  ExtensionCase kind;
  long m_delta;
  bool chi_preserved;
  std::size_t double_points_on_line;
  std::size_t singular_points_on_line;
};

ExtensionResult extend(const Configuration& cfg, const Triple& form);

// complete-quadrangle, hesse, dual-hesse
Configuration catalog(std::string_view name);
std::vector<std::string> catalog_names();

bool same_incidence_type(const Configuration& a, const Configuration& b);

}  // namespace hkgeom::config
