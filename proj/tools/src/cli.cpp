#include "hkgeom_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "hkgeom/delpezzo/delpezzo.hpp"
#include "hkgeom/errors.hpp"
#include "hkgeom/hk/hk.hpp"
#include "hkgeom/kummer/certificate.hpp"
#include "hkgeom_cli/json_io.hpp"

namespace hkgeom::cli {

namespace {

using config::Configuration;
using exact::MultiPoly;
using exact::Scalar;

struct Report {
  Json json;
  std::string text;
  bool verified = true;
};

const std::map<std::string, std::string>& anchors() {
  static const std::map<std::string, std::string> a{
      {"parametrization_vanishing", "equations vanish identically under the plane parametrization"},
      {"complex", "Hilbert-Burch complex: row of signed minors times A is zero"},
      {"syzygy", "columns of A are syzygies: sum_j A[j][c] G_j = 0"},
      {"rank_2_on_surface", "A has rank 2 at a parametrized point"},
      {"rank_3_off_surface", "A has rank 3 at a point off the surface"},
      {"symmetric_equations_match_minors", "the four symmetric trilinear equations equal the minors up to sign"},
      {"projection_variant_same_span", "both dp5 matrix conventions span the same equations"},
      {"determinant_is_trilinear_binomial", "det B = +-(y1 z1 t1 - y2 z2 t2)"},
      {"block_linear_relations", "each block's coordinates satisfy its linear relation"},
      {"unique_binomial_per_projection", "every triple of factors carries exactly one binomial"},
      {"nonzero_after_eliminating_third_coordinates", "the ten binomials stay nonzero in affine pencil coordinates"},
      {"minors_times_matrix_zero", "signed minors of A' times A' is zero"},
      {"minors_trilinear_in_complementary_blocks", "minor j is trilinear in the blocks other than row j's"},
      {"first_minor_is_first_binomial", "the system contains V1 W1 Z1 = V2 W2 Z2"},
      {"minors_identify_with_dp5_symmetric", "identifying exponents at n = 1 gives the dp5 equations"},
      {"binomials_identify_with_dp5_symmetric", "the epsilon = 1 binomials pull back the dp5 equations"},
      {"pullback_splits_with_binomial_factor", "M1^n - M2^n = prod (M1 - eps M2) over Q(zeta_n)"},
      {"ten_equations", "ten binomial equations on five Fermat blocks"},
      {"restriction_to_four_blocks", "the U-free equations are the four-block binomials"},
  };
  return a;
}

Json checks_json(const std::vector<delpezzo::Check>& checks) {
  Json j = Json::object();
  for (const auto& c : checks) j[c.name] = c.passed;
  return j;
}

Json anchors_json(const std::vector<delpezzo::Check>& checks) {
  Json j = Json::object();
  for (const auto& c : checks) {
    auto it = anchors().find(c.name);
    j[c.name] = it == anchors().end() ? c.name : it->second;
  }
  return j;
}

bool all_pass(const std::vector<delpezzo::Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

void write_checks(std::ostream& os, const std::vector<delpezzo::Check>& checks) {
  for (const auto& c : checks) {
    auto it = anchors().find(c.name);
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (it != anchors().end()) os << "  (" << it->second << ")";
    os << "\n";
  }
}

Json names_json(const exact::Variables& v) { return Json(v.names()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Configuration load_source(const std::string& source) {
  auto names = config::catalog_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) return config::catalog(source);
  Json j;
  try {
    j = Json::parse(read_file(source));
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("malformed configuration file " + source + ": " + e.what());
  }
  return configuration_from_json(j);
}

Json rigidity_json(const config::RigidityReport& r) {
  Json j{{"has_projective_basis", r.has_projective_basis},
         {"all_ni_ge2", r.all_ni_ge2},
         {"inequality_holds", r.inequality_holds},
         {"singularly_saturated", r.singularly_saturated},
         {"inductive_chain_found", r.inductive_chain_found},
         {"base_quadruples_tried", r.base_quadruples_tried}};
  if (r.chain) {
    Json steps = Json::array();
    for (const auto& s : r.chain->steps) steps.push_back(Json{{"line", s.line}, {"points", s.points}, {"added", s.added}});
    j["chain"] = Json{{"base", r.chain->base}, {"initial", r.chain->initial}, {"steps", steps}};
  } else {
    j["chain"] = nullptr;
  }
  return j;
}

Report analysis(const Configuration& cfg) {
  auto r = config::rigidity_report(cfg);
  Json singular = Json::array();
  std::size_t doubles = 0;
  for (const auto& p : cfg.points()) doubles += p.valency() == 2;
  for (std::size_t s = 0; s < cfg.singular_count(); ++s) {
    const auto& p = cfg.singular_point(s);
    singular.push_back(Json{{"point", to_json(p.point.coords())}, {"lines", p.lines}, {"valency", p.valency()}});
  }
  Report rep;
  rep.json = Json{{"configuration", configuration_to_json(cfg)},
                  {"line_count", cfg.line_count()},
                  {"m", r.m},
                  {"double_points", doubles},
                  {"n", r.n},
                  {"chi", r.chi ? Json(*r.chi) : Json(nullptr)},
                  {"singular_points", singular},
                  {"rigidity", rigidity_json(r)}};
  std::ostringstream os;
  os << std::boolalpha << "field: " << cfg.field().to_string() << "\nlines: " << cfg.line_count() << "\n";
  for (std::size_t i = 0; i < cfg.line_count(); ++i) os << "  L" << i << ": " << config::to_string(cfg.forms()[i]) << "\n";
  os << "singular points m: " << r.m << "\ndouble points: " << doubles << "\n";
  for (std::size_t s = 0; s < cfg.singular_count(); ++s) {
    const auto& p = cfg.singular_point(s);
    os << "  P" << s << " " << config::to_string(p.point.coords()) << " valency " << p.valency() << "\n";
  }
  os << "n_i:";
  for (auto v : r.n) os << " " << v;
  os << "\nchi: " << (r.chi ? std::to_string(*r.chi) : std::string("n/a")) << "\n";
  os << "projective basis: " << r.has_projective_basis << "\nall n_i >= 2: " << r.all_ni_ge2
     << "\ninequality holds: " << r.inequality_holds << "\nsingularly saturated: " << r.singularly_saturated
     << "\ninductive chain found: " << r.inductive_chain_found << " (" << r.base_quadruples_tried
     << " base quadruples tried)\n";
  rep.text = os.str();
  return rep;
}

Report catalog_cmd(const std::string& name) {
  if (name.empty()) {
    Report rep;
    rep.json = Json{{"names", config::catalog_names()}};
    for (const auto& n : config::catalog_names()) rep.text += n + "\n";
    return rep;
  }
  Report rep = analysis(config::catalog(name));
  Json j{{"name", name}};
  j.update(rep.json);
  rep.json = std::move(j);
  rep.text = "catalog: " + name + "\n" + rep.text;
  return rep;
}

config::Triple parse_line(const std::string& text, const exact::FieldSpec& field) {
  std::vector<Scalar> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(Scalar::parse_rational(item).coerce(field));
  if (c.size() != 3) throw InvalidArgument("--line expects three comma-separated rationals");
  return {c[0], c[1], c[2]};
}

Report extend_cmd(const std::string& source, const std::string& line) {
  Configuration cfg = load_source(source);
  auto ext = config::extend(cfg, parse_line(line, cfg.field()));
  Report inner = analysis(ext.config);
  Report rep;
  rep.json = Json{{"case", std::string(config::to_string(ext.kind))},
                  {"m_delta", ext.m_delta},
                  {"chi_preserved", ext.chi_preserved},
                  {"double_points_on_line", ext.double_points_on_line},
                  {"singular_points_on_line", ext.singular_points_on_line},
                  {"extended", inner.json}};
  std::ostringstream os;
  os << std::boolalpha << "extension case: " << config::to_string(ext.kind) << "\nm_delta: " << ext.m_delta
     << "\nchi preserved: " << ext.chi_preserved << "\ndouble points on line: " << ext.double_points_on_line
     << "\nsingular points on line: " << ext.singular_points_on_line << "\n--- extended configuration\n"
     << inner.text;
  rep.text = os.str();
  return rep;
}

Report compare_cmd(const std::string& a, const std::string& b) {
  Configuration ca = load_source(a), cb = load_source(b);
  bool same = ca.line_count() == cb.line_count() && config::same_incidence_type(ca, cb);
  Report rep;
  rep.json = Json{{"lines", {ca.line_count(), cb.line_count()}}, {"same_incidence_type", same}};
  rep.text = std::string("same incidence type: ") + (same ? "yes" : "no") + "\n";
  return rep;
}

Report kummer_equations_cmd(const std::string& source, unsigned n) {
  auto norm = kummer::normalize_basis(load_source(source));
  auto cover = kummer::cover_equations(norm.config, n);
  Report rep;
  Json eqs = Json::array(), text = Json::array(), rel = Json::array();
  std::ostringstream os;
  os << "normalized by lines " << norm.basis[0] << ", " << norm.basis[1] << ", " << norm.basis[2] << "\n";
  for (std::size_t j = 3; j <= cover.r; ++j) {
    eqs.push_back(to_json(cover.F(j)));
    text.push_back(cover.F(j).to_string());
    os << "F" << j << " = " << cover.F(j).to_string() << "\n";
  }
  for (const auto& r : kummer::point_relations(cover))
    rel.push_back(Json{{"point", to_json(r.point.coords())},
                       {"j", r.j},
                       {"i", r.i},
                       {"k", r.k},
                       {"lambda", to_json(r.lambda)},
                       {"mu", to_json(r.mu)}});
  os << "point relations l_j = lambda l_i + mu l_k: " << rel.size() << "\n";
  rep.json = Json{{"n", n},
                  {"r", cover.r},
                  {"normalization", Json{{"basis", norm.basis}, {"order", norm.order}}},
                  {"variables", names_json(cover.vars)},
                  {"equations", eqs},
                  {"equations_text", text},
                  {"relations", rel}};
  rep.text = os.str();
  return rep;
}

Report kummer_certify_cmd(const std::string& source, unsigned n, std::size_t max_unknowns, int mu_sign, unsigned threads) {
  auto norm = kummer::normalize_basis(load_source(source));
  auto cover = kummer::cover_equations(norm.config, n);
  kummer::CertifyOptions opt;
  opt.max_unknowns = max_unknowns;
  opt.mu_sign = mu_sign;
  opt.threads = threads;
  auto r = kummer::certify_triviality(cover, opt);
  Report rep;
  Json witness = Json::array();
  for (const auto& w : r.witness)
    witness.push_back(Json{{"component", w.component}, {"exponents", w.monomial}, {"coefficient", to_json(w.coefficient)}});
  rep.json = Json{{"n", r.n},
                  {"lines", r.lines},
                  {"relations", r.relations},
                  {"mu_sign", mu_sign},
                  {"dims", Json{{"quotient", r.quotient_dim},
                                {"ambient", r.ambient},
                                {"aux_unknowns", r.aux_unknowns},
                                {"T", r.dim_T},
                                {"E", r.dim_E},
                                {"E_plus_T", r.dim_E_plus_T}}},
                  {"contained", r.contained},
                  {"trivial_in_E", r.trivial_in_E},
                  {"trivial_generators_outside_E", r.trivial_generators_outside_E},
                  {"anchor", "equisingular first-order deformations are trivial: E contained in T"},
                  {"soundness_note", r.soundness_note}};
  if (!r.witness.empty()) rep.json["witness"] = witness;
  rep.verified = r.contained && r.trivial_in_E;
  std::ostringstream os;
  os << "n = " << r.n << ", lines = " << r.lines << ", point relations = " << r.relations << "\n"
     << "ambient = " << r.ambient << " (" << r.quotient_dim << " per component), auxiliary unknowns = " << r.aux_unknowns
     << "\ndim T = " << r.dim_T << ", dim E = " << r.dim_E << ", dim(E + T) = " << r.dim_E_plus_T << "\n"
     << "T inside E: " << (r.trivial_in_E ? "yes" : "no") << "\nE inside T (contained): " << (r.contained ? "yes" : "no")
     << "\n" << r.soundness_note << "\n";
  rep.text = os.str();
  return rep;
}

delpezzo::ProjPoint pt(long a, long b, long c) { return delpezzo::ProjPoint({Scalar(a), Scalar(b), Scalar(c)}); }

struct DpOptions {
  int degree = 5;
  std::string variant = "symmetric";
  std::optional<std::string> lambda, mu;
};

delpezzo::DeterminantalPresentation build_dp(const DpOptions& o) {
  using namespace delpezzo;
  switch (o.degree) {
    case 8:
      return graph_equations(BlowupData::make({pt(0, 0, 1)}));
    case 7:
      return graph_equations(BlowupData::make({pt(0, 0, 1), pt(0, 1, 0)}));
    case 6: {
      auto p = dp_presentation(BlowupData::make({pt(0, 0, 1), pt(0, 1, 0), pt(1, 0, 0)}));
      const auto& v = p.vars;
      auto m = [&](const char* a, const char* b, const char* c) {
        return MultiPoly::variable(v, a) * MultiPoly::variable(v, b) * MultiPoly::variable(v, c);
      };
      MultiPoly target = m("y1", "z1", "t1") - m("y2", "z2", "t2");
      MultiPoly det = p.equations.front();
      p.checks.push_back({"determinant_is_trilinear_binomial", det == target || det == -target});
      return p;
    }
    case 5:
      return dp5_presentation(o.variant == "projection" ? Dp5Variant::projection : Dp5Variant::symmetric);
    case 4:
      if (o.lambda.has_value() != o.mu.has_value()) throw InvalidArgument("give both --lambda and --mu or neither");
      if (o.lambda) return dp4_presentation(Scalar::parse_rational(*o.lambda), Scalar::parse_rational(*o.mu));
      return dp4_presentation();
  }
  throw InvalidArgument("degree must be one of 8, 7, 6, 5, 4");
}

Json presentation_json(const delpezzo::DeterminantalPresentation& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json names = Json::array();
    for (auto i : b.vars) names.push_back(p.vars.name(i));
    blocks.push_back(Json{{"name", b.name}, {"variables", names}});
  }
  Json eqs = Json::array(), text = Json::array(), images = Json::object(), pencils = Json::array();
  for (const auto& e : p.equations) {
    eqs.push_back(to_json(e));
    text.push_back(e.to_string());
  }
  for (std::size_t i = 0; i < p.parametrization.size(); ++i) images[p.vars.name(i)] = to_json(p.parametrization[i]);
  for (const auto& pen : p.pencils)
    pencils.push_back(Json{{"block", pen.block}, {"ell", pen.ell.to_string()}, {"m", pen.m.to_string()}});
  Json j{{"label", p.label}, {"variables", names_json(p.vars)}, {"blocks", blocks}};
  if (p.matrix) j["matrix"] = to_json(*p.matrix);
  j["equations"] = eqs;
  j["equations_text"] = text;
  j["parametrization"] = Json{{"variables", names_json(p.param_vars)}, {"images", images}};
  j["pencils"] = pencils;
  j["checks"] = checks_json(p.checks);
  j["anchors"] = anchors_json(p.checks);
  return j;
}

Report delpezzo_cmd(const DpOptions& o, bool verify_only) {
  auto p = build_dp(o);
  std::vector<delpezzo::Check> checks = p.checks;
  Report rep;
  Json extra = Json::object();
  std::ostringstream os;
  if (o.degree == 5) {
    auto ten = delpezzo::dp5_ten_equations();
    for (const auto& c : ten.checks) checks.push_back({"ten_equations." + c.name, c.passed});
    Json t = Json::array();
    for (const auto& e : ten.equations)
      t.push_back(Json{{"factors", e.factors}, {"equation", e.equation.to_string()}});
    extra["ten_equations"] = Json{{"factor_blocks", ten.factor_blocks}, {"equations", t}, {"checks", checks_json(ten.checks)}};
    if (o.variant != "projection") {
      Json corr = Json::array();
      auto proj = delpezzo::dp5_presentation(delpezzo::Dp5Variant::projection);
      for (const auto& m : delpezzo::pencil_correspondence(proj, p)) {
        Json tr = Json::array();
        for (const auto& row : m.transition) tr.push_back(Json{to_json(row[0]), to_json(row[1])});
        corr.push_back(Json{{"projection_block", m.block_a}, {"symmetric_block", m.block_b}, {"transition", tr}});
      }
      extra["variant_correspondence"] = corr;
    }
    Json terms = Json::array();
    for (const auto& t : delpezzo::eagon_northcott_terms(4)) terms.push_back(Json{{"rank", t.rank}, {"module", t.description}});
    extra["resolution_terms"] = terms;
  }
  rep.verified = all_pass(checks);
  if (verify_only) {
    rep.json = Json{{"label", p.label}, {"degree", o.degree}, {"checks", checks_json(checks)},
                    {"anchors", anchors_json(checks)}, {"all_passed", rep.verified}};
  } else {
    rep.json = Json{{"degree", o.degree}};
    rep.json.update(presentation_json(p));
    rep.json.update(extra);
    os << p.label << " in " << p.vars.size() << " variables, " << p.equations.size() << " equations\n";
    if (p.matrix) os << "matrix:\n" << p.matrix->to_string() << "\n";
    for (const auto& e : p.equations) os << "  " << e.to_string() << "\n";
  }
  os << "checks for " << p.label << ":\n";
  write_checks(os, checks);
  rep.text = os.str();
  return rep;
}

Report hk_present_cmd(unsigned n) {
  auto p = hk::hk_presentation(n);
  Report rep;
  Json minors = Json::array(), fermat = Json::array(), bin = Json::array();
  std::ostringstream os;
  os << "A' =\n" << p.matrix.to_string() << "\nminors:\n";
  for (const auto& m : p.minors) {
    minors.push_back(to_json(m.value));
    os << "  " << m.value.to_string() << "\n";
  }
  os << "Fermat curves:\n";
  for (const auto& f : p.fermat_equations) {
    fermat.push_back(to_json(f));
    os << "  " << f.to_string() << "\n";
  }
  os << "epsilon = 1 equations:\n";
  for (const auto& b : p.binomials) {
    bin.push_back(to_json(b));
    os << "  " << b.to_string() << "\n";
  }
  os << "checks:\n";
  write_checks(os, p.checks);
  rep.verified = p.all_checks_pass();
  rep.json = Json{{"n", n},
                  {"variables", names_json(p.vars)},
                  {"matrix", to_json(p.matrix)},
                  {"minors", minors},
                  {"fermat_equations", fermat},
                  {"binomials", bin},
                  {"checks", checks_json(p.checks)},
                  {"anchors", anchors_json(p.checks)}};
  rep.text = os.str();
  return rep;
}

Report hk_verify_cmd(unsigned n) {
  auto p = hk::hk_presentation(n);
  auto eps = hk::epsilon_constraint_check(n);
  auto five = hk::hk_five_factor_equations(n);
  bool ok = p.all_checks_pass() && all_pass(five.checks) && eps.identity_holds &&
            eps.component_count == static_cast<std::size_t>(n) * n * n;
  Report rep;
  rep.verified = ok;
  rep.json = Json{{"n", n},
                  {"checks", checks_json(p.checks)},
                  {"anchors", anchors_json(p.checks)},
                  {"epsilon", Json{{"exponents", eps.exponents},
                                   {"common_monomial", eps.common_monomial.to_string()},
                                   {"identity_holds", eps.identity_holds},
                                   {"tuples_enumerated", eps.tuples_enumerated},
                                   {"component_count", eps.component_count},
                                   {"expected_components", n * n * n}}},
                  {"five_factor", Json{{"equation_count", five.equations.size()}, {"checks", checks_json(five.checks)}}},
                  {"all_passed", ok}};
  std::ostringstream os;
  os << "HK presentation checks (n = " << n << "):\n";
  write_checks(os, p.checks);
  os << std::boolalpha << "epsilon constraint: exponents (" << eps.exponents[0] << "," << eps.exponents[1] << "," << eps.exponents[2] << ","
     << eps.exponents[3] << "), identity holds: " << eps.identity_holds << ", components: " << eps.component_count
     << " (n^3 = " << n * n * n << ")\nfive-factor system:\n";
  write_checks(os, five.checks);
  rep.text = os.str();
  return rep;
}

Report hk_smoothness_cmd(const hk::SmoothnessOptions& o) {
  auto r = hk::smoothness_sample(o);
  Report rep;
  Json hist = Json::object();
  for (const auto& [rank, count] : r.rank_histogram) hist[std::to_string(rank)] = count;
  rep.json = Json{{"n", o.n},
                  {"p", o.prime},
                  {"trials", o.trials},
                  {"seed", o.seed},
                  {"skipped", r.skipped},
                  {"rank_histogram", hist},
                  {"expected_rank", r.expected_rank},
                  {"equations_nonvanishing", r.equations_nonvanishing},
                  {"minor_vanishing_points", r.minor_vanishing_points},
                  {"method", hk::to_string(r.method_used)},
                  {"tower_admissible", r.tower_admissible ? Json(*r.tower_admissible) : Json(nullptr)},
                  {"surface_points", r.surface_points ? Json(*r.surface_points) : Json(nullptr)},
                  {"kind", hk::SmoothnessReport::kind},
                  {"note", "finite-field sampling corroborates smoothness; it is not a proof"}};
  rep.verified = r.all_expected();
  std::ostringstream os;
  os << "smoothness sampling (" << hk::SmoothnessReport::kind << ", not a proof): n = " << o.n << ", p = " << o.prime
     << ", trials = " << o.trials << ", seed = " << o.seed << ", method = " << hk::to_string(r.method_used) << "\n"
     << "rank histogram:";
  for (const auto& [rank, count] : r.rank_histogram) os << " " << rank << ":" << count;
  os << "\nskipped draws: " << r.skipped << "\nequations not vanishing: " << r.equations_nonvanishing << "\n";
  rep.text = os.str();
  return rep;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("HKGEOM_THREADS")) {
    try {
      unsigned long v = std::stoul(env);
      if (v > 0 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for line configurations, Kummer covers, Del Pezzo and Hirzebruch-Kummer surfaces",
               "hkgeom"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  unsigned threads = default_threads();
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--threads", threads, "worker threads (default: HKGEOM_THREADS or 1)")->check(CLI::Range(1u, 1024u));

  std::function<Report()> action;

  auto* cat = app.add_subcommand("catalog", "named configurations: complete-quadrangle, hesse, dual-hesse");
  std::string cat_name;
  cat->add_option("name", cat_name, "catalog name; omit to list");
  cat->callback([&] { action = [&] { return catalog_cmd(cat_name); }; });

  auto* cfg = app.add_subcommand("config", "configuration analysis");
  cfg->require_subcommand(1);
  std::string file_a, file_b, line;
  auto* analyze = cfg->add_subcommand("analyze", "incidence data and rigidity flags");
  analyze->add_option("file", file_a, "configuration JSON or catalog name")->required();
  analyze->callback([&] { action = [&] { return analysis(load_source(file_a)); }; });
  auto* ext = cfg->add_subcommand("extend", "add one line and classify the extension");
  ext->add_option("file", file_a, "configuration JSON or catalog name")->required();
  ext->add_option("--line", line, "coefficients a0,a1,a2")->required();
  ext->callback([&] { action = [&] { return extend_cmd(file_a, line); }; });
  auto* cmp = cfg->add_subcommand("compare", "compare incidence types");
  cmp->add_option("first", file_a)->required();
  cmp->add_option("second", file_b)->required();
  cmp->callback([&] { action = [&] { return compare_cmd(file_a, file_b); }; });

  auto* kum = app.add_subcommand("kummer", "Kummer covers");
  kum->require_subcommand(1);
  std::string source;
  unsigned n = 3;
  std::size_t max_unknowns = 20000;
  int mu_sign = -1;
  auto* keq = kum->add_subcommand("equations", "complete-intersection equations F_3..F_r");
  keq->add_option("source", source, "configuration JSON or catalog name")->required();
  keq->add_option("--n", n, "exponent")->check(CLI::Range(1u, 64u));
  keq->callback([&] { action = [&] { return kummer_equations_cmd(source, n); }; });
  auto* kcert = kum->add_subcommand("certify", "equisingular deformation triviality certificate");
  kcert->add_option("source", source, "configuration JSON or catalog name")->required();
  kcert->add_option("--n", n, "exponent")->check(CLI::Range(3u, 64u));
  kcert->add_option("--max-unknowns", max_unknowns, "guardrail on the number of unknowns");
  kcert->add_option("--mu-sign", mu_sign, "sign of the mu term in point relations")->check(CLI::IsMember({-1, 1}));
  kcert->callback([&] { action = [&] { return kummer_certify_cmd(source, n, max_unknowns, mu_sign, threads); }; });

  auto* dp = app.add_subcommand("delpezzo", "Del Pezzo surfaces in products of projective lines");
  dp->require_subcommand(1);
  DpOptions dpo;
  std::string lambda, mu;
  auto add_dp = [&](CLI::App* sub) {
    sub->add_option("--degree", dpo.degree, "degree 8, 7, 6, 5 or 4")->required()->check(CLI::IsMember({8, 7, 6, 5, 4}));
    sub->add_option("--variant", dpo.variant, "dp5 matrix convention")->check(CLI::IsMember({"symmetric", "projection"}));
    sub->add_option("--lambda", lambda, "dp4 parameter (rational)");
    sub->add_option("--mu", mu, "dp4 parameter (rational)");
  };
  auto* present = dp->add_subcommand("present", "equations, matrix and checks");
  add_dp(present);
  auto* verify = dp->add_subcommand("verify", "checks only");
  add_dp(verify);
  auto dp_action = [&](bool verify_only) {
    if (!lambda.empty()) dpo.lambda = lambda;
    if (!mu.empty()) dpo.mu = mu;
    return delpezzo_cmd(dpo, verify_only);
  };
  present->callback([&] { action = [&] { return dp_action(false); }; });
  verify->callback([&] { action = [&] { return dp_action(true); }; });

  auto* hkc = app.add_subcommand("hk", "Hirzebruch-Kummer surface in four Fermat curves");
  hkc->require_subcommand(1);
  hk::SmoothnessOptions so;
  std::string method = "automatic";
  auto* hpres = hkc->add_subcommand("present", "matrix A', minors, Fermat curves, binomials");
  hpres->add_option("--n", n, "exponent")->required()->check(CLI::Range(2u, 64u));
  hpres->callback([&] { action = [&] { return hk_present_cmd(n); }; });
  auto* hver = hkc->add_subcommand("verify", "identities, pullback splitting, epsilon constraint");
  hver->add_option("--n", n, "exponent")->required()->check(CLI::Range(2u, 64u));
  hver->callback([&] { action = [&] { return hk_verify_cmd(n); }; });
  auto* hsm = hkc->add_subcommand("smoothness", "Jacobian ranks at sampled F_p-points");
  hsm->add_option("--n", so.n, "exponent")->required()->check(CLI::Range(2u, 64u));
  hsm->add_option("--prime", so.prime, "prime p with p = 1 mod n")->required();
  hsm->add_option("--trials", so.trials, "number of sampled points")->required()->check(CLI::PositiveNumber);
  hsm->add_option("--seed", so.seed, "random seed")->required();
  hsm->add_option("--method", method, "automatic, tower or enumeration")
      ->check(CLI::IsMember({"automatic", "tower", "enumeration"}));
  hsm->callback([&] {
    action = [&] {
      so.threads = threads;
      so.method = method == "tower" ? hk::SamplingMethod::tower
                  : method == "enumeration" ? hk::SamplingMethod::enumeration
                                            : hk::SamplingMethod::automatic;
      return hk_smoothness_cmd(so);
    };
  });

  Outcome outcome;
  std::ostringstream out, err;
  std::vector<const char*> argv{"hkgeom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    outcome.exit_code = code == 0 ? ok : usage_error;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }
  try {
    Report rep = action();
    outcome.out = json ? rep.json.dump(2) + "\n" : rep.text;
    outcome.exit_code = rep.verified ? ok : verification_failed;
  } catch (const std::exception& e) {
    outcome.err = std::string("error: ") + e.what() + "\n";
    outcome.exit_code = usage_error;
  }
  return outcome;
}

}  // namespace hkgeom::cli
