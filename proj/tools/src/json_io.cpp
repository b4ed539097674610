#include "hkgeom_cli/json_io.hpp"

#include "hkgeom/errors.hpp"

namespace hkgeom::cli {

using exact::FieldKind;
using exact::FieldSpec;
using exact::Rational;
using exact::Scalar;

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return Scalar::parse_rational(j.get<std::string>()).as_rational();
  throw InvalidArgument("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

}  // namespace

Json to_json(const Scalar& s) {
  switch (s.kind()) {
    case FieldKind::rational:
      return s.as_rational().get_str();
    case FieldKind::cyclotomic: {
      Json coeffs = Json::array();
      for (const auto& c : s.cyclotomic_coeffs()) coeffs.push_back(c.get_str());
      return Json{{"order", s.field().parameter()}, {"coeffs", coeffs}};
    }
    case FieldKind::prime:
      return Json{{"p", s.field().parameter()}, {"value", s.prime_value()}};
  }
  return nullptr;
}

Scalar scalar_from_json(const Json& j, const FieldSpec& field) {
  if (j.is_object()) {
    if (!j.contains("order") || !j.contains("coeffs")) throw InvalidArgument("cyclotomic scalar needs order and coeffs");
    std::vector<Rational> c;
    for (const auto& e : j.at("coeffs")) c.push_back(rational_from_json(e));
    return Scalar::cyclotomic(j.at("order").get<unsigned>(), std::move(c)).coerce(field);
  }
  if (j.is_array()) {
    if (field.kind() != FieldKind::cyclotomic) throw InvalidArgument("coefficient vectors need a cyclotomic field");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Scalar::cyclotomic(static_cast<unsigned>(field.parameter()), std::move(c));
  }
  return Scalar(rational_from_json(j)).coerce(field);
}

Json to_json(const FieldSpec& f) {
  switch (f.kind()) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::cyclotomic:
      return Json{{"cyclotomic", f.parameter()}};
    case FieldKind::prime:
      return Json{{"prime", f.parameter()}};
  }
  return nullptr;
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
  if (j.is_object() && j.contains("cyclotomic")) {
    const Json& k = j.at("cyclotomic");
    if (!k.is_number_unsigned() || k.get<unsigned>() == 0) throw InvalidArgument("cyclotomic order must be a positive integer");
    return FieldSpec::cyclotomic(k.get<unsigned>());
  }
  throw InvalidArgument("field must be \"Q\" or {\"cyclotomic\": k}");
}

Json to_json(const exact::MultiPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json{{"exponents", it->first}, {"coefficient", to_json(it->second)}});
  return terms;
}

Json to_json(const exact::PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const config::Triple& t) {
  Json a = Json::array();
  for (const auto& c : t) a.push_back(to_json(c));
  return a;
}

config::Configuration configuration_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("lines") || !j.at("lines").is_array())
    throw InvalidArgument("configuration JSON needs \"field\" and \"lines\"");
  FieldSpec field = field_from_json(j.at("field"));
  std::vector<config::Triple> forms;
  for (const auto& line : j.at("lines")) {
    if (!line.is_array() || line.size() != 3) throw InvalidArgument("each line needs three coefficients");
    forms.push_back({scalar_from_json(line[0], field), scalar_from_json(line[1], field), scalar_from_json(line[2], field)});
  }
  return config::Configuration::analyze(forms);
}

Json configuration_to_json(const config::Configuration& cfg) {
  Json lines = Json::array();
  for (const auto& f : cfg.forms()) lines.push_back(to_json(f));
  return Json{{"field", to_json(cfg.field())}, {"lines", lines}};
}

}  // namespace hkgeom::cli
