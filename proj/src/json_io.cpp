#include "divexp/json_io.hpp"

#include <limits>
#include <regex>

#include "divexp/error.hpp"

namespace divexp {

namespace detail {
extern const char* const kCliSchemaText;
}

namespace {

bool has_type(const Json& instance, const std::string& type) {
  if (type == "null") return instance.is_null();
  if (type == "boolean") return instance.is_boolean();
  if (type == "object") return instance.is_object();
  if (type == "array") return instance.is_array();
  if (type == "string") return instance.is_string();
  if (type == "integer") return instance.is_number_integer();
  if (type == "number") return instance.is_number();
  return false;
}

}  // namespace

std::vector<std::string> SchemaValidator::validate(const Json& instance,
                                                   const std::string& pointer) const {
  std::vector<std::string> errors;
  check(root_.at(Json::json_pointer(pointer)), instance, "$", errors);
  return errors;
}

void SchemaValidator::check(const Json& schema, const Json& instance, const std::string& where,
                            std::vector<std::string>& errors) const {
  auto err = [&](const std::string& what) { errors.push_back(where + ": " + what); };

  if (auto it = schema.find("$ref"); it != schema.end()) {
    const std::string ref = it->get<std::string>();
    require(ref.starts_with("#"), ErrorCode::InvalidArgument, "only local $ref supported: " + ref);
    check(root_.at(Json::json_pointer(ref.substr(1))), instance, where, errors);
  }
  if (auto it = schema.find("type"); it != schema.end()) {
    bool ok = false;
    if (it->is_array()) {
      for (const auto& t : *it) ok = ok || has_type(instance, t.get<std::string>());
    } else {
      ok = has_type(instance, it->get<std::string>());
    }
    if (!ok) {
      err("expected type " + it->dump());
      return;
    }
  }
  if (auto it = schema.find("enum"); it != schema.end()) {
    bool found = false;
    for (const auto& v : *it) found = found || v == instance;
    if (!found) err("value " + instance.dump() + " not in " + it->dump());
  }
  if (auto it = schema.find("const"); it != schema.end() && *it != instance)
    err("expected " + it->dump());
  if (instance.is_number()) {
    if (auto it = schema.find("minimum"); it != schema.end() && instance.get<double>() < it->get<double>())
      err("below minimum " + it->dump());
    if (auto it = schema.find("maximum"); it != schema.end() && instance.get<double>() > it->get<double>())
      err("above maximum " + it->dump());
  }
  if (instance.is_string()) {
    if (auto it = schema.find("pattern"); it != schema.end()) {
      const std::regex re(it->get<std::string>(), std::regex::ECMAScript);
      if (!std::regex_search(instance.get<std::string>(), re))
        err("does not match " + it->get<std::string>());
    }
  }
  if (instance.is_array()) {
    if (auto it = schema.find("minItems"); it != schema.end() && instance.size() < it->get<std::size_t>())
      err("fewer than " + it->dump() + " items");
    if (auto it = schema.find("maxItems"); it != schema.end() && instance.size() > it->get<std::size_t>())
      err("more than " + it->dump() + " items");
    if (auto it = schema.find("items"); it != schema.end())
      for (std::size_t i = 0; i < instance.size(); ++i)
        check(*it, instance[i], where + "[" + std::to_string(i) + "]", errors);
  }
  if (instance.is_object()) {
    const Json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    if (auto it = schema.find("required"); it != schema.end())
      for (const auto& key : *it)
        if (!instance.contains(key.get<std::string>())) err("missing " + key.get<std::string>());
    for (const auto& [key, value] : instance.items()) {
      if (props && props->contains(key)) {
        check((*props)[key], value, where + "." + key, errors);
      } else if (auto it = schema.find("additionalProperties"); it != schema.end() && *it == false) {
        err("unexpected property " + key);
      }
    }
  }
  if (auto it = schema.find("anyOf"); it != schema.end()) {
    bool any = false;
    for (const auto& sub : *it) {
      std::vector<std::string> sink;
      check(sub, instance, where, sink);
      any = any || sink.empty();
    }
    if (!any) err("matches none of the alternatives");
  }
  if (auto it = schema.find("oneOf"); it != schema.end()) {
    int matches = 0;
    for (const auto& sub : *it) {
      std::vector<std::string> sink;
      check(sub, instance, where, sink);
      if (sink.empty()) ++matches;
    }
    if (matches != 1) err("must match exactly one alternative, matches " + std::to_string(matches));
  }
}

const Json& cli_schema() {
  static const Json schema = Json::parse(detail::kCliSchemaText);
  return schema;
}

const SchemaValidator& cli_validator() {
  static const SchemaValidator validator(cli_schema());
  return validator;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return to_string(z);
}

Json derivation_json(const Derivation& d) {
  Json j;
  j["degree"] = d.degree();
  j["px"] = d.px().to_string();
  j["py"] = d.py().to_string();
  return j;
}

Json normalization_json(const PointDivisor& d) {
  Json j;
  j["input_points"] = Json::array();
  for (const auto& p : d.input_points()) j["input_points"].push_back(p.to_string());
  j["order"] = Json::array();
  for (auto i : d.input_order()) j["order"].push_back(i);
  if (const auto& g = d.normalization())
    j["mobius"] = {to_string(g->p), to_string(g->q), to_string(g->r), to_string(g->s)};
  else
    j["mobius"] = nullptr;
  j["z"] = Json::array();
  for (const auto& z : d.z()) j["z"].push_back(to_string(z));
  return j;
}

Json lattice_point_json(const LatticePoint& p) {
  Json j;
  j["point"] = Json::array();
  for (const auto& c : p.point) j["point"].push_back(to_string(c));
  j["lines"] = p.incident_lines;
  j["barmult"] = p.barmult;
  return j;
}

MultiplicityVector mult_from_json(const Json& mult) {
  if (mult.is_string()) return MultiplicityVector::parse(mult.get<std::string>());
  return MultiplicityVector(mult.get<std::vector<int>>());
}

PointDivisor divisor_from_json(const Json& payload) {
  const Json& mult = payload.at("mult");
  if (payload.contains("z")) {
    std::vector<Rational> z;
    for (const auto& s : payload["z"]) z.push_back(parse_rational(s.get<std::string>()));
    return PointDivisor::from_normalized(mult_from_json(mult), std::move(z));
  }
  // Points pair positionally with multiplicities, which need not be sorted.
  std::vector<int> m;
  if (mult.is_string()) {
    const std::string text = mult.get<std::string>();
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      m.push_back(std::stoi(text.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } else {
    m = mult.get<std::vector<int>>();
  }
  std::vector<ProjPoint> points;
  for (const auto& s : payload.at("points")) points.push_back(ProjPoint::parse(s.get<std::string>()));
  return normalize(points, m);
}

LineArrangement arrangement_from_json(const Json& payload) {
  std::vector<ProjLine> lines;
  for (const auto& l : payload.at("lines"))
    lines.emplace_back(parse_rational(l[0].get<std::string>()), parse_rational(l[1].get<std::string>()),
                       parse_rational(l[2].get<std::string>()));
  return LineArrangement(std::move(lines));
}

}  // namespace divexp
