#include "divexp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "divexp/error.hpp"
#include "divexp/exponents.hpp"
#include "divexp/leading_term.hpp"
#include "divexp/matrix_m.hpp"
#include "divexp/schur.hpp"
#include "divexp/terao.hpp"

namespace divexp::cli {

namespace {

Json mult_json(const MultiplicityVector& m) {
  return Json(std::vector<int>(m.entries().begin(), m.entries().end()));
}

Json exponents_json(const std::vector<int>& v) { return Json(v); }

Json cmd_exponents(const Json& p) {
  const PointDivisor d = divisor_from_json(p);
  const ExponentPair ex = compute_exponents(d);
  const auto c = proportionality_constant(saito_determinant(ex.first, ex.second), defining_polynomial(d));
  Json j;
  j["e1"] = ex.e1;
  j["e2"] = ex.e2;
  j["mult"] = mult_json(d.mult());
  j["basis"] = {derivation_json(ex.first), derivation_json(ex.second)};
  j["saito_constant"] = to_string(*c);
  j["normalization"] = normalization_json(d);
  return j;
}

Json cmd_classify(const Json& p) {
  const MultiplicityVector m = mult_from_json(p.at("mult"));
  const Classification c = classify(m);
  Json j;
  j["mult"] = mult_json(m);
  j["tag"] = std::string(to_string(c.tag));
  if (c.predicted)
    j["predicted"] = {c.predicted->first, c.predicted->second};
  else
    j["predicted"] = nullptr;
  return j;
}

Json cmd_det(const Json& p) {
  const MultiplicityVector m = mult_from_json(p.at("mult"));
  const MultiPoly d = det_d(m);
  Json j;
  j["mult"] = mult_json(m);
  j["size"] = matrix_m_layout(m).size();
  j["d"] = d.to_string();
  j["terms"] = d.term_count();
  if (d.is_zero()) {
    j["leading_monomial"] = nullptr;
    j["leading_coefficient"] = nullptr;
  } else {
    const auto [mono, coeff] = d.leading_term();
    j["leading_monomial"] = exponents_json(mono);
    j["leading_coefficient"] = integer_json(coeff);
  }
  return j;
}

Json cmd_d1(const Json& p) {
  const MultiplicityVector m = mult_from_json(p.at("mult"));
  const MultiPoly d1 = reduce_d1(m);
  Json j;
  j["mult"] = mult_json(m);
  j["d1"] = d1.to_string();
  j["degree"] = d1.total_degree();
  j["forced_factor"] = forced_factor(m).to_string();
  return j;
}

Json cmd_degenerate(const Json& p) {
  const PointDivisor d = divisor_from_json(p);
  const auto witness = degeneracy_witness(d);
  Json j;
  j["mult"] = mult_json(d.mult());
  j["degenerate"] = witness.has_value();
  j["witness"] = witness ? derivation_json(*witness) : Json(nullptr);
  j["normalization"] = normalization_json(d);
  return j;
}

Json cmd_scan(const Json& p) {
  const MultiplicityVector m = mult_from_json(p.at("mult"));
  const int lo = p.value("grid_min", -3);
  const int hi = p.value("grid_max", 3);
  if (lo > hi) throw RequestError{"schema", "grid_min exceeds grid_max"};
  std::vector<Rational> grid;
  for (int v = lo; v <= hi; ++v) grid.emplace_back(v);
  const ScanReport r = degeneration_scan(m, grid);
  Json j;
  j["mult"] = mult_json(m);
  j["d1"] = r.d1.to_string();
  j["grid"] = {lo, hi};
  j["tuples_checked"] = r.tuples_checked;
  j["degenerate"] = Json::array();
  for (const auto& t : r.degenerate) {
    Json row = Json::array();
    for (const auto& v : t) row.push_back(to_string(v));
    j["degenerate"].push_back(std::move(row));
  }
  j["non_arrangement_zeros"] = r.non_arrangement_zeros.size();
  j["probes"] = Json::array();
  for (const auto& probe : r.probes) j["probes"].push_back({{"factor", probe.factor}, {"divides", probe.divisible}});
  return j;
}

Json cmd_sigma(const Json& p) {
  const int m_r = p.at("m_r").get<int>();
  const int u = p.at("u").get<int>();
  std::vector<int> sizes(static_cast<std::size_t>(u), 2);
  sizes.front() = 1;
  sizes.back() = 1;
  Json j;
  j["m_r"] = m_r;
  j["u"] = u;
  j["value"] = integer_json(sigma(m_r, u));
  j["closed_form"] = integer_json(sigma_closed_form(m_r, u));
  j["recursion"] = u >= 4 ? integer_json(sigma_recursion(m_r, u)) : Json(nullptr);
  j["partitions"] = Json::array();
  for (const auto& part : enumerate_admissible(1, u - 1, sizes))
    j["partitions"].push_back({{"blocks", part.to_string()}, {"sign", part.sign}});
  return j;
}

Json cmd_leading_check(const Json& p) {
  const MultiplicityVector m = mult_from_json(p.at("mult"));
  const LeadingCheck c = leading_coefficient_check(m);
  Json j;
  j["mult"] = mult_json(m);
  j["overlap"] = overlap(m).s;
  j["agree"] = c.agree;
  j["monomial"] = exponents_json(c.monomial);
  j["determinant_coefficient"] = integer_json(c.determinant_coefficient);
  j["predicted_coefficient"] = integer_json(c.predicted_coefficient);
  j["contributing_partitions"] = c.contributing_partitions;
  return j;
}

Json cmd_schur_check(const Json& p) {
  const MultiplicityVector m = mult_from_json(p.at("mult"));
  const SchurCheck c = schur_identity_check(m);
  Json j;
  j["mult"] = mult_json(m);
  j["match"] = c.match;
  j["sign"] = c.sign;
  j["lambda"] = {c.base, c.height};
  j["d1"] = c.d1.to_string();
  j["schur"] = c.schur.to_string();
  return j;
}

Json cmd_terao(const Json& p) {
  const LineArrangement a = arrangement_from_json(p);
  const TeraoStatus status = terao_status(a);
  Json j;
  j["lines"] = a.size();
  j["guaranteed"] = status.guaranteed;
  j["certificates"] = Json::array();
  for (const auto& c : status.certificates) {
    Json cj;
    cj["kind"] = c.kind;
    if (c.line) cj["line"] = *c.line;
    if (c.point) cj["point"] = lattice_point_json(*c.point);
    if (c.branch) cj["branch"] = std::string(to_string(*c.branch));
    j["certificates"].push_back(std::move(cj));
  }
  j["restrictions"] = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) j["restrictions"].push_back(restriction_multiplicities(a, i));
  j["lattice"] = Json::array();
  for (const auto& pt : intersection_lattice(a)) j["lattice"].push_back(lattice_point_json(pt));
  return j;
}

const std::map<std::string, std::function<Json(const Json&)>>& commands() {
  static const std::map<std::string, std::function<Json(const Json&)>> table{
      {"exponents", cmd_exponents},   {"classify", cmd_classify},
      {"det", cmd_det},               {"d1", cmd_d1},
      {"degenerate", cmd_degenerate}, {"scan", cmd_scan},
      {"sigma", cmd_sigma},           {"leading-check", cmd_leading_check},
      {"schur-check", cmd_schur_check}, {"terao", cmd_terao},
  };
  return table;
}

void check_schema(const Json& instance, const std::string& pointer) {
  const auto errors = cli_validator().validate(instance, pointer);
  if (errors.empty()) return;
  std::string msg;
  for (const auto& e : errors) msg += (msg.empty() ? "" : "; ") + e;
  throw RequestError{"schema", msg};
}

Json parse_json(std::istream& in, const std::string& what) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw RequestError{"parse", what + ": " + e.what()};
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw RequestError{"usage", "cannot open " + path};
  return parse_json(f, path);
}

Json split_list(const std::string& csv) {
  Json out = Json::array();
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(item);
  }
  return out;
}

struct Flags {
  std::string mult, points, z, divisor, arrangement;
  int m_r = 0, u = 0, grid_min = -3, grid_max = 3;
  bool json_in = false;
};

}  // namespace

Json execute(const std::string& subcommand, const Json& payload) {
  const auto it = commands().find(subcommand);
  if (it == commands().end()) throw RequestError{"usage", "unknown subcommand " + subcommand};
  check_schema(payload, "/requests/" + subcommand);
  return it->second(payload);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  auto emit_error = [&](const std::string& kind, const std::string& message, int code) {
    out << Json{{"error", kind}, {"message", message}}.dump(2) << '\n';
    return code;
  };

  CLI::App app{"Exponents of multi-arrangements of points on the projective line", "divexp"};
  app.require_subcommand(0, 1);
  Flags f;
  app.add_flag("--json-in", f.json_in, "Read {\"subcommand\", \"payload\"} from standard input");

  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_flag("--json-in", f.json_in, "Read the payload object from standard input");
    subs[name] = s;
    return s;
  };
  auto add_mult = [&](CLI::App* s) { s->add_option("--mult", f.mult, "Multiplicities, e.g. 3,3,1,1"); };
  auto add_divisor = [&](CLI::App* s) {
    add_mult(s);
    s->add_option("--points", f.points, "Points paired with --mult, e.g. inf,0,1,2");
    s->add_option("--z", f.z, "Normalized coordinates z3,...,zn");
    s->add_option("--divisor", f.divisor, "JSON file holding the payload");
  };
  add_divisor(sub("exponents", "Exponents with a certified Saito basis"));
  add_mult(sub("classify", "Case analysis of a multiplicity vector"));
  add_mult(sub("det", "The determinant d of the matrix M"));
  add_mult(sub("d1", "d with the forced factors removed"));
  add_divisor(sub("degenerate", "Whether det M vanishes at the given points"));
  CLI::App* scan = sub("scan", "Zeros of d1 on an integer grid");
  add_mult(scan);
  scan->add_option("--grid-min", f.grid_min, "Smallest grid value");
  scan->add_option("--grid-max", f.grid_max, "Largest grid value");
  CLI::App* sig = sub("sigma", "Signed sum over admissible partitions");
  sig->add_option("--mr", f.m_r, "Multiplicity m_r");
  sig->add_option("--u", f.u, "Number of blocks");
  add_mult(sub("leading-check", "Leading term of d against its Laplace development"));
  add_mult(sub("schur-check", "d1 against a rectangular Schur polynomial"));
  sub("terao", "Sufficient conditions for a line arrangement")
      ->add_option("--arrangement", f.arrangement, "JSON file {\"lines\": [[a,b,c], ...]}");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      throw RequestError{"usage", e.what()};
    }

    const auto chosen = app.get_subcommands();
    if (chosen.empty()) {
      if (!f.json_in) throw RequestError{"usage", "no subcommand given"};
      const Json envelope = parse_json(in, "stdin");
      check_schema(envelope, "/envelope");
      out << execute(envelope["subcommand"].get<std::string>(), envelope["payload"]).dump(2) << '\n';
      return kOk;
    }

    CLI::App* s = chosen.front();
    const std::string name = s->get_name();
    auto given = [&](const std::string& opt) { return s->get_option_no_throw(opt) && s->count(opt) > 0; };
    Json payload = Json::object();
    if (f.json_in) {
      payload = parse_json(in, "stdin");
    } else if (given("--divisor")) {
      payload = read_json_file(f.divisor);
    } else if (given("--arrangement")) {
      payload = read_json_file(f.arrangement);
    } else {
      if (given("--mult")) payload["mult"] = f.mult;
      if (given("--points")) payload["points"] = split_list(f.points);
      if (given("--z")) payload["z"] = split_list(f.z);
      if (given("--grid-min")) payload["grid_min"] = f.grid_min;
      if (given("--grid-max")) payload["grid_max"] = f.grid_max;
      if (given("--mr")) payload["m_r"] = f.m_r;
      if (given("--u")) payload["u"] = f.u;
    }
    out << execute(name, payload).dump(2) << '\n';
    return kOk;
  } catch (const RequestError& e) {
    return emit_error(e.kind, e.message, kRequestError);
  } catch (const Error& e) {
    return emit_error(std::string(to_string(e.code())), e.what(), kComputationError);
  }
}

}  // namespace divexp::cli
