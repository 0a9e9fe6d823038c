#include "torivan/json_io.hpp"

#include <stdexcept>
#include <string>

namespace torivan {

namespace {

constexpr long long kSafeIntBound = (1ll << 53) - 1;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing JSON member '") + key + "'");
  return j.at(key);
}

std::vector<Int> int_vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

Json int_vector_to_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v <= kSafeIntBound && v >= -kSafeIntBound) return v.convert_to<long long>();
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      bad("string '" + j.get<std::string>() + "' is not a decimal integer");
    }
  }
  bad("expected an integer (number or decimal string)");
}

Json fan_to_json(const Fan& fan) {
  Json j;
  j["dim"] = fan.dim;
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(int_vector_to_json(r));
  j["rays"] = std::move(rays);
  Json cones = Json::array();
  for (const auto& c : fan.max_cones) cones.push_back(c.rays);
  j["max_cones"] = std::move(cones);
  if (!fan.labels.empty()) {
    Json labels = Json::object();
    for (const auto& [idx, name] : fan.labels) labels[std::to_string(idx)] = name;
    j["labels"] = std::move(labels);
  }
  return j;
}

Fan fan_from_json(const Json& j, FanValidation* verdict) {
  Fan fan;
  const Json& dim = member(j, "dim");
  if (!dim.is_number_integer()) bad("fan dim must be an integer");
  fan.dim = dim.get<int>();
  const Json& rays = member(j, "rays");
  if (!rays.is_array()) bad("fan rays must be an array");
  for (const auto& r : rays) fan.rays.push_back(int_vector_from_json(r, "a ray"));
  const Json& cones = member(j, "max_cones");
  if (!cones.is_array()) bad("fan max_cones must be an array");
  for (const auto& c : cones) {
    if (!c.is_array()) bad("a maximal cone must be an array of ray indices");
    Cone cone;
    for (const auto& e : c) {
      if (!e.is_number_integer()) bad("ray indices must be integers");
      cone.rays.push_back(e.get<int>());
    }
    fan.max_cones.push_back(std::move(cone));
  }
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_object()) bad("fan labels must be an object");
    for (const auto& [key, value] : labels.items()) {
      if (!value.is_string()) bad("ray labels must be strings");
      fan.labels[std::stoi(key)] = value.get<std::string>();
    }
  }

  const FanValidation v = validate_fan(fan);
  if (verdict) *verdict = v;
  if (!v.well_formed) bad("fan JSON is not well-formed: " + v.first_issue);
  fan.complete = v.complete && v.faces_ok;
  fan.smooth = v.smooth;
  return fan;
}

Json validation_to_json(const FanValidation& v) {
  Json j;
  j["well_formed"] = v.well_formed;
  j["rays_primitive"] = v.rays_primitive;
  j["simplicial"] = v.simplicial;
  j["smooth"] = v.smooth;
  j["cone_smooth"] = v.cone_smooth;
  j["faces_ok"] = v.faces_ok;
  j["complete"] = v.complete;
  j["first_issue"] = v.first_issue;
  j["ok"] = v.ok();
  return j;
}

Json divisor_to_json(const Fan& fan, const ToricDivisor& d) {
  Json coeffs = Json::object();
  for (const auto& [ray, c] : d.coeffs) coeffs[std::to_string(ray)] = int_to_json(c);
  Json j;
  j["fan"] = fan_to_json(fan);
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::pair<Fan, ToricDivisor> divisor_from_json(const Json& j) {
  const Json& fan_member = member(j, "fan");
  if (fan_member.is_string())
    bad("divisor 'fan' is a file reference; resolve it to an inline fan first");
  Fan fan = fan_from_json(fan_member);
  ToricDivisor d;
  const Json& coeffs = member(j, "coeffs");
  if (!coeffs.is_object()) bad("divisor coeffs must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    const int ray = std::stoi(key);
    if (ray < 0 || ray >= static_cast<int>(fan.rays.size()))
      bad("divisor coefficient for ray " + key + " outside the fan's ray table");
    d.set_coeff(ray, int_from_json(value));
  }
  return {std::move(fan), std::move(d)};
}

Json params_to_json(const BlowupParams& p) {
  Json j;
  j["n"] = p.n;
  j["points"] = p.points;
  j["a"] = int_vector_to_json(p.a);
  j["b"] = int_to_json(p.b);
  return j;
}

BlowupParams params_from_json(const Json& j) {
  BlowupParams p;
  const Json& n = member(j, "n");
  const Json& points = member(j, "points");
  if (!n.is_number_integer() || !points.is_number_integer())
    bad("params n and points must be integers");
  p.n = n.get<int>();
  p.points = points.get<int>();
  p.a = int_vector_from_json(member(j, "a"), "params a");
  p.b = int_from_json(member(j, "b"));
  validate_params(p);
  return p;
}

Json box_to_json(const SearchBox& box) {
  Json j;
  j["lo"] = int_vector_to_json(box.lo);
  j["hi"] = int_vector_to_json(box.hi);
  return j;
}

SearchBox box_from_json(const Json& j) {
  SearchBox box;
  box.lo = int_vector_from_json(member(j, "lo"), "box lo");
  box.hi = int_vector_from_json(member(j, "hi"), "box hi");
  if (box.lo.size() != box.hi.size()) bad("box lo/hi length mismatch");
  return box;
}

Json report_to_json(const Fan& fan, const CohomologyReport& report) {
  Json j;
  j["divisor"] = divisor_to_json(fan, report.divisor);
  j["box"] = box_to_json(report.box);
  j["dims"] = report.dims;
  Json contributions = Json::array();
  for (const Contribution& c : report.contributions) {
    Json row;
    row["m"] = int_vector_to_json(c.m);
    Json ranks = Json::object();
    for (std::size_t deg = 0; deg < c.ranks.size(); ++deg)
      if (c.ranks[deg] != 0) ranks[std::to_string(deg)] = c.ranks[deg];
    row["ranks"] = std::move(ranks);
    contributions.push_back(std::move(row));
  }
  j["contributions"] = std::move(contributions);
  return j;
}

std::pair<Fan, CohomologyReport> report_from_json(const Json& j) {
  auto [fan, divisor] = divisor_from_json(member(j, "divisor"));
  CohomologyReport report;
  report.divisor = std::move(divisor);
  report.box = box_from_json(member(j, "box"));
  const Json& dims = member(j, "dims");
  if (!dims.is_array()) bad("report dims must be an array");
  for (const auto& e : dims) {
    if (!e.is_number_integer()) bad("report dims must be integers");
    report.dims.push_back(e.get<long long>());
  }
  const Json& contributions = member(j, "contributions");
  if (!contributions.is_array()) bad("report contributions must be an array");
  for (const auto& row : contributions) {
    Contribution c;
    c.m = int_vector_from_json(member(row, "m"), "a contribution character");
    const Json& ranks = member(row, "ranks");
    if (!ranks.is_object()) bad("contribution ranks must be an object");
    int max_degree = -1;
    for (const auto& [key, value] : ranks.items()) max_degree = std::max(max_degree, std::stoi(key));
    c.ranks.assign(max_degree + 1, 0);
    for (const auto& [key, value] : ranks.items()) {
      if (!value.is_number_integer()) bad("contribution ranks must be integers");
      c.ranks[std::stoi(key)] = value.get<int>();
    }
    report.contributions.push_back(std::move(c));
  }
  return {std::move(fan), std::move(report)};
}

Json sweep_to_json(const std::vector<VanishingVerdict>& sweep) {
  Json j = Json::array();
  for (const VanishingVerdict& v : sweep) {
    Json row;
    row["params"] = params_to_json(v.params);
    row["predicate"] = v.predicate_says_vanishes;
    row["h1"] = v.oracle_h1;
    row["agree"] = v.agree;
    if (!v.error.empty()) row["error"] = v.error;
    j.push_back(std::move(row));
  }
  return j;
}

std::vector<VanishingVerdict> sweep_from_json(const Json& j) {
  if (!j.is_array()) bad("sweep JSON must be an array");
  std::vector<VanishingVerdict> out;
  out.reserve(j.size());
  for (const auto& row : j) {
    VanishingVerdict v;
    v.params = params_from_json(member(row, "params"));
    v.predicate_says_vanishes = member(row, "predicate").get<bool>();
    v.oracle_h1 = member(row, "h1").get<long long>();
    v.agree = member(row, "agree").get<bool>();
    if (row.contains("error")) v.error = row.at("error").get<std::string>();
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace torivan
