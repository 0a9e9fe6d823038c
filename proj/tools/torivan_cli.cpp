/**
 * torivan — exact positivity and sheaf-cohomology computations for toric
 * divisors on blow-ups of projective space at torus-fixed points.
 *
 * Subcommands:
 *   fan         construct a blow-up fan (or validate one loaded from JSON)
 *   positivity  nef/ample verdicts with failing-wall witnesses
 *   coh         full cohomology report for one divisor
 *   verify      sweep a parameter grid, predicate vs. enumeration oracle
 *   bench       closed-form vs. enumeration pipeline timing
 *
 * Exit codes: 0 success, 1 computation or I/O error, 2 invalid flags or
 * parameters. Reports go to stdout (or --out); stderr carries diagnostics
 * only. --cache / TORIVAN_CACHE enables a content-addressed report cache
 * whose replays are byte-identical to recomputation.
 */

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "torivan/cohomology.hpp"
#include "torivan/divisor.hpp"
#include "torivan/fan.hpp"
#include "torivan/json_io.hpp"
#include "torivan/positivity.hpp"

namespace {

using namespace torivan;
using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// flag parsing helpers (failures here are exit-code-2 material)
// ---------------------------------------------------------------------------

[[noreturn]] void flag_error(const std::string& msg) { throw std::invalid_argument(msg); }

Int parse_int(const std::string& s, const char* what) {
  if (s.empty()) flag_error(std::string(what) + ": empty integer");
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size()) flag_error(std::string(what) + ": '" + s + "' is not an integer");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      flag_error(std::string(what) + ": '" + s + "' is not an integer");
  return Int(s);
}

std::vector<Int> parse_int_list(const std::string& s, const char* what) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(parse_int(item, what));
  if (out.empty()) flag_error(std::string(what) + ": expected a comma-separated integer list");
  return out;
}

/** "lo..hi", both inclusive. */
std::pair<Int, Int> parse_range(const std::string& s, const char* what) {
  const auto pos = s.find("..");
  if (pos == std::string::npos)
    flag_error(std::string(what) + ": '" + s + "' is not of the form lo..hi");
  Int lo = parse_int(s.substr(0, pos), what);
  Int hi = parse_int(s.substr(pos + 2), what);
  if (lo > hi) flag_error(std::string(what) + ": empty range " + s);
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// output plumbing
// ---------------------------------------------------------------------------

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << payload;
  if (!f) throw std::runtime_error("failed writing output file: " + out_path);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  return q + "\"";
}

std::string join_ints(const std::vector<Int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

std::string seconds_str(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(6) << s;
  return o.str();
}

// ---------------------------------------------------------------------------
// report cache: content-addressed by (fan JSON, divisor coefficients, margin)
// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(const Fan& fan, const ToricDivisor& d, int margin) {
  Json doc;
  doc["fan"] = fan_to_json(fan);
  doc["coeffs"] = divisor_to_json(fan, d)["coeffs"];
  doc["margin"] = margin;
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(doc.dump());
  return hex.str();
}

std::string effective_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("TORIVAN_CACHE");
  return env ? std::string(env) : std::string();
}

std::optional<std::string> cache_load(const std::string& dir, const std::string& key) {
  std::ifstream f(std::filesystem::path(dir) / (key + ".json"), std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream buf;
  buf << f.rdbuf();
  if (!f && !f.eof()) return std::nullopt;
  return buf.str();
}

void cache_store(const std::string& dir, const std::string& key, const std::string& bytes) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / (key + ".json");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write cache file: " + path.string());
  f << bytes;
}

/**
 * Canonical report bytes for a divisor, served from the cache when possible.
 * `cache_hit` reports whether the bytes came from a stored file.
 */
std::string report_bytes(const Fan& fan, const ToricDivisor& d, const CohomologyOptions& opts,
                         const std::string& cache_dir, bool* cache_hit) {
  if (cache_hit) *cache_hit = false;
  std::string key;
  if (!cache_dir.empty()) {
    key = cache_key(fan, d, opts.margin);
    if (auto stored = cache_load(cache_dir, key)) {
      if (cache_hit) *cache_hit = true;
      return *stored;
    }
  }
  CohomologyReport report = total_cohomology(fan, d, opts);
  std::string bytes = render_json(report_to_json(fan, report));
  if (!cache_dir.empty()) cache_store(cache_dir, key, bytes);
  return bytes;
}

// ---------------------------------------------------------------------------
// fan subcommand
// ---------------------------------------------------------------------------

struct FanArgs {
  int n = 3;
  int points = 1;
  std::string in_path;
  std::string format = "json";
  std::string out_path;
};

std::string fan_text(const Fan& fan) {
  std::ostringstream o;
  o << "dim: " << fan.dim << "\n";
  o << "rays: " << fan.rays.size() << "\n";
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    o << "  " << r;
    auto it = fan.labels.find(static_cast<int>(r));
    if (it != fan.labels.end()) o << " (" << it->second << ")";
    o << ": (";
    for (std::size_t c = 0; c < fan.rays[r].size(); ++c)
      o << fan.rays[r][c] << (c + 1 < fan.rays[r].size() ? "," : "");
    o << ")\n";
  }
  o << "maximal cones: " << fan.max_cones.size() << "\n";
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    o << "  " << c << ": {";
    for (std::size_t i = 0; i < fan.max_cones[c].rays.size(); ++i)
      o << fan.max_cones[c].rays[i] << (i + 1 < fan.max_cones[c].rays.size() ? " " : "");
    o << "}\n";
  }
  o << "walls: " << walls(fan).size() << "\n";
  return o.str();
}

int cmd_fan(const FanArgs& a) {
  if (a.format != "json" && a.format != "text")
    flag_error("fan: --format must be json or text");
  if (a.in_path.empty()) {
    if (a.n < 3) flag_error("fan: --n must be at least 3");
    if (a.points < 0 || a.points > a.n + 1) flag_error("fan: --points must lie in 0..n+1");
  }
  if (!a.in_path.empty()) {
    std::ifstream f(a.in_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open fan file: " + a.in_path);
    Json doc = Json::parse(f);
    FanValidation verdict;
    Fan fan = fan_from_json(doc, &verdict);
    if (a.format == "text") {
      std::ostringstream o;
      o << fan_text(fan) << "validation: " << (verdict.ok() ? "ok" : "FAILED") << "\n";
      if (!verdict.ok()) o << "  first issue: " << verdict.first_issue << "\n";
      emit(o.str(), a.out_path);
    } else {
      Json out;
      out["fan"] = fan_to_json(fan);
      out["validation"] = validation_to_json(verdict);
      emit(render_json(out), a.out_path);
    }
    return 0;
  }
  Fan fan = a.points == 0 ? make_projective_fan(a.n) : make_blowup_fan(a.n, a.points);
  emit(a.format == "text" ? fan_text(fan) : render_json(fan_to_json(fan)), a.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// positivity subcommand
// ---------------------------------------------------------------------------

struct PositivityArgs {
  int n = 3;
  int points = 1;
  std::string a_list;
  std::string b_value;
  bool closed_form = false;
  std::string format = "json";
  std::string out_path;
};

Json witness_to_json(const WallWitness& w) {
  Json j;
  j["wall"] = Json{{"left", w.wall.left}, {"right", w.wall.right}};
  Json shared = Json::array();
  for (int r : w.wall.shared_rays) shared.push_back(r);
  j["wall"]["shared_rays"] = shared;
  j["check_ray"] = w.check_ray;
  j["value"] = int_to_json(w.lhs);       // support value at the check ray
  j["extension"] = int_to_json(w.rhs);   // adjacent cone's linear form there
  return j;
}

int cmd_positivity(const PositivityArgs& args) {
  if (args.format != "json" && args.format != "csv" && args.format != "text")
    flag_error("positivity: --format must be json, csv or text");
  if (args.closed_form && args.points != 1)
    flag_error("positivity: --closed-form applies to the one-point family only");
  BlowupParams p;
  p.n = args.n;
  p.points = args.points;
  p.a = parse_int_list(args.a_list, "--a");
  p.b = parse_int(args.b_value, "--b");
  validate_params(p);

  Fan fan = make_blowup_fan(p.n, p.points);
  ToricDivisor d = divisor_from_params(fan, p);
  PositivityVerdict nef_v = is_nef(fan, d);
  PositivityVerdict amp_v = is_ample(fan, d);
  const std::optional<WallWitness>& witness = !nef_v.nef ? nef_v.witness : amp_v.witness;

  bool cf_nef = false, cf_ample = false, agree = false;
  if (args.closed_form) {
    auto cf = onept_positivity_closed_form(p.a[0], p.b);
    cf_nef = cf.first;
    cf_ample = cf.second;
    agree = cf_nef == nef_v.nef && cf_ample == amp_v.ample;
  }

  std::string payload;
  if (args.format == "json") {
    Json out;
    out["params"] = params_to_json(p);
    out["nef"] = nef_v.nef;
    out["ample"] = amp_v.ample;
    out["witness"] = witness ? witness_to_json(*witness) : Json(nullptr);
    if (args.closed_form)
      out["closed_form"] = Json{{"nef", cf_nef}, {"ample", cf_ample}, {"agree", agree}};
    payload = render_json(out);
  } else if (args.format == "csv") {
    std::ostringstream o;
    o << "n,points,a,b,nef,ample";
    if (args.closed_form) o << ",closed_nef,closed_ample,agree";
    o << "\n" << p.n << "," << p.points << "," << csv_field(join_ints(p.a, ";")) << ","
      << p.b.str() << "," << nef_v.nef << "," << amp_v.ample;
    if (args.closed_form) o << "," << cf_nef << "," << cf_ample << "," << agree;
    o << "\n";
    payload = o.str();
  } else {
    std::ostringstream o;
    o << "params: n=" << p.n << " points=" << p.points << " a=" << join_ints(p.a, ",")
      << " b=" << p.b.str() << "\n";
    o << "nef: " << (nef_v.nef ? "yes" : "no") << "\n";
    o << "ample: " << (amp_v.ample ? "yes" : "no") << "\n";
    if (witness)
      o << "witness: wall " << witness->wall.left << "|" << witness->wall.right << " ray "
        << witness->check_ray << " value " << witness->lhs.str() << " extension "
        << witness->rhs.str() << "\n";
    if (args.closed_form)
      o << "closed-form: nef=" << (cf_nef ? "yes" : "no")
        << " ample=" << (cf_ample ? "yes" : "no") << " agree=" << (agree ? "yes" : "no")
        << "\n";
    payload = o.str();
  }
  emit(payload, args.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// coh subcommand
// ---------------------------------------------------------------------------

struct CohArgs {
  int n = 3;
  int points = 1;
  std::string a_list;
  std::string b_value;
  std::string divisor_path;
  int margin = 1;
  long long cap = 10'000'000;
  int jobs = 1;  // accepted for interface uniformity; single reports run serially
  std::string cache_dir_flag;
  std::string format = "json";
  std::string out_path;
  bool params_given = false;
};

std::string coh_csv(const CohomologyReport& r) {
  std::ostringstream o;
  o << "degree,dim\n";
  for (std::size_t i = 0; i < r.dims.size(); ++i) o << i << "," << r.dims[i] << "\n";
  return o.str();
}

std::string coh_text(const Fan& fan, const CohomologyReport& r) {
  std::ostringstream o;
  o << "divisor (normal form): ";
  if (r.divisor.coeffs.empty()) o << "0";
  for (const auto& [ray, c] : r.divisor.coeffs) {
    o << c.str() << "*D[" << ray;
    auto it = fan.labels.find(ray);
    if (it != fan.labels.end()) o << "=" << it->second;
    o << "] ";
  }
  o << "\nbox:";
  for (std::size_t c = 0; c < r.box.lo.size(); ++c)
    o << " [" << r.box.lo[c].str() << ".." << r.box.hi[c].str() << "]";
  o << " (" << r.box.volume().str() << " characters)\n";
  o << "dims:";
  for (std::size_t i = 0; i < r.dims.size(); ++i) o << " h^" << i << "=" << r.dims[i];
  o << "\ncontributions: " << r.contributions.size() << "\n";
  for (const auto& c : r.contributions) {
    o << "  m=(";
    for (std::size_t i = 0; i < c.m.size(); ++i)
      o << c.m[i].str() << (i + 1 < c.m.size() ? "," : "");
    o << "):";
    for (std::size_t j = 0; j < c.ranks.size(); ++j)
      if (c.ranks[j] != 0) o << " degree " << j << " rank " << c.ranks[j];
    o << "\n";
  }
  return o.str();
}

int cmd_coh(const CohArgs& args) {
  if (args.format != "json" && args.format != "csv" && args.format != "text")
    flag_error("coh: --format must be json, csv or text");
  if (!args.divisor_path.empty() && args.params_given)
    flag_error("coh: --divisor excludes --n/--points/--a/--b");
  if (args.divisor_path.empty() && (args.a_list.empty() || args.b_value.empty()))
    flag_error("coh: need either --divisor or --a and --b");
  if (args.margin < 0) flag_error("coh: --margin must be nonnegative");
  if (args.cap <= 0) flag_error("coh: --cap must be positive");

  Fan fan;
  ToricDivisor d;
  if (!args.divisor_path.empty()) {
    std::ifstream f(args.divisor_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open divisor file: " + args.divisor_path);
    std::tie(fan, d) = divisor_from_json(Json::parse(f));
  } else {
    BlowupParams p;
    p.n = args.n;
    p.points = args.points;
    p.a = parse_int_list(args.a_list, "--a");
    p.b = parse_int(args.b_value, "--b");
    validate_params(p);
    fan = make_blowup_fan(p.n, p.points);
    d = divisor_from_params(fan, p);
  }

  CohomologyOptions opts;
  opts.margin = args.margin;
  opts.cap = args.cap;
  const std::string cache_dir = effective_cache_dir(args.cache_dir_flag);
  std::string bytes = report_bytes(fan, d, opts, cache_dir, nullptr);
  if (args.format == "json") {
    emit(bytes, args.out_path);
  } else {
    auto [echo_fan, report] = report_from_json(Json::parse(bytes));
    emit(args.format == "csv" ? coh_csv(report) : coh_text(echo_fan, report), args.out_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify subcommand
// ---------------------------------------------------------------------------

struct VerifyArgs {
  int n = 3;
  int points = 1;
  std::string a_range;
  std::string b_range;
  int jobs = 1;
  bool strict = false;
  int margin = 1;
  long long cap = 10'000'000;
  std::string format = "json";
  std::string out_path;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.format != "json" && args.format != "csv" && args.format != "text")
    flag_error("verify: --format must be json, csv or text");
  if (args.a_range.empty() || args.b_range.empty())
    flag_error("verify: --a-range and --b-range are required");
  if (args.jobs < 1) flag_error("verify: --jobs must be at least 1");
  SweepGrid grid;
  grid.n = args.n;
  grid.points = args.points;
  std::tie(grid.a_lo, grid.a_hi) = parse_range(args.a_range, "--a-range");
  std::tie(grid.b_lo, grid.b_hi) = parse_range(args.b_range, "--b-range");
  grid.jobs = args.jobs;
  grid.options.margin = args.margin;
  grid.options.cap = args.cap;

  std::vector<VanishingVerdict> rows = verify_sweep(grid);
  long long agree = 0, disagree = 0, errors = 0;
  for (const auto& r : rows) {
    if (!r.error.empty()) ++errors;
    else if (r.agree) ++agree;
    else ++disagree;
  }

  std::string payload;
  if (args.format == "json") {
    Json out;
    out["grid"] = Json{{"n", grid.n},           {"points", grid.points},
                       {"a_lo", int_to_json(grid.a_lo)}, {"a_hi", int_to_json(grid.a_hi)},
                       {"b_lo", int_to_json(grid.b_lo)}, {"b_hi", int_to_json(grid.b_hi)}};
    out["summary"] = Json{{"total", static_cast<long long>(rows.size())},
                          {"agree", agree},
                          {"disagree", disagree},
                          {"errors", errors}};
    out["rows"] = sweep_to_json(rows);
    payload = render_json(out);
  } else if (args.format == "csv") {
    std::ostringstream o;
    o << "n,points,a,b,predicate,h1,agree,error\n";
    for (const auto& r : rows)
      o << r.params.n << "," << r.params.points << ","
        << csv_field(join_ints(r.params.a, ";")) << "," << r.params.b.str() << ","
        << r.predicate_says_vanishes << "," << r.oracle_h1 << "," << r.agree << ","
        << csv_field(r.error) << "\n";
    payload = o.str();
  } else {
    std::ostringstream o;
    o << "grid: n=" << grid.n << " points=" << grid.points << " a in ["
      << grid.a_lo.str() << "," << grid.a_hi.str() << "] b in [" << grid.b_lo.str() << ","
      << grid.b_hi.str() << "]\n";
    o << "summary: total=" << rows.size() << " agree=" << agree << " disagree=" << disagree
      << " errors=" << errors << "\n";
    for (const auto& r : rows) {
      if (r.agree || !r.error.empty()) continue;
      o << "  disagree: a=" << join_ints(r.params.a, ",") << " b=" << r.params.b.str()
        << " predicate=" << (r.predicate_says_vanishes ? "vanishes" : "nonzero")
        << " oracle h1=" << r.oracle_h1 << "\n";
    }
    for (const auto& r : rows)
      if (!r.error.empty())
        o << "  error: a=" << join_ints(r.params.a, ",") << " b=" << r.params.b.str() << " "
          << r.error << "\n";
    payload = o.str();
  }
  emit(payload, args.out_path);
  if (args.strict && (disagree > 0 || errors > 0)) {
    std::cerr << "torivan: verify --strict: " << disagree << " disagreement(s), " << errors
              << " error(s)\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench subcommand
// ---------------------------------------------------------------------------

struct BenchArgs {
  int n = 3;
  int points = 1;
  std::string a_range = "-3..3";
  std::string b_range = "-3..3";
  std::string a_single;
  std::string b_single;
  int margin = 1;
  long long cap = 10'000'000;
  std::string cache_dir_flag;
  std::string format = "json";
  std::string out_path;
};

struct BenchRow {
  std::string scenario;
  long long cases = 0;
  long long h1_closed = 0;
  long long h1_enumerated = 0;
  bool identical = true;
  Int characters_enumerated = 0;  // characters visited; cache hits add none
  double seconds_closed = 0;
  double seconds_enumerated = 0;
  bool cache_hit = false;  // every enumeration case served from the cache
};

long long closed_form_h1(int n, const Int& a, const Int& b) {
  std::vector<Int> lambda(static_cast<std::size_t>(n) + 2, Int(0));
  lambda[1] = b;
  lambda[static_cast<std::size_t>(n) + 1] = b - a;
  return h1_closed_form_onept(n, lambda);
}

BenchRow bench_cases(const std::string& scenario, int n,
                     const std::vector<std::pair<Int, Int>>& cases,
                     const CohomologyOptions& opts, const std::string& cache_dir) {
  BenchRow row;
  row.scenario = scenario;
  row.cases = static_cast<long long>(cases.size());

  auto t0 = Clock::now();
  std::vector<long long> closed;
  closed.reserve(cases.size());
  for (const auto& [a, b] : cases) closed.push_back(closed_form_h1(n, a, b));
  row.seconds_closed = std::chrono::duration<double>(Clock::now() - t0).count();
  for (long long h : closed) row.h1_closed += h;

  Fan fan = make_blowup_fan(n, 1);
  bool all_hits = true;
  t0 = Clock::now();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    BlowupParams p;
    p.n = n;
    p.a = {cases[i].first};
    p.b = cases[i].second;
    ToricDivisor d = divisor_from_params(fan, p);
    bool hit = false;
    std::string bytes = report_bytes(fan, d, opts, cache_dir, &hit);
    auto [echo_fan, report] = report_from_json(Json::parse(bytes));
    (void)echo_fan;
    if (!hit) row.characters_enumerated += report.box.volume();
    all_hits = all_hits && hit;
    const long long h1 = report.dims.size() > 1 ? report.dims[1] : 0;
    row.h1_enumerated += h1;
    if (h1 != closed[i]) row.identical = false;
  }
  row.seconds_enumerated = std::chrono::duration<double>(Clock::now() - t0).count();
  row.cache_hit = !cache_dir.empty() && all_hits;
  return row;
}

int cmd_bench(const BenchArgs& args) {
  if (args.format != "json" && args.format != "csv" && args.format != "text")
    flag_error("bench: --format must be json, csv or text");
  if (args.points != 1)
    flag_error("bench: the closed-form pipeline covers the one-point family; --points must be 1");
  if ((args.a_single.empty()) != (args.b_single.empty()))
    flag_error("bench: --a and --b must be given together");
  CohomologyOptions opts;
  opts.margin = args.margin;
  opts.cap = args.cap;
  const std::string cache_dir = effective_cache_dir(args.cache_dir_flag);

  std::vector<BenchRow> rows;
  {
    auto [a_lo, a_hi] = parse_range(args.a_range, "--a-range");
    auto [b_lo, b_hi] = parse_range(args.b_range, "--b-range");
    std::vector<std::pair<Int, Int>> cases;
    for (Int a = a_lo; a <= a_hi; ++a)
      for (Int b = b_lo; b <= b_hi; ++b) cases.emplace_back(a, b);
    rows.push_back(bench_cases("grid a=" + args.a_range + " b=" + args.b_range, args.n, cases,
                               opts, cache_dir));
  }
  if (!args.a_single.empty()) {
    Int a = parse_int(args.a_single, "--a");
    Int b = parse_int(args.b_single, "--b");
    rows.push_back(bench_cases("single a=" + a.str() + " b=" + b.str(), args.n, {{a, b}},
                               opts, cache_dir));
  }

  std::string payload;
  if (args.format == "json") {
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back(Json{{"scenario", r.scenario},
                         {"cases", r.cases},
                         {"h1_closed", r.h1_closed},
                         {"h1_enumerated", r.h1_enumerated},
                         {"identical", r.identical},
                         {"characters_closed", 0},
                         {"characters_enumerated", int_to_json(r.characters_enumerated)},
                         {"seconds_closed", r.seconds_closed},
                         {"seconds_enumerated", r.seconds_enumerated},
                         {"cache_hit", r.cache_hit}});
    payload = render_json(out);
  } else if (args.format == "csv") {
    std::ostringstream o;
    o << "scenario,cases,h1_closed,h1_enumerated,identical,characters_closed,"
         "characters_enumerated,seconds_closed,seconds_enumerated,cache_hit\n";
    for (const auto& r : rows)
      o << csv_field(r.scenario) << "," << r.cases << "," << r.h1_closed << ","
        << r.h1_enumerated << "," << r.identical << ",0," << r.characters_enumerated.str()
        << "," << seconds_str(r.seconds_closed) << "," << seconds_str(r.seconds_enumerated)
        << "," << r.cache_hit << "\n";
    payload = o.str();
  } else {
    std::ostringstream o;
    for (const auto& r : rows) {
      o << r.scenario << ": cases=" << r.cases << " h1_closed=" << r.h1_closed
        << " h1_enumerated=" << r.h1_enumerated
        << " identical=" << (r.identical ? "yes" : "no")
        << " characters_closed=0 characters_enumerated=" << r.characters_enumerated.str()
        << " seconds_closed=" << seconds_str(r.seconds_closed)
        << " seconds_enumerated=" << seconds_str(r.seconds_enumerated)
        << " cache_hit=" << (r.cache_hit ? "yes" : "no") << "\n";
    }
    payload = o.str();
  }
  emit(payload, args.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact positivity and sheaf-cohomology computations for toric divisors on "
      "blow-ups of projective space at torus-fixed points"};
  app.require_subcommand(1);

  FanArgs fan_args;
  auto* fan_cmd = app.add_subcommand("fan", "Construct or validate a fan");
  fan_cmd->add_option("--n", fan_args.n, "ambient dimension (>= 3)");
  fan_cmd->add_option("--points", fan_args.points,
                      "number of blown-up fixed points (0 for plain projective space)");
  fan_cmd->add_option("--in", fan_args.in_path, "validate a fan loaded from this JSON file");
  fan_cmd->add_option("--format", fan_args.format, "json or text");
  fan_cmd->add_option("--out", fan_args.out_path, "write the report here instead of stdout");

  PositivityArgs pos_args;
  auto* pos_cmd = app.add_subcommand("positivity", "Nef/ample verdicts for a family divisor");
  pos_cmd->add_option("--n", pos_args.n, "ambient dimension (>= 3)");
  pos_cmd->add_option("--points", pos_args.points, "number of blown-up fixed points");
  pos_cmd->add_option("--a", pos_args.a_list, "comma-separated a_i list, one per point");
  pos_cmd->add_option("--b", pos_args.b_value, "hyperplane coefficient b");
  pos_cmd->add_flag("--closed-form", pos_args.closed_form,
                    "also evaluate the one-point closed form and an agreement flag");
  pos_cmd->add_option("--format", pos_args.format, "json, csv or text");
  pos_cmd->add_option("--out", pos_args.out_path, "write the report here instead of stdout");

  CohArgs coh_args;
  auto* coh_cmd = app.add_subcommand("coh", "Cohomology report for one divisor");
  auto* coh_n = coh_cmd->add_option("--n", coh_args.n, "ambient dimension (>= 3)");
  auto* coh_p =
      coh_cmd->add_option("--points", coh_args.points, "number of blown-up fixed points");
  auto* coh_a =
      coh_cmd->add_option("--a", coh_args.a_list, "comma-separated a_i list, one per point");
  auto* coh_b = coh_cmd->add_option("--b", coh_args.b_value, "hyperplane coefficient b");
  coh_cmd->add_option("--divisor", coh_args.divisor_path,
                      "JSON file with an inline fan and ray-indexed coefficients");
  coh_cmd->add_option("--margin", coh_args.margin, "extra search-box margin (default 1)");
  coh_cmd->add_option("--cap", coh_args.cap, "abort beyond this many characters");
  coh_cmd->add_option("--jobs", coh_args.jobs, "parallelism hint (single reports run serially)");
  coh_cmd->add_option("--cache", coh_args.cache_dir_flag,
                      "report cache directory (default $TORIVAN_CACHE)");
  coh_cmd->add_option("--format", coh_args.format, "json, csv or text");
  coh_cmd->add_option("--out", coh_args.out_path, "write the report here instead of stdout");

  VerifyArgs ver_args;
  auto* ver_cmd =
      app.add_subcommand("verify", "Sweep a grid: vanishing predicate vs. enumeration oracle");
  ver_cmd->add_option("--n", ver_args.n, "ambient dimension (>= 3)");
  ver_cmd->add_option("--points", ver_args.points, "number of blown-up fixed points");
  ver_cmd->add_option("--a-range", ver_args.a_range, "inclusive a_i range, lo..hi");
  ver_cmd->add_option("--b-range", ver_args.b_range, "inclusive b range, lo..hi");
  ver_cmd->add_option("--jobs", ver_args.jobs, "worker count");
  ver_cmd->add_flag("--strict", ver_args.strict,
                    "exit 1 when any tuple disagrees or errors (default: agreement is data)");
  ver_cmd->add_option("--margin", ver_args.margin, "extra search-box margin (default 1)");
  ver_cmd->add_option("--cap", ver_args.cap, "per-tuple character cap");
  ver_cmd->add_option("--format", ver_args.format, "json, csv or text");
  ver_cmd->add_option("--out", ver_args.out_path, "write the report here instead of stdout");

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "Time the closed-form pipeline against enumeration");
  bench_cmd->add_option("--n", bench_args.n, "ambient dimension (>= 3)");
  bench_cmd->add_option("--points", bench_args.points, "must be 1 (closed-form family)");
  bench_cmd->add_option("--a-range", bench_args.a_range, "grid a range (default -3..3)");
  bench_cmd->add_option("--b-range", bench_args.b_range, "grid b range (default -3..3)");
  bench_cmd->add_option("--a", bench_args.a_single, "extra single-case a");
  bench_cmd->add_option("--b", bench_args.b_single, "extra single-case b");
  bench_cmd->add_option("--margin", bench_args.margin, "extra search-box margin (default 1)");
  bench_cmd->add_option("--cap", bench_args.cap, "per-case character cap");
  bench_cmd->add_option("--cache", bench_args.cache_dir_flag,
                        "report cache directory (default $TORIVAN_CACHE)");
  bench_cmd->add_option("--format", bench_args.format, "json, csv or text");
  bench_cmd->add_option("--out", bench_args.out_path, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the parser's message to stderr
    return 2;
  }

  try {
    if (fan_cmd->parsed()) return cmd_fan(fan_args);
    if (pos_cmd->parsed()) return cmd_positivity(pos_args);
    if (coh_cmd->parsed()) {
      coh_args.params_given =
          coh_n->count() > 0 || coh_p->count() > 0 || coh_a->count() > 0 || coh_b->count() > 0;
      return cmd_coh(coh_args);
    }
    if (ver_cmd->parsed()) return cmd_verify(ver_args);
    if (bench_cmd->parsed()) return cmd_bench(bench_args);
    std::cerr << "torivan: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "torivan: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "torivan: " << e.what() << "\n";
    return 1;
  }
}
