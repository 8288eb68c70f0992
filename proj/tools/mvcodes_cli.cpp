// Copyright 2026 The mvcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// mvcodes command-line tool. Talks to the library only through mvcodes.h.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvcodes/mvcodes.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Raised for bad input; carries the exit code.
struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

int exit_code_for(mvc_status s) {
  switch (s) {
    case MVC_OK: return kExitOk;
    case MVC_ERR_NEVER_DECODABLE:
    case MVC_ERR_SINGULAR_SYSTEM:
    case MVC_ERR_DEGREE_MISMATCH:
    case MVC_ERR_MISSING_BLOCK:
    case MVC_ERR_MISSING_EVALUATION:
    case MVC_ERR_INTERNAL:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

void check(mvc_status s) {
  if (s != MVC_OK) {
    throw CliError(exit_code_for(s),
                   std::string(mvc_status_name(s)) + ": " + mvc_last_error());
  }
}

struct FieldDel { void operator()(mvc_field* p) const { mvc_field_destroy(p); } };
struct MatrixDel { void operator()(mvc_matrix* p) const { mvc_matrix_destroy(p); } };
struct ChainDel { void operator()(mvc_chain* p) const { mvc_chain_destroy(p); } };
struct PlanDel { void operator()(mvc_plan* p) const { mvc_plan_destroy(p); } };
struct StrDel { void operator()(char* p) const { mvc_string_free(p); } };
using FieldPtr = std::unique_ptr<mvc_field, FieldDel>;
using MatrixPtr = std::unique_ptr<mvc_matrix, MatrixDel>;
using ChainPtr = std::unique_ptr<mvc_chain, ChainDel>;
using PlanPtr = std::unique_ptr<mvc_plan, PlanDel>;
using StrPtr = std::unique_ptr<char, StrDel>;

std::string take(char* s) {
  StrPtr guard(s);
  return s == nullptr ? std::string() : std::string(s);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CliError(kExitUsage, what + ": not a non-negative integer: '" + s + "'");
  }
}

// "a,b,c", "a..b" or a mix such as "2..5,10".
std::vector<std::uint64_t> parse_uint_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(text, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_uint(item, what));
      continue;
    }
    auto lo = parse_uint(trim(item.substr(0, dots)), what);
    auto hi = parse_uint(trim(item.substr(dots + 2)), what);
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw CliError(kExitUsage, what + ": empty range '" + text + "'");
  return out;
}

std::vector<std::size_t> to_sizes(const std::vector<std::uint64_t>& v) {
  return std::vector<std::size_t>(v.begin(), v.end());
}

std::string output_dir() {
  const char* env = std::getenv("MVCODES_OUTPUT_DIR");
  return env != nullptr ? std::string(env) : std::string();
}

// Writes to `path`, or to $MVCODES_OUTPUT_DIR/default_name, or to stdout.
void emit(const std::string& text, const std::string& path, const std::string& default_name) {
  std::string target = path;
  if (target.empty() && !default_name.empty() && !output_dir().empty()) {
    target = (std::filesystem::path(output_dir()) / default_name).string();
  }
  if (target.empty() || target == "-") {
    std::cout << text;
    return;
  }
  auto parent = std::filesystem::path(target).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw CliError(kExitUsage, "cannot write " + target);
  out << text;
  if (!out.flush()) throw CliError(kExitUsage, "write failed: " + target);
}

// key=value lines, '#' comments, optional [section] headers ignored.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kExitUsage, "cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CliError(kExitUsage, path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    std::replace(key.begin(), key.end(), '_', '-');
    out[key] = value;
  }
  return out;
}

// Fills options that were not given on the command line from the config.
void apply_config(CLI::App* sub, const std::map<std::string, std::string>& config) {
  std::map<std::string, std::string> unused = config;
  for (CLI::Option* opt : sub->get_options()) {
    const std::string& name = opt->get_single_name();
    auto it = config.find(name);
    if (it == config.end()) continue;
    unused.erase(name);
    if (opt->count() > 0) continue;
    if (opt->get_expected_max() == 0) {
      auto v = lower(it->second);
      if (v == "true" || v == "1" || v == "yes" || v == "on") opt->add_result(std::string("true"));
      else if (v == "false" || v == "0" || v == "no" || v == "off") continue;
      else throw CliError(kExitUsage, "config: bad boolean for " + name);
    } else {
      opt->add_result(it->second);
    }
    try {
      opt->run_callback();
    } catch (const CLI::ParseError& e) {
      throw CliError(kExitUsage, "config: " + name + ": " + e.what());
    }
  }
  unused.erase("config");
  if (!unused.empty()) {
    throw CliError(kExitUsage, "config: unknown key '" + unused.begin()->first + "' for " +
                                   sub->get_name());
  }
}

mvc_scheme parse_scheme(const std::string& s) {
  auto t = lower(s);
  if (t == "mv1") return MVC_SCHEME_MV1;
  if (t == "mv2") return MVC_SCHEME_MV2;
  if (t == "uv") return MVC_SCHEME_UV;
  throw CliError(kExitUsage, "unknown scheme '" + s + "' (expected mv1, mv2 or uv)");
}

mvc_memory parse_memory(const std::string& s) {
  auto t = lower(s);
  if (t == "shared") return MVC_MEMORY_SHARED;
  if (t == "dedicated") return MVC_MEMORY_DEDICATED;
  throw CliError(kExitUsage, "unknown memory mode '" + s + "' (expected shared or dedicated)");
}

// Options shared by the commands that build a chain.
struct ChainOptions {
  std::string parts;
  std::string dims;
  std::size_t block_side = 2;
  std::uint64_t modulus = 0;
  std::uint64_t seed = 1;
  std::string matrices;

  void add_to(CLI::App* app, bool with_matrices) {
    app->add_option("--parts", parts, "Split counts p_0,...,p_m")->required();
    app->add_option("--dims", dims, "Dimensions r_0,...,r_m (default block-side * p_i)");
    app->add_option("--block-side", block_side, "Block side when --dims is absent")
        ->capture_default_str();
    app->add_option("--modulus", modulus, "Prime field modulus (0: 2^31-1)")
        ->capture_default_str();
    app->add_option("--seed", seed, "Seed for the random chain and evaluation points")
        ->capture_default_str();
    if (with_matrices) {
      app->add_option("--matrices", matrices,
                      "Comma-separated matrix files used instead of a random chain");
    }
  }

  std::vector<std::size_t> part_list() const { return to_sizes(parse_uint_list(parts, "--parts")); }

  std::vector<std::size_t> dim_list() const {
    auto p = part_list();
    if (!dims.empty()) {
      auto d = to_sizes(parse_uint_list(dims, "--dims"));
      if (d.size() != p.size()) {
        throw CliError(kExitUsage, "--dims and --parts must have the same length");
      }
      return d;
    }
    if (block_side == 0) throw CliError(kExitUsage, "--block-side must be positive");
    for (auto& v : p) v *= block_side;
    return p;
  }

  FieldPtr field() const {
    mvc_field* f = nullptr;
    check(mvc_field_create(modulus, &f));
    return FieldPtr(f);
  }

  ChainPtr chain(const mvc_field* f) const {
    auto p = part_list();
    mvc_chain* c = nullptr;
    if (!matrices.empty()) {
      auto files = split(matrices, ',');
      std::vector<MatrixPtr> owned;
      std::vector<const mvc_matrix*> raw;
      for (const auto& file : files) {
        mvc_matrix* m = nullptr;
        check(mvc_matrix_load(f, file.c_str(), &m));
        owned.emplace_back(m);
        raw.push_back(m);
      }
      if (raw.size() + 1 != p.size()) {
        throw CliError(kExitUsage, "--matrices needs one file per matrix (m = " +
                                       std::to_string(p.size() - 1) + ")");
      }
      check(mvc_chain_from_matrices(f, raw.data(), raw.size(), p.data(), &c));
    } else {
      auto d = dim_list();
      check(mvc_chain_random(f, d.data(), p.data(), p.size(), seed, &c));
    }
    return ChainPtr(c);
  }
};

// Looks up "key=value" in library report text.
std::string report_value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return "";
}

// ---- analyze ----

struct AnalyzeOptions {
  int figure = 0;
  int table = 0;
  bool all = false;
  std::string m_values;
  std::string p_values;
  std::string n_values;
  std::uint64_t fixed_n = 0;
  std::size_t fixed_p = 0;
  std::string output;
};

int run_analyze(const AnalyzeOptions& o) {
  int selected = (o.figure != 0) + (o.table != 0) + (o.all ? 1 : 0);
  if (selected != 1) throw CliError(kExitUsage, "choose exactly one of --figure, --table, --all");
  if (o.figure != 0 && (o.figure < 2 || o.figure > 4)) {
    throw CliError(kExitUsage, "--figure must be 2, 3 or 4");
  }
  if (o.table != 0 && o.table != 1) throw CliError(kExitUsage, "--table must be 1");

  std::vector<std::size_t> ms, ps;
  std::vector<std::uint64_t> ns;
  if (!o.m_values.empty()) ms = to_sizes(parse_uint_list(o.m_values, "--m"));
  if (!o.p_values.empty()) ps = to_sizes(parse_uint_list(o.p_values, "--p"));
  if (!o.n_values.empty()) ns = parse_uint_list(o.n_values, "--N");
  for (auto m : ms) {
    if (m < 2) throw CliError(kExitUsage, "--m values must be at least 2");
  }
  for (auto p : ps) {
    if (p < 1) throw CliError(kExitUsage, "--p values must be positive");
  }
  for (auto n : ns) {
    if (n < 1) throw CliError(kExitUsage, "--N values must be positive");
  }

  mvc_figure_ranges r{};
  if (!ms.empty()) { r.m_values = ms.data(); r.n_m_values = ms.size(); }
  if (!ps.empty()) { r.p_values = ps.data(); r.n_p_values = ps.size(); }
  if (!ns.empty()) { r.worker_values = ns.data(); r.n_worker_values = ns.size(); }
  r.fixed_workers = o.fixed_n;
  r.fixed_parts = o.fixed_p;

  struct Item { mvc_figure which; const char* name; };
  std::vector<Item> items;
  if (o.all) {
    items = {{MVC_FIGURE_COMPUTATION_VS_P, "fig2.csv"},
             {MVC_FIGURE_STORAGE_VS_P, "fig3.csv"},
             {MVC_FIGURE_STORAGE_VS_N, "fig4.csv"},
             {MVC_TABLE_OVERHEADS, "table1.csv"}};
  } else if (o.table == 1) {
    items = {{MVC_TABLE_OVERHEADS, "table1.csv"}};
  } else {
    items = {{static_cast<mvc_figure>(o.figure),
              o.figure == 2 ? "fig2.csv" : o.figure == 3 ? "fig3.csv" : "fig4.csv"}};
  }

  for (const auto& item : items) {
    char* csv = nullptr;
    check(mvc_figure_csv(item.which, &r, &csv));
    std::string text = take(csv);
    if (o.all) {
      std::string dir = !o.output.empty() ? o.output : output_dir();
      if (dir.empty()) dir = ".";
      emit(text, (std::filesystem::path(dir) / item.name).string(), "");
    } else {
      emit(text, o.output, item.name);
    }
  }
  return kExitOk;
}

// ---- roundtrip ----

struct RoundtripOptions {
  std::string scheme = "mv1";
  ChainOptions chain;
  std::string mv2_axis = "degree";
};

int run_roundtrip(const RoundtripOptions& o) {
  auto field = o.chain.field();
  auto chain = o.chain.chain(field.get());
  auto parts = o.chain.part_list();
  mvc_axis_convention conv;
  auto axis = lower(o.mv2_axis);
  if (axis == "degree") conv = MVC_AXIS_DEGREE_PLUS_ONE;
  else if (axis == "wide") conv = MVC_AXIS_ODD_PLUS_TWO;
  else throw CliError(kExitUsage, "--mv2-axis must be degree or wide");

  std::vector<mvc_scheme> schemes;
  if (lower(o.scheme) == "both") schemes = {MVC_SCHEME_MV1, MVC_SCHEME_MV2};
  else schemes = {parse_scheme(o.scheme)};

  bool all_ok = true;
  for (auto s : schemes) {
    if (s == MVC_SCHEME_UV) throw CliError(kExitUsage, "uv has no encoder; use analyze or metrics");
    const char* name = s == MVC_SCHEME_MV1 ? "mv1" : "mv2";
    mvc_roundtrip_report rep{};
    mvc_matrix* decoded = nullptr;
    check(mvc_roundtrip(chain.get(), s, o.chain.seed, conv, &rep, &decoded));
    MatrixPtr decoded_guard(decoded);

    std::uint64_t formula_r = 0;
    check(mvc_recovery_threshold(s, parts.data(), parts.size(), &formula_r));
    char* mtext = nullptr;
    check(mvc_metrics_text(s, MVC_MEMORY_SHARED, parts.data(), parts.size(), 1, nullptr, 0,
                           &mtext));
    std::string metrics = take(mtext);

    mvc_plan* plan = nullptr;
    check(mvc_plan_shared(field.get(), s, parts.data(), parts.size(), 1, o.chain.seed, &plan));
    PlanPtr plan_guard(plan);
    std::size_t count = 0;
    check(mvc_plan_storage_threshold(plan, nullptr, 0, &count));
    std::vector<std::uint64_t> storage(count);
    check(mvc_plan_storage_threshold(plan, storage.data(), storage.size(), &count));

    bool storage_ok = true;
    std::ostringstream st;
    for (std::size_t i = 0; i < count; ++i) {
      auto formula = report_value(metrics, "storage_threshold[" + std::to_string(i) + "]");
      storage_ok = storage_ok && formula == std::to_string(storage[i]);
      st << (i ? " " : "") << storage[i] << "/" << formula;
    }
    bool ok = rep.exact != 0 && rep.recovery_threshold == formula_r && storage_ok;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " scheme=" << name
              << " K=" << rep.partition_level
              << " R_th=" << rep.recovery_threshold << " R_th_formula=" << formula_r
              << " evaluations=" << rep.evaluations
              << " S_th(achieved/formula)=" << st.str()
              << " exact=" << (rep.exact ? "yes" : "no") << '\n';
  }
  return all_ok ? kExitOk : kExitFailure;
}

// ---- plans ----

struct PlanOptions {
  std::string scheme = "mv1";
  std::string memory = "shared";
  std::size_t workers = 1;
  std::string fractions;
  ChainOptions chain;
  std::string output;
};

std::vector<std::string> fraction_list(const std::string& text, std::size_t needed) {
  auto items = split(text, ',');
  if (items.size() == 1 && needed > 1) items.assign(needed, items.front());
  return items;
}

PlanPtr build_plan(const mvc_field* field, mvc_scheme scheme, mvc_memory memory,
                   const std::vector<std::size_t>& parts, std::size_t workers,
                   const std::string& fractions, std::uint64_t seed) {
  mvc_plan* plan = nullptr;
  if (memory == MVC_MEMORY_SHARED) {
    check(mvc_plan_shared(field, scheme, parts.data(), parts.size(), workers, seed, &plan));
    return PlanPtr(plan);
  }
  if (fractions.empty()) {
    throw CliError(kExitUsage, "dedicated memory needs --fractions (a/b values, one or per axis)");
  }
  std::size_t needed = scheme == MVC_SCHEME_MV1 ? parts.size() - 1 : parts.size();
  auto items = fraction_list(fractions, needed);
  std::vector<const char*> raw;
  for (const auto& s : items) raw.push_back(s.c_str());
  check(mvc_plan_dedicated(field, scheme, parts.data(), parts.size(), workers, raw.data(),
                           raw.size(), seed, &plan));
  return PlanPtr(plan);
}

int run_plan(const PlanOptions& o) {
  auto field = o.chain.field();
  auto parts = o.chain.part_list();
  auto plan = build_plan(field.get(), parse_scheme(o.scheme), parse_memory(o.memory), parts,
                         o.workers, o.fractions, o.chain.seed);
  char* text = nullptr;
  check(mvc_plan_report(plan.get(), &text));
  emit(take(text), o.output, "");
  return kExitOk;
}

int run_metrics(const PlanOptions& o) {
  auto parts = o.chain.part_list();
  auto scheme = parse_scheme(o.scheme);
  auto memory = parse_memory(o.memory);
  std::vector<std::string> items;
  if (memory == MVC_MEMORY_DEDICATED && scheme != MVC_SCHEME_UV) {
    if (o.fractions.empty()) throw CliError(kExitUsage, "dedicated memory needs --fractions");
    items = fraction_list(o.fractions,
                          scheme == MVC_SCHEME_MV1 ? parts.size() - 1 : parts.size());
  }
  std::vector<const char*> raw;
  for (const auto& s : items) raw.push_back(s.c_str());
  char* text = nullptr;
  check(mvc_metrics_text(scheme, memory, parts.data(), parts.size(), o.workers, raw.data(),
                         raw.size(), &text));
  emit(take(text), o.output, "");
  return kExitOk;
}

// ---- simulate ----

struct SimulateOptions {
  std::string schemes = "mv1,mv2";
  std::string memories = "shared";
  std::size_t workers = 4;
  std::string fractions;
  ChainOptions chain;
  std::string latency = "shifted-exp";
  double shift = 1.0;
  double rate = 1.0;
  double task_time = 1.0;
  std::string seeds = "1..10";
  std::string output;
  std::string summary;
  bool uv_baseline = false;
};

int run_simulate(const SimulateOptions& o) {
  auto field = o.chain.field();
  auto chain = o.chain.chain(field.get());
  auto parts = o.chain.part_list();

  mvc_latency lat{};
  auto fam = lower(o.latency);
  if (fam == "shifted-exp" || fam == "shifted-exponential") {
    lat.family = MVC_LATENCY_SHIFTED_EXPONENTIAL;
  } else if (fam == "deterministic") {
    lat.family = MVC_LATENCY_DETERMINISTIC;
  } else {
    throw CliError(kExitUsage, "--latency must be shifted-exp or deterministic");
  }
  lat.shift = o.shift;
  lat.rate = o.rate;
  lat.task_time = o.task_time;

  std::vector<PlanPtr> plans;
  for (const auto& s : split(o.schemes, ',')) {
    auto scheme = parse_scheme(s);
    if (scheme == MVC_SCHEME_UV) throw CliError(kExitUsage, "uv is simulated via --uv-baseline");
    for (const auto& mem : split(o.memories, ',')) {
      plans.push_back(build_plan(field.get(), scheme, parse_memory(mem), parts, o.workers,
                                 o.fractions, o.chain.seed));
    }
  }
  if (plans.empty()) throw CliError(kExitUsage, "no plans selected");
  std::vector<const mvc_plan*> raw;
  for (const auto& p : plans) raw.push_back(p.get());
  auto seeds = parse_uint_list(o.seeds, "--seeds");

  char* runs = nullptr;
  char* summary = nullptr;
  std::size_t never = 0;
  std::size_t mismatches = 0;
  check(mvc_sweep(raw.data(), raw.size(), chain.get(), &lat, seeds.data(), seeds.size(),
                  o.uv_baseline ? 1 : 0, &runs, &summary, &never, &mismatches));
  std::string runs_text = take(runs);
  std::string summary_text = take(summary);

  emit(runs_text, o.output, "runs.csv");
  if (!o.summary.empty() || !output_dir().empty()) emit(summary_text, o.summary, "summary.csv");

  if (mismatches > 0) {
    std::cerr << "error: " << mismatches << " decoded run(s) differ from the uncoded product\n";
    return kExitFailure;
  }
  if (never > 0) {
    std::cerr << "error: NeverDecodable: " << never
              << " run(s) exhausted every task without reaching full rank\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---- encode / compute ----

struct EncodeOptions {
  std::string scheme = "mv1";
  ChainOptions chain;
  std::string point;
  std::string output;
};

int run_encode(const EncodeOptions& o) {
  auto field = o.chain.field();
  auto chain = o.chain.chain(field.get());
  auto coords = parse_uint_list(o.point, "--point");
  char* text = nullptr;
  check(mvc_encode_task(chain.get(), parse_scheme(o.scheme), coords.data(), coords.size(), &text));
  emit(take(text), o.output, "");
  return kExitOk;
}

struct ComputeOptions {
  std::string task;
  std::uint64_t modulus = 0;
  std::string output;
};

int run_compute(const ComputeOptions& o) {
  std::ifstream in(o.task, std::ios::binary);
  if (!in) throw CliError(kExitUsage, "cannot open task file " + o.task);
  std::stringstream buf;
  buf << in.rdbuf();
  mvc_field* f = nullptr;
  check(mvc_field_create(o.modulus, &f));
  FieldPtr field(f);
  mvc_matrix* m = nullptr;
  check(mvc_worker_compute(field.get(), buf.str().c_str(), &m));
  MatrixPtr result(m);
  char* text = nullptr;
  check(mvc_matrix_format(result.get(), &text));
  emit(take(text), o.output, "");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivariate polynomial codes for distributed matrix chain multiplication"};
  app.set_version_flag("--version", std::string(mvc_version()));
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file; flags override its values");

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Overhead curves and table as CSV");
  analyze->add_option("--figure", ao.figure, "Figure 2 (delta vs p), 3 (delta_s vs p), 4 (delta_s vs N)");
  analyze->add_option("--table", ao.table, "Table 1 (overheads at sampled p, N)");
  analyze->add_flag("--all", ao.all, "Write fig2, fig3, fig4 and table1 CSVs into a directory");
  analyze->add_option("--m", ao.m_values, "Chain lengths, e.g. 5,10");
  analyze->add_option("--p", ao.p_values, "Partition counts, e.g. 2..50");
  analyze->add_option("--N", ao.n_values, "Worker counts for figure 4, e.g. 1..50");
  analyze->add_option("--fixed-N", ao.fixed_n, "Worker count for figure 3 (default 5)");
  analyze->add_option("--fixed-p", ao.fixed_p, "Partition count for figure 4 (default 5)");
  analyze->add_option("--output", ao.output, "Output file (directory with --all)");

  RoundtripOptions ro;
  auto* roundtrip = app.add_subcommand("roundtrip", "Encode, compute, decode and compare with the uncoded product");
  roundtrip->add_option("--scheme", ro.scheme, "mv1, mv2 or both")->capture_default_str();
  ro.chain.add_to(roundtrip, true);
  roundtrip->add_option("--mv2-axis", ro.mv2_axis,
                        "MV2 interior axis size: degree (2p-1) or wide (2p+1)")
      ->capture_default_str();

  PlanOptions po;
  auto* plan = app.add_subcommand("plan", "Storage plan report");
  plan->add_option("--scheme", po.scheme, "mv1 or mv2")->capture_default_str();
  plan->add_option("--memory", po.memory, "shared or dedicated")->capture_default_str();
  plan->add_option("--workers", po.workers, "Number of workers N")->capture_default_str();
  plan->add_option("--fractions", po.fractions, "Storage fractions s_i as a/b (one value or per axis)");
  plan->add_option("--output", po.output, "Output file");
  po.chain.add_to(plan, false);

  PlanOptions mo;
  auto* metrics = app.add_subcommand("metrics", "Exact thresholds and overheads");
  metrics->add_option("--scheme", mo.scheme, "uv, mv1 or mv2")->capture_default_str();
  metrics->add_option("--memory", mo.memory, "shared or dedicated")->capture_default_str();
  metrics->add_option("--workers", mo.workers, "Number of workers N")->capture_default_str();
  metrics->add_option("--fractions", mo.fractions, "Storage fractions s_i as a/b");
  metrics->add_option("--output", mo.output, "Output file");
  mo.chain.add_to(metrics, false);

  SimulateOptions so;
  auto* simulate = app.add_subcommand("simulate", "Straggler simulation sweep");
  simulate->add_option("--scheme", so.schemes, "Schemes, e.g. mv1,mv2")->capture_default_str();
  simulate->add_option("--memory", so.memories, "Memory modes, e.g. shared,dedicated")
      ->capture_default_str();
  simulate->add_option("--workers", so.workers, "Number of workers N")->capture_default_str();
  simulate->add_option("--fractions", so.fractions, "Dedicated storage fractions s_i as a/b");
  so.chain.add_to(simulate, true);
  simulate->add_option("--latency", so.latency, "shifted-exp or deterministic")
      ->capture_default_str();
  simulate->add_option("--shift", so.shift, "Shifted-exponential shift")->capture_default_str();
  simulate->add_option("--rate", so.rate, "Shifted-exponential rate")->capture_default_str();
  simulate->add_option("--task-time", so.task_time, "Deterministic task time")
      ->capture_default_str();
  simulate->add_option("--seeds", so.seeds, "Simulation seeds, e.g. 1..10")->capture_default_str();
  simulate->add_option("--output", so.output, "Per-run CSV (default stdout)");
  simulate->add_option("--summary", so.summary, "Summary CSV");
  simulate->add_flag("--uv-baseline", so.uv_baseline, "Add univariate order-statistic rows");

  EncodeOptions eo;
  auto* encode = app.add_subcommand("encode", "Write the coded task for one evaluation point");
  encode->add_option("--scheme", eo.scheme, "mv1 or mv2")->capture_default_str();
  eo.chain.add_to(encode, true);
  encode->add_option("--point", eo.point, "Coordinates, comma separated")->required();
  encode->add_option("--output", eo.output, "Output file");

  ComputeOptions co;
  auto* compute = app.add_subcommand("compute", "Multiply the coded blocks of a task file");
  compute->add_option("--task", co.task, "Task file")->required();
  compute->add_option("--modulus", co.modulus, "Prime field modulus (0: 2^31-1)")
      ->capture_default_str();
  compute->add_option("--output", co.output, "Output file");

  // Required options may come from the config file, so the requirement is
  // checked after merging.
  std::vector<std::pair<CLI::App*, CLI::Option*>> required;
  for (auto* sub : app.get_subcommands({})) {
    for (auto* opt : sub->get_options()) {
      if (opt->get_required()) {
        required.emplace_back(sub, opt);
        opt->required(false);
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) apply_config(sub, read_config(config_path));
    for (auto [owner, opt] : required) {
      if (owner == sub && opt->count() == 0) {
        throw CliError(kExitUsage, opt->get_name() + " is required");
      }
    }
    if (sub == analyze) return run_analyze(ao);
    if (sub == roundtrip) return run_roundtrip(ro);
    if (sub == plan) return run_plan(po);
    if (sub == metrics) return run_metrics(mo);
    if (sub == simulate) return run_simulate(so);
    if (sub == encode) return run_encode(eo);
    if (sub == compute) return run_compute(co);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
