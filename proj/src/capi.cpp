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


#include "mvcodes/mvcodes.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mvcodes/analysis.hpp"
#include "mvcodes/chain.hpp"
#include "mvcodes/decoding.hpp"
#include "mvcodes/encoding.hpp"
#include "mvcodes/error.hpp"
#include "mvcodes/field.hpp"
#include "mvcodes/placement.hpp"
#include "mvcodes/simulator.hpp"

struct mvc_field {
  mvc::PrimeField field;
};

struct mvc_matrix {
  mvc::FieldMatrix matrix;
};

struct mvc_chain {
  mvc::BlockChain chain;
};

struct mvc_plan {
  mvc::StoragePlan plan;
};

namespace {

thread_local std::string g_last_error;

mvc_status to_status(mvc::ErrorCode code) noexcept {
  using mvc::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return MVC_ERR_INVALID_ARGUMENT;
    case ErrorCode::kNotPrime: return MVC_ERR_NOT_PRIME;
    case ErrorCode::kZeroInverse: return MVC_ERR_ZERO_INVERSE;
    case ErrorCode::kDimensionMismatch: return MVC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kIndivisibleDimension: return MVC_ERR_INDIVISIBLE_DIMENSION;
    case ErrorCode::kChainShapeMismatch: return MVC_ERR_CHAIN_SHAPE_MISMATCH;
    case ErrorCode::kIndexOutOfRange: return MVC_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::kMissingBlock: return MVC_ERR_MISSING_BLOCK;
    case ErrorCode::kDuplicatePoint: return MVC_ERR_DUPLICATE_POINT;
    case ErrorCode::kShapeMismatch: return MVC_ERR_SHAPE_MISMATCH;
    case ErrorCode::kPointArityMismatch: return MVC_ERR_POINT_ARITY_MISMATCH;
    case ErrorCode::kMissingEvaluation: return MVC_ERR_MISSING_EVALUATION;
    case ErrorCode::kDegreeMismatch: return MVC_ERR_DEGREE_MISMATCH;
    case ErrorCode::kSingularSystem: return MVC_ERR_SINGULAR_SYSTEM;
    case ErrorCode::kInfeasiblePlan: return MVC_ERR_INFEASIBLE_PLAN;
    case ErrorCode::kNonIntegralAssignment: return MVC_ERR_NON_INTEGRAL_ASSIGNMENT;
    case ErrorCode::kNeverDecodable: return MVC_ERR_NEVER_DECODABLE;
    case ErrorCode::kParse: return MVC_ERR_PARSE;
    case ErrorCode::kIo: return MVC_ERR_IO;
  }
  return MVC_ERR_INTERNAL;
}

mvc_status set_error(mvc_status status, const char* message) {
  try {
    g_last_error = message;
  } catch (...) {
  }
  return status;
}

template <class F>
mvc_status guarded(F&& body) noexcept {
  try {
    g_last_error.clear();
    body();
    return MVC_OK;
  } catch (const mvc::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MVC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MVC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(MVC_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) mvc::fail(mvc::ErrorCode::kInvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mvc::SchemeKind coded_kind(mvc_scheme scheme) {
  switch (scheme) {
    case MVC_SCHEME_MV1: return mvc::SchemeKind::kMV1;
    case MVC_SCHEME_MV2: return mvc::SchemeKind::kMV2;
    default: break;
  }
  mvc::fail(mvc::ErrorCode::kInvalidArgument, "scheme has no encoder (use MV1 or MV2)");
}

mvc::SchemeLabel label(mvc_scheme scheme) {
  switch (scheme) {
    case MVC_SCHEME_UV: return mvc::SchemeLabel::kUV;
    case MVC_SCHEME_MV1: return mvc::SchemeLabel::kMV1;
    case MVC_SCHEME_MV2: return mvc::SchemeLabel::kMV2;
  }
  mvc::fail(mvc::ErrorCode::kInvalidArgument, "unknown scheme");
}

mvc::MemoryMode memory_mode(mvc_memory memory) {
  switch (memory) {
    case MVC_MEMORY_SHARED: return mvc::MemoryMode::kShared;
    case MVC_MEMORY_DEDICATED: return mvc::MemoryMode::kDedicated;
  }
  mvc::fail(mvc::ErrorCode::kInvalidArgument, "unknown memory mode");
}

std::vector<std::size_t> parts_vector(const size_t* parts, size_t count) {
  require(parts != nullptr || count == 0, "parts is null");
  return std::vector<std::size_t>(parts, parts + count);
}

std::vector<mvc::Rational> fraction_vector(const char* const* fractions, size_t n) {
  require(fractions != nullptr || n == 0, "fractions is null");
  std::vector<mvc::Rational> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    require(fractions[i] != nullptr, "fraction string is null");
    out.push_back(mvc::parse_fraction(fractions[i]));
  }
  return out;
}

mvc::LatencyModel latency_model(const mvc_latency* latency) {
  require(latency != nullptr, "latency is null");
  mvc::LatencyModel model;
  switch (latency->family) {
    case MVC_LATENCY_SHIFTED_EXPONENTIAL:
      model = mvc::LatencyModel::shifted_exponential(latency->shift, latency->rate);
      break;
    case MVC_LATENCY_DETERMINISTIC:
      model = mvc::LatencyModel::deterministic(latency->task_time);
      break;
    default:
      mvc::fail(mvc::ErrorCode::kInvalidArgument, "unknown latency family");
  }
  model.validate();
  return model;
}

std::uint64_t to_u64(const mvc::BigInt& v) {
  if (v > mvc::BigInt(std::numeric_limits<std::uint64_t>::max())) {
    mvc::fail(mvc::ErrorCode::kInvalidArgument, "value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

extern "C" {

const char* mvc_version(void) { return "1.0.0"; }

const char* mvc_status_name(mvc_status status) {
  switch (status) {
    case MVC_OK: return "Ok";
    case MVC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > MVC_OK && status < MVC_ERR_INTERNAL) {
    return mvc::to_string(static_cast<mvc::ErrorCode>(status - 1));
  }
  return "Unknown";
}

const char* mvc_last_error(void) { return g_last_error.c_str(); }

void mvc_string_free(char* s) { std::free(s); }

mvc_status mvc_field_create(uint64_t modulus, mvc_field** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = new mvc_field{
        mvc::PrimeField(modulus == 0 ? mvc::PrimeField::kDefaultModulus : modulus)};
  });
}

void mvc_field_destroy(mvc_field* field) { delete field; }

uint64_t mvc_field_modulus(const mvc_field* field) {
  return field == nullptr ? 0 : field->field.modulus();
}

mvc_status mvc_field_mul(const mvc_field* field, uint64_t a, uint64_t b, uint64_t* out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    const auto& f = field->field;
    *out = f.mul(f.from_uint(a), f.from_uint(b)).v;
  });
}

mvc_status mvc_field_inv(const mvc_field* field, uint64_t a, uint64_t* out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    *out = field->field.inv(field->field.from_uint(a)).v;
  });
}

mvc_status mvc_matrix_create(size_t rows, size_t cols, mvc_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = new mvc_matrix{mvc::FieldMatrix(rows, cols)};
  });
}

void mvc_matrix_destroy(mvc_matrix* m) { delete m; }

size_t mvc_matrix_rows(const mvc_matrix* m) { return m == nullptr ? 0 : m->matrix.rows(); }

size_t mvc_matrix_cols(const mvc_matrix* m) { return m == nullptr ? 0 : m->matrix.cols(); }

mvc_status mvc_matrix_get(const mvc_matrix* m, size_t r, size_t c, uint64_t* out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    if (r >= m->matrix.rows() || c >= m->matrix.cols()) {
      mvc::fail(mvc::ErrorCode::kIndexOutOfRange, "matrix index out of range");
    }
    *out = m->matrix(r, c).v;
  });
}

mvc_status mvc_matrix_set(const mvc_field* field, mvc_matrix* m, size_t r, size_t c,
                          uint64_t value) {
  return guarded([&] {
    require(field != nullptr && m != nullptr, "null argument");
    if (r >= m->matrix.rows() || c >= m->matrix.cols()) {
      mvc::fail(mvc::ErrorCode::kIndexOutOfRange, "matrix index out of range");
    }
    m->matrix(r, c) = field->field.from_uint(value);
  });
}

mvc_status mvc_matrix_parse(const mvc_field* field, const char* text, mvc_matrix** out) {
  return guarded([&] {
    require(field != nullptr && text != nullptr && out != nullptr, "null argument");
    *out = new mvc_matrix{mvc::parse_matrix(field->field, text)};
  });
}

mvc_status mvc_matrix_format(const mvc_matrix* m, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = copy_string(mvc::format_matrix(m->matrix));
  });
}

mvc_status mvc_matrix_load(const mvc_field* field, const char* path, mvc_matrix** out) {
  return guarded([&] {
    require(field != nullptr && path != nullptr && out != nullptr, "null argument");
    std::ifstream in(path);
    if (!in) mvc::fail(mvc::ErrorCode::kIo, std::string("cannot open ") + path);
    *out = new mvc_matrix{mvc::read_matrix(field->field, in)};
  });
}

mvc_status mvc_matrix_save(const mvc_matrix* m, const char* path) {
  return guarded([&] {
    require(m != nullptr && path != nullptr, "null argument");
    std::ofstream out(path);
    if (!out) mvc::fail(mvc::ErrorCode::kIo, std::string("cannot write ") + path);
    mvc::write_matrix(out, m->matrix);
    out.flush();
    if (!out) mvc::fail(mvc::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

mvc_status mvc_matrix_multiply(const mvc_field* field, const mvc_matrix* a, const mvc_matrix* b,
                               mvc_matrix** out) {
  return guarded([&] {
    require(field != nullptr && a != nullptr && b != nullptr && out != nullptr,
            "null argument");
    *out = new mvc_matrix{mvc::mat_mul(field->field, a->matrix, b->matrix)};
  });
}

int mvc_matrix_equal(const mvc_matrix* a, const mvc_matrix* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->matrix == b->matrix ? 1 : 0;
}

mvc_status mvc_chain_random(const mvc_field* field, const size_t* dims, const size_t* parts,
                            size_t count, uint64_t seed, mvc_chain** out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    mvc::PartitionScheme scheme(parts_vector(dims, count), parts_vector(parts, count));
    *out = new mvc_chain{mvc::random_chain(field->field, scheme, seed)};
  });
}

mvc_status mvc_chain_from_matrices(const mvc_field* field, const mvc_matrix* const* matrices,
                                   size_t m, const size_t* parts, mvc_chain** out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    require(matrices != nullptr || m == 0, "matrices is null");
    std::vector<mvc::FieldMatrix> mats;
    mats.reserve(m);
    for (size_t i = 0; i < m; ++i) {
      require(matrices[i] != nullptr, "matrix handle is null");
      mats.push_back(matrices[i]->matrix);
    }
    auto p = parts_vector(parts, m + 1);
    *out = new mvc_chain{mvc::partition(field->field, mats, p)};
  });
}

void mvc_chain_destroy(mvc_chain* chain) { delete chain; }

size_t mvc_chain_length(const mvc_chain* chain) {
  return chain == nullptr ? 0 : chain->chain.m();
}

mvc_status mvc_chain_matrix(const mvc_chain* chain, size_t i, mvc_matrix** out) {
  return guarded([&] {
    require(chain != nullptr && out != nullptr, "null argument");
    if (i >= chain->chain.m()) {
      mvc::fail(mvc::ErrorCode::kIndexOutOfRange, "chain index out of range");
    }
    *out = new mvc_matrix{chain->chain.matrix(i)};
  });
}

mvc_status mvc_chain_oracle_product(const mvc_chain* chain, mvc_matrix** out) {
  return guarded([&] {
    require(chain != nullptr && out != nullptr, "null argument");
    std::vector<mvc::FieldMatrix> mats;
    for (size_t i = 0; i < chain->chain.m(); ++i) mats.push_back(chain->chain.matrix(i));
    *out = new mvc_matrix{mvc::oracle_chain_multiply(chain->chain.field(), mats)};
  });
}

mvc_status mvc_encode_task(const mvc_chain* chain, mvc_scheme scheme, const uint64_t* coords,
                           size_t ncoords, char** out) {
  return guarded([&] {
    require(chain != nullptr && out != nullptr, "null argument");
    require(coords != nullptr || ncoords == 0, "coords is null");
    const auto& f = chain->chain.field();
    mvc::EvalPoint point;
    for (size_t i = 0; i < ncoords; ++i) point.coords.push_back(f.from_uint(coords[i]));
    auto task = mvc::encode_task(chain->chain, coded_kind(scheme), point);
    *out = copy_string(mvc::format_task(task));
  });
}

mvc_status mvc_worker_compute(const mvc_field* field, const char* task_text, mvc_matrix** out) {
  return guarded([&] {
    require(field != nullptr && task_text != nullptr && out != nullptr, "null argument");
    auto task = mvc::parse_task(field->field, task_text);
    *out = new mvc_matrix{mvc::worker_compute(field->field, task)};
  });
}

mvc_status mvc_roundtrip(const mvc_chain* chain, mvc_scheme scheme, uint64_t grid_seed,
                         mvc_axis_convention convention, mvc_roundtrip_report* report,
                         mvc_matrix** decoded) {
  return guarded([&] {
    require(chain != nullptr && report != nullptr, "null argument");
    mvc::AxisConvention conv;
    switch (convention) {
      case MVC_AXIS_DEGREE_PLUS_ONE: conv = mvc::AxisConvention::kDegreePlusOne; break;
      case MVC_AXIS_ODD_PLUS_TWO: conv = mvc::AxisConvention::kOddPlusTwo; break;
      default: mvc::fail(mvc::ErrorCode::kInvalidArgument, "unknown axis convention");
    }
    auto r = mvc::roundtrip(chain->chain, coded_kind(scheme), grid_seed, conv);
    report->recovery_threshold = r.recovery_threshold;
    report->evaluations = r.evaluations;
    report->partition_level = r.partition_level;
    report->exact = r.exact ? 1 : 0;
    if (decoded != nullptr) *decoded = new mvc_matrix{std::move(r.decoded)};
  });
}

mvc_status mvc_decode_points(const mvc_chain* chain, mvc_scheme scheme, const uint64_t* coords,
                             size_t npoints, mvc_matrix** decoded) {
  return guarded([&] {
    require(chain != nullptr && decoded != nullptr, "null argument");
    require(coords != nullptr || npoints == 0, "coords is null");
    const auto kind = coded_kind(scheme);
    const auto& f = chain->chain.field();
    const size_t arity = mvc::variable_count(kind, chain->chain.m());
    std::vector<mvc::EvalPoint> points(npoints);
    std::vector<mvc::FieldMatrix> evals;
    evals.reserve(npoints);
    for (size_t k = 0; k < npoints; ++k) {
      for (size_t j = 0; j < arity; ++j) {
        points[k].coords.push_back(f.from_uint(coords[k * arity + j]));
      }
      evals.push_back(mvc::worker_compute(f, mvc::encode_task(chain->chain, kind, points[k])));
    }
    auto result = mvc::decode_general(f, points, evals, kind, chain->chain.scheme());
    *decoded = new mvc_matrix{mvc::assemble_result(result)};
  });
}

mvc_status mvc_recovery_threshold(mvc_scheme scheme, const size_t* parts, size_t count,
                                  uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    auto p = parts_vector(parts, count);
    auto m = mvc::metrics(label(scheme), p, mvc::MemoryMode::kShared);
    *out = to_u64(m.recovery_threshold);
  });
}

mvc_status mvc_metrics_text(mvc_scheme scheme, mvc_memory memory, const size_t* parts,
                            size_t count, uint64_t workers, const char* const* fractions,
                            size_t nfractions, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    auto p = parts_vector(parts, count);
    auto s = fraction_vector(fractions, nfractions);
    auto m = mvc::metrics(label(scheme), p, memory_mode(memory), workers, s);
    *out = copy_string(mvc::format_metrics(m));
  });
}

mvc_status mvc_figure_csv(mvc_figure which, const mvc_figure_ranges* ranges, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    mvc::Figure fig;
    switch (which) {
      case MVC_FIGURE_COMPUTATION_VS_P: fig = mvc::Figure::kComputationVsP; break;
      case MVC_FIGURE_STORAGE_VS_P: fig = mvc::Figure::kStorageVsP; break;
      case MVC_FIGURE_STORAGE_VS_N: fig = mvc::Figure::kStorageVsN; break;
      case MVC_TABLE_OVERHEADS: fig = mvc::Figure::kTable; break;
      default: mvc::fail(mvc::ErrorCode::kInvalidArgument, "unknown figure");
    }
    mvc::FigureRanges r;
    if (ranges != nullptr) {
      if (ranges->m_values != nullptr) {
        r.m_values.assign(ranges->m_values, ranges->m_values + ranges->n_m_values);
      }
      if (ranges->p_values != nullptr) {
        r.p_values.assign(ranges->p_values, ranges->p_values + ranges->n_p_values);
      }
      if (ranges->worker_values != nullptr) {
        r.n_values.assign(ranges->worker_values,
                          ranges->worker_values + ranges->n_worker_values);
      }
      if (ranges->fixed_workers != 0) r.fixed_workers = ranges->fixed_workers;
      if (ranges->fixed_parts != 0) r.fixed_parts = ranges->fixed_parts;
    }
    auto rows = mvc::figure_data(fig, r);
    std::ostringstream os;
    mvc::write_figure_csv(os, rows);
    *out = copy_string(os.str());
  });
}

mvc_status mvc_plan_shared(const mvc_field* field, mvc_scheme scheme, const size_t* parts,
                           size_t count, size_t workers, uint64_t seed, mvc_plan** out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    auto p = parts_vector(parts, count);
    *out = new mvc_plan{mvc::plan_shared(field->field, coded_kind(scheme), p, workers, seed)};
  });
}

mvc_status mvc_plan_dedicated(const mvc_field* field, mvc_scheme scheme, const size_t* parts,
                              size_t count, size_t workers, const char* const* fractions,
                              size_t nfractions, uint64_t seed, mvc_plan** out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    auto p = parts_vector(parts, count);
    auto s = fraction_vector(fractions, nfractions);
    *out = new mvc_plan{
        mvc::plan_dedicated(field->field, coded_kind(scheme), p, workers, s, seed)};
  });
}

void mvc_plan_destroy(mvc_plan* plan) { delete plan; }

mvc_status mvc_plan_report(const mvc_plan* plan, char** out) {
  return guarded([&] {
    require(plan != nullptr && out != nullptr, "null argument");
    *out = copy_string(mvc::format_plan(plan->plan));
  });
}

uint64_t mvc_plan_recovery_threshold(const mvc_plan* plan) {
  return plan == nullptr ? 0 : plan->plan.recovery_threshold;
}

uint64_t mvc_plan_total_tasks(const mvc_plan* plan) {
  return plan == nullptr ? 0 : plan->plan.total_tasks();
}

mvc_status mvc_plan_storage_threshold(const mvc_plan* plan, uint64_t* out, size_t capacity,
                                      size_t* count) {
  return guarded([&] {
    require(plan != nullptr && count != nullptr, "null argument");
    require(out != nullptr || capacity == 0, "out is null");
    const auto& s = plan->plan.storage_threshold;
    *count = s.size();
    for (size_t i = 0; i < s.size() && i < capacity; ++i) out[i] = s[i];
  });
}

mvc_status mvc_simulate(const mvc_plan* plan, const mvc_chain* chain, const mvc_latency* latency,
                        uint64_t seed, mvc_sim_outcome* out) {
  return guarded([&] {
    require(plan != nullptr && chain != nullptr && out != nullptr, "null argument");
    auto r = mvc::simulate(plan->plan, chain->chain, latency_model(latency), seed);
    out->recovery_time = r.recovery_time;
    out->tasks_used = r.tasks_used;
    out->tasks_total = r.tasks_completed_total;
    out->tasks_wasted = r.tasks_wasted;
    out->extra_for_decodability = r.extra_tasks_for_decodability;
    out->matches_oracle = r.matches_oracle ? 1 : 0;
  });
}

mvc_status mvc_sweep(const mvc_plan* const* plans, size_t nplans, const mvc_chain* chain,
                     const mvc_latency* latency, const uint64_t* seeds, size_t nseeds,
                     int include_uv_reference, char** runs_csv, char** summary_csv,
                     size_t* never_decodable, size_t* oracle_mismatches) {
  return guarded([&] {
    require(chain != nullptr, "chain is null");
    require(plans != nullptr || nplans == 0, "plans is null");
    require(seeds != nullptr || nseeds == 0, "seeds is null");
    std::vector<mvc::StoragePlan> ps;
    ps.reserve(nplans);
    for (size_t i = 0; i < nplans; ++i) {
      require(plans[i] != nullptr, "plan handle is null");
      ps.push_back(plans[i]->plan);
    }
    std::vector<std::uint64_t> sv(seeds, seeds + nseeds);
    auto result = mvc::sweep(ps, chain->chain, latency_model(latency), sv,
                             include_uv_reference != 0);
    std::string runs_text, summary_text;
    if (runs_csv != nullptr) {
      std::ostringstream os;
      mvc::write_runs_csv(os, result.runs);
      runs_text = os.str();
    }
    if (summary_csv != nullptr) {
      std::ostringstream os;
      mvc::write_summary_csv(os, result.summary);
      summary_text = os.str();
    }
    size_t failures = 0;
    size_t mismatches = 0;
    for (const auto& run : result.runs) {
      if (!run.outcome) ++failures;
      else if (!run.outcome->matches_oracle) ++mismatches;
    }
    if (runs_csv != nullptr) *runs_csv = copy_string(runs_text);
    if (summary_csv != nullptr) {
      try {
        *summary_csv = copy_string(summary_text);
      } catch (...) {
        if (runs_csv != nullptr) {
          std::free(*runs_csv);
          *runs_csv = nullptr;
        }
        throw;
      }
    }
    if (never_decodable != nullptr) *never_decodable = failures;
    if (oracle_mismatches != nullptr) *oracle_mismatches = mismatches;
  });
}

}  // extern "C"
