#include "antipodal/antipodal.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "antipodal/circle.hpp"
#include "antipodal/constructions.hpp"
#include "antipodal/family_io.hpp"
#include "antipodal/report_json.hpp"
#include "antipodal/search.hpp"
#include "antipodal/table.hpp"
#include "antipodal/theorem1.hpp"

using namespace antipodal;

struct ap_family {
  VectorFamily family;
};

struct ap_search_result {
  SearchResult result;
  std::optional<VectorFamily> witness;
};

namespace {

thread_local std::string last_error;
std::atomic<int> worker_threads{1};

ap_status to_status(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidParams: return AP_ERR_INVALID_PARAMS;
  case ErrorCode::Overlap: return AP_ERR_OVERLAP;
  case ErrorCode::Range: return AP_ERR_RANGE;
  case ErrorCode::DimensionMismatch: return AP_ERR_DIMENSION_MISMATCH;
  case ErrorCode::BadCharacter: return AP_ERR_BAD_CHARACTER;
  case ErrorCode::EmptyInput: return AP_ERR_EMPTY_INPUT;
  case ErrorCode::Regime: return AP_ERR_REGIME;
  case ErrorCode::TooLarge: return AP_ERR_TOO_LARGE;
  case ErrorCode::GroundMismatch: return AP_ERR_GROUND_MISMATCH;
  case ErrorCode::Precondition: return AP_ERR_PRECONDITION;
  case ErrorCode::BadPair: return AP_ERR_BAD_PAIR;
  case ErrorCode::BadT: return AP_ERR_BAD_T;
  case ErrorCode::ShapeMismatch: return AP_ERR_SHAPE_MISMATCH;
  case ErrorCode::InvalidPermutation: return AP_ERR_INVALID_PERMUTATION;
  case ErrorCode::Parse: return AP_ERR_PARSE;
  case ErrorCode::Io: return AP_ERR_IO;
  case ErrorCode::Overflow: return AP_ERR_OVERFLOW;
  }
  return AP_ERR_INTERNAL;
}

ap_status fail_with(ap_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn> ap_status guarded(Fn &&fn) {
  try {
    last_error.clear();
    fn();
    return AP_OK;
  } catch (const Error &e) {
    return fail_with(to_status(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail_with(AP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail_with(AP_ERR_INTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void *p, const char *what) {
  if (!p)
    throw Error(ErrorCode::Precondition, std::string(what) + " is null");
}

// Null pointer arguments get their own status rather than an exception path.
#define AP_REQUIRE(ptr)                                                           \
  do {                                                                            \
    if (!(ptr))                                                                   \
      return fail_with(AP_ERR_NULL_ARGUMENT, #ptr " is null");                    \
  } while (0)

ap_family *wrap(VectorFamily f) { return new ap_family{std::move(f)}; }

Permutation permutation_from(const int *images, size_t length) {
  require(images, "images");
  return Permutation(std::vector<int>(images, images + length));
}

SearchOptions options_with_budget(double budget_seconds) {
  SearchOptions o;
  if (budget_seconds > 0)
    o.budget = std::chrono::duration<double>(budget_seconds);
  return o;
}

SigmaSweep sweep_of(int exhaustive, uint64_t samples, uint64_t seed) {
  SigmaSweep s;
  s.exhaustive = exhaustive != 0;
  s.samples = samples;
  s.seed = seed;
  s.threads = worker_threads.load();
  return s;
}

} // namespace

namespace {

template <class Check>
ap_status trace_call(const ap_family *f, char **report, int *passed, Check check) {
  AP_REQUIRE(f);
  AP_REQUIRE(report);
  return guarded([&] {
    const TraceReport r = check(f->family);
    if (passed)
      *passed = r.passed() ? 1 : 0;
    *report = dup_string(to_json(r).dump());
  });
}

} // namespace

namespace {

template <class Check>
ap_status circle_call(const ap_family *f, char **report, int *passed, Check check) {
  AP_REQUIRE(f);
  AP_REQUIRE(report);
  return guarded([&] {
    const CircleReport r = check(f->family);
    if (passed)
      *passed = r.passed() ? 1 : 0;
    *report = dup_string(to_json(r).dump());
  });
}

} // namespace

extern "C" {

const char *ap_version(void) { return "0.1.0"; }

const char *ap_status_name(ap_status status) {
  switch (status) {
  case AP_OK: return "OK";
  case AP_ERR_INVALID_PARAMS: return "InvalidParams";
  case AP_ERR_OVERLAP: return "OverlapError";
  case AP_ERR_RANGE: return "RangeError";
  case AP_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
  case AP_ERR_BAD_CHARACTER: return "BadCharacter";
  case AP_ERR_EMPTY_INPUT: return "EmptyInput";
  case AP_ERR_REGIME: return "RegimeError";
  case AP_ERR_TOO_LARGE: return "TooLarge";
  case AP_ERR_GROUND_MISMATCH: return "GroundMismatch";
  case AP_ERR_PRECONDITION: return "PreconditionError";
  case AP_ERR_BAD_PAIR: return "BadPair";
  case AP_ERR_BAD_T: return "BadT";
  case AP_ERR_SHAPE_MISMATCH: return "ShapeMismatch";
  case AP_ERR_INVALID_PERMUTATION: return "InvalidPermutation";
  case AP_ERR_PARSE: return "ParseError";
  case AP_ERR_IO: return "IoError";
  case AP_ERR_OVERFLOW: return "Overflow";
  case AP_ERR_NULL_ARGUMENT: return "NullArgument";
  case AP_ERR_UNKNOWN_KIND: return "UnknownKind";
  case AP_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char *ap_last_error(void) { return last_error.c_str(); }

void ap_string_free(char *s) { std::free(s); }

ap_status ap_set_threads(int threads) {
  if (threads < 0)
    return fail_with(AP_ERR_PRECONDITION, "thread count must be non-negative");
  worker_threads = threads == 0 ? 1 : threads;
  return AP_OK;
}

int ap_get_threads(void) { return worker_threads.load(); }

// ---- vectors and counting

ap_status ap_params_check(int n, int k, int l) {
  return guarded([&] { Params::make(n, k, l); });
}

ap_status ap_cardinality(int n, int k, int l, uint64_t *out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = cardinality_v(Params::make(n, k, l)); });
}

ap_status ap_antipodal_degree(int n, int k, int l, uint64_t *out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = antipodal_degree(Params::make(n, k, l)); });
}

ap_status ap_scalar_product(const char *v, const char *w, int *out) {
  AP_REQUIRE(v);
  AP_REQUIRE(w);
  AP_REQUIRE(out);
  return guarded([&] { *out = scalar_product(parse_vector(v), parse_vector(w)); });
}

ap_status ap_is_antipodal(const char *v, const char *w, int *out) {
  AP_REQUIRE(v);
  AP_REQUIRE(w);
  AP_REQUIRE(out);
  return guarded([&] {
    const SignedVector a = parse_vector(v), b = parse_vector(w);
    const Params p = Params::make(a.dimension(), a.plus().size(), a.minus().size());
    if (b.dimension() != a.dimension())
      fail(ErrorCode::DimensionMismatch, "vectors have different lengths");
    *out = is_antipodal(a, b, p) ? 1 : 0;
  });
}

// ---- families

ap_status ap_family_new(int n, int k, int l, ap_family **out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = wrap(VectorFamily(Params::make(n, k, l))); });
}

void ap_family_free(ap_family *f) { delete f; }

ap_status ap_family_add(ap_family *f, const char *vector, int *inserted) {
  AP_REQUIRE(f);
  AP_REQUIRE(vector);
  return guarded([&] {
    const bool added = f->family.insert(parse_vector(vector));
    if (inserted)
      *inserted = added ? 1 : 0;
  });
}

ap_status ap_family_enumerate(int n, int k, int l, ap_family **out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = wrap(enumerate_v(Params::make(n, k, l))); });
}

ap_status ap_family_construct(ap_construction kind, int n, int k, int l, ap_family **out) {
  AP_REQUIRE(out);
  if (kind != AP_EXAMPLE1 && kind != AP_EXAMPLE2 && kind != AP_CIRCLE)
    return fail_with(AP_ERR_UNKNOWN_KIND, "unknown construction kind");
  return guarded([&] {
    const Params p = Params::make(n, k, l);
    switch (kind) {
    case AP_EXAMPLE1: *out = wrap(example1(p)); break;
    case AP_EXAMPLE2: *out = wrap(example2(p)); break;
    case AP_CIRCLE: *out = wrap(circle_family(p)); break;
    }
  });
}

ap_status ap_family_parse(const char *text, ap_family **out) {
  AP_REQUIRE(text);
  AP_REQUIRE(out);
  return guarded([&] { *out = wrap(parse_family(text)); });
}

ap_status ap_family_load(const char *path, ap_family **out) {
  AP_REQUIRE(path);
  AP_REQUIRE(out);
  return guarded([&] { *out = wrap(load_family(path)); });
}

ap_status ap_family_save(const ap_family *f, const char *path, int json) {
  AP_REQUIRE(f);
  AP_REQUIRE(path);
  return guarded([&] { save_family(f->family, path, json != 0); });
}

ap_status ap_family_to_text(const ap_family *f, char **out) {
  AP_REQUIRE(f);
  AP_REQUIRE(out);
  return guarded([&] { *out = dup_string(format_family_text(f->family)); });
}

ap_status ap_family_to_json(const ap_family *f, char **out) {
  AP_REQUIRE(f);
  AP_REQUIRE(out);
  return guarded([&] { *out = dup_string(format_family_json(f->family)); });
}

size_t ap_family_size(const ap_family *f) { return f ? f->family.size() : 0; }

ap_status ap_family_params(const ap_family *f, int *n, int *k, int *l) {
  AP_REQUIRE(f);
  const Params &p = f->family.params();
  if (n)
    *n = p.n;
  if (k)
    *k = p.k;
  if (l)
    *l = p.l;
  return AP_OK;
}

ap_status ap_family_member(const ap_family *f, size_t index, char **out) {
  AP_REQUIRE(f);
  AP_REQUIRE(out);
  if (index >= f->family.size())
    return fail_with(AP_ERR_RANGE, "member index out of range");
  return guarded([&] { *out = dup_string(format_vector(f->family[index])); });
}

ap_status ap_family_contains(const ap_family *f, const char *vector, int *out) {
  AP_REQUIRE(f);
  AP_REQUIRE(vector);
  AP_REQUIRE(out);
  return guarded([&] { *out = f->family.contains(parse_vector(vector)) ? 1 : 0; });
}

ap_status ap_family_is_antipodal_free(const ap_family *f, int *out) {
  AP_REQUIRE(f);
  AP_REQUIRE(out);
  return guarded([&] { *out = is_antipodal_free(f->family) ? 1 : 0; });
}

ap_status ap_family_permute(const ap_family *f, const int *images, size_t length,
                            ap_family **out) {
  AP_REQUIRE(f);
  AP_REQUIRE(images);
  AP_REQUIRE(out);
  return guarded(
      [&] { *out = wrap(apply_permutation(f->family, permutation_from(images, length))); });
}

// ---- bounds

ap_status ap_ekr_bound(int n, int k, uint64_t *out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = ekr_bound(n, k); });
}

ap_status ap_theorem1_bound(int n, int k, int l, uint64_t *out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = theorem1_bound(Params::make(n, k, l)); });
}

ap_status ap_theorem2_bound(int n, int k, int l, uint64_t *out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = theorem2_bound(Params::make(n, k, l)); });
}

ap_status ap_fk1_bound(int n, int k, uint64_t *out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = fk1_bound(n, k); });
}

ap_status ap_bound_table_json(int n, int k, int l, char **out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = dup_string(to_json(bound_table(Params::make(n, k, l))).dump()); });
}

// ---- set families

ap_status ap_verify_prop1(int m, int a, int b, char **report, uint64_t *counterexamples) {
  AP_REQUIRE(report);
  return guarded([&] {
    const Prop1Report r = verify_prop1_exhaustive(m, a, b, worker_threads.load());
    if (counterexamples)
      *counterexamples = r.counterexamples;
    *report = dup_string(to_json(r).dump());
  });
}

// ---- deletion pipeline

ap_status ap_lemma1_check(const ap_family *f, char **report, int *passed) {
  return trace_call(f, report, passed, lemma1_check);
}

ap_status ap_lemma2_check(const ap_family *f, char **report, int *passed) {
  return trace_call(f, report, passed, lemma2_check);
}

ap_status ap_certify_theorem1(const ap_family *f, char **report, int *passed) {
  return trace_call(f, report, passed, certify_theorem1);
}

ap_status ap_deletion_procedure(const ap_family *f, ap_family **fprime, char **report) {
  AP_REQUIRE(f);
  AP_REQUIRE(fprime);
  return guarded([&] {
    auto [survivors, r] = deletion_procedure(f->family);
    if (report)
      *report = dup_string(to_json(r).dump());
    *fprime = wrap(std::move(survivors));
  });
}

// ---- circle method

ap_status ap_lemma3_count(const ap_family *f, const int *images, size_t length, size_t *out) {
  AP_REQUIRE(f);
  AP_REQUIRE(images);
  AP_REQUIRE(out);
  return guarded([&] { *out = lemma3_count(f->family, permutation_from(images, length)); });
}

ap_status ap_lemma3_sweep(const ap_family *f, int exhaustive, uint64_t samples, uint64_t seed,
                          char **report, int *passed) {
  const SigmaSweep s = sweep_of(exhaustive, samples, seed);
  return circle_call(f, report, passed,
                     [&](const VectorFamily &fam) { return lemma3_sweep(fam, s); });
}

ap_status ap_double_count(const ap_family *f, int exhaustive, uint64_t samples, uint64_t seed,
                          char **report, int *passed) {
  const SigmaSweep s = sweep_of(exhaustive, samples, seed);
  return circle_call(f, report, passed,
                     [&](const VectorFamily &fam) { return double_count_check(fam, s); });
}

ap_status ap_certify_theorem2(const ap_family *f, uint64_t samples, uint64_t seed,
                              char **report, int *passed) {
  return circle_call(f, report, passed, [&](const VectorFamily &fam) {
    return theorem2_certify(fam, samples, seed);
  });
}

ap_status ap_max_intersecting_cyclic(int n, int k, int *out) {
  AP_REQUIRE(out);
  return guarded([&] { *out = max_intersecting_cyclic(n, k); });
}

// ---- exact search

ap_status ap_search_antipodal_free(int n, int k, int l, double budget_seconds,
                                   ap_search_result **out) {
  AP_REQUIRE(out);
  return guarded([&] {
    AntipodalSearch s = max_antipodal_free(Params::make(n, k, l), options_with_budget(budget_seconds));
    *out = new ap_search_result{std::move(s.result), std::move(s.witness)};
  });
}

ap_status ap_search_kneser(int n, int k, double budget_seconds, ap_search_result **out) {
  AP_REQUIRE(out);
  return guarded([&] {
    *out = new ap_search_result{max_intersecting(n, k, options_with_budget(budget_seconds)),
                                std::nullopt};
  });
}

void ap_search_result_free(ap_search_result *r) { delete r; }

uint64_t ap_search_result_optimum(const ap_search_result *r) {
  return r ? r->result.optimum : 0;
}

int ap_search_result_proven(const ap_search_result *r) {
  return r && r->result.proof_of_optimality ? 1 : 0;
}

uint64_t ap_search_result_nodes(const ap_search_result *r) {
  return r ? r->result.nodes_explored : 0;
}

double ap_search_result_elapsed(const ap_search_result *r) {
  return r ? r->result.elapsed.count() : 0.0;
}

ap_status ap_search_result_witness_text(const ap_search_result *r, char **out) {
  AP_REQUIRE(r);
  AP_REQUIRE(out);
  return guarded([&] {
    std::string text;
    for (const std::string &label : r->result.witness_labels)
      text += label + "\n";
    *out = dup_string(text);
  });
}

ap_status ap_search_result_witness_family(const ap_search_result *r, ap_family **out) {
  AP_REQUIRE(r);
  AP_REQUIRE(out);
  if (!r->witness)
    return fail_with(AP_ERR_PRECONDITION, "search result carries no vector family");
  return guarded([&] { *out = wrap(*r->witness); });
}

ap_status ap_search_result_json(const ap_search_result *r, int include_elapsed, char **out) {
  AP_REQUIRE(r);
  AP_REQUIRE(out);
  return guarded([&] {
    nlohmann::json j = to_json(r->result, include_elapsed != 0);
    if (r->witness)
      j["params"] = to_json(r->witness->params());
    *out = dup_string(j.dump());
  });
}

// ---- summary table

ap_status ap_table(int nmax, int kmax, double budget_seconds, int json, char **out) {
  AP_REQUIRE(out);
  return guarded([&] {
    const auto rows = build_table(nmax, kmax, options_with_budget(budget_seconds));
    *out = dup_string(json ? to_json(rows).dump() + "\n" : format_table(rows));
  });
}

} // extern "C"
