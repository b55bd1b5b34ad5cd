// Command-line front end over the C interface.
//
// Exit codes: 0 success, 1 a check found a violation, 2 usage or input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "antipodal/antipodal.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct ApiError {
  ap_status status;
  std::string message;
};

void check(ap_status status) {
  if (status != AP_OK)
    throw ApiError{status, ap_last_error()};
}

struct FamilyDeleter {
  void operator()(ap_family *f) const { ap_family_free(f); }
};
using Family = std::unique_ptr<ap_family, FamilyDeleter>;

struct ResultDeleter {
  void operator()(ap_search_result *r) const { ap_search_result_free(r); }
};
using Result = std::unique_ptr<ap_search_result, ResultDeleter>;

std::string take(char *s) {
  std::string out = s ? s : "";
  ap_string_free(s);
  return out;
}

Family load(const std::string &path) {
  ap_family *f = nullptr;
  check(ap_family_load(path.c_str(), &f));
  return Family(f);
}

std::string family_text(const ap_family *f, bool as_json) {
  char *s = nullptr;
  check(as_json ? ap_family_to_json(f, &s) : ap_family_to_text(f, &s));
  return take(s);
}

void emit(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os || !(os << text))
    throw ApiError{AP_ERR_IO, "cannot write " + path};
}

bool ends_with(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string params_string(const json &p) {
  return "(n=" + std::to_string(p["n"].get<int>()) + ", k=" + std::to_string(p["k"].get<int>()) +
         ", l=" + std::to_string(p["l"].get<int>()) + ")";
}

std::string value_string(const json &v) { return v.is_null() ? "n/a" : v.dump(); }

void print_violations(const json &report) {
  for (const auto &v : report["violations"])
    std::cout << "violation: " << v.get<std::string>() << "\n";
}

int verdict(bool passed) { return passed ? kExitOk : kExitViolation; }

struct ParamsArg {
  int n = 0, k = 0, l = 0;

  void add(CLI::App *app) {
    app->add_option("n", n, "dimension")->required();
    app->add_option("k", k, "number of +1 entries")->required();
    app->add_option("l", l, "number of -1 entries")->required();
  }
};

// ---- subcommand bodies

int run_enumerate(const ParamsArg &p, bool as_json, const std::string &out) {
  ap_family *f = nullptr;
  check(ap_family_enumerate(p.n, p.k, p.l, &f));
  Family family(f);
  emit(family_text(family.get(), as_json), out);
  return kExitOk;
}

int run_construct(const std::string &kind, const ParamsArg &p, bool as_json,
                  const std::string &out) {
  ap_construction c = kind == "example1" ? AP_EXAMPLE1 : kind == "example2" ? AP_EXAMPLE2 : AP_CIRCLE;
  ap_family *f = nullptr;
  check(ap_family_construct(c, p.n, p.k, p.l, &f));
  Family family(f);
  emit(family_text(family.get(), as_json), out);
  return kExitOk;
}

int run_bounds(const ParamsArg &p, bool as_json) {
  char *s = nullptr;
  check(ap_bound_table_json(p.n, p.k, p.l, &s));
  const json table = json::parse(take(s));
  if (as_json) {
    std::cout << table.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << params_string(table["params"]) << "\n";
  for (const auto &e : table["bounds"]) {
    std::string line = e["name"].get<std::string>();
    line.resize(6, ' ');
    line += value_string(e["value"]);
    if (e.contains("condition"))
      line += "  (" + e["condition"].get<std::string>() + ")";
    std::cout << line << "\n";
  }
  return kExitOk;
}

int run_prop1(int m, int a, int b, bool as_json) {
  char *s = nullptr;
  std::uint64_t counterexamples = 0;
  check(ap_verify_prop1(m, a, b, &s, &counterexamples));
  const json r = json::parse(take(s));
  if (as_json) {
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "m=" << m << " a=" << a << " b=" << b << "\n"
              << "a-families examined: " << r["a_families"] << "\n"
              << "pruned: " << r["pruned"] << "\n"
              << "cross-intersecting pairs: " << r["cross_intersecting_pairs"] << "\n"
              << "counterexamples: " << counterexamples << "\n";
  }
  return verdict(counterexamples == 0);
}

using TraceFn = ap_status (*)(const ap_family *, char **, int *);

int run_trace(const char *title, TraceFn fn, const std::string &path, bool trace) {
  Family family = load(path);
  char *s = nullptr;
  int passed = 0;
  check(fn(family.get(), &s, &passed));
  const json r = json::parse(take(s));
  if (trace) {
    std::cout << r.dump(2) << "\n";
    return verdict(passed);
  }
  std::cout << title << " " << params_string(r["params"]) << "\n"
            << "family size: " << r["input_size"] << "\n"
            << "antipodal-free: " << (r["antipodal_free"].get<bool>() ? "yes" : "no") << "\n";
  if (r.contains("lemma1"))
    std::cout << "pair checks: " << r["lemma1"]["pairs_checked"] << ", violations "
              << r["lemma1"]["violations"].size() << "\n";
  if (r.contains("deletion")) {
    const json &d = r["deletion"];
    std::cout << "deletion threshold: " << d["threshold"] << ", deleted " << d["deleted"]
              << ", survivors " << d["fprime_size"] << "\n";
  }
  if (r.contains("lemma2"))
    std::cout << "T-sets: " << r["lemma2"]["t_sets"].size() << ", cap per T "
              << r["lemma2"]["family_b_cap"] << "\n";
  if (!r["bound"].is_null())
    std::cout << "bound: " << r["bound"] << "\n";
  print_violations(r);
  std::cout << (passed ? "PASS" : "FAIL") << "\n";
  return verdict(passed);
}

struct SweepArgs {
  std::string family;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  bool as_json = false;

  void add(CLI::App *app) {
    app->add_option("--family", family, "family file (text or JSON)");
    app->add_option("--samples", samples, "random permutations to draw")->capture_default_str();
    app->add_option("--seed", seed, "seed for permutation sampling")->capture_default_str();
    app->add_flag("--exhaustive", exhaustive, "sweep all n! permutations (n <= 8)");
    app->add_flag("--json", as_json, "print the report as JSON");
  }
};

using SweepFn = ap_status (*)(const ap_family *, int, std::uint64_t, std::uint64_t, char **, int *);

Family family_for(const ParamsArg &p, const std::string &path, ap_construction fallback,
                  bool fallback_is_full) {
  check(ap_params_check(p.n, p.k, p.l));
  Family family;
  if (!path.empty()) {
    family = load(path);
    int n = 0, k = 0, l = 0;
    check(ap_family_params(family.get(), &n, &k, &l));
    if (n != p.n || k != p.k || l != p.l)
      throw ApiError{AP_ERR_SHAPE_MISMATCH, "family file does not match the given n k l"};
    return family;
  }
  ap_family *f = nullptr;
  check(fallback_is_full ? ap_family_enumerate(p.n, p.k, p.l, &f)
                         : ap_family_construct(fallback, p.n, p.k, p.l, &f));
  return Family(f);
}

void print_circle(const char *title, const json &r) {
  std::cout << title << " " << params_string(r["params"]) << "\n"
            << "family size: " << r["family_size"] << "\n"
            << "permutations: " << r["permutations"]
            << (r["exhaustive"].get<bool>() ? " (exhaustive)" : "") << "\n"
            << "max |H(sigma) & F|: " << r["max_count"] << "\n";
  if (r.contains("expected_sum")) {
    if (r["exhaustive"].get<bool>())
      std::cout << "sum: " << r["sum"] << ", expected " << r["expected_sum"] << "\n";
    else
      std::cout << "mean: " << r["mean"] << ", expected " << r["expected_mean"]
                << ", tolerance " << r["tolerance"] << "\n";
  }
  if (r.contains("bound"))
    std::cout << "bound: " << r["bound"] << "\n";
  print_violations(r);
  std::cout << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int run_sweep(const char *title, SweepFn fn, const Family &family, const SweepArgs &a) {
  char *s = nullptr;
  int passed = 0;
  check(fn(family.get(), a.exhaustive ? 1 : 0, a.samples, a.seed, &s, &passed));
  const json r = json::parse(take(s));
  if (a.as_json)
    std::cout << r.dump(2) << "\n";
  else
    print_circle(title, r);
  return verdict(passed);
}

int run_lemma3(const ParamsArg &p, const SweepArgs &a) {
  check(ap_params_check(p.n, p.k, p.l));
  if (p.n < 2 * p.k || p.n > 3 * p.k - p.l)
    throw ApiError{AP_ERR_REGIME, "lemma3 needs 2k <= n <= 3k-l; got n=" + std::to_string(p.n) +
                                      ", 2k=" + std::to_string(2 * p.k) +
                                      ", 3k-l=" + std::to_string(3 * p.k - p.l)};
  Family family = family_for(p, a.family, AP_EXAMPLE2, false);
  return run_sweep("lemma3", ap_lemma3_sweep, family, a);
}

int run_double_count(const ParamsArg &p, const SweepArgs &a) {
  Family family = family_for(p, a.family, AP_EXAMPLE2, true);
  return run_sweep("double-count", ap_double_count, family, a);
}

int run_thm2(const SweepArgs &a) {
  if (a.family.empty())
    throw ApiError{AP_ERR_PRECONDITION, "--family is required"};
  Family family = load(a.family);
  char *s = nullptr;
  int passed = 0;
  check(ap_certify_theorem2(family.get(), a.samples, a.seed, &s, &passed));
  const json r = json::parse(take(s));
  if (a.as_json)
    std::cout << r.dump(2) << "\n";
  else
    print_circle("thm2", r);
  return verdict(passed);
}

int run_search(const std::vector<int> &args, bool kneser, double budget,
               const std::string &witness, bool as_json) {
  ap_search_result *raw = nullptr;
  if (kneser) {
    if (args.size() != 2)
      throw ApiError{AP_ERR_INVALID_PARAMS, "search --kneser takes n k"};
    check(ap_search_kneser(args[0], args[1], budget, &raw));
  } else {
    if (args.size() != 3)
      throw ApiError{AP_ERR_INVALID_PARAMS, "search takes n k l"};
    check(ap_search_antipodal_free(args[0], args[1], args[2], budget, &raw));
  }
  Result result(raw);
  std::cerr << "elapsed: " << ap_search_result_elapsed(result.get()) << " s\n";

  std::string witness_body;
  if (kneser) {
    char *s = nullptr;
    check(ap_search_result_witness_text(result.get(), &s));
    witness_body = take(s);
  } else {
    ap_family *f = nullptr;
    check(ap_search_result_witness_family(result.get(), &f));
    Family family(f);
    witness_body = family_text(family.get(), ends_with(witness, ".json"));
  }

  if (as_json) {
    char *s = nullptr;
    check(ap_search_result_json(result.get(), 0, &s));
    std::cout << json::parse(take(s)).dump(2) << "\n";
  } else {
    std::cout << "optimum " << ap_search_result_optimum(result.get()) << "\n"
              << "proven " << (ap_search_result_proven(result.get()) ? "yes" : "no") << "\n"
              << "nodes " << ap_search_result_nodes(result.get()) << "\n";
    if (witness.empty())
      std::cout << witness_body;
  }
  if (!witness.empty())
    emit(witness_body, witness);
  return kExitOk;
}

int run_table(int nmax, int kmax, double budget, bool as_json) {
  char *s = nullptr;
  check(ap_table(nmax, kmax, budget, as_json ? 1 : 0, &s));
  std::cout << take(s);
  return kExitOk;
}

int thread_default() {
  if (const char *env = std::getenv("ANTIPODAL_THREADS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception &) {
      throw ApiError{AP_ERR_INVALID_PARAMS, "ANTIPODAL_THREADS is not an integer"};
    }
  }
  return 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Antipodal-free families of signed vectors: constructions, bounds, certificates "
               "and exact search."};
  app.require_subcommand(1);
  std::optional<int> threads;
  app.add_option("--threads", threads,
                 "worker threads for parallel sweeps (default: $ANTIPODAL_THREADS or 1)");

  ParamsArg p;
  bool as_json = false;
  bool trace = false;
  std::string out;
  std::string family_path;

  auto *enumerate = app.add_subcommand("enumerate", "list V(n,k,l) in canonical order");
  p.add(enumerate);
  enumerate->add_flag("--json", as_json, "JSON output");
  enumerate->add_option("-o,--output", out, "write to FILE instead of stdout");

  std::string kind;
  auto *construct = app.add_subcommand("construct", "build example1, example2 or the circle family");
  construct->add_option("kind", kind, "example1 | example2 | circle")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "circle"}));
  p.add(construct);
  construct->add_flag("--json", as_json, "JSON output");
  construct->add_option("-o,--output", out, "write to FILE instead of stdout");

  auto *bounds = app.add_subcommand("bounds", "all applicable upper and lower bounds");
  p.add(bounds);
  bounds->add_flag("--json", as_json, "JSON output");

  auto *verify = app.add_subcommand("verify", "run one of the finite checks");
  verify->require_subcommand(1);

  int m = 0, a = 0, b = 0;
  auto *prop1 = verify->add_subcommand("prop1", "exhaustive cross-intersecting family check");
  prop1->add_option("m", m, "ground set size")->required();
  prop1->add_option("a", a, "uniformity of the first family")->required();
  prop1->add_option("b", b, "uniformity of the second family")->required();
  prop1->add_flag("--json", as_json, "JSON output");

  auto *lemma1 = verify->add_subcommand("lemma1", "pairwise check over (l,k)-support splits");
  lemma1->add_option("--family", family_path, "family file")->required();
  lemma1->add_flag("--trace", trace, "print the full report as JSON");

  auto *lemma2 = verify->add_subcommand("lemma2", "deletion procedure and per-T intersecting check");
  lemma2->add_option("--family", family_path, "family file")->required();
  lemma2->add_flag("--trace", trace, "print the full report as JSON");

  SweepArgs sweep;
  auto *lemma3 = verify->add_subcommand("lemma3", "at most k circle vectors per permutation");
  p.add(lemma3);
  sweep.add(lemma3);

  auto *dcount = verify->add_subcommand("double-count", "sum over permutations of |H(sigma) & F|");
  p.add(dcount);
  sweep.add(dcount);

  std::vector<int> search_args;
  bool kneser = false;
  double budget = 60.0;
  std::string witness;
  auto *search = app.add_subcommand("search", "exact maximum antipodal-free family");
  search->add_option("params", search_args, "n k l, or n k with --kneser")->required()->expected(2, 3);
  search->add_flag("--kneser", kneser, "maximum intersecting family of k-sets of [n]");
  search->add_option("--budget", budget, "time budget in seconds")->capture_default_str();
  search->add_option("--witness", witness, "write the witness family to FILE (.json for JSON)");
  search->add_flag("--json", as_json, "JSON output");

  auto *certify = app.add_subcommand("certify", "certify an upper bound for a given family");
  certify->require_subcommand(1);
  auto *thm1 = certify->add_subcommand("thm1", "full deletion-method certificate");
  thm1->add_option("--family", family_path, "family file")->required();
  thm1->add_flag("--trace", trace, "print the full report as JSON");
  SweepArgs thm2_args;
  auto *thm2 = certify->add_subcommand("thm2", "circle-method certificate");
  thm2->add_option("--family", thm2_args.family, "family file")->required();
  thm2->add_option("--samples", thm2_args.samples, "random permutations to draw")->capture_default_str();
  thm2->add_option("--seed", thm2_args.seed, "seed for permutation sampling")->capture_default_str();
  thm2->add_flag("--json", thm2_args.as_json, "print the report as JSON");

  int nmax = 0, kmax = 0;
  double table_budget = 10.0;
  auto *table = app.add_subcommand("table", "exact values against every bound");
  table->add_option("nmax", nmax, "largest n")->required();
  table->add_option("kmax", kmax, "largest k")->required();
  table->add_option("--budget", table_budget, "per-instance time budget in seconds")
      ->capture_default_str();
  table->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    check(ap_set_threads(threads ? *threads : thread_default()));
    if (*enumerate)
      return run_enumerate(p, as_json, out);
    if (*construct)
      return run_construct(kind, p, as_json, out);
    if (*bounds)
      return run_bounds(p, as_json);
    if (*prop1)
      return run_prop1(m, a, b, as_json);
    if (*lemma1)
      return run_trace("lemma1", ap_lemma1_check, family_path, trace);
    if (*lemma2)
      return run_trace("lemma2", ap_lemma2_check, family_path, trace);
    if (*lemma3)
      return run_lemma3(p, sweep);
    if (*dcount)
      return run_double_count(p, sweep);
    if (*search)
      return run_search(search_args, kneser, budget, witness, as_json);
    if (*thm1)
      return run_trace("thm1", ap_certify_theorem1, family_path, trace);
    if (*thm2)
      return run_thm2(thm2_args);
    if (*table)
      return run_table(nmax, kmax, table_budget, as_json);
  } catch (const ApiError &e) {
    std::cerr << "error: " << ap_status_name(e.status) << ": " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
