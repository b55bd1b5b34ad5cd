// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "antipodal/antipodal.h"

using nlohmann::json;

namespace {

std::string take(char *s) {
  std::string out = s ? s : "";
  ap_string_free(s);
  return out;
}

ap_family *construct(ap_construction kind, int n, int k, int l) {
  ap_family *f = nullptr;
  REQUIRE(ap_family_construct(kind, n, k, l, &f) == AP_OK);
  return f;
}

} // namespace

TEST_CASE("status reporting") {
  CHECK(std::string(ap_version()) == "0.1.0");
  CHECK(ap_params_check(4, 2, 1) == AP_OK);
  CHECK(std::string(ap_last_error()).empty());
  CHECK(ap_params_check(4, 1, 2) == AP_ERR_INVALID_PARAMS);
  CHECK_FALSE(std::string(ap_last_error()).empty());
  CHECK(std::string(ap_status_name(AP_ERR_REGIME)) == "RegimeError");
  CHECK(ap_cardinality(4, 2, 1, nullptr) == AP_ERR_NULL_ARGUMENT);
}

TEST_CASE("errors are per thread") {
  CHECK(ap_params_check(0, 0, 0) == AP_ERR_INVALID_PARAMS);
  std::string other;
  std::thread([&] { other = ap_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(ap_last_error()).empty());
}

TEST_CASE("counting and vectors") {
  std::uint64_t v = 0;
  CHECK(ap_cardinality(6, 2, 2, &v) == AP_OK);
  CHECK(v == 90);
  CHECK(ap_antipodal_degree(5, 2, 1, &v) == AP_OK);
  CHECK(v == 4);
  int s = 0;
  CHECK(ap_scalar_product("++-0", "-0++", &s) == AP_OK);
  CHECK(s == -2);
  CHECK(ap_scalar_product("++-0", "+-0", &s) == AP_ERR_DIMENSION_MISMATCH);
  CHECK(ap_scalar_product("+x-0", "++-0", &s) == AP_ERR_BAD_CHARACTER);
  int a = 0;
  CHECK(ap_is_antipodal("++-0", "0-++", &a) == AP_OK);
  CHECK(a == 1);
  CHECK(ap_is_antipodal("++-0", "++-0", &a) == AP_OK);
  CHECK(a == 0);
}

TEST_CASE("family handles") {
  ap_family *f = nullptr;
  REQUIRE(ap_family_new(4, 2, 1, &f) == AP_OK);
  int inserted = 0;
  CHECK(ap_family_add(f, "++-0", &inserted) == AP_OK);
  CHECK(inserted == 1);
  CHECK(ap_family_add(f, "++-0", &inserted) == AP_OK);
  CHECK(inserted == 0);
  CHECK(ap_family_add(f, "+--0", &inserted) == AP_ERR_SHAPE_MISMATCH);
  CHECK(ap_family_size(f) == 1);
  char *m = nullptr;
  CHECK(ap_family_member(f, 0, &m) == AP_OK);
  CHECK(take(m) == "++-0");
  CHECK(ap_family_member(f, 5, &m) == AP_ERR_RANGE);
  int n = 0, k = 0, l = 0;
  CHECK(ap_family_params(f, &n, &k, &l) == AP_OK);
  CHECK((n == 4 && k == 2 && l == 1));
  const int swap[] = {1, 2, 4, 3};
  ap_family *g = nullptr;
  CHECK(ap_family_permute(f, swap, 4, &g) == AP_OK);
  int c = 0;
  CHECK(ap_family_contains(g, "++0-", &c) == AP_OK);
  CHECK(c == 1);
  const int bad[] = {1, 1, 2, 3};
  ap_family *h = nullptr;
  CHECK(ap_family_permute(f, bad, 4, &h) == AP_ERR_INVALID_PERMUTATION);
  CHECK(h == nullptr);
  ap_family_free(g);
  ap_family_free(f);
  ap_family_free(nullptr);
}

TEST_CASE("constructions, text and json") {
  ap_family *e = construct(AP_EXAMPLE1, 4, 2, 1);
  char *text = nullptr;
  REQUIRE(ap_family_to_text(e, &text) == AP_OK);
  CHECK(take(text) == "V 4 2 1\n++-0\n++0-\n+0+-\n0++-\n");
  char *js = nullptr;
  REQUIRE(ap_family_to_json(e, &js) == AP_OK);
  const std::string doc = take(js);
  CHECK(json::parse(doc)["vectors"].size() == 4);
  ap_family *back = nullptr;
  REQUIRE(ap_family_parse(doc.c_str(), &back) == AP_OK);
  CHECK(ap_family_size(back) == 4);
  int free_ = 0;
  CHECK(ap_family_is_antipodal_free(back, &free_) == AP_OK);
  CHECK(free_ == 1);
  ap_family_free(back);
  ap_family_free(e);

  ap_family *h = nullptr;
  CHECK(ap_family_construct(AP_CIRCLE, 5, 3, 1, &h) == AP_ERR_REGIME);
  CHECK(ap_family_construct(static_cast<ap_construction>(9), 5, 2, 1, &h) == AP_ERR_UNKNOWN_KIND);
  CHECK(ap_family_parse("V 4 2 1\n++-0\n++-0\n", &h) == AP_ERR_PARSE);
  CHECK(ap_family_load("/nonexistent/x.txt", &h) == AP_ERR_IO);
}

TEST_CASE("file round trip") {
  ap_family *e = construct(AP_EXAMPLE2, 5, 2, 1);
  const std::string path = "capi_roundtrip.json";
  REQUIRE(ap_family_save(e, path.c_str(), 1) == AP_OK);
  ap_family *back = nullptr;
  REQUIRE(ap_family_load(path.c_str(), &back) == AP_OK);
  CHECK(ap_family_size(back) == 12);
  std::remove(path.c_str());
  ap_family_free(back);
  ap_family_free(e);
}

TEST_CASE("bounds") {
  std::uint64_t v = 0;
  CHECK(ap_theorem1_bound(4, 2, 1, &v) == AP_OK);
  CHECK(v == 16);
  CHECK(ap_theorem2_bound(7, 3, 1, &v) == AP_OK);
  CHECK(v == 60);
  CHECK(ap_theorem2_bound(9, 3, 1, &v) == AP_ERR_REGIME);
  CHECK(ap_fk1_bound(6, 2, &v) == AP_OK);
  CHECK(v == 22);
  CHECK(ap_ekr_bound(6, 3, &v) == AP_OK);
  CHECK(v == 10);
  char *t = nullptr;
  REQUIRE(ap_bound_table_json(4, 2, 1, &t) == AP_OK);
  const json table = json::parse(take(t));
  CHECK(table["bounds"][0]["name"] == "V");
  CHECK(table["bounds"][0]["value"] == 12);
}

TEST_CASE("verifiers") {
  char *r = nullptr;
  std::uint64_t counterexamples = 7;
  CHECK(ap_set_threads(2) == AP_OK);
  CHECK(ap_get_threads() == 2);
  REQUIRE(ap_verify_prop1(4, 2, 2, &r, &counterexamples) == AP_OK);
  CHECK(counterexamples == 0);
  CHECK(json::parse(take(r))["passed"] == true);
  CHECK(ap_verify_prop1(3, 2, 2, &r, &counterexamples) == AP_ERR_PRECONDITION);
  CHECK(ap_set_threads(0) == AP_OK);
  CHECK(ap_get_threads() == 1);
  CHECK(ap_set_threads(-1) == AP_ERR_PRECONDITION);

  ap_family *e = construct(AP_EXAMPLE1, 4, 2, 1);
  int passed = 0;
  REQUIRE(ap_certify_theorem1(e, &r, &passed) == AP_OK);
  CHECK(passed == 1);
  const json cert = json::parse(take(r));
  CHECK(cert["deletion"]["fprime_size"] == 3);
  CHECK(cert["bound"] == 16);
  REQUIRE(ap_lemma1_check(e, &r, &passed) == AP_OK);
  CHECK(passed == 1);
  ap_string_free(r);
  REQUIRE(ap_lemma2_check(e, &r, &passed) == AP_OK);
  CHECK(passed == 1);
  ap_string_free(r);
  ap_family *fprime = nullptr;
  REQUIRE(ap_deletion_procedure(e, &fprime, nullptr) == AP_OK);
  CHECK(ap_family_size(fprime) == 3);
  ap_family_free(fprime);
  ap_family_free(e);

  ap_family *v = nullptr;
  REQUIRE(ap_family_enumerate(4, 2, 1, &v) == AP_OK);
  REQUIRE(ap_certify_theorem1(v, &r, &passed) == AP_OK);
  CHECK(passed == 0);
  ap_string_free(r);
  const int id[] = {1, 2, 3, 4};
  std::size_t count = 0;
  CHECK(ap_lemma3_count(v, id, 4, &count) == AP_OK);
  CHECK(count == 4);
  REQUIRE(ap_double_count(v, 1, 0, 0, &r, &passed) == AP_OK);
  CHECK(passed == 1);
  CHECK(json::parse(take(r))["sum"] == 96);
  REQUIRE(ap_certify_theorem2(v, 10, 1, &r, &passed) == AP_OK);
  CHECK(passed == 0);
  ap_string_free(r);
  ap_family_free(v);

  ap_family *e2 = construct(AP_EXAMPLE2, 9, 3, 1);
  CHECK(ap_certify_theorem2(e2, 10, 1, &r, &passed) == AP_ERR_REGIME);
  CHECK(ap_lemma3_sweep(e2, 0, 50, 1, &r, &passed) == AP_OK);
  ap_string_free(r);
  ap_family_free(e2);

  int c = 0;
  CHECK(ap_max_intersecting_cyclic(7, 3, &c) == AP_OK);
  CHECK(c == 3);
}

TEST_CASE("search handles") {
  ap_search_result *r = nullptr;
  REQUIRE(ap_search_antipodal_free(6, 2, 1, 0, &r) == AP_OK);
  CHECK(ap_search_result_optimum(r) == 22);
  CHECK(ap_search_result_proven(r) == 1);
  CHECK(ap_search_result_nodes(r) > 0);
  ap_family *w = nullptr;
  REQUIRE(ap_search_result_witness_family(r, &w) == AP_OK);
  CHECK(ap_family_size(w) == 22);
  int free_ = 0;
  CHECK(ap_family_is_antipodal_free(w, &free_) == AP_OK);
  CHECK(free_ == 1);
  ap_family_free(w);
  char *js = nullptr;
  REQUIRE(ap_search_result_json(r, 0, &js) == AP_OK);
  const json doc = json::parse(take(js));
  CHECK(doc["optimum"] == 22);
  CHECK_FALSE(doc.contains("elapsed_seconds"));
  ap_search_result_free(r);

  REQUIRE(ap_search_kneser(6, 3, 0, &r) == AP_OK);
  CHECK(ap_search_result_optimum(r) == 10);
  CHECK(ap_search_result_witness_family(r, &w) == AP_ERR_PRECONDITION);
  char *text = nullptr;
  REQUIRE(ap_search_result_witness_text(r, &text) == AP_OK);
  CHECK(take(text).find("{1,") != std::string::npos);
  ap_search_result_free(r);
  CHECK(ap_search_kneser(5, 3, 0, &r) == AP_ERR_REGIME);
  CHECK(ap_search_antipodal_free(12, 4, 3, 0, &r) == AP_ERR_TOO_LARGE);
}

TEST_CASE("table") {
  char *out = nullptr;
  REQUIRE(ap_table(5, 2, 5, 1, &out) == AP_OK);
  const json rows = json::parse(take(out));
  CHECK(rows.size() > 3);
  REQUIRE(ap_table(4, 2, 5, 0, &out) == AP_OK);
  CHECK(take(out).rfind("  n  k  l", 0) == 0);
}
