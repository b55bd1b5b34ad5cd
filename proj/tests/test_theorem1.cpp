#include <doctest.h>

#include <algorithm>
#include <random>

#include "antipodal/bounds.hpp"
#include "antipodal/constructions.hpp"
#include "antipodal/search.hpp"
#include "antipodal/theorem1.hpp"
#include "oracle.hpp"

using namespace antipodal;

namespace {

Params P(int n, int k, int l) { return Params::make(n, k, l); }

std::vector<IndexSet> members(const SetFamily &f) {
  std::vector<IndexSet> out(f.begin(), f.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Deletion rule replayed on strings: v goes when some l-set A in S+(v) with
// B = S-(v) has at most `threshold` vectors u in f with S-(u) = B, A in S+(u).
std::vector<std::string> oracle_survivors(const std::vector<std::string> &f, int l,
                                          std::uint64_t threshold) {
  auto positions = [](const std::string &v, char c) {
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == c)
        out.push_back(static_cast<int>(i));
    return out;
  };
  std::vector<std::string> out;
  for (const std::string &v : f) {
    const auto plus = positions(v, '+');
    const auto minus = positions(v, '-');
    bool deleted = false;
    for (const auto &choice : oracle::subsets(static_cast<int>(plus.size()), l)) {
      std::uint64_t count = 0;
      for (const std::string &u : f) {
        if (positions(u, '-') != minus)
          continue;
        bool contains = true;
        for (int c : choice)
          contains = contains && u[plus[c - 1]] == '+';
        count += contains ? 1 : 0;
      }
      deleted = deleted || count <= threshold;
    }
    if (!deleted)
      out.push_back(v);
  }
  return out;
}

std::vector<std::string> texts(const VectorFamily &f) {
  std::vector<std::string> out;
  for (const SignedVector &v : f)
    out.push_back(format_vector(v));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("subfamily examples") {
  const VectorFamily e1 = example1(P(4, 2, 1));
  CHECK(members(subfamily(e1, IndexSet{1}, IndexSet{4})) ==
        std::vector<IndexSet>{IndexSet{2}, IndexSet{3}});
  CHECK(members(subfamily(e1, IndexSet{1}, IndexSet{3})) == std::vector<IndexSet>{IndexSet{2}});
  CHECK(subfamily(VectorFamily(P(4, 2, 1)), IndexSet{1}, IndexSet{3}).empty());
  for (auto [a, b] : std::vector<std::pair<IndexSet, IndexSet>>{
           {IndexSet{1, 2}, IndexSet{3}}, {IndexSet{1}, IndexSet{1}}}) {
    try {
      subfamily(e1, a, b);
      FAIL("no error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::BadPair);
    }
  }
}

TEST_CASE("lemma1 examples") {
  const TraceReport ok = lemma1_check(example1(P(6, 3, 1)));
  CHECK(ok.lemma1_violations.empty());
  CHECK(ok.passed());
  const TraceReport bad = lemma1_check(enumerate_v(P(4, 2, 1)));
  REQUIRE_FALSE(bad.lemma1_violations.empty());
  for (const Lemma1Violation &v : bad.lemma1_violations) {
    CHECK(v.product == -2);
    CHECK(scalar_product(v.v, v.w) == -2);
    CHECK(v.v.plus() == (v.a | v.c));
    CHECK(v.v.minus() == v.b);
    CHECK(v.w.plus() == (v.b | v.d));
    CHECK(v.w.minus() == v.a);
  }
  CHECK_FALSE(bad.passed());
  CHECK(lemma1_check(VectorFamily(P(4, 2, 1))).passed());
}

TEST_CASE("deletion hand trace at (4,2,1)") {
  auto [fprime, report] = deletion_procedure(example1(P(4, 2, 1)));
  CHECK(report.pair_count == 12);
  CHECK(report.pairs.size() == 12);
  CHECK(report.threshold == 1);
  CHECK(fprime.size() == 3);
  CHECK_FALSE(fprime.contains(parse_vector("++-0")));
  CHECK(report.deleted == 1);
  CHECK(report.fprime_size == 3);
  CHECK(report.deletion_lower_bound == 4 - 12);
  CHECK(report.survivor_property);
  for (std::size_t i = 1; i < report.pairs.size(); ++i) {
    const PairTrace &x = report.pairs[i - 1], &y = report.pairs[i];
    CHECK((lex_less(x.a, y.a) || (x.a == y.a && lex_less(x.b, y.b))));
  }

  CHECK(members(family_b(fprime, IndexSet{1, 2, 4})) == std::vector<IndexSet>{IndexSet{4}});
  CHECK(family_b(fprime, IndexSet{1, 2, 3}).empty());
  try {
    family_b(fprime, IndexSet{1, 2});
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::BadT);
  }
}

TEST_CASE("deletion on empty and k = l families") {
  auto [empty_prime, empty_report] = deletion_procedure(VectorFamily(P(4, 2, 1)));
  CHECK(empty_prime.empty());
  CHECK(empty_report.passed());

  const VectorFamily e = example1(P(6, 2, 2));
  auto [fprime, report] = deletion_procedure(e);
  CHECK(report.threshold == 0);
  CHECK(report.deletion_lower_bound == static_cast<long long>(e.size()));
  CHECK(fprime.size() == e.size());
}

TEST_CASE("deletion matches the string replay") {
  std::mt19937_64 rng(5);
  for (auto [n, k, l] : std::vector<std::array<int, 3>>{
           {4, 2, 1}, {5, 2, 1}, {6, 3, 1}, {6, 3, 2}, {7, 3, 1}, {6, 2, 2}}) {
    const Params p = P(n, k, l);
    const Count threshold = oracle::choose(n - 2 * l - 1, k - l - 1);
    std::vector<VectorFamily> inputs{example1(p), example2(p)};
    VectorFamily random(p);
    for (const SignedVector &v : enumerate_v(p))
      if (rng() % 2)
        random.insert(v);
    inputs.push_back(random);
    for (const VectorFamily &f : inputs) {
      auto [fprime, report] = deletion_procedure(f);
      std::vector<std::string> words = texts(f);
      CHECK(texts(fprime) == oracle_survivors(words, l, threshold));
      CHECK(fprime.size() == f.size() - report.deleted);
      std::size_t total = 0;
      for (const PairTrace &t : report.pairs) {
        CHECK(t.newly_deleted <= threshold);
        total += t.newly_deleted;
      }
      CHECK(total == report.deleted);
      CHECK(report.survivor_property);
    }
  }
}

TEST_CASE("certify examples") {
  const TraceReport a = certify_theorem1(example1(P(4, 2, 1)));
  CHECK(a.passed());
  CHECK(a.bound == 16);
  const TraceReport b = certify_theorem1(example2(P(5, 2, 1)));
  CHECK(b.passed());
  CHECK(b.bound == 30);
  const TraceReport c = certify_theorem1(enumerate_v(P(4, 2, 1)));
  CHECK_FALSE(c.passed());
  CHECK_FALSE(c.antipodal_free);
  CHECK(c.antipodal_pair);
  CHECK_FALSE(c.deletion_ran);
}

TEST_CASE("pipeline invariants on constructions and search witnesses") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= k && k + l <= n; ++l) {
        const Params p = P(n, k, l);
        std::vector<VectorFamily> inputs{example1(p), example2(p)};
        if (n <= 6 && p.nontrivial_regime())
          inputs.push_back(max_antipodal_free(p).witness);
        for (const VectorFamily &f : inputs) {
          const TraceReport r = certify_theorem1(f);
          CHECK_MESSAGE(r.passed(), p.to_string());
          CHECK(r.lemma1_violations.empty());
          for (const TSetTrace &t : r.t_sets) {
            CHECK(t.intersecting);
            CHECK(t.family_b_size <= oracle::choose(k + l - 1, l - 1));
          }
          CHECK(f.size() <= theorem1_bound(p));
        }
      }
}

TEST_CASE("below n = 2k the family B need not be intersecting") {
  // No two vectors are antipodal when n < 2k, so all of V qualifies.
  const VectorFamily v = enumerate_v(P(5, 3, 1));
  REQUIRE(is_antipodal_free(v));
  REQUIRE(max_antipodal_free(P(5, 3, 1)).result.optimum == v.size());
  const TraceReport r = certify_theorem1(v);
  CHECK_FALSE(r.passed());
  bool non_intersecting = false;
  for (const TSetTrace &t : r.t_sets)
    non_intersecting = non_intersecting || !t.intersecting;
  CHECK(non_intersecting);
  CHECK(v.size() <= theorem1_bound(P(5, 3, 1)));
}
