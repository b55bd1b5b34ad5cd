// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antipodal/bounds.hpp"
#include "antipodal/circle.hpp"
#include "antipodal/constructions.hpp"
#include "antipodal/search.hpp"
#include "antipodal/setfamilies.hpp"
#include "antipodal/theorem1.hpp"
#include "oracle.hpp"

using namespace antipodal;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string &what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

Params P(int n, int k, int l) { return Params::make(n, k, l); }

template <class Fn> void for_params(int nmax, int kmax, Fn fn) {
  for (int n = 2; n <= nmax; ++n)
    for (int k = 1; k <= std::min(kmax, n - 1); ++k)
      for (int l = 1; l <= k && k + l <= n; ++l)
        fn(n, k, l);
}

int failures = 0;

void criterion(int id, const char *title, double limit_seconds, const std::function<Outcome()> &body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception &e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (out.ok && seconds > limit_seconds) {
    out.ok = false;
    out.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds);
  }
  failures += out.ok ? 0 : 1;
  std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title,
              seconds, out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

SearchResult solve(const Params &p, double budget = 60) {
  SearchOptions o;
  o.budget = std::chrono::duration<double>(budget);
  const AntipodalSearch s = max_antipodal_free(p, o);
  std::vector<std::string> words;
  for (const SignedVector &v : s.witness)
    words.push_back(format_vector(v));
  if (words.size() != s.result.optimum || !oracle::antipodal_free(words, p.l))
    throw std::runtime_error("witness failed the independent check at " + p.to_string());
  return s.result;
}

Outcome exact_equals(const Params &p, std::uint64_t expected, double limit) {
  Outcome out;
  const auto start = Clock::now();
  const SearchResult r = solve(p);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.require(r.proof_of_optimality, "search not proven at " + p.to_string());
  out.require(r.optimum == expected, "alpha" + p.to_string() + " = " + std::to_string(r.optimum) +
                                         ", expected " + std::to_string(expected));
  out.require(seconds < limit, p.to_string() + " took " + std::to_string(seconds) + " s");
  return out;
}

} // namespace

int main() {
  criterion(1, "alpha(4,2,1) = 6 and alpha(5,2,1) = 12 match the thm2 bound", 2.0, [] {
    Outcome out;
    out.require(theorem2_bound(P(4, 2, 1)) == 6 && theorem2_bound(P(5, 2, 1)) == 12,
                "thm2 bound values");
    for (const Params &p : {P(4, 2, 1), P(5, 2, 1)}) {
      const Outcome e = exact_equals(p, theorem2_bound(p), 1.0);
      out.require(e.ok, e.detail);
    }
    return out;
  });

  criterion(2, "alpha(4,2,1) = 6 and alpha(6,2,1) = 22 match the l = 1 bound", 60.0, [] {
    Outcome out;
    const std::uint64_t six = 2 * oracle::choose(3, 2);
    const std::uint64_t twenty_two = 2 * oracle::choose(3, 2) + oracle::choose(4, 2) + oracle::choose(5, 2);
    out.require(fk1_bound(4, 2) == six && fk1_bound(6, 2) == twenty_two, "fk1 closed form");
    for (auto [p, expected] : {std::pair{P(4, 2, 1), six}, std::pair{P(6, 2, 1), twenty_two}}) {
      const Outcome e = exact_equals(p, expected, 60.0);
      out.require(e.ok, e.detail);
    }
    return out;
  });

  criterion(3, "alpha(6,2,2) = 45 = thm1 bound = |example1(6,2,2)|", 10.0, [] {
    Outcome out;
    const Params p = P(6, 2, 2);
    const std::uint64_t expected = oracle::choose(6, 4) * oracle::choose(3, 1);
    out.require(theorem1_bound(p) == expected, "thm1 bound");
    out.require(example1(p).size() == expected, "example 1 size");
    const Outcome e = exact_equals(p, expected, 10.0);
    out.require(e.ok, e.detail);
    return out;
  });

  criterion(4, "antipodal degree C(k,l) C(n-k-l,k-l) by brute force, n <= 9, k <= 4", 60.0, [] {
    Outcome out;
    std::size_t vertices = 0;
    std::vector<std::string> disagreements;
    bool k_eq_l_all_differ = true;
    for_params(9, 4, [&](int n, int k, int l) {
      const Params p = P(n, k, l);
      const std::uint64_t formula = oracle::choose(k, l) * oracle::choose(n - k - l, k - l);
      const std::uint64_t printed = oracle::choose(k, l) * oracle::choose(n - k - l, k - 2 * l);
      out.require(antipodal_degree(p) == formula, "library degree at " + p.to_string());
      const auto words = oracle::vectors(n, k, l);
      const Graph g = antipodality_graph(p);
      for (std::size_t i = 0; i < words.size(); ++i) {
        std::uint64_t count = 0;
        for (const std::string &w : words)
          count += oracle::antipodal(words[i], w, l) ? 1 : 0;
        out.require(count == formula, "vertex " + words[i] + " has degree " + std::to_string(count));
        out.require(g.degree(i) == formula, "graph degree at " + p.to_string());
        ++vertices;
      }
      if (printed != formula)
        disagreements.push_back(p.to_string());
      if (k == l && printed == formula)
        k_eq_l_all_differ = false;
    });
    const bool at_521 = std::find(disagreements.begin(), disagreements.end(),
                                  P(5, 2, 1).to_string()) != disagreements.end();
    out.require(at_521, "printed k-2l exponent expected to disagree at (5,2,1)");
    out.require(k_eq_l_all_differ, "printed k-2l exponent expected to disagree at every k = l");
    if (out.ok)
      out.detail = std::to_string(vertices) + " vertices checked; the k-2l exponent disagrees at " +
                   std::to_string(disagreements.size()) + " parameter sets, including (5,2,1) and every k = l";
    return out;
  });

  criterion(5, "maximum intersecting families: (4,2) 3, (5,2) 4, (6,3) 10", 10.0, [] {
    Outcome out;
    for (auto [n, k, expected] : {std::array{4, 2, 3}, std::array{5, 2, 4}, std::array{6, 3, 10}}) {
      const SearchResult r = max_intersecting(n, k);
      out.require(r.proof_of_optimality, "not proven");
      out.require(r.optimum == static_cast<std::size_t>(expected) &&
                      ekr_bound(n, k) == static_cast<Count>(expected),
                  "value at (" + std::to_string(n) + "," + std::to_string(k) + ")");
      const auto sets = oracle::subsets(n, k);
      out.require(oracle::max_independent(sets.size(),
                                          [&](std::size_t a, std::size_t b) {
                                            return !oracle::meets(sets[a], sets[b]);
                                          }) == static_cast<std::size_t>(expected),
                  "subset oracle");
    }
    return out;
  });

  criterion(6, "cross-intersecting disjunction: no counterexample at (4,2,2) and (5,2,3)", 600.0, [] {
    Outcome out;
    for (auto [m, a, b] : {std::array{4, 2, 2}, std::array{5, 2, 3}}) {
      const Prop1Report r = verify_prop1_exhaustive(m, a, b);
      out.require(r.counterexamples == 0, "counterexample found");
      out.require(r.a_families == (std::uint64_t{1} << oracle::choose(m, a)), "incomplete sweep");
    }
    return out;
  });

  criterion(7, "deletion-method certificate on both examples, n <= 8, k <= 3; (4,2,1) trace", 300.0, [] {
    Outcome out;
    std::size_t certified = 0;
    for_params(8, 3, [&](int n, int k, int l) {
      const Params p = P(n, k, l);
      for (const VectorFamily &f : {example1(p), example2(p)}) {
        const TraceReport r = certify_theorem1(f);
        out.require(r.passed(), "certificate failed at " + p.to_string() +
                                    (r.violations.empty() ? "" : ": " + r.violations.front()));
        ++certified;
      }
    });
    auto [fprime, trace] = deletion_procedure(example1(P(4, 2, 1)));
    out.require(fprime.size() == 3, "F' size at (4,2,1)");
    out.require(!fprime.contains(parse_vector("++-0")), "++-0 should be deleted");
    out.require(family_b(fprime, IndexSet{1, 2, 4}).size() == 1 &&
                    family_b(fprime, IndexSet{1, 2, 4}).contains(IndexSet{4}),
                "B over {1,2,4}");
    out.require(family_b(fprime, IndexSet{1, 2, 3}).empty(), "B over {1,2,3}");
    if (out.ok)
      out.detail = std::to_string(certified) + " families certified";
    return out;
  });

  criterion(8, "at most k circle vectors in example 2 for every sigma, circle regime, n <= 7", 300.0, [] {
    Outcome out;
    SigmaSweep all;
    all.exhaustive = true;
    std::size_t sweeps = 0;
    for_params(7, 7, [&](int n, int k, int l) {
      const Params p = P(n, k, l);
      if (!p.circle_regime())
        return;
      const CircleReport r = lemma3_sweep(example2(p), all);
      out.require(r.permutations == oracle::factorial(n), "incomplete sweep at " + p.to_string());
      out.require(r.max_count <= static_cast<std::size_t>(k), "count above k at " + p.to_string());
      ++sweeps;
    });
    const std::size_t control = lemma3_count(enumerate_v(P(4, 2, 1)), Permutation::identity(4));
    out.require(control == 4, "negative control gave " + std::to_string(control));
    if (out.ok)
      out.detail = std::to_string(sweeps) + " parameter sets; control |H(id) & V(4,2,1)| = 4";
    return out;
  });

  criterion(9, "double counting over all sigma, n <= 7, V, both examples and 20 random families", 300.0, [] {
    Outcome out;
    SigmaSweep all;
    all.exhaustive = true;
    std::mt19937_64 rng(2024);
    std::size_t families = 0;
    for_params(7, 7, [&](int n, int k, int l) {
      const Params p = P(n, k, l);
      if (!p.nontrivial_regime())
        return;
      const VectorFamily v = enumerate_v(p);
      std::vector<VectorFamily> inputs{v, example1(p), example2(p)};
      for (int t = 0; t < 20; ++t) {
        VectorFamily f(p);
        for (const SignedVector &x : v)
          if (rng() % 2)
            f.insert(x);
        inputs.push_back(std::move(f));
      }
      for (const VectorFamily &f : inputs) {
        const CircleReport r = double_count_check(f, all);
        const std::uint64_t expected = f.size() * static_cast<std::uint64_t>(n) * oracle::factorial(k) *
                                       oracle::factorial(l) * oracle::factorial(n - k - l);
        out.require(r.sum == expected, "identity fails at " + p.to_string());
        ++families;
      }
    });
    if (out.ok)
      out.detail = std::to_string(families) + " families";
    return out;
  });

  criterion(10, "thm2 bound at l = 1 equals k C(n-1,k) for 2k <= n <= 3k-1, k <= 6", 1.0, [] {
    Outcome out;
    for (int k = 1; k <= 6; ++k)
      for (int n = 2 * k; n <= 3 * k - 1; ++n)
        out.require(theorem2_bound(P(n, k, 1)) == k * oracle::choose(n - 1, k),
                    "mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    return out;
  });

  criterion(11, "max(|example1|,|example2|) <= alpha <= every applicable bound, all solved n <= 8", 600.0, [] {
    Outcome out;
    std::size_t solved = 0;
    std::vector<std::string> open;
    for_params(8, 7, [&](int n, int k, int l) {
      const Params p = P(n, k, l);
      const SearchResult r = solve(p, 20);
      if (!r.proof_of_optimality) {
        open.push_back(p.to_string());
        return;
      }
      ++solved;
      const BoundTable t = bound_table(p);
      const std::size_t lower = std::max(example1(p).size(), example2(p).size());
      out.require(lower <= r.optimum, "construction beats alpha at " + p.to_string());
      out.require(r.optimum <= *t.value("V"), "alpha above |V| at " + p.to_string());
      for (const char *name : {"thm1", "thm2", "fk1"})
        if (auto b = t.value(name))
          out.require(r.optimum <= *b, std::string(name) + " violated at " + p.to_string());
    });
    if (out.ok) {
      std::ostringstream os;
      os << solved << " instances solved";
      for (std::size_t i = 0; i < open.size(); ++i)
        os << (i ? ", " : "; unresolved within budget: ") << open[i];
      out.detail = os.str();
    }
    return out;
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
