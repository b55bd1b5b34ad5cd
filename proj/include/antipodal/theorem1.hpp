#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antipodal/core.hpp"
#include "antipodal/setfamilies.hpp"

namespace antipodal {

// F(A,B): the (k-l)-sets C such that the vector with S+ = A u C, S- = B is in
// f. Ground [1..n], uniformity k - l. Throws BadPair unless |A| = |B| = l and
// A, B are disjoint.
SetFamily subfamily(const VectorFamily &f, IndexSet a, IndexSet b);

// One ordered pair of disjoint l-sets visited by the deletion procedure.
struct PairTrace {
  IndexSet a, b;
  std::size_t subfamily_size = 0; // |F(A,B)| in the input family
  bool triggered = false;         // subfamily_size <= threshold
  std::size_t newly_deleted = 0;  // vectors first removed by this pair
};

// A pair (A,B) where F(A,B) and F(B,A) fail to cross-intersect, with the two
// members of f it exposes: S+(v) = A u C, S-(v) = B, S+(w) = B u D, S-(w) = A.
struct Lemma1Violation {
  IndexSet a, b, c, d;
  SignedVector v, w;
  int product = 0;
};

struct TSetTrace {
  IndexSet t;
  std::size_t family_b_size = 0;
  bool intersecting = true;
};

struct TraceReport {
  Params params;
  std::size_t input_size = 0;
  bool antipodal_free = true;
  std::optional<std::pair<SignedVector, SignedVector>> antipodal_pair;

  bool lemma1_ran = false;
  std::size_t lemma1_pairs_checked = 0;
  std::vector<Lemma1Violation> lemma1_violations;

  bool deletion_ran = false;
  Count threshold = 0;  // C(n-2l-1, k-l-1)
  Count pair_count = 0; // C(n,2l) C(2l,l)
  std::vector<PairTrace> pairs;
  std::size_t deleted = 0;
  std::size_t fprime_size = 0;
  // |f| - C(n,2l) C(2l,l) C(n-2l-1,k-l-1); may be negative.
  long long deletion_lower_bound = 0;
  bool survivor_property = true;

  bool lemma2_ran = false;
  Count family_b_cap = 0; // C(k+l-1, l-1)
  std::vector<TSetTrace> t_sets;
  Count fprime_cap = 0;   // C(n,k+l) C(k+l-1,l-1)
  Count bound = 0;        // theorem1_bound(params)

  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
};

inline constexpr const char *kDeletionRule =
    "single-pass: every |F(A,B)| is measured on the input family";

// Checks every unordered pair {A,B} of disjoint l-sets.
TraceReport lemma1_check(const VectorFamily &f);

// Visits all C(n,2l) C(2l,l) ordered pairs in lexicographic order (A first,
// then B) and removes every v with S-(v) = B and A in S+(v) whenever
// |F(A,B)| <= C(n-2l-1,k-l-1), the counts taken on the input family.
std::pair<VectorFamily, TraceReport> deletion_procedure(const VectorFamily &f);

// {S-(v) : v in fprime, S(v) = t}. Throws BadT unless |t| = k + l.
SetFamily family_b(const VectorFamily &fprime, IndexSet t);

// Deletion followed by the intersecting check of B over every (k+l)-set T.
TraceReport lemma2_check(const VectorFamily &f);

// Antipodal-free precheck, then the pair check, deletion with its lower-bound count and
// the survivor property, B over every T (intersecting and within the EKR cap),
// |F'| within C(n,k+l) C(k+l-1,l-1) and finally |f| <= theorem1_bound.
TraceReport certify_theorem1(const VectorFamily &f);

} // namespace antipodal
