#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antipodal/constructions.hpp"
#include "antipodal/core.hpp"

namespace antipodal {

// |H(sigma) n f| where H is the circle family of f's parameters.
std::size_t lemma3_count(const VectorFamily &f, const Permutation &sigma);

// Largest intersecting subfamily of the n cyclic k-intervals of [n], solved
// exactly. Regime unless n >= 2k.
int max_intersecting_cyclic(int n, int k);

inline constexpr int kExhaustiveMaxN = 8;

struct CircleReport {
  Params params;
  std::size_t family_size = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t permutations = 0;  // sigmas evaluated
  std::size_t max_count = 0;       // max |H(sigma) n f| seen
  std::vector<std::uint64_t> histogram; // histogram[c] = #sigma with count c
  std::optional<Permutation> argmax;    // a sigma attaining max_count

  // Double counting: sum over sigma of |H(sigma) n f| against
  // |f| n k! l! (n-k-l)!. In sample mode the mean is compared instead.
  bool identity_checked = false;
  Count sum = 0;
  Count expected_sum = 0;
  double mean = 0.0;
  double expected_mean = 0.0;
  double tolerance = 0.0;

  std::optional<Count> bound; // theorem2_bound when certifying
  std::optional<std::pair<SignedVector, SignedVector>> antipodal_pair;

  std::vector<std::string> violations;
  bool passed() const noexcept { return violations.empty(); }
};

// Each sigma in the sweep; exhaustive enumerates all n! permutations (n <= 8),
// sampled draws `samples` seeded uniform permutations after the identity.
struct SigmaSweep {
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Sweeps sigma and reports max |H(sigma) n f| against k. The <= k assertion
// is only made when f is antipodal-free and in the circle regime; otherwise
// the counts are reported without judgement.
CircleReport lemma3_sweep(const VectorFamily &f, const SigmaSweep &sweep);

// Exhaustive: exact identity. Sample: |mean - expected| within
// 5 standard errors. TooLarge when exhaustive and n > 8.
CircleReport double_count_check(const VectorFamily &f, const SigmaSweep &sweep);

// Regime unless 2k <= n <= 3k-l. An antipodal input is reported as a
// violation carrying the offending pair.
CircleReport theorem2_certify(const VectorFamily &f, std::uint64_t samples,
                              std::uint64_t seed = 1);

} // namespace antipodal
