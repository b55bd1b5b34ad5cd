#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antipodal/core.hpp"

namespace antipodal {

// C(n-1, k-1); Regime unless n >= 2k > 0.
Count ekr_bound(int n, int k);

// C(n,k+l) C(k+l-1,l-1) + C(n,2l) C(2l,l) C(n-2l-1,k-l-1). The last binomial
// vanishes for k = l through the C(x,-1) = 0 convention.
Count theorem1_bound(const Params &p);

// C(n-1,k+l-1) C(k+l-1,k-1), which equals (k/n)|V(n,k,l)|. Regime unless
// 2k <= n <= 3k - l.
Count theorem2_bound(const Params &p);

// Antipodal-free families in V(n,k,1):
//   k C(n-1,k)                                   for 2k <= n <= k^2
//   k C(k^2-1,k) + sum_{m=k^2}^{n-1} C(m,k)       for n > k^2
Count fk1_bound(int n, int k);

struct BoundEntry {
  std::string name;
  std::optional<Count> value; // empty when not applicable
  std::string condition;      // the regime condition, failed or satisfied
};

struct BoundTable {
  Params params;
  std::vector<BoundEntry> entries;

  const BoundEntry *find(const std::string &name) const;
  // Value of an applicable entry, nullopt otherwise.
  std::optional<Count> value(const std::string &name) const;
};

// Fixed order: V, ex1, ex2, thm1, thm2, fk1, ekr.
BoundTable bound_table(const Params &p);

} // namespace antipodal
