#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "antipodal/core.hpp"

namespace antipodal {

// A duplicate-free family of a-subsets of [1..m].
class SetFamily {
public:
  SetFamily(int ground, int uniformity);
  SetFamily(int ground, int uniformity, const std::vector<IndexSet> &members);

  int ground() const noexcept { return ground_; }
  int uniformity() const noexcept { return uniformity_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<IndexSet> &members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  // Returns false for a duplicate; throws ShapeMismatch / Range on a bad set.
  bool insert(IndexSet s);
  bool contains(IndexSet s) const noexcept { return index_.count(s) != 0; }
  // Removes member i, keeping the order of the rest.
  void erase_at(std::size_t i);

private:
  int ground_;
  int uniformity_;
  std::vector<IndexSet> members_;
  std::unordered_set<IndexSet> index_;
};

bool is_intersecting(const SetFamily &f);
// Throws GroundMismatch when the ground sets differ.
bool is_cross_intersecting(const SetFamily &a, const SetFamily &b);

// Either |A| <= C(m-1,a-1) or |B| <= C(m-1,b-1). Throws Precondition unless
// the pair is cross-intersecting and m >= a + b.
bool proposition1_holds(const SetFamily &a, const SetFamily &b);

struct Prop1Report {
  int m = 0, a = 0, b = 0;
  Count cap_a = 0;              // C(m-1, a-1)
  Count cap_b = 0;              // C(m-1, b-1)
  std::uint64_t a_families = 0; // 2^C(m,a) subfamilies of level a
  std::uint64_t pruned = 0;     // A-families skipped without touching B
  std::uint64_t cross_intersecting_pairs = 0;
  std::uint64_t counterexamples = 0;

  Prop1Report &merge(const Prop1Report &other);
};

// Every cross-intersecting pair (A, B) over [m] at levels a and b is checked
// against the disjunction. Throws Precondition when m < a + b and TooLarge
// when C(m,a) or C(m,b) exceeds 12.
Prop1Report verify_prop1_exhaustive(int m, int a, int b, int threads = 1);

} // namespace antipodal
