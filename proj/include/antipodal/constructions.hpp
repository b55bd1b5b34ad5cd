#pragma once

#include <random>
#include <vector>

#include "antipodal/core.hpp"

namespace antipodal {

// A bijection of [1..n]; image(i) for 1-based i.
class Permutation {
public:
  static Permutation identity(int n);
  // Throws InvalidPermutation unless images is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);
  // Product of disjoint or overlapping transpositions, e.g. {{1,2}} for (1 2).
  static Permutation from_transpositions(int n,
                                         const std::vector<std::pair<int, int>> &swaps);
  static Permutation random(int n, std::mt19937_64 &rng);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int> &images() const noexcept { return images_; }

  IndexSet apply(IndexSet s) const;
  SignedVector apply(const SignedVector &v) const;

  // (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation &other) const;
  Permutation inverse() const;

  // Lexicographic successor; false after the last permutation.
  bool next();

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

// Maps any integer to its residue in [1..n].
int cyclic_index(long long x, int n);

// Vectors whose last non-zero coordinate is -1.
VectorFamily example1(const Params &p);
// Vectors whose first coordinate is +1.
VectorFamily example2(const Params &p);

// Constructive generators for the same two families. They emit canonical
// order as well and must agree with the filters member for member.
VectorFamily example1_direct(const Params &p);
VectorFamily example2_direct(const Params &p);

// The n cyclic vectors: member i has +1 on {i..i+k-1} and -1 on
// {i-k..i-k+l-1}, indices mod n, listed by i. Throws Regime if n < 2k.
VectorFamily circle_family(const Params &p);

// Throws DimensionMismatch if sigma is not over [1..n].
VectorFamily apply_permutation(const VectorFamily &f, const Permutation &sigma);

} // namespace antipodal
