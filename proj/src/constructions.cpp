#include "antipodal/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace antipodal {

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1 || n > kMaxDimension)
    fail(ErrorCode::InvalidPermutation, "permutation size out of range");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      fail(ErrorCode::InvalidPermutation, "not a bijection of [1.." +
                                              std::to_string(n) + "]");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::from_transpositions(
    int n, const std::vector<std::pair<int, int>> &swaps) {
  std::vector<int> images = identity(n).images_;
  for (auto [a, b] : swaps) {
    if (a < 1 || a > n || b < 1 || b > n)
      fail(ErrorCode::InvalidPermutation, "transposition outside [1..n]");
    std::swap(images[static_cast<std::size_t>(a - 1)],
              images[static_cast<std::size_t>(b - 1)]);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::random(int n, std::mt19937_64 &rng) {
  std::vector<int> images = identity(n).images_;
  // Explicit Fisher-Yates: std::shuffle's draw sequence is not pinned by the
  // standard, and reports must reproduce across standard libraries.
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(images));
}

IndexSet Permutation::apply(IndexSet s) const {
  IndexSet out;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1)
    out.insert((*this)(std::countr_zero(b) + 1));
  return out;
}

SignedVector Permutation::apply(const SignedVector &v) const {
  if (v.dimension() != size())
    fail(ErrorCode::DimensionMismatch, "permutation over [1.." +
                                           std::to_string(size()) +
                                           "] applied to a vector of length " +
                                           std::to_string(v.dimension()));
  return SignedVector(v.dimension(), apply(v.plus()), apply(v.minus()));
}

Permutation Permutation::compose(const Permutation &other) const {
  if (other.size() != size())
    fail(ErrorCode::DimensionMismatch, "composing permutations of different sizes");
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i)
    images[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i)
    images[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(images));
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

int cyclic_index(long long x, int n) {
  const long long r = ((x - 1) % n + n) % n;
  return static_cast<int>(r) + 1;
}

VectorFamily example1(const Params &p) {
  VectorFamily out(p);
  for (const SignedVector &v : enumerate_v(p))
    if (v.minus().contains(v.support().max()))
      out.insert(v);
  return out;
}

VectorFamily example2(const Params &p) {
  VectorFamily out(p);
  for (const SignedVector &v : enumerate_v(p))
    if (v.plus().contains(1))
      out.insert(v);
  return out;
}

namespace {

VectorFamily sorted_family(const Params &p, std::vector<SignedVector> members) {
  std::sort(members.begin(), members.end(), canonical_less);
  VectorFamily out(p);
  for (const SignedVector &v : members)
    out.insert(v);
  return out;
}

} // namespace

VectorFamily example1_direct(const Params &p) {
  p.validate();
  std::vector<SignedVector> members;
  for (IndexSet support : subsets_of_size(p.n, p.k + p.l)) {
    const int last = support.max();
    const IndexSet rest = support - IndexSet{last};
    for (IndexSet extra_minus : subsets_of_size(rest, p.l - 1)) {
      const IndexSet minus = extra_minus | IndexSet{last};
      members.emplace_back(p.n, support - minus, minus);
    }
  }
  return sorted_family(p, std::move(members));
}

VectorFamily example2_direct(const Params &p) {
  p.validate();
  std::vector<SignedVector> members;
  const IndexSet all = IndexSet::interval(1, p.n);
  for (IndexSet tail : subsets_of_size(all - IndexSet{1}, p.k - 1)) {
    const IndexSet plus = tail | IndexSet{1};
    for (IndexSet minus : subsets_of_size(all - plus, p.l))
      members.emplace_back(p.n, plus, minus);
  }
  return sorted_family(p, std::move(members));
}

VectorFamily circle_family(const Params &p) {
  p.validate();
  if (p.n < 2 * p.k)
    fail(ErrorCode::Regime, "circle family needs n >= 2k, got " + p.to_string());
  VectorFamily out(p);
  for (int i = 1; i <= p.n; ++i) {
    IndexSet plus, minus;
    for (int j = 0; j < p.k; ++j)
      plus.insert(cyclic_index(i + j, p.n));
    for (int j = 0; j < p.l; ++j)
      minus.insert(cyclic_index(i - p.k + j, p.n));
    out.insert(SignedVector(p.n, plus, minus));
  }
  return out;
}

VectorFamily apply_permutation(const VectorFamily &f, const Permutation &sigma) {
  if (sigma.size() != f.params().n)
    fail(ErrorCode::DimensionMismatch,
         "permutation size " + std::to_string(sigma.size()) +
             " does not match n=" + std::to_string(f.params().n));
  VectorFamily out(f.params());
  for (const SignedVector &v : f)
    out.insert(sigma.apply(v));
  return out;
}

} // namespace antipodal
