#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "antipodal/binomial.hpp"
#include "antipodal/error.hpp"
#include "antipodal/index_set.hpp"

namespace antipodal {

// The triple (n, k, l): vectors of length n with k entries +1 and l entries -1.
struct Params {
  int n = 0;
  int k = 0;
  int l = 0;

  // Throws InvalidParams unless 1 <= l <= k, k + l <= n <= 64.
  static Params make(int n, int k, int l);

  void validate() const;

  bool nontrivial_regime() const noexcept { return n >= 2 * k; }
  bool circle_regime() const noexcept {
    return n >= 2 * k && n <= 3 * k - l;
  }

  std::string to_string() const;
  friend bool operator==(const Params &, const Params &) = default;
};

class SignedVector {
public:
  SignedVector() = default;
  // Throws Range or Overlap.
  SignedVector(int n, IndexSet plus, IndexSet minus);

  int dimension() const noexcept { return n_; }
  IndexSet plus() const noexcept { return plus_; }
  IndexSet minus() const noexcept { return minus_; }
  IndexSet support() const noexcept { return plus_ | minus_; }
  // Entry at 1-based position i: +1, -1 or 0.
  int at(int i) const noexcept;

  bool conforms_to(const Params &p) const noexcept {
    return n_ == p.n && plus_.size() == p.k && minus_.size() == p.l;
  }

  friend bool operator==(const SignedVector &, const SignedVector &) = default;

private:
  int n_ = 0;
  IndexSet plus_;
  IndexSet minus_;
};

SignedVector make_vector(int n, IndexSet plus, IndexSet minus);

// Canonical order: lexicographic on the plus set, then on the minus set.
bool canonical_less(const SignedVector &a, const SignedVector &b) noexcept;

// Throws DimensionMismatch.
int scalar_product(const SignedVector &v, const SignedVector &w);

// The three-condition support characterization of a product of exactly -2l:
// S-(v) in S+(w), S-(w) in S+(v), S+(v) and S+(w) disjoint.
bool antipodal_by_supports(const SignedVector &v, const SignedVector &w) noexcept;

// True iff <v,w> = -2l. Both characterizations are evaluated and must agree.
bool is_antipodal(const SignedVector &v, const SignedVector &w, const Params &p);

// "+-0" text form; BadCharacter / EmptyInput on bad input.
SignedVector parse_vector(std::string_view text);
std::string format_vector(const SignedVector &v);

struct VectorKey {
  std::uint64_t plus;
  std::uint64_t minus;
  friend bool operator==(const VectorKey &, const VectorKey &) = default;
};

struct VectorKeyHash {
  std::size_t operator()(const VectorKey &key) const noexcept {
    std::uint64_t h = key.plus * 0x9E3779B97F4A7C15ull;
    h ^= key.minus + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

inline VectorKey key_of(const SignedVector &v) noexcept {
  return {v.plus().bits(), v.minus().bits()};
}

// Duplicate-free, insertion-ordered family of vectors sharing one Params.
class VectorFamily {
public:
  explicit VectorFamily(Params params);

  const Params &params() const noexcept { return params_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<SignedVector> &members() const noexcept { return members_; }
  const SignedVector &operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  // Returns false for a duplicate; throws ShapeMismatch if v does not conform.
  bool insert(const SignedVector &v);
  bool contains(const SignedVector &v) const noexcept;
  bool contains(VectorKey key) const noexcept;

  // Same members regardless of order.
  bool same_members(const VectorFamily &other) const;

private:
  Params params_;
  std::vector<SignedVector> members_;
  std::unordered_set<VectorKey, VectorKeyHash> index_;
};

// Every vector of V(n,k,l), canonical order.
VectorFamily enumerate_v(const Params &p);

// C(n,k) * C(n-k,l); cross-checked against C(n,k+l) * C(k+l,l).
Count cardinality_v(const Params &p);

// C(k,l) * C(n-k-l, k-l). The commonly quoted exponent k-2l undercounts; see
// the brute-force regularity test.
Count antipodal_degree(const Params &p);

// Brute force over V(n,k,l), canonical order.
std::vector<SignedVector> antipodal_neighbors(const SignedVector &v,
                                              const Params &p);

// First antipodal pair found (indices into f), if any.
std::optional<std::pair<std::size_t, std::size_t>>
find_antipodal_pair(const VectorFamily &f);

inline bool is_antipodal_free(const VectorFamily &f) {
  return !find_antipodal_pair(f).has_value();
}

} // namespace antipodal
