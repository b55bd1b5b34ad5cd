#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace antipodal {

inline constexpr int kMaxDimension = 64;

// A subset of [1..64], stored as a bitmask with bit (i-1) standing for index i.
class IndexSet {
public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> indices);
  explicit IndexSet(const std::vector<int> &indices);

  // [lo..hi], empty when hi < lo.
  static IndexSet interval(int lo, int hi);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int index) const noexcept {
    return index >= 1 && index <= kMaxDimension &&
           ((bits_ >> (index - 1)) & 1u) != 0;
  }
  // 0 for the empty set.
  constexpr int max() const noexcept { return 64 - std::countl_zero(bits_); }
  constexpr int min() const noexcept {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  void insert(int index);
  void erase(int index);

  constexpr bool is_subset_of(IndexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(IndexSet other) const noexcept {
    return (bits_ & other.bits_) == 0;
  }

  std::vector<int> elements() const;
  // "{1,3,4}"
  std::string to_string() const;

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) noexcept {
    return IndexSet(a.bits_ | b.bits_);
  }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept {
    return IndexSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) noexcept {
    return IndexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(IndexSet a, IndexSet b) noexcept = default;

private:
  std::uint64_t bits_ = 0;
};

// Lexicographic comparison of the sorted element sequences.
bool lex_less(IndexSet a, IndexSet b) noexcept;

// All size-r subsets of the given ground set, in lexicographic order.
std::vector<IndexSet> subsets_of_size(IndexSet ground, int r);
// All size-r subsets of [1..n], in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int r);

} // namespace antipodal

template <> struct std::hash<antipodal::IndexSet> {
  std::size_t operator()(antipodal::IndexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
