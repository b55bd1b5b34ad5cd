#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antipodal/core.hpp"

namespace antipodal {

// Fixed-width bitset over [0, size).
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t size, bool fill = false);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const noexcept;
  bool none() const noexcept;
  // Lowest set index, or size() if none.
  std::size_t first() const noexcept;
  std::size_t next(std::size_t after) const noexcept;

  std::size_t count_and(const Bitset &other) const noexcept;
  Bitset &operator&=(const Bitset &other) noexcept;
  Bitset &operator|=(const Bitset &other) noexcept;
  // this &= ~other
  Bitset &subtract(const Bitset &other) noexcept;

  std::vector<std::size_t> indices() const;

  const std::vector<std::uint64_t> &words() const noexcept { return words_; }
  friend bool operator==(const Bitset &, const Bitset &) = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph with bit-indexed neighbourhoods.
class Graph {
public:
  explicit Graph(std::size_t vertices);

  std::size_t size() const noexcept { return adjacency_.size(); }
  // Throws Precondition on a self-loop or an out-of-range vertex.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return adjacency_[u].test(v);
  }
  const Bitset &neighbors(std::size_t v) const noexcept { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const noexcept { return adjacency_[v].count(); }
  std::size_t edge_count() const noexcept { return edges_; }

  // Optional per-vertex labels (vector or set encodings).
  std::vector<std::string> labels;

  bool is_independent(const std::vector<std::size_t> &vertices) const;
  // Same graph with vertex v renamed order[v].
  Graph relabeled(const std::vector<std::size_t> &order) const;

private:
  std::vector<Bitset> adjacency_;
  std::size_t edges_ = 0;
};

inline constexpr std::size_t kDefaultVertexCap = 5000;

struct SearchOptions {
  std::chrono::duration<double> budget = std::chrono::seconds(60);
  // A known independent set used as the starting incumbent.
  std::vector<std::size_t> initial;
  // Disjoint vertex groups of at most 64 vertices each. The bound adds the
  // exact independence number of each group restricted to the residual graph
  // and covers the remaining vertices with cliques.
  std::vector<std::vector<std::size_t>> bound_groups;
};

struct SearchResult {
  std::size_t optimum = 0;
  std::vector<std::size_t> witness; // sorted vertex indices
  std::vector<std::string> witness_labels;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
  // False only when the budget ran out; optimum is then a lower bound.
  bool proof_of_optimality = false;
};

// Exact maximum independent set by branch and bound: branch on a maximum
// degree residual vertex (lowest index on ties), take degree 0/1 vertices
// without branching, prune on a greedy clique cover bound.
SearchResult max_independent_set(const Graph &g, const SearchOptions &options = {});

// Vertices are enumerate_v(p) in canonical order, labelled by their text form.
Graph antipodality_graph(const Params &p, std::size_t vertex_cap = kDefaultVertexCap);

struct AntipodalSearch {
  SearchResult result;
  VectorFamily witness;
};

// The witness is re-verified antipodal-free before returning.
AntipodalSearch max_antipodal_free(const Params &p, const SearchOptions &options = {},
                                   std::size_t vertex_cap = kDefaultVertexCap);

// Vertices are the k-subsets of [n] in lexicographic order, adjacent when
// disjoint; labels are "{1,2}" style.
Graph kneser_graph(int n, int k, std::size_t vertex_cap = kDefaultVertexCap);

// Regime unless n >= 2k >= 2.
SearchResult max_intersecting(int n, int k, const SearchOptions &options = {},
                              std::size_t vertex_cap = kDefaultVertexCap);

} // namespace antipodal
