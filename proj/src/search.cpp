#include "antipodal/search.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "antipodal/constructions.hpp"

namespace antipodal {

// ---------------------------------------------------------------- Bitset

Bitset::Bitset(std::size_t size, bool fill)
    : size_(size), words_((size + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
  if (fill && size % 64 != 0)
    words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
}

std::size_t Bitset::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitset::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0)
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::size_t Bitset::next(std::size_t after) const noexcept {
  std::size_t i = after + 1;
  if (i >= size_)
    return size_;
  std::size_t w = i >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (word != 0)
      return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size())
      return size_;
    word = words_[w];
  }
}

std::size_t Bitset::count_and(const Bitset &other) const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

Bitset &Bitset::operator&=(const Bitset &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

Bitset &Bitset::operator|=(const Bitset &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

Bitset &Bitset::subtract(const Bitset &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = first(); i < size_; i = next(i))
    out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t vertices) : adjacency_(vertices, Bitset(vertices)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size())
    fail(ErrorCode::Precondition, "edge endpoint out of range");
  if (u == v)
    fail(ErrorCode::Precondition, "self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].test(v))
    return;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++edges_;
}

bool Graph::is_independent(const std::vector<std::size_t> &vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= size())
      return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || adjacent(vertices[i], vertices[j]))
        return false;
  }
  return true;
}

Graph Graph::relabeled(const std::vector<std::size_t> &order) const {
  Graph out(size());
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = adjacency_[u].next(u); v < size(); v = adjacency_[u].next(v))
      out.add_edge(order.at(u), order.at(v));
  if (!labels.empty()) {
    out.labels.resize(size());
    for (std::size_t v = 0; v < size(); ++v)
      out.labels[order[v]] = labels[v];
  }
  return out;
}

// ---------------------------------------------------------------- solver

namespace {

using Clock = std::chrono::steady_clock;

// A vertex group whose independence number, restricted to any residual
// subset, is solved exactly and memoised by local mask.
class ExactGroup {
public:
  ExactGroup(const Graph &g, std::vector<std::size_t> vertices)
      : vertices_(std::move(vertices)), local_adj_(vertices_.size(), 0) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (g.adjacent(vertices_[i], vertices_[j]))
          local_adj_[i] |= std::uint64_t{1} << j;
  }

  const std::vector<std::size_t> &vertices() const noexcept { return vertices_; }

  int alpha_within(const Bitset &residual) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (residual.test(vertices_[i]))
        mask |= std::uint64_t{1} << i;
    return alpha(mask);
  }

private:
  int alpha(std::uint64_t mask) {
    if (mask == 0)
      return 0;
    if (auto it = memo_.find(mask); it != memo_.end())
      return it->second;
    const int v = std::countr_zero(mask);
    const std::uint64_t bit = std::uint64_t{1} << v;
    int best = 1 + alpha(mask & ~bit & ~local_adj_[static_cast<std::size_t>(v)]);
    if ((local_adj_[static_cast<std::size_t>(v)] & mask) != 0)
      best = std::max(best, alpha(mask & ~bit));
    memo_.emplace(mask, best);
    return best;
  }

  std::vector<std::size_t> vertices_;
  std::vector<std::uint64_t> local_adj_;
  std::unordered_map<std::uint64_t, int> memo_;
};

class Solver {
public:
  Solver(const Graph &g, const SearchOptions &options)
      : g_(g), n_(g.size()), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                          options.budget)),
        ungrouped_(n_, true) {
    Bitset seen(n_);
    for (const auto &group : options.bound_groups) {
      if (group.size() > 64)
        fail(ErrorCode::Precondition, "bound groups are limited to 64 vertices");
      for (std::size_t v : group) {
        if (v >= n_ || seen.test(v))
          fail(ErrorCode::Precondition, "bound groups must be disjoint vertex sets");
        seen.set(v);
        ungrouped_.reset(v);
      }
      groups_.emplace_back(g, group);
    }
    if (!options.initial.empty()) {
      if (!g.is_independent(options.initial))
        fail(ErrorCode::Precondition, "initial solution is not independent");
      best_ = options.initial;
    }
    const std::vector<std::size_t> greedy = greedy_solution();
    if (greedy.size() > best_.size())
      best_ = greedy;
  }

  SearchResult run() {
    const auto start = Clock::now();
    Bitset all(n_, true);
    search(std::move(all));
    SearchResult r;
    std::sort(best_.begin(), best_.end());
    r.optimum = best_.size();
    r.witness = best_;
    if (!g_.labels.empty())
      for (std::size_t v : best_)
        r.witness_labels.push_back(g_.labels[v]);
    r.nodes_explored = nodes_;
    r.elapsed = Clock::now() - start;
    r.proof_of_optimality = !aborted_;
    return r;
  }

private:
  std::vector<std::size_t> greedy_solution() const {
    std::vector<std::size_t> out;
    Bitset residual(n_, true);
    while (!residual.none()) {
      std::size_t pick = n_, pick_degree = n_ + 1;
      for (std::size_t v = residual.first(); v < n_; v = residual.next(v)) {
        const std::size_t d = g_.neighbors(v).count_and(residual);
        if (d < pick_degree) {
          pick = v;
          pick_degree = d;
        }
      }
      out.push_back(pick);
      residual.subtract(g_.neighbors(pick));
      residual.reset(pick);
    }
    return out;
  }

  std::size_t clique_cover(const Bitset &vertices) {
    std::size_t used = 0;
    for (std::size_t v = vertices.first(); v < n_; v = vertices.next(v)) {
      bool placed = false;
      for (std::size_t c = 0; c < used; ++c) {
        if (candidates_[c].test(v)) {
          candidates_[c] &= g_.neighbors(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        if (candidates_.size() == used)
          candidates_.emplace_back(n_);
        candidates_[used] = g_.neighbors(v);
        candidates_[used] &= vertices;
        ++used;
      }
    }
    return used;
  }

  std::size_t upper_bound(const Bitset &residual) {
    std::size_t bound = clique_cover(residual);
    if (groups_.empty())
      return bound;
    Bitset rest = residual;
    rest &= ungrouped_;
    std::size_t grouped = clique_cover(rest);
    for (ExactGroup &group : groups_)
      grouped += static_cast<std::size_t>(group.alpha_within(residual));
    return std::min(bound, grouped);
  }

  void take(std::size_t v, Bitset &residual) {
    current_.push_back(v);
    residual.reset(v);
    residual.subtract(g_.neighbors(v));
  }

  void search(Bitset residual) {
    ++nodes_;
    if ((nodes_ & 1023) == 0 && Clock::now() > deadline_)
      aborted_ = true;
    if (aborted_)
      return;
    const std::size_t depth = current_.size();

    std::size_t branch = n_, branch_degree = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      branch = n_;
      branch_degree = 0;
      for (std::size_t v = residual.first(); v < n_; v = residual.next(v)) {
        const std::size_t d = g_.neighbors(v).count_and(residual);
        if (d <= 1) {
          // Some maximum independent set contains a vertex of degree <= 1.
          take(v, residual);
          changed = true;
        } else if (d > branch_degree) {
          branch = v;
          branch_degree = d;
        }
      }
    }

    if (residual.none()) {
      if (current_.size() > best_.size())
        best_ = current_;
    } else if (current_.size() + upper_bound(residual) > best_.size()) {
      Bitset with = residual;
      current_.push_back(branch);
      with.reset(branch);
      with.subtract(g_.neighbors(branch));
      search(std::move(with));
      current_.pop_back();

      residual.reset(branch);
      search(std::move(residual));
    }
    current_.resize(depth);
  }

  const Graph &g_;
  std::size_t n_;
  Clock::time_point deadline_;
  Bitset ungrouped_;
  std::vector<ExactGroup> groups_;
  std::vector<Bitset> candidates_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

std::vector<std::size_t> indices_of(const VectorFamily &all, const VectorFamily &sub) {
  std::unordered_map<VectorKey, std::size_t, VectorKeyHash> position;
  for (std::size_t i = 0; i < all.size(); ++i)
    position.emplace(key_of(all[i]), i);
  std::vector<std::size_t> out;
  for (const SignedVector &v : sub)
    out.push_back(position.at(key_of(v)));
  return out;
}

// Exact cover of the vertex set by candidate groups (Algorithm X): always
// extend at the uncovered vertex with the fewest usable candidates. Usable
// counts are maintained incrementally. Gives up after `node_cap` nodes.
class GroupPacker {
public:
  GroupPacker(std::size_t vertices, const std::vector<std::vector<std::size_t>> &candidates,
              std::uint64_t node_cap)
      : candidates_(candidates), node_cap_(node_cap), by_vertex_(vertices),
        options_(vertices, 0), blocked_(candidates.size(), 0), covered_(vertices, false) {
    for (std::size_t r = 0; r < candidates_.size(); ++r)
      for (std::size_t v : candidates_[r]) {
        by_vertex_[v].push_back(r);
        ++options_[v];
      }
  }

  std::optional<std::vector<std::size_t>> exact_cover() {
    if (solve())
      return chosen_;
    return std::nullopt;
  }

private:
  void block(std::size_t r) {
    if (blocked_[r]++ == 0)
      for (std::size_t u : candidates_[r])
        --options_[u];
  }
  void unblock(std::size_t r) {
    if (--blocked_[r] == 0)
      for (std::size_t u : candidates_[r])
        ++options_[u];
  }
  void choose(std::size_t r) {
    for (std::size_t v : candidates_[r]) {
      covered_[v] = true;
      for (std::size_t r2 : by_vertex_[v])
        block(r2);
    }
  }
  void unchoose(std::size_t r) {
    for (auto it = candidates_[r].rbegin(); it != candidates_[r].rend(); ++it) {
      for (std::size_t r2 : by_vertex_[*it])
        unblock(r2);
      covered_[*it] = false;
    }
  }

  bool solve() {
    if (++nodes_ > node_cap_)
      return false;
    std::size_t pick = options_.size();
    for (std::size_t v = 0; v < options_.size(); ++v)
      if (!covered_[v] && (pick == options_.size() || options_[v] < options_[pick]))
        pick = v;
    if (pick == options_.size())
      return true;
    if (options_[pick] == 0)
      return false;
    for (std::size_t r : by_vertex_[pick]) {
      if (blocked_[r] != 0)
        continue;
      choose(r);
      chosen_.push_back(r);
      const bool done = solve();
      if (done)
        return true;
      chosen_.pop_back();
      unchoose(r);
      if (nodes_ > node_cap_)
        return false;
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>> &candidates_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<std::size_t> options_;
  std::vector<std::size_t> blocked_;
  std::vector<bool> covered_;
  std::vector<std::size_t> chosen_;
};

// Disjoint images of the circle family used as exact bound groups: a perfect
// packing when one is found, otherwise a greedy packing.
std::vector<std::vector<std::size_t>> circle_groups(const Params &p, const VectorFamily &all) {
  std::vector<std::vector<std::size_t>> groups;
  if (p.n < 2 * p.k)
    return groups;
  std::unordered_map<VectorKey, std::size_t, VectorKeyHash> position;
  for (std::size_t i = 0; i < all.size(); ++i)
    position.emplace(key_of(all[i]), i);
  const VectorFamily circle = circle_family(p);

  // Distinct copies, in order of first appearance: all sigma for n <= 8,
  // seeded draws beyond.
  std::vector<std::vector<std::size_t>> candidates;
  std::unordered_set<std::string> distinct;
  auto consider = [&](const Permutation &sigma) {
    std::vector<std::size_t> copy;
    for (const SignedVector &h : circle)
      copy.push_back(position.at(key_of(sigma.apply(h))));
    std::vector<std::size_t> sorted = copy;
    std::sort(sorted.begin(), sorted.end());
    std::string key(reinterpret_cast<const char *>(sorted.data()),
                    sorted.size() * sizeof(std::size_t));
    if (distinct.insert(std::move(key)).second)
      candidates.push_back(std::move(copy));
  };
  if (p.n <= 8) {
    Permutation sigma = Permutation::identity(p.n);
    do
      consider(sigma);
    while (sigma.next());
  } else {
    std::mt19937_64 rng(0x5eed);
    consider(Permutation::identity(p.n));
    for (std::size_t i = 0; i < 16 * all.size(); ++i)
      consider(Permutation::random(p.n, rng));
  }

  if (all.size() % circle.size() == 0) {
    GroupPacker packer(all.size(), candidates, 150000);
    if (auto cover = packer.exact_cover()) {
      for (std::size_t r : *cover)
        groups.push_back(candidates[r]);
      return groups;
    }
  }
  std::vector<bool> used(all.size(), false);
  for (const auto &copy : candidates) {
    if (std::any_of(copy.begin(), copy.end(), [&](std::size_t v) { return used[v]; }))
      continue;
    for (std::size_t v : copy)
      used[v] = true;
    groups.push_back(copy);
  }
  return groups;
}

} // namespace

SearchResult max_independent_set(const Graph &g, const SearchOptions &options) {
  SearchResult r = Solver(g, options).run();
  if (!g.is_independent(r.witness))
    throw std::logic_error("solver produced a dependent witness");
  return r;
}

Graph antipodality_graph(const Params &p, std::size_t vertex_cap) {
  p.validate();
  const Count size = cardinality_v(p);
  if (size > vertex_cap)
    fail(ErrorCode::TooLarge, "|V" + p.to_string() + "| = " + std::to_string(size) +
                                  " exceeds the vertex cap " + std::to_string(vertex_cap));
  const VectorFamily all = enumerate_v(p);
  Graph g(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    g.labels.push_back(format_vector(all[i]));
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (antipodal_by_supports(all[i], all[j]))
        g.add_edge(i, j);
  }
  return g;
}

AntipodalSearch max_antipodal_free(const Params &p, const SearchOptions &options,
                                   std::size_t vertex_cap) {
  const auto start = Clock::now();
  const Graph g = antipodality_graph(p, vertex_cap);
  const VectorFamily all = enumerate_v(p);
  SearchOptions opts = options;
  if (opts.initial.empty()) {
    const VectorFamily e1 = example1(p), e2 = example2(p);
    opts.initial = indices_of(all, e2.size() >= e1.size() ? e2 : e1);
  }
  if (opts.bound_groups.empty())
    opts.bound_groups = circle_groups(p, all);
  AntipodalSearch out{max_independent_set(g, opts), VectorFamily(p)};
  for (std::size_t v : out.result.witness)
    out.witness.insert(all[v]);
  if (!is_antipodal_free(out.witness))
    throw std::logic_error("search witness contains an antipodal pair");
  out.result.elapsed = Clock::now() - start;
  return out;
}

Graph kneser_graph(int n, int k, std::size_t vertex_cap) {
  if (k < 1 || n < k || n > kMaxDimension)
    fail(ErrorCode::InvalidParams, "need 1 <= k <= n <= 64");
  const Count size = binomial(n, k);
  if (size > vertex_cap)
    fail(ErrorCode::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                  std::to_string(size) + " exceeds the vertex cap");
  const std::vector<IndexSet> sets = subsets_of_size(n, k);
  Graph g(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    g.labels.push_back(sets[i].to_string());
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].disjoint(sets[j]))
        g.add_edge(i, j);
  }
  return g;
}

SearchResult max_intersecting(int n, int k, const SearchOptions &options,
                              std::size_t vertex_cap) {
  if (k < 1 || n < 2 * k)
    fail(ErrorCode::Regime, "needs n >= 2k > 0, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  return max_independent_set(kneser_graph(n, k, vertex_cap), options);
}

} // namespace antipodal
