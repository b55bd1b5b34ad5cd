#include "antipodal/circle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "antipodal/bounds.hpp"
#include "antipodal/search.hpp"

namespace antipodal {

namespace {

struct Tally {
  std::uint64_t permutations = 0;
  Count sum = 0;
  double sum_sq = 0.0;
  std::size_t max_count = 0;
  std::optional<Permutation> argmax;
  std::vector<std::uint64_t> histogram;

  void add(std::size_t count, const Permutation &sigma) {
    ++permutations;
    sum = checked_add(sum, static_cast<Count>(count));
    sum_sq += static_cast<double>(count) * static_cast<double>(count);
    if (histogram.size() <= count)
      histogram.resize(count + 1, 0);
    ++histogram[count];
    if (!argmax || count > max_count ||
        (count == max_count && sigma.images() < argmax->images())) {
      max_count = count;
      argmax = sigma;
    }
  }

  void merge(const Tally &o) {
    permutations += o.permutations;
    sum = checked_add(sum, o.sum);
    sum_sq += o.sum_sq;
    if (histogram.size() < o.histogram.size())
      histogram.resize(o.histogram.size(), 0);
    for (std::size_t i = 0; i < o.histogram.size(); ++i)
      histogram[i] += o.histogram[i];
    if (o.argmax && (!argmax || o.max_count > max_count ||
                     (o.max_count == max_count && o.argmax->images() < argmax->images()))) {
      max_count = o.max_count;
      argmax = o.argmax;
    }
  }
};

class CircleCounter {
public:
  explicit CircleCounter(const VectorFamily &f)
      : f_(f), circle_(circle_family(f.params())) {}

  std::size_t count(const Permutation &sigma) const {
    std::size_t c = 0;
    for (const SignedVector &h : circle_)
      if (f_.contains(VectorKey{sigma.apply(h.plus()).bits(), sigma.apply(h.minus()).bits()}))
        ++c;
    return c;
  }

private:
  const VectorFamily &f_;
  VectorFamily circle_;
};

// All permutations whose first image is `first`, in lexicographic order.
void sweep_first(const CircleCounter &counter, int n, int first, Tally &tally) {
  std::vector<int> images{first};
  for (int i = 1; i <= n; ++i)
    if (i != first)
      images.push_back(i);
  do {
    const Permutation sigma(images);
    tally.add(counter.count(sigma), sigma);
  } while (std::next_permutation(images.begin() + 1, images.end()));
}

Tally exhaustive_tally(const CircleCounter &counter, int n, int threads) {
  const int workers = std::clamp(threads, 1, n);
  std::vector<Tally> partial(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    for (int first = w + 1; first <= n; first += workers)
      sweep_first(counter, n, first, partial[static_cast<std::size_t>(w)]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
  }
  Tally total;
  for (const Tally &t : partial)
    total.merge(t);
  return total;
}

void fill_counts(CircleReport &r, const Tally &t) {
  r.permutations = t.permutations;
  r.max_count = t.max_count;
  r.argmax = t.argmax;
  r.histogram = t.histogram;
  r.sum = t.sum;
}

Count multiplicity(const Params &p) {
  return checked_mul(checked_mul(checked_mul(static_cast<Count>(p.n), factorial(p.k)),
                                 factorial(p.l)),
                     factorial(p.n - p.k - p.l));
}

void require_exhaustive_size(const Params &p) {
  if (p.n > kExhaustiveMaxN)
    fail(ErrorCode::TooLarge, "exhaustive permutation sweeps are capped at n = " +
                                  std::to_string(kExhaustiveMaxN));
}

CircleReport start(const VectorFamily &f, const SigmaSweep &sweep) {
  if (f.params().n < 2 * f.params().k)
    fail(ErrorCode::Regime, "circle family needs n >= 2k, got " + f.params().to_string());
  CircleReport r;
  r.params = f.params();
  r.family_size = f.size();
  r.exhaustive = sweep.exhaustive;
  r.seed = sweep.seed;
  return r;
}

// Identity first, then `samples` seeded draws. Only the draws enter the
// sample moments.
void sampled_tally(const CircleCounter &counter, int n, const SigmaSweep &sweep,
                   Tally &with_identity, Tally &draws) {
  const Permutation id = Permutation::identity(n);
  with_identity.add(counter.count(id), id);
  std::mt19937_64 rng(sweep.seed);
  for (std::uint64_t s = 0; s < sweep.samples; ++s) {
    const Permutation sigma = Permutation::random(n, rng);
    const std::size_t c = counter.count(sigma);
    with_identity.add(c, sigma);
    draws.add(c, sigma);
  }
}

void judge_lemma3(CircleReport &r, bool applies) {
  if (applies && r.max_count > static_cast<std::size_t>(r.params.k)) {
    std::string sigma;
    for (int x : r.argmax->images())
      sigma += (sigma.empty() ? "" : " ") + std::to_string(x);
    r.violations.push_back("lemma3: |H(sigma) n F| = " + std::to_string(r.max_count) +
                           " > k = " + std::to_string(r.params.k) + " at sigma = [" +
                           sigma + "]");
  }
}

} // namespace

std::size_t lemma3_count(const VectorFamily &f, const Permutation &sigma) {
  if (sigma.size() != f.params().n)
    fail(ErrorCode::DimensionMismatch, "permutation size " + std::to_string(sigma.size()) +
                                           " does not match n=" +
                                           std::to_string(f.params().n));
  return CircleCounter(f).count(sigma);
}

int max_intersecting_cyclic(int n, int k) {
  if (k < 1 || n < 2 * k)
    fail(ErrorCode::Regime, "needs n >= 2k, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  std::vector<IndexSet> intervals;
  for (int i = 1; i <= n; ++i) {
    IndexSet s;
    for (int j = 0; j < k; ++j)
      s.insert(cyclic_index(i + j, n));
    intervals.push_back(s);
  }
  // Intersecting subfamilies are the independent sets of the disjointness graph.
  Graph g(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t j = i + 1; j < intervals.size(); ++j)
      if (intervals[i].disjoint(intervals[j]))
        g.add_edge(i, j);
  const SearchResult r = max_independent_set(g, SearchOptions{});
  if (!r.proof_of_optimality)
    throw std::logic_error("cyclic interval search did not complete");
  return static_cast<int>(r.optimum);
}

CircleReport lemma3_sweep(const VectorFamily &f, const SigmaSweep &sweep) {
  CircleReport r = start(f, sweep);
  const CircleCounter counter(f);
  Tally all;
  if (sweep.exhaustive) {
    require_exhaustive_size(f.params());
    all = exhaustive_tally(counter, f.params().n, sweep.threads);
  } else {
    Tally draws;
    sampled_tally(counter, f.params().n, sweep, all, draws);
  }
  fill_counts(r, all);
  const bool applies = f.params().circle_regime() && is_antipodal_free(f);
  judge_lemma3(r, applies);
  return r;
}

CircleReport double_count_check(const VectorFamily &f, const SigmaSweep &sweep) {
  CircleReport r = start(f, sweep);
  const Params &p = f.params();
  const CircleCounter counter(f);
  r.identity_checked = true;
  r.expected_sum = checked_mul(static_cast<Count>(f.size()), multiplicity(p));
  const double n_factorial = std::tgamma(static_cast<double>(p.n) + 1.0);
  r.expected_mean = static_cast<double>(r.expected_sum) / n_factorial;
  if (sweep.exhaustive) {
    require_exhaustive_size(p);
    const Tally t = exhaustive_tally(counter, p.n, sweep.threads);
    fill_counts(r, t);
    r.mean = static_cast<double>(r.sum) / static_cast<double>(t.permutations);
    if (t.permutations != factorial(p.n))
      throw std::logic_error("exhaustive sweep missed permutations");
    if (r.sum != r.expected_sum)
      r.violations.push_back("double-count: sum " + std::to_string(r.sum) +
                             " != |F| n k! l! (n-k-l)! = " +
                             std::to_string(r.expected_sum));
    return r;
  }
  if (sweep.samples < 2)
    fail(ErrorCode::Precondition, "sampled double counting needs at least 2 samples");
  Tally all, draws;
  sampled_tally(counter, p.n, sweep, all, draws);
  fill_counts(r, all);
  const double n_draws = static_cast<double>(draws.permutations);
  r.mean = static_cast<double>(draws.sum) / n_draws;
  const double var = std::max(0.0, (draws.sum_sq - n_draws * r.mean * r.mean) / (n_draws - 1.0));
  r.tolerance = 5.0 * std::sqrt(var / n_draws) + 1e-9;
  if (std::abs(r.mean - r.expected_mean) > r.tolerance)
    r.violations.push_back("double-count: sample mean " + std::to_string(r.mean) +
                           " differs from " + std::to_string(r.expected_mean) +
                           " by more than " + std::to_string(r.tolerance));
  return r;
}

CircleReport theorem2_certify(const VectorFamily &f, std::uint64_t samples,
                              std::uint64_t seed) {
  const Params &p = f.params();
  if (!p.circle_regime())
    fail(ErrorCode::Regime, "needs 2k <= n <= 3k-l, got " + p.to_string());
  SigmaSweep sweep;
  sweep.samples = samples;
  sweep.seed = seed;
  CircleReport r = start(f, sweep);
  r.bound = theorem2_bound(p);
  if (auto pair = find_antipodal_pair(f)) {
    r.antipodal_pair = std::pair{f[pair->first], f[pair->second]};
    r.violations.push_back("AntipodalInput: " + format_vector(f[pair->first]) + ", " +
                           format_vector(f[pair->second]));
    return r;
  }
  const CircleCounter counter(f);
  Tally all, draws;
  sampled_tally(counter, p.n, sweep, all, draws);
  fill_counts(r, all);
  judge_lemma3(r, true);
  if (static_cast<Count>(f.size()) > *r.bound)
    r.violations.push_back("theorem2: |F| = " + std::to_string(f.size()) +
                           " exceeds (k/n)|V| = " + std::to_string(*r.bound));
  return r;
}

} // namespace antipodal
