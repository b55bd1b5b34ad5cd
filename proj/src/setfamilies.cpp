#include "antipodal/setfamilies.hpp"

#include <algorithm>
#include <thread>

namespace antipodal {

SetFamily::SetFamily(int ground, int uniformity)
    : ground_(ground), uniformity_(uniformity) {
  if (ground < 0 || ground > kMaxDimension || uniformity < 0 || uniformity > ground)
    fail(ErrorCode::InvalidParams, "set family needs 0 <= a <= m <= 64");
}

SetFamily::SetFamily(int ground, int uniformity, const std::vector<IndexSet> &members)
    : SetFamily(ground, uniformity) {
  for (IndexSet s : members)
    insert(s);
}

bool SetFamily::insert(IndexSet s) {
  if (s.max() > ground_)
    fail(ErrorCode::Range, "set " + s.to_string() + " leaves [1.." +
                               std::to_string(ground_) + "]");
  if (s.size() != uniformity_)
    fail(ErrorCode::ShapeMismatch, "set " + s.to_string() + " does not have size " +
                                       std::to_string(uniformity_));
  if (!index_.insert(s).second)
    return false;
  members_.push_back(s);
  return true;
}

void SetFamily::erase_at(std::size_t i) {
  index_.erase(members_.at(i));
  members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(i));
}

bool is_intersecting(const SetFamily &f) {
  const auto &m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i].disjoint(m[j]))
        return false;
  return true;
}

bool is_cross_intersecting(const SetFamily &a, const SetFamily &b) {
  if (a.ground() != b.ground())
    fail(ErrorCode::GroundMismatch, "ground sets [1.." + std::to_string(a.ground()) +
                                        "] and [1.." + std::to_string(b.ground()) +
                                        "] differ");
  for (IndexSet x : a)
    for (IndexSet y : b)
      if (x.disjoint(y))
        return false;
  return true;
}

bool proposition1_holds(const SetFamily &a, const SetFamily &b) {
  const int m = a.ground();
  if (m < a.uniformity() + b.uniformity())
    fail(ErrorCode::Precondition, "need m >= a + b, got m=" + std::to_string(m) +
                                      ", a=" + std::to_string(a.uniformity()) +
                                      ", b=" + std::to_string(b.uniformity()));
  if (!is_cross_intersecting(a, b))
    fail(ErrorCode::Precondition, "families are not cross-intersecting");
  return a.size() <= binomial(m - 1, a.uniformity() - 1) ||
         b.size() <= binomial(m - 1, b.uniformity() - 1);
}

Prop1Report &Prop1Report::merge(const Prop1Report &other) {
  a_families += other.a_families;
  pruned += other.pruned;
  cross_intersecting_pairs += other.cross_intersecting_pairs;
  counterexamples += other.counterexamples;
  return *this;
}

Prop1Report verify_prop1_exhaustive(int m, int a, int b, int threads) {
  if (a < 1 || b < 1 || m < a + b)
    fail(ErrorCode::Precondition, "need a, b >= 1 and m >= a + b");
  if (binomial(m, a) > 12 || binomial(m, b) > 12)
    fail(ErrorCode::TooLarge, "C(m,a) and C(m,b) must both be at most 12");

  const std::vector<IndexSet> level_a = subsets_of_size(m, a);
  const std::vector<IndexSet> level_b = subsets_of_size(m, b);
  const int na = static_cast<int>(level_a.size());
  const int nb = static_cast<int>(level_b.size());

  // meets[i]: bitmask over level_b of the b-sets meeting the i-th a-set.
  std::vector<std::uint32_t> meets(static_cast<std::size_t>(na), 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      if (!level_a[i].disjoint(level_b[j]))
        meets[i] |= std::uint32_t{1} << j;

  Prop1Report base;
  base.m = m;
  base.a = a;
  base.b = b;
  base.cap_a = binomial(m - 1, a - 1);
  base.cap_b = binomial(m - 1, b - 1);

  const std::uint32_t all_b = nb == 32 ? ~0u : (std::uint32_t{1} << nb) - 1;
  const std::uint64_t a_total = std::uint64_t{1} << na;

  auto sweep = [&](std::uint64_t start, std::uint64_t stride) {
    Prop1Report r;
    for (std::uint64_t fa = start; fa < a_total; fa += stride) {
      ++r.a_families;
      std::uint32_t pool = all_b;
      for (std::uint64_t bits = fa; bits != 0; bits &= bits - 1)
        pool &= meets[static_cast<std::size_t>(std::countr_zero(bits))];
      const int pool_size = std::popcount(pool);
      r.cross_intersecting_pairs += std::uint64_t{1} << pool_size;
      // Only an A above its cap paired with a B above its cap can refute the
      // disjunction, and every such B lives inside the compatible pool.
      if (static_cast<Count>(std::popcount(fa)) <= base.cap_a ||
          static_cast<Count>(pool_size) <= base.cap_b) {
        ++r.pruned;
        continue;
      }
      for (std::uint32_t fb = pool;; fb = (fb - 1) & pool) {
        if (static_cast<Count>(std::popcount(fb)) > base.cap_b) {
          bool cross = true;
          for (std::uint64_t x = fa; x != 0 && cross; x &= x - 1)
            cross = (meets[static_cast<std::size_t>(std::countr_zero(x))] & fb) == fb;
          if (cross)
            ++r.counterexamples;
        }
        if (fb == 0)
          break;
      }
    }
    return r;
  };

  const int workers = std::clamp(threads, 1, 64);
  if (workers == 1) {
    base.merge(sweep(0, 1));
    return base;
  }
  std::vector<Prop1Report> partial(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        partial[static_cast<std::size_t>(t)] =
            sweep(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(workers));
      });
  }
  for (const Prop1Report &r : partial)
    base.merge(r);
  return base;
}

} // namespace antipodal
