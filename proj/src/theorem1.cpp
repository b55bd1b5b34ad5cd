#include "antipodal/theorem1.hpp"

#include <unordered_set>

#include "antipodal/bounds.hpp"

namespace antipodal {

namespace {

void check_pair(const Params &p, IndexSet a, IndexSet b) {
  if (a.size() != p.l || b.size() != p.l || !a.disjoint(b) ||
      (a | b).max() > p.n)
    fail(ErrorCode::BadPair, "need disjoint l-subsets of [1..n], got A=" +
                                 a.to_string() + ", B=" + b.to_string());
}

// Ordered pairs of disjoint l-sets, A lexicographic, then B.
std::vector<std::pair<IndexSet, IndexSet>> ordered_pairs(const Params &p) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  const IndexSet all = IndexSet::interval(1, p.n);
  for (IndexSet a : subsets_of_size(all, p.l))
    for (IndexSet b : subsets_of_size(all - a, p.l))
      out.emplace_back(a, b);
  return out;
}

std::string pair_text(IndexSet a, IndexSet b) {
  return "A=" + a.to_string() + ", B=" + b.to_string();
}

void run_lemma1(const VectorFamily &f, TraceReport &r) {
  r.lemma1_ran = true;
  const Params &p = f.params();
  for (const auto &[a, b] : ordered_pairs(p)) {
    if (!lex_less(a, b))
      continue;
    ++r.lemma1_pairs_checked;
    const SetFamily fab = subfamily(f, a, b);
    const SetFamily fba = subfamily(f, b, a);
    if (is_cross_intersecting(fab, fba))
      continue;
    for (IndexSet c : fab) {
      bool found = false;
      for (IndexSet d : fba) {
        if (!c.disjoint(d))
          continue;
        Lemma1Violation v{a, b, c, d, SignedVector(p.n, a | c, b),
                          SignedVector(p.n, b | d, a), 0};
        v.product = scalar_product(v.v, v.w);
        r.violations.push_back("lemma1: F(A,B) and F(B,A) not cross-intersecting at " +
                               pair_text(a, b) + "; " + format_vector(v.v) + " and " +
                               format_vector(v.w) + " have product " +
                               std::to_string(v.product));
        r.lemma1_violations.push_back(std::move(v));
        found = true;
        break;
      }
      if (found)
        break;
    }
  }
}

VectorFamily run_deletion(const VectorFamily &f, TraceReport &r) {
  r.deletion_ran = true;
  const Params &p = f.params();
  const auto [n, k, l] = p;
  r.threshold = binomial(n - 2 * l - 1, k - l - 1);
  r.pair_count = checked_mul(binomial(n, 2 * l), binomial(2 * l, l));

  std::unordered_set<VectorKey, VectorKeyHash> doomed;
  for (const auto &[a, b] : ordered_pairs(p)) {
    PairTrace t{a, b, subfamily(f, a, b).size(), false, 0};
    t.triggered = static_cast<Count>(t.subfamily_size) <= r.threshold;
    if (t.triggered)
      for (const SignedVector &v : f)
        if (v.minus() == b && a.is_subset_of(v.plus()) && doomed.insert(key_of(v)).second)
          ++t.newly_deleted;
    r.deleted += t.newly_deleted;
    r.pairs.push_back(t);
  }
  if (r.pairs.size() != r.pair_count)
    throw std::logic_error("visited pair count does not match C(n,2l) C(2l,l)");

  VectorFamily fprime(p);
  for (const SignedVector &v : f)
    if (!doomed.count(key_of(v)))
      fprime.insert(v);
  r.fprime_size = fprime.size();

  const Count removable = checked_mul(r.pair_count, r.threshold);
  r.deletion_lower_bound =
      static_cast<long long>(f.size()) - static_cast<long long>(removable);
  if (r.fprime_size + r.deleted != f.size())
    r.violations.push_back("deletion: |F'| + deleted != |F|");
  if (static_cast<long long>(r.fprime_size) < r.deletion_lower_bound)
    r.violations.push_back("deletion: |F'| = " + std::to_string(r.fprime_size) +
                           " is below |F| - C(n,2l)C(2l,l)C(n-2l-1,k-l-1) = " +
                           std::to_string(r.deletion_lower_bound));
  for (const PairTrace &t : r.pairs)
    if (static_cast<Count>(t.newly_deleted) > r.threshold)
      r.violations.push_back("deletion: pair " + pair_text(t.a, t.b) + " removed " +
                             std::to_string(t.newly_deleted) + " > threshold");

  // Every survivor v must have |F(A, S-(v))| above the threshold for each
  // l-subset A of S+(v).
  for (const SignedVector &v : fprime) {
    for (IndexSet a : subsets_of_size(v.plus(), l)) {
      if (static_cast<Count>(subfamily(f, a, v.minus()).size()) <= r.threshold) {
        r.survivor_property = false;
        r.violations.push_back("deletion: survivor " + format_vector(v) +
                               " has small F(A,B) at " + pair_text(a, v.minus()));
      }
    }
  }
  return fprime;
}

void run_lemma2(const VectorFamily &fprime, TraceReport &r, bool check_caps) {
  r.lemma2_ran = true;
  const auto [n, k, l] = fprime.params();
  r.family_b_cap = binomial(k + l - 1, l - 1);
  r.fprime_cap = checked_mul(binomial(n, k + l), r.family_b_cap);
  std::size_t total = 0;
  for (IndexSet t : subsets_of_size(n, k + l)) {
    const SetFamily fb = family_b(fprime, t);
    TSetTrace tt{t, fb.size(), is_intersecting(fb)};
    total += fb.size();
    if (!tt.intersecting)
      r.violations.push_back("lemma2: family B over T=" + t.to_string() +
                             " is not intersecting");
    if (check_caps && static_cast<Count>(fb.size()) > r.family_b_cap)
      r.violations.push_back("lemma2: |B| = " + std::to_string(fb.size()) +
                             " exceeds C(k+l-1,l-1) = " + std::to_string(r.family_b_cap) +
                             " over T=" + t.to_string());
    r.t_sets.push_back(tt);
  }
  if (total != fprime.size())
    throw std::logic_error("family B sizes do not sum to |F'|");
}

TraceReport start_report(const VectorFamily &f) {
  TraceReport r;
  r.params = f.params();
  r.input_size = f.size();
  r.bound = theorem1_bound(f.params());
  return r;
}

} // namespace

SetFamily subfamily(const VectorFamily &f, IndexSet a, IndexSet b) {
  const Params &p = f.params();
  check_pair(p, a, b);
  SetFamily out(p.n, p.k - p.l);
  for (const SignedVector &v : f)
    if (v.minus() == b && a.is_subset_of(v.plus()))
      out.insert(v.plus() - a);
  return out;
}

SetFamily family_b(const VectorFamily &fprime, IndexSet t) {
  const Params &p = fprime.params();
  if (t.size() != p.k + p.l || t.max() > p.n)
    fail(ErrorCode::BadT, "T must be a (k+l)-subset of [1..n], got " + t.to_string());
  SetFamily out(p.n, p.l);
  for (const SignedVector &v : fprime)
    if (v.support() == t)
      out.insert(v.minus());
  return out;
}

TraceReport lemma1_check(const VectorFamily &f) {
  TraceReport r = start_report(f);
  run_lemma1(f, r);
  return r;
}

std::pair<VectorFamily, TraceReport> deletion_procedure(const VectorFamily &f) {
  TraceReport r = start_report(f);
  VectorFamily fprime = run_deletion(f, r);
  return {std::move(fprime), std::move(r)};
}

TraceReport lemma2_check(const VectorFamily &f) {
  TraceReport r = start_report(f);
  const VectorFamily fprime = run_deletion(f, r);
  run_lemma2(fprime, r, false);
  return r;
}

TraceReport certify_theorem1(const VectorFamily &f) {
  TraceReport r = start_report(f);
  if (auto pair = find_antipodal_pair(f)) {
    r.antipodal_free = false;
    r.antipodal_pair = std::pair{f[pair->first], f[pair->second]};
    r.violations.push_back("precheck: family contains the antipodal pair " +
                           format_vector(f[pair->first]) + ", " +
                           format_vector(f[pair->second]));
    return r;
  }
  run_lemma1(f, r);
  const VectorFamily fprime = run_deletion(f, r);
  run_lemma2(fprime, r, true);
  if (static_cast<Count>(r.fprime_size) > r.fprime_cap)
    r.violations.push_back("final: |F'| = " + std::to_string(r.fprime_size) +
                           " exceeds C(n,k+l)C(k+l-1,l-1) = " + std::to_string(r.fprime_cap));
  if (static_cast<Count>(f.size()) > r.bound)
    r.violations.push_back("final: |F| = " + std::to_string(f.size()) +
                           " exceeds the bound " + std::to_string(r.bound));
  return r;
}

} // namespace antipodal
