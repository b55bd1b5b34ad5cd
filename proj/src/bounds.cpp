#include "antipodal/bounds.hpp"

namespace antipodal {

Count ekr_bound(int n, int k) {
  if (k <= 0 || n < 2 * k)
    fail(ErrorCode::Regime, "EKR bound needs n >= 2k > 0, got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  return binomial(n - 1, k - 1);
}

Count theorem1_bound(const Params &p) {
  p.validate();
  const auto [n, k, l] = p;
  const Count first = checked_mul(binomial(n, k + l), binomial(k + l - 1, l - 1));
  const Count second = checked_mul(
      checked_mul(binomial(n, 2 * l), binomial(2 * l, l)), binomial(n - 2 * l - 1, k - l - 1));
  return checked_add(first, second);
}

Count theorem2_bound(const Params &p) {
  p.validate();
  if (!p.circle_regime())
    fail(ErrorCode::Regime, "needs 2k <= n <= 3k - l, got " + p.to_string());
  const Count value =
      checked_mul(binomial(p.n - 1, p.k + p.l - 1), binomial(p.k + p.l - 1, p.k - 1));
  const Count scaled = checked_mul(static_cast<Count>(p.k), cardinality_v(p));
  if (scaled % static_cast<Count>(p.n) != 0 || scaled / static_cast<Count>(p.n) != value)
    throw std::logic_error("(k/n)|V| does not match the product form at " + p.to_string());
  return value;
}

Count fk1_bound(int n, int k) {
  if (k < 1 || n < 2 * k)
    fail(ErrorCode::Regime, "needs n >= 2k, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  const int square = k * k;
  if (n <= square)
    return checked_mul(static_cast<Count>(k), binomial(n - 1, k));
  Count total = checked_mul(static_cast<Count>(k), binomial(square - 1, k));
  for (int m = square; m <= n - 1; ++m)
    total = checked_add(total, binomial(m, k));
  return total;
}

const BoundEntry *BoundTable::find(const std::string &name) const {
  for (const BoundEntry &e : entries)
    if (e.name == name)
      return &e;
  return nullptr;
}

std::optional<Count> BoundTable::value(const std::string &name) const {
  const BoundEntry *e = find(name);
  return e ? e->value : std::nullopt;
}

BoundTable bound_table(const Params &p) {
  p.validate();
  const auto [n, k, l] = p;
  BoundTable t{p, {}};
  auto add = [&](std::string name, bool ok, std::string condition, auto compute) {
    BoundEntry e{std::move(name), std::nullopt, std::move(condition)};
    if (ok)
      e.value = compute();
    t.entries.push_back(std::move(e));
  };
  // Family sizes come from the closed forms; the constructions are checked
  // against them separately.
  add("V", true, "", [&] { return cardinality_v(p); });
  add("ex1", true, "", [&] {
    return checked_mul(binomial(n, k + l), binomial(k + l - 1, l - 1));
  });
  add("ex2", true, "", [&] {
    return checked_mul(binomial(n - 1, k + l - 1), binomial(k + l - 1, k - 1));
  });
  add("thm1", true, "", [&] { return theorem1_bound(p); });
  add("thm2", p.circle_regime(), "2k <= n <= 3k-l", [&] { return theorem2_bound(p); });
  add("fk1", l == 1 && n >= 2 * k, "l = 1 and n >= 2k", [&] { return fk1_bound(n, k); });
  // EKR on the supports: intersecting (k+l)-subsets of [n].
  add("ekr", n >= 2 * (k + l), "n >= 2(k+l)", [&] { return ekr_bound(n, k + l); });
  return t;
}

} // namespace antipodal
