#include "antipodal/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace antipodal {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidParams: return "InvalidParams";
  case ErrorCode::Overlap: return "OverlapError";
  case ErrorCode::Range: return "RangeError";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::BadCharacter: return "BadCharacter";
  case ErrorCode::EmptyInput: return "EmptyInput";
  case ErrorCode::Regime: return "RegimeError";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::GroundMismatch: return "GroundMismatch";
  case ErrorCode::Precondition: return "PreconditionError";
  case ErrorCode::BadPair: return "BadPair";
  case ErrorCode::BadT: return "BadT";
  case ErrorCode::ShapeMismatch: return "ShapeMismatch";
  case ErrorCode::InvalidPermutation: return "InvalidPermutation";
  case ErrorCode::Parse: return "ParseError";
  case ErrorCode::Io: return "IoError";
  case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::initializer_list<int> indices) {
  for (int i : indices)
    insert(i);
}

IndexSet::IndexSet(const std::vector<int> &indices) {
  for (int i : indices)
    insert(i);
}

IndexSet IndexSet::interval(int lo, int hi) {
  IndexSet s;
  for (int i = lo; i <= hi; ++i)
    s.insert(i);
  return s;
}

void IndexSet::insert(int index) {
  if (index < 1 || index > kMaxDimension)
    fail(ErrorCode::Range, "index " + std::to_string(index) +
                               " outside [1.." + std::to_string(kMaxDimension) + "]");
  bits_ |= std::uint64_t{1} << (index - 1);
}

void IndexSet::erase(int index) {
  if (index >= 1 && index <= kMaxDimension)
    bits_ &= ~(std::uint64_t{1} << (index - 1));
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first)
      s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool lex_less(IndexSet a, IndexSet b) noexcept {
  // Compare sorted sequences element by element; a proper prefix is smaller.
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey)
      return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

std::vector<IndexSet> subsets_of_size(IndexSet ground, int r) {
  std::vector<IndexSet> out;
  const std::vector<int> elems = ground.elements();
  const int m = static_cast<int>(elems.size());
  if (r < 0 || r > m)
    return out;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    idx[i] = i;
  while (true) {
    IndexSet s;
    for (int i : idx)
      s.insert(elems[i]);
    out.push_back(s);
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i)
      --i;
    if (i < 0)
      break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> subsets_of_size(int n, int r) {
  return subsets_of_size(IndexSet::interval(1, n), r);
}

// ---------------------------------------------------------------- binomial

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

Count binomial(std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0 || y > x)
    return 0;
  y = std::min(y, x - y);
  unsigned __int128 r = 1;
  for (std::int64_t i = 0; i < y; ++i) {
    r = r * static_cast<unsigned __int128>(x - i) / static_cast<unsigned __int128>(i + 1);
    if (r > std::numeric_limits<Count>::max())
      fail(ErrorCode::Overflow, "binomial(" + std::to_string(x) + "," +
                                    std::to_string(y) + ") exceeds 64 bits");
  }
  return static_cast<Count>(r);
}

Count factorial(int x) {
  Count r = 1;
  for (int i = 2; i <= x; ++i)
    r = checked_mul(r, static_cast<Count>(i));
  return r;
}

// ---------------------------------------------------------------- Params

Params Params::make(int n, int k, int l) {
  Params p{n, k, l};
  p.validate();
  return p;
}

void Params::validate() const {
  if (l < 1 || k < l || k + l > n || n > kMaxDimension) {
    std::ostringstream os;
    os << "invalid parameters " << to_string()
       << ": need 1 <= l <= k and k + l <= n <= " << kMaxDimension;
    fail(ErrorCode::InvalidParams, os.str());
  }
}

std::string Params::to_string() const {
  std::ostringstream os;
  os << "(n=" << n << ", k=" << k << ", l=" << l << ")";
  return os.str();
}

// ---------------------------------------------------------------- vectors

SignedVector::SignedVector(int n, IndexSet plus, IndexSet minus)
    : n_(n), plus_(plus), minus_(minus) {
  if (n < 1 || n > kMaxDimension)
    fail(ErrorCode::Range, "dimension " + std::to_string(n) + " outside [1.." +
                               std::to_string(kMaxDimension) + "]");
  if ((plus | minus).max() > n)
    fail(ErrorCode::Range, "index " + std::to_string((plus | minus).max()) +
                               " outside [1.." + std::to_string(n) + "]");
  if (!plus.disjoint(minus))
    fail(ErrorCode::Overlap, "plus and minus sets overlap at " +
                                 (plus & minus).to_string());
}

int SignedVector::at(int i) const noexcept {
  if (plus_.contains(i))
    return 1;
  if (minus_.contains(i))
    return -1;
  return 0;
}

SignedVector make_vector(int n, IndexSet plus, IndexSet minus) {
  return SignedVector(n, plus, minus);
}

bool canonical_less(const SignedVector &a, const SignedVector &b) noexcept {
  if (a.plus() != b.plus())
    return lex_less(a.plus(), b.plus());
  return lex_less(a.minus(), b.minus());
}

int scalar_product(const SignedVector &v, const SignedVector &w) {
  if (v.dimension() != w.dimension())
    fail(ErrorCode::DimensionMismatch,
         "dimensions " + std::to_string(v.dimension()) + " and " +
             std::to_string(w.dimension()) + " differ");
  return (v.plus() & w.plus()).size() + (v.minus() & w.minus()).size() -
         (v.plus() & w.minus()).size() - (v.minus() & w.plus()).size();
}

bool antipodal_by_supports(const SignedVector &v, const SignedVector &w) noexcept {
  return v.minus().is_subset_of(w.plus()) && w.minus().is_subset_of(v.plus()) &&
         v.plus().disjoint(w.plus());
}

bool is_antipodal(const SignedVector &v, const SignedVector &w, const Params &p) {
  if (v.dimension() != p.n || w.dimension() != p.n)
    fail(ErrorCode::DimensionMismatch, "vectors do not match n=" + std::to_string(p.n));
  if (!v.conforms_to(p) || !w.conforms_to(p))
    fail(ErrorCode::ShapeMismatch, "vectors do not lie in V" + p.to_string());
  const bool by_product = scalar_product(v, w) == -2 * p.l;
  const bool by_supports = antipodal_by_supports(v, w);
  if (by_product != by_supports)
    throw std::logic_error("antipodality characterizations disagree for " +
                           format_vector(v) + " and " + format_vector(w));
  return by_product;
}

SignedVector parse_vector(std::string_view text) {
  if (text.empty())
    fail(ErrorCode::EmptyInput, "empty vector string");
  if (text.size() > static_cast<std::size_t>(kMaxDimension))
    fail(ErrorCode::Range, "vector longer than " + std::to_string(kMaxDimension));
  IndexSet plus, minus;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    switch (text[i]) {
    case '+': plus.insert(index); break;
    case '-': minus.insert(index); break;
    case '0': break;
    default:
      fail(ErrorCode::BadCharacter, std::string("bad character '") + text[i] +
                                        "' at position " + std::to_string(index));
    }
  }
  return SignedVector(static_cast<int>(text.size()), plus, minus);
}

std::string format_vector(const SignedVector &v) {
  std::string s(static_cast<std::size_t>(v.dimension()), '0');
  for (int i : v.plus().elements())
    s[i - 1] = '+';
  for (int i : v.minus().elements())
    s[i - 1] = '-';
  return s;
}

// ---------------------------------------------------------------- families

VectorFamily::VectorFamily(Params params) : params_(params) { params_.validate(); }

bool VectorFamily::insert(const SignedVector &v) {
  if (!v.conforms_to(params_))
    fail(ErrorCode::ShapeMismatch,
         "vector " + format_vector(v) + " is not in V" + params_.to_string());
  if (!index_.insert(key_of(v)).second)
    return false;
  members_.push_back(v);
  return true;
}

bool VectorFamily::contains(const SignedVector &v) const noexcept {
  return v.dimension() == params_.n && index_.count(key_of(v)) != 0;
}

bool VectorFamily::contains(VectorKey key) const noexcept {
  return index_.count(key) != 0;
}

bool VectorFamily::same_members(const VectorFamily &other) const {
  if (params_ != other.params_ || size() != other.size())
    return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](const SignedVector &v) { return other.contains(v); });
}

VectorFamily enumerate_v(const Params &p) {
  p.validate();
  VectorFamily out(p);
  const IndexSet all = IndexSet::interval(1, p.n);
  for (IndexSet plus : subsets_of_size(all, p.k))
    for (IndexSet minus : subsets_of_size(all - plus, p.l))
      out.insert(SignedVector(p.n, plus, minus));
  return out;
}

Count cardinality_v(const Params &p) {
  p.validate();
  const Count a = checked_mul(binomial(p.n, p.k), binomial(p.n - p.k, p.l));
  const Count b = checked_mul(binomial(p.n, p.k + p.l), binomial(p.k + p.l, p.l));
  if (a != b)
    throw std::logic_error("cardinality forms disagree for " + p.to_string());
  return a;
}

Count antipodal_degree(const Params &p) {
  p.validate();
  return checked_mul(binomial(p.k, p.l), binomial(p.n - p.k - p.l, p.k - p.l));
}

std::vector<SignedVector> antipodal_neighbors(const SignedVector &v,
                                              const Params &p) {
  if (!v.conforms_to(p))
    fail(ErrorCode::ShapeMismatch,
         "vector " + format_vector(v) + " is not in V" + p.to_string());
  std::vector<SignedVector> out;
  for (const SignedVector &w : enumerate_v(p))
    if (is_antipodal(v, w, p))
      out.push_back(w);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>>
find_antipodal_pair(const VectorFamily &f) {
  const auto &m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (antipodal_by_supports(m[i], m[j]))
        return std::pair{i, j};
  return std::nullopt;
}

} // namespace antipodal
