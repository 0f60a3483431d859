#include "fink/kvector.hpp"

#include <algorithm>
#include <bit>

#include "fink/error.hpp"
#include "fink/simd/kernels.hpp"

namespace fink {
namespace {

void check_level(int k) {
  if (k < 1 || k > kMaxLevel)
    throw PreconditionError("ambient level " + std::to_string(k) + " outside [1, " + std::to_string(kMaxLevel) + "]");
}

void check_same_ambient(const LeKVector& s, const LeKVector& t) {
  if (s.ambient() != t.ambient()) throw AmbientMismatch(s.ambient(), t.ambient());
}

const simd::KernelTable& kernels() { return simd::active_kernels(); }

}  // namespace

LeKVector::LeKVector(int k) : k_(k) { check_level(k); }

LeKVector::LeKVector(int k, std::vector<Coeff> coeffs) : k_(k), coeffs_(std::move(coeffs)) {
  check_level(k);
  normalize();
}

LeKVector::LeKVector(int k, std::initializer_list<int> coeffs) : k_(k) {
  check_level(k);
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) {
    if (c < 0 || c > k) throw PreconditionError("coefficient " + std::to_string(c) + " outside [0, " + std::to_string(k) + "]");
    coeffs_.push_back(static_cast<Coeff>(c));
  }
  normalize();
}

LeKVector::LeKVector(int k, std::vector<Coeff> coeffs, int level) : k_(k), level_(level), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void LeKVector::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  level_ = kernels().max_value(coeffs_.data(), coeffs_.size());
  if (level_ > k_)
    throw PreconditionError("coefficient " + std::to_string(level_) + " exceeds ambient level " + std::to_string(k_));
}

LeKVector LeKVector::unit(int k, std::size_t position, int value) {
  if (value < 0 || value > k) throw PreconditionError("unit value outside [0, k]");
  std::vector<Coeff> c(position + 1, 0);
  c[position] = static_cast<Coeff>(value);
  return LeKVector(k, std::move(c));
}

std::optional<std::size_t> LeKVector::min_support() const noexcept {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (coeffs_[n] != 0) return n;
  return std::nullopt;
}

std::optional<std::size_t> LeKVector::max_support() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::vector<std::size_t> LeKVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (coeffs_[n] != 0) out.push_back(n);
  return out;
}

LeKVector LeKVector::relevel(int k) const {
  check_level(k);
  if (level_ > k) throw PreconditionError("cannot relevel a level-" + std::to_string(level_) + " vector to " + std::to_string(k));
  return LeKVector(k, coeffs_, level_);
}

LeKVector LeKVector::restrict_to_support_of(const LeKVector& mask) const {
  std::vector<Coeff> out(std::min(coeffs_.size(), mask.coeffs_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = mask.coeffs_[n] != 0 ? coeffs_[n] : Coeff{0};
  return LeKVector(k_, std::move(out));
}

std::strong_ordering operator<=>(const LeKVector& a, const LeKVector& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return a.coeffs_ <=> b.coeffs_;
}

KVector::KVector(LeKVector v) : v_(std::move(v)) {
  if (!v_.is_kvector())
    throw PreconditionError("not a k-vector: level " + std::to_string(v_.level()) + " at ambient " + std::to_string(v_.ambient()));
}

KVector::KVector(int k, std::initializer_list<int> coeffs) : KVector(LeKVector(k, coeffs)) {}

std::size_t LeKVectorHash::operator()(const LeKVector& v) const noexcept {
  // FNV-1a over the ambient level and coefficients.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(v.ambient()));
  for (Coeff c : v.coeffs()) mix(c);
  return static_cast<std::size_t>(h);
}

LeKVector join(const LeKVector& s, const LeKVector& t) {
  check_same_ambient(s, t);
  const LeKVector& longer = s.extent() >= t.extent() ? s : t;
  const LeKVector& shorter = s.extent() >= t.extent() ? t : s;
  std::vector<Coeff> out(longer.coeffs().begin(), longer.coeffs().end());
  kernels().join(longer.coeffs().data(), shorter.coeffs().data(), out.data(), shorter.extent());
  return LeKVector(s.ambient(), std::move(out));
}

LeKVector meet(const LeKVector& s, const LeKVector& t) {
  check_same_ambient(s, t);
  const std::size_t n = std::min(s.extent(), t.extent());
  std::vector<Coeff> out(n);
  kernels().meet(s.coeffs().data(), t.coeffs().data(), out.data(), n);
  return LeKVector(s.ambient(), std::move(out));
}

LeKVector tetris(const LeKVector& s, int times) {
  if (times < 0) throw PreconditionError("negative tetris exponent");
  if (times == 0) return s;
  if (times >= s.level()) return LeKVector(s.ambient());
  std::vector<Coeff> out(s.extent());
  kernels().tetris(s.coeffs().data(), out.data(), out.size(), static_cast<Coeff>(times));
  return LeKVector(s.ambient(), std::move(out));
}

LeKVector lift(const LeKVector& s) {
  if (s.is_zero()) throw PreconditionError("lift is undefined on the zero vector");
  std::vector<Coeff> out(s.coeffs().begin(), s.coeffs().end());
  for (Coeff& c : out)
    if (c != 0) ++c;
  return LeKVector(s.ambient() + 1, std::move(out));
}

bool block_less(const LeKVector& s, const LeKVector& t) {
  check_same_ambient(s, t);
  if (s.is_zero() || t.is_zero()) return false;
  return *s.max_support() < *t.min_support();
}

bool sqsubseteq(const LeKVector& s, const LeKVector& t) {
  check_same_ambient(s, t);
  if (s.extent() > t.extent()) return false;  // s is trimmed: its last entry is nonzero
  return kernels().agrees_on_support(s.coeffs().data(), t.coeffs().data(), s.extent());
}

bool perp(const LeKVector& s, const LeKVector& t) {
  check_same_ambient(s, t);
  const std::size_t n = std::min(s.extent(), t.extent());
  return kernels().disagrees_on_common_support(s.coeffs().data(), t.coeffs().data(), n);
}

bool lattice_leq(const LeKVector& s, const LeKVector& t) { return meet(s, t) == s; }

LeKVector disjoint_sum(const LeKVector& s, const LeKVector& t) {
  check_same_ambient(s, t);
  if (s.is_zero()) return t;
  if (t.is_zero()) return s;
  if (!block_less(s, t)) throw PreconditionError("disjoint_sum needs max supp s < min supp t: " + to_string(s) + " + " + to_string(t));
  return join(s, t);
}

std::optional<std::size_t> min_level(const LeKVector& s, int i) {
  const auto c = s.coeffs();
  for (std::size_t n = 0; n < c.size(); ++n)
    if (c[n] == i) return n;
  return std::nullopt;
}

std::optional<std::size_t> max_level(const LeKVector& s, int i) {
  const auto c = s.coeffs();
  for (std::size_t n = c.size(); n-- > 0;)
    if (c[n] == i) return n;
  return std::nullopt;
}

bool is_sos(const LeKVector& s) {
  const int k = s.level();
  if (k == 0) return false;
  const auto c = s.coeffs();

  std::vector<std::size_t> first(static_cast<std::size_t>(k) + 1, c.size());
  std::vector<std::size_t> last(static_cast<std::size_t>(k) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (std::size_t n = 0; n < c.size(); ++n) {
    const Coeff v = c[n];
    if (v == 0) continue;
    if (!seen[v]) first[v] = n;
    seen[v] = true;
    last[v] = n;
  }
  for (int i = 1; i <= k; ++i)
    if (!seen[i]) return false;

  // Nesting min_1 < ... < min_k < max_k < ... < max_1; pairwise order follows
  // from the consecutive comparisons.
  for (int i = 1; i < k; ++i)
    if (!(first[i] < first[i + 1] && last[i + 1] < last[i])) return false;
  if (!(first[k] < last[k])) return false;

  // Values present on the closed interval [lo, hi], as a bit set.
  auto range_bits = [&](std::size_t lo, std::size_t hi) {
    std::uint64_t bits = 0;
    for (std::size_t n = lo; n <= hi; ++n) bits |= std::uint64_t{1} << std::min<int>(c[n], 63);
    return bits;
  };
  auto full = [](int i) { return i >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (i + 1)) - 1; };
  if (k > 62) {
    // Bit sets cannot express this level; fall back to an explicit check.
    auto has_all = [&](std::size_t lo, std::size_t hi, int i) {
      std::vector<bool> present(static_cast<std::size_t>(i) + 1, false);
      for (std::size_t n = lo; n <= hi; ++n) {
        if (c[n] > i) return false;
        present[c[n]] = true;
      }
      return std::all_of(present.begin(), present.end(), [](bool b) { return b; });
    };
    for (int i = 2; i <= k; ++i)
      if (!has_all(first[i - 1], first[i], i) || !has_all(last[i], last[i - 1], i)) return false;
    return has_all(first[k], last[k], k);
  }
  for (int i = 2; i <= k; ++i) {
    if (range_bits(first[i - 1], first[i]) != full(i)) return false;
    if (range_bits(last[i], last[i - 1]) != full(i)) return false;
  }
  return range_bits(first[k], last[k]) == full(k);
}

std::string to_string(const LeKVector& s) {
  std::string out = "[";
  for (std::size_t n = 0; n < s.extent(); ++n) {
    if (n) out += ',';
    out += std::to_string(s[n]);
  }
  return out + "]";
}

}  // namespace fink
