#pragma once
// k-vectors and (<=k)-vectors: finitely supported maps N -> {0..k}.
//
// A LeKVector lives at an ambient level k and may have any maximum value in
// [0, k]; the all-zero vector is the bottom element. A KVector is a LeKVector
// whose maximum equals its ambient level. Coefficients are stored densely from
// position 0 to the last nonzero position.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fink {

using Coeff = std::uint8_t;

/// Largest ambient level a vector may carry.
inline constexpr int kMaxLevel = 250;

class LeKVector {
 public:
  /// The zero vector at ambient level k.
  explicit LeKVector(int k);
  LeKVector(int k, std::vector<Coeff> coeffs);
  LeKVector(int k, std::initializer_list<int> coeffs);

  /// Vector with a single nonzero coefficient.
  static LeKVector unit(int k, std::size_t position, int value);

  int ambient() const noexcept { return k_; }
  /// Largest coefficient; 0 for the zero vector.
  int level() const noexcept { return level_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_kvector() const noexcept { return level_ == k_; }

  /// One past the last support position.
  std::size_t extent() const noexcept { return coeffs_.size(); }
  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  /// Coefficient at n; 0 beyond the stored extent.
  int operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : 0; }

  std::optional<std::size_t> min_support() const noexcept;
  std::optional<std::size_t> max_support() const noexcept;
  std::vector<std::size_t> support() const;

  /// Same coefficients embedded at another ambient level (FIN_{<=k} inclusion).
  LeKVector relevel(int k) const;
  /// Coefficients restricted to positions where `mask` is nonzero.
  LeKVector restrict_to_support_of(const LeKVector& mask) const;

  friend bool operator==(const LeKVector&, const LeKVector&) = default;
  friend std::strong_ordering operator<=>(const LeKVector& a, const LeKVector& b);

 private:
  LeKVector(int k, std::vector<Coeff> coeffs, int level);
  void normalize();

  int k_;
  int level_ = 0;
  std::vector<Coeff> coeffs_;
};

/// A LeKVector that attains its ambient level.
class KVector {
 public:
  /// Throws PreconditionError unless v.is_kvector().
  explicit KVector(LeKVector v);
  KVector(int k, std::initializer_list<int> coeffs);

  const LeKVector& vec() const noexcept { return v_; }
  operator const LeKVector&() const noexcept { return v_; }  // NOLINT(google-explicit-constructor)
  int k() const noexcept { return v_.ambient(); }
  int operator[](std::size_t n) const noexcept { return v_[n]; }
  std::size_t extent() const noexcept { return v_.extent(); }

  friend bool operator==(const KVector&, const KVector&) = default;
  friend auto operator<=>(const KVector& a, const KVector& b) { return a.v_ <=> b.v_; }

 private:
  LeKVector v_;
};

struct LeKVectorHash {
  std::size_t operator()(const LeKVector& v) const noexcept;
};

// Lattice operations. Binary operations throw AmbientMismatch on differing
// ambient levels.
LeKVector join(const LeKVector& s, const LeKVector& t);
LeKVector meet(const LeKVector& s, const LeKVector& t);
/// T applied `times` times: every coefficient lowered by `times`, floored at 0.
LeKVector tetris(const LeKVector& s, int times = 1);
/// Inverse of T on nonzero vectors: +1 on the support, ambient level + 1.
LeKVector lift(const LeKVector& s);

/// max supp s < min supp t; false when either vector is zero.
bool block_less(const LeKVector& s, const LeKVector& t);
/// t restricted to supp s equals s.
bool sqsubseteq(const LeKVector& s, const LeKVector& t);
/// s(n) != t(n) on every common support point.
bool perp(const LeKVector& s, const LeKVector& t);
/// s <=_L t, i.e. meet(s, t) == s.
bool lattice_leq(const LeKVector& s, const LeKVector& t);
/// s + t: the join of block-ordered vectors. Zero operands are allowed.
LeKVector disjoint_sum(const LeKVector& s, const LeKVector& t);

/// Least / greatest position carrying value i, if any.
std::optional<std::size_t> min_level(const LeKVector& s, int i);
std::optional<std::size_t> max_level(const LeKVector& s, int i);

/// System-of-staircases predicate, evaluated at the vector's own level.
bool is_sos(const LeKVector& s);

/// "[1,0,2]" style rendering.
std::string to_string(const LeKVector& s);

}  // namespace fink

template <>
struct std::hash<fink::LeKVector> : fink::LeKVectorHash {};
