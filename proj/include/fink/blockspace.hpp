#pragma once
// Finite block sequences and the combinatorial subspaces they generate.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fink/kvector.hpp"

namespace fink {

/// k-vectors with strictly increasing supports: max supp x_n < min supp x_{n+1}.
class BlockSequence {
 public:
  explicit BlockSequence(int k);
  /// Throws PreconditionError if the terms are not block ordered, and
  /// AmbientMismatch if a term lives at another level.
  BlockSequence(int k, std::vector<KVector> terms);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::vector<KVector>& terms() const noexcept { return terms_; }
  const KVector& operator[](std::size_t n) const { return terms_[n]; }

  void push_back(KVector term);
  BlockSequence prefix(std::size_t n) const;

  friend bool operator==(const BlockSequence&, const BlockSequence&) = default;

 private:
  int k_;
  std::vector<KVector> terms_;
};

/// (e_0, ..., e_{n-1}) with e_i the k-vector equal to k at position i.
BlockSequence standard_basis(int k, std::size_t n);

/// Coefficient vector over a generating sequence, one entry in [0, k] per generator.
using Coefficients = std::vector<int>;

/// Sum of T^{k - c[n]} alpha[n]; generators with c[n] = 0 are skipped.
LeKVector recompose(const BlockSequence& alpha, std::span<const int> c);

/// Elements of the subspace generated by alpha whose coefficient maximum is
/// exactly `level`, in lexicographic order of coefficient tuples.
std::vector<LeKVector> subspace_elements(const BlockSequence& alpha, int level);
/// Top-level elements together with their coefficient tuples.
std::vector<std::pair<Coefficients, LeKVector>> subspace_with_coefficients(const BlockSequence& alpha);

/// Coefficients of `a` over alpha, or nothing when a is not in the subspace.
/// Each generator's coefficient is read off at one of its top positions and
/// then checked against the whole support.
std::optional<Coefficients> try_decompose(const BlockSequence& alpha, const LeKVector& a);
/// As try_decompose, throwing NotInSubspace on failure.
Coefficients canonical_decomposition(const BlockSequence& alpha, const LeKVector& a);
bool in_subspace(const BlockSequence& alpha, const LeKVector& a);

/// Called with the coefficient rows of each block subsequence; return false to stop.
using RowsVisitor = std::function<bool(std::span<const Coefficients>)>;

/// Optional pruning hook: called with a candidate row and its term vector
/// before descending; return false to skip every subsequence starting with
/// the rows chosen so far.
using RowFilter = std::function<bool(std::size_t row_index, const Coefficients& row, const LeKVector& term)>;

/// Visits every length-m block subsequence of alpha as a matrix of coefficient
/// rows, in lexicographic order of the flattened matrix.
void for_each_block_subsequence(const BlockSequence& alpha, std::size_t m, const RowsVisitor& visit,
                                const RowFilter& filter = {});
std::vector<BlockSequence> block_subsequences(const BlockSequence& alpha, std::size_t m);
/// Terms of the subsequence described by coefficient rows.
BlockSequence realize(const BlockSequence& alpha, std::span<const Coefficients> rows);

/// beta is block ordered by construction; true iff every term lies in the
/// subspace of alpha.
bool is_subsequence(const BlockSequence& beta, const BlockSequence& alpha);

/// True iff every term is an sos. For block sequences this is equivalent to
/// every vector of the generated subspace being an sos.
bool is_sos_sequence(const BlockSequence& alpha);

/// Number of raw generators sos_build consumes for `length` output terms.
std::size_t sos_build_required(int k, std::size_t length);
/// Builds `length` sos terms in the subspace of alpha using every second
/// generator. Throws LengthError if alpha is too short.
BlockSequence sos_build(const BlockSequence& alpha, std::size_t length);
/// As many sos terms as alpha has room for.
BlockSequence sos_build(const BlockSequence& alpha);

/// Plain rendering such as [[1,0,1],[0,0,0,1,0,1]].
std::string to_string(const BlockSequence& alpha);

}  // namespace fink
