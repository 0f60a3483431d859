#pragma once
// Finite canonization: find an sos block subsequence on which a given
// equivalence relation is a staircase relation.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fink/blockspace.hpp"
#include "fink/equations.hpp"
#include "fink/kvector.hpp"
#include "fink/staircase.hpp"

namespace fink {

/// An equivalence relation on the k-vectors of <e_0, ..., e_{n-1}>, given by
/// class ids.
class PartitionOracle {
 public:
  PartitionOracle(int k, std::size_t n, std::unordered_map<LeKVector, int, LeKVectorHash> class_of);

  /// Classes given by a function on the domain.
  static PartitionOracle from_function(int k, std::size_t n, const std::function<int(const LeKVector&)>& cls);
  /// The relation of a staircase tuple on the whole domain.
  static PartitionOracle from_staircase(const StaircaseValues& v, std::size_t n);

  int k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  const std::vector<LeKVector>& domain() const noexcept { return domain_; }
  const std::unordered_map<LeKVector, int, LeKVectorHash>& classes() const noexcept { return class_of_; }

  /// Throws DomainError when s is not in the domain.
  int class_of(const LeKVector& s) const;
  bool related(const LeKVector& s, const LeKVector& t) const { return class_of(s) == class_of(t); }

 private:
  int k_;
  std::size_t n_;
  std::vector<LeKVector> domain_;
  std::unordered_map<LeKVector, int, LeKVectorHash> class_of_;
};

/// Intensional oracle for equations.
struct StaircaseRelation {
  StaircaseValues values;
  bool related(const LeKVector& s, const LeKVector& t) const { return relate(values, s, t); }
};

struct CanonizationResult {
  BlockSequence witness;
  StaircaseValues values;
  /// Pairs of the witness subspace compared against the oracle.
  std::size_t checked_pairs = 0;
  /// sos candidates examined, including the successful one.
  std::size_t candidates_tried = 0;
};

/// True iff oracle and values agree on every pair of <witness>. Adds the
/// number of compared pairs to *pairs when given.
bool agrees_on(const PartitionOracle& oracle, const StaircaseValues& values, const BlockSequence& witness,
               std::size_t* pairs = nullptr);

/// Visits the sos block subsequences of length m of <e_0..e_{n-1}> ordered by
/// support span, then by coefficient rows. Return false to stop.
void for_each_sos_candidate(int k, std::size_t n, std::size_t m, const std::function<bool(const BlockSequence&)>& visit);

/// Tries every staircase tuple on every candidate; the first match wins.
/// Throws NotFound.
CanonizationResult canonize_bruteforce(const PartitionOracle& oracle, std::size_t m);

/// k = 1 only. The relation the classifier equations pick on `witness`, if
/// they are decided there and the pick verifies.
std::optional<StaircaseValues> classify_taylor(const PartitionOracle& oracle, const BlockSequence& witness,
                                               std::size_t* pairs = nullptr);

/// k = 1 only. Classifies candidates with the equations x0 ~ x1, x0+x1 ~ x0,
/// x0+x1 ~ x1 and x0+x1+x2 ~ x0+x2, then verifies on the witness. On
/// witnesses of length 2 the last equation has no substitution and
/// (min,max) is tried before equality. Throws NotFound.
CanonizationResult canonize_taylor(const PartitionOracle& oracle, std::size_t m);

/// The four classifier equations at k = 1.
std::vector<KEquation> taylor_equations();

/// a_i = b_i + b_{2m-1-i}. The results are disjointly supported but not
/// block ordered.
std::vector<LeKVector> symmetrize(const BlockSequence& witness);

/// Random equivalence relations used for estimates: a random staircase
/// relation with classes randomly split, or labels drawn uniformly.
PartitionOracle random_oracle(int k, std::size_t n, std::uint64_t seed);

struct Estimate {
  /// Smallest n where every trial canonized; empty when the budget ran out.
  std::optional<std::size_t> n;
  /// Failing trial seeds at the largest n below the answer.
  std::vector<std::uint64_t> failures_below;
  std::size_t largest_n_tried = 0;
};

/// Smallest n such that `trials` random relations on <e_0..e_{n-1}> all
/// canonize at length m, searching n up to max_n. With trials = 0 returns the
/// lower bound m(2k-1).
Estimate estimate_n(int k, std::size_t m, std::size_t trials, std::uint64_t seed, std::size_t max_n);

}  // namespace fink
