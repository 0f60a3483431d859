#pragma once
// Free k-terms, k-equations and their truth over finite block sequences.

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fink/blockspace.hpp"
#include "fink/kvector.hpp"

namespace fink {

/// sum_i T^{k - exps[i]} x_i. An exponent of 0 means x_i does not occur.
struct FreeTerm {
  int k = 1;
  std::vector<int> exps;

  std::size_t arity() const noexcept { return exps.size(); }
  /// Largest exponent; a free k-term has level k.
  int level() const;
  bool is_free_kterm() const { return level() == k; }
  /// Same term over `arity` variables; the new ones do not occur.
  FreeTerm padded(std::size_t arity) const;

  friend bool operator==(const FreeTerm&, const FreeTerm&) = default;
};

/// Throws PreconditionError on exponents outside [0, k].
void validate(const FreeTerm& p);

/// p(a_0, ..., a_n). The nonzero arguments must be block ordered.
LeKVector substitute(const FreeTerm& p, std::span<const LeKVector> args);
LeKVector substitute(const FreeTerm& p, const BlockSequence& args);

/// p(t_0, ..., t_n) where every t_i is a term over the same variables and the
/// variables occurring in t_i all precede those occurring in t_{i+1}.
FreeTerm compose(const FreeTerm& p, std::span<const FreeTerm> terms);

/// Where the constants of an equation sit relative to the terms.
enum class ConstantSide { none, prefix, suffix };

/// left ~ right, or s + left ~ t + right (prefix), or left + s ~ right + t
/// (suffix). Both sides use the same number of variables.
struct KEquation {
  FreeTerm left;
  FreeTerm right;
  ConstantSide side = ConstantSide::none;
  LeKVector s{1};
  LeKVector t{1};

  int k() const noexcept { return left.k; }
  std::size_t arity() const noexcept { return left.arity(); }
};

/// Pads the terms to a common arity and checks the level constraint
/// max{level(s), level(p)} = k on each side.
KEquation make_equation(FreeTerm left, FreeTerm right);
KEquation make_equation(FreeTerm left, FreeTerm right, ConstantSide side, LeKVector s, LeKVector t);

/// Both sides of the equation under one substitution.
std::pair<LeKVector, LeKVector> instantiate(const KEquation& eq, std::span<const LeKVector> args);

enum class Verdict { truth, falsity, undecided };

struct Decision {
  Verdict verdict = Verdict::undecided;
  /// Substitutions examined before the verdict was known.
  std::size_t substitutions = 0;
  std::size_t related = 0;
  /// No admissible substitution exists.
  bool empty = false;
};

template <class R>
concept RelationOracle = requires(const R& r, const LeKVector& s) {
  { r.related(s, s) } -> std::convertible_to<bool>;
};

using RelationFn = std::function<bool(const LeKVector&, const LeKVector&)>;

Decision decide_with(const KEquation& eq, const BlockSequence& alpha, const RelationFn& rel);

/// Truth of eq over the length-(n+1) block subsequences of alpha, honouring
/// the position constraints of prefix and suffix constants. Stops at the
/// first pair of disagreeing substitutions.
template <RelationOracle R>
Decision decide(const KEquation& eq, const BlockSequence& alpha, const R& rel) {
  return decide_with(eq, alpha, [&rel](const LeKVector& a, const LeKVector& b) { return rel.related(a, b); });
}

std::string to_string(const FreeTerm& p);
std::string to_string(const KEquation& eq);
std::string to_string(Verdict v);

/// Parses "x0 + T x1 + T^2 x2". Throws ParseError.
FreeTerm parse_term(int k, std::string_view text);
/// Parses "x0 + T x1 ~ x0" with optional clauses ", s=[..], t=[..]" and
/// ", at=prefix|suffix" (prefix when constants are given without it).
KEquation parse_equation(int k, std::string_view text);

}  // namespace fink
