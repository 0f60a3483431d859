#pragma once
// The family of landmark functions min_i, max_i, theta, their joins
// (staircase functions) and the equivalence relations they induce.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fink/kvector.hpp"

namespace fink {

/// Largest level supported by staircase tuples (index sets are bit masks).
inline constexpr int kMaxStaircaseLevel = 63;

enum class MemberKind { zero, min, max, theta0, theta1, theta2 };

struct FamilyMember {
  MemberKind kind = MemberKind::zero;
  int i = 0;
  int l = 0;

  static FamilyMember zero() { return {}; }
  static FamilyMember min(int i) { return {MemberKind::min, i, 0}; }
  static FamilyMember max(int i) { return {MemberKind::max, i, 0}; }
  /// l = -1 gives ZERO.
  static FamilyMember theta0(int i, int l);
  static FamilyMember theta1(int i, int l);
  static FamilyMember theta2(int l);

  /// Throws PreconditionError when the parameters are out of range at level k.
  void validate(int k) const;

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
  friend auto operator<=>(const FamilyMember&, const FamilyMember&) = default;
};

std::string to_string(const FamilyMember& f);

/// Evaluates a member on any (<=k)-vector. When a landmark the member needs
/// is absent from s the result is 0. theta2 uses the ambient level of s.
LeKVector eval_member(const FamilyMember& f, const LeKVector& s);

/// Bit mask of a subset of {1..k}: bit j is set iff j is a member.
using LevelSet = std::uint64_t;

constexpr bool contains(LevelSet set, int j) { return j >= 1 && j <= 63 && ((set >> j) & 1u) != 0; }
LevelSet level_set(std::initializer_list<int> members);
std::vector<int> members(LevelSet set);
/// {j in I : j-1 in I}.
constexpr LevelSet linked_part(LevelSet set) { return set & (set << 1); }

/// The values (I0, J0, l0, I1, J1, l1, l2) of a staircase function, with J0
/// and J1 derived from I0 and I1. l0[j] and l1[j] are -1 for j outside J.
struct StaircaseValues {
  int k = 1;
  LevelSet I0 = 0;
  std::vector<int> l0;
  LevelSet I1 = 0;
  std::vector<int> l1;
  int l2 = -1;

  LevelSet J0() const { return linked_part(I0); }
  LevelSet J1() const { return linked_part(I1); }

  friend bool operator==(const StaircaseValues&, const StaircaseValues&) = default;
  friend auto operator<=>(const StaircaseValues&, const StaircaseValues&) = default;
};

/// The relation FIN_k^2: everything empty.
StaircaseValues trivial_values(int k);

/// Builds a canonical tuple. l-maps may omit members of J (read as -1) but may
/// not mention indices outside J. Throws PreconditionError on any violation.
StaircaseValues make_values(int k, LevelSet I0, const std::map<int, int>& l0, LevelSet I1,
                            const std::map<int, int>& l1, int l2);

/// Throws PreconditionError unless v is in canonical form.
void validate(const StaircaseValues& v);

/// Component members of v, ZERO components omitted.
std::vector<FamilyMember> components(const StaircaseValues& v);

/// Join of the component evaluations, computed in one pass over s.
LeKVector eval_staircase(const StaircaseValues& v, const LeKVector& s);
/// s and t related iff their evaluations agree.
bool relate(const StaircaseValues& v, const LeKVector& s, const LeKVector& t);

bool is_min_relation(const StaircaseValues& v);
bool is_max_relation(const StaircaseValues& v);
bool is_symmetric(const StaircaseValues& v);
/// I0 and I1 have no consecutive members and k is not in both.
bool is_linked_free(const StaircaseValues& v);

/// Swaps the min side and the max side.
StaircaseValues mirror(const StaircaseValues& v);
/// Same tuple read at a higher ambient level.
StaircaseValues raise_level(const StaircaseValues& v, int k);

/// Min-relations at level k, built level by level. Sorted.
std::vector<StaircaseValues> enumerate_min_relations(int k);
std::vector<StaircaseValues> enumerate_max_relations(int k);
/// All staircase tuples at level k, sorted.
std::vector<StaircaseValues> enumerate_staircase(int k);
std::vector<StaircaseValues> enumerate_symmetric(int k);
std::vector<StaircaseValues> enumerate_linked_free(int k);

/// Truncation above level l up to the last k (and its mirror), as tuples.
StaircaseValues special_max(int k, int l);
StaircaseValues special_min(int k, int l);

/// Values obtained after folding a witness: unions of the index sets, l taken
/// as the smaller of the two sides where both are present.
StaircaseValues symmetrized_values(const StaircaseValues& v);

std::string to_string(const StaircaseValues& v);

}  // namespace fink
