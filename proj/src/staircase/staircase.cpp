#include "fink/staircase.hpp"

#include <algorithm>
#include <bit>

#include "fink/error.hpp"

namespace fink {

FamilyMember FamilyMember::theta0(int i, int l) { return l == -1 ? zero() : FamilyMember{MemberKind::theta0, i, l}; }
FamilyMember FamilyMember::theta1(int i, int l) { return l == -1 ? zero() : FamilyMember{MemberKind::theta1, i, l}; }
FamilyMember FamilyMember::theta2(int l) { return l == -1 ? zero() : FamilyMember{MemberKind::theta2, 0, l}; }

void FamilyMember::validate(int k) const {
  auto fail = [&] { throw PreconditionError("family member " + to_string(*this) + " invalid at level " + std::to_string(k)); };
  switch (kind) {
    case MemberKind::zero:
      return;
    case MemberKind::min:
    case MemberKind::max:
      if (i < 1 || i > k) fail();
      return;
    case MemberKind::theta0:
    case MemberKind::theta1:
      if (i < 2 || i > k || l < 1 || l > i - 1) fail();
      return;
    case MemberKind::theta2:
      if (l < 1 || l > k) fail();
      return;
  }
}

std::string to_string(const FamilyMember& f) {
  switch (f.kind) {
    case MemberKind::zero:
      return "ZERO";
    case MemberKind::min:
      return "MIN " + std::to_string(f.i);
    case MemberKind::max:
      return "MAX " + std::to_string(f.i);
    case MemberKind::theta0:
      return "THETA0 " + std::to_string(f.i) + " " + std::to_string(f.l);
    case MemberKind::theta1:
      return "THETA1 " + std::to_string(f.i) + " " + std::to_string(f.l);
    case MemberKind::theta2:
      return "THETA2 " + std::to_string(f.l);
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// First and last position of every value 1..k in s.
struct Landmarks {
  std::vector<std::size_t> first, last;

  Landmarks(const LeKVector& s, int k) : first(static_cast<std::size_t>(k) + 1, kNone), last(first) {
    const auto c = s.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
      const Coeff v = c[n];
      if (v == 0) continue;
      if (first[v] == kNone) first[v] = n;
      last[v] = n;
    }
  }
};

// Writes value l at every position in the open interval (lo, hi) where s = l.
void mark_interval(std::span<const Coeff> s, std::vector<Coeff>& out, std::size_t lo, std::size_t hi, int l) {
  if (lo == kNone || hi == kNone) return;
  for (std::size_t n = lo + 1; n < hi; ++n)
    if (s[n] == l) out[n] = std::max<Coeff>(out[n], static_cast<Coeff>(l));
}

void mark_point(std::vector<Coeff>& out, std::size_t at, int value) {
  if (at != kNone) out[at] = std::max<Coeff>(out[at], static_cast<Coeff>(value));
}

void check_values_level(const StaircaseValues& v, const LeKVector& s) {
  if (v.k != s.ambient()) throw AmbientMismatch(v.k, s.ambient());
}

}  // namespace

LeKVector eval_member(const FamilyMember& f, const LeKVector& s) {
  const int k = s.ambient();
  f.validate(k);
  const Landmarks lm(s, k);
  std::vector<Coeff> out(s.extent(), 0);
  const auto c = s.coeffs();
  const auto ui = static_cast<std::size_t>(f.i);
  switch (f.kind) {
    case MemberKind::zero:
      break;
    case MemberKind::min:
      mark_point(out, lm.first[ui], f.i);
      break;
    case MemberKind::max:
      mark_point(out, lm.last[ui], f.i);
      break;
    case MemberKind::theta0:
      mark_interval(c, out, lm.first[ui - 1], lm.first[ui], f.l);
      break;
    case MemberKind::theta1:
      mark_interval(c, out, lm.last[ui], lm.last[ui - 1], f.l);
      break;
    case MemberKind::theta2:
      mark_interval(c, out, lm.first[static_cast<std::size_t>(k)], lm.last[static_cast<std::size_t>(k)], f.l);
      break;
  }
  return LeKVector(k, std::move(out));
}

LevelSet level_set(std::initializer_list<int> members) {
  LevelSet s = 0;
  for (int j : members) {
    if (j < 1 || j > kMaxStaircaseLevel) throw PreconditionError("level set member out of range");
    s |= LevelSet{1} << j;
  }
  return s;
}

std::vector<int> members(LevelSet set) {
  std::vector<int> out;
  for (int j = 1; j <= kMaxStaircaseLevel; ++j)
    if (contains(set, j)) out.push_back(j);
  return out;
}

namespace {

void check_staircase_level(int k) {
  if (k < 1 || k > kMaxStaircaseLevel)
    throw PreconditionError("staircase level " + std::to_string(k) + " outside [1, " +
                            std::to_string(kMaxStaircaseLevel) + "]");
}

LevelSet full_set(int k) { return ((LevelSet{1} << k) - 1) << 1; }

}  // namespace

StaircaseValues trivial_values(int k) {
  check_staircase_level(k);
  StaircaseValues v;
  v.k = k;
  v.l0.assign(static_cast<std::size_t>(k) + 1, -1);
  v.l1 = v.l0;
  return v;
}

void validate(const StaircaseValues& v) {
  check_staircase_level(v.k);
  auto fail = [&](const std::string& why) { throw PreconditionError("staircase values " + to_string(v) + ": " + why); };
  const LevelSet full = full_set(v.k);
  if ((v.I0 & ~full) || (v.I1 & ~full)) fail("index set outside {1..k}");
  const auto size = static_cast<std::size_t>(v.k) + 1;
  if (v.l0.size() != size || v.l1.size() != size) fail("l-map has the wrong length");
  auto check_side = [&](LevelSet I, const std::vector<int>& l) {
    const LevelSet J = linked_part(I);
    for (int j = 0; j <= v.k; ++j) {
      const int val = l[static_cast<std::size_t>(j)];
      if (!contains(J, j)) {
        if (val != -1) fail("l set outside J at " + std::to_string(j));
      } else if (val != -1 && (val < 1 || val > j - 1)) {
        fail("l out of range at " + std::to_string(j));
      }
    }
  };
  check_side(v.I0, v.l0);
  check_side(v.I1, v.l1);
  if (v.l2 != -1) {
    if (v.l2 < 1 || v.l2 > v.k) fail("l2 out of range");
    if (!contains(v.I0 & v.I1, v.k)) fail("l2 set but k is not in both index sets");
  }
}

StaircaseValues make_values(int k, LevelSet I0, const std::map<int, int>& l0, LevelSet I1,
                            const std::map<int, int>& l1, int l2) {
  StaircaseValues v = trivial_values(k);
  v.I0 = I0;
  v.I1 = I1;
  v.l2 = l2;
  auto fill = [&](const std::map<int, int>& src, LevelSet I, std::vector<int>& dst) {
    for (auto [j, l] : src) {
      if (!contains(linked_part(I), j))
        throw PreconditionError("l given for " + std::to_string(j) + ", which is not in J");
      dst[static_cast<std::size_t>(j)] = l;
    }
  };
  fill(l0, I0, v.l0);
  fill(l1, I1, v.l1);
  validate(v);
  return v;
}

std::vector<FamilyMember> components(const StaircaseValues& v) {
  std::vector<FamilyMember> out;
  for (int i : members(v.I0)) out.push_back(FamilyMember::min(i));
  for (int j : members(v.J0()))
    if (v.l0[static_cast<std::size_t>(j)] != -1) out.push_back(FamilyMember::theta0(j, v.l0[static_cast<std::size_t>(j)]));
  if (v.l2 != -1) out.push_back(FamilyMember::theta2(v.l2));
  for (int i : members(v.I1)) out.push_back(FamilyMember::max(i));
  for (int j : members(v.J1()))
    if (v.l1[static_cast<std::size_t>(j)] != -1) out.push_back(FamilyMember::theta1(j, v.l1[static_cast<std::size_t>(j)]));
  return out;
}

LeKVector eval_staircase(const StaircaseValues& v, const LeKVector& s) {
  check_values_level(v, s);
  const int k = v.k;
  const Landmarks lm(s, k);
  const auto c = s.coeffs();
  std::vector<Coeff> out(s.extent(), 0);
  for (int j = 1; j <= k; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (contains(v.I0, j)) mark_point(out, lm.first[uj], j);
    if (contains(v.I1, j)) mark_point(out, lm.last[uj], j);
    if (v.l0[uj] != -1) mark_interval(c, out, lm.first[uj - 1], lm.first[uj], v.l0[uj]);
    if (v.l1[uj] != -1) mark_interval(c, out, lm.last[uj], lm.last[uj - 1], v.l1[uj]);
  }
  if (v.l2 != -1) {
    const auto uk = static_cast<std::size_t>(k);
    mark_interval(c, out, lm.first[uk], lm.last[uk], v.l2);
  }
  return LeKVector(k, std::move(out));
}

bool relate(const StaircaseValues& v, const LeKVector& s, const LeKVector& t) {
  if (s.ambient() != t.ambient()) throw AmbientMismatch(s.ambient(), t.ambient());
  return eval_staircase(v, s) == eval_staircase(v, t);
}

bool is_min_relation(const StaircaseValues& v) { return v.I1 == 0; }
bool is_max_relation(const StaircaseValues& v) { return v.I0 == 0; }

bool is_symmetric(const StaircaseValues& v) { return v.I0 == v.I1 && v.l0 == v.l1; }

bool is_linked_free(const StaircaseValues& v) {
  return linked_part(v.I0) == 0 && linked_part(v.I1) == 0 && !contains(v.I0 & v.I1, v.k);
}

StaircaseValues mirror(const StaircaseValues& v) {
  StaircaseValues out = v;
  std::swap(out.I0, out.I1);
  std::swap(out.l0, out.l1);
  return out;
}

StaircaseValues raise_level(const StaircaseValues& v, int k) {
  if (k < v.k) throw PreconditionError("raise_level cannot lower the level");
  if (k > v.k && v.l2 != -1) throw PreconditionError("theta2 depends on the level and cannot be raised");
  StaircaseValues out = v;
  out.k = k;
  out.l0.resize(static_cast<std::size_t>(k) + 1, -1);
  out.l1.resize(static_cast<std::size_t>(k) + 1, -1);
  validate(out);
  return out;
}

std::vector<StaircaseValues> enumerate_min_relations(int k) {
  check_staircase_level(k);
  std::vector<StaircaseValues> level = {trivial_values(1)};
  {
    StaircaseValues m = trivial_values(1);
    m.I0 = level_set({1});
    level.push_back(m);
  }
  for (int j = 2; j <= k; ++j) {
    std::vector<StaircaseValues> next;
    for (const auto& r : level) {
      StaircaseValues base = raise_level(r, j);
      next.push_back(base);
      StaircaseValues with = base;
      with.I0 |= LevelSet{1} << j;
      if (!contains(r.I0, j - 1)) {
        next.push_back(with);
      } else {
        for (int l = -1; l <= j - 1; ++l) {
          if (l == 0) continue;
          with.l0[static_cast<std::size_t>(j)] = l;
          next.push_back(with);
        }
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<StaircaseValues> enumerate_max_relations(int k) {
  auto out = enumerate_min_relations(k);
  for (auto& v : out) v = mirror(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StaircaseValues> enumerate_staircase(int k) {
  const auto mins = enumerate_min_relations(k);
  const auto maxs = enumerate_max_relations(k);
  std::vector<StaircaseValues> out;
  for (const auto& r : mins)
    for (const auto& s : maxs) {
      StaircaseValues v = r;
      v.I1 = s.I1;
      v.l1 = s.l1;
      if (contains(v.I0 & v.I1, k)) {
        for (int l = -1; l <= k; ++l) {
          if (l == 0) continue;
          v.l2 = l;
          out.push_back(v);
        }
      } else {
        out.push_back(v);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StaircaseValues> enumerate_symmetric(int k) {
  std::vector<StaircaseValues> out;
  for (const auto& r : enumerate_min_relations(k)) {
    StaircaseValues v = r;
    v.I1 = v.I0;
    v.l1 = v.l0;
    if (contains(v.I0, k)) {
      for (int l = -1; l <= k; ++l) {
        if (l == 0) continue;
        v.l2 = l;
        out.push_back(v);
      }
    } else {
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StaircaseValues> enumerate_linked_free(int k) {
  check_staircase_level(k);
  std::vector<LevelSet> sparse;
  // Subsets of {1..k} without consecutive members, grown one level at a time.
  sparse.push_back(0);
  for (int j = 1; j <= k; ++j) {
    const std::size_t n = sparse.size();
    for (std::size_t a = 0; a < n; ++a)
      if (!contains(sparse[a], j - 1)) sparse.push_back(sparse[a] | (LevelSet{1} << j));
  }
  std::vector<StaircaseValues> out;
  for (LevelSet a : sparse)
    for (LevelSet b : sparse) {
      if (contains(a & b, k)) continue;
      StaircaseValues v = trivial_values(k);
      v.I0 = a;
      v.I1 = b;
      out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

StaircaseValues special_max(int k, int l) {
  if (l < 1 || l > k) throw PreconditionError("special_max needs 1 <= l <= k");
  StaircaseValues v = trivial_values(k);
  for (int j = l; j <= k; ++j) v.I0 |= LevelSet{1} << j;
  for (int j = l + 1; j <= k; ++j) v.l0[static_cast<std::size_t>(j)] = l;
  v.l2 = l;
  v.I1 = level_set({k});
  validate(v);
  return v;
}

StaircaseValues special_min(int k, int l) { return mirror(special_max(k, l)); }

StaircaseValues symmetrized_values(const StaircaseValues& v) {
  StaircaseValues out = trivial_values(v.k);
  out.I0 = out.I1 = v.I0 | v.I1;
  for (int j = 1; j <= v.k; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const int a = v.l0[uj], b = v.l1[uj];
    out.l0[uj] = a == -1 ? b : (b == -1 ? a : std::min(a, b));
    if (!contains(linked_part(out.I0), j)) out.l0[uj] = -1;
  }
  out.l1 = out.l0;
  out.l2 = v.l2;
  validate(out);
  return out;
}

std::string to_string(const StaircaseValues& v) {
  auto set_str = [](LevelSet s) {
    std::string out = "{";
    bool first = true;
    for (int j : members(s)) {
      if (!first) out += ',';
      out += std::to_string(j);
      first = false;
    }
    return out + "}";
  };
  auto l_str = [&](LevelSet J, const std::vector<int>& l) {
    std::string out = "{";
    bool first = true;
    for (int j : members(J)) {
      if (static_cast<std::size_t>(j) >= l.size()) break;
      if (!first) out += ',';
      out += std::to_string(j) + ":" + std::to_string(l[static_cast<std::size_t>(j)]);
      first = false;
    }
    return out + "}";
  };
  return "(k=" + std::to_string(v.k) + " I0=" + set_str(v.I0) + " l0=" + l_str(v.J0(), v.l0) + " I1=" +
         set_str(v.I1) + " l1=" + l_str(v.J1(), v.l1) + " l2=" + std::to_string(v.l2) + ")";
}

}  // namespace fink
