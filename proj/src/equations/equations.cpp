#include "fink/equations.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "fink/error.hpp"
#include "fink/io.hpp"

namespace fink {

int FreeTerm::level() const { return exps.empty() ? 0 : *std::max_element(exps.begin(), exps.end()); }

FreeTerm FreeTerm::padded(std::size_t n) const {
  if (n < exps.size()) throw PreconditionError("cannot pad a term to fewer variables");
  FreeTerm out = *this;
  out.exps.resize(n, 0);
  return out;
}

void validate(const FreeTerm& p) {
  if (p.k < 1 || p.k > kMaxLevel) throw PreconditionError("term level out of range");
  for (int e : p.exps)
    if (e < 0 || e > p.k) throw PreconditionError("term exponent " + std::to_string(e) + " outside [0, k]");
}

LeKVector substitute(const FreeTerm& p, std::span<const LeKVector> args) {
  validate(p);
  if (args.size() != p.arity())
    throw PreconditionError("term has " + std::to_string(p.arity()) + " variables, got " +
                            std::to_string(args.size()) + " arguments");
  LeKVector out(p.k);
  const LeKVector* prev = nullptr;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const LeKVector& a = args[i];
    if (a.ambient() != p.k) throw AmbientMismatch(p.k, a.ambient());
    if (a.is_zero()) continue;
    if (prev != nullptr && !block_less(*prev, a)) throw PreconditionError("arguments are not block ordered");
    prev = &a;
    if (p.exps[i] != 0) out = disjoint_sum(out, tetris(a, p.k - p.exps[i]));
  }
  return out;
}

LeKVector substitute(const FreeTerm& p, const BlockSequence& args) {
  std::vector<LeKVector> v(args.terms().begin(), args.terms().end());
  return substitute(p, v);
}

FreeTerm compose(const FreeTerm& p, std::span<const FreeTerm> terms) {
  validate(p);
  if (terms.size() != p.arity()) throw PreconditionError("compose needs one term per variable");
  if (terms.empty()) return FreeTerm{p.k, {}};
  const std::size_t n = terms.front().arity();
  FreeTerm out{p.k, std::vector<int>(n, 0)};
  std::size_t next_free = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const FreeTerm& t = terms[i];
    validate(t);
    if (t.k != p.k) throw AmbientMismatch(p.k, t.k);
    if (t.arity() != n) throw PreconditionError("composed terms must share their variables");
    std::optional<std::size_t> lo, hi;
    for (std::size_t j = 0; j < n; ++j)
      if (t.exps[j] != 0) {
        if (!lo) lo = j;
        hi = j;
      }
    if (!lo) continue;
    if (*lo < next_free) throw PreconditionError("composed terms must use block ordered variables");
    next_free = *hi + 1;
    const int shift = p.k - p.exps[i];
    for (std::size_t j = *lo; j <= *hi; ++j) out.exps[j] = std::max(0, t.exps[j] - shift);
  }
  return out;
}

namespace {

int side_level(const FreeTerm& p, const LeKVector& c) { return std::max(p.level(), c.level()); }

void check_equation(const KEquation& eq) {
  validate(eq.left);
  validate(eq.right);
  const int k = eq.left.k;
  if (eq.right.k != k) throw AmbientMismatch(k, eq.right.k);
  if (eq.s.ambient() != k) throw AmbientMismatch(k, eq.s.ambient());
  if (eq.t.ambient() != k) throw AmbientMismatch(k, eq.t.ambient());
  if (eq.side == ConstantSide::none && (!eq.s.is_zero() || !eq.t.is_zero()))
    throw PreconditionError("constants given for an equation without constants");
  if (side_level(eq.left, eq.s) != k || side_level(eq.right, eq.t) != k)
    throw PreconditionError("each side of a k-equation must reach level k");
}

}  // namespace

KEquation make_equation(FreeTerm left, FreeTerm right) {
  const int k = left.k;
  return make_equation(std::move(left), std::move(right), ConstantSide::none, LeKVector(k), LeKVector(k));
}

KEquation make_equation(FreeTerm left, FreeTerm right, ConstantSide side, LeKVector s, LeKVector t) {
  const std::size_t n = std::max(left.arity(), right.arity());
  KEquation eq{left.padded(n), right.padded(n), side, std::move(s), std::move(t)};
  check_equation(eq);
  return eq;
}

std::pair<LeKVector, LeKVector> instantiate(const KEquation& eq, std::span<const LeKVector> args) {
  LeKVector a = substitute(eq.left, args);
  LeKVector b = substitute(eq.right, args);
  switch (eq.side) {
    case ConstantSide::none:
      break;
    case ConstantSide::prefix:
      a = disjoint_sum(eq.s, a);
      b = disjoint_sum(eq.t, b);
      break;
    case ConstantSide::suffix:
      a = disjoint_sum(a, eq.s);
      b = disjoint_sum(b, eq.t);
      break;
  }
  return {std::move(a), std::move(b)};
}

Decision decide_with(const KEquation& eq, const BlockSequence& alpha, const RelationFn& rel) {
  check_equation(eq);
  if (alpha.k() != eq.k()) throw AmbientMismatch(eq.k(), alpha.k());
  const std::size_t m = eq.arity();
  if (m == 0) throw PreconditionError("equation without variables");

  // Positions the substituted blocks must avoid.
  std::optional<std::size_t> prefix_end, suffix_start;
  if (eq.side == ConstantSide::prefix) {
    std::size_t end = 0;
    for (const auto* c : {&eq.s, &eq.t})
      if (!c->is_zero()) end = std::max(end, *c->max_support() + 1);
    prefix_end = end;
  } else if (eq.side == ConstantSide::suffix) {
    std::size_t start = static_cast<std::size_t>(-1);
    for (const auto* c : {&eq.s, &eq.t})
      if (!c->is_zero()) start = std::min(start, *c->min_support());
    suffix_start = start;
  }
  RowFilter filter;
  if (prefix_end || suffix_start)
    filter = [&](std::size_t row, const Coefficients&, const LeKVector& term) {
      if (prefix_end && row == 0 && *term.min_support() < *prefix_end) return false;
      if (suffix_start && row + 1 == m && *term.max_support() >= *suffix_start) return false;
      return true;
    };

  Decision d;
  std::vector<LeKVector> args;
  for_each_block_subsequence(
      alpha, m,
      [&](std::span<const Coefficients> rows) {
        args.clear();
        for (const auto& r : rows) args.push_back(recompose(alpha, r));
        const auto [a, b] = instantiate(eq, args);
        ++d.substitutions;
        if (rel(a, b)) ++d.related;
        return d.related == d.substitutions || d.related == 0;
      },
      filter);

  if (d.substitutions == 0) {
    d.empty = true;
    d.verdict = Verdict::undecided;
  } else if (d.related == d.substitutions) {
    d.verdict = Verdict::truth;
  } else if (d.related == 0) {
    d.verdict = Verdict::falsity;
  } else {
    d.verdict = Verdict::undecided;
  }
  return d;
}

std::string to_string(const FreeTerm& p) {
  std::string out;
  for (std::size_t i = 0; i < p.exps.size(); ++i) {
    const int e = p.exps[i];
    if (e == 0) continue;
    if (!out.empty()) out += " + ";
    const int power = p.k - e;
    if (power == 1) out += "T ";
    if (power > 1) out += "T^" + std::to_string(power) + " ";
    out += "x" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const KEquation& eq) {
  std::string out = to_string(eq.left) + " ~ " + to_string(eq.right);
  if (eq.side != ConstantSide::none) {
    out += ", s=" + to_string(eq.s) + ", t=" + to_string(eq.t);
    out += eq.side == ConstantSide::prefix ? ", at=prefix" : ", at=suffix";
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::truth:
      return "true";
    case Verdict::falsity:
      return "false";
    case Verdict::undecided:
      return "undecided";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer in '" + std::string(context) + "'");
  return v;
}

// Splits on `sep` outside square brackets.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  out.push_back(s.substr(begin));
  return out;
}

}  // namespace

FreeTerm parse_term(int k, std::string_view text) {
  FreeTerm p{k, {}};
  if (trim(text) == "0") return p;
  for (auto part : split_top(text, '+')) {
    part = trim(part);
    int power = 0;
    if (!part.empty() && part.front() == 'T') {
      part.remove_prefix(1);
      power = 1;
      if (!part.empty() && part.front() == '^') {
        part.remove_prefix(1);
        const auto space = part.find_first_of(" \tx");
        if (space == std::string_view::npos) throw ParseError("missing variable after power in '" + std::string(text) + "'");
        power = parse_int(part.substr(0, space), text);
        part.remove_prefix(space);
      }
      part = trim(part);
    }
    if (part.size() < 2 || part.front() != 'x') throw ParseError("expected a variable in '" + std::string(text) + "'");
    const int var = parse_int(part.substr(1), text);
    if (var < 0 || var > 1000) throw ParseError("variable index out of range in '" + std::string(text) + "'");
    if (power < 0 || power > k) throw ParseError("power of T outside [0, k] in '" + std::string(text) + "'");
    const auto idx = static_cast<std::size_t>(var);
    if (p.exps.size() <= idx) p.exps.resize(idx + 1, 0);
    if (p.exps[idx] != 0) throw ParseError("variable x" + std::to_string(var) + " occurs twice");
    p.exps[idx] = k - power;
  }
  return p;
}

KEquation parse_equation(int k, std::string_view text) {
  auto clauses = split_top(text, ',');
  const auto sides = split_top(clauses.front(), '~');
  if (sides.size() != 2) throw ParseError("an equation needs exactly one '~'");
  FreeTerm left = parse_term(k, sides[0]);
  FreeTerm right = parse_term(k, sides[1]);

  std::optional<LeKVector> s, t;
  std::optional<ConstantSide> side;
  for (std::size_t i = 1; i < clauses.size(); ++i) {
    const auto clause = trim(clauses[i]);
    const auto eq = clause.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected name=value in '" + std::string(clause) + "'");
    const auto name = trim(clause.substr(0, eq));
    const auto value = trim(clause.substr(eq + 1));
    if (name == "s") {
      s = parse_vector(k, value);
    } else if (name == "t") {
      t = parse_vector(k, value);
    } else if (name == "at") {
      if (value == "prefix") {
        side = ConstantSide::prefix;
      } else if (value == "suffix") {
        side = ConstantSide::suffix;
      } else {
        throw ParseError("at= must be prefix or suffix");
      }
    } else {
      throw ParseError("unknown clause '" + std::string(name) + "'");
    }
  }
  if (!s && !t) {
    if (side) throw ParseError("at= given without constants");
    return make_equation(std::move(left), std::move(right));
  }
  return make_equation(std::move(left), std::move(right), side.value_or(ConstantSide::prefix), s.value_or(LeKVector(k)),
                       t.value_or(LeKVector(k)));
}

}  // namespace fink
