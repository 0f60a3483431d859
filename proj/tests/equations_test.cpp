#include <functional>
#include <random>

#include "doctest.h"
#include "fink/canonize.hpp"
#include "fink/equations.hpp"
#include "fink/error.hpp"
#include "support/convert.hpp"
#include "support/oracles.hpp"

using namespace fink;
using testing_support::from;
using testing_support::to_tuple;
using testing_support::to_vec;

namespace {

oracle::Vec oracle_substitute(const std::vector<int>& exps, const std::vector<oracle::Vec>& args, int k) {
  oracle::Vec out;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (exps[i] != 0) out = oracle::join(out, oracle::tetris(args[i], k - exps[i]));
  return out;
}

// Block ordered random vectors, some of them zero.
std::vector<oracle::Vec> random_args(std::mt19937_64& rng, int k, std::size_t n, bool allow_zero) {
  std::vector<oracle::Vec> out;
  std::size_t at = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (allow_zero && rng() % 5 == 0) {
      out.push_back({});
      continue;
    }
    auto v = oracle::random_vec(rng, k, 1 + rng() % 4);
    v.push_back(k);
    oracle::Vec shifted(at, 0);
    shifted.insert(shifted.end(), v.begin(), v.end());
    at = shifted.size() + rng() % 2;
    out.push_back(shifted);
  }
  return out;
}

std::vector<LeKVector> lift_all(int k, const std::vector<oracle::Vec>& vs) {
  std::vector<LeKVector> out;
  for (const auto& v : vs) out.push_back(from(k, v));
  return out;
}

// Brute-force truth value: every block ordered tuple of subspace elements,
// filtered by the constant positions, checked with `rel`.
Verdict brute_verdict(const KEquation& eq, const std::vector<oracle::Vec>& gens,
                      const std::function<bool(const oracle::Vec&, const oracle::Vec&)>& rel, std::size_t* total) {
  const int k = eq.k();
  const auto span = oracle::span(gens, k, k);
  const auto s = to_vec(eq.s), t = to_vec(eq.t);
  std::size_t all = 0, yes = 0;
  std::vector<oracle::Vec> chosen;
  std::function<void()> grow = [&] {
    if (chosen.size() == eq.arity()) {
      if (eq.side == ConstantSide::prefix) {
        if (!s.empty() && !oracle::before(s, chosen.front())) return;
        if (!t.empty() && !oracle::before(t, chosen.front())) return;
      }
      if (eq.side == ConstantSide::suffix) {
        if (!s.empty() && !oracle::before(chosen.back(), s)) return;
        if (!t.empty() && !oracle::before(chosen.back(), t)) return;
      }
      auto a = oracle::join(s, oracle_substitute(eq.left.exps, chosen, k));
      auto b = oracle::join(t, oracle_substitute(eq.right.exps, chosen, k));
      ++all;
      yes += rel(a, b);
      return;
    }
    for (const auto& [c, v] : span) {
      if (!chosen.empty() && !oracle::before(chosen.back(), v)) continue;
      chosen.push_back(v);
      grow();
      chosen.pop_back();
    }
  };
  grow();
  *total = all;
  if (all == 0) return Verdict::undecided;
  if (yes == all) return Verdict::truth;
  if (yes == 0) return Verdict::falsity;
  return Verdict::undecided;
}

}  // namespace

TEST_CASE("substitution examples") {
  const FreeTerm p{2, {2, 1}};
  const std::vector<LeKVector> args{LeKVector(2, {2}), LeKVector(2, {0, 2})};
  CHECK(substitute(p, args) == LeKVector(2, {2, 1}));
  CHECK(substitute(FreeTerm{2, {2}}, std::vector<LeKVector>{LeKVector(2, {0, 1, 2})}) == LeKVector(2, {0, 1, 2}));
  CHECK(substitute(FreeTerm{2, {0, 2}}, args) == args[1]);
  CHECK_THROWS_AS(substitute(FreeTerm{2, {2}}, args), PreconditionError);
  CHECK_THROWS_AS(substitute(FreeTerm{2, {2, 2}}, std::vector<LeKVector>{args[1], args[0]}), PreconditionError);
  CHECK_THROWS_AS(substitute(FreeTerm{2, {3, 2}}, args), PreconditionError);
}

TEST_CASE("substitution agrees with the direct sum") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + trial % 4;
    const std::size_t n = 1 + trial % 5;
    const auto args = random_args(rng, k, n, true);
    std::vector<int> exps(n);
    for (auto& e : exps) e = static_cast<int>(rng() % static_cast<unsigned>(k + 1));
    const FreeTerm p{k, exps};
    CHECK(to_vec(substitute(p, lift_all(k, args))) == oracle_substitute(exps, args, k));
  }
}

TEST_CASE("composition") {
  const FreeTerm sum{2, {2, 2}};
  const std::vector<FreeTerm> ids{FreeTerm{2, {2, 0}}, FreeTerm{2, {0, 2}}};
  CHECK(compose(sum, ids) == sum);
  const FreeTerm tx{2, {1}};
  const std::vector<FreeTerm> inner{FreeTerm{2, {2, 2}}};
  CHECK(compose(tx, inner) == FreeTerm{2, {1, 1}});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const std::vector<FreeTerm> t{FreeTerm{3, {3 - b}}};
      CHECK(compose(FreeTerm{3, {3 - a}}, t).exps[0] == 3 - std::min(a + b, 3));
    }
  const std::vector<FreeTerm> overlapping{FreeTerm{2, {2, 2}}, FreeTerm{2, {0, 2}}};
  CHECK_THROWS_AS(compose(sum, overlapping), PreconditionError);
}

TEST_CASE("composition commutes with substitution") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 1 + trial % 3;
    const std::size_t outer = 1 + trial % 3;
    const std::size_t vars = outer + trial % 4;
    // Cut the variables into `outer` consecutive nonempty blocks.
    std::vector<std::size_t> cuts{0};
    for (std::size_t i = 1; i < outer; ++i) cuts.push_back(i + (vars - outer) * i / outer);
    cuts.push_back(vars);
    std::vector<FreeTerm> inner;
    for (std::size_t i = 0; i < outer; ++i) {
      FreeTerm t{k, std::vector<int>(vars, 0)};
      for (std::size_t j = cuts[i]; j < cuts[i + 1]; ++j) t.exps[j] = static_cast<int>(rng() % static_cast<unsigned>(k + 1));
      inner.push_back(t);
    }
    std::vector<int> exps(outer);
    for (auto& e : exps) e = static_cast<int>(rng() % static_cast<unsigned>(k + 1));
    const FreeTerm p{k, exps};
    const auto args = random_args(rng, k, vars, false);
    std::vector<oracle::Vec> mids;
    for (const auto& t : inner) mids.push_back(oracle_substitute(t.exps, args, k));
    CHECK(to_vec(substitute(compose(p, inner), lift_all(k, args))) == oracle_substitute(exps, mids, k));
  }
}

TEST_CASE("terms and equations print and parse") {
  const auto p = parse_term(2, "x0 + T x1 + T^2 x2");
  CHECK(p.exps == std::vector<int>{2, 1, 0});
  CHECK(to_string(p) == "x0 + T x1");
  CHECK(parse_term(3, "T^2x1").exps == std::vector<int>{0, 1});
  CHECK(to_string(parse_term(3, to_string(FreeTerm{3, {1, 0, 3, 2}}))) == to_string(FreeTerm{3, {1, 0, 3, 2}}));
  CHECK_THROWS_AS(parse_term(2, "x0 + x0"), ParseError);
  CHECK_THROWS_AS(parse_term(2, "T^3 x0"), ParseError);
  CHECK_THROWS_AS(parse_term(2, "y0"), ParseError);

  const auto eq = parse_equation(1, "x0 + x1 + x2 ~ x0 + x2");
  CHECK(eq.arity() == 3);
  CHECK(eq.right.exps == std::vector<int>{1, 0, 1});
  const auto pre = parse_equation(2, "x0 ~ T x0, s=[2], t=[1, 2]");
  CHECK(pre.side == ConstantSide::prefix);
  CHECK(pre.t == LeKVector(2, {1, 2}));
  CHECK(parse_equation(2, to_string(pre)).s == pre.s);
  CHECK(parse_equation(2, "x0 ~ x0, s=[2], at=suffix").side == ConstantSide::suffix);
  CHECK_THROWS_AS(parse_equation(2, "x0 ~ T x0"), PreconditionError);
  CHECK_THROWS_AS(parse_equation(2, "x0 x1"), ParseError);
  CHECK_THROWS_AS(parse_equation(2, "x0 ~ x1, q=[1]"), ParseError);
}

TEST_CASE("decide on small k = 1 examples") {
  const auto alpha = standard_basis(1, 4);
  const StaircaseRelation min{make_values(1, level_set({1}), {}, 0, {}, -1)};
  CHECK(decide(parse_equation(1, "x0 + x1 ~ x0"), alpha, min).verdict == Verdict::truth);
  CHECK(decide(parse_equation(1, "x0 + x1 ~ x1"), alpha, min).verdict == Verdict::falsity);
  const StaircaseRelation all{trivial_values(1)};
  CHECK(decide(parse_equation(1, "x0 ~ x1"), alpha, all).verdict == Verdict::truth);

  const StaircaseRelation eq{make_values(1, level_set({1}), {}, level_set({1}), {}, 1)};
  auto d = decide(parse_equation(1, "x0 ~ x0 + x1"), alpha, eq);
  CHECK(d.verdict == Verdict::falsity);
  CHECK(d.substitutions > 1);

  const auto suffix = parse_equation(1, "x0 ~ x0, s=[1], t=[1], at=suffix");
  d = decide(suffix, alpha, eq);
  CHECK(d.empty);
  CHECK(d.verdict == Verdict::undecided);
}

TEST_CASE("decide agrees with brute force") {
  std::mt19937_64 rng(9);
  std::vector<std::string> texts1{"x0 ~ x1", "x0 + x1 ~ x0", "x0 + x1 ~ x1", "x0 + x1 + x2 ~ x0 + x2",
                                  "x0 ~ x1, s=[1], t=[0,1]", "x0 + x1 ~ x1, s=[0,0,0,0,0,0,1], at=suffix"};
  std::vector<std::string> texts2{"x0 ~ x1", "x0 + T x1 ~ x0", "T x0 + x1 ~ x1", "x0 + T x1 + x2 ~ x0 + x2",
                                  "x0 ~ T x0 + x1", "x0 ~ x0 + T x1, s=[1], t=[2]"};
  for (int k = 1; k <= 2; ++k) {
    const auto& texts = k == 1 ? texts1 : texts2;
    const auto values = enumerate_staircase(k);
    for (int trial = 0; trial < 6; ++trial) {
      auto gens = random_args(rng, k, k == 1 ? 5 : 3, false);
      // Room for the prefix constants.
      for (auto& g : gens) g.insert(g.begin(), 2, 0);
      BlockSequence alpha(k);
      for (const auto& g : gens) alpha.push_back(KVector(from(k, g)));
      for (const auto& text : texts) {
        const auto eq = parse_equation(k, text);
        for (const auto& v : values) {
          const auto tuple = to_tuple(v);
          std::size_t total = 0;
          const auto expect = brute_verdict(
              eq, gens, [&](const oracle::Vec& a, const oracle::Vec& b) { return oracle::eval(tuple, a, k) == oracle::eval(tuple, b, k); },
              &total);
          const auto d = decide(eq, alpha, StaircaseRelation{v});
          CHECK(d.verdict == expect);
          CHECK(d.empty == (total == 0));
          if (d.verdict != Verdict::undecided) CHECK(d.substitutions == total);
        }
      }
    }
  }
}

TEST_CASE("partition oracles report vectors outside their domain") {
  const auto oracle = PartitionOracle::from_function(1, 3, [](const LeKVector&) { return 0; });
  CHECK_THROWS_AS(decide(parse_equation(1, "x0 ~ x1"), standard_basis(1, 5), oracle), DomainError);
  CHECK(decide(parse_equation(1, "x0 ~ x1"), standard_basis(1, 3), oracle).verdict == Verdict::truth);
}
