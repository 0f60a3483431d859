#include <random>

#include "doctest.h"
#include "fink/error.hpp"
#include "fink/kvector.hpp"
#include "support/oracles.hpp"

using fink::LeKVector;

namespace {

LeKVector from(int k, const oracle::Vec& v) {
  std::vector<fink::Coeff> c(v.begin(), v.end());
  return LeKVector(k, std::move(c));
}

oracle::Vec to_vec(const LeKVector& s) { return oracle::Vec(s.coeffs().begin(), s.coeffs().end()); }

}  // namespace

TEST_CASE("join and meet are pointwise") {
  CHECK(join(LeKVector(2, {2, 0}), LeKVector(2, {0, 1})) == LeKVector(2, {2, 1}));
  CHECK(join(LeKVector(2, {1, 0, 2}), LeKVector(2, {2, 0, 1})) == LeKVector(2, {2, 0, 2}));
  CHECK(meet(LeKVector(2, {2, 1}), LeKVector(2, {1, 2})) == LeKVector(2, {1, 1}));
  CHECK(meet(LeKVector(2, {1, 0, 2}), LeKVector(2, {2, 0, 1})) == LeKVector(2, {1, 0, 1}));
  CHECK(meet(LeKVector(2, {1, 2}), LeKVector(2)).is_zero());
  CHECK(join(LeKVector(2, {1, 2}), LeKVector(2, {1, 2})).level() == 2);
  CHECK_THROWS_AS(join(LeKVector(1, {1}), LeKVector(2, {2})), fink::AmbientMismatch);
}

TEST_CASE("trailing zeros are trimmed and levels recorded") {
  LeKVector v(3, {0, 2, 0, 0});
  CHECK(v.extent() == 2);
  CHECK(v.level() == 2);
  CHECK_FALSE(v.is_kvector());
  CHECK(v == LeKVector(3, {0, 2}));
  CHECK(v != LeKVector(2, {0, 2}));
  CHECK_THROWS_AS(LeKVector(2, {3}), fink::PreconditionError);
  CHECK_THROWS_AS(LeKVector(0), fink::PreconditionError);
  CHECK_THROWS_AS(fink::KVector(LeKVector(3, {1, 2})), fink::PreconditionError);
}

TEST_CASE("tetris and lift") {
  CHECK(tetris(LeKVector(2, {2, 1}), 1) == LeKVector(2, {1}));
  CHECK(tetris(LeKVector(2, {2, 1}), 0) == LeKVector(2, {2, 1}));
  CHECK(tetris(LeKVector(2, {2, 1}), 2).is_zero());
  CHECK(lift(LeKVector(1, {1, 0, 1})) == LeKVector(2, {2, 0, 2}));
  CHECK(lift(LeKVector(2, {1, 2})) == LeKVector(3, {2, 3}));
  CHECK_THROWS_AS(lift(LeKVector(2)), fink::PreconditionError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 4;
    auto s = from(k, oracle::random_vec(rng, k, 1 + trial % 9));
    if (s.is_zero()) continue;
    CHECK(tetris(lift(s), 1).relevel(k) == s);
  }
}

TEST_CASE("orderings on supports") {
  CHECK(block_less(LeKVector(2, {1, 0, 2}), LeKVector(2, {0, 0, 0, 2, 1})));
  CHECK_FALSE(block_less(LeKVector(2, {1, 0, 2}), LeKVector(2, {0, 0, 1})));
  CHECK_FALSE(block_less(LeKVector(2), LeKVector(2, {1})));
  CHECK(sqsubseteq(LeKVector(2, {0, 1}), LeKVector(2, {2, 1})));
  CHECK_FALSE(sqsubseteq(LeKVector(2, {0, 2}), LeKVector(2, {2, 1})));
  CHECK_FALSE(sqsubseteq(LeKVector(2, {0, 0, 1}), LeKVector(2, {2, 1})));
  CHECK(perp(LeKVector(2, {1, 0}), LeKVector(2, {2, 0})));
  CHECK_FALSE(perp(LeKVector(1, {1, 0}), LeKVector(1, {1, 0})));
  CHECK(lattice_leq(LeKVector(2, {1, 0, 1}), LeKVector(2, {1, 2, 1})));
  CHECK_FALSE(lattice_leq(LeKVector(2, {2}), LeKVector(2, {1, 2})));
  CHECK(disjoint_sum(LeKVector(2, {2}), LeKVector(2, {0, 0, 1})) == LeKVector(2, {2, 0, 1}));
  CHECK(disjoint_sum(LeKVector(2), LeKVector(2, {0, 1})) == LeKVector(2, {0, 1}));
  CHECK_THROWS_AS(disjoint_sum(LeKVector(2, {0, 1}), LeKVector(2, {2})), fink::PreconditionError);
}

TEST_CASE("level landmarks") {
  LeKVector s(2, {1, 0, 2, 0, 1, 0, 2, 0, 1});
  CHECK(min_level(s, 2) == 2u);
  CHECK(max_level(s, 1) == 8u);
  CHECK(max_level(s, 2) == 6u);
  CHECK_FALSE(min_level(LeKVector(2, {2}), 1).has_value());
}

TEST_CASE("sos predicate examples") {
  CHECK(is_sos(LeKVector(2, {1, 0, 2, 0, 1, 0, 2, 0, 1})));
  CHECK(is_sos(LeKVector(2, {1, 0, 2, 1, 0, 2, 0, 1})));
  CHECK(is_sos(LeKVector(1, {1, 0, 1})));
  CHECK(is_sos(LeKVector(1, {0, 0, 1, 0, 0, 1})));
  CHECK_FALSE(is_sos(LeKVector(2, {2})));
  CHECK_FALSE(is_sos(LeKVector(1, {1, 1})));
  CHECK_FALSE(is_sos(LeKVector(1, {1})));
  CHECK_FALSE(is_sos(LeKVector(2, {1, 2, 0, 2, 1})));
  CHECK(oracle::sos({1, 0, 1}));
  CHECK_FALSE(oracle::sos({1, 1}));
}

TEST_CASE("sos predicate agrees with the clause-by-clause oracle") {
  // Exhaustive over short words at k = 1, 2.
  for (int k = 1; k <= 2; ++k) {
    const int len = k == 1 ? 10 : 9;
    std::vector<int> word(len, 0);
    long checked = 0;
    while (true) {
      CHECK(is_sos(from(k, word)) == oracle::sos(word));
      ++checked;
      int p = 0;
      while (p < len && word[p] == k) word[p++] = 0;
      if (p == len) break;
      ++word[p];
    }
    CHECK(checked > 0);
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int k = 3 + trial % 3;
    auto w = trial % 2 ? oracle::random_sos(rng, k, 2, trial % 3) : oracle::random_vec(rng, k, 5 + trial % 20);
    if (trial % 4 == 1 && !w.empty()) w[trial % w.size()] = static_cast<int>(trial % (k + 1));
    CHECK(is_sos(from(k, w).relevel(k)) == oracle::sos(w));
  }
}

TEST_CASE("lattice laws") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + trial % 4;
    auto a = from(k, oracle::random_vec(rng, k, trial % 8));
    auto b = from(k, oracle::random_vec(rng, k, trial % 11));
    auto c = from(k, oracle::random_vec(rng, k, trial % 5));
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(a, b) == meet(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
    CHECK(join(a, a) == a);
    CHECK(meet(a, a) == a);
    CHECK(join(a, meet(a, b)) == a);
    CHECK(meet(a, join(a, b)) == a);
    CHECK(join(a, LeKVector(k)) == a);
    CHECK(to_vec(join(a, b)) == oracle::join(to_vec(a), to_vec(b)));
    CHECK(to_vec(meet(a, b)) == oracle::meet(to_vec(a), to_vec(b)));
    for (int i = 0; i <= k; ++i) {
      CHECK(tetris(join(a, b), i) == join(tetris(a, i), tetris(b, i)));
      CHECK(to_vec(tetris(a, i)) == oracle::tetris(to_vec(a), i));
    }
  }
}

TEST_CASE("tetris preserves sos and distinct powers are perpendicular") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 2 + trial % 2;
    auto w = oracle::random_sos(rng, k);
    auto s = from(k, w);
    REQUIRE(is_sos(s));
    CHECK(is_sos(tetris(s, 1)));
    CHECK(tetris(s, 1).level() == k - 1);
    for (int r = 0; r < k; ++r)
      for (int r2 = 0; r2 < k; ++r2)
        if (r != r2) CHECK(perp(tetris(s, r), tetris(s, r2)));
  }
}

TEST_CASE("spaced disjoint sums of sos vectors stay sos") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + trial % 2;
    auto sw = oracle::random_sos(rng, k);
    auto s = from(k, sw);
    auto t = from(k, oracle::random_sos(rng, k, 2, sw.size() + 1));
    REQUIRE(block_less(s, t));
    for (int j = 1; j <= k; ++j) {
      CHECK(is_sos(disjoint_sum(tetris(s, k - j), t)));
      CHECK(is_sos(disjoint_sum(s, tetris(t, k - j))));
    }
  }
}
