#include <random>
#include <string>

#include "doctest.h"
#include "support/properties.hpp"

using namespace fink;

namespace {

void require_clean(const props::Report& r) {
  for (const auto& s : r.samples) MESSAGE(s);
  CHECK(r.checked > 0);
  CHECK(r.failed == 0);
}

std::vector<BlockSequence> sos_sequences(int k, std::size_t m, std::uint64_t seed, int randoms) {
  std::vector<BlockSequence> out;
  out.push_back(sos_build(standard_basis(k, sos_build_required(k, m)), m));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < randoms; ++i)
    out.push_back(testing_support::random_sos_sequence(rng, k, m, static_cast<std::size_t>(i % 2), 1 + i % 2));
  return out;
}

// x0 + T^{k-i} x1 + x2 ~ x0 + x2
KEquation middle_drop(int k, int i) {
  std::string power = k - i == 0 ? "" : k - i == 1 ? "T " : "T^" + std::to_string(k - i) + " ";
  return parse_equation(k, "x0 + " + power + "x1 + x2 ~ x0 + x2");
}

}  // namespace

TEST_CASE("staircase relations decide equations the same way in every sos sequence") {
  props::Report r;
  for (int k = 1; k <= 2; ++k) props::same_verdicts(enumerate_staircase(k), sos_sequences(k, 4, 5 + k, 3), 3, r);
  require_clean(r);
}

TEST_CASE("the classifier equations are decided at k = 1") {
  const auto eqs = taylor_equations();
  for (const auto& alpha : sos_sequences(1, 4, 11, 4))
    for (const auto& v : enumerate_staircase(1))
      for (const auto& eq : eqs) {
        const auto d = decide(eq, alpha, StaircaseRelation{v});
        INFO(to_string(eq), " under ", to_string(v), " in ", to_string(alpha));
        CHECK(d.verdict != Verdict::undecided);
      }
}

TEST_CASE("dropping a lower middle term transfers truth downwards") {
  const int k = 2;
  props::Report r;
  for (const auto& alpha : sos_sequences(k, 4, 3, 2))
    for (const auto& v : enumerate_staircase(k))
      for (int i = 1; i <= k; ++i) {
        if (decide(middle_drop(k, i), alpha, StaircaseRelation{v}).verdict != Verdict::truth) continue;
        for (int j = 1; j <= i; ++j)
          r.expect(decide(middle_drop(k, j), alpha, StaircaseRelation{v}).verdict == Verdict::truth,
                   to_string(v) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  require_clean(r);
}

TEST_CASE("verdicts pass to subsequences") {
  props::Report r;
  for (int k = 1; k <= 2; ++k) {
    const auto alpha = sos_build(standard_basis(k, sos_build_required(k, 4)), 4);
    const auto values = enumerate_staircase(k);
    std::vector<BlockSequence> betas;
    for (const auto& b : block_subsequences(alpha, 3))
      if (is_sos_sequence(b)) betas.push_back(b);
    REQUIRE(!betas.empty());
    for (const auto& [p, q] : props::term_pairs(k, 2)) {
      const auto eq = make_equation(p, q);
      for (std::size_t vi = 0; vi < values.size(); vi += k) {
        const StaircaseRelation rel{values[vi]};
        const auto whole = decide(eq, alpha, rel);
        if (whole.verdict == Verdict::undecided) continue;
        for (const auto& b : betas) {
          const auto part = decide(eq, b, rel);
          if (part.empty) continue;
          r.expect(part.verdict == whole.verdict, to_string(eq) + " in " + to_string(b));
        }
      }
    }
  }
  require_clean(r);
}
