#pragma once
// The statements about f^(0) and f^(1) checked on random samples; shared by
// the unit tests and the acceptance run.

#include <algorithm>
#include <random>
#include <type_traits>

#include "fink/c0net.hpp"
#include "support/net_samples.hpp"
#include "support/properties.hpp"

namespace props {

inline constexpr double kTol = 1e-9;

inline std::vector<FamilyMember> family(int k) {
  std::vector<FamilyMember> out;
  for (int i = 1; i <= k; ++i) {
    out.push_back(FamilyMember::min(i));
    out.push_back(FamilyMember::max(i));
    out.push_back(FamilyMember::theta2(i));
    for (int l = 1; l < i; ++l) {
      out.push_back(FamilyMember::theta0(i, l));
      out.push_back(FamilyMember::theta1(i, l));
    }
  }
  return out;
}

inline RealVector pointwise(const RealVector& x, const RealVector& y, bool take_max) {
  RealVector out(std::max(x.size(), y.size()), 0.0);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const double a = n < x.size() ? x[n] : 0.0, b = n < y.size() ? y[n] : 0.0;
    out[n] = take_max ? std::max(a, b) : std::min(a, b);
  }
  return out;
}

inline LeKVector grid_vector(int k, const oracle::Vec& v) { return testing_support::from(k, v); }

/// (iii)-(vi) for random staircase f on `samples` delta-sos vectors.
inline void net_extensions(const NetParams& p, std::size_t samples, std::uint64_t seed, Report& r) {
  const auto values = enumerate_staircase(p.k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    const auto& f = values[pick(rng)];
    oracle::Vec pattern;
    const auto x = testing_support::random_delta_sos(rng, p, &pattern);
    const auto a = grid_vector(p.k, pattern);
    const auto f0 = extend_f0(f, p, x);
    const auto f1 = extend_f1(f, p, x);
    const std::string tag = to_string(f) + " at " + to_string(a);

    // (iv)
    r.expect(sup_distance(theta_inv(p, f0, x.size()), f1) <= p.delta + kTol, "(iv) " + tag);

    // (v): on grid points both extensions reproduce f.
    const auto grid = theta_inv(p, a, x.size());
    const auto fa = eval_staircase(f, a);
    r.expect(extend_f0(f, p, grid) == fa, "(v) f0 " + tag);
    r.expect(theta(p, extend_f1(f, p, grid)) == fa, "(v) f1 " + tag);

    // (vi) with the rounded vector as the grid point.
    r.expect(sup_distance(x, grid) <= p.delta + kTol, "(vi) distance " + tag);
    r.expect(extend_f0(f, p, grid) == f0, "(vi) f0 " + tag);

    // (iii): y agrees with x on the support of f1 x and is redrawn elsewhere.
    auto y = testing_support::jitter(rng, p, pattern);
    for (std::size_t n = 0; n < x.size(); ++n)
      if (f1[n] != 0.0) y[n] = x[n];
    if (extend_f1(f, p, y) == f1) r.expect(extend_f0(f, p, y) == f0, "(iii) " + tag);
  }
}

/// Sum of lambda_n Theta^{-1} a_n over the terms of alpha.
inline RealVector combine(const NetParams& p, const BlockSequence& alpha, const std::vector<double>& lambda) {
  const std::size_t dim = alpha[alpha.size() - 1].extent();
  RealVector out(dim, 0.0);
  for (std::size_t n = 0; n < alpha.size(); ++n) {
    const auto x = theta_inv(p, alpha[n], dim);
    for (std::size_t m = 0; m < dim; ++m) out[m] += lambda[n] * x[m];
  }
  return out;
}

/// x, y in PS_X with f^(1) x = f^(1) y, and z with x ^ y <= z <= x v y in
/// PS_X: then f^(1) z = f^(1) x. X is Theta^{-1} of a random sos sequence;
/// the block scalars come from a small pool so that related pairs are common.
/// A member from the family whose value on x is 0 at a top parameter is
/// skipped, as in the inclusion lemmas.
template <class F>
void interval_sandwich(const NetParams& p, const std::vector<F>& maps, std::size_t samples, std::uint64_t seed,
                       Report& r) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < samples; ++t) {
    const auto alpha = testing_support::random_sos_sequence(rng, p.k, 3, 1, 1);
    std::vector<double> pool{0.0, 1.0};
    for (int i = 1; i < p.k; ++i)
      pool.push_back(testing_support::gamma_at(p, i) +
                     (testing_support::gamma_at(p, i + 1) - testing_support::gamma_at(p, i)) * unit(rng));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), which(0, alpha.size() - 1);
    auto draw = [&] {
      std::vector<double> lambda(alpha.size());
      for (auto& l : lambda) l = pool[pick(rng)];
      lambda[which(rng)] = 1.0;
      return lambda;
    };
    const auto& f = maps[t % maps.size()];
    for (int attempt = 0; attempt < 20; ++attempt) {
      const auto lx = draw(), ly = draw();
      const auto x = combine(p, alpha, lx), y = combine(p, alpha, ly);
      const auto fx = extend_f1(f, p, x);
      if (extend_f1(f, p, y) != fx) continue;
      if constexpr (std::is_same_v<F, FamilyMember>) {
        const bool top = (f.kind == MemberKind::theta2 && f.l == p.k) ||
                         ((f.kind == MemberKind::theta0 || f.kind == MemberKind::theta1) && f.l == f.i - 1);
        if (top && sup_norm(fx) == 0.0) continue;
      }
      std::vector<double> lz(alpha.size());
      for (std::size_t n = 0; n < lz.size(); ++n) {
        const double lo = std::min(lx[n], ly[n]), hi = std::max(lx[n], ly[n]);
        lz[n] = unit(rng) < 0.3 ? (unit(rng) < 0.5 ? lo : hi) : lo + (hi - lo) * unit(rng);
      }
      const auto z = combine(p, alpha, lz);
      if (sup_norm(z) < 1.0) continue;
      r.expect(extend_f1(f, p, z) == fx, to_string(f) + " on " + to_string(alpha));
      break;
    }
  }
}

}  // namespace props
