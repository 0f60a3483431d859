#include "fink/c0net.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fink/error.hpp"

namespace fink {

namespace {

NetParams with_delta(int k, double delta) {
  NetParams p;
  p.k = k;
  p.delta = delta;
  p.eps = 1.0 / (1.0 + delta);
  for (int i = 0; i <= k; ++i) p.levels.push_back(std::pow(p.eps, k - i));
  return p;
}

}  // namespace

NetParams delta_for_k(int k) {
  if (k < 1 || k > kMaxLevel) throw PreconditionError("k out of range");
  if (k == 1) return with_delta(1, 1.0);
  // g(d) = d (1 + d)^{k-1} - 1 is increasing, negative at 0, positive at 1.
  auto g = [k](double d) { return d * std::pow(1.0 + d, k - 1) - 1.0; };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double d = std::abs(g(lo)) < std::abs(g(hi)) ? lo : hi;
  return with_delta(k, d);
}

NetParams params_for_delta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw PreconditionError("delta must lie in (0, 1]");
  const double eps = 1.0 / (1.0 + delta);
  int k = 1;
  // The root returned by delta_for_k sits on the boundary.
  while (std::pow(eps, k - 1) > delta * (1.0 + 1e-12)) {
    if (++k > kMaxLevel) throw PreconditionError("delta too small");
  }
  return with_delta(k, delta);
}

std::vector<double> gammas(const NetParams& p) {
  std::vector<double> g(static_cast<std::size_t>(p.k) + 2, 0.0);
  for (int i = 1; i <= p.k; ++i) g[static_cast<std::size_t>(i)] = std::pow(p.eps, p.k - i) * (p.eps + 1.0) / 2.0;
  g.back() = 1.0;
  return g;
}

int interval_index(const NetParams& p, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("entry " + std::to_string(x) + " outside [0, 1]");
  const auto g = gammas(p);
  int i = 0;
  while (i < p.k && x >= g[static_cast<std::size_t>(i) + 1]) ++i;
  return i;
}

double sup_norm(const RealVector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(const RealVector& x, const RealVector& y) {
  double m = 0.0;
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < x.size() ? x[i] : 0.0;
    const double b = i < y.size() ? y[i] : 0.0;
    m = std::max(m, std::abs(a - b));
  }
  return m;
}

LeKVector theta(const NetParams& p, const RealVector& x) {
  std::vector<Coeff> c(x.size(), 0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (std::abs(x[n]) <= kGridTolerance) continue;
    bool found = false;
    for (int i = 1; i <= p.k && !found; ++i)
      if (std::abs(x[n] - p.levels[static_cast<std::size_t>(i)]) <= kGridTolerance) {
        c[n] = static_cast<Coeff>(i);
        found = true;
      }
    if (!found) throw GridError(n, x[n]);
  }
  return LeKVector(p.k, std::move(c));
}

RealVector theta_inv(const NetParams& p, const LeKVector& s, std::size_t dim) {
  if (s.ambient() != p.k) throw AmbientMismatch(p.k, s.ambient());
  if (s.extent() > dim) throw PreconditionError("dimension " + std::to_string(dim) + " too small for " + to_string(s));
  RealVector x(dim, 0.0);
  for (std::size_t n = 0; n < s.extent(); ++n)
    if (s[n] != 0) x[n] = p.levels[static_cast<std::size_t>(s[n])];
  return x;
}

LeKVector round_gamma(const NetParams& p, const RealVector& x) {
  std::vector<Coeff> c(x.size(), 0);
  for (std::size_t n = 0; n < x.size(); ++n) c[n] = static_cast<Coeff>(interval_index(p, x[n]));
  return LeKVector(p.k, std::move(c));
}

RealVector snap_to_grid(const NetParams& p, const RealVector& x) {
  RealVector out(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    double best = 0.0;
    for (int i = 1; i <= p.k; ++i) {
      const double level = p.levels[static_cast<std::size_t>(i)];
      if (std::abs(x[n] - level) < std::abs(x[n] - best)) best = level;
    }
    out[n] = best;
  }
  return out;
}

NetReport verify_net(const NetParams& p, std::size_t dim, std::size_t samples, std::uint64_t seed) {
  if (samples == 0 || dim == 0) throw PreconditionError("verify_net needs at least one sample and coordinate");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  NetReport r;
  for (std::size_t s = 0; s < samples; ++s) {
    RealVector x(dim);
    for (auto& v : x) v = unit(rng);
    x[pick(rng)] = 1.0;
    r.max_distance = std::max(r.max_distance, sup_distance(x, snap_to_grid(p, x)));
    ++r.samples;
  }
  return r;
}

namespace {

LeKVector sos_image(const NetParams& p, const RealVector& x) {
  LeKVector g = round_gamma(p, x);
  if (!g.is_kvector() || !is_sos(g)) throw DomainError("vector rounds to " + to_string(g) + ", which is not an sos");
  return g;
}

RealVector keep_support(const LeKVector& f0, const RealVector& x) {
  RealVector out(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n)
    if (f0[n] != 0) out[n] = x[n];
  return out;
}

}  // namespace

LeKVector extend_f0(const StaircaseValues& f, const NetParams& p, const RealVector& x) {
  if (f.k != p.k) throw AmbientMismatch(p.k, f.k);
  return eval_staircase(f, sos_image(p, x));
}

LeKVector extend_f0(const FamilyMember& f, const NetParams& p, const RealVector& x) {
  return eval_member(f, sos_image(p, x));
}

RealVector extend_f1(const StaircaseValues& f, const NetParams& p, const RealVector& x) {
  return keep_support(extend_f0(f, p, x), x);
}

RealVector extend_f1(const FamilyMember& f, const NetParams& p, const RealVector& x) {
  return keep_support(extend_f0(f, p, x), x);
}

RealVector min_approximant(const NetParams& p, int i, int l, const RealVector& x) {
  if (i < 1 || i > p.k || l < 1) throw PreconditionError("min_approximant needs 1 <= i <= k and l >= 1");
  const auto g = gammas(p);
  const double lo = g[static_cast<std::size_t>(i)] - 1.0 / l;
  const double hi = g[static_cast<std::size_t>(i) + 1];
  RealVector out(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    const bool inside = x[n] > lo && (i == p.k ? x[n] <= hi : x[n] < hi);
    if (inside) {
      out[n] = x[n];
      break;
    }
    if (x[n] >= g[static_cast<std::size_t>(i)]) break;
  }
  return out;
}

}  // namespace fink
