#pragma once
// The grid of levels eps^i in [0,1] and the maps between positive vectors of
// c_0 and (<=k)-vectors.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fink/kvector.hpp"
#include "fink/staircase.hpp"

namespace fink {

/// Finitely many coordinates of a positive vector of c_0.
using RealVector = std::vector<double>;

inline constexpr double kGridTolerance = 1e-9;

struct NetParams {
  int k = 1;
  double delta = 1.0;
  /// 1 / (1 + delta).
  double eps = 0.5;
  /// delta_i = eps^{k-i} for i = 0..k.
  std::vector<double> levels;
};

/// delta solving delta (1 + delta)^{k-1} = 1, by bisection on (0, 1].
NetParams delta_for_k(int k);
/// The least k with eps^{k-1} <= delta.
NetParams params_for_delta(double delta);

/// gamma_0 = 0, gamma_i = eps^{k-i} (eps + 1) / 2 for 1 <= i <= k, gamma_{k+1} = 1.
std::vector<double> gammas(const NetParams& p);
/// The i with x in I_i = [gamma_i, gamma_{i+1}) (closed at 1 for i = k).
int interval_index(const NetParams& p, double x);

double sup_norm(const RealVector& x);
double sup_distance(const RealVector& x, const RealVector& y);

/// eps^i maps to k - i and 0 to 0. Throws GridError for any other entry.
LeKVector theta(const NetParams& p, const RealVector& x);
/// eps^{k - s(n)} on the support of s. Throws PreconditionError unless dim
/// exceeds the support of s.
RealVector theta_inv(const NetParams& p, const LeKVector& s, std::size_t dim);
/// Coordinatewise interval index. Throws DomainError for entries outside [0, 1].
LeKVector round_gamma(const NetParams& p, const RealVector& x);

/// The nearest point of the grid {0, eps^{k-1}, ..., 1}^dim.
RealVector snap_to_grid(const NetParams& p, const RealVector& x);

struct NetReport {
  double max_distance = 0.0;
  std::size_t samples = 0;
};

/// Distance from random positive norm-one vectors to the grid.
NetReport verify_net(const NetParams& p, std::size_t dim, std::size_t samples, std::uint64_t seed);

/// f evaluated on round_gamma(x). Throws DomainError unless round_gamma(x) is
/// an sos.
LeKVector extend_f0(const StaircaseValues& f, const NetParams& p, const RealVector& x);
LeKVector extend_f0(const FamilyMember& f, const NetParams& p, const RealVector& x);
/// x restricted to the support of extend_f0(f, p, x).
RealVector extend_f1(const StaircaseValues& f, const NetParams& p, const RealVector& x);
RealVector extend_f1(const FamilyMember& f, const NetParams& p, const RealVector& x);

/// Continuous approximants of extend_f1 for min_i, built from the intervals
/// I_i widened by 1/l on the left.
RealVector min_approximant(const NetParams& p, int i, int l, const RealVector& x);

}  // namespace fink
