#pragma once
// Exact counts of staircase relations.

#include <boost/multiprecision/cpp_int.hpp>

namespace fink {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Number of min-relations at level k by the three-term recurrence; k >= 0.
BigInt count_a(int k);
/// k! e_k(1), where e_k(1) = sum_{j<=k} 1/j!, evaluated with exact rationals.
BigInt count_a_closed(int k);
/// a_k = a_{k-1} + c_{k-1} + k (a_{k-1} - c_{k-1}) with c_k = a_{k-1}, c_0 = 1.
BigInt count_a_construction(int k);
/// Min-relations not using level k: c_k = a_{k-1}, c_0 = 1.
BigInt count_c(int k);

/// All staircase relations: k (a_k - a_{k-1})^2 + a_k^2.
BigInt count_t(int k);
/// The same number from the product-of-sets construction:
/// a b - (a - c)(b - d) + (k + 1)(a - c)(b - d).
BigInt count_t_construction(int k);
/// (k! e_k(1))^2 + k (k! e_k(1) - (k-1)! e_{k-1}(1))^2.
BigInt count_t_closed(int k);

/// Symmetric relations: c_k + (a_k - c_k)(k + 1); k >= 1.
BigInt count_s(int k);
/// (k+1)! e_k(1) - k! e_{k-1}(1); k >= 1.
BigInt count_s_closed(int k);

/// Fibonacci number F_{2k+2} with F_1 = F_2 = 1; k >= 1.
BigInt count_linked_free(int k);
BigInt fibonacci(int n);

}  // namespace fink
