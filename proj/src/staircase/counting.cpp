#include "fink/counting.hpp"

#include <string>
#include <utility>
#include <vector>

#include "fink/error.hpp"

namespace fink {
namespace {

void require_nonnegative(int k, int least = 0) {
  if (k < least) throw PreconditionError("count requested for k = " + std::to_string(k));
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigRational exp_partial_sum(int n) {
  BigRational sum = 0;
  BigInt f = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) f *= j;
    sum += BigRational(BigInt(1), f);
  }
  return sum;
}

BigInt exact(const BigRational& q) {
  if (denominator(q) != 1) throw Error("expected an integer, got a proper fraction");
  return numerator(q);
}

}  // namespace

BigInt count_a(int k) {
  require_nonnegative(k);
  BigInt prev = 1, cur = 2;
  if (k == 0) return prev;
  for (int j = 2; j <= k; ++j) {
    BigInt next = BigInt(j + 1) * cur - BigInt(j - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt count_a_closed(int k) {
  require_nonnegative(k);
  return exact(BigRational(factorial(k)) * exp_partial_sum(k));
}

BigInt count_c(int k) {
  require_nonnegative(k);
  return k == 0 ? BigInt(1) : count_a(k - 1);
}

namespace {

// (a_k, c_k) from the set construction alone.
std::pair<BigInt, BigInt> constructed(int k) {
  BigInt a = 1, c = 1;
  for (int j = 1; j <= k; ++j) {
    BigInt next = a + c + BigInt(j) * (a - c);
    c = a;
    a = std::move(next);
  }
  return {a, c};
}

}  // namespace

BigInt count_a_construction(int k) {
  require_nonnegative(k);
  return constructed(k).first;
}

BigInt count_t(int k) {
  require_nonnegative(k);
  const BigInt a = count_a(k);
  if (k == 0) return a * a;
  const BigInt d = a - count_a(k - 1);
  return BigInt(k) * d * d + a * a;
}

BigInt count_t_construction(int k) {
  require_nonnegative(k);
  const auto [a, c] = constructed(k);
  const BigInt& b = a;
  const BigInt& d = c;
  return a * b - (a - c) * (b - d) + BigInt(k + 1) * (a - c) * (b - d);
}

BigInt count_t_closed(int k) {
  require_nonnegative(k);
  const BigRational ak = BigRational(factorial(k)) * exp_partial_sum(k);
  if (k == 0) return exact(ak * ak);
  const BigRational prev = BigRational(factorial(k - 1)) * exp_partial_sum(k - 1);
  const BigRational diff = ak - prev;
  return exact(ak * ak + BigRational(k) * diff * diff);
}

BigInt count_s(int k) {
  require_nonnegative(k, 1);
  const BigInt a = count_a(k), c = count_c(k);
  return c + (a - c) * (k + 1);
}

BigInt count_s_closed(int k) {
  require_nonnegative(k, 1);
  return exact(BigRational(factorial(k + 1)) * exp_partial_sum(k) -
               BigRational(factorial(k)) * exp_partial_sum(k - 1));
}

BigInt fibonacci(int n) {
  require_nonnegative(n);
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt count_linked_free(int k) {
  require_nonnegative(k, 1);
  return fibonacci(2 * k + 2);
}

}  // namespace fink
