#include "fink/blockspace.hpp"

#include <algorithm>

#include "fink/error.hpp"
#include "fink/simd/kernels.hpp"

namespace fink {

BlockSequence::BlockSequence(int k) : k_(k) {
  if (k < 1 || k > kMaxLevel) throw PreconditionError("block sequence level out of range");
}

BlockSequence::BlockSequence(int k, std::vector<KVector> terms) : BlockSequence(k) {
  terms_.reserve(terms.size());
  for (auto& t : terms) push_back(std::move(t));
}

void BlockSequence::push_back(KVector term) {
  if (term.k() != k_) throw AmbientMismatch(k_, term.k());
  if (!terms_.empty() && !block_less(terms_.back(), term))
    throw PreconditionError("terms are not block ordered: " + to_string(terms_.back().vec()) + " then " +
                            to_string(term.vec()));
  terms_.push_back(std::move(term));
}

BlockSequence BlockSequence::prefix(std::size_t n) const {
  BlockSequence out(k_);
  out.terms_.assign(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(std::min(n, terms_.size())));
  return out;
}

BlockSequence standard_basis(int k, std::size_t n) {
  BlockSequence out(k);
  for (std::size_t i = 0; i < n; ++i) out.push_back(KVector(LeKVector::unit(k, i, k)));
  return out;
}

LeKVector recompose(const BlockSequence& alpha, std::span<const int> c) {
  const int k = alpha.k();
  if (c.size() != alpha.size())
    throw PreconditionError("coefficient count " + std::to_string(c.size()) + " differs from " +
                            std::to_string(alpha.size()) + " generators");
  std::size_t extent = 0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] < 0 || c[n] > k) throw PreconditionError("coefficient outside [0, k]");
    if (c[n] != 0) extent = alpha[n].extent();
  }
  std::vector<Coeff> out(extent, 0);
  const auto& kern = simd::active_kernels();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    const LeKVector& g = alpha[n];
    const std::size_t lo = *g.min_support();
    kern.tetris(g.coeffs().data() + lo, out.data() + lo, g.extent() - lo, static_cast<Coeff>(k - c[n]));
  }
  return LeKVector(k, std::move(out));
}

namespace {

// Calls fn(tuple) for every tuple in {0..top}^len in lexicographic order.
// Stops early when fn returns false; the return value reports completion.
template <class Fn>
bool for_each_tuple(std::size_t len, int top, Fn&& fn) {
  std::vector<int> t(len, 0);
  while (true) {
    if (!fn(t)) return false;
    std::size_t p = len;
    while (p > 0 && t[p - 1] == top) t[--p] = 0;
    if (p == 0) return true;
    ++t[p - 1];
  }
}

}  // namespace

std::vector<LeKVector> subspace_elements(const BlockSequence& alpha, int level) {
  if (level < 1 || level > alpha.k()) throw PreconditionError("level must lie in [1, k]");
  std::vector<LeKVector> out;
  for_each_tuple(alpha.size(), level, [&](const std::vector<int>& c) {
    if (std::find(c.begin(), c.end(), level) != c.end()) out.push_back(recompose(alpha, c));
    return true;
  });
  return out;
}

std::vector<std::pair<Coefficients, LeKVector>> subspace_with_coefficients(const BlockSequence& alpha) {
  std::vector<std::pair<Coefficients, LeKVector>> out;
  const int k = alpha.k();
  for_each_tuple(alpha.size(), k, [&](const std::vector<int>& c) {
    if (std::find(c.begin(), c.end(), k) != c.end()) out.emplace_back(c, recompose(alpha, c));
    return true;
  });
  return out;
}

std::optional<Coefficients> try_decompose(const BlockSequence& alpha, const LeKVector& a) {
  if (a.ambient() != alpha.k()) throw AmbientMismatch(alpha.k(), a.ambient());
  const int k = alpha.k();
  Coefficients c(alpha.size(), 0);
  for (std::size_t n = 0; n < alpha.size(); ++n) c[n] = a[*max_level(alpha[n], k)];
  if (recompose(alpha, c) != a) return std::nullopt;
  return c;
}

Coefficients canonical_decomposition(const BlockSequence& alpha, const LeKVector& a) {
  auto c = try_decompose(alpha, a);
  if (!c) throw NotInSubspace(to_string(a) + " is not in the subspace of " + to_string(alpha));
  return *std::move(c);
}

bool in_subspace(const BlockSequence& alpha, const LeKVector& a) { return try_decompose(alpha, a).has_value(); }

void for_each_block_subsequence(const BlockSequence& alpha, std::size_t m, const RowsVisitor& visit,
                                const RowFilter& filter) {
  const std::size_t total = alpha.size();
  const int k = alpha.k();
  if (m == 0 || m > total) return;
  std::vector<Coefficients> rows(m, Coefficients(total, 0));

  // Row j may only use generators in [start, total) and must leave room for
  // the remaining rows, one generator each.
  std::function<bool(std::size_t, std::size_t)> descend = [&](std::size_t j, std::size_t start) -> bool {
    if (j == m) return visit(rows);
    Coefficients& row = rows[j];
    const std::size_t len = total - start;
    const std::size_t tail = m - j - 1;
    return for_each_tuple(len, k, [&](const std::vector<int>& t) {
      std::size_t last = len;
      bool top = false;
      for (std::size_t p = 0; p < len; ++p) {
        if (t[p] != 0) last = p;
        top = top || t[p] == k;
      }
      if (!top || total - (start + last + 1) < tail) return true;
      std::fill(row.begin(), row.end(), 0);
      std::copy(t.begin(), t.end(), row.begin() + static_cast<std::ptrdiff_t>(start));
      if (filter && !filter(j, row, recompose(alpha, row))) return true;
      return descend(j + 1, start + last + 1);
    });
  };
  descend(0, 0);
}

BlockSequence realize(const BlockSequence& alpha, std::span<const Coefficients> rows) {
  BlockSequence out(alpha.k());
  for (const auto& r : rows) out.push_back(KVector(recompose(alpha, r)));
  return out;
}

std::vector<BlockSequence> block_subsequences(const BlockSequence& alpha, std::size_t m) {
  std::vector<BlockSequence> out;
  for_each_block_subsequence(alpha, m, [&](std::span<const Coefficients> rows) {
    out.push_back(realize(alpha, rows));
    return true;
  });
  return out;
}

bool is_subsequence(const BlockSequence& beta, const BlockSequence& alpha) {
  if (beta.k() != alpha.k()) throw AmbientMismatch(alpha.k(), beta.k());
  return std::all_of(beta.terms().begin(), beta.terms().end(),
                     [&](const KVector& b) { return in_subspace(alpha, b); });
}

bool is_sos_sequence(const BlockSequence& alpha) {
  return std::all_of(alpha.terms().begin(), alpha.terms().end(), [](const KVector& a) { return is_sos(a); });
}

std::size_t sos_build_required(int k, std::size_t length) {
  if (length == 0) return 0;
  const auto kk = static_cast<std::size_t>(k);
  return 2 * (2 * kk - 1) * (3 * kk - 1) * length - 1;
}

BlockSequence sos_build(const BlockSequence& alpha, std::size_t length) {
  const int k = alpha.k();
  const std::size_t need = sos_build_required(k, length);
  if (alpha.size() < need) throw LengthError(need, alpha.size());

  auto g = [&](std::size_t i) -> const LeKVector& { return alpha[2 * i]; };
  const auto per_c = static_cast<std::size_t>(2 * k - 1);
  const auto per_b = static_cast<std::size_t>(3 * k - 1);
  const auto ku = static_cast<std::size_t>(k);

  auto make_c = [&](std::size_t n) {
    LeKVector c(k);
    for (std::size_t j = 1; j <= ku; ++j) c = disjoint_sum(c, tetris(g(per_c * n + j - 1), k - static_cast<int>(j)));
    for (std::size_t j = 1; j < ku; ++j) c = disjoint_sum(c, tetris(g(per_c * n + ku - 1 + j), static_cast<int>(j)));
    return c;
  };

  BlockSequence out(k);
  for (std::size_t n = 0; n < length; ++n) {
    LeKVector b(k);
    for (std::size_t j = 1; j <= ku; ++j) b = disjoint_sum(b, tetris(make_c(per_b * n + j - 1), k - static_cast<int>(j)));
    for (std::size_t j = 1; j <= ku; ++j)
      b = disjoint_sum(b, tetris(make_c(per_b * n + ku - 1 + j), k - static_cast<int>(j)));
    for (std::size_t j = 1; j < ku; ++j)
      b = disjoint_sum(b, tetris(make_c(per_b * n + 2 * ku - 1 + j), static_cast<int>(j)));
    out.push_back(KVector(std::move(b)));
  }
  return out;
}

BlockSequence sos_build(const BlockSequence& alpha) {
  const auto k = static_cast<std::size_t>(alpha.k());
  return sos_build(alpha, (alpha.size() + 1) / (2 * (2 * k - 1) * (3 * k - 1)));
}

std::string to_string(const BlockSequence& alpha) {
  std::string out = "[";
  for (std::size_t n = 0; n < alpha.size(); ++n) {
    if (n) out += ',';
    out += to_string(alpha[n].vec());
  }
  return out + "]";
}

}  // namespace fink
