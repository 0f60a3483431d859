#include "fink/canonize.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "fink/error.hpp"

namespace fink {

PartitionOracle::PartitionOracle(int k, std::size_t n, std::unordered_map<LeKVector, int, LeKVectorHash> class_of)
    : k_(k), n_(n), class_of_(std::move(class_of)) {
  if (k < 1 || k > kMaxLevel) throw PreconditionError("oracle level out of range");
  domain_.reserve(class_of_.size());
  for (const auto& [v, c] : class_of_) {
    if (v.ambient() != k) throw AmbientMismatch(k, v.ambient());
    if (v.extent() > n) throw PreconditionError("oracle vector " + to_string(v) + " outside the first n positions");
    domain_.push_back(v);
  }
  std::sort(domain_.begin(), domain_.end());
}

PartitionOracle PartitionOracle::from_function(int k, std::size_t n, const std::function<int(const LeKVector&)>& cls) {
  std::unordered_map<LeKVector, int, LeKVectorHash> m;
  for (auto& v : subspace_elements(standard_basis(k, n), k)) {
    const int c = cls(v);
    m.emplace(std::move(v), c);
  }
  return PartitionOracle(k, n, std::move(m));
}

PartitionOracle PartitionOracle::from_staircase(const StaircaseValues& v, std::size_t n) {
  std::unordered_map<LeKVector, int, LeKVectorHash> ids;
  return from_function(v.k, n, [&](const LeKVector& s) {
    auto [it, fresh] = ids.emplace(eval_staircase(v, s), static_cast<int>(ids.size()));
    return it->second;
  });
}

int PartitionOracle::class_of(const LeKVector& s) const {
  auto it = class_of_.find(s);
  if (it == class_of_.end()) throw DomainError("relation undefined on " + to_string(s));
  return it->second;
}

bool agrees_on(const PartitionOracle& oracle, const StaircaseValues& values, const BlockSequence& witness,
               std::size_t* pairs) {
  const auto els = subspace_elements(witness, witness.k());
  std::vector<int> cls;
  std::vector<LeKVector> img;
  for (const auto& e : els) {
    cls.push_back(oracle.class_of(e));
    img.push_back(eval_staircase(values, e));
  }
  std::size_t count = 0;
  bool ok = true;
  for (std::size_t i = 0; i < els.size() && ok; ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      ++count;
      if ((cls[i] == cls[j]) != (img[i] == img[j])) {
        ok = false;
        break;
      }
    }
  if (pairs != nullptr) *pairs += count;
  return ok;
}

void for_each_sos_candidate(int k, std::size_t n, std::size_t m, const std::function<bool(const BlockSequence&)>& visit) {
  const auto base = standard_basis(k, n);
  struct Candidate {
    std::size_t span;
    std::vector<Coefficients> rows;
  };
  std::vector<Candidate> found;
  for_each_block_subsequence(
      base, m,
      [&](std::span<const Coefficients> rows) {
        const auto first = std::find_if(rows.front().begin(), rows.front().end(), [](int c) { return c != 0; });
        const auto last = std::find_if(rows.back().rbegin(), rows.back().rend(), [](int c) { return c != 0; });
        const auto lo = static_cast<std::size_t>(first - rows.front().begin());
        const auto hi = n - 1 - static_cast<std::size_t>(last - rows.back().rbegin());
        found.push_back({hi - lo, {rows.begin(), rows.end()}});
        return true;
      },
      [](std::size_t, const Coefficients&, const LeKVector& term) { return is_sos(term); });
  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return std::tie(a.span, a.rows) < std::tie(b.span, b.rows); });
  for (const auto& c : found)
    if (!visit(realize(base, c.rows))) return;
}

namespace {

// Class labels renumbered by first occurrence; equal iff the partitions agree.
template <class Key, class Hash>
std::vector<int> normalize(const std::vector<Key>& labels) {
  std::unordered_map<Key, int, Hash> ids;
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(ids.emplace(l, static_cast<int>(ids.size())).first->second);
  return out;
}

std::size_t hash_labels(const std::vector<int>& labels) {
  std::size_t h = 1469598103934665603ull;
  for (int l : labels) h = (h ^ static_cast<std::size_t>(l)) * 1099511628211ull;
  return h;
}

void check_length(std::size_t m) {
  if (m == 0) throw PreconditionError("witness length must be positive");
}

}  // namespace

CanonizationResult canonize_bruteforce(const PartitionOracle& oracle, std::size_t m) {
  check_length(m);
  const int k = oracle.k();
  if (k > 4) throw PreconditionError("brute-force canonization supports k <= 4");
  const auto tuples = enumerate_staircase(k);

  std::optional<CanonizationResult> result;
  std::size_t tried = 0;
  for_each_sos_candidate(k, oracle.n(), m, [&](const BlockSequence& w) {
    ++tried;
    const auto els = subspace_elements(w, k);
    std::vector<int> raw;
    raw.reserve(els.size());
    for (const auto& e : els) raw.push_back(oracle.class_of(e));
    const auto target = normalize<int, std::hash<int>>(raw);
    const std::size_t target_hash = hash_labels(target);

    std::vector<LeKVector> images(els.size(), LeKVector(k));
    for (const auto& v : tuples) {
      for (std::size_t i = 0; i < els.size(); ++i) images[i] = eval_staircase(v, els[i]);
      const auto sig = normalize<LeKVector, LeKVectorHash>(images);
      if (hash_labels(sig) != target_hash || sig != target) continue;
      CanonizationResult r{w, v, 0, tried};
      if (!agrees_on(oracle, v, w, &r.checked_pairs))
        throw Error("internal: matched signature failed verification on " + to_string(w));
      result = std::move(r);
      return false;
    }
    return true;
  });
  if (!result) throw NotFound("no sos witness of length " + std::to_string(m) + " in the first " +
                                  std::to_string(oracle.n()) + " positions carries a staircase relation",
                              tried);
  return *result;
}

std::vector<KEquation> taylor_equations() {
  return {parse_equation(1, "x0 ~ x1"), parse_equation(1, "x0 + x1 ~ x0"), parse_equation(1, "x0 + x1 ~ x1"),
          parse_equation(1, "x0 + x1 + x2 ~ x0 + x2")};
}

std::optional<StaircaseValues> classify_taylor(const PartitionOracle& oracle, const BlockSequence& witness,
                                               std::size_t* pairs) {
  if (oracle.k() != 1 || witness.k() != 1) throw PreconditionError("the Taylor classifier needs k = 1");
  if (witness.size() < 2) throw PreconditionError("the Taylor classifier needs witnesses of length at least 2");
  static const auto eqs = taylor_equations();
  const auto all = make_values(1, 0, {}, 0, {}, -1);
  const auto min = make_values(1, level_set({1}), {}, 0, {}, -1);
  const auto max = make_values(1, 0, {}, level_set({1}), {}, -1);
  const auto minmax = make_values(1, level_set({1}), {}, level_set({1}), {}, -1);
  const auto equal = make_values(1, level_set({1}), {}, level_set({1}), {}, 1);

  std::vector<Verdict> v;
  for (const auto& eq : eqs) {
    if (eq.arity() > witness.size()) {
      v.push_back(Verdict::undecided);
      continue;
    }
    const auto d = decide(eq, witness, oracle);
    if (d.verdict == Verdict::undecided) return std::nullopt;
    v.push_back(d.verdict);
  }
  using enum Verdict;
  std::vector<StaircaseValues> options;
  if (v[0] == truth) {
    options = {all};
  } else if (v[1] == truth && v[2] == falsity) {
    options = {min};
  } else if (v[1] == falsity && v[2] == truth) {
    options = {max};
  } else if (v[1] == falsity && v[2] == falsity) {
    if (v[3] == truth) options = {minmax};
    if (v[3] == falsity) options = {equal};
    if (v[3] == undecided) options = {minmax, equal};
  }
  for (const auto& o : options)
    if (agrees_on(oracle, o, witness, pairs)) return o;
  return std::nullopt;
}

CanonizationResult canonize_taylor(const PartitionOracle& oracle, std::size_t m) {
  check_length(m);
  if (oracle.k() != 1) throw PreconditionError("the Taylor classifier needs k = 1");
  if (m < 2) throw PreconditionError("the Taylor classifier needs witnesses of length at least 2");
  std::optional<CanonizationResult> result;
  std::size_t tried = 0;
  for_each_sos_candidate(1, oracle.n(), m, [&](const BlockSequence& w) {
    ++tried;
    std::size_t pairs = 0;
    if (auto v = classify_taylor(oracle, w, &pairs)) {
      result = CanonizationResult{w, *v, pairs, tried};
      return false;
    }
    return true;
  });
  if (!result) throw NotFound("no sos witness of length " + std::to_string(m) + " decides the classifier equations",
                              tried);
  return *result;
}

std::vector<LeKVector> symmetrize(const BlockSequence& witness) {
  if (witness.size() % 2 != 0) throw PreconditionError("symmetrize needs a witness of even length");
  const std::size_t m = witness.size() / 2;
  std::vector<LeKVector> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(disjoint_sum(witness[i], witness[2 * m - 1 - i]));
  return out;
}

PartitionOracle random_oracle(int k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (rng() % 2 == 0) {
    const auto tuples = enumerate_staircase(k);
    const auto& v = tuples[std::uniform_int_distribution<std::size_t>(0, tuples.size() - 1)(rng)];
    const double split = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    std::unordered_map<LeKVector, int, LeKVectorHash> base;
    int next = 0;
    return PartitionOracle::from_function(k, n, [&](const LeKVector& s) {
      auto [it, fresh] = base.emplace(eval_staircase(v, s), 0);
      if (fresh) it->second = next++;
      if (std::bernoulli_distribution(split)(rng)) return next++;
      return it->second;
    });
  }
  const auto classes = std::uniform_int_distribution<int>(1, 8)(rng);
  return PartitionOracle::from_function(k, n, [&](const LeKVector&) {
    return std::uniform_int_distribution<int>(0, classes - 1)(rng);
  });
}

Estimate estimate_n(int k, std::size_t m, std::size_t trials, std::uint64_t seed, std::size_t max_n) {
  if (k < 1 || m < 1) throw PreconditionError("estimate_n needs k >= 1 and m >= 1");
  const std::size_t lower = m * static_cast<std::size_t>(2 * k - 1);
  Estimate est;
  if (trials == 0) {
    est.n = lower;
    return est;
  }
  std::vector<std::uint64_t> previous;
  for (std::size_t n = lower; n <= max_n; ++n) {
    est.largest_n_tried = n;
    std::vector<std::uint64_t> failures;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = seed + t;
      try {
        canonize_bruteforce(random_oracle(k, n, s), m);
      } catch (const NotFound&) {
        failures.push_back(s);
      }
    }
    if (failures.empty()) {
      est.n = n;
      est.failures_below = std::move(previous);
      return est;
    }
    previous = std::move(failures);
  }
  est.failures_below = std::move(previous);
  return est;
}

}  // namespace fink
