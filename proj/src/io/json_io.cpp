#include <limits>
#include <map>

#include "fink/error.hpp"
#include "fink/io.hpp"

namespace fink {

namespace {

template <class Fn>
auto guarded(std::string_view what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

int small_int(const Json& j, std::string_view what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

LevelSet level_set_from_json(const Json& j, int k) {
  if (!j.is_array()) throw ParseError("index sets must be arrays");
  LevelSet out = 0;
  for (const auto& x : j) {
    const int i = small_int(x, "index");
    if (i < 1 || i > k) throw ParseError("index " + std::to_string(i) + " outside [1, k]");
    out |= LevelSet{1} << i;
  }
  return out;
}

std::map<int, int> l_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("l-maps must be objects");
  std::map<int, int> out;
  for (const auto& [key, value] : j.items()) {
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(key, &used);
      if (used != key.size()) throw ParseError("bad l-map key '" + key + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad l-map key '" + key + "'");
    }
    out[idx] = small_int(value, "l value");
  }
  return out;
}

Json l_json(const std::vector<int>& l, LevelSet J) {
  Json out = Json::object();
  for (int j : members(J))
    if (l[static_cast<std::size_t>(j)] != -1) out[std::to_string(j)] = l[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

Json json_of(const LeKVector& s) {
  Json out = Json::array();
  for (Coeff c : s.coeffs()) out.push_back(static_cast<int>(c));
  return out;
}

LeKVector vector_from_json(int k, const Json& j) {
  if (!j.is_array()) throw ParseError("a vector must be a JSON array of integers");
  std::vector<Coeff> c;
  for (const auto& x : j) {
    const int v = small_int(x, "vector entry");
    if (v < 0 || v > k) throw ParseError("vector entry " + std::to_string(v) + " outside [0, " + std::to_string(k) + "]");
    c.push_back(static_cast<Coeff>(v));
  }
  return LeKVector(k, std::move(c));
}

LeKVector parse_vector(int k, std::string_view text) {
  const Json j = guarded("vector", [&] { return Json::parse(text); });
  return vector_from_json(k, j);
}

Json json_of(const BlockSequence& alpha) {
  Json terms = Json::array();
  for (const auto& t : alpha.terms()) terms.push_back(json_of(t.vec()));
  return Json{{"k", alpha.k()}, {"terms", std::move(terms)}};
}

BlockSequence block_sequence_from_json(const Json& j) {
  const int k = small_int(field(j, "k"), "k");
  if (k < 1 || k > kMaxLevel) throw ParseError("k out of range");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  BlockSequence out(k);
  for (const auto& t : terms) {
    auto v = vector_from_json(k, t);
    if (!v.is_kvector()) throw ParseError("term " + to_string(v) + " does not reach level k");
    try {
      out.push_back(KVector(std::move(v)));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

Json json_of(const StaircaseValues& v) {
  return Json{{"k", v.k},
              {"I0", members(v.I0)},
              {"l0", l_json(v.l0, v.J0())},
              {"I1", members(v.I1)},
              {"l1", l_json(v.l1, v.J1())},
              {"l2", v.l2}};
}

StaircaseValues values_from_json(const Json& j) {
  const int k = small_int(field(j, "k"), "k");
  if (k < 1 || k > kMaxStaircaseLevel) throw ParseError("k out of range");
  const auto l0 = j.contains("l0") ? l_from_json(j.at("l0")) : std::map<int, int>{};
  const auto l1 = j.contains("l1") ? l_from_json(j.at("l1")) : std::map<int, int>{};
  const int l2 = j.contains("l2") ? small_int(j.at("l2"), "l2") : -1;
  try {
    return make_values(k, level_set_from_json(field(j, "I0"), k), l0, level_set_from_json(field(j, "I1"), k), l1, l2);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json json_of(const PartitionOracle& oracle) {
  Json classes = Json::object();
  for (const auto& v : oracle.domain()) classes[json_of(v).dump()] = oracle.class_of(v);
  return Json{{"k", oracle.k()}, {"n", oracle.n()}, {"classes", std::move(classes)}};
}

PartitionOracle partition_from_json(const Json& j) {
  const int k = small_int(field(j, "k"), "k");
  if (k < 1 || k > kMaxLevel) throw ParseError("k out of range");
  const int n = small_int(field(j, "n"), "n");
  if (n < 0) throw ParseError("n must be nonnegative");
  const Json& classes = field(j, "classes");
  if (!classes.is_object()) throw ParseError("\"classes\" must be an object");
  std::unordered_map<LeKVector, int, LeKVectorHash> m;
  for (const auto& [key, id] : classes.items()) {
    LeKVector v(k);
    if (!key.empty() && key.front() == '[') {
      v = parse_vector(k, key);
    } else {
      std::vector<Coeff> c;
      for (char ch : key) {
        if (ch < '0' || ch > '9' || ch - '0' > k) throw ParseError("bad vector key '" + key + "'");
        c.push_back(static_cast<Coeff>(ch - '0'));
      }
      v = LeKVector(k, std::move(c));
    }
    if (!v.is_kvector()) throw ParseError("key '" + key + "' is not a k-vector");
    if (!m.emplace(v, small_int(id, "class id")).second) throw ParseError("vector " + to_string(v) + " listed twice");
  }
  try {
    return PartitionOracle(k, static_cast<std::size_t>(n), std::move(m));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json json_of(const CanonizationResult& r) {
  return Json{{"witness", json_of(r.witness)},
              {"values", json_of(r.values)},
              {"checked_pairs", r.checked_pairs},
              {"candidates_tried", r.candidates_tried}};
}

Json json_of(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

}  // namespace fink
