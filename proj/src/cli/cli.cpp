#include "fink/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fink/blockspace.hpp"
#include "fink/c0net.hpp"
#include "fink/canonize.hpp"
#include "fink/counting.hpp"
#include "fink/equations.hpp"
#include "fink/error.hpp"
#include "fink/io.hpp"
#include "fink/staircase.hpp"

namespace fink::cli {

namespace {

struct Common {
  int k = 0;
  std::uint64_t seed = 0;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--k", c.k, "Level k")->required()->check(CLI::Range(1, kMaxLevel));
  cmd->add_option("--seed", c.seed, "Seed for randomized steps")->default_val(0);
  cmd->add_flag("--quiet", c.quiet, "No progress on stderr");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void check_level(int expected, int got, const std::string& what) {
  if (expected != got)
    throw ParseError(what + " is at level " + std::to_string(got) + " but --k is " + std::to_string(expected));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Staircase relations on FIN_k: counts, enumeration, equations, canonization and nets", "fink"};
  app.require_subcommand(1);
  Common common;

  auto* count = app.add_subcommand("count", "Number of staircase relations");
  add_common(count, common);
  std::string which = "t";
  count->add_option("--which", which, "a, t, s or fib")->check(CLI::IsMember({"a", "t", "s", "fib"}));

  auto* enumerate = app.add_subcommand("enumerate", "List staircase tuples");
  add_common(enumerate, common);
  bool symmetric = false;
  enumerate->add_flag("--symmetric", symmetric, "Symmetric tuples only");

  auto* build = app.add_subcommand("sos-build", "sos subsequence of the standard basis");
  add_common(build, common);
  std::size_t basis_n = 0;
  std::optional<std::size_t> length;
  build->add_option("--n", basis_n, "Size of the standard basis")->required();
  build->add_option("--length", length, "Number of sos terms (default: as many as fit)");

  auto* check = app.add_subcommand("sos-check", "Is a vector an sos");
  add_common(check, common);
  std::string vector_text;
  check->add_option("--vector", vector_text, "Vector such as [1,0,2,0,1]")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Truth of an equation over a finite block sequence");
  add_common(decide_cmd, common);
  std::string equation_text, alpha_file, values_file, partition_file;
  std::optional<std::size_t> tuple_index, sos_length;
  decide_cmd->add_option("--equation", equation_text, "Equation such as \"x0 + T x1 ~ x0\"")->required();
  auto* alpha_opt = decide_cmd->add_option("--alpha", alpha_file, "Block sequence JSON file");
  auto* sos_opt = decide_cmd->add_option("--sos-length", sos_length, "Use sos_build of this length instead");
  alpha_opt->excludes(sos_opt);
  auto* values_opt = decide_cmd->add_option("--values", values_file, "Staircase tuple JSON file");
  auto* tuple_opt = decide_cmd->add_option("--tuple", tuple_index, "Index into the enumeration at level k");
  auto* part_opt = decide_cmd->add_option("--partition", partition_file, "Partition JSON file");
  values_opt->excludes(tuple_opt)->excludes(part_opt);
  tuple_opt->excludes(part_opt);

  auto* canon = app.add_subcommand("canonize", "Find an sos witness carrying a staircase relation");
  add_common(canon, common);
  std::string canon_partition;
  std::optional<std::size_t> random_n;
  std::size_t m = 2;
  bool fast_k1 = false;
  auto* canon_part_opt = canon->add_option("--partition", canon_partition, "Partition JSON file");
  auto* random_opt = canon->add_option("--random-n", random_n, "Random relation on the first N positions, from --seed");
  canon_part_opt->excludes(random_opt);
  canon->add_option("--m", m, "Witness length")->default_val(2)->check(CLI::PositiveNumber);
  canon->add_flag("--fast-k1", fast_k1, "Use the equation classifier (k = 1)");

  auto* estimate = app.add_subcommand("estimate-n", "Empirical size needed to canonize random relations");
  add_common(estimate, common);
  std::size_t trials = 20, max_n = 10, est_m = 2;
  estimate->add_option("--m", est_m, "Witness length")->default_val(2)->check(CLI::PositiveNumber);
  estimate->add_option("--trials", trials, "Random relations per size")->default_val(20);
  estimate->add_option("--max-n", max_n, "Largest size tried")->default_val(10);

  auto* net = app.add_subcommand("net", "Levels of the net and a Monte-Carlo distance check");
  add_common(net, common);
  std::optional<double> delta;
  std::size_t dim = 6, samples = 10000;
  bool verify = false;
  net->add_option("--delta", delta, "delta in (0, 1]; must lead to the given k");
  net->add_option("--dim", dim, "Coordinates per sample")->default_val(6)->check(CLI::PositiveNumber);
  net->add_option("--samples", samples, "Samples")->default_val(10000)->check(CLI::PositiveNumber);
  net->add_flag("--verify", verify, "Fail unless the observed distance is at most delta");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  auto progress = [&](const std::string& msg) {
    if (!common.quiet) err << msg << '\n';
  };
  const int k = common.k;

  try {
    if (*count) {
      BigInt v;
      if (which == "a") v = count_a(k);
      if (which == "t") v = count_t(k);
      if (which == "s") v = count_s(k);
      if (which == "fib") v = count_linked_free(k);
      out << Json{{"k", k}, {which, json_of(v)}}.dump() << '\n';
    } else if (*enumerate) {
      if (k > 5) throw PreconditionError("enumeration is limited to k <= 5");
      const auto all = symmetric ? enumerate_symmetric(k) : enumerate_staircase(k);
      Json list = Json::array();
      for (const auto& v : all) list.push_back(json_of(v));
      out << Json{{"k", k}, {"count", all.size()}, {"relations", std::move(list)}}.dump() << '\n';
    } else if (*build) {
      const auto base = standard_basis(k, basis_n);
      const auto b = length ? sos_build(base, *length) : sos_build(base);
      progress("built " + std::to_string(b.size()) + " sos terms from " + std::to_string(basis_n) + " generators");
      out << json_of(b).dump() << '\n';
    } else if (*check) {
      const auto v = parse_vector(k, vector_text);
      out << Json{{"sos", v.is_kvector() && is_sos(v)}}.dump() << '\n';
    } else if (*decide_cmd) {
      const auto eq = parse_equation(k, equation_text);
      BlockSequence alpha(k);
      if (!alpha_file.empty()) {
        alpha = block_sequence_from_json(read_json_file(alpha_file));
        check_level(k, alpha.k(), "the block sequence");
      } else {
        const std::size_t len = sos_length.value_or(eq.arity());
        alpha = sos_build(standard_basis(k, sos_build_required(k, len)), len);
      }
      Decision d;
      if (!partition_file.empty()) {
        const auto oracle = partition_from_json(read_json_file(partition_file));
        check_level(k, oracle.k(), "the partition");
        d = decide(eq, alpha, oracle);
      } else {
        StaircaseValues v = trivial_values(k);
        if (!values_file.empty()) {
          v = values_from_json(read_json_file(values_file));
        } else if (tuple_index) {
          const auto all = enumerate_staircase(k);
          if (*tuple_index >= all.size()) throw PreconditionError("tuple index out of range");
          v = all[*tuple_index];
        } else {
          throw ParseError("decide needs --values, --tuple or --partition");
        }
        check_level(k, v.k, "the staircase tuple");
        d = decide(eq, alpha, StaircaseRelation{v});
      }
      out << Json{{"equation", to_string(eq)},
                  {"verdict", to_string(d.verdict)},
                  {"substitutions", d.substitutions},
                  {"related", d.related},
                  {"empty", d.empty}}
                 .dump()
          << '\n';
    } else if (*canon) {
      std::optional<PartitionOracle> oracle;
      if (!canon_partition.empty()) {
        oracle = partition_from_json(read_json_file(canon_partition));
        check_level(k, oracle->k(), "the partition");
      } else if (random_n) {
        oracle = random_oracle(k, *random_n, common.seed);
      } else {
        throw ParseError("canonize needs --partition or --random-n");
      }
      const auto r = fast_k1 ? canonize_taylor(*oracle, m) : canonize_bruteforce(*oracle, m);
      progress("matched after " + std::to_string(r.candidates_tried) + " candidates");
      out << json_of(r).dump() << '\n';
    } else if (*estimate) {
      const auto e = estimate_n(k, est_m, trials, common.seed, max_n);
      progress("largest n tried: " + std::to_string(e.largest_n_tried));
      Json j{{"k", k}, {"m", est_m}, {"trials", trials}, {"seed", common.seed}};
      j["n"] = e.n ? Json(*e.n) : Json(nullptr);
      j["failures_below"] = e.failures_below;
      out << j.dump() << '\n';
      if (!e.n) return kExitNotFound;
    } else if (*net) {
      NetParams p = delta_for_k(k);
      if (delta) {
        p = params_for_delta(*delta);
        if (p.k != k)
          throw PreconditionError("delta " + std::to_string(*delta) + " leads to k = " + std::to_string(p.k));
      }
      const auto r = verify_net(p, dim, samples, common.seed);
      Json j{{"k", k},        {"delta", p.delta},           {"eps", p.eps}, {"gammas", gammas(p)},
             {"dim", dim},    {"max_distance", r.max_distance}, {"samples", r.samples}};
      j["within_delta"] = r.max_distance <= p.delta;
      out << j.dump() << '\n';
      if (verify && r.max_distance > p.delta) return kExitDomain;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << " (" << e.candidates_tried() << " candidates)\n";
    return kExitNotFound;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace fink::cli
