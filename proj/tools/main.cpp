#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "farey/clustering.hpp"
#include "farey/group_ring.hpp"
#include "farey/numtheory.hpp"
#include "farey/sumsets.hpp"
#include "report.hpp"

namespace {

using namespace farey;
namespace rep = farey::report;

constexpr int kExitInvalidArgs = 2;
constexpr int kExitResourceLimit = 3;
constexpr uint64_t kRingVerifyCap = 500;

struct Options {
  std::string command;
  uint64_t q_param = 0;  // --q
  uint64_t r_param = 0;  // --r
  uint64_t q_max = 0;    // --Q
  uint64_t k = 2;
  uint64_t a = 0;
  std::optional<uint64_t> n;
  std::vector<uint64_t> q_list;
  uint64_t limit = 0;
  double c = 1.0;
  std::string format = "csv";
  unsigned shards = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_path;
};

bool csv(const Options& opt) { return opt.format == "csv"; }

// Builds (or loads from --cache) an SPF table covering at least `limit`.
SpfTable obtain_table(uint64_t limit, const std::string& cache_path) {
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    SpfTable t = SpfTable::load(cache_path);
    if (t.limit() >= limit) return t;
  }
  SpfTable t(std::max<uint64_t>(limit, 2));
  if (!cache_path.empty()) t.save(cache_path);
  return t;
}

int cmd_ring_mul(const Options& opt) {
  const ClassSumCombo combo = fq_product(opt.q_param, opt.r_param);
  std::cout << (csv(opt) ? rep::combo_csv(combo) : rep::combo_json(combo));
  if (!csv(opt)) std::cout << '\n';
  return 0;
}

int cmd_ring_verify(const Options& opt) {
  if (opt.limit == 0) throw std::invalid_argument("ring-verify: --limit must be positive");
  if (opt.limit > kRingVerifyCap)
    throw ResourceLimitError("ring-verify: limit capped at 500");
  uint64_t pairs = 0;
  for (uint64_t q = 1; q <= opt.limit; ++q) {
    const DenseElement fq = class_sum(q);
    for (uint64_t r = 1; r <= opt.limit; ++r) {
      const ClassSumCombo oracle = collapse(dense_multiply(fq, class_sum(r)));
      if (oracle != fq_product(q, r)) {
        std::cout << "discrepancy at q=" << q << " r=" << r << '\n';
        return 1;
      }
      ++pairs;
    }
  }
  std::cout << pairs << (pairs == 1 ? " pair OK" : " pairs OK") << '\n';
  return 0;
}

int cmd_sumset_count(const Options& opt) {
  const SumsetReport report = sumset_cardinality(opt.q_max, opt.k, opt.shards);
  std::cout << (csv(opt) ? rep::sumset_report_csv(report) : rep::sumset_report_json(report));
  if (!csv(opt)) std::cout << '\n';
  return 0;
}

int cmd_sumset_brute(const Options& opt) {
  const FareySet set = brute_force_sumset(opt.q_max, opt.k);
  std::cout << (csv(opt) ? rep::farey_set_csv(set, opt.k) : rep::farey_set_json(set, opt.k));
  if (!csv(opt)) std::cout << '\n';
  return 0;
}

int cmd_scan_k(const Options& opt) {
  const KScanResult result = min_k_scan(opt.q_max, opt.c, opt.shards);
  std::cout << (csv(opt) ? rep::kscan_csv(result) : rep::kscan_json(opt.q_max, opt.c, result));
  if (!csv(opt)) std::cout << '\n';
  return 0;
}

int cmd_cluster_measure(const Options& opt) {
  if (opt.a == 0) throw std::invalid_argument("cluster-measure: --a must be positive");
  const IntervalSet set = l_set(trial_factorize(opt.a));
  std::cout << (csv(opt) ? rep::measure_csv(opt.a, set) : rep::measure_json(opt.a, set));
  if (!csv(opt)) std::cout << '\n';
  return 0;
}

int cmd_ford_sum(const Options& opt) {
  const SpfTable table = obtain_table(opt.q_max, opt.cache_path);
  const double sum = ford_sum(opt.q_max, table);
  const double ratio = ford_ratio(opt.q_max, table);
  std::cout << (csv(opt) ? rep::ford_csv(opt.q_max, sum, ratio)
                         : rep::ford_json(opt.q_max, sum, ratio));
  if (!csv(opt)) std::cout << '\n';
  return 0;
}

int cmd_theorem1_table(const Options& opt) {
  if (opt.q_list.empty())
    throw std::invalid_argument("theorem1-table: at least one --Q required");
  uint64_t max_q = 0;
  for (uint64_t q : opt.q_list) max_q = std::max(max_q, q);
  const SpfTable table = obtain_table(max_q, opt.cache_path);
  const auto rows = theorem1_table(opt.q_list, opt.shards, table);
  std::cout << (csv(opt) ? rep::ratio_table_csv(rows) : rep::ratio_table_json(rows));
  if (!csv(opt)) std::cout << '\n';
  return 0;
}

int cmd_aq_scan(const Options& opt) {
  const uint64_t n_max = opt.q_max * opt.q_max / 2;
  const SpfTable table = obtain_table(std::max<uint64_t>(n_max, 2), opt.cache_path);
  if (opt.n) {
    const auto witness = aq_member(*opt.n, opt.q_max, table);
    if (csv(opt)) {
      std::cout << "n,member,a,p,q\n" << *opt.n << ',' << (witness ? 1 : 0) << ',';
      if (witness) {
        std::cout << witness->a << ',' << witness->p << ',' << witness->q << '\n';
      } else {
        std::cout << ",,\n";
      }
    } else {
      std::cout << "{\"n\":" << *opt.n << ",\"Q\":" << opt.q_max << ",\"member\":"
                << (witness ? "true" : "false");
      if (witness) {
        std::cout << ",\"witness\":[" << witness->a << ',' << witness->p << ',' << witness->q
                  << ']';
      }
      std::cout << "}\n";
    }
    return 0;
  }
  std::vector<std::pair<uint64_t, AqWitness>> members;
  for (uint64_t n = 1; n <= n_max; ++n) {
    if (auto w = aq_member(n, opt.q_max, table)) members.emplace_back(n, *w);
  }
  std::cout << (csv(opt) ? rep::aq_scan_csv(members) : rep::aq_scan_json(opt.q_max, members));
  if (!csv(opt)) std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the group ring of Q/Z and Farey-fraction sumsets"};
  app.require_subcommand(1);

  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_shards = [&](CLI::App* cmd) {
    cmd->add_option("--shards", opt.shards, "Worker thread count")->check(CLI::Range(1u, 256u));
  };
  auto add_cache = [&](CLI::App* cmd) {
    cmd->add_option("--cache", opt.cache_path, "Sieve cache file path");
  };

  CLI::App* ring_mul = app.add_subcommand("ring-mul", "Closed-form class-sum product F_q x F_r");
  ring_mul->add_option("--q", opt.q_param)->required()->check(CLI::PositiveNumber);
  ring_mul->add_option("--r", opt.r_param)->required()->check(CLI::PositiveNumber);
  add_format(ring_mul);

  CLI::App* ring_verify =
      app.add_subcommand("ring-verify", "Sweep closed form against the convolution oracle");
  ring_verify->add_option("--limit", opt.limit)->required();

  CLI::App* sumset_count =
      app.add_subcommand("sumset-count", "Exact I_Q(k) by streaming representability counting");
  sumset_count->add_option("--Q", opt.q_max)->required();
  sumset_count->add_option("--k", opt.k)->check(CLI::PositiveNumber);
  add_format(sumset_count);
  add_shards(sumset_count);

  CLI::App* sumset_brute =
      app.add_subcommand("sumset-brute", "Enumerate the k-fold sumset directly");
  sumset_brute->add_option("--Q", opt.q_max)->required();
  sumset_brute->add_option("--k", opt.k)->check(CLI::PositiveNumber);
  add_format(sumset_brute);

  CLI::App* scan_k =
      app.add_subcommand("scan-k", "Smallest k with log I_Q(k) >= c log|G_Q|");
  scan_k->add_option("--Q", opt.q_max)->required();
  scan_k->add_option("--c", opt.c, "Threshold fraction in (0,1]");
  add_format(scan_k);
  add_shards(scan_k);

  CLI::App* cluster_measure =
      app.add_subcommand("cluster-measure", "L(a) interval set and Lebesgue measure");
  cluster_measure->add_option("--a", opt.a)->required();
  add_format(cluster_measure);

  CLI::App* ford = app.add_subcommand("ford-sum", "Squarefree Ford sum and its ratio");
  ford->add_option("--Q", opt.q_max)->required();
  add_format(ford);
  add_cache(ford);

  CLI::App* table_cmd =
      app.add_subcommand("theorem1-table", "Exact I_Q ratio table for a list of Q");
  table_cmd->add_option("--Q", opt.q_list, "Q values (repeatable)")->required();
  add_format(table_cmd);
  add_shards(table_cmd);
  add_cache(table_cmd);

  CLI::App* aq = app.add_subcommand("aq-scan", "A_Q membership scan / single query");
  aq->add_option("--Q", opt.q_max)->required();
  uint64_t n_query = 0;
  CLI::Option* n_opt = aq->add_option("--n", n_query, "Query a single n");
  add_format(aq);
  add_cache(aq);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInvalidArgs;
  }

  if (n_opt->count() > 0) opt.n = n_query;

  try {
    if (ring_mul->parsed()) return cmd_ring_mul(opt);
    if (ring_verify->parsed()) return cmd_ring_verify(opt);
    if (sumset_count->parsed()) return cmd_sumset_count(opt);
    if (sumset_brute->parsed()) return cmd_sumset_brute(opt);
    if (scan_k->parsed()) return cmd_scan_k(opt);
    if (cluster_measure->parsed()) return cmd_cluster_measure(opt);
    if (ford->parsed()) return cmd_ford_sum(opt);
    if (table_cmd->parsed()) return cmd_theorem1_table(opt);
    if (aq->parsed()) return cmd_aq_scan(opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalidArgs;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << '\n';
    return kExitInvalidArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  }
  return 0;
}
