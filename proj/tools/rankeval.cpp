// Batch evaluation CLI: evaluate, curves, synth, oracle-check.
//
// Exit codes: 0 success, 2 input/option error, 3 pairing mismatch,
// 4 oracle violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rankeval/datagen.hpp"
#include "rankeval/eval.hpp"
#include "rankeval/io.hpp"
#include "rankeval/oracle.hpp"

namespace {

using namespace rankeval;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitOracle = 4;

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::vector<int> parse_rank_csv(const std::string& text) {
  std::vector<int> ranks;
  for (const std::string& part : split_list(text, ',')) {
    ranks.push_back(std::stoi(part));
  }
  return ranks;
}

DatasetFormat dataset_format(const std::string& name) {
  if (name == "csv") return DatasetFormat::CsvRanks;
  if (name == "jsonl") return DatasetFormat::JsonLines;
  throw InvalidInput("unknown dataset format '" + name + "'");
}

ReportFormat report_format(const std::string& name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw InvalidInput("unknown report format '" + name + "'");
}

TiePolicy tie_policy(const std::string& name) {
  if (name == "pessimistic") return TiePolicy::Pessimistic;
  if (name == "optimistic") return TiePolicy::Optimistic;
  if (name == "expected") return TiePolicy::Expected;
  throw InvalidInput("unknown tie policy '" + name + "'");
}

RankedList load_reference(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open reference file '" + path + "'");
  return parse_reference(in, dataset_format(format));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file '" + out_path + "'");
  out << text;
}

struct EvaluateArgs {
  std::string ref_path;
  std::string ref_format = "csv";
  std::vector<std::string> hyp_paths;
  std::string hyp_mode = "order";
  std::string metrics = "rankdcg";
  std::string policy = "pessimistic";
  std::optional<int> ap_threshold;
  std::string format = "table";
  std::string out;
};

int run_evaluate(const EvaluateArgs& args) {
  const std::vector<std::string> metrics = split_list(args.metrics, ',');
  if (metrics.empty()) throw InvalidInput("empty metric list");
  for (const std::string& m : metrics) {
    if (!is_known_metric(m)) throw InvalidInput("unknown metric '" + m + "'");
  }
  const RankedList list = load_reference(args.ref_path, args.ref_format);
  const HypothesisMode mode = args.hyp_mode == "scores"
                                  ? HypothesisMode::Scores
                                  : HypothesisMode::Order;

  EvalOptions options;
  options.tie_policy = tie_policy(args.policy);
  options.ap_threshold = args.ap_threshold;

  std::vector<Hypothesis> hypotheses;
  std::vector<MetricReport> reports;
  for (const std::string& path : args.hyp_paths) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open hypothesis file '" + path + "'");
    hypotheses.push_back(
        parse_hypothesis(in, dataset_format(args.ref_format), mode));
    MetricReport report;
    report.name = path;
    for (const std::string& m : metrics) {
      if (m == "map") continue;  // aggregate, reported once below
      report.scores.emplace_back(
          m, evaluate_metric(m, list, hypotheses.back(), options));
    }
    reports.push_back(std::move(report));
  }
  if (std::find(metrics.begin(), metrics.end(), "map") != metrics.end()) {
    std::vector<std::pair<const RankedList*, const Hypothesis*>> pairs;
    for (const Hypothesis& h : hypotheses) pairs.emplace_back(&list, &h);
    MetricReport summary;
    summary.name = "MAP";
    summary.scores.emplace_back(
        "map", mean_average_precision(pairs, options.ap_threshold));
    reports.push_back(std::move(summary));
  }
  emit(write_report(reports, report_format(args.format)), args.out);
  return kExitOk;
}

struct CurvesArgs {
  std::string ref_path;
  std::string ref_format = "csv";
  std::string variant = "all";
  std::string out;
};

int run_curves(const CurvesArgs& args) {
  const RankedList list = load_reference(args.ref_path, args.ref_format);
  std::vector<CurveVariant> variants;
  const std::vector<CurveVariant> all = {
      CurveVariant::DcgLog, CurveVariant::BurgesExp,
      CurveVariant::RelPrimeLinear, CurveVariant::RankDcg};
  if (args.variant == "all") {
    variants = all;
  } else {
    for (CurveVariant v : all) {
      if (args.variant == curve_variant_name(v)) variants.push_back(v);
    }
    if (variants.empty()) {
      throw InvalidInput("unknown curve variant '" + args.variant + "'");
    }
  }
  emit(write_curves(list, variants), args.out);
  return kExitOk;
}

struct SynthArgs {
  std::size_t n = 0;
  std::string dist = "powerlaw";
  double alpha = 2.0;
  int levels = 10;
  std::string constructed;
  std::optional<std::uint64_t> seed;
  std::string perturb_op;
  std::string format = "csv";
  std::string out;
  std::string hyp_out;
  std::size_t sweep_steps = 0;
  std::string metrics = "rankdcg";
};

PerturbOp parse_perturb(const std::string& text, std::optional<std::uint64_t> seed) {
  auto require_seed = [&]() -> std::uint64_t {
    if (!seed) throw InvalidInput("this perturbation requires --seed");
    return *seed;
  };
  if (text == "reverse") return Reverse{};
  if (text == "majority") return MajorityClass{};
  if (text == "subgroup-shuffle") return SubgroupShuffle{require_seed()};
  if (text.rfind("swaps:", 0) == 0) {
    return AdjacentSwaps{std::stoull(text.substr(6)), require_seed()};
  }
  if (text.rfind("top-swap:", 0) == 0) {
    return TopDisplacement{std::stoull(text.substr(9))};
  }
  throw InvalidInput("unknown perturbation '" + text + "'");
}

int run_synth(const SynthArgs& args) {
  GenSpec spec;
  if (!args.constructed.empty()) {
    Constructed c{parse_rank_csv(args.constructed)};
    spec.n = c.ranks.size();
    spec.distribution = c;
    spec.seed = args.seed.value_or(0);
  } else {
    if (!args.seed) {
      throw InvalidInput("randomized generation requires --seed");
    }
    spec.n = args.n;
    spec.seed = *args.seed;
    if (args.dist == "powerlaw") {
      spec.distribution = PowerLaw{args.alpha, args.levels};
    } else if (args.dist == "uniform") {
      spec.distribution = Uniform{args.levels};
    } else {
      throw InvalidInput("unknown distribution '" + args.dist + "'");
    }
  }

  if (args.sweep_steps > 0) {
    const auto cells = degradation_sweep(spec, split_list(args.metrics, ','),
                                         args.sweep_steps);
    emit(write_sweep(cells), args.out);
    return kExitOk;
  }

  const RankedList list = generate(spec);
  const DatasetFormat format = dataset_format(args.format);
  emit(write_reference(list, format), args.out);
  if (!args.perturb_op.empty()) {
    const Hypothesis hyp = perturb(list, parse_perturb(args.perturb_op,
                                                       args.seed));
    emit(write_hypothesis(hyp, format), args.hyp_out);
  }
  return kExitOk;
}

struct OracleArgs {
  bool table1 = false;
  std::string ranks;
  std::size_t sweep_max_n = 0;
  int max_value = 4;
};

void print_report(const OracleReport& report) {
  std::cout << (report.ok() ? "PASS " : "FAIL ") << report.instance << ": "
            << report.permutation_count << " permutations, dcg' in ["
            << format_double(report.observed_min) << ", "
            << format_double(report.observed_max) << "]\n";
  for (const std::string& v : report.violations) {
    std::cout << "  violation: " << v << "\n";
  }
}

int run_oracle_check(const OracleArgs& args) {
  bool violated = false;
  bool ran = false;
  if (args.table1) {
    ran = true;
    for (const Table1Row& row : replay_table1()) {
      std::cout << (row.pass ? "PASS " : "FAIL ") << row.name << ": "
                << row.detail << "\n";
      if (!row.pass) violated = true;
    }
  }
  if (!args.ranks.empty()) {
    ran = true;
    const OracleReport report = verify_instance(parse_rank_csv(args.ranks));
    print_report(report);
    if (!report.ok()) violated = true;
  }
  if (args.sweep_max_n > 0) {
    ran = true;
    // All multisets over {1..max_value} with n <= sweep_max_n.
    std::uint64_t instances = 0, permutations = 0;
    std::vector<int> ranks;
    auto sweep = [&](auto&& self, int min_value) -> void {
      if (!ranks.empty()) {
        const OracleReport report = verify_instance(ranks);
        ++instances;
        permutations += report.permutation_count;
        if (!report.ok()) {
          violated = true;
          print_report(report);
        }
      }
      if (ranks.size() == args.sweep_max_n) return;
      for (int v = min_value; v <= args.max_value; ++v) {
        ranks.push_back(v);
        self(self, v);
        ranks.pop_back();
      }
    };
    sweep(sweep, 1);
    std::cout << (violated ? "FAIL" : "PASS") << " sweep: " << instances
              << " instances, " << permutations << " permutations\n";
  }
  if (!ran) {
    throw InvalidInput(
        "oracle-check needs at least one of --table1, --ranks, --sweep-max-n");
  }
  return violated ? kExitOracle : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-ordering evaluation toolkit"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "score hypothesis files against a reference list");
  evaluate->add_option("--ref", ev.ref_path, "reference file")->required();
  evaluate->add_option("--ref-format", ev.ref_format, "csv or jsonl");
  evaluate->add_option("hypotheses", ev.hyp_paths, "hypothesis files")
      ->required();
  evaluate->add_option("--hyp-mode", ev.hyp_mode, "order or scores");
  evaluate->add_option("--metrics", ev.metrics,
                       "comma list: rankdcg,ndcg,ndcg-raw,tau-b,ap,map,f1");
  evaluate->add_option("--tie-policy", ev.policy,
                       "pessimistic, optimistic or expected");
  evaluate->add_option("--ap-threshold", ev.ap_threshold,
                       "relevance threshold for ap/map/f1");
  evaluate->add_option("--format", ev.format, "table, csv or json");
  evaluate->add_option("--out", ev.out, "output path (default stdout)");

  CurvesArgs cv;
  CLI::App* curves = app.add_subcommand(
      "curves", "emit per-position cost-function curves");
  curves->add_option("--ref", cv.ref_path, "reference file")->required();
  curves->add_option("--ref-format", cv.ref_format, "csv or jsonl");
  curves->add_option("--variant", cv.variant,
                     "all, dcg-log, burges-exp, relprime-linear or rankdcg");
  curves->add_option("--out", cv.out, "output path (default stdout)");

  SynthArgs sy;
  CLI::App* synth = app.add_subcommand(
      "synth", "generate synthetic datasets and perturbed hypotheses");
  synth->add_option("--n", sy.n, "item count");
  synth->add_option("--dist", sy.dist, "powerlaw or uniform");
  synth->add_option("--alpha", sy.alpha, "power-law exponent");
  synth->add_option("--levels", sy.levels, "distinct rank levels");
  synth->add_option("--constructed", sy.constructed,
                    "explicit rank multiset, e.g. \"9,4,4,2\"");
  synth->add_option("--seed", sy.seed, "RNG seed (required when random)");
  synth->add_option("--perturb", sy.perturb_op,
                    "reverse, majority, subgroup-shuffle, swaps:K, top-swap:P");
  synth->add_option("--format", sy.format, "csv or jsonl");
  synth->add_option("--out", sy.out, "reference output path");
  synth->add_option("--hyp-out", sy.hyp_out, "hypothesis output path");
  synth->add_option("--sweep", sy.sweep_steps,
                    "emit a degradation sweep with this many steps");
  synth->add_option("--metrics", sy.metrics, "metrics for --sweep");

  OracleArgs oc;
  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "brute-force verification of rankDCG properties");
  oracle->add_flag("--table1", oc.table1,
                   "replay the constructed-data comparison rows");
  oracle->add_option("--ranks", oc.ranks, "verify one rank multiset");
  oracle->add_option("--sweep-max-n", oc.sweep_max_n,
                     "verify all multisets up to this size");
  oracle->add_option("--max-value", oc.max_value,
                     "largest rank value in the sweep (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*evaluate) return run_evaluate(ev);
    if (*curves) return run_curves(cv);
    if (*synth) return run_synth(sy);
    return run_oracle_check(oc);
  } catch (const HypothesisMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
