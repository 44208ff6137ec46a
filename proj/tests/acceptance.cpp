// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rankeval/baselines.hpp"
#include "rankeval/datagen.hpp"
#include "rankeval/eval.hpp"
#include "rankeval/io.hpp"
#include "rankeval/oracle.hpp"
#include "rankeval/rankdcg.hpp"

using namespace rankeval;
using test::make_list;
using test::order_with_ranks;

namespace {

const std::vector<std::vector<int>> kTableRows = {
    {9, 4, 4, 2, 2, 2, 1, 1, 1, 1}, {9, 4, 4, 2, 2, 1, 2, 1, 1, 1},
    {4, 4, 2, 9, 2, 2, 1, 1, 1, 1}, {1, 4, 4, 2, 2, 2, 9, 1, 1, 1},
    {1, 4, 4, 2, 2, 2, 1, 1, 1, 9}, {1, 1, 1, 1, 2, 2, 2, 4, 4, 9}};

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
  double time_limit_s = 0.0;  // 0 = no limit
};

bool check_close(std::string& detail, const char* label, double got,
                 double want, double tol) {
  if (std::abs(got - want) <= tol) return true;
  std::ostringstream os;
  os << label << " got " << got << ", want " << want << " +/- " << tol << "; ";
  detail += os.str();
  return false;
}

bool criterion_rankdcg_column(std::string& detail) {
  const RankedList list = make_list(test::kPaperList);
  const std::vector<double> want = {1.0, 0.975, 0.65, 0.325, 0.325, 0.0};
  bool ok = true;
  for (std::size_t i = 0; i < kTableRows.size(); ++i) {
    const double got =
        rank_dcg(list, ExplicitOrder{order_with_ranks(list, kTableRows[i])})
            .normalized;
    ok &= check_close(detail, ("row " + std::to_string(i + 1)).c_str(), got,
                      want[i], 0.001);
  }
  return ok;
}

bool criterion_tau_column(std::string& detail) {
  const std::vector<double> ref(test::kPaperList.begin(),
                                test::kPaperList.end());
  const std::vector<double> want = {1.0, 0.8, 0.742, 0.285, 0.285, -0.8};
  bool ok = true;
  for (std::size_t i = 0; i < kTableRows.size(); ++i) {
    const std::vector<double> hyp(kTableRows[i].begin(), kTableRows[i].end());
    const MetricValue tau = kendall_tau_b(ref, hyp);
    if (!tau.is_defined()) {
      detail += "row " + std::to_string(i + 1) + " undefined; ";
      ok = false;
      continue;
    }
    ok &= check_close(detail, ("row " + std::to_string(i + 1)).c_str(),
                      tau.value(), want[i], 0.002);
  }
  return ok;
}

bool criterion_ndcg_column(std::string& detail) {
  const RankedList list = make_list(test::kPaperList);
  const std::vector<double> want = {1.0, 0.998, 0.825, 0.688, 0.667, 0.571};
  bool ok = true;
  for (std::size_t i = 0; i < kTableRows.size(); ++i) {
    const double got =
        ndcg(list, ExplicitOrder{order_with_ranks(list, kTableRows[i])});
    ok &= check_close(detail, ("row " + std::to_string(i + 1)).c_str(), got,
                      want[i], 0.002);
  }
  return ok;
}

bool criterion_ap_properties(std::string& detail) {
  const RankedList list = make_list(test::kPaperList);
  bool ok = true;
  for (std::size_t i = 0; i < kTableRows.size(); ++i) {
    const Hypothesis hyp =
        ExplicitOrder{order_with_ranks(list, kTableRows[i])};
    const MetricValue ap = average_precision(list, hyp);
    if (!ap.is_defined()) {
      detail += "row " + std::to_string(i + 1) + " undefined; ";
      ok = false;
      continue;
    }
    if (ap.value() <= 0.0 || ap.value() > 1.0 + 1e-12) {
      detail += "row " + std::to_string(i + 1) + " out of (0,1]; ";
      ok = false;
    }
  }
  const Hypothesis ideal =
      ExplicitOrder{order_with_ranks(list, test::kPaperList)};
  for (int threshold : {1, 2, 4}) {
    const MetricValue ap = average_precision(list, ideal, threshold);
    if (!ap.is_defined() || std::abs(ap.value() - 1.0) > 1e-12) {
      detail += "AP(ideal) != 1 at threshold " + std::to_string(threshold) +
                "; ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_oracle_sweep(std::string& detail) {
  std::uint64_t instances = 0;
  bool ok = true;
  std::vector<int> ranks;
  auto sweep = [&](auto&& self, int min_value) -> void {
    if (!ranks.empty()) {
      const OracleReport report = verify_instance(ranks);
      ++instances;
      if (!report.ok()) {
        ok = false;
        detail += report.instance + ": " + report.violations.front() + "; ";
      }
    }
    if (ranks.size() == 8) return;
    for (int v = min_value; v <= 4; ++v) {
      ranks.push_back(v);
      self(self, v);
      ranks.pop_back();
    }
  };
  sweep(sweep, 1);
  detail += std::to_string(instances) + " instances; ";
  return ok && instances == 494;
}

bool criterion_formula_disambiguation(std::string& detail) {
  const RankedList list = make_list(test::kPaperList);
  const auto order = order_with_ranks(list, kTableRows[2]);
  const auto [mn, mx] = extrema(list);
  const double rejected =
      (dcg_prime_gain_from_item(list, order) - mn) / (mx - mn);
  const double adopted = rank_dcg(list, ExplicitOrder{order}).normalized;
  bool ok = check_close(detail, "rejected reading", rejected, 0.75, 1e-9);
  ok &= check_close(detail, "adopted reading", adopted, 0.65, 1e-9);
  for (const Table1Row& row : replay_table1()) {
    if (!row.pass) {
      detail += row.name + " failed (" + row.detail + "); ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_constant_predictor(std::string& detail) {
  std::mt19937_64 rng(29);
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> ranks;
    const std::size_t n = 2 + rng() % 9;
    for (std::size_t i = 0; i < n; ++i) ranks.push_back(1 + rng() % 5);
    const RankedList list = make_list(ranks);
    if (build_mapping(list).unique_count() < 2) continue;  // degenerate

    ScoreAssignment constant;
    for (const RankedItem& it : list.items()) {
      constant.scores.emplace_back(it.id, 7.0);
    }
    const double score =
        rank_dcg(list, constant, TiePolicy::Pessimistic).normalized;
    if (std::abs(score) > 1e-12) {
      detail += "rankdcg " + std::to_string(score) + " != 0; ";
      ok = false;
    }
    const MetricValue tau = evaluate_metric("tau-b", list, constant);
    if (tau.is_defined()) {
      detail += "tau-b defined on constant scores; ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_tie_policies(std::string& detail) {
  std::mt19937_64 rng(31);
  bool ok = true;

  // Expected == mean over all within-group assignments, group sizes <= 5.
  for (std::size_t size = 1; size <= 5; ++size) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> ranks;
      for (std::size_t i = 0; i < size + 2; ++i) {
        ranks.push_back(1 + rng() % 4);
      }
      const RankedList list = make_list(ranks);
      const RankMapping mapping = build_mapping(list);
      std::vector<int> gains;
      std::vector<RankedItem> items(list.items().begin(),
                                    list.items().begin() + size);
      for (std::size_t i = 0; i < size; ++i) {
        gains.push_back(1 + static_cast<int>(rng() % 4));
      }
      const double expected = tie_group_contribution(gains, items, mapping,
                                                     TiePolicy::Expected);
      std::vector<std::size_t> perm(size);
      std::iota(perm.begin(), perm.end(), 0);
      double sum = 0.0;
      std::uint64_t count = 0;
      std::sort(perm.begin(), perm.end());
      do {
        double s = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
          s += static_cast<double>(gains[i]) /
               mapping.discount(items[perm[i]].rank);
        }
        sum += s;
        ++count;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (std::abs(expected - sum / count) > 1e-9) {
        detail += "expected != assignment mean at size " +
                  std::to_string(size) + "; ";
        ok = false;
      }
    }
  }

  // Pessimistic <= Expected <= Optimistic on 1000 seeded instances.
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<int> ranks;
    for (std::size_t i = 0; i < n; ++i) ranks.push_back(1 + rng() % 4);
    const RankedList list = make_list(ranks);
    ScoreAssignment scores;
    for (const RankedItem& it : list.items()) {
      scores.scores.emplace_back(it.id, static_cast<double>(rng() % 3));
    }
    const double p = rank_dcg(list, scores, TiePolicy::Pessimistic).dcg_prime;
    const double e = rank_dcg(list, scores, TiePolicy::Expected).dcg_prime;
    const double o = rank_dcg(list, scores, TiePolicy::Optimistic).dcg_prime;
    if (p > e + 1e-9 || e > o + 1e-9) {
      detail += "policy ordering violated; ";
      ok = false;
      break;
    }
  }
  return ok;
}

bool criterion_monotone_transform(std::string& detail) {
  std::mt19937_64 rng(37);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<int> ranks;
    for (std::size_t i = 0; i < n; ++i) ranks.push_back(1 + rng() % 5);
    const RankedList base = make_list(ranks);
    std::vector<std::string> order;
    for (const RankedItem& it : base.ideal()) order.push_back(it.id);
    std::shuffle(order.begin(), order.end(), rng);
    const double want = rank_dcg(base, ExplicitOrder{order}).normalized;

    const std::vector<std::function<int(int)>> transforms = {
        [](int r) { return r + 5; }, [](int r) { return 3 * r; },
        [](int r) { return r * r; }};
    for (const auto& f : transforms) {
      std::vector<int> mapped;
      for (int r : ranks) mapped.push_back(f(r));
      const double got =
          rank_dcg(make_list(mapped), ExplicitOrder{order}).normalized;
      if (got != want) {  // bit-for-bit
        detail += "transform changed the score; ";
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion_round_trip(std::string& detail) {
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec spec;
    spec.n = 30 + seed % 40;
    spec.distribution = PowerLaw{1.5 + (seed % 5) * 0.5, 10};
    spec.seed = seed;
    const RankedList list = generate(spec);
    for (DatasetFormat format :
         {DatasetFormat::CsvRanks, DatasetFormat::JsonLines}) {
      const std::string once = write_reference(list, format);
      std::istringstream in(once);
      const std::string twice =
          write_reference(parse_reference(in, format), format);
      if (once != twice) {
        detail += "round trip differs at seed " + std::to_string(seed) + "; ";
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"criterion 1: rankDCG column (+/-0.001)", criterion_rankdcg_column,
       1.0},
      {"criterion 2: Kendall tau-b column (+/-0.002)", criterion_tau_column,
       1.0},
      {"criterion 3: nDCG column (+/-0.002)", criterion_ndcg_column, 1.0},
      {"criterion 4: AP property suite", criterion_ap_properties, 0.0},
      {"criterion 5: oracle sweep n<=8 over {1..4}", criterion_oracle_sweep,
       60.0},
      {"criterion 6: formula disambiguation regression",
       criterion_formula_disambiguation, 0.0},
      {"criterion 7: constant-predictor pathology",
       criterion_constant_predictor, 1.0},
      {"criterion 8: tie-policy consistency", criterion_tie_policies, 0.0},
      {"criterion 9: monotone-transform invariance",
       criterion_monotone_transform, 0.0},
      {"criterion 10: round-trip I/O", criterion_round_trip, 0.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
      pass = false;
      detail += "runtime " + std::to_string(elapsed) + "s over limit; ";
    }
    std::printf("%s %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL",
                c.name.c_str(), elapsed, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
