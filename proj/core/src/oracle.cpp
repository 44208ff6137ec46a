#include "rankeval/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "rankeval/rankdcg.hpp"
#include "rankeval/baselines.hpp"

namespace rankeval {

namespace {

constexpr double kExtremaTol = 1e-9;
constexpr double kScoreTol = 1e-9;

RankedList list_from_ranks(const std::vector<int>& ranks) {
  std::vector<RankedItem> items;
  items.reserve(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    char id[16];
    std::snprintf(id, sizeof(id), "i%02u", static_cast<unsigned>(i));
    items.push_back(RankedItem{id, ranks[i]});
  }
  return RankedList(std::move(items));
}

std::string describe(const std::vector<int>& ranks) {
  std::ostringstream os;
  os << "ranks [";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) os << ",";
    os << ranks[i];
  }
  os << "]";
  return os.str();
}

// Per-item discounts and ideal position gains, precomputed for fast
// evaluation inside the n! loop.
struct FastEval {
  std::vector<double> pos_gain;      // ideal gain at each position
  std::vector<double> item_inv_disc; // 1 / discount, per item index
  double min_dcg = 0.0;
  double max_dcg = 0.0;
  bool degenerate = false;

  explicit FastEval(const RankedList& list) {
    const RankMapping mapping = build_mapping(list);
    for (const RankedItem& it : list.ideal()) {
      pos_gain.push_back(mapping.gain(it.rank));
    }
    for (const RankedItem& it : list.items()) {
      item_inv_disc.push_back(1.0 / mapping.discount(it.rank));
    }
    std::tie(min_dcg, max_dcg) = extrema(list);
    degenerate = list.size() == 1 || mapping.unique_count() == 1;
  }

  double dcg(const std::vector<std::uint8_t>& perm) const {
    double s = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      s += pos_gain[i] * item_inv_disc[perm[i]];
    }
    return s;
  }

  double normalize(double s) const {
    if (degenerate) return 1.0;
    return (s - min_dcg) / (max_dcg - min_dcg);
  }
};

template <typename Fn>
std::uint64_t for_each_permutation(std::size_t n, Fn&& fn) {
  std::vector<std::uint8_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    fn(perm);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

std::vector<EnumeratedScore> enumerate_scores(const std::vector<int>& ranks) {
  if (ranks.empty() || ranks.size() > kOracleMaxN) {
    throw InstanceTooLarge("enumerate_scores: n must be in [1, " +
                           std::to_string(kOracleMaxN) + "], got " +
                           std::to_string(ranks.size()));
  }
  const RankedList list = list_from_ranks(ranks);
  const FastEval eval(list);

  std::vector<EnumeratedScore> out;
  for_each_permutation(ranks.size(), [&](const std::vector<std::uint8_t>& p) {
    EnumeratedScore e;
    std::copy(p.begin(), p.end(), e.positions.begin());
    e.dcg_prime = eval.dcg(p);
    e.normalized = eval.normalize(e.dcg_prime);
    out.push_back(e);
  });
  return out;
}

OracleReport verify_instance(const std::vector<int>& ranks) {
  if (ranks.empty() || ranks.size() > kOracleMaxN) {
    throw InstanceTooLarge("verify_instance: n must be in [1, " +
                           std::to_string(kOracleMaxN) + "], got " +
                           std::to_string(ranks.size()));
  }
  const RankedList list = list_from_ranks(ranks);
  const FastEval eval(list);
  const std::vector<RankedItem>& items = list.items();

  OracleReport report;
  report.instance = describe(ranks);
  report.closed_form_min = eval.min_dcg;
  report.closed_form_max = eval.max_dcg;

  double obs_min = 0.0, obs_max = 0.0;
  bool first = true;
  // rank sequence induced by a permutation -> first observed dcg'
  std::map<std::vector<int>, double> by_rank_seq;
  std::vector<int> seq(ranks.size());

  report.permutation_count = for_each_permutation(
      ranks.size(), [&](const std::vector<std::uint8_t>& p) {
        const double s = eval.dcg(p);
        if (first) {
          obs_min = obs_max = s;
          first = false;
        } else {
          obs_min = std::min(obs_min, s);
          obs_max = std::max(obs_max, s);
        }
        const double norm = eval.normalize(s);
        if (norm < -kScoreTol || norm > 1.0 + kScoreTol) {
          report.violations.push_back("score out of [0,1]: " +
                                      std::to_string(norm));
          return;
        }
        for (std::size_t i = 0; i < p.size(); ++i) seq[i] = items[p[i]].rank;
        // Equal-rank swap invariance: one score per induced rank sequence.
        auto [it, inserted] = by_rank_seq.emplace(seq, s);
        if (!inserted && std::abs(it->second - s) > kScoreTol) {
          report.violations.push_back(
              "equal-rank permutation changed the score on " +
              describe(seq));
        }
        const bool non_increasing =
            std::is_sorted(seq.rbegin(), seq.rend());
        const bool non_decreasing = std::is_sorted(seq.begin(), seq.end());
        if (eval.degenerate) {
          if (std::abs(norm - 1.0) > kScoreTol) {
            report.violations.push_back(
                "degenerate instance scored " + std::to_string(norm));
          }
          return;
        }
        if ((std::abs(norm - 1.0) <= kScoreTol) != non_increasing) {
          report.violations.push_back("score 1 <=> non-increasing failed on " +
                                      describe(seq));
        }
        // Only one direction holds for the lower bound: non-decreasing
        // sequences always score 0, but score 0 is not unique to them
        // (e.g. ranks [2,1,1], sequence [1,2,1] also attains the minimum).
        if (non_decreasing && std::abs(norm) > kScoreTol) {
          report.violations.push_back("non-decreasing => score 0 failed on " +
                                      describe(seq));
        }
      });

  report.observed_min = obs_min;
  report.observed_max = obs_max;
  if (std::abs(obs_min - eval.min_dcg) > kExtremaTol) {
    report.violations.push_back("closed-form min differs from enumerated min");
  }
  if (std::abs(obs_max - eval.max_dcg) > kExtremaTol) {
    report.violations.push_back("closed-form max differs from enumerated max");
  }
  return report;
}

double dcg_prime_gain_from_item(const RankedList& list,
                                const std::vector<std::string>& order_ids) {
  const RankMapping mapping = build_mapping(list);
  const auto groups = induced_tie_groups(list, ExplicitOrder{order_ids});
  double sum = 0.0;
  for (const TieGroup& g : groups) {
    const int pos_disc =
        mapping.discount(list.ideal()[g.first_pos - 1].rank);
    sum += static_cast<double>(mapping.gain(g.items.front().rank)) / pos_disc;
  }
  return sum;
}

namespace {

// Realizes a rank sequence as an ordering of the reference items, taking
// equal-rank items in ideal (id-ascending) order.
std::vector<std::string> order_for_rank_sequence(const RankedList& list,
                                                 const std::vector<int>& seq) {
  std::map<int, std::vector<std::string>> buckets;
  for (const RankedItem& it : list.ideal()) {
    buckets[it.rank].push_back(it.id);
  }
  std::map<int, std::size_t> next;
  std::vector<std::string> order;
  for (int r : seq) {
    order.push_back(buckets.at(r)[next[r]++]);
  }
  return order;
}

}  // namespace

std::vector<Table1Row> replay_table1() {
  const std::vector<int> reference = {9, 4, 4, 2, 2, 2, 1, 1, 1, 1};
  const std::vector<std::vector<int>> rows = {
      {9, 4, 4, 2, 2, 2, 1, 1, 1, 1}, {9, 4, 4, 2, 2, 1, 2, 1, 1, 1},
      {4, 4, 2, 9, 2, 2, 1, 1, 1, 1}, {1, 4, 4, 2, 2, 2, 9, 1, 1, 1},
      {1, 4, 4, 2, 2, 2, 1, 1, 1, 9}, {1, 1, 1, 1, 2, 2, 2, 4, 4, 9}};
  const std::vector<double> expect_rankdcg = {1.0, 0.975, 0.65,
                                              0.325, 0.325, 0.0};
  const std::vector<double> expect_tau = {1.0, 0.8, 0.742, 0.285, 0.285, -0.8};
  const std::vector<double> expect_ndcg = {1.0, 0.998, 0.825,
                                           0.688, 0.667, 0.571};
  constexpr double kTolRankDcg = 0.001;
  constexpr double kTolTau = 0.002;
  constexpr double kTolNdcg = 0.002;

  const RankedList list = list_from_ranks(reference);
  std::vector<double> ideal_seq(reference.begin(), reference.end());

  std::vector<Table1Row> results;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto order = order_for_rank_sequence(list, rows[i]);
    const Hypothesis hyp = ExplicitOrder{order};

    const double got_rankdcg = rank_dcg(list, hyp).normalized;
    const std::vector<double> hyp_seq(rows[i].begin(), rows[i].end());
    const MetricValue tau = kendall_tau_b(ideal_seq, hyp_seq);
    const double got_ndcg = ndcg(list, hyp);

    std::ostringstream detail;
    bool pass = true;
    auto check = [&](const char* name, double got, double want, double tol) {
      const bool ok = std::abs(got - want) <= tol;
      if (!ok) pass = false;
      detail << name << "=" << got << (ok ? "" : "!") << " ";
    };
    check("rankdcg", got_rankdcg, expect_rankdcg[i], kTolRankDcg);
    if (!tau.is_defined()) {
      pass = false;
      detail << "tau-b=undefined! ";
    } else {
      check("tau-b", tau.value(), expect_tau[i], kTolTau);
    }
    check("ndcg", got_ndcg, expect_ndcg[i], kTolNdcg);
    results.push_back(Table1Row{"row " + std::to_string(i + 1), pass,
                                detail.str()});
  }

  // The two accumulator readings disagree only on row 3: the adopted one
  // scores 0.65, the rejected gain-from-item reading 0.75.
  {
    const auto order = order_for_rank_sequence(list, rows[2]);
    const auto [mn, mx] = extrema(list);
    const double rejected =
        (dcg_prime_gain_from_item(list, order) - mn) / (mx - mn);
    const double adopted = rank_dcg(list, ExplicitOrder{order}).normalized;
    const bool pass = std::abs(rejected - 0.75) <= 1e-9 &&
                      std::abs(adopted - 0.65) <= 1e-9;
    std::ostringstream detail;
    detail << "adopted=" << adopted << " rejected=" << rejected;
    results.push_back(Table1Row{"row 3 formula disambiguation", pass,
                                detail.str()});
  }
  return results;
}

}  // namespace rankeval
