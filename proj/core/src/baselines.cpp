#include "rankeval/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rankeval {

MetricValue kendall_tau_b(const std::vector<double>& ref_values,
                          const std::vector<double>& hyp_values) {
  const std::size_t n = ref_values.size();
  if (n != hyp_values.size()) {
    throw InvalidInput("kendall_tau_b: sequences have different lengths");
  }
  if (n < 2) {
    throw InvalidInput("kendall_tau_b: need at least two observations");
  }

  long long concordant = 0, discordant = 0;
  long long ties_ref = 0, ties_hyp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dr = ref_values[i] - ref_values[j];
      const double dh = hyp_values[i] - hyp_values[j];
      if (dr == 0.0) ++ties_ref;
      if (dh == 0.0) ++ties_hyp;
      if (dr == 0.0 || dh == 0.0) continue;
      if ((dr > 0.0) == (dh > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const long long n0 = static_cast<long long>(n) * (n - 1) / 2;
  if (ties_ref == n0 || ties_hyp == n0) {
    return MetricValue::undefined("zero variance: one side is constant");
  }
  const double denom = std::sqrt(static_cast<double>(n0 - ties_ref) *
                                 static_cast<double>(n0 - ties_hyp));
  return MetricValue::defined((concordant - discordant) / denom);
}

double dcg(const std::vector<double>& gains) {
  if (gains.empty()) throw InvalidInput("dcg: empty gain sequence");
  double sum = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    sum += gains[i] / std::log2(static_cast<double>(i) + 2.0);
  }
  return sum;
}

namespace {

std::vector<double> true_rank_gains(const std::vector<RankedItem>& order) {
  std::vector<double> gains;
  gains.reserve(order.size());
  for (const RankedItem& it : order) gains.push_back(it.rank);
  return gains;
}

}  // namespace

double ndcg(const RankedList& list, const Hypothesis& hyp) {
  const auto order = flatten_groups(induced_tie_groups(list, hyp));
  return dcg(true_rank_gains(order)) / dcg(true_rank_gains(list.ideal()));
}

double ndcg_raw_gain(const RankedList& list,
                     const std::map<std::string, double>& predicted_gains) {
  if (predicted_gains.size() != list.size()) {
    throw HypothesisMismatch("predicted gains cover " +
                             std::to_string(predicted_gains.size()) +
                             " ids, reference has " +
                             std::to_string(list.size()));
  }
  ScoreAssignment scores;
  for (const auto& [id, g] : predicted_gains) {
    if (!list.contains(id)) {
      throw HypothesisMismatch("unknown item id '" + id + "'");
    }
    scores.scores.emplace_back(id, g);
  }
  const auto order = flatten_groups(induced_tie_groups(list, scores));
  std::vector<double> gains;
  gains.reserve(order.size());
  for (const RankedItem& it : order) gains.push_back(predicted_gains.at(it.id));
  return dcg(gains) / dcg(true_rank_gains(list.ideal()));
}

MetricValue average_precision(const RankedList& list, const Hypothesis& hyp,
                              std::optional<int> relevance_threshold) {
  const auto order = flatten_groups(induced_tie_groups(list, hyp));
  int threshold;
  if (relevance_threshold) {
    threshold = *relevance_threshold;
  } else {
    threshold = list.ideal().back().rank;  // minimum rank present
  }

  // AP = sum P(k) * dR(k) = mean of precision at the relevant positions.
  std::size_t relevant_total = 0;
  for (const RankedItem& it : list.items()) {
    if (it.rank > threshold) ++relevant_total;
  }
  if (relevant_total == 0) {
    return MetricValue::undefined("no item has rank above threshold " +
                                  std::to_string(threshold));
  }
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k].rank > threshold) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(k + 1);
    }
  }
  return MetricValue::defined(sum / static_cast<double>(relevant_total));
}

MetricValue mean_average_precision(
    const std::vector<std::pair<const RankedList*, const Hypothesis*>>& pairs,
    std::optional<int> relevance_threshold) {
  if (pairs.empty()) {
    throw InvalidInput("mean_average_precision: empty pair set");
  }
  double sum = 0.0;
  for (const auto& [list, hyp] : pairs) {
    MetricValue ap = average_precision(*list, *hyp, relevance_threshold);
    if (!ap.is_defined()) return ap;
    sum += ap.value();
  }
  return MetricValue::defined(sum / static_cast<double>(pairs.size()));
}

PrecisionRecallF precision_recall_f(const std::vector<std::string>& retrieved,
                                    const std::vector<std::string>& relevant) {
  if (relevant.empty()) {
    throw InvalidInput("precision_recall_f: relevant set is empty");
  }
  const std::set<std::string> rel(relevant.begin(), relevant.end());
  const std::set<std::string> ret(retrieved.begin(), retrieved.end());
  std::size_t hits = 0;
  for (const std::string& id : ret) hits += rel.count(id);

  PrecisionRecallF out;
  out.precision =
      ret.empty() ? 0.0 : static_cast<double>(hits) / ret.size();
  out.recall = static_cast<double>(hits) / rel.size();
  out.f = (out.precision + out.recall == 0.0)
              ? 0.0
              : 2.0 * out.precision * out.recall /
                    (out.precision + out.recall);
  return out;
}

}  // namespace rankeval
