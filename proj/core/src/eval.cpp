#include "rankeval/eval.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "rankeval/rankdcg.hpp"

namespace rankeval {

namespace {

constexpr std::array<const char*, 7> kMetricNames = {
    "rankdcg", "ndcg", "ndcg-raw", "tau-b", "ap", "map", "f1"};

MetricValue eval_tau(const RankedList& list, const Hypothesis& hyp) {
  const auto order = flatten_groups(induced_tie_groups(list, hyp));
  std::vector<double> ref_values, hyp_values;
  ref_values.reserve(list.size());
  hyp_values.reserve(list.size());
  if (std::holds_alternative<ExplicitOrder>(hyp)) {
    // Item at position i is taken to predict the ideal rank value there.
    for (std::size_t i = 0; i < order.size(); ++i) {
      ref_values.push_back(list.ideal()[i].rank);
      hyp_values.push_back(order[i].rank);
    }
  } else {
    std::map<std::string, double> score_of;
    for (const auto& [id, s] : std::get<ScoreAssignment>(hyp).scores) {
      score_of[id] = s;
    }
    for (const RankedItem& it : list.items()) {
      ref_values.push_back(it.rank);
      hyp_values.push_back(score_of.at(it.id));
    }
  }
  return kendall_tau_b(ref_values, hyp_values);
}

MetricValue eval_f1(const RankedList& list, const Hypothesis& hyp,
                    const EvalOptions& options) {
  const int threshold = options.ap_threshold
                            ? *options.ap_threshold
                            : list.ideal().back().rank;
  std::vector<std::string> relevant;
  for (const RankedItem& it : list.items()) {
    if (it.rank > threshold) relevant.push_back(it.id);
  }
  if (relevant.empty()) {
    return MetricValue::undefined("no item has rank above threshold " +
                                  std::to_string(threshold));
  }
  const auto order = flatten_groups(induced_tie_groups(list, hyp));
  std::vector<std::string> retrieved;
  for (std::size_t i = 0; i < relevant.size(); ++i) {
    retrieved.push_back(order[i].id);
  }
  return MetricValue::defined(precision_recall_f(retrieved, relevant).f);
}

}  // namespace

bool is_known_metric(const std::string& name) {
  return std::find(kMetricNames.begin(), kMetricNames.end(), name) !=
         kMetricNames.end();
}

MetricValue evaluate_metric(const std::string& name, const RankedList& list,
                            const Hypothesis& hyp,
                            const EvalOptions& options) {
  if (name == "rankdcg") {
    return MetricValue::defined(
        rank_dcg(list, hyp, options.tie_policy).normalized);
  }
  if (name == "ndcg") {
    return MetricValue::defined(ndcg(list, hyp));
  }
  if (name == "ndcg-raw") {
    const auto* scores = std::get_if<ScoreAssignment>(&hyp);
    if (!scores) {
      return MetricValue::undefined(
          "ndcg-raw needs a score hypothesis (predicted gains)");
    }
    std::map<std::string, double> gains(scores->scores.begin(),
                                        scores->scores.end());
    return MetricValue::defined(ndcg_raw_gain(list, gains));
  }
  if (name == "tau-b") {
    return eval_tau(list, hyp);
  }
  if (name == "ap" || name == "map") {
    return average_precision(list, hyp, options.ap_threshold);
  }
  if (name == "f1") {
    return eval_f1(list, hyp, options);
  }
  throw InvalidInput("unknown metric '" + name + "'");
}

}  // namespace rankeval
