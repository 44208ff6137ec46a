#ifndef RANKEVAL_BASELINES_HPP
#define RANKEVAL_BASELINES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankeval/core.hpp"

namespace rankeval {

/// A metric result that may be undefined (e.g. zero-variance correlation).
/// Undefined is first-class: it always carries a reason and is never
/// coerced to 0 or a floating NaN.
class MetricValue {
 public:
  static MetricValue defined(double v) { return MetricValue(v, {}); }
  static MetricValue undefined(std::string reason) {
    return MetricValue(std::nullopt, std::move(reason));
  }

  bool is_defined() const { return value_.has_value(); }
  double value() const { return value_.value(); }
  const std::string& reason() const { return reason_; }

 private:
  MetricValue(std::optional<double> v, std::string reason)
      : value_(v), reason_(std::move(reason)) {}
  std::optional<double> value_;
  std::string reason_;
};

/// Tie-corrected Kendall rank correlation between two equal-length value
/// sequences. Undefined when either side is constant.
MetricValue kendall_tau_b(const std::vector<double>& ref_values,
                          const std::vector<double>& hyp_values);

/// Plain DCG of a gain sequence: sum of gains[i] / log2(i + 1), 1-based.
double dcg(const std::vector<double>& gains);

/// nDCG with linear gains: DCG of true ranks in hypothesis order over the
/// ideal DCG. In (0, 1] for non-degenerate lists.
double ndcg(const RankedList& list, const Hypothesis& hyp);

/// Demonstration mode: DCG of *predicted* gains in predicted order over
/// the ideal DCG of true ranks. May exceed 1 when high ranks are
/// overpredicted.
double ndcg_raw_gain(const RankedList& list,
                     const std::map<std::string, double>& predicted_gains);

/// Binary-relevance average precision; relevant = rank > threshold.
/// Threshold defaults to the minimum rank present in the list.
MetricValue average_precision(const RankedList& list, const Hypothesis& hyp,
                              std::optional<int> relevance_threshold = {});

MetricValue mean_average_precision(
    const std::vector<std::pair<const RankedList*, const Hypothesis*>>& pairs,
    std::optional<int> relevance_threshold = {});

struct PrecisionRecallF {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

PrecisionRecallF precision_recall_f(const std::vector<std::string>& retrieved,
                                    const std::vector<std::string>& relevant);

}  // namespace rankeval

#endif  // RANKEVAL_BASELINES_HPP
