#ifndef RANKEVAL_EVAL_HPP
#define RANKEVAL_EVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "rankeval/baselines.hpp"
#include "rankeval/core.hpp"

namespace rankeval {

struct EvalOptions {
  TiePolicy tie_policy = TiePolicy::Pessimistic;
  std::optional<int> ap_threshold;
};

/// Metric names accepted by drivers: rankdcg, ndcg, ndcg-raw, tau-b, ap,
/// map, f1. "map" is an aggregate over several (list, hypothesis) pairs
/// and is handled by the caller, not evaluate_metric.
bool is_known_metric(const std::string& name);

/// Evaluates one named per-list metric. tau-b treats an explicit-order
/// hypothesis as predicting the ideal rank value at each position (the
/// only binding that carries the tie correction on both sides); a score
/// hypothesis contributes its raw scores. ndcg-raw needs score
/// hypotheses and is Undefined otherwise.
MetricValue evaluate_metric(const std::string& name, const RankedList& list,
                            const Hypothesis& hyp,
                            const EvalOptions& options = {});

}  // namespace rankeval

#endif  // RANKEVAL_EVAL_HPP
