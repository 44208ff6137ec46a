#ifndef RANKEVAL_RANKDCG_HPP
#define RANKEVAL_RANKDCG_HPP

#include <string>
#include <utility>
#include <vector>

#include "rankeval/core.hpp"

namespace rankeval {

/// Full decomposition of one rankDCG evaluation.
struct RankDcgBreakdown {
  double dcg_prime = 0.0;
  double max_dcg_prime = 0.0;
  double min_dcg_prime = 0.0;
  double normalized = 0.0;
  /// True when max == min (single item or a single distinct rank); the
  /// normalized score is then reported as 1.0.
  bool degenerate = false;
};

/// DCG' of an ordering: sum over positions of the ideal position gain
/// divided by the discount of the item placed there. The gain sequence is
/// fixed by the ideal ordering; the discount follows the placed item's
/// true rank.
double dcg_prime(const RankedList& list,
                 const std::vector<std::string>& order_ids);

/// (min, max) of DCG' over all permutations: the reversed and ideal
/// orderings respectively (rearrangement bound, oracle-verified).
std::pair<double, double> extrema(const RankedList& list);

RankDcgBreakdown rank_dcg(const RankedList& list, const Hypothesis& hyp,
                          TiePolicy policy = TiePolicy::Pessimistic);

/// Contribution of one tie group to DCG'. position_gains are the ideal
/// gains of the block the group occupies; items are the group members.
double tie_group_contribution(const std::vector<int>& position_gains,
                              const std::vector<RankedItem>& items,
                              const RankMapping& mapping, TiePolicy policy);

/// Per-position cost function shapes, evaluated over the ideal ordering.
enum class CurveVariant { DcgLog, BurgesExp, RelPrimeLinear, RankDcg };

struct CurvePoint {
  std::size_t position = 0;  // 1-based
  double cost = 0.0;
};

std::vector<CurvePoint> cost_curve(const RankedList& list,
                                   CurveVariant variant);

const char* curve_variant_name(CurveVariant variant);

}  // namespace rankeval

#endif  // RANKEVAL_RANKDCG_HPP
