#include "rankeval/rankdcg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rankeval {

namespace {

// Ideal per-position gain sequence L' (rank descending).
std::vector<int> position_gains(const RankedList& list,
                                const RankMapping& mapping) {
  std::vector<int> gains;
  gains.reserve(list.size());
  for (const RankedItem& it : list.ideal()) {
    gains.push_back(mapping.gain(it.rank));
  }
  return gains;
}

}  // namespace

double dcg_prime(const RankedList& list,
                 const std::vector<std::string>& order_ids) {
  const RankMapping mapping = build_mapping(list);
  const std::vector<TieGroup> groups =
      induced_tie_groups(list, ExplicitOrder{order_ids});
  const std::vector<int> gains = position_gains(list, mapping);

  double sum = 0.0;
  for (const TieGroup& g : groups) {
    sum += static_cast<double>(gains[g.first_pos - 1]) /
           mapping.discount(g.items.front().rank);
  }
  return sum;
}

std::pair<double, double> extrema(const RankedList& list) {
  const RankMapping mapping = build_mapping(list);
  const std::vector<int> gains = position_gains(list, mapping);
  const std::size_t n = list.size();

  double max_sum = 0.0;
  double min_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const int ideal_disc = mapping.discount(list.ideal()[i].rank);
    const int rev_disc = mapping.discount(list.ideal()[n - 1 - i].rank);
    max_sum += static_cast<double>(gains[i]) / ideal_disc;
    min_sum += static_cast<double>(gains[i]) / rev_disc;
  }
  return {min_sum, max_sum};
}

double tie_group_contribution(const std::vector<int>& position_gains,
                              const std::vector<RankedItem>& items,
                              const RankMapping& mapping, TiePolicy policy) {
  if (position_gains.size() != items.size()) {
    throw InvalidInput("tie group has " + std::to_string(items.size()) +
                       " items for " + std::to_string(position_gains.size()) +
                       " positions");
  }
  std::vector<int> gains = position_gains;
  std::sort(gains.begin(), gains.end(), std::greater<int>());
  std::vector<int> discounts;
  discounts.reserve(items.size());
  for (const RankedItem& it : items) {
    discounts.push_back(mapping.discount(it.rank));
  }

  switch (policy) {
    case TiePolicy::Pessimistic:
      // Largest gains against largest discounts minimizes the sum.
      std::sort(discounts.begin(), discounts.end(), std::greater<int>());
      break;
    case TiePolicy::Optimistic:
      std::sort(discounts.begin(), discounts.end());
      break;
    case TiePolicy::Expected: {
      // Uniform-random assignment; exact by linearity of expectation.
      double gain_sum = std::accumulate(gains.begin(), gains.end(), 0.0);
      double inv_disc = 0.0;
      for (int d : discounts) inv_disc += 1.0 / d;
      return gain_sum * inv_disc / static_cast<double>(discounts.size());
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    sum += static_cast<double>(gains[i]) / discounts[i];
  }
  return sum;
}

RankDcgBreakdown rank_dcg(const RankedList& list, const Hypothesis& hyp,
                          TiePolicy policy) {
  const RankMapping mapping = build_mapping(list);
  const std::vector<TieGroup> groups = induced_tie_groups(list, hyp);
  const std::vector<int> gains = position_gains(list, mapping);

  double sum = 0.0;
  for (const TieGroup& g : groups) {
    std::vector<int> block(gains.begin() + (g.first_pos - 1),
                           gains.begin() + (g.first_pos - 1 + g.items.size()));
    sum += tie_group_contribution(block, g.items, mapping, policy);
  }

  RankDcgBreakdown out;
  out.dcg_prime = sum;
  std::tie(out.min_dcg_prime, out.max_dcg_prime) = extrema(list);
  const double span = out.max_dcg_prime - out.min_dcg_prime;
  if (list.size() == 1 || mapping.unique_count() == 1) {
    out.degenerate = true;
    out.normalized = 1.0;
  } else {
    out.normalized = (sum - out.min_dcg_prime) / span;
  }
  return out;
}

std::vector<CurvePoint> cost_curve(const RankedList& list,
                                   CurveVariant variant) {
  const RankMapping mapping = build_mapping(list);
  std::vector<CurvePoint> curve;
  curve.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const int rank = list.ideal()[i].rank;
    const double pos = static_cast<double>(i + 1);
    double cost = 0.0;
    switch (variant) {
      case CurveVariant::DcgLog:
        cost = rank / std::log2(pos + 1.0);
        break;
      case CurveVariant::BurgesExp:
        cost = (std::exp2(static_cast<double>(rank)) - 1.0) /
               std::log2(pos + 1.0);
        break;
      case CurveVariant::RelPrimeLinear:
        cost = mapping.gain(rank) / pos;
        break;
      case CurveVariant::RankDcg:
        cost = static_cast<double>(mapping.gain(rank)) /
               mapping.discount(rank);
        break;
    }
    curve.push_back(CurvePoint{i + 1, cost});
  }
  return curve;
}

const char* curve_variant_name(CurveVariant variant) {
  switch (variant) {
    case CurveVariant::DcgLog: return "dcg-log";
    case CurveVariant::BurgesExp: return "burges-exp";
    case CurveVariant::RelPrimeLinear: return "relprime-linear";
    case CurveVariant::RankDcg: return "rankdcg";
  }
  return "unknown";
}

}  // namespace rankeval
