#include "rankeval/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "rankeval/eval.hpp"

namespace rankeval {

namespace {

// Bounded draw by rejection from raw 64-bit outputs; keeps generation
// independent of library distribution internals.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % k;
}

// Draw from cumulative weights with a 53-bit uniform in [0, 1).
std::size_t weighted_draw(std::mt19937_64& rng,
                          const std::vector<double>& cumulative) {
  const double u =
      static_cast<double>(rng() >> 11) * 0x1.0p-53 * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return static_cast<std::size_t>(it - cumulative.begin());
}

std::string item_id(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "item_%04zu", i + 1);
  return buf;
}

}  // namespace

RankedList generate(const GenSpec& spec) {
  if (spec.n < 1) throw InvalidInput("generate: n must be >= 1");
  std::vector<int> ranks;

  if (const auto* c = std::get_if<Constructed>(&spec.distribution)) {
    if (c->ranks.size() != spec.n) {
      throw InvalidInput("generate: constructed multiset has " +
                         std::to_string(c->ranks.size()) + " ranks for n = " +
                         std::to_string(spec.n));
    }
    ranks = c->ranks;
  } else if (const auto* u = std::get_if<Uniform>(&spec.distribution)) {
    if (u->levels < 1) throw InvalidInput("generate: levels must be >= 1");
    std::mt19937_64 rng(spec.seed);
    for (std::size_t i = 0; i < spec.n; ++i) {
      ranks.push_back(1 + static_cast<int>(
                              bounded(rng, static_cast<std::uint64_t>(
                                               u->levels))));
    }
  } else {
    const auto& p = std::get<PowerLaw>(spec.distribution);
    if (p.alpha <= 0.0) throw InvalidInput("generate: alpha must be > 0");
    if (p.levels < 1) throw InvalidInput("generate: levels must be >= 1");
    std::vector<double> cumulative;
    double acc = 0.0;
    for (int r = 1; r <= p.levels; ++r) {
      acc += std::pow(static_cast<double>(r), -p.alpha);
      cumulative.push_back(acc);
    }
    std::mt19937_64 rng(spec.seed);
    for (std::size_t i = 0; i < spec.n; ++i) {
      ranks.push_back(1 + static_cast<int>(weighted_draw(rng, cumulative)));
    }
  }

  std::vector<RankedItem> items;
  items.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    items.push_back(RankedItem{item_id(i), ranks[i]});
  }
  return RankedList(std::move(items));
}

Hypothesis perturb(const RankedList& list, const PerturbOp& op) {
  std::vector<std::string> order;
  order.reserve(list.size());
  for (const RankedItem& it : list.ideal()) order.push_back(it.id);

  if (const auto* swaps = std::get_if<AdjacentSwaps>(&op)) {
    if (list.size() > 1) {
      std::mt19937_64 rng(swaps->seed);
      for (std::size_t i = 0; i < swaps->count; ++i) {
        const std::size_t pos = bounded(rng, list.size() - 1);
        std::swap(order[pos], order[pos + 1]);
      }
    }
    return ExplicitOrder{order};
  }
  if (const auto* shuffle = std::get_if<SubgroupShuffle>(&op)) {
    std::mt19937_64 rng(shuffle->seed);
    std::size_t begin = 0;
    while (begin < list.size()) {
      std::size_t end = begin + 1;
      while (end < list.size() &&
             list.ideal()[end].rank == list.ideal()[begin].rank) {
        ++end;
      }
      // Fisher-Yates within the equal-rank block.
      for (std::size_t i = end - 1; i > begin; --i) {
        const std::size_t j = begin + bounded(rng, i - begin + 1);
        std::swap(order[i], order[j]);
      }
      begin = end;
    }
    return ExplicitOrder{order};
  }
  if (const auto* disp = std::get_if<TopDisplacement>(&op)) {
    if (disp->target_pos < 1 || disp->target_pos > list.size()) {
      throw InvalidInput("perturb: target position " +
                         std::to_string(disp->target_pos) +
                         " out of range 1.." + std::to_string(list.size()));
    }
    std::swap(order[0], order[disp->target_pos - 1]);
    return ExplicitOrder{order};
  }
  if (std::holds_alternative<Reverse>(op)) {
    std::reverse(order.begin(), order.end());
    return ExplicitOrder{order};
  }
  ScoreAssignment constant;
  for (const RankedItem& it : list.items()) {
    constant.scores.emplace_back(it.id, 0.0);
  }
  return constant;
}

std::vector<SweepCell> degradation_sweep(
    const GenSpec& spec, const std::vector<std::string>& metrics,
    std::size_t steps) {
  if (steps < 1) throw InvalidInput("degradation_sweep: steps must be >= 1");
  for (const std::string& m : metrics) {
    if (!is_known_metric(m)) {
      throw InvalidInput("unknown metric '" + m + "'");
    }
  }
  const RankedList list = generate(spec);
  std::vector<SweepCell> cells;
  for (std::size_t step = 0; step < steps; ++step) {
    // Step k applies k adjacent swaps; per-step seed derived from the spec.
    const Hypothesis hyp =
        perturb(list, AdjacentSwaps{step, spec.seed + step});
    for (const std::string& metric : metrics) {
      cells.push_back(
          SweepCell{step, metric, evaluate_metric(metric, list, hyp)});
    }
  }
  return cells;
}

}  // namespace rankeval
