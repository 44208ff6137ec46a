#ifndef RANKEVAL_DATAGEN_HPP
#define RANKEVAL_DATAGEN_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rankeval/baselines.hpp"
#include "rankeval/core.hpp"

namespace rankeval {

/// Integer ranks drawn with frequency proportional to rank^(-alpha) over
/// the discrete support {1..levels}; low ranks dominate.
struct PowerLaw {
  double alpha = 2.0;
  int levels = 10;
};

/// Ranks drawn uniformly from {1..levels}.
struct Uniform {
  int levels = 2;
};

/// An explicit rank multiset, used verbatim in the given order.
struct Constructed {
  std::vector<int> ranks;
};

using RankDistribution = std::variant<PowerLaw, Uniform, Constructed>;

struct GenSpec {
  std::size_t n = 10;
  RankDistribution distribution;
  std::uint64_t seed = 0;
};

/// Deterministic synthesis: identical spec (including seed) gives an
/// identical list. Item ids are zero-padded ("item_0001", ...).
RankedList generate(const GenSpec& spec);

/// Degradation operators applied to a list's ideal ordering.
struct AdjacentSwaps {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};
struct SubgroupShuffle {
  std::uint64_t seed = 0;
};
/// Swaps the top item with the item at the given 1-based position.
struct TopDisplacement {
  std::size_t target_pos = 1;
};
struct Reverse {};
/// Constant score for every item (a majority-class predictor).
struct MajorityClass {};

using PerturbOp = std::variant<AdjacentSwaps, SubgroupShuffle, TopDisplacement,
                               Reverse, MajorityClass>;

Hypothesis perturb(const RankedList& list, const PerturbOp& op);

struct SweepCell {
  std::size_t step = 0;
  std::string metric;
  MetricValue score = MetricValue::undefined("not evaluated");
};

/// Evaluates the named metrics at degradation steps 0..steps-1, where
/// step k applies k adjacent swaps (seeded per step off the spec seed).
std::vector<SweepCell> degradation_sweep(const GenSpec& spec,
                                         const std::vector<std::string>& metrics,
                                         std::size_t steps);

}  // namespace rankeval

#endif  // RANKEVAL_DATAGEN_HPP
