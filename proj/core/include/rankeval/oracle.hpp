#ifndef RANKEVAL_ORACLE_HPP
#define RANKEVAL_ORACLE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rankeval/core.hpp"

namespace rankeval {

inline constexpr std::size_t kOracleMaxN = 10;

/// One enumerated permutation of a small instance.
struct EnumeratedScore {
  std::array<std::uint8_t, kOracleMaxN> positions{};  // item index per slot
  double dcg_prime = 0.0;
  double normalized = 0.0;
};

/// Exhaustive-check result for one rank multiset.
struct OracleReport {
  std::string instance;
  std::uint64_t permutation_count = 0;
  double observed_min = 0.0;
  double observed_max = 0.0;
  double closed_form_min = 0.0;
  double closed_form_max = 0.0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// All n! permutations of the given rank multiset with their DCG' and
/// normalized scores. Items with equal ranks are enumerated as distinct;
/// n must not exceed kOracleMaxN.
std::vector<EnumeratedScore> enumerate_scores(const std::vector<int>& ranks);

/// Checks, by full enumeration: closed-form extrema match observed ones,
/// every normalized score lies in [0, 1], equal-rank swaps never change a
/// score, and a score of 1 (resp. 0) occurs exactly at non-increasing
/// (resp. non-decreasing) rank sequences of non-degenerate instances.
OracleReport verify_instance(const std::vector<int>& ranks);

/// Side-by-side replay of the constructed-data experiment: six hypothesis
/// orderings against the skewed ten-element reference, checked for
/// rankDCG, tau-b, and nDCG, plus a regression pinning down the rejected
/// gain-from-item formula reading.
struct Table1Row {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Table1Row> replay_table1();

/// The rejected accumulator reading (gain from the placed item, discount
/// from the position); kept only as a regression against silent formula
/// swaps.
double dcg_prime_gain_from_item(const RankedList& list,
                                const std::vector<std::string>& order_ids);

}  // namespace rankeval

#endif  // RANKEVAL_ORACLE_HPP
