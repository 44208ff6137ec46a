#ifndef RANKEVAL_CORE_HPP
#define RANKEVAL_CORE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rankeval/errors.hpp"

namespace rankeval {

/// One reference item: opaque id plus its discrete rank (higher = better).
struct RankedItem {
  std::string id;
  int rank = 0;

  friend bool operator==(const RankedItem&, const RankedItem&) = default;
};

/// A reference list of ranked items. n >= 1, ids unique, ranks >= 0.
///
/// The ideal ordering (rank descending, id ascending on ties) is fixed at
/// construction and defines the gain template every metric consumes.
class RankedList {
 public:
  explicit RankedList(std::vector<RankedItem> items);

  const std::vector<RankedItem>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  /// Items sorted by rank descending, ties broken by id ascending.
  const std::vector<RankedItem>& ideal() const { return ideal_; }

  bool contains(const std::string& id) const;
  const RankedItem& item(const std::string& id) const;

 private:
  std::vector<RankedItem> items_;
  std::vector<RankedItem> ideal_;
  std::map<std::string, std::size_t> index_;  // id -> position in items_
};

/// Per-list table mapping each distinct rank value to its compressed gain
/// (m..1 over the m unique ranks, top rank = m) and to the reversed-order
/// discount m + 1 - gain.
class RankMapping {
 public:
  std::size_t unique_count() const { return unique_ranks_.size(); }
  const std::vector<int>& unique_ranks() const { return unique_ranks_; }

  int gain(int rank) const;
  int discount(int rank) const;

 private:
  friend RankMapping build_mapping(const RankedList& list);

  std::vector<int> unique_ranks_;   // descending
  std::map<int, int> gain_;         // rank -> gain in {m..1}
};

/// Hypothesis as an explicit permutation of item ids, best first.
struct ExplicitOrder {
  std::vector<std::string> ids;
};

/// Hypothesis as real-valued scores per id, higher = better, ties allowed.
struct ScoreAssignment {
  std::vector<std::pair<std::string, double>> scores;
};

using Hypothesis = std::variant<ExplicitOrder, ScoreAssignment>;

/// How tied hypothesis scores are resolved at scoring time.
enum class TiePolicy { Pessimistic, Optimistic, Expected };

/// Items sharing one hypothesis score, occupying the contiguous 1-based
/// position block [first_pos, first_pos + items.size() - 1].
struct TieGroup {
  std::size_t first_pos = 0;
  std::vector<RankedItem> items;
};

RankMapping build_mapping(const RankedList& list);

/// The ideal (reference) ordering of a list; see RankedList::ideal().
std::vector<RankedItem> ideal_order(const RankedList& list);

/// Canonical tie-group decomposition of a hypothesis against its list.
/// Groups are ordered by descending hypothesis score; an ExplicitOrder
/// yields n singleton groups. Throws HypothesisMismatch when the hypothesis
/// does not cover exactly the list's ids.
std::vector<TieGroup> induced_tie_groups(const RankedList& list,
                                         const Hypothesis& hyp);

/// Flattens tie groups to a single ordering; within a group items appear
/// in id-ascending order. Used by metrics that need a concrete order.
std::vector<RankedItem> flatten_groups(const std::vector<TieGroup>& groups);

}  // namespace rankeval

#endif  // RANKEVAL_CORE_HPP
