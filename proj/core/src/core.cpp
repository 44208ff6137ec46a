#include "rankeval/core.hpp"

#include <algorithm>
#include <set>

namespace rankeval {

RankedList::RankedList(std::vector<RankedItem> items)
    : items_(std::move(items)) {
  if (items_.empty()) {
    throw InvalidInput("ranked list must contain at least one item");
  }
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const RankedItem& it = items_[i];
    if (it.rank < 0) {
      throw InvalidInput("rank must be a non-negative integer for id '" +
                         it.id + "'");
    }
    if (!index_.emplace(it.id, i).second) {
      throw InvalidInput("duplicate item id '" + it.id + "'");
    }
  }
  ideal_ = items_;
  std::sort(ideal_.begin(), ideal_.end(),
            [](const RankedItem& a, const RankedItem& b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              return a.id < b.id;
            });
}

bool RankedList::contains(const std::string& id) const {
  return index_.count(id) != 0;
}

const RankedItem& RankedList::item(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw HypothesisMismatch("unknown item id '" + id + "'");
  }
  return items_[it->second];
}

int RankMapping::gain(int rank) const {
  auto it = gain_.find(rank);
  if (it == gain_.end()) {
    throw InvalidInput("rank " + std::to_string(rank) +
                       " is not present in the mapped list");
  }
  return it->second;
}

int RankMapping::discount(int rank) const {
  return static_cast<int>(unique_ranks_.size()) + 1 - gain(rank);
}

RankMapping build_mapping(const RankedList& list) {
  std::set<int, std::greater<int>> distinct;
  for (const RankedItem& it : list.items()) distinct.insert(it.rank);

  RankMapping mapping;
  mapping.unique_ranks_.assign(distinct.begin(), distinct.end());
  const int m = static_cast<int>(mapping.unique_ranks_.size());
  for (int i = 0; i < m; ++i) {
    // Top rank gets gain m, each following distinct rank one less.
    mapping.gain_[mapping.unique_ranks_[i]] = m - i;
  }
  return mapping;
}

std::vector<RankedItem> ideal_order(const RankedList& list) {
  return list.ideal();
}

namespace {

std::vector<TieGroup> groups_from_order(const RankedList& list,
                                        const std::vector<std::string>& ids) {
  if (ids.size() != list.size()) {
    throw HypothesisMismatch("hypothesis has " + std::to_string(ids.size()) +
                             " ids, reference has " +
                             std::to_string(list.size()));
  }
  std::set<std::string> seen;
  std::vector<TieGroup> groups;
  groups.reserve(ids.size());
  std::size_t pos = 1;
  for (const std::string& id : ids) {
    if (!seen.insert(id).second) {
      throw HypothesisMismatch("hypothesis repeats item id '" + id + "'");
    }
    groups.push_back(TieGroup{pos++, {list.item(id)}});
  }
  return groups;
}

std::vector<TieGroup> groups_from_scores(
    const RankedList& list,
    const std::vector<std::pair<std::string, double>>& scores) {
  if (scores.size() != list.size()) {
    throw HypothesisMismatch("hypothesis has " + std::to_string(scores.size()) +
                             " ids, reference has " +
                             std::to_string(list.size()));
  }
  // score -> items, highest score first
  std::map<double, std::vector<RankedItem>, std::greater<double>> by_score;
  std::set<std::string> seen;
  for (const auto& [id, score] : scores) {
    if (!seen.insert(id).second) {
      throw HypothesisMismatch("hypothesis repeats item id '" + id + "'");
    }
    by_score[score].push_back(list.item(id));
  }
  std::vector<TieGroup> groups;
  std::size_t pos = 1;
  for (auto& [score, items] : by_score) {
    std::sort(items.begin(), items.end(),
              [](const RankedItem& a, const RankedItem& b) {
                return a.id < b.id;
              });
    std::size_t n = items.size();
    groups.push_back(TieGroup{pos, std::move(items)});
    pos += n;
  }
  return groups;
}

}  // namespace

std::vector<TieGroup> induced_tie_groups(const RankedList& list,
                                         const Hypothesis& hyp) {
  if (const auto* order = std::get_if<ExplicitOrder>(&hyp)) {
    return groups_from_order(list, order->ids);
  }
  return groups_from_scores(list, std::get<ScoreAssignment>(hyp).scores);
}

std::vector<RankedItem> flatten_groups(const std::vector<TieGroup>& groups) {
  std::vector<RankedItem> out;
  for (const TieGroup& g : groups) {
    out.insert(out.end(), g.items.begin(), g.items.end());
  }
  return out;
}

}  // namespace rankeval
