#ifndef RANKEVAL_TESTS_HELPERS_HPP
#define RANKEVAL_TESTS_HELPERS_HPP

#include <cstdio>
#include <string>
#include <vector>

#include "rankeval/core.hpp"

namespace rankeval::test {

// Items "i00", "i01", ... with the given ranks, in the given order. Ids
// sort the same way as the input order, so a rank-descending input is its
// own ideal ordering.
inline RankedList make_list(const std::vector<int>& ranks) {
  std::vector<RankedItem> items;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    char id[16];
    std::snprintf(id, sizeof(id), "i%02u", static_cast<unsigned>(i));
    items.push_back(RankedItem{id, ranks[i]});
  }
  return RankedList(std::move(items));
}

// Orders the reference items so their true ranks spell out `seq`, taking
// equal-rank items in id order.
inline std::vector<std::string> order_with_ranks(const RankedList& list,
                                                 const std::vector<int>& seq) {
  std::vector<bool> used(list.size(), false);
  std::vector<std::string> order;
  for (int r : seq) {
    for (std::size_t i = 0; i < list.ideal().size(); ++i) {
      if (!used[i] && list.ideal()[i].rank == r) {
        used[i] = true;
        order.push_back(list.ideal()[i].id);
        break;
      }
    }
  }
  return order;
}

inline const std::vector<int> kPaperList = {9, 4, 4, 2, 2, 2, 1, 1, 1, 1};

}  // namespace rankeval::test

#endif
