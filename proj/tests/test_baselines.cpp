#include "doctest.h"

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "rankeval/baselines.hpp"

using namespace rankeval;
using test::make_list;
using test::order_with_ranks;

namespace {

std::vector<double> to_doubles(const std::vector<int>& v) {
  return std::vector<double>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("kendall tau-b on the constructed-data rows") {
  const auto ref = to_doubles(test::kPaperList);
  const MetricValue row2 =
      kendall_tau_b(ref, to_doubles({9, 4, 4, 2, 2, 1, 2, 1, 1, 1}));
  CHECK(row2.value() == doctest::Approx(0.8).epsilon(1e-9));
  const MetricValue row3 =
      kendall_tau_b(ref, to_doubles({4, 4, 2, 9, 2, 2, 1, 1, 1, 1}));
  CHECK(row3.value() == doctest::Approx(0.742).epsilon(1e-3));
  const MetricValue row6 =
      kendall_tau_b(ref, to_doubles({1, 1, 1, 1, 2, 2, 2, 4, 4, 9}));
  CHECK(row6.value() == doctest::Approx(-0.8).epsilon(1e-9));
}

TEST_CASE("kendall tau-b identity and undefined cases") {
  const auto ref = to_doubles(test::kPaperList);
  CHECK(kendall_tau_b(ref, ref).value() == doctest::Approx(1.0));
  const std::vector<double> constant(ref.size(), 2.0);
  const MetricValue nan = kendall_tau_b(ref, constant);
  CHECK_FALSE(nan.is_defined());
  CHECK_FALSE(nan.reason().empty());
  CHECK_THROWS_AS(kendall_tau_b({1.0}, {1.0}), InvalidInput);
  CHECK_THROWS_AS(kendall_tau_b({1.0, 2.0}, {1.0}), InvalidInput);
}

TEST_CASE("kendall tau-b symmetry and bounded range") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    std::vector<double> x, y;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(static_cast<double>(rng() % 5));
      y.push_back(static_cast<double>(rng() % 5));
    }
    const MetricValue xy = kendall_tau_b(x, y);
    const MetricValue yx = kendall_tau_b(y, x);
    CHECK(xy.is_defined() == yx.is_defined());
    if (!xy.is_defined()) continue;
    CHECK(xy.value() == doctest::Approx(yx.value()).epsilon(1e-12));
    CHECK(xy.value() >= -1.0 - 1e-12);
    CHECK(xy.value() <= 1.0 + 1e-12);
  }
}

TEST_CASE("kendall tau-b antisymmetry under reversal on tie-free input") {
  const std::vector<double> x = {5, 3, 8, 1, 9, 2};
  const std::vector<double> y = {2, 7, 4, 6, 1, 3};
  std::vector<double> y_neg;
  for (double v : y) y_neg.push_back(-v);
  CHECK(kendall_tau_b(x, y_neg).value() ==
        doctest::Approx(-kendall_tau_b(x, y).value()).epsilon(1e-12));
}

TEST_CASE("dcg direct sums") {
  CHECK(dcg(to_doubles(test::kPaperList)) ==
        doctest::Approx(17.110085151218673).epsilon(1e-12));
  CHECK(dcg(to_doubles({1, 1, 1, 1, 2, 2, 2, 4, 4, 9})) ==
        doctest::Approx(9.781955893656477).epsilon(1e-12));
  CHECK(dcg({42.0}) == doctest::Approx(42.0));
  CHECK_THROWS_AS(dcg({}), InvalidInput);
}

TEST_CASE("ndcg on the constructed-data rows") {
  const RankedList list = make_list(test::kPaperList);
  auto score = [&](const std::vector<int>& seq) {
    return ndcg(list, ExplicitOrder{order_with_ranks(list, seq)});
  };
  CHECK(score({9, 4, 4, 2, 2, 2, 1, 1, 1, 1}) == doctest::Approx(1.0));
  CHECK(score({4, 4, 2, 9, 2, 2, 1, 1, 1, 1}) ==
        doctest::Approx(0.825).epsilon(2e-3));
  CHECK(score({1, 1, 1, 1, 2, 2, 2, 4, 4, 9}) ==
        doctest::Approx(0.571).epsilon(2e-3));
}

TEST_CASE("ndcg of a reversed three-element list") {
  const RankedList list = make_list({3, 2, 1});
  const double got = ndcg(list, ExplicitOrder{order_with_ranks(list, {1, 2, 3})});
  CHECK(got == doctest::Approx(3.761859507142915 / 4.761859507142915)
                   .epsilon(1e-12));
}

TEST_CASE("ndcg_raw_gain can exceed one") {
  const RankedList list = make_list(test::kPaperList);
  std::map<std::string, double> gains;
  for (const RankedItem& it : list.items()) {
    gains[it.id] = it.rank;
  }
  CHECK(ndcg_raw_gain(list, gains) == doctest::Approx(1.0).epsilon(1e-12));
  for (auto& [id, g] : gains) g *= 2.0;
  CHECK(ndcg_raw_gain(list, gains) == doctest::Approx(2.0).epsilon(1e-12));

  // Overpredicting high ranks on a skewed list pushes the score above 1.
  for (const RankedItem& it : list.items()) {
    gains[it.id] = it.rank == 9 ? 9.0 : 8.0;
  }
  CHECK(ndcg_raw_gain(list, gains) > 1.0);

  std::map<std::string, double> short_gains{{"i00", 1.0}};
  CHECK_THROWS_AS(ndcg_raw_gain(list, short_gains), HypothesisMismatch);
}

TEST_CASE("average precision") {
  const RankedList list = make_list(test::kPaperList);
  SUBCASE("ideal ordering scores 1 under any usable threshold") {
    std::vector<std::string> ids;
    for (const RankedItem& it : list.ideal()) ids.push_back(it.id);
    for (int threshold : {1, 2, 4}) {
      CHECK(average_precision(list, ExplicitOrder{ids}, threshold).value() ==
            doctest::Approx(1.0));
    }
  }
  SUBCASE("row 4 with threshold 1") {
    const auto order = order_with_ranks(list, {1, 4, 4, 2, 2, 2, 9, 1, 1, 1});
    CHECK(average_precision(list, ExplicitOrder{order}, 1).value() ==
          doctest::Approx(0.7345238095238096).epsilon(1e-12));
  }
  SUBCASE("three-element example") {
    const RankedList small = make_list({3, 2, 1});
    const auto order = order_with_ranks(small, {1, 3, 2});
    CHECK(average_precision(small, ExplicitOrder{order}, 1).value() ==
          doctest::Approx(7.0 / 12.0).epsilon(1e-12));
  }
  SUBCASE("default threshold is the minimum rank present") {
    const auto order = order_with_ranks(list, {1, 4, 4, 2, 2, 2, 9, 1, 1, 1});
    CHECK(average_precision(list, ExplicitOrder{order}).value() ==
          doctest::Approx(0.7345238095238096).epsilon(1e-12));
  }
  SUBCASE("no relevant items is undefined with a reason") {
    const auto order = order_with_ranks(list, test::kPaperList);
    const MetricValue ap = average_precision(list, ExplicitOrder{order}, 9);
    CHECK_FALSE(ap.is_defined());
    CHECK_FALSE(ap.reason().empty());
  }
}

TEST_CASE("mean average precision") {
  const RankedList a = make_list({3, 2, 1});
  const Hypothesis ideal = ExplicitOrder{order_with_ranks(a, {3, 2, 1})};
  const Hypothesis mixed = ExplicitOrder{order_with_ranks(a, {1, 3, 2})};

  CHECK(mean_average_precision({{&a, &ideal}}, 1).value() ==
        doctest::Approx(1.0));
  // AP(mixed, threshold 1) = 7/12; mean with 1.0 is 19/24.
  CHECK(mean_average_precision({{&a, &ideal}, {&a, &mixed}}, 1).value() ==
        doctest::Approx(19.0 / 24.0).epsilon(1e-12));
  CHECK_FALSE(mean_average_precision({{&a, &ideal}}, 3).is_defined());
  CHECK_THROWS_AS(mean_average_precision({}), InvalidInput);
}

TEST_CASE("precision, recall and F") {
  auto [p1, r1, f1] = precision_recall_f({"a", "b"}, {"a", "b"});
  CHECK(p1 == 1.0);
  CHECK(r1 == 1.0);
  CHECK(f1 == 1.0);

  auto [p2, r2, f2] = precision_recall_f({"x", "y"}, {"a", "b"});
  CHECK(p2 == 0.0);
  CHECK(r2 == 0.0);
  CHECK(f2 == 0.0);

  auto [p3, r3, f3] = precision_recall_f({"a"}, {"a", "b"});
  CHECK(p3 == 1.0);
  CHECK(r3 == 0.5);
  CHECK(f3 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(f3 >= std::min(p3, r3));
  CHECK(f3 <= std::max(p3, r3));

  auto [p4, r4, f4] = precision_recall_f({}, {"a"});
  CHECK(p4 == 0.0);
  CHECK_THROWS_AS(precision_recall_f({"a"}, {}), InvalidInput);
}
