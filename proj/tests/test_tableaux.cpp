#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "rrc/partitions.hpp"
#include "rrc/tableaux.hpp"

using namespace rrc;

namespace {

QSeries series(int order, const std::vector<long>& c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return QSeries(order, std::move(r));
}

const Alphabet y14 = Alphabet::finite_weights({1, 4});
const Alphabet x5 = Alphabet::geometric(0, 5);

}  // namespace

TEST_CASE("alphabets") {
  CHECK(y14.size() == 2);
  CHECK(y14.index_of(4) == 1);
  CHECK(y14.index_of(2) == std::nullopt);
  CHECK(x5.size() == std::nullopt);
  CHECK(x5.letter(3).weight == 15);
  CHECK(x5.index_of(10) == 2);
  CHECK(x5.index_of(7) == std::nullopt);
  CHECK_THROWS(Alphabet::finite_weights({4, 1}));
  CHECK_THROWS(Alphabet::geometric(0, 0));
  CHECK(Alphabet::finite_weights({3, 5, 7}).min_weight_from(1) == 5);
  CHECK(Alphabet::finite({{1, 9, 1}, {2, 2, 1}, {3, 4, 1}}).min_weight_from(0) == 2);
}

TEST_CASE("validate") {
  const Tableau sample{Partition{4, 2, 1}, {{1, 1, 3, 6}, {3, 3}, {5}}};
  CHECK(validate(sample));
  CHECK(sample.entry_sum() == 22);
  CHECK(!validate(Tableau{Partition{2, 1}, {{1, 4}, {1}}}));
  CHECK(validate(Tableau{}));
  CHECK(!validate(Tableau{Partition{2}, {{4, 1}}}));
  CHECK(!validate(Tableau{Partition{2}, {{1}}}));
  CHECK(to_string(sample) == "[1,1,3,6/3,3/5]");
}

TEST_CASE("enumerate_ssyt") {
  const auto empty = enumerate_ssyt(Partition{}, y14, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].rows.empty());

  const auto one = enumerate_ssyt(Partition{1}, y14, 10);
  REQUIRE(one.size() == 2);
  std::multiset<int> weights;
  for (const auto& t : one) weights.insert(weight_exponent(t, y14));
  CHECK(weights == std::multiset<int>{1, 4});

  // Columns (0,5) and (0,10) both weigh at most 10; (0,5) is the only one
  // below 10.
  const auto column = enumerate_ssyt(Partition{1, 1}, x5, 10);
  REQUIRE(column.size() == 2);
  CHECK(column[0].rows == std::vector<std::vector<int>>{{0}, {5}});
  CHECK(weight_exponent(column[0], x5) == 5);
  CHECK(column[1].rows == std::vector<std::vector<int>>{{0}, {10}});
  const auto below = enumerate_ssyt(Partition{1, 1}, x5, 9);
  REQUIRE(below.size() == 1);
  CHECK(below[0].rows == column[0].rows);

  CHECK(enumerate_ssyt(Partition{1, 1, 1}, y14, 50).empty());
}

TEST_CASE("every enumerated tableau is valid and within the weight bound") {
  for (const Partition& shape : {Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}}) {
    const auto ts = enumerate_ssyt(shape, x5, 40);
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& t : ts) {
      CHECK(validate(t));
      CHECK(t.shape == shape);
      CHECK(weight_exponent(t, x5) <= 40);
      for (const auto& row : t.rows) {
        for (int v : row) CHECK(v <= 40);
      }
      CHECK(seen.insert(t.rows).second);
    }
  }
}

TEST_CASE("weight_genfun") {
  QSeries g = QSeries::one(30);
  g.div_one_minus(5);
  CHECK(weight_genfun(Partition{1}, x5, 30) == g);
  CHECK(weight_genfun(Partition{2}, y14, 12) == series(12, {0, 0, 1, 0, 0, 1, 0, 0, 1}));
  CHECK(weight_genfun(Partition{1, 1, 1}, y14, 12).is_zero());
}

TEST_CASE("weight_genfun matches brute-force filling") {
  const int order = 24;
  const std::vector<oracle::Parts> shapes = {{}, {1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}, {3, 1}, {2, 2}, {2, 1, 1}};
  for (const auto& s : shapes) {
    const Partition shape{std::vector<int>(s)};
    const auto geo = oracle::geometric_weights(0, 5, order);
    CHECK(weight_genfun(shape, x5, order) ==
          series(order, oracle::ssyt_genfun(s, geo, std::vector<int>(geo.size(), 1), order)));
    const auto geo3 = oracle::geometric_weights(2, 3, order);
    CHECK(weight_genfun(shape, Alphabet::geometric(2, 3), order) ==
          series(order, oracle::ssyt_genfun(s, geo3, std::vector<int>(geo3.size(), 1), order)));
    CHECK(weight_genfun(shape, Alphabet::finite_weights({1, 3, 4, 6}), order) ==
          series(order, oracle::ssyt_genfun(s, {1, 3, 4, 6}, {1, 1, 1, 1}, order)));
    CHECK(weight_genfun(shape, Alphabet::finite_weights({1, 2}, -1), order) ==
          series(order, oracle::ssyt_genfun(s, {1, 2}, {-1, -1}, order)));
  }
}

TEST_CASE("signs") {
  const Alphabet neg = Alphabet::finite_weights({1, 2}, -1);
  const Tableau t{Partition{2, 1}, {{1, 1}, {2}}};
  CHECK(sign(t, neg) == -1);
  CHECK(weight_exponent(t, neg) == 4);
}

TEST_CASE("minimum tableau weight") {
  CHECK(min_tableau_weight(Partition{2, 1}, y14) == 6);
  CHECK(min_tableau_weight(Partition{1, 1, 1}, y14) == std::nullopt);
  CHECK(min_tableau_weight(Partition{3, 2}, x5) == 10);
}
