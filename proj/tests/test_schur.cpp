#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rrc/error.hpp"
#include "rrc/harness.hpp"
#include "rrc/partitions.hpp"
#include "rrc/schur.hpp"

using namespace rrc;

namespace {

QSeries series(int order, const std::vector<long>& c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return QSeries(order, std::move(r));
}

QSeries over(int order, std::initializer_list<int> den) {
  QSeries s = QSeries::one(order);
  for (int e : den) s.div_one_minus(e);
  return s;
}

const Alphabet y14 = Alphabet::finite_weights({1, 4});
const Alphabet x5 = Alphabet::geometric(0, 5);
constexpr SchurStrategy all_strategies[] = {SchurStrategy::SsytSum, SchurStrategy::JacobiTrudi,
                                            SchurStrategy::ClosedForm};

}  // namespace

TEST_CASE("schur examples") {
  for (auto s : all_strategies) {
    CAPTURE(to_string(s));
    CHECK(schur(Partition{}, x5, 20, s) == QSeries::one(20));
    CHECK(schur(Partition{1}, x5, 20, s) == over(20, {5}));
    CHECK(schur(Partition{2, 1}, y14, 20, s) == QSeries::monomial(6, 1, 20) + QSeries::monomial(9, 1, 20));
    CHECK(schur(Partition{1, 1, 1}, y14, 20, s).is_zero());
  }
  // tableaux [1,1/4] and [1,4/4]
  const auto ts = enumerate_ssyt(Partition{2, 1}, y14, 20);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 1}, {4}});
  CHECK(ts[1].rows == std::vector<std::vector<int>>{{1, 4}, {4}});
  CHECK(schur(Partition{2, 1}, y14, 20, SchurStrategy::SsytSum) ==
        QSeries(20, [] {
          std::vector<Rational> c;
          for (long v : oracle::ssyt_genfun({2, 1}, {1, 4}, {1, 1}, 20)) c.emplace_back(v);
          return c;
        }()));
}

TEST_CASE("h_complete") {
  CHECK(h_complete(0, x5, 10) == QSeries::one(10));
  CHECK(h_complete(2, x5, 40) == over(40, {5, 10}));
  CHECK(h_complete(1, y14, 10) == series(10, {0, 1, 0, 0, 1}));
  // multisets of size 2 from {0,5,10,...}: oracle is one-row SSYT filling
  const auto w = oracle::geometric_weights(0, 5, 40);
  CHECK(h_complete(2, x5, 40) == series(40, oracle::ssyt_genfun({2}, w, std::vector<int>(w.size(), 1), 40)));
  CHECK_THROWS(h_complete(-1, x5, 10));
}

TEST_CASE("jacobi-trudi determinants") {
  const int order = 40;
  for (int n = 0; n <= 5; ++n) {
    CHECK(schur_jacobi_trudi(n == 0 ? Partition{} : Partition{n}, x5, order) == h_complete(n, x5, order));
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const QSeries want = h_complete(a + b, x5, order) * h_complete(a, x5, order) -
                           h_complete(a + b + 1, x5, order) * h_complete(a - 1, x5, order);
      CHECK(schur_jacobi_trudi(Partition{a + b, a}, x5, order) == want);
    }
  }
  const QSeries h1 = h_complete(1, y14, 20);
  CHECK(h1 * h1 - h_complete(2, y14, 20) == QSeries::monomial(5, 1, 20));
  CHECK(schur_jacobi_trudi(Partition{1, 1}, y14, 20) == QSeries::monomial(5, 1, 20));
}

TEST_CASE("principal two-row formula") {
  CHECK(schur_principal_2row(0, 0, 30) == QSeries::one(30));
  CHECK(schur_principal_2row(0, 1, 30) == over(30, {5}));
  CHECK(schur_principal_2row(1, 0, 30) == over(30, {5, 10}).shifted(5));
  CHECK(schur_principal_2row(1, 0, 30) == weight_genfun(Partition{1, 1}, x5, 30));
  CHECK_THROWS(schur_principal_2row(-1, 0, 30));
}

TEST_CASE("y two-row formula") {
  CHECK(schur_y_2row(0, 1) == Polynomial({0, 1, 0, 0, 1}));
  CHECK(schur_y_2row(1, 0) == Polynomial::monomial(5));
  CHECK(schur_y_2row(0, 2) == Polynomial({0, 0, 1, 0, 0, 1, 0, 0, 1}));
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const Partition shape = a == 0 && b == 0 ? Partition{} : a == 0 ? Partition{b} : Partition{a + b, a};
      CHECK(schur_y_2row(a, b).to_series(40) == weight_genfun(shape, y14, 40));
    }
  }
}

TEST_CASE("closed form is refused where no product formula exists") {
  const Alphabet three = Alphabet::finite_weights({1, 2, 3});
  try {
    schur(Partition{2, 1}, three, 10, SchurStrategy::ClosedForm);
    FAIL("expected UnsupportedClosedForm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedClosedForm);
  }
  // still zero when the shape cannot fit
  CHECK(schur(Partition{1, 1, 1, 1}, three, 10, SchurStrategy::ClosedForm).is_zero());
}

TEST_CASE("strategies agree on two-row shapes") {
  const int order = 60;
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : generate(n, [] {
           PartitionConstraint c;
           c.max_length = 2;
           return c;
         }())) {
      CAPTURE(to_string(p));
      for (const Alphabet& a : {x5, y14}) {
        const QSeries ssyt = schur(p, a, order, SchurStrategy::SsytSum);
        CHECK(schur(p, a, order, SchurStrategy::JacobiTrudi) == ssyt);
        CHECK(schur(p, a, order, SchurStrategy::ClosedForm) == ssyt);
      }
    }
  }
}

TEST_CASE("strategies agree for the general modulus alphabets") {
  const int order = 40;
  for (int k = 2; k <= 3; ++k) {
    const Alphabet x = modulus_x_alphabet(k);
    const Alphabet y = modulus_y_alphabet(k, 2);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& p : generate(n, {})) {
        if (p.length() > 2 * k) continue;
        CAPTURE(to_string(p));
        CHECK(schur(p, y, order, SchurStrategy::SsytSum) == schur(p, y, order, SchurStrategy::JacobiTrudi));
        CHECK(schur(p, x, order, SchurStrategy::SsytSum) == schur(p, x, order, SchurStrategy::JacobiTrudi));
        CHECK(schur(p, x, order, SchurStrategy::ClosedForm) == schur(p, x, order, SchurStrategy::JacobiTrudi));
      }
    }
  }
}

TEST_CASE("more rows than letters gives zero") {
  const Alphabet two = Alphabet::finite_weights({2, 3});
  for (auto s : {SchurStrategy::SsytSum, SchurStrategy::JacobiTrudi}) {
    CHECK(schur(Partition{1, 1, 1}, two, 20, s).is_zero());
    CHECK(schur(Partition{3, 2, 1}, two, 20, s).is_zero());
  }
}

TEST_CASE("signed alphabet") {
  const Alphabet neg = Alphabet::finite_weights({1, 2}, -1);
  const Alphabet pos = Alphabet::finite_weights({1, 2});
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : generate(n, {})) {
      const QSeries plus = schur(p, pos, 30, SchurStrategy::SsytSum);
      const QSeries minus = schur(p, neg, 30, SchurStrategy::JacobiTrudi);
      CHECK(minus == (n % 2 == 0 ? plus : -plus));
      CHECK(schur(p, neg, 30, SchurStrategy::ClosedForm) == minus);
    }
  }
}
