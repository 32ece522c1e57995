#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rrc/error.hpp"
#include "rrc/harness.hpp"
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

void check_status_invariant(const IdentityReport& r) {
  CHECK((r.status == Status::Fail) == r.first_mismatch.has_value());
}

nlohmann::ordered_json without_timing(const IdentityReport& r) {
  auto j = to_json(r);
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("rr") {
  const auto oracle_counts = oracle::partition_counts(6, [](int p) { return p % 5 == 1 || p % 5 == 4; });
  CHECK(rr_sum_side(RrWhich::First, 6) == series(6, oracle_counts));
  CHECK(rr_sum_side(RrWhich::First, 6) == series(6, {1, 1, 1, 1, 2, 2, 3}));
  CHECK(verify_rr(RrWhich::First, 6).status == Status::Pass);
  const auto zero = verify_rr(RrWhich::Second, 0);
  CHECK(zero.status == Status::Pass);
  CHECK(zero.order == 0);
  CHECK(verify_rr(RrWhich::Second, 120).status == Status::Pass);
}

TEST_CASE("rewrite") {
  CHECK(rewrite_term(0, 20) == QSeries::one(20));
  CHECK(rewrite_term(1, 30) == over(30, {1}).shifted(1));
  CHECK(rewrite_term(2, 30) == over(30, {1, 2}).shifted(4));
  for (int n = 0; n <= 6; ++n) {
    QSeries direct = QSeries::one(60);
    for (int j = 1; j <= n; ++j) direct.div_one_minus(j);
    CHECK(rewrite_term(n, 60) == direct.shifted(std::min(n * n, 61)));
  }
  CHECK(verify_rr_sum_rewrite(100).status == Status::Pass);
}

TEST_CASE("cauchy") {
  const Alphabet x = modulus_x_alphabet(1);
  CHECK(x == Alphabet::geometric(0, 5));
  CHECK(modulus_y_alphabet(1, 2) == Alphabet::finite_weights({1, 4}));
  CHECK(allowed_residues(2, 2) == std::vector<int>{1, 3, 4, 6});
  CHECK(verify_cauchy_restricted(x, modulus_y_alphabet(1, 2), 20, 2).status == Status::Pass);
  CHECK(verify_cauchy_restricted(modulus_x_alphabet(2), modulus_y_alphabet(2, 2), 20, 4).status == Status::Pass);
  CHECK(verify_cauchy_restricted(x, modulus_y_alphabet(1, 2), 0, 2).status == Status::Pass);

  FactoredProduct mod7;
  for (int j : {1, 3, 4, 6}) mod7.times_poch_infinite(j, 7, -1);
  CHECK(cauchy_product(modulus_x_alphabet(2), modulus_y_alphabet(2, 2), 40) == expand(mod7, 40));

  CHECK_THROWS_AS(verify_cauchy_restricted(x, modulus_y_alphabet(2, 2), 20, 2), Error);
}

TEST_CASE("shape enumeration bound") {
  const auto shapes = shapes_within(modulus_x_alphabet(1), modulus_y_alphabet(1, 2), 2, 10);
  for (const auto& s : shapes) {
    CHECK(s.length() <= 2);
    CHECK(*min_tableau_weight(s, modulus_x_alphabet(1)) + *min_tableau_weight(s, modulus_y_alphabet(1, 2)) <= 10);
  }
  // (5) costs 5, (4,1) costs 4 + 5 + 4 = 13 > 10
  CHECK(std::find(shapes.begin(), shapes.end(), Partition{5}) != shapes.end());
  CHECK(std::find(shapes.begin(), shapes.end(), Partition{4, 1}) == shapes.end());
}

TEST_CASE("tables") {
  const auto t1 = verify_table1();
  CHECK(t1.status == Status::Pass);
  const auto classes1 = table1_classes();
  REQUIRE(classes1.size() == 3);
  CHECK(class_genfun(classes1[2], 40) == over(40, {5}).shifted(3));

  CHECK(verify_table2().status == Status::Pass);
  const auto classes2 = table2_classes();
  CHECK(classes2.size() == 25);
  CHECK(classes2.back().expected_numerator == Polynomial::monomial(10));
  CHECK(table2_numerator() == Polynomial({0, 0, 0, 0, 1, 1, 2, 2, 3, 2, 3, 2, 3, 2, 2, 1, 1}));
  Polynomial sum;
  for (const auto& c : classes2) sum += c.expected_numerator;
  CHECK(sum == table2_numerator());
}

TEST_CASE("rsk check") {
  CHECK(verify_proposition_rsk(0).status == Status::Pass);
  CHECK(verify_proposition_rsk(40).status == Status::Pass);
}

TEST_CASE("xyrr") {
  CHECK(verify_xyrr(40, 6).status == Status::Pass);
  CHECK(verify_xyrr(0, 0).status == Status::Pass);
}

TEST_CASE("finite identity") {
  CHECK(verify_finite_identity(1).status == Status::Pass);
  CHECK(verify_finite_identity(12).status == Status::Pass);
  CHECK_THROWS_AS(verify_finite_identity(0), Error);
  // N=1, M=0 and N=2, M=0 by hand
  CHECK(gauss_binomial(1, 0) * (Polynomial::constant(1) - Polynomial::monomial(1)) == poch_polynomial(1, 1, 1));
  CHECK(gauss_binomial(2, 0) * (Polynomial::constant(1) - Polynomial::monomial(2)) ==
        Polynomial({1, 0, -1}));
}

TEST_CASE("genthm") {
  FactoredProduct a1;
  a1.times_one_minus(3, -1);
  FactoredProduct a4;
  a4.negate().times_q(3).times_one_minus(3, -1);
  CHECK(genthm_coefficient(1, 2, 1) == a1);
  CHECK(genthm_coefficient(1, 2, 4) == a4);
  CHECK(verify_genthm(1, 2, 60).status == Status::Pass);
  CHECK(modulus_y_alphabet(1, 1) == Alphabet::finite_weights({2, 3}));
  CHECK(verify_genthm(1, 1, 80).status == Status::Pass);
  CHECK(verify_genthm(3, 2, 60).status == Status::Pass);
  CHECK_THROWS_AS(verify_genthm(1, 5, 20), Error);
  CHECK_THROWS_AS(genthm_coefficient(1, 2, 2), Error);
  try {
    allowed_residues(1, 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParams);
  }
}

TEST_CASE("borwein") {
  CHECK(verify_borwein(0, 20).status == Status::Pass);
  CHECK(verify_borwein(1, 20).status == Status::Pass);
  // n = 1 by hand: 1 - (q + q^2) + q^3
  const Alphabet neg = Alphabet::finite_weights({1, 2}, -1);
  const QSeries hand = QSeries::one(20) + schur(Partition{1}, neg, 20, SchurStrategy::SsytSum) +
                       schur(Partition{1, 1}, neg, 20, SchurStrategy::SsytSum);
  CHECK(hand == poch_finite(1, 1, 2, 20));
  CHECK(verify_borwein(6, 40).status == Status::Pass);
}

TEST_CASE("macmahon") {
  CHECK(verify_macmahon(0).status == Status::Pass);
  CHECK(verify_macmahon(100).status == Status::Pass);
}

TEST_CASE("speculation probe") {
  SpeculationConfig one;
  one.order = 30;
  const auto r1 = probe_speculation(one);
  REQUIRE(r1.status == Status::Pass);
  REQUIRE(r1.solution.has_value());
  CHECK(r1.solution->unique);
  const auto& subs = r1.solution->subsets;
  REQUIRE(subs.size() == 2);
  for (const auto& s : subs) {
    REQUIRE(s.subset.size() == 1);
    auto [n, d] = as_rational(genthm_coefficient(1, 2, s.subset[0]));
    CHECK(same_rational(s.numerator, s.denominator, n, d));
  }

  SpeculationConfig full = one;
  full.rows = 2;
  const auto r2 = probe_speculation(full);
  REQUIRE(r2.status == Status::Pass);
  REQUIRE(r2.solution->subsets.size() == 1);
  CHECK(same_rational(r2.solution->subsets[0].numerator, r2.solution->subsets[0].denominator,
                      Polynomial::constant(1), Polynomial::constant(1)));

  SpeculationConfig bad = one;
  bad.rows = 3;
  CHECK_THROWS_AS(probe_speculation(bad), Error);
  bad.rows = 0;
  CHECK_THROWS_AS(probe_speculation(bad), Error);
}

TEST_CASE("speculation probe is honest about tiny orders") {
  SpeculationConfig tiny;
  tiny.order = 8;
  const auto r = probe_speculation(tiny);
  CHECK(r.status != Status::Fail);
  check_status_invariant(r);
  if (r.status == Status::Inconclusive) CHECK(!r.first_mismatch.has_value());
}

TEST_CASE("same_rational") {
  CHECK(same_rational(Polynomial({1, 1}), Polynomial({1, -1}), Polynomial({2, 2}), Polynomial({2, -2})));
  CHECK(!same_rational(Polynomial({1}), Polynomial({1, -1}), Polynomial({1}), Polynomial({1, 1})));
}

TEST_CASE("negative controls fail at the minimal exponent") {
  const CheckOptions m{true, 1};
  struct Expect {
    IdentityReport report;
    int exponent;
  };
  const std::vector<Expect> cases = {
      {verify_rr(RrWhich::First, 60, m), 3},
      {verify_rr(RrWhich::Second, 60, m), 3},
      {verify_rr_sum_rewrite(60, m), 5},
      {verify_cauchy_restricted(modulus_x_alphabet(1), modulus_y_alphabet(1, 2), 40, 2, m), 4},
      {verify_table1(m), 3},
      {verify_table2(m), 10},
      {verify_proposition_rsk(20, m), 4},
      {verify_xyrr(40, 4, m), 3},
      {verify_finite_identity(6, m), 1},
      {verify_genthm(1, 2, 40, m), 4},
      {verify_borwein(4, 20, m), 1},
      {verify_macmahon(30, m), 3},
  };
  for (const auto& c : cases) {
    CAPTURE(c.report.identity);
    CHECK(c.report.status == Status::Fail);
    REQUIRE(c.report.first_mismatch.has_value());
    CHECK(c.report.first_mismatch->exponent == c.exponent);
    CHECK(c.report.first_mismatch->lhs != c.report.first_mismatch->rhs);
    check_status_invariant(c.report);
  }
}

TEST_CASE("pass reports satisfy the status invariant") {
  for (const auto& r : {verify_rr(RrWhich::First, 30), verify_table2(), verify_genthm(2, 1, 30)}) {
    check_status_invariant(r);
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto x = modulus_x_alphabet(2);
  const auto y = modulus_y_alphabet(2, 1);
  const auto serial = verify_cauchy_restricted(x, y, 30, 4, {false, 1});
  const auto threaded = verify_cauchy_restricted(x, y, 30, 4, {false, 3});
  CHECK(without_timing(serial) == without_timing(threaded));
  CHECK(row_restricted_cauchy_sum(x, y, 2, 30, 1) == row_restricted_cauchy_sum(x, y, 2, 30, 4));
}

TEST_CASE("json report layout") {
  const auto j = to_json(verify_rr(RrWhich::First, 5, {true, 1}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"identity", "params", "order", "status", "first_mismatch", "solution",
                                         "details", "elapsed_ms"});
  CHECK(j["status"] == "Fail");
  CHECK(j["first_mismatch"]["exponent"] == 3);
  CHECK(j["first_mismatch"]["lhs"].is_string());
  CHECK(j["solution"].is_null());
}
