#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "rrc/error.hpp"
#include "rrc/factored.hpp"
#include "rrc/partitions.hpp"

using namespace rrc;

namespace {

bool rr_part(int p) { return p % 5 == 1 || p % 5 == 4; }

}  // namespace

TEST_CASE("partition validation") {
  CHECK(Partition{4, 2, 1}.weight() == 7);
  CHECK(Partition{}.empty());
  CHECK_THROWS(Partition{1, 2});
  CHECK_THROWS(Partition{3, 0});
  CHECK(to_string(Partition{4, 2, 1}) == "(4,2,1)");
}

TEST_CASE("generate") {
  CHECK(generate(0, {}) == std::vector<Partition>{Partition{}});
  CHECK(generate(4, residues_mod(5, {1, 4})) == std::vector<Partition>{Partition{4}, Partition{1, 1, 1, 1}});
  CHECK(generate(6, gap_at_least(2)) == std::vector<Partition>{Partition{6}, Partition{5, 1}, Partition{4, 2}});
  CHECK(generate(5, {}).size() == 7);
  CHECK_THROWS(generate(-1, {}));
}

TEST_CASE("generate is deterministic and lexicographically decreasing") {
  const auto ps = generate(9, {});
  for (std::size_t t = 1; t < ps.size(); ++t) CHECK(ps[t - 1].parts() > ps[t].parts());
  CHECK(ps == generate(9, {}));
}

TEST_CASE("count") {
  CHECK(count(0, residues_mod(5, {1, 4})) == 1);
  CHECK(count(0, gap_at_least(2, 2)) == 1);
  CHECK(count(6, residues_mod(5, {1, 4})) == 3);
  CHECK(count(6, residues_mod(5, {1, 4})) == oracle::count_if(6, [](const oracle::Parts& p) {
          return oracle::parts_in(p, rr_part);
        }));
}

TEST_CASE("count agrees with naive enumeration") {
  const std::vector<std::pair<PartitionConstraint, std::function<bool(const oracle::Parts&)>>> cases = {
      {residues_mod(5, {1, 4}), [](const oracle::Parts& p) { return oracle::parts_in(p, rr_part); }},
      {residues_mod(5, {2, 3}),
       [](const oracle::Parts& p) { return oracle::parts_in(p, [](int x) { return x % 5 == 2 || x % 5 == 3; }); }},
      {gap_at_least(2), [](const oracle::Parts& p) { return oracle::gap_at_least(p, 2, 1); }},
      {gap_at_least(2, 2), [](const oracle::Parts& p) { return oracle::gap_at_least(p, 2, 2); }},
  };
  for (const auto& [c, keep] : cases) {
    for (int n = 0; n <= 30; ++n) CHECK(count(n, c) == static_cast<std::uint64_t>(oracle::count_if(n, keep)));
  }
}

TEST_CASE("bounded length and part") {
  PartitionConstraint c;
  c.max_length = 2;
  c.max_part = 3;
  CHECK(generate(4, c) == std::vector<Partition>{Partition{3, 1}, Partition{2, 2}});
  for (int n = 0; n <= 12; ++n) {
    CHECK(count(n, c) == static_cast<std::uint64_t>(oracle::count_if(n, [](const oracle::Parts& p) {
            return p.size() <= 2 && (p.empty() || p[0] <= 3);
          })));
  }
}

TEST_CASE("generated partitions are distinct and admitted") {
  const auto cs = {residues_mod(5, {1, 4}), gap_at_least(2), gap_at_least(2, 2), residues_mod(3, {0, 2})};
  for (const auto& c : cs) {
    for (int n = 0; n <= 25; ++n) {
      const auto ps = generate(n, c);
      CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
      CHECK(ps.size() == count(n, c));
      for (const auto& p : ps) {
        CHECK(c.admits(p));
        CHECK(p.weight() == n);
      }
    }
  }
}

TEST_CASE("counting series matches the product side") {
  const int order = 60;
  FactoredProduct first;
  first.times_poch_infinite(1, 5, -1).times_poch_infinite(4, 5, -1);
  CHECK(counting_series(residues_mod(5, {1, 4}), order) == expand(first, order));
  FactoredProduct second;
  second.times_poch_infinite(2, 5, -1).times_poch_infinite(3, 5, -1);
  CHECK(counting_series(residues_mod(5, {2, 3}), order) == expand(second, order));
}

TEST_CASE("invalid residues are rejected") {
  CHECK_THROWS(count(3, residues_mod(5, {5})));
  CHECK_THROWS(count(3, residues_mod(0, {})));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{4, 2, 1}) == (Partition{3, 2, 1, 1}));
  std::mt19937 rng(3);
  for (int n = 0; n <= 14; ++n) {
    const auto ps = generate(n, {});
    for (int t = 0; t < 5; ++t) {
      const Partition& p = ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).weight() == n);
    }
  }
}

TEST_CASE("mod5_decompose") {
  CHECK(mod5_decompose(Partition{4}).pairs == std::vector<LetterPair>{{4, 0}});
  CHECK(mod5_decompose(Partition{6, 1}).pairs == std::vector<LetterPair>{{1, 0}, {1, 5}});
  CHECK(mod5_decompose(Partition{}).pairs.empty());
  CHECK(mod5_decompose(Partition{11, 4}).pairs == std::vector<LetterPair>{{1, 10}, {4, 0}});
  try {
    mod5_decompose(Partition{3});
    FAIL("expected BadResidue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadResidue);
  }
}

TEST_CASE("mod5_decompose is injective and weight-preserving") {
  std::set<std::vector<LetterPair>> seen;
  for (int n = 0; n <= 30; ++n) {
    for (const auto& p : generate(n, residues_mod(5, {1, 4}))) {
      const Biword w = mod5_decompose(p);
      CHECK(w.is_sorted());
      int total = 0;
      for (const auto& lp : w.pairs) total += lp.record + lp.insert;
      CHECK(total == n);
      CHECK(seen.insert(w.pairs).second);
    }
  }
}
