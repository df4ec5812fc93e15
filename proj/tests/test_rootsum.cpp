#include "charvanish/rootsum.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "charvanish/errors.hpp"
#include "doctest.h"

using namespace charvanish;

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

RootMultiset ms(std::uint64_t p, int n, std::vector<std::uint64_t> exps) {
  return RootMultiset::make(p, n, std::move(exps));
}

// The block members a base of order p^level must generate.
std::vector<std::uint64_t> expected_members(std::uint64_t p, int n,
                                            std::uint64_t base, int level) {
  const std::uint64_t modulus = pow_u64(p, n);
  const std::uint64_t step = pow_u64(p, level - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k < p; ++k) {
    out.push_back((base * ((k * step + 1) % modulus)) % modulus);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t order_of(std::uint64_t e, std::uint64_t modulus) {
  std::uint64_t g = modulus;
  std::uint64_t x = e;
  while (x != 0) {
    const std::uint64_t t = g % x;
    g = x;
    x = t;
  }
  return modulus / g;
}

// Multiset of (level, members) pairs, order-insensitive block comparison.
std::multiset<std::pair<int, std::vector<std::uint64_t>>> block_multiset(
    const BlockDecomposition& d) {
  std::multiset<std::pair<int, std::vector<std::uint64_t>>> out;
  for (const auto& b : d.blocks) out.insert({b.level, b.members});
  return out;
}

// All multisets of size exactly t over exponents [0, modulus), as
// nondecreasing sequences.
void for_each_multiset(
    std::uint64_t modulus, std::size_t t,
    const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t from) {
    if (cur.size() == t) {
      fn(cur);
      return;
    }
    for (std::uint64_t e = from; e < modulus; ++e) {
      cur.push_back(e);
      rec(e);
      cur.pop_back();
    }
  };
  rec(0);
}

void check_block_invariants(const RootMultiset& s,
                            const BlockDecomposition& d) {
  const std::uint64_t modulus = s.modulus();

  // Conservation: block members reassemble the input multiset exactly.
  std::vector<std::uint64_t> collected;
  for (const auto& b : d.blocks) {
    collected.insert(collected.end(), b.members.begin(), b.members.end());
  }
  std::sort(collected.begin(), collected.end());
  CHECK(collected == s.exponents);

  int prev_level = s.n + 1;
  for (const auto& b : d.blocks) {
    // Levels within range and nonincreasing in extraction order.
    CHECK(b.level >= 1);
    CHECK(b.level <= s.n);
    CHECK(b.level <= prev_level);
    prev_level = b.level;

    // Base has order p^level and generates exactly these members.
    CHECK(order_of(b.base, modulus) == pow_u64(s.p, b.level));
    CHECK(b.members == expected_members(s.p, s.n, b.base, b.level));

    // Each block sums to zero on its own.
    CHECK(sum_of_roots(ms(s.p, s.n, b.members)).is_zero());

    // Rescaled members form the arithmetic progression
    // {b' + k*p^(level-1) mod p^level}.
    const std::uint64_t scale = pow_u64(s.p, s.n - b.level);
    const std::uint64_t small_mod = pow_u64(s.p, b.level);
    const std::uint64_t step = pow_u64(s.p, b.level - 1);
    REQUIRE(b.base % scale == 0);
    const std::uint64_t rescaled_base = b.base / scale;
    std::set<std::uint64_t> rescaled;
    for (std::uint64_t m : b.members) {
      REQUIRE(m % scale == 0);
      rescaled.insert(m / scale);
    }
    std::set<std::uint64_t> progression;
    for (std::uint64_t k = 0; k < s.p; ++k) {
      progression.insert((rescaled_base + k * step) % small_mod);
    }
    CHECK(rescaled == progression);
  }
}

}  // namespace

TEST_CASE("multiset validation") {
  CHECK_THROWS_AS(RootMultiset::make(4, 1, {0}), NotPrime);
  CHECK_THROWS_AS(RootMultiset::make(6, 2, {0}), NotPrime);
  CHECK_THROWS_AS(RootMultiset::make(3, 0, {0}), InstanceTooLarge);
  CHECK_THROWS_AS(RootMultiset::make(3, 2, {9}), InstanceTooLarge);
  CHECK_THROWS_AS(RootMultiset::make(2, 3, {0, 11}), InstanceTooLarge);

  const RootMultiset s = ms(3, 2, {7, 1, 4, 1});
  CHECK(s.exponents == std::vector<std::uint64_t>{1, 1, 4, 7});
  CHECK(s.modulus() == 9);
  CHECK(s.size() == 4);
}

TEST_CASE("sums of roots") {
  CHECK(sum_of_roots(ms(3, 2, {0, 3, 6})).is_zero());
  CHECK(sum_of_roots(ms(3, 1, {0})) == Cyclotomic(1));
  CHECK(sum_of_roots(ms(2, 1, {})).is_zero());

  const Cyclotomic one_plus_zeta3 = sum_of_roots(ms(3, 1, {0, 1}));
  CHECK_FALSE(one_plus_zeta3.is_zero());
  CHECK(one_plus_zeta3 == Cyclotomic(1) + Cyclotomic::root_of_unity(3, 1));
  CHECK(one_plus_zeta3.to_string() == "1 + 1*z(3)^1");

  // Full level-n progression: all p^n-th roots sum to zero.
  CHECK(sum_of_roots(ms(2, 3, {0, 1, 2, 3, 4, 5, 6, 7})).is_zero());
  CHECK(sum_of_roots(ms(5, 1, {0, 1, 2, 3, 4})).is_zero());
}

TEST_CASE("decompose on the worked examples") {
  {
    const BlockDecomposition d = decompose(ms(2, 1, {0, 1}));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].level == 1);
    CHECK(d.blocks[0].base == 1);
    CHECK(d.blocks[0].members == std::vector<std::uint64_t>{0, 1});
  }
  {
    const BlockDecomposition d = decompose(ms(2, 2, {0, 2, 1, 3}));
    REQUIRE(d.blocks.size() == 2);
    // Maximal order first: the level-2 block {1,3}, then the level-1 {0,2}.
    CHECK(d.blocks[0].level == 2);
    CHECK(d.blocks[0].members == std::vector<std::uint64_t>{1, 3});
    CHECK(d.blocks[1].level == 1);
    CHECK(d.blocks[1].members == std::vector<std::uint64_t>{0, 2});
  }
  {
    const BlockDecomposition d = decompose(ms(3, 2, {1, 4, 7}));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].level == 2);
    CHECK(d.blocks[0].base == 1);
    CHECK(d.blocks[0].members == std::vector<std::uint64_t>{1, 4, 7});
  }
}

TEST_CASE("decompose rejects nonvanishing multisets") {
  CHECK_THROWS_AS(decompose(ms(2, 2, {0, 1})), NotVanishing);
  CHECK_THROWS_AS(decompose(ms(3, 1, {0})), NotVanishing);
  try {
    decompose(ms(3, 1, {0, 1}));
    FAIL("expected NotVanishing");
  } catch (const NotVanishing& e) {
    CHECK(e.sum == "1 + 1*z(3)^1");
  }
}

TEST_CASE("random vanishing multisets round-trip through decompose") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    for (int n = 1; n <= 3; ++n) {
      for (int blocks = 0; blocks <= 4; ++blocks) {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
          const RootMultiset s = random_vanishing_multiset(p, n, blocks, seed);
          CHECK(s.size() == static_cast<std::size_t>(blocks) * p);
          CHECK(sum_of_roots(s).is_zero());
          const BlockDecomposition d = decompose(s);
          CHECK(d.blocks.size() == static_cast<std::size_t>(blocks));
          check_block_invariants(s, d);
        }
      }
    }
  }
}

TEST_CASE("random multiset generation is deterministic per seed") {
  const RootMultiset a = random_vanishing_multiset(3, 3, 4, 99);
  const RootMultiset b = random_vanishing_multiset(3, 3, 4, 99);
  CHECK(a.exponents == b.exponents);
  const RootMultiset c = random_vanishing_multiset(3, 3, 4, 100);
  // Different seeds may collide in principle, but not for this pair.
  CHECK(a.exponents != c.exponents);

  // With p=2, n=1 the only block is {0,1}.
  const RootMultiset d = random_vanishing_multiset(2, 1, 1, 7);
  CHECK(d.exponents == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("randomized selection policy reaches the same block multiset") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const RootMultiset s = random_vanishing_multiset(3, 3, 4, seed);
    const BlockDecomposition base = decompose(s);
    for (std::uint64_t pick = 0; pick < 5; ++pick) {
      const BlockDecomposition alt =
          decompose(s, SelectionPolicy::kRandomized, pick);
      CHECK(block_multiset(alt) == block_multiset(base));
      check_block_invariants(s, alt);
    }
  }
}

TEST_CASE("distinct blocks with multiplicity") {
  const RootMultiset s = ms(2, 1, {0, 1, 0, 1});
  const BlockDecomposition d = decompose(s);
  REQUIRE(d.blocks.size() == 2);
  const auto distinct = d.distinct_with_multiplicity();
  REQUIRE(distinct.size() == 1);
  CHECK(distinct[0].first.members == std::vector<std::uint64_t>{0, 1});
  CHECK(distinct[0].second == 2);
}

TEST_CASE("brute-force oracle basics") {
  CHECK_FALSE(brute_force_decompose(ms(2, 2, {0, 1})).has_value());
  CHECK_FALSE(brute_force_decompose(ms(3, 1, {0, 1, 1})).has_value());
  CHECK(brute_force_decompose(ms(2, 1, {})).has_value());

  const auto d = brute_force_decompose(ms(2, 2, {0, 2, 1, 3}));
  REQUIRE(d.has_value());
  CHECK(block_multiset(*d) == block_multiset(decompose(ms(2, 2, {0, 2, 1, 3}))));

  CHECK_THROWS_AS(
      brute_force_decompose(ms(2, 1, {0, 1, 0, 1, 0, 1}), 4),
      InstanceTooLarge);
}

TEST_CASE("oracle agreement over all small multisets") {
  struct Space {
    std::uint64_t p;
    int n;
    std::size_t max_t;
  };
  const std::vector<Space> spaces = {
      {2, 1, 6}, {2, 2, 6}, {2, 3, 6}, {3, 1, 6}, {3, 2, 6}, {5, 1, 5},
  };
  for (const Space& sp : spaces) {
    const std::uint64_t modulus = pow_u64(sp.p, sp.n);
    for (std::size_t t = 0; t <= sp.max_t; ++t) {
      for_each_multiset(modulus, t, [&](const std::vector<std::uint64_t>& e) {
        const RootMultiset s = ms(sp.p, sp.n, e);
        const bool vanishes = sum_of_roots(s).is_zero();
        const auto oracle = brute_force_decompose(s);
        // The partition search succeeds exactly on vanishing multisets.
        CHECK(oracle.has_value() == vanishes);
        if (vanishes) {
          const BlockDecomposition d = decompose(s);
          CHECK(block_multiset(d) == block_multiset(*oracle));
          check_block_invariants(s, d);
        } else {
          CHECK_THROWS_AS(decompose(s), NotVanishing);
        }
      });
    }
  }
}

TEST_CASE("divisibility: vanishing forces p dividing the count") {
  struct Space {
    std::uint64_t p;
    int n;
  };
  for (const Space& sp : {Space{2, 1}, Space{2, 2}, Space{3, 1}}) {
    const std::uint64_t modulus = pow_u64(sp.p, sp.n);
    for (std::size_t t = 1; t <= 2 * sp.p; ++t) {
      for_each_multiset(modulus, t, [&](const std::vector<std::uint64_t>& e) {
        if (sum_of_roots(ms(sp.p, sp.n, e)).is_zero()) {
          CHECK(t % sp.p == 0);
        }
      });
    }
  }
}
