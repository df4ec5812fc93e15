#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "charvanish/errors.hpp"
#include "charvanish/permutation.hpp"

using namespace charvanish;

TEST_CASE("identity construction and recognition") {
  Permutation id(5);
  CHECK(id.degree() == 5);
  CHECK(id.is_identity());
  CHECK(id.to_cycle_string() == "()");
  CHECK(id.element_order() == 1);
}

TEST_CASE("cycle construction round-trips through images") {
  auto p = Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}});
  CHECK(p.image(0) == 1);
  CHECK(p.image(1) == 2);
  CHECK(p.image(2) == 0);
  CHECK(p.image(3) == 4);
  CHECK(p.image(4) == 3);
  CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
  CHECK(p.element_order() == 6);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}),
                  MalformedPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3}), MalformedPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), MalformedPermutation);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2, 2}}),
                  MalformedPermutation);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}),
                  MalformedPermutation);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}}),
                  MalformedPermutation);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 2}, {2, 3}}),
                  MalformedPermutation);
}

TEST_CASE("composition applies the right factor first") {
  auto p = Permutation::from_cycles(3, {{1, 2}});
  auto q = Permutation::from_cycles(3, {{2, 3}});
  // (p * q)(2) = p(q(2)) = p(3) = 3 in 1-based terms.
  auto pq = p * q;
  CHECK(pq.image(1) == 2);
  CHECK(pq.to_cycle_string() == "(1 2 3)");
  auto qp = q * p;
  CHECK(qp.to_cycle_string() == "(1 3 2)");
  CHECK_THROWS_AS(p * Permutation(4), DegreeMismatch);
}

TEST_CASE("inverse and power agree with repeated composition") {
  auto p = Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.power(0).is_identity());
  CHECK(p.power(6).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(p.power(5) == p.inverse());
  Permutation acc(6);
  for (int i = 0; i < 4; ++i) acc = p * acc;
  CHECK(p.power(4) == acc);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  auto p = Permutation::from_cycles(9, {{1, 2}, {3, 4, 5}, {6, 7, 8, 9}});
  CHECK(p.element_order() == 12);
  CHECK(p.power(12).is_identity());
  CHECK_FALSE(p.power(6).is_identity());
  CHECK_FALSE(p.power(4).is_identity());
}

TEST_CASE("conjugation relabels cycles") {
  auto x = Permutation::from_cycles(4, {{1, 2}});
  auto g = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
  CHECK(conjugate(x, g).to_cycle_string() == "(3 4)");
  CHECK(commute(x, Permutation::from_cycles(4, {{3, 4}})));
  CHECK_FALSE(commute(x, Permutation::from_cycles(4, {{2, 3}})));
}

TEST_CASE("random permutations satisfy group axioms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> images(8);
    for (int i = 0; i < 8; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    Permutation p{std::vector<int>(images)};
    std::shuffle(images.begin(), images.end(), rng);
    Permutation q{std::vector<int>(images)};

    CHECK((p * p.inverse()).is_identity());
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    CHECK(p.power(static_cast<std::int64_t>(p.element_order()))
              .is_identity());
    // Cycle text round-trip.
    auto cycles = p.cycles();
    std::vector<std::vector<int>> one_based;
    for (auto& c : cycles) {
      std::vector<int> shifted;
      for (int v : c) shifted.push_back(v + 1);
      one_based.push_back(shifted);
    }
    CHECK(Permutation::from_cycles(8, one_based) == p);
  }
}
