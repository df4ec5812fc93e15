#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "charvanish/errors.hpp"
#include "charvanish/permgroup.hpp"

using namespace charvanish;

namespace {

PermutationGroup symmetric(int n) {
  std::vector<std::vector<int>> big;
  std::vector<int> cycle;
  for (int i = 1; i <= n; ++i) cycle.push_back(i);
  return build_group(n, {Permutation::from_cycles(n, {cycle}),
                         Permutation::from_cycles(n, {{1, 2}})});
}

PermutationGroup alternating4() {
  return build_group(4, {Permutation::from_cycles(4, {{1, 2, 3}}),
                         Permutation::from_cycles(4, {{2, 3, 4}})});
}

PermutationGroup dihedral8() {
  return build_group(4, {Permutation::from_cycles(4, {{1, 2, 3, 4}}),
                         Permutation::from_cycles(4, {{1, 3}})});
}

PermutationGroup quaternion8() {
  return build_group(
      8, {Permutation::from_cycles(8, {{1, 3, 2, 4}, {5, 7, 6, 8}}),
          Permutation::from_cycles(8, {{1, 5, 2, 6}, {3, 8, 4, 7}})});
}

PermutationGroup klein4() {
  return build_group(4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                         Permutation::from_cycles(4, {{1, 3}, {2, 4}})});
}

PermutationGroup cyclic(int n) {
  std::vector<int> cycle;
  for (int i = 1; i <= n; ++i) cycle.push_back(i);
  return build_group(n, {Permutation::from_cycles(n, {cycle})});
}

// Conjugacy partition by conjugating every element by every element.
std::vector<std::set<Permutation>> brute_classes(const PermutationGroup& g) {
  const auto all = g.elements();
  std::vector<std::set<Permutation>> classes;
  std::set<Permutation> used;
  for (const auto& x : all) {
    if (used.contains(x)) continue;
    std::set<Permutation> cls;
    for (const auto& h : all) cls.insert(conjugate(x, h));
    used.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

TEST_CASE("orders of standard groups") {
  CHECK(PermutationGroup::trivial(3).order() == 1);
  CHECK(symmetric(3).order() == 6);
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(5).order() == 120);
  CHECK(symmetric(6).order() == 720);
  CHECK(alternating4().order() == 12);
  CHECK(dihedral8().order() == 8);
  CHECK(quaternion8().order() == 8);
  CHECK(klein4().order() == 4);
  CHECK(cyclic(12).order() == 12);
}

TEST_CASE("chain consistency: transversal product equals order") {
  for (const auto& g : {symmetric(5), alternating4(), quaternion8(),
                        dihedral8(), cyclic(9)}) {
    CHECK(g.transversal_product() == g.order());
  }
}

TEST_CASE("membership by sifting matches exhaustive membership") {
  const auto a4 = alternating4();
  const auto s4 = symmetric(4);
  const auto a4_elems = a4.elements();
  std::set<Permutation> a4_set(a4_elems.begin(), a4_elems.end());
  int inside = 0;
  for (const auto& e : s4.elements()) {
    const bool claimed = a4.contains(e);
    CHECK(claimed == a4_set.contains(e));
    if (claimed) ++inside;
  }
  CHECK(inside == 12);
  CHECK_THROWS_AS(a4.contains(Permutation(5)), DegreeMismatch);
}

TEST_CASE("element enumeration is exact and duplicate-free") {
  for (const auto& g : {symmetric(4), quaternion8(), klein4()}) {
    const auto elems = g.elements();
    CHECK(Integer(static_cast<unsigned long>(elems.size())) == g.order());
    std::set<Permutation> uniq(elems.begin(), elems.end());
    CHECK(uniq.size() == elems.size());
    for (const auto& e : elems) CHECK(g.contains(e));
  }
  CHECK_THROWS_AS(symmetric(6).elements(100), GroupTooLarge);
}

TEST_CASE("conjugacy classes match the brute-force partition") {
  for (const auto& g : {symmetric(3), symmetric(4), alternating4(),
                        dihedral8(), quaternion8(), cyclic(6)}) {
    const auto classes = conjugacy_classes(g);
    auto brute = brute_classes(g);
    CHECK(classes.size() == brute.size());
    Integer total = 0;
    for (const auto& c : classes) {
      CHECK(c.size == Integer(static_cast<unsigned long>(c.members.size())));
      total += c.size;
      std::set<Permutation> as_set(c.members.begin(), c.members.end());
      CHECK(std::count(brute.begin(), brute.end(), as_set) == 1);
      CHECK(c.representative == *as_set.begin());
      CHECK(c.element_order == c.representative.element_order());
    }
    CHECK(total == g.order());
    // Canonical order: identity first, then by element order.
    CHECK(classes.front().representative.is_identity());
    for (std::size_t i = 1; i < classes.size(); ++i) {
      CHECK(classes[i - 1].element_order <= classes[i].element_order);
    }
  }
}

TEST_CASE("Sym(4) class sizes in canonical order") {
  const auto classes = conjugacy_classes(symmetric(4));
  std::vector<unsigned long> sizes;
  for (const auto& c : classes) sizes.push_back(c.size.get_ui());
  CHECK(sizes == std::vector<unsigned long>{1, 3, 6, 8, 6});
  std::vector<std::uint64_t> orders;
  for (const auto& c : classes) orders.push_back(c.element_order);
  CHECK(orders == std::vector<std::uint64_t>{1, 2, 2, 3, 4});
}

TEST_CASE("center computation") {
  CHECK(center(symmetric(4)).is_trivial());
  CHECK(center(symmetric(3)).is_trivial());
  CHECK(center(quaternion8()).order() == 2);
  CHECK(center(dihedral8()).order() == 2);
  const auto c12 = cyclic(12);
  CHECK(center(c12).order() == 12);
  // The center of Q8 is the unique element of order 2.
  const auto z = center(quaternion8());
  CHECK(z.generators().size() == 1);
  CHECK(z.generators()[0].element_order() == 2);
}

TEST_CASE("Sylow subgroups have the right order and are p-groups") {
  const std::vector<PermutationGroup> groups{
      symmetric(3), symmetric(4), symmetric(5), alternating4(),
      dihedral8(), quaternion8(), cyclic(12), klein4()};
  for (const auto& g : groups) {
    const auto n = checked_u64(g.order(), "order");
    for (auto p : prime_divisors(n)) {
      const auto sylow = sylow_subgroup(g, p);
      const auto so = checked_u64(sylow.order(), "sylow order");
      CHECK(so == p_part(n, p));
      for (const auto& s : sylow.generators()) CHECK(g.contains(s));
      CHECK(so == p_part(so, p));
    }
  }
  CHECK(sylow_subgroup(symmetric(4), 5).is_trivial());
  CHECK_THROWS_AS(sylow_subgroup(symmetric(4), 6), NotPrime);
}

TEST_CASE("normality") {
  const auto s3 = symmetric(3);
  const auto a3 = build_group(3, {Permutation::from_cycles(3, {{1, 2, 3}})});
  const auto flip = build_group(3, {Permutation::from_cycles(3, {{1, 2}})});
  CHECK(is_normal(s3, a3));
  CHECK_FALSE(is_normal(s3, flip));
  const auto a4 = alternating4();
  CHECK(is_normal(symmetric(4), a4));
  CHECK(is_normal(symmetric(4), klein4()));
  CHECK_THROWS_AS(is_normal(a4, build_group(4, {Permutation::from_cycles(
                                                   4, {{1, 2}})})),
                  NotSubgroup);
}

TEST_CASE("abelian and nilpotent predicates") {
  CHECK(is_abelian(cyclic(12)));
  CHECK(is_abelian(klein4()));
  CHECK_FALSE(is_abelian(symmetric(3)));
  CHECK_FALSE(is_abelian(quaternion8()));

  CHECK(is_nilpotent(cyclic(12)));
  CHECK(is_nilpotent(dihedral8()));
  CHECK(is_nilpotent(quaternion8()));
  CHECK_FALSE(is_nilpotent(symmetric(3)));
  CHECK_FALSE(is_nilpotent(symmetric(4)));
  CHECK_FALSE(is_nilpotent(alternating4()));
}

TEST_CASE("p-core and Fitting subgroup") {
  const auto s4 = symmetric(4);
  CHECK(p_core(s4, 2).order() == 4);  // the Klein four-group
  CHECK(p_core(s4, 3).is_trivial());
  CHECK(fitting_subgroup(s4).order() == 4);

  const auto s3 = symmetric(3);
  CHECK(p_core(s3, 2).is_trivial());
  CHECK(p_core(s3, 3).order() == 3);
  CHECK(fitting_subgroup(s3).order() == 3);

  const auto a4 = alternating4();
  CHECK(p_core(a4, 2).order() == 4);
  CHECK(fitting_subgroup(a4).order() == 4);

  // Nilpotent groups are their own Fitting subgroup.
  CHECK(fitting_subgroup(quaternion8()).order() == 8);
  CHECK(fitting_subgroup(cyclic(12)).order() == 12);

  // The 2-core of S4 really is the set of elements all of whose conjugates
  // lie in one Sylow 2-subgroup.
  const auto core = p_core(s4, 2);
  for (const auto& e : core.elements()) {
    for (const auto& h : s4.elements()) {
      CHECK(core.contains(conjugate(e, h)));
    }
  }
}

TEST_CASE("intersection and normalizer") {
  const auto s4 = symmetric(4);
  const auto a4 = alternating4();
  const auto d8 = dihedral8();
  CHECK(intersection(a4, d8).order() == 4);  // Klein four-group
  CHECK(intersection(a4, a4).order() == 12);

  const auto flip = build_group(3, {Permutation::from_cycles(3, {{1, 2}})});
  const auto s3 = symmetric(3);
  CHECK(normalizer(s3, flip).order() == 2);
  const auto a3 = build_group(3, {Permutation::from_cycles(3, {{1, 2, 3}})});
  CHECK(normalizer(s3, a3).order() == 6);
  CHECK(normalizer(s4, klein4()).order() == 24);
}

TEST_CASE("derived subgroups") {
  CHECK(derived_subgroup(symmetric(3)).order() == 3);
  CHECK(derived_subgroup(symmetric(4)).order() == 12);
  CHECK(derived_subgroup(alternating4()).order() == 4);
  CHECK(derived_subgroup(quaternion8()).order() == 2);
  CHECK(derived_subgroup(cyclic(12)).is_trivial());
  CHECK(derived_subgroup(klein4()).is_trivial());
  // G' is normal and the quotient order counts linear characters later on.
  const auto s4 = symmetric(4);
  CHECK(is_normal(s4, derived_subgroup(s4)));
}

TEST_CASE("subgroup_from_elements reduces generators") {
  const auto s4 = symmetric(4);
  const auto rebuilt = subgroup_from_elements(4, s4.elements());
  CHECK(rebuilt.order() == 24);
  CHECK(rebuilt.generators().size() <= 4);
}

TEST_CASE("normal subgroup enumeration") {
  auto orders_of = [](const std::vector<PermutationGroup>& subs) {
    std::vector<unsigned long> out;
    for (const auto& h : subs) out.push_back(h.order().get_ui());
    return out;
  };

  CHECK(orders_of(normal_subgroups(symmetric(3))) ==
        std::vector<unsigned long>{1, 3, 6});
  CHECK(orders_of(normal_subgroups(symmetric(4))) ==
        std::vector<unsigned long>{1, 4, 12, 24});
  CHECK(orders_of(normal_subgroups(alternating4())) ==
        std::vector<unsigned long>{1, 4, 12});
  CHECK(orders_of(normal_subgroups(quaternion8())) ==
        std::vector<unsigned long>{1, 2, 4, 4, 4, 8});
  CHECK(orders_of(normal_subgroups(cyclic(6))) ==
        std::vector<unsigned long>{1, 2, 3, 6});

  for (const auto& h : normal_subgroups(symmetric(4))) {
    CHECK(is_normal(symmetric(4), h));
  }
}
