#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charvanish/numeric.hpp"
#include "charvanish/permutation.hpp"

namespace charvanish {

inline constexpr std::uint64_t kDefaultElementsBound = 1'000'000;

// Permutation group with a stabilizer-chain backbone.  Immutable after
// construction; the chain is built deterministically (base points are the
// smallest moved points, generators processed in input order), so order,
// membership and element enumeration are reproducible run to run.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators);
  static PermutationGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Integer& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation& p) const;

  // All elements, each exactly once, in a deterministic order.
  // Throws GroupTooLarge if the order exceeds `bound`.
  std::vector<Permutation> elements(
      std::uint64_t bound = kDefaultElementsBound) const;

  // Product of transversal sizes along the chain; equals order() by
  // construction and is exposed for the chain-consistency property test.
  Integer transversal_product() const;

  struct Level {
    int base = -1;
    std::vector<Permutation> gens;
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;  // BFS discovery order
  };
  const std::vector<Level>& chain() const { return levels_; }

 private:
  void extend_level(std::size_t i, const Permutation& g);
  void close_level(std::size_t i);
  void recompute_orbit(std::size_t i);
  std::pair<Permutation, std::size_t> sift_from(std::size_t start,
                                                Permutation g) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  Integer order_;
};

struct ConjugacyClass {
  Permutation representative;  // minimal element of the class
  Integer size;
  std::uint64_t element_order = 1;
  std::vector<Permutation> members;  // sorted; desk-scale groups only
};

PermutationGroup build_group(int degree, std::vector<Permutation> generators);

bool contains(const PermutationGroup& g, const Permutation& p);

// Canonical order: element order asc, class size asc, minimal representative
// asc.  The identity class is therefore always first.
std::vector<ConjugacyClass> conjugacy_classes(
    const PermutationGroup& g, std::uint64_t bound = kDefaultElementsBound);

PermutationGroup center(const PermutationGroup& g);

PermutationGroup sylow_subgroup(const PermutationGroup& g, std::uint64_t p);

// Requires h <= g (membership-checked; throws NotSubgroup otherwise).
bool is_normal(const PermutationGroup& g, const PermutationGroup& h);

bool is_abelian(const PermutationGroup& g);

// Finite-group criterion: every Sylow subgroup normal.
bool is_nilpotent(const PermutationGroup& g);

// O_p(g): intersection of all conjugates of one Sylow p-subgroup.
PermutationGroup p_core(const PermutationGroup& g, std::uint64_t p);

// F(g) = product of O_p(g) over primes p dividing |g|.
PermutationGroup fitting_subgroup(const PermutationGroup& g);

// Common elements of h and k (same degree required); enumerates the smaller
// factor and filters by membership in the other.
PermutationGroup intersection(const PermutationGroup& h,
                              const PermutationGroup& k);

PermutationGroup normalizer(const PermutationGroup& g,
                            const PermutationGroup& h);

// Derived subgroup g' as the normal closure of generator commutators.
PermutationGroup derived_subgroup(const PermutationGroup& g);

// Subgroup generated by a set of elements, with greedy generator reduction.
PermutationGroup subgroup_from_elements(int degree,
                                        const std::vector<Permutation>& elems);

// All normal subgroups, found as closures of unions of conjugacy classes.
// Desk-scale oracle; throws GroupTooLarge above `bound`.
std::vector<PermutationGroup> normal_subgroups(const PermutationGroup& g,
                                               std::uint64_t bound = 512);

}  // namespace charvanish
