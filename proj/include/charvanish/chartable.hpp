#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "charvanish/cyclotomic.hpp"
#include "charvanish/permgroup.hpp"

namespace charvanish {

inline constexpr std::uint64_t kDefaultTableOrderBound = 5000;

// Exact irreducible character table.  Classes are in canonical order
// (element order, then class size, then minimal representative); rows are
// the trivial character first, then by degree ascending, then
// lexicographically by rendered values.
struct CharacterTable {
  int degree = 0;  // permutation degree of the underlying group
  Integer order;
  std::vector<ConjugacyClass> classes;
  std::vector<Integer> degrees;                      // chi(1) per row
  std::vector<std::vector<Cyclotomic>> characters;   // rows x classes
  std::uint64_t dixon_prime = 0;
  std::uint64_t split_seed = 0;  // seed used for eigenspace splitting

  std::size_t class_count() const { return classes.size(); }
  std::size_t class_of(const Permutation& x) const;  // throws if absent
  const Cyclotomic& value(std::size_t row, std::size_t cls) const {
    return characters[row][cls];
  }
};

// a[i][j][k] = #{(x, y) in C_i x C_j : x*y = z_k} for a fixed z_k in C_k.
std::vector<std::vector<std::vector<std::uint64_t>>> class_structure_constants(
    const std::vector<ConjugacyClass>& classes);

// Dixon-Schneider: eigenvectors of the class matrices over GF(q) for the
// least prime q = 1 mod exponent(G) with q > 2*sqrt(|G|), lifted to exact
// cyclotomic values.  Throws GroupTooLarge above max_order.
CharacterTable character_table(const PermutationGroup& g,
                               std::uint64_t max_order = kDefaultTableOrderBound,
                               std::uint64_t seed = 0);

// Canonical line-based text rendering (also the golden-file format).
std::string render_text(const CharacterTable& t);
// Canonical JSON rendering; integers wider than machine range are strings.
std::string render_json(const CharacterTable& t);

// Memo of computed tables keyed by the subgroup's element set; safe for
// concurrent lookup and insertion of distinct keys.
class TableCache {
 public:
  explicit TableCache(std::uint64_t max_order = kDefaultTableOrderBound)
      : max_order_(max_order) {}

  std::shared_ptr<const CharacterTable> get(const PermutationGroup& g);

 private:
  std::uint64_t max_order_;
  std::mutex mutex_;
  std::map<std::vector<Permutation>, std::shared_ptr<const CharacterTable>>
      tables_;
};

// Decomposition of one ambient irreducible restricted to a normal subgroup:
// chi restricted to A = e * (zeta^{g_1} + ... + zeta^{g_t}) with the orbit
// listed as rows of A's table.
struct CliffordRestriction {
  std::size_t row = 0;  // ambient character
  std::shared_ptr<const CharacterTable> subgroup_table;
  std::size_t constituent_row = 0;       // zeta
  std::vector<std::size_t> orbit_rows;   // distinct conjugates, zeta first
  std::uint64_t multiplicity = 1;        // e
  std::uint64_t orbit_length = 1;        // t
};

// Row index of the conjugate character zeta^g, zeta^g(a) = zeta(g a g^-1),
// in the same table.  g must normalize the subgroup.
std::size_t conjugate_character_row(const CharacterTable& a_table,
                                    std::size_t row, const Permutation& g);

// Clifford decomposition of row `row` of t restricted to normal subgroup a.
// Throws NotNormal if a is not normal in g.
CliffordRestriction restrict_character(const PermutationGroup& g,
                                       const CharacterTable& t,
                                       std::size_t row,
                                       const PermutationGroup& a,
                                       TableCache& cache);

// I_G(zeta) = {g in G : zeta^g = zeta}; always contains A.
PermutationGroup inertia_subgroup(const PermutationGroup& g,
                                  const PermutationGroup& a,
                                  const CharacterTable& a_table,
                                  std::size_t zeta_row);

// Values of the conjugates {zeta^{g_i}} of a Clifford constituent at a fixed
// element x of A, with multiplicities, plus the p-orbit structure of the
// Sylow subgroup's action on the orbit.
struct ValueMultiplicityReport {
  Permutation element{1};  // degree-1 identity placeholder
  std::vector<std::pair<Cyclotomic, std::uint64_t>> value_multiplicity;
  std::vector<std::size_t> orbit_rows;            // conjugates of zeta
  std::vector<Cyclotomic> orbit_values;           // value at x per conjugate
  // P-orbits on the conjugates, each a sorted list of subgroup-table rows
  // drawn from orbit_rows.
  std::vector<std::vector<std::size_t>> p_orbits;
  std::uint64_t t = 1;        // orbit length |G : I|
  std::uint64_t t_p = 1;      // p-part of t
  std::uint64_t index_p = 1;  // p-part of |G : I|, computed independently
};

// Requires a normal abelian in g, x in a with x central in p_subgroup.
ValueMultiplicityReport p_orbit_value_report(const PermutationGroup& g,
                                             const CharacterTable& t,
                                             std::size_t row,
                                             const PermutationGroup& a,
                                             const Permutation& x,
                                             std::uint64_t p,
                                             const PermutationGroup& p_subgroup,
                                             TableCache& cache);

}  // namespace charvanish
