#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvanish/permgroup.hpp"

namespace charvanish {

inline constexpr int kDefaultMaxDegree = 64;

// A named construction of a finite permutation group: either inline
// generators in cycle notation on a stated degree, or a family expression.
//
// Families: cyclic N, symmetric N, alternating N, dihedral N (N = order,
// even, >= 4), quaternion N (N = order, power of two, >= 8), psl 2 Q for
// Q in {5,7,8,9,11} acting on the projective line, and product of compact
// factor tokens (cN, sN, aN, dN, qN, psl2_Q).
struct FamilyExpr {
  std::string family;
  std::vector<std::int64_t> params;
  std::vector<FamilyExpr> factors;  // only for family == "product"

  bool operator==(const FamilyExpr&) const = default;
};

struct InlineGenerators {
  int degree = 1;
  std::vector<Permutation> generators;

  bool operator==(const InlineGenerators&) const = default;
};

struct GroupSpec {
  std::string name;
  std::optional<InlineGenerators> inline_gens;
  std::optional<FamilyExpr> family;

  bool operator==(const GroupSpec&) const = default;
};

struct CorpusManifest {
  std::vector<GroupSpec> groups;  // names unique
  std::uint64_t max_order = 5000;
  int max_degree = kDefaultMaxDegree;
  std::string out_dir;
  std::uint64_t seed = 0;
};

// Grammar, one directive per line, comments from '#' to end of line:
//   name <ident>
//   degree <int>
//   gens (a b c)(d e), (f g), ...     1-based points
//   family <name> <params...>
// A spec is complete after gens or family; `name` is optional for a single
// spec and defaults to a canonical token.  Throws ParseError with line and
// column on malformed input.
GroupSpec parse_group_spec(const std::string& text);

// A manifest is a sequence of group specs, plus optional leading directives
// `max_order <int>`, `max_degree <int>`, `out <path>`, `seed <int>`.
CorpusManifest parse_manifest(const std::string& text);

// Canonical text form; parse_group_spec(render_group_spec(s)) == s.
std::string render_group_spec(const GroupSpec& spec);

// Builds the group, enforcing the degree bound at construction and the
// order bound after.  Throws InstanceTooLarge or GroupTooLarge.
PermutationGroup realize(const GroupSpec& spec,
                         std::uint64_t max_order = 5000,
                         int max_degree = kDefaultMaxDegree);

// Default corpus: every group of order <= 24 expressible via the families
// and their direct products, the dihedral and quaternion series to order 64,
// Sym/Alt to degree 6, and PSL(2,q) for q in {5,7,8,9}.
std::vector<GroupSpec> builtin_corpus();

}  // namespace charvanish
