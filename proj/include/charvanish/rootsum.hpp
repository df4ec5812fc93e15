#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charvanish/cyclotomic.hpp"

namespace charvanish {

// Multiset of p^n-th roots of unity, each entry the exponent e of an element
// zeta_{p^n}^e.  Exponents are kept sorted ascending.
struct RootMultiset {
  std::uint64_t p = 2;
  int n = 1;
  std::vector<std::uint64_t> exponents;

  // Validates p prime, n >= 1, exponents < p^n; sorts the entries.
  static RootMultiset make(std::uint64_t p, int n,
                           std::vector<std::uint64_t> exponents);

  std::uint64_t modulus() const;  // p^n
  std::size_t size() const { return exponents.size(); }
};

// One zero-sum block: for a base root xi = zeta_{p^n}^base of order p^level,
// the p members xi^(k*p^(level-1) + 1), k = 0..p-1.  Member exponents are
// stored mod p^n, sorted ascending.  Rescaled by p^(n-level) the members form
// an arithmetic progression with common difference p^(level-1) mod p^level.
struct Block {
  int level = 1;
  std::uint64_t base = 0;
  std::vector<std::uint64_t> members;

  bool operator==(const Block&) const = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // in extraction order

  // Distinct blocks with their multiplicities, in first-seen order.
  std::vector<std::pair<Block, int>> distinct_with_multiplicity() const;
};

// How decompose picks among the remaining entries of maximal order.
enum class SelectionPolicy {
  kSmallestExponent,  // deterministic default
  kRandomized,        // seeded uniform choice; exercises order-independence
};

// Exact cyclotomic sum of all entries.
Cyclotomic sum_of_roots(const RootMultiset& s);

// Splits a vanishing multiset into zero-sum blocks of p roots each:
// repeatedly take a remaining entry of maximal multiplicative order, remove
// its block, recurse.  Throws NotVanishing if the total sum is nonzero.
// Throws DecompositionFailure if a required member is missing, which would
// indicate a bug rather than a property of the input.
BlockDecomposition decompose(const RootMultiset& s);
BlockDecomposition decompose(const RootMultiset& s, SelectionPolicy policy,
                             std::uint64_t seed);

// Exhaustive-search oracle: partitions the multiset into p-element parts with
// every part summing to zero, or nullopt if no such partition exists.
// Throws InstanceTooLarge when s.size() > max_t.
std::optional<BlockDecomposition> brute_force_decompose(const RootMultiset& s,
                                                        std::size_t max_t = 12);

// Union of block_count randomly chosen valid blocks; deterministic per seed.
RootMultiset random_vanishing_multiset(std::uint64_t p, int n, int block_count,
                                       std::uint64_t seed);

}  // namespace charvanish
