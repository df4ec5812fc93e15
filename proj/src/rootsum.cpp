#include "charvanish/rootsum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "charvanish/errors.hpp"

namespace charvanish {

namespace {

std::uint64_t power_u64(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (1ULL << 40)) {
      throw InstanceTooLarge("exponent space p^n is too large");
    }
    out *= base;
  }
  return out;
}

// Multiplicative order of zeta_{p^n}^e is p^n / gcd(p^n, e).
std::uint64_t order_of_exponent(std::uint64_t e, std::uint64_t modulus) {
  return modulus / gcd_u64(modulus, e == 0 ? modulus : e);
}

// The p members of the base's block: base * (k * p^(a-1) + 1) mod p^n for
// k = 0..p-1, where p^a is the order of zeta_{p^n}^base.
Block block_from_base(std::uint64_t p, std::uint64_t modulus,
                      std::uint64_t base) {
  const std::uint64_t order = order_of_exponent(base, modulus);
  if (order < p) throw InternalError("block base must have order at least p");
  int level = 0;
  for (std::uint64_t o = order; o > 1; o /= p) ++level;
  const std::uint64_t step = order / p;  // p^(level-1)

  Block b;
  b.level = level;
  b.base = base;
  for (std::uint64_t k = 0; k < p; ++k) {
    b.members.push_back((base * ((k * step + 1) % modulus)) % modulus);
  }
  std::sort(b.members.begin(), b.members.end());
  return b;
}

Cyclotomic sum_of_exponents(const std::vector<std::uint64_t>& exponents,
                            std::uint64_t modulus) {
  Cyclotomic out(0);
  std::map<std::uint64_t, long> counts;
  for (std::uint64_t e : exponents) ++counts[e];
  for (const auto& [e, count] : counts) {
    out += Cyclotomic(count) *
           Cyclotomic::root_of_unity(static_cast<std::int64_t>(modulus),
                                     static_cast<std::int64_t>(e));
  }
  return out;
}

}  // namespace

RootMultiset RootMultiset::make(std::uint64_t p, int n,
                                std::vector<std::uint64_t> exponents) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (n < 1) throw InstanceTooLarge("level n must be at least 1");
  RootMultiset s;
  s.p = p;
  s.n = n;
  s.exponents = std::move(exponents);
  const std::uint64_t modulus = power_u64(p, n);
  for (std::uint64_t e : s.exponents) {
    if (e >= modulus) {
      throw InstanceTooLarge("exponent " + std::to_string(e) +
                             " is out of range mod " + std::to_string(modulus));
    }
  }
  std::sort(s.exponents.begin(), s.exponents.end());
  return s;
}

std::uint64_t RootMultiset::modulus() const { return power_u64(p, n); }

std::vector<std::pair<Block, int>>
BlockDecomposition::distinct_with_multiplicity() const {
  std::vector<std::pair<Block, int>> out;
  for (const auto& b : blocks) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& e) { return e.first == b; });
    if (it == out.end()) {
      out.emplace_back(b, 1);
    } else {
      ++it->second;
    }
  }
  return out;
}

Cyclotomic sum_of_roots(const RootMultiset& s) {
  return sum_of_exponents(s.exponents, s.modulus());
}

BlockDecomposition decompose(const RootMultiset& s) {
  return decompose(s, SelectionPolicy::kSmallestExponent, 0);
}

BlockDecomposition decompose(const RootMultiset& s, SelectionPolicy policy,
                             std::uint64_t seed) {
  const Cyclotomic total = sum_of_roots(s);
  if (!total.is_zero()) throw NotVanishing(total.to_string());

  const std::uint64_t modulus = s.modulus();
  std::map<std::uint64_t, int> remaining;
  for (std::uint64_t e : s.exponents) ++remaining[e];

  std::mt19937_64 rng(seed);
  BlockDecomposition out;
  while (!remaining.empty()) {
    std::uint64_t best_order = 0;
    for (const auto& [e, count] : remaining) {
      best_order = std::max(best_order, order_of_exponent(e, modulus));
    }
    if (best_order < s.p) {
      // Only exponent 0 (order 1) remains, yet every removed block summed to
      // zero, so the leftover all-ones sum cannot vanish.
      throw DecompositionFailure(
          "remaining entries have order 1 but the total sum was zero");
    }
    std::vector<std::uint64_t> candidates;
    for (const auto& [e, count] : remaining) {
      if (order_of_exponent(e, modulus) == best_order) candidates.push_back(e);
    }
    std::uint64_t base = candidates.front();
    if (policy == SelectionPolicy::kRandomized) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      base = candidates[pick(rng)];
    }
    Block b = block_from_base(s.p, modulus, base);
    for (std::uint64_t member : b.members) {
      auto it = remaining.find(member);
      if (it == remaining.end()) {
        throw DecompositionFailure("required block member " +
                                   std::to_string(member) + " is absent");
      }
      if (--it->second == 0) remaining.erase(it);
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

std::optional<BlockDecomposition> brute_force_decompose(const RootMultiset& s,
                                                        std::size_t max_t) {
  if (s.size() > max_t) {
    throw InstanceTooLarge("brute-force decomposition over " +
                           std::to_string(s.size()) + " entries (max " +
                           std::to_string(max_t) + ")");
  }
  if (s.size() % s.p != 0) return std::nullopt;

  const std::uint64_t modulus = s.modulus();
  const std::vector<std::uint64_t>& pool = s.exponents;  // sorted
  std::vector<bool> used(pool.size(), false);
  std::vector<std::size_t> chosen;
  std::vector<Block> parts;

  auto canonical_block = [&](const std::vector<std::size_t>& idx) {
    // A p-element zero-sum part has no proper vanishing sub-multiset (any
    // vanishing multiset has size divisible by p), so it is a single block:
    // build it from its maximal-order member of smallest exponent.
    std::uint64_t base = 0;
    std::uint64_t best_order = 0;
    for (std::size_t i : idx) {
      const std::uint64_t ord = order_of_exponent(pool[i], modulus);
      if (ord > best_order || (ord == best_order && pool[i] < base)) {
        base = (ord > best_order) ? pool[i] : std::min(base, pool[i]);
        best_order = ord;
      }
    }
    Block blk = block_from_base(s.p, modulus, base);
    std::vector<std::uint64_t> part;
    for (std::size_t i : idx) part.push_back(pool[i]);
    std::sort(part.begin(), part.end());
    if (blk.members != part) {
      throw InternalError("zero-sum part of size p is not a single block");
    }
    return blk;
  };

  // Backtracking partition into p-element zero-sum parts.  The first unused
  // entry anchors each part; the rest are chosen in nondecreasing index order
  // with equal-value pruning.
  std::function<bool()> solve = [&]() -> bool {
    std::size_t anchor = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!used[i]) {
        anchor = i;
        break;
      }
    }
    if (anchor == pool.size()) return true;

    used[anchor] = true;
    chosen.assign(1, anchor);
    std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
      if (chosen.size() == s.p) {
        std::vector<std::uint64_t> part;
        for (std::size_t i : chosen) part.push_back(pool[i]);
        if (!sum_of_exponents(part, modulus).is_zero()) return false;
        parts.push_back(canonical_block(chosen));
        const std::vector<std::size_t> saved = chosen;
        if (solve()) return true;
        parts.pop_back();
        chosen = saved;
        return false;
      }
      std::uint64_t prev = modulus;  // sentinel: no exponent reaches modulus
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (used[i] || pool[i] == prev) continue;
        prev = pool[i];
        used[i] = true;
        chosen.push_back(i);
        if (extend(i + 1)) return true;
        chosen.pop_back();
        used[i] = false;
      }
      return false;
    };
    if (extend(anchor + 1)) return true;
    used[anchor] = false;
    return false;
  };

  if (!solve()) return std::nullopt;
  BlockDecomposition out;
  out.blocks = std::move(parts);
  return out;
}

RootMultiset random_vanishing_multiset(std::uint64_t p, int n, int block_count,
                                       std::uint64_t seed) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (n < 1) throw InstanceTooLarge("level n must be at least 1");
  const std::uint64_t modulus = power_u64(p, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_base(1, modulus - 1);
  std::vector<std::uint64_t> exponents;
  for (int i = 0; i < block_count; ++i) {
    const Block b = block_from_base(p, modulus, pick_base(rng));
    exponents.insert(exponents.end(), b.members.begin(), b.members.end());
  }
  return RootMultiset::make(p, n, std::move(exponents));
}

}  // namespace charvanish
