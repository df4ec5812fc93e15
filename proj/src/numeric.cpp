#include "charvanish/numeric.hpp"

#include <algorithm>
#include <numeric>

#include "charvanish/errors.hpp"

namespace charvanish {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the first 12 primes
  // as witnesses.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return std::lcm(a, b);
}

std::uint64_t checked_u64(const Integer& n, const char* what) {
  if (n < 0 || !n.fits_ulong_p()) {
    throw InstanceTooLarge(std::string(what) +
                           " does not fit in a machine word: " +
                           n.get_str());
  }
  return n.get_ui();
}

}  // namespace charvanish
