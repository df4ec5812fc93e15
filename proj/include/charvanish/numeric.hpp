#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace charvanish {

// Exact arithmetic everywhere; no floating point in the core.
using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

// Prime factorization (p, multiplicity), primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Largest power of p dividing n (n >= 1).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// Conversion guard for desk-scale code paths.  `what` names the quantity in
// the error message.
std::uint64_t checked_u64(const Integer& n, const char* what);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace charvanish
