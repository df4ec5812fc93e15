#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvanish/numeric.hpp"

namespace charvanish {

// Exact element of Q(zeta_m), stored over the power basis
// zeta_m^0 .. zeta_m^{phi(m)-1} reduced modulo the m-th cyclotomic
// polynomial, with the conductor m minimal for the value.  The
// representation is canonical: two values are equal iff their conductors and
// coefficient vectors are identical.
class Cyclotomic {
 public:
  Cyclotomic();  // zero
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor): numeric literal convenience
  explicit Cyclotomic(const Rational& value);
  explicit Cyclotomic(const Integer& value);

  // zeta_m^k, k taken mod m.
  static Cyclotomic root_of_unity(std::int64_t m, std::int64_t k);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  const Rational& rational_value() const;  // requires is_rational()
  bool is_integer() const;

  Cyclotomic conjugate() const;  // complex conjugation zeta -> zeta^-1
  Cyclotomic pow(std::uint64_t e) const;

  // Smallest d >= 1 with x^d = 1, or nullopt if x is not a root of unity.
  std::optional<std::uint64_t> order_of_root() const;

  // Canonical rendering "c0 + c1*z(m)^1 + ...", exact and locale-independent.
  std::string to_string() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  bool operator==(const Cyclotomic&) const = default;

 private:
  // Reduce a dense exponent vector (size m) to the canonical form.
  static Cyclotomic from_dense(std::int64_t m, std::vector<Rational> dense);
  // Coefficients of this value in the power basis of Q(zeta_target),
  // conductor_ | target.
  std::vector<Rational> dense_at(std::int64_t target) const;
  void reduce_conductor();

  std::int64_t conductor_ = 1;
  std::vector<Rational> coeffs_;  // size phi(conductor_)
};

// Coefficients of the m-th cyclotomic polynomial, constant term first
// (length phi(m) + 1).  Cached per m.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t m);

std::int64_t euler_phi(std::int64_t m);

// Phi_{p^a}(X) = 1 + X^{p^{a-1}} + ... + X^{(p-1)p^{a-1}}: p sparse terms,
// all coefficients 1.
struct CyclotomicPolynomialPPow {
  std::int64_t p = 2;
  std::int64_t a = 1;

  std::int64_t degree() const;
  // Dense coefficient vector, constant term first.
  std::vector<Integer> coefficients() const;
  Cyclotomic evaluate(const Cyclotomic& x) const;
};

CyclotomicPolynomialPPow cyclotomic_polynomial_ppow(std::int64_t p,
                                                    std::int64_t a);

}  // namespace charvanish
