#include "charvanish/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "charvanish/errors.hpp"

namespace charvanish {

namespace {

// Dense integer polynomials, constant term first.
using ZPoly = std::vector<Integer>;

// Exact quotient num / den for monic den; throws if the division leaves a
// remainder (only exact divisions occur here).
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) {
    throw InternalError("polynomial division by a larger-degree divisor");
  }
  ZPoly quot(num.size() - dn);
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    Integer c = num[shift + dn];
    if (c == 0) continue;
    quot[shift] = c;
    for (std::size_t j = 0; j <= dn; ++j) {
      if (den[j] != 0) num[shift + j] -= c * den[j];
    }
  }
  for (const auto& r : num) {
    if (r != 0) throw InternalError("inexact polynomial division");
  }
  return quot;
}

std::map<std::int64_t, ZPoly>& phi_cache() {
  static std::map<std::int64_t, ZPoly> cache;
  return cache;
}

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

// Fills the cache for every divisor of m, smallest first, so each step only
// divides by polynomials already present.
// Reduces a dense exponent vector modulo Phi_m down to the power basis
// (size euler_phi(m)).  X^deg = -(lower part of Phi_m) since Phi_m is monic.
std::vector<Rational> reduce_mod_phi(std::int64_t m,
                                     std::vector<Rational> dense) {
  const std::vector<Integer>& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t d = dense.size(); d-- > deg;) {
    if (dense[d] == 0) continue;
    Rational c = std::move(dense[d]);
    dense[d] = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) dense[d - deg + j] -= c * phi[j];
    }
  }
  dense.resize(deg);
  return dense;
}

const ZPoly& cyclotomic_polynomial_locked(std::int64_t m) {
  auto& cache = phi_cache();
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  for (std::uint64_t du : divisors(static_cast<std::uint64_t>(m))) {
    const auto d = static_cast<std::int64_t>(du);
    if (cache.contains(d)) continue;
    ZPoly num(d + 1);
    num[0] = -1;
    num[d] = 1;  // X^d - 1
    for (std::uint64_t e : divisors(du)) {
      if (static_cast<std::int64_t>(e) == d) continue;
      num = divide_exact(std::move(num),
                         cache.at(static_cast<std::int64_t>(e)));
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(m);
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw InternalError("cyclotomic polynomial index must be >= 1");
  std::scoped_lock lock(phi_mutex());
  return cyclotomic_polynomial_locked(m);
}

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t out = 1;
  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(m))) {
    std::int64_t pe = 1;
    for (int k = 1; k < e; ++k) pe *= static_cast<std::int64_t>(p);
    out *= pe * (static_cast<std::int64_t>(p) - 1);
  }
  return out;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value)
    : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(const Integer& value)
    : conductor_(1), coeffs_{Rational(value)} {}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t m, std::int64_t k) {
  if (m < 1) throw InternalError("root of unity needs m >= 1");
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> dense(m);
  dense[k] = 1;
  return from_dense(m, std::move(dense));
}

Cyclotomic Cyclotomic::from_dense(std::int64_t m, std::vector<Rational> dense) {
  Cyclotomic out;
  out.conductor_ = m;
  out.coeffs_ = reduce_mod_phi(m, std::move(dense));
  out.reduce_conductor();
  return out;
}

std::vector<Rational> Cyclotomic::dense_at(std::int64_t target) const {
  const std::int64_t step = target / conductor_;
  std::vector<Rational> dense(target);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) dense[static_cast<std::size_t>(j) * step] = coeffs_[j];
  }
  return dense;
}

void Cyclotomic::reduce_conductor() {
  for (;;) {
    if (conductor_ == 1) return;
    const std::int64_t m = conductor_;
    const std::size_t deg = coeffs_.size();

    std::size_t nonzero = 0;
    std::size_t mono = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      if (coeffs_[j] != 0) {
        ++nonzero;
        mono = j;
      }
    }
    if (nonzero == 0) {
      conductor_ = 1;
      coeffs_ = {Rational(0)};
      return;
    }

    // Monomial fast path: c * zeta_m^j never needs a linear solve.
    if (nonzero == 1) {
      const Rational c = coeffs_[mono];
      const auto j = static_cast<std::int64_t>(mono);
      if (j == 0) {
        conductor_ = 1;
        coeffs_ = {c};
        return;
      }
      const std::int64_t g = static_cast<std::int64_t>(
          gcd_u64(static_cast<std::uint64_t>(j),
                  static_cast<std::uint64_t>(m)));
      if (g > 1) {
        const std::int64_t sub = m / g;
        std::vector<Rational> dense(sub);
        dense[j / g] = c;
        conductor_ = sub;
        coeffs_ = reduce_mod_phi(sub, std::move(dense));
        continue;
      }
      if (m % 2 == 0 && (m / 2) % 2 == 1) {
        // zeta_m = -zeta_k^((k+1)/2) for k = m/2 odd.
        const std::int64_t k = m / 2;
        const std::int64_t j2 = (j * ((k + 1) / 2)) % k;
        std::vector<Rational> dense(k);
        dense[j2] = (j % 2 != 0) ? Rational(-c) : c;
        conductor_ = k;
        coeffs_ = reduce_mod_phi(k, std::move(dense));
        continue;
      }
      return;  // gcd(j, m) = 1 and m not 2 mod 4: conductor is minimal
    }

    bool reduced = false;
    for (std::uint64_t pu : prime_divisors(static_cast<std::uint64_t>(m))) {
      const auto p = static_cast<std::int64_t>(pu);
      const std::int64_t sub = m / p;

      // Galois pre-filter: fixed by every sigma_k with k = 1 mod sub.
      bool fixed = true;
      for (std::int64_t k = 1 + sub; k < m && fixed; k += sub) {
        if (gcd_u64(static_cast<std::uint64_t>(k),
                    static_cast<std::uint64_t>(m)) != 1) {
          continue;
        }
        std::vector<Rational> dense(m);
        for (std::size_t j = 0; j < deg; ++j) {
          if (coeffs_[j] != 0) {
            dense[(static_cast<std::int64_t>(j) * k) % m] += coeffs_[j];
          }
        }
        if (reduce_mod_phi(m, std::move(dense)) != coeffs_) fixed = false;
      }
      if (!fixed) continue;

      // Solve for coordinates over the power basis of the smaller field:
      // columns are zeta_sub^i = zeta_m^(i*p) reduced mod Phi_m.
      const std::size_t cols = static_cast<std::size_t>(euler_phi(sub));
      const std::size_t rows = deg;
      std::vector<std::vector<Rational>> aug(
          rows, std::vector<Rational>(cols + 1));
      for (std::size_t i = 0; i < cols; ++i) {
        std::vector<Rational> dense(m);
        dense[(static_cast<std::int64_t>(i) * p) % m] = 1;
        const auto col = reduce_mod_phi(m, std::move(dense));
        for (std::size_t r = 0; r < rows; ++r) aug[r][i] = col[r];
      }
      for (std::size_t r = 0; r < rows; ++r) aug[r][cols] = coeffs_[r];

      // Gaussian elimination with exact rationals.  The columns are
      // linearly independent (they embed a basis), so every column gets a
      // pivot and the solution is unique when the system is consistent.
      std::vector<Rational> solution(cols);
      bool consistent = true;
      std::size_t rank_row = 0;
      std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
      for (std::size_t c = 0; c < cols && rank_row < rows; ++c) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = rank_row; r < rows; ++r) {
          if (aug[r][c] != 0) {
            pivot = r;
            break;
          }
        }
        if (pivot == SIZE_MAX) continue;
        std::swap(aug[rank_row], aug[pivot]);
        const Rational inv = aug[rank_row][c];
        for (std::size_t j = c; j <= cols; ++j) aug[rank_row][j] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
          if (r == rank_row || aug[r][c] == 0) continue;
          const Rational f = aug[r][c];
          for (std::size_t j = c; j <= cols; ++j) {
            aug[r][j] -= f * aug[rank_row][j];
          }
        }
        pivot_of_col[c] = rank_row;
        ++rank_row;
      }
      for (std::size_t r = rank_row; r < rows; ++r) {
        if (aug[r][cols] != 0) consistent = false;
      }
      if (!consistent) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != SIZE_MAX) {
          solution[c] = aug[pivot_of_col[c]][cols];
        }
      }

      conductor_ = sub;
      coeffs_ = std::move(solution);
      reduced = true;
      break;
    }
    if (!reduced) return;
  }
}

bool Cyclotomic::is_zero() const {
  return conductor_ == 1 && coeffs_[0] == 0;
}

const Rational& Cyclotomic::rational_value() const {
  if (conductor_ != 1) {
    throw InternalError("rational_value on a non-rational cyclotomic");
  }
  return coeffs_[0];
}

bool Cyclotomic::is_integer() const {
  return conductor_ == 1 && coeffs_[0].get_den() == 1;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ == 1) return *this;
  std::vector<Rational> dense(conductor_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) {
      dense[(conductor_ - static_cast<std::int64_t>(j)) % conductor_] =
          coeffs_[j];
    }
  }
  return from_dense(conductor_, std::move(dense));
}

Cyclotomic Cyclotomic::pow(std::uint64_t e) const {
  Cyclotomic acc(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<std::uint64_t> Cyclotomic::order_of_root() const {
  if (is_zero()) return std::nullopt;
  // Roots of unity in Q(zeta_m) form a cyclic group of order lcm(2, m).
  const std::uint64_t m = static_cast<std::uint64_t>(conductor_);
  const std::uint64_t cap = lcm_u64(2, m);
  const Cyclotomic one(1);
  for (std::uint64_t d : divisors(cap)) {
    if (pow(d) == one) return d;
  }
  return std::nullopt;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const std::int64_t common = static_cast<std::int64_t>(
      lcm_u64(static_cast<std::uint64_t>(a.conductor_),
              static_cast<std::uint64_t>(b.conductor_)));
  std::vector<Rational> dense = a.dense_at(common);
  const std::vector<Rational> rhs = b.dense_at(common);
  for (std::size_t i = 0; i < dense.size(); ++i) dense[i] += rhs[i];
  return Cyclotomic::from_dense(common, std::move(dense));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;  // negation preserves the minimal conductor
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1) {
    if (a.coeffs_[0] == 0) return Cyclotomic();
    Cyclotomic out = b;
    for (auto& c : out.coeffs_) c *= a.coeffs_[0];
    return out;  // nonzero rational scaling preserves the conductor
  }
  if (b.conductor_ == 1) return b * a;
  const std::int64_t common = static_cast<std::int64_t>(
      lcm_u64(static_cast<std::uint64_t>(a.conductor_),
              static_cast<std::uint64_t>(b.conductor_)));
  const std::vector<Rational> da = a.dense_at(common);
  const std::vector<Rational> db = b.dense_at(common);
  std::vector<Rational> prod(common);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < db.size(); ++j) {
      if (db[j] == 0) continue;
      prod[(i + j) % common] += da[i] * db[j];
    }
  }
  return Cyclotomic::from_dense(common, std::move(prod));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  *this = *this + b;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) {
  *this = *this * b;
  return *this;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const bool negative = coeffs_[j] < 0;
    Rational mag = negative ? Rational(-coeffs_[j]) : coeffs_[j];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (j == 0) {
      out += mag.get_str();
    } else {
      out += mag.get_str() + "*z(" + std::to_string(conductor_) + ")^" +
             std::to_string(j);
    }
  }
  return out;
}

std::int64_t CyclotomicPolynomialPPow::degree() const {
  std::int64_t pa1 = 1;
  for (std::int64_t k = 1; k < a; ++k) pa1 *= p;
  return (p - 1) * pa1;
}

std::vector<Integer> CyclotomicPolynomialPPow::coefficients() const {
  std::int64_t pa1 = 1;
  for (std::int64_t k = 1; k < a; ++k) pa1 *= p;
  std::vector<Integer> out(degree() + 1);
  for (std::int64_t k = 0; k < p; ++k) out[k * pa1] = 1;
  return out;
}

Cyclotomic CyclotomicPolynomialPPow::evaluate(const Cyclotomic& x) const {
  std::int64_t pa1 = 1;
  for (std::int64_t k = 1; k < a; ++k) pa1 *= p;
  Cyclotomic sum(0);
  const Cyclotomic step = x.pow(static_cast<std::uint64_t>(pa1));
  Cyclotomic term(1);
  for (std::int64_t k = 0; k < p; ++k) {
    sum += term;
    term = term * step;
  }
  return sum;
}

CyclotomicPolynomialPPow cyclotomic_polynomial_ppow(std::int64_t p,
                                                    std::int64_t a) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  if (a < 1) throw InternalError("prime-power level must be >= 1");
  return CyclotomicPolynomialPPow{p, a};
}

}  // namespace charvanish
