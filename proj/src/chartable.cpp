#include "charvanish/chartable.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "charvanish/errors.hpp"

namespace charvanish {

namespace {

// ---------------------------------------------------------------------------
// GF(q) scalar arithmetic (q odd prime, q < 2^62).

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  a += b;
  return a >= q ? a - q : a;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + q - b;
}

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t out = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1) out = mulm(out, a, q);
    a = mulm(a, a, q);
    e >>= 1;
  }
  return out;
}

std::uint64_t invm(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) throw InternalError("division by zero mod q");
  return powm(a, q - 2, q);
}

// Square root mod q via Tonelli-Shanks; input must be a quadratic residue.
std::uint64_t sqrtm(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) return 0;
  if (powm(a, (q - 1) / 2, q) != 1) {
    throw InternalError("square root of a non-residue requested");
  }
  if (q % 4 == 3) return powm(a, (q + 1) / 4, q);

  std::uint64_t s = q - 1;
  int r = 0;
  while (s % 2 == 0) {
    s /= 2;
    ++r;
  }
  std::uint64_t nonresidue = 2;
  while (powm(nonresidue, (q - 1) / 2, q) != q - 1) ++nonresidue;

  std::uint64_t c = powm(nonresidue, s, q);
  std::uint64_t x = powm(a, (s + 1) / 2, q);
  std::uint64_t t = powm(a, s, q);
  int m = r;
  while (t != 1) {
    std::uint64_t tt = t;
    int i = 0;
    while (tt != 1) {
      tt = mulm(tt, tt, q);
      ++i;
      if (i == m) throw InternalError("Tonelli-Shanks failed to converge");
    }
    const std::uint64_t b = powm(c, 1ULL << (m - i - 1), q);
    x = mulm(x, b, q);
    c = mulm(b, b, q);
    t = mulm(t, c, q);
    m = i;
  }
  return x;
}

std::uint64_t primitive_root(std::uint64_t q) {
  const std::vector<std::uint64_t> primes = prime_divisors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (std::uint64_t p : primes) {
      if (powm(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

// ---------------------------------------------------------------------------
// Polynomials over GF(q): coefficient vectors, low degree first, normalized
// so the leading coefficient is nonzero (the zero polynomial is {}).

using Poly = std::vector<std::uint64_t>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = addm(out[i + j], mulm(a[i], b[j], q), q);
    }
  }
  poly_trim(out);
  return out;
}

// Division with remainder; g must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& g, std::uint64_t q) {
  if (g.empty()) throw InternalError("polynomial division by zero");
  const std::uint64_t lead_inv = invm(g.back(), q);
  Poly quot;
  while (poly_deg(f) >= poly_deg(g)) {
    const int shift = poly_deg(f) - poly_deg(g);
    const std::uint64_t c = mulm(f.back(), lead_inv, q);
    if (quot.size() < static_cast<std::size_t>(shift + 1)) {
      quot.resize(shift + 1, 0);
    }
    quot[shift] = addm(quot[shift], c, q);
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = subm(f[shift + i], mulm(c, g[i], q), q);
    }
    poly_trim(f);
  }
  poly_trim(quot);
  return {quot, f};
}

Poly poly_mod(const Poly& f, const Poly& g, std::uint64_t q) {
  return poly_divmod(f, g, q).second;
}

void poly_make_monic(Poly& f, std::uint64_t q) {
  if (f.empty() || f.back() == 1) return;
  const std::uint64_t inv = invm(f.back(), q);
  for (auto& c : f) c = mulm(c, inv, q);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t q) {
  while (!b.empty()) {
    Poly r = poly_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  poly_make_monic(a, q);
  return a;
}

Poly poly_lcm(const Poly& a, const Poly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  const Poly g = poly_gcd(a, b, q);
  Poly out = poly_divmod(poly_mul(a, b, q), g, q).first;
  poly_make_monic(out, q);
  return out;
}

// (x + delta)^e mod m.
Poly poly_powmod_linear(std::uint64_t delta, std::uint64_t e, const Poly& m,
                        std::uint64_t q) {
  Poly base = poly_mod(Poly{delta, 1}, m, q);
  Poly out{1};
  while (e > 0) {
    if (e & 1) out = poly_mod(poly_mul(out, base, q), m, q);
    base = poly_mod(poly_mul(base, base, q), m, q);
    e >>= 1;
  }
  return out;
}

// Roots of a monic squarefree polynomial that splits into distinct linear
// factors over GF(q) (true for minimal polynomials of the diagonalizable
// class matrices).  Cantor-Zassenhaus splitting with the table's seeded rng.
void poly_roots(const Poly& f, std::uint64_t q, std::mt19937_64& rng,
                std::vector<std::uint64_t>& out) {
  const int d = poly_deg(f);
  if (d <= 0) return;
  if (d == 1) {
    // f = x + c  ->  root -c.
    out.push_back(f[0] == 0 ? 0 : q - f[0]);
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    const std::uint64_t delta = rng() % q;
    Poly h = poly_powmod_linear(delta, (q - 1) / 2, f, q);
    if (h.empty()) {
      h = Poly{q - 1};  // (x+delta)^((q-1)/2) = 0 means -delta is a root
    } else {
      h[0] = subm(h[0], 1, q);
      poly_trim(h);
    }
    if (h.empty()) continue;  // all roots are nonzero residues; retry
    Poly g = poly_gcd(f, h, q);
    if (poly_deg(g) > 0 && poly_deg(g) < d) {
      Poly rest = poly_divmod(f, g, q).first;
      poly_make_monic(rest, q);
      poly_roots(g, q, rng, out);
      poly_roots(rest, q, rng, out);
      return;
    }
  }
  throw InternalError("root splitting did not converge");
}

// ---------------------------------------------------------------------------
// Dense matrices over GF(q), stored as rows.

using Matrix = std::vector<std::vector<std::uint64_t>>;

std::vector<std::uint64_t> mat_vec(const Matrix& m,
                                   const std::vector<std::uint64_t>& v,
                                   std::uint64_t q) {
  std::vector<std::uint64_t> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] != 0 && v[j] != 0) {
        acc = addm(acc, mulm(m[i][j], v[j], q), q);
      }
    }
    out[i] = acc;
  }
  return out;
}

// In-place reduced row echelon form; returns the pivot column per row.
std::vector<std::size_t> rref(Matrix& m, std::uint64_t q) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const std::uint64_t inv = invm(m[row][col], q);
    for (auto& c : m[row]) c = mulm(c, inv, q);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const std::uint64_t f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = subm(m[i][j], mulm(f, m[row][j], q), q);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);  // drop zero rows
  return pivots;
}

// Kernel basis of a square matrix (rows of the result are basis vectors).
Matrix kernel_basis(Matrix m, std::uint64_t q) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  const std::vector<std::size_t> pivots = rref(m, q);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      // pivot variable = -sum of free-column entries
      v[pivots[r]] = m[r][free] == 0 ? 0 : q - m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Minimal polynomial of a square matrix via Krylov sequences from every
// standard basis vector (their lcm is exact for any matrix).
Poly minimal_polynomial(const Matrix& r, std::uint64_t q) {
  const std::size_t d = r.size();
  Poly m{1};
  for (std::size_t b = 0; b < d; ++b) {
    if (poly_deg(m) == static_cast<int>(d)) break;  // cannot grow further

    // Reduced Krylov vectors with their expression in powers of r.
    struct Row {
      std::vector<std::uint64_t> vec;
      Poly combo;
      std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<std::uint64_t> u(d, 0);
    u[b] = 1;
    for (std::size_t t = 0; t <= d; ++t) {
      std::vector<std::uint64_t> w = u;
      Poly combo(t + 1, 0);
      combo[t] = 1;
      for (const Row& row : rows) {
        const std::uint64_t f = w[row.pivot];
        if (f == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
          w[j] = subm(w[j], mulm(f, row.vec[j], q), q);
        }
        for (std::size_t j = 0; j < row.combo.size(); ++j) {
          combo[j] = subm(combo[j], mulm(f, row.combo[j], q), q);
        }
      }
      std::size_t pivot = d;
      for (std::size_t j = 0; j < d; ++j) {
        if (w[j] != 0) {
          pivot = j;
          break;
        }
      }
      if (pivot == d) {
        poly_trim(combo);  // monic of degree t by construction
        m = poly_lcm(m, combo, q);
        break;
      }
      const std::uint64_t inv = invm(w[pivot], q);
      for (auto& c : w) c = mulm(c, inv, q);
      for (auto& c : combo) c = mulm(c, inv, q);
      rows.push_back(Row{std::move(w), std::move(combo), pivot});
      u = mat_vec(r, u, q);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Class matrices and simultaneous eigenvectors.

using ClassMap = std::unordered_map<Permutation, std::size_t, PermutationHash>;

ClassMap build_class_map(const std::vector<ConjugacyClass>& classes) {
  ClassMap map;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const Permutation& x : classes[i].members) map.emplace(x, i);
  }
  return map;
}

// M_i[j][k] = a_ijk = #{(x, y) in C_i x C_j : x*y = z_k}.
Matrix class_matrix(const std::vector<ConjugacyClass>& classes,
                    const ClassMap& map, std::size_t i) {
  const std::size_t k = classes.size();
  Matrix m(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t kk = 0; kk < k; ++kk) {
    const Permutation& z = classes[kk].representative;
    for (const Permutation& x : classes[i].members) {
      const Permutation y = compose(x.inverse(), z);
      ++m[map.at(y)][kk];
    }
  }
  return m;
}

// A subspace of GF(q)^k: basis vectors as rows, kept in reduced row echelon
// form so coordinates can be read off at the pivot columns.
struct Subspace {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(Matrix rows, std::uint64_t q) {
  Subspace s;
  s.pivots = rref(rows, q);
  s.basis = std::move(rows);
  return s;
}

// Splits a subspace invariant under m into the eigenspaces of m's
// restriction.  Returns subspaces of equal total dimension.
std::vector<Subspace> split_subspace(const Subspace& v, const Matrix& m,
                                     std::uint64_t q, std::mt19937_64& rng) {
  const std::size_t d = v.basis.size();
  const std::size_t k = v.basis.empty() ? 0 : v.basis[0].size();

  // Restriction r of m to v in the basis: coordinates of m*b_c are read at
  // the pivot columns; the residual must vanish since v is invariant.
  Matrix images;
  for (std::size_t c = 0; c < d; ++c) {
    images.push_back(mat_vec(m, v.basis[c], q));
  }
  Matrix r(d, std::vector<std::uint64_t>(d, 0));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t row = 0; row < d; ++row) {
      r[row][c] = images[c][v.pivots[row]];
    }
  }
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t row = 0; row < d; ++row) {
        acc = addm(acc, mulm(r[row][c], v.basis[row][j], q), q);
      }
      if (acc != images[c][j]) {
        throw InternalError("subspace is not invariant under a class matrix");
      }
    }
  }

  Poly minpoly = minimal_polynomial(r, q);
  std::vector<std::uint64_t> eigenvalues;
  poly_roots(minpoly, q, rng, eigenvalues);
  if (eigenvalues.size() != static_cast<std::size_t>(poly_deg(minpoly))) {
    throw InternalError("class matrix minimal polynomial is not split");
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  if (eigenvalues.size() <= 1) return {v};

  std::vector<Subspace> out;
  std::size_t total = 0;
  for (std::uint64_t lambda : eigenvalues) {
    Matrix shifted = r;
    for (std::size_t i = 0; i < d; ++i) {
      shifted[i][i] = subm(shifted[i][i], lambda, q);
    }
    const Matrix ker = kernel_basis(std::move(shifted), q);
    Matrix lifted;
    for (const auto& coeffs : ker) {
      std::vector<std::uint64_t> vec(k, 0);
      for (std::size_t row = 0; row < d; ++row) {
        if (coeffs[row] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          vec[j] = addm(vec[j], mulm(coeffs[row], v.basis[row][j], q), q);
        }
      }
      lifted.push_back(std::move(vec));
    }
    Subspace sub = make_subspace(std::move(lifted), q);
    total += sub.basis.size();
    out.push_back(std::move(sub));
  }
  if (total != d) {
    throw InternalError("eigenspace dimensions do not add up");
  }
  return out;
}

// Common eigenvectors of all class matrices, normalized so the coordinate at
// the identity class is 1.
std::vector<std::vector<std::uint64_t>> simultaneous_eigenvectors(
    const std::vector<ConjugacyClass>& classes, const ClassMap& map,
    std::uint64_t q, std::uint64_t seed) {
  const std::size_t k = classes.size();
  std::mt19937_64 rng(seed);

  std::vector<Subspace> active;
  std::vector<Subspace> done;
  {
    Matrix identity(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
    Subspace whole = make_subspace(std::move(identity), q);
    (k == 1 ? done : active).push_back(std::move(whole));
  }

  auto split_all = [&](const Matrix& m) {
    std::vector<Subspace> next;
    for (const Subspace& v : active) {
      for (Subspace& piece : split_subspace(v, m, q, rng)) {
        (piece.basis.size() == 1 ? done : next).push_back(std::move(piece));
      }
    }
    active = std::move(next);
  };

  // Class matrices in ascending class index (index 0 is the identity and
  // splits nothing).
  for (std::size_t i = 1; i < k && !active.empty(); ++i) {
    split_all(class_matrix(classes, map, i));
  }

  // The full set of class matrices always separates the characters, so this
  // fallback is unreachable; it is kept because random combinations are the
  // standard remedy if a shared eigenspace ever survived.
  std::vector<Matrix> cached;
  for (int attempt = 0; !active.empty() && attempt < 64; ++attempt) {
    if (cached.empty()) {
      for (std::size_t i = 1; i < k; ++i) {
        cached.push_back(class_matrix(classes, map, i));
      }
    }
    Matrix combo(k, std::vector<std::uint64_t>(k, 0));
    for (const Matrix& m : cached) {
      const std::uint64_t r = rng() % q;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          combo[a][b] = addm(combo[a][b], mulm(r, m[a][b], q), q);
        }
      }
    }
    split_all(combo);
  }
  if (!active.empty()) {
    throw InternalError("class matrices failed to separate the characters");
  }
  if (done.size() != k) {
    throw InternalError("wrong number of common eigenspaces");
  }

  std::vector<std::vector<std::uint64_t>> out;
  for (const Subspace& s : done) {
    std::vector<std::uint64_t> v = s.basis[0];
    if (v[0] == 0) {
      throw InternalError("eigenvector vanishes at the identity class");
    }
    const std::uint64_t inv = invm(v[0], q);
    for (auto& c : v) c = mulm(c, inv, q);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::vector<std::vector<std::uint64_t>>> class_structure_constants(
    const std::vector<ConjugacyClass>& classes) {
  const std::size_t k = classes.size();
  const ClassMap map = build_class_map(classes);
  std::vector<std::vector<std::vector<std::uint64_t>>> a(k);
  for (std::size_t i = 0; i < k; ++i) a[i] = class_matrix(classes, map, i);
  return a;
}

std::size_t CharacterTable::class_of(const Permutation& x) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::binary_search(classes[i].members.begin(),
                           classes[i].members.end(), x)) {
      return i;
    }
  }
  throw NotSubgroup("element " + x.to_cycle_string() +
                    " is not in the group of this table");
}

CharacterTable character_table(const PermutationGroup& g,
                               std::uint64_t max_order, std::uint64_t seed) {
  if (g.order() > static_cast<unsigned long>(max_order)) {
    throw GroupTooLarge("group of order " + g.order().get_str() +
                        " exceeds the table bound " +
                        std::to_string(max_order));
  }
  const std::uint64_t n = checked_u64(g.order(), "group order");
  const std::vector<ConjugacyClass> classes = conjugacy_classes(g, max_order);
  const std::size_t k = classes.size();
  const ClassMap map = build_class_map(classes);

  // Exponent of the group: lcm of the class element orders.
  std::uint64_t exponent = 1;
  for (const auto& c : classes) exponent = lcm_u64(exponent, c.element_order);

  // Least prime q = 1 mod exponent with q^2 > 4|G|, so eigenvalues of the
  // class matrices live in GF(q) and degrees/multiplicities lift uniquely.
  std::uint64_t q = exponent + 1;
  while (!(is_prime(q) && q * q > 4 * n)) q += exponent;

  const std::vector<std::vector<std::uint64_t>> eigen =
      simultaneous_eigenvectors(classes, map, q, seed);

  std::vector<std::uint64_t> sizes(k), inv_sizes(k);
  std::vector<std::size_t> inverse_class(k);
  for (std::size_t j = 0; j < k; ++j) {
    sizes[j] = checked_u64(classes[j].size, "class size") % q;
    inv_sizes[j] = invm(sizes[j], q);
    inverse_class[j] = map.at(classes[j].representative.inverse());
  }

  // Degrees: sum_j w_j * w_{j*} / |C_j| = |G| / d^2 in GF(q); the true
  // degree is the square root below q/2.
  std::vector<std::uint64_t> degrees(k);
  for (std::size_t s = 0; s < k; ++s) {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      sum = addm(sum,
                 mulm(mulm(eigen[s][j], eigen[s][inverse_class[j]], q),
                      inv_sizes[j], q),
                 q);
    }
    if (sum == 0) throw InternalError("degree recovery hit a zero norm");
    const std::uint64_t d2 = mulm(n % q, invm(sum, q), q);
    const std::uint64_t root = sqrtm(d2, q);
    const std::uint64_t d = std::min(root, q - root);
    if (d == 0 || d * d > n) throw InternalError("implausible degree lifted");
    degrees[s] = d;
  }

  // Power-class tables: class of rep^v for each class.
  std::vector<std::vector<std::size_t>> power_class(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t m = classes[j].element_order;
    Permutation pow(g.degree());
    for (std::uint64_t v = 0; v < m; ++v) {
      power_class[j].push_back(map.at(pow));
      pow = compose(pow, classes[j].representative);
    }
  }

  // z has exact multiplicative order `exponent` in GF(q).
  const std::uint64_t z = powm(primitive_root(q), (q - 1) / exponent, q);

  // Lift each row: chi(g_j) mod q = d * w_j / |C_j|; eigenvalue
  // multiplicities of rho(g_j) by inverse DFT; exact value as a cyclotomic
  // integer combination of m-th roots of unity.
  struct RawRow {
    std::uint64_t degree = 1;
    std::vector<Cyclotomic> values;
    std::vector<std::string> rendered;
    bool trivial = true;
  };
  std::vector<RawRow> rows(k);
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<std::uint64_t> chi_mod(k);
    for (std::size_t j = 0; j < k; ++j) {
      chi_mod[j] = mulm(mulm(degrees[s], eigen[s][j], q), inv_sizes[j], q);
    }
    RawRow& row = rows[s];
    row.degree = degrees[s];
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t m = classes[j].element_order;
      const std::uint64_t zm_inv = invm(powm(z, exponent / m, q), q);
      const std::uint64_t m_inv = invm(m % q, q);
      Cyclotomic value(0);
      std::uint64_t total = 0;
      for (std::uint64_t u = 0; u < m; ++u) {
        std::uint64_t mu = 0;
        for (std::uint64_t v = 0; v < m; ++v) {
          mu = addm(mu,
                    mulm(chi_mod[power_class[j][v]],
                         powm(zm_inv, (u * v) % m, q), q),
                    q);
        }
        mu = mulm(mu, m_inv, q);
        if (mu > degrees[s]) {
          throw InternalError("lifted multiplicity exceeds the degree");
        }
        total += mu;
        if (mu != 0) {
          value += Cyclotomic(static_cast<long>(mu)) *
                   Cyclotomic::root_of_unity(static_cast<std::int64_t>(m),
                                             static_cast<std::int64_t>(u));
        }
      }
      if (total != degrees[s]) {
        throw InternalError("eigenvalue multiplicities do not sum to the "
                            "degree");
      }
      row.values.push_back(std::move(value));
    }
    for (const Cyclotomic& v : row.values) {
      row.rendered.push_back(v.to_string());
      if (!(v == Cyclotomic(1))) row.trivial = false;
    }
  }

  // Canonical row order: trivial character first, then degree ascending,
  // then lexicographically by rendered values.
  std::vector<std::size_t> order_idx(k);
  for (std::size_t i = 0; i < k; ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(),
            [&](std::size_t a, std::size_t b) {
              if (rows[a].trivial != rows[b].trivial) return rows[a].trivial;
              if (rows[a].degree != rows[b].degree) {
                return rows[a].degree < rows[b].degree;
              }
              return rows[a].rendered < rows[b].rendered;
            });

  CharacterTable t;
  t.degree = g.degree();
  t.order = g.order();
  t.classes = classes;
  t.dixon_prime = q;
  t.split_seed = seed;
  Integer degree_square_sum = 0;
  for (std::size_t i : order_idx) {
    t.degrees.emplace_back(static_cast<unsigned long>(rows[i].degree));
    t.characters.push_back(std::move(rows[i].values));
    degree_square_sum += t.degrees.back() * t.degrees.back();
  }
  if (degree_square_sum != t.order) {
    throw InternalError("degree squares do not sum to the group order");
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (!(t.characters[0][j] == Cyclotomic(1))) {
      throw InternalError("first row is not the trivial character");
    }
  }
  for (std::size_t s = 0; s < k; ++s) {
    if (!(t.characters[s][0] == Cyclotomic(t.degrees[s]))) {
      throw InternalError("first column does not match the degrees");
    }
  }
  return t;
}

std::string render_text(const CharacterTable& t) {
  std::ostringstream out;
  out << "order " << t.order.get_str() << "\n";
  out << "classes " << t.class_count() << "\n";
  for (std::size_t j = 0; j < t.class_count(); ++j) {
    const ConjugacyClass& c = t.classes[j];
    out << "class " << j << " | order " << c.element_order << " | size "
        << c.size.get_str() << " | rep " << c.representative.to_cycle_string()
        << "\n";
  }
  for (std::size_t s = 0; s < t.characters.size(); ++s) {
    out << "chi " << s;
    for (const Cyclotomic& v : t.characters[s]) out << " | " << v.to_string();
    out << "\n";
  }
  return out.str();
}

namespace {

nlohmann::ordered_json integer_json(const Integer& n) {
  if (n.fits_slong_p()) {
    return nlohmann::ordered_json(n.get_si());
  }
  return nlohmann::ordered_json(n.get_str());
}

}  // namespace

std::string render_json(const CharacterTable& t) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["order"] = integer_json(t.order);
  j["degree"] = t.degree;
  j["dixon_prime"] = t.dixon_prime;
  j["split_seed"] = t.split_seed;
  j["classes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.class_count(); ++i) {
    const ConjugacyClass& c = t.classes[i];
    nlohmann::ordered_json cls;
    cls["index"] = i;
    cls["element_order"] = c.element_order;
    cls["size"] = integer_json(c.size);
    cls["representative"] = c.representative.to_cycle_string();
    j["classes"].push_back(std::move(cls));
  }
  j["degrees"] = nlohmann::ordered_json::array();
  for (const Integer& d : t.degrees) j["degrees"].push_back(integer_json(d));
  j["characters"] = nlohmann::ordered_json::array();
  for (const auto& row : t.characters) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Cyclotomic& v : row) r.push_back(v.to_string());
    j["characters"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::shared_ptr<const CharacterTable> TableCache::get(
    const PermutationGroup& g) {
  std::vector<Permutation> key = g.elements(max_order_);
  std::sort(key.begin(), key.end());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
  }
  auto table =
      std::make_shared<const CharacterTable>(character_table(g, max_order_));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = tables_.emplace(std::move(key), std::move(table));
  return it->second;
}

std::size_t conjugate_character_row(const CharacterTable& a_table,
                                    std::size_t row, const Permutation& g) {
  std::vector<Cyclotomic> conjugated;
  for (const ConjugacyClass& c : a_table.classes) {
    conjugated.push_back(
        a_table.value(row, a_table.class_of(conjugate(c.representative, g))));
  }
  for (std::size_t s = 0; s < a_table.characters.size(); ++s) {
    if (a_table.characters[s] == conjugated) return s;
  }
  throw InternalError("conjugate character is not a row of the table");
}

CliffordRestriction restrict_character(const PermutationGroup& g,
                                       const CharacterTable& t,
                                       std::size_t row,
                                       const PermutationGroup& a,
                                       TableCache& cache) {
  if (!is_normal(g, a)) {
    throw NotNormal("restriction requires a normal subgroup");
  }
  const std::shared_ptr<const CharacterTable> a_table = cache.get(a);
  const std::size_t ka = a_table->class_count();

  // Ambient character value on each class of A.
  std::vector<Cyclotomic> ambient;
  for (const ConjugacyClass& c : a_table->classes) {
    ambient.push_back(t.value(row, t.class_of(c.representative)));
  }

  const Rational inv_order = Rational(1) / Rational(a.order());
  std::vector<std::uint64_t> mults(ka, 0);
  for (std::size_t r = 0; r < ka; ++r) {
    Cyclotomic inner(0);
    for (std::size_t c = 0; c < ka; ++c) {
      inner += Cyclotomic(Rational(a_table->classes[c].size)) * ambient[c] *
               a_table->value(r, c).conjugate();
    }
    inner = Cyclotomic(inv_order) * inner;
    if (!inner.is_integer()) {
      throw InternalError("restriction multiplicity is not an integer");
    }
    const Rational val = inner.rational_value();
    if (val < 0) {
      throw InternalError("restriction multiplicity is negative");
    }
    mults[r] = checked_u64(Integer(val.get_num()), "constituent multiplicity");
  }

  CliffordRestriction out;
  out.row = row;
  out.subgroup_table = a_table;
  std::uint64_t e = 0;
  for (std::size_t r = 0; r < ka; ++r) {
    if (mults[r] == 0) continue;
    if (e == 0) {
      e = mults[r];
      out.constituent_row = r;
    } else if (mults[r] != e) {
      throw InternalError("constituent multiplicities are not uniform");
    }
    out.orbit_rows.push_back(r);
  }
  if (e == 0) throw InternalError("restriction has no constituents");
  out.multiplicity = e;
  out.orbit_length = out.orbit_rows.size();

  const Integer expected = Integer(static_cast<unsigned long>(e)) *
                           Integer(static_cast<unsigned long>(out.orbit_length)) *
                           a_table->degrees[out.constituent_row];
  if (expected != t.degrees[row]) {
    throw InternalError("e * t * zeta(1) does not equal chi(1)");
  }
  return out;
}

PermutationGroup inertia_subgroup(const PermutationGroup& g,
                                  const PermutationGroup& a,
                                  const CharacterTable& a_table,
                                  std::size_t zeta_row) {
  const std::uint64_t bound = checked_u64(g.order(), "group order");
  std::vector<Permutation> fixing;
  for (const Permutation& h : g.elements(bound)) {
    if (conjugate_character_row(a_table, zeta_row, h) == zeta_row) {
      fixing.push_back(h);
    }
  }
  (void)a;  // the inertia subgroup automatically contains A
  return subgroup_from_elements(g.degree(), fixing);
}

ValueMultiplicityReport p_orbit_value_report(const PermutationGroup& g,
                                             const CharacterTable& t,
                                             std::size_t row,
                                             const PermutationGroup& a,
                                             const Permutation& x,
                                             std::uint64_t p,
                                             const PermutationGroup& p_subgroup,
                                             TableCache& cache) {
  if (!is_abelian(a)) {
    throw NotAbelian("the report requires a normal abelian subgroup");
  }
  if (!a.contains(x)) {
    throw NotSubgroup("the element must lie in the normal abelian subgroup");
  }
  for (const Permutation& gen : p_subgroup.generators()) {
    if (!commute(x, gen)) {
      throw NotSubgroup("the element must centralize the Sylow subgroup");
    }
  }

  const CliffordRestriction restriction =
      restrict_character(g, t, row, a, cache);
  const CharacterTable& a_table = *restriction.subgroup_table;

  ValueMultiplicityReport report{.element = x};
  report.orbit_rows = restriction.orbit_rows;
  report.t = restriction.orbit_length;
  report.t_p = p_part(report.t, p);

  const std::size_t x_class = a_table.class_of(x);
  for (std::size_t r : report.orbit_rows) {
    report.orbit_values.push_back(a_table.value(r, x_class));
  }
  for (std::size_t i = 0; i < report.orbit_values.size(); ++i) {
    const Cyclotomic& v = report.orbit_values[i];
    auto it = std::find_if(
        report.value_multiplicity.begin(), report.value_multiplicity.end(),
        [&](const auto& pair) { return pair.first == v; });
    if (it == report.value_multiplicity.end()) {
      report.value_multiplicity.emplace_back(v, 1);
    } else {
      ++it->second;
    }
  }

  // Orbits of the Sylow subgroup acting on the conjugates by conjugation.
  std::vector<bool> seen(report.orbit_rows.size(), false);
  auto position_of = [&](std::size_t table_row) {
    for (std::size_t i = 0; i < report.orbit_rows.size(); ++i) {
      if (report.orbit_rows[i] == table_row) return i;
    }
    throw InternalError("Sylow conjugate left the character orbit");
  };
  for (std::size_t i = 0; i < report.orbit_rows.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    std::vector<std::size_t> queue{i};
    seen[i] = true;
    while (!queue.empty()) {
      const std::size_t pos = queue.back();
      queue.pop_back();
      orbit.push_back(report.orbit_rows[pos]);
      for (const Permutation& gen : p_subgroup.generators()) {
        const std::size_t image = position_of(
            conjugate_character_row(a_table, report.orbit_rows[pos], gen));
        if (!seen[image]) {
          seen[image] = true;
          queue.push_back(image);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    report.p_orbits.push_back(std::move(orbit));
  }

  const PermutationGroup inertia =
      inertia_subgroup(g, a, a_table, restriction.constituent_row);
  const Integer index = g.order() / inertia.order();
  report.index_p = p_part(checked_u64(index, "inertia index"), p);
  return report;
}

}  // namespace charvanish
