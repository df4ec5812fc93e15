#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace charvanish {

// A permutation of the points 0..degree-1, stored as an image vector.
// Textual I/O (cycle notation) is 1-based, matching the group-spec format.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  // Cycles given as 1-based point lists, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_[point]; }
  bool is_identity() const;

  Permutation inverse() const;
  Permutation power(std::int64_t e) const;
  std::uint64_t element_order() const;  // lcm of cycle lengths

  // Non-trivial cycles, 0-based points, each cycle starting at its smallest
  // point, cycles sorted by first point.
  std::vector<std::vector<int>> cycles() const;
  std::string to_cycle_string() const;  // "(1 2 3)(4 5)"; identity -> "()"

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

// Composition per (p ∘ q)(i) = p(q(i)): q acts first.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// g x g^-1
Permutation conjugate(const Permutation& x, const Permutation& g);

bool commute(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace charvanish
