#include "charvanish/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "charvanish/errors.hpp"
#include "charvanish/numeric.hpp"

namespace charvanish {

Permutation::Permutation(int degree) {
  if (degree < 1) throw MalformedPermutation("degree must be at least 1");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw MalformedPermutation("empty image vector");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size())) {
      throw MalformedPermutation("image out of range: " + std::to_string(v));
    }
    if (seen[v]) {
      throw MalformedPermutation("repeated image: " + std::to_string(v));
    }
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree) {
        throw MalformedPermutation("point out of range: " +
                                   std::to_string(from));
      }
      if (moved[from - 1]) {
        throw MalformedPermutation("repeated point: " + std::to_string(from));
      }
      moved[from - 1] = true;
      p.images_[from - 1] = to - 1;
    }
  }
  // Re-validate: overlapping cycles could break bijectivity.
  return Permutation(std::move(p.images_));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Permutation Permutation::power(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  Permutation acc(degree());
  while (k > 0) {
    if (k & 1) acc = compose(base, acc);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::element_order() const {
  std::uint64_t order = 1;
  for (const auto& cycle : cycles()) {
    order = lcm_u64(order, cycle.size());
  }
  return order;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cycle;
    int p = start;
    do {
      seen[p] = true;
      cycle.push_back(p);
      p = images_[p];
    } while (p != start);
    out.push_back(std::move(cycle));
  }
  return out;  // already sorted: starts are visited in increasing order
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("compose: degree " + std::to_string(p.degree()) +
                         " vs " + std::to_string(q.degree()));
  }
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) images[i] = p.image(q.image(i));
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g, x), g.inverse());
}

bool commute(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("commute: degree mismatch");
  }
  for (int i = 0; i < a.degree(); ++i) {
    if (a.image(b.image(i)) != b.image(a.image(i))) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace charvanish
