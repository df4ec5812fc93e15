#include "charvanish/permgroup.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>
#include <utility>

#include "charvanish/errors.hpp"

namespace charvanish {

namespace {

int smallest_moved_point(const Permutation& g) {
  for (int i = 0; i < g.degree(); ++i) {
    if (g.image(i) != i) return i;
  }
  return -1;
}

}  // namespace

PermutationGroup::PermutationGroup(int degree,
                                   std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 1) throw MalformedPermutation("degree must be at least 1");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " +
                           std::to_string(degree_));
    }
  }
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    auto [res, level] = sift_from(0, g);
    if (res.is_identity()) continue;
    extend_level(level, res);
    for (std::size_t m = level; m-- > 0;) close_level(m);
  }
  order_ = 1;
  for (const auto& level : levels_) {
    order_ *= static_cast<unsigned long>(level.orbit.size());
  }
}

PermutationGroup PermutationGroup::trivial(int degree) {
  return PermutationGroup(degree, {});
}

// Strong generators at a level fix all earlier base points; the orbit and
// transversal at level i are taken under the union of generators at levels
// >= i.  close_level establishes the Schreier condition at one level
// assuming it already holds below.

void PermutationGroup::extend_level(std::size_t i, const Permutation& g) {
  if (i == levels_.size()) {
    Level fresh;
    fresh.base = smallest_moved_point(g);
    fresh.transversal.assign(degree_, std::nullopt);
    levels_.push_back(std::move(fresh));
  }
  levels_[i].gens.push_back(g);
  close_level(i);
}

void PermutationGroup::recompute_orbit(std::size_t i) {
  Level& level = levels_[i];
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base] = Permutation(degree_);
  level.orbit.push_back(level.base);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int o = level.orbit[head];
    for (std::size_t m = i; m < levels_.size(); ++m) {
      for (const auto& s : levels_[m].gens) {
        const int img = s.image(o);
        if (!level.transversal[img]) {
          level.transversal[img] = compose(s, *level.transversal[o]);
          level.orbit.push_back(img);
        }
      }
    }
  }
}

void PermutationGroup::close_level(std::size_t i) {
  recompute_orbit(i);
  bool dirty = true;
  while (dirty) {
    dirty = false;
    // Indexed access throughout: adding a level may reallocate levels_.
    for (std::size_t head = 0;
         !dirty && head < levels_[i].orbit.size(); ++head) {
      const int o = levels_[i].orbit[head];
      for (std::size_t m = i; !dirty && m < levels_.size(); ++m) {
        for (std::size_t si = 0; si < levels_[m].gens.size(); ++si) {
          const Permutation s = levels_[m].gens[si];
          const int img = s.image(o);
          Permutation schreier =
              compose(levels_[i].transversal[img]->inverse(),
                      compose(s, *levels_[i].transversal[o]));
          if (schreier.is_identity()) continue;
          auto [res, j] = sift_from(i + 1, std::move(schreier));
          if (res.is_identity()) continue;
          if (j == levels_.size()) {
            Level fresh;
            fresh.base = smallest_moved_point(res);
            fresh.transversal.assign(degree_, std::nullopt);
            levels_.push_back(std::move(fresh));
          }
          levels_[j].gens.push_back(res);
          for (std::size_t m2 = j; m2 > i; --m2) close_level(m2);
          recompute_orbit(i);
          dirty = true;
          break;
        }
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift_from(
    std::size_t start, Permutation g) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const int img = g.image(level.base);
    if (img == level.base) continue;
    if (!level.transversal[img]) return {std::move(g), i};
    g = compose(level.transversal[img]->inverse(), g);
  }
  return {std::move(g), levels_.size()};
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw DegreeMismatch("membership test across degrees");
  }
  auto [res, level] = sift_from(0, p);
  return res.is_identity();
}

std::vector<Permutation> PermutationGroup::elements(
    std::uint64_t bound) const {
  if (order_ > static_cast<unsigned long>(bound)) {
    throw GroupTooLarge("element enumeration of a group of order " +
                        order_.get_str() + " exceeds the bound " +
                        std::to_string(bound));
  }
  std::vector<Permutation> out{Permutation(degree_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const Level& level = levels_[i];
    std::vector<Permutation> next;
    next.reserve(out.size() * level.orbit.size());
    for (int o : level.orbit) {
      for (const auto& tail : out) {
        next.push_back(compose(*level.transversal[o], tail));
      }
    }
    out = std::move(next);
  }
  return out;
}

Integer PermutationGroup::transversal_product() const {
  Integer prod = 1;
  for (const auto& level : levels_) {
    unsigned long present = 0;
    for (const auto& t : level.transversal) {
      if (t) ++present;
    }
    prod *= present;
  }
  return prod;
}

PermutationGroup build_group(int degree, std::vector<Permutation> generators) {
  return PermutationGroup(degree, std::move(generators));
}

bool contains(const PermutationGroup& g, const Permutation& p) {
  return g.contains(p);
}

std::vector<ConjugacyClass> conjugacy_classes(const PermutationGroup& g,
                                              std::uint64_t bound) {
  const auto all = g.elements(bound);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<ConjugacyClass> classes;
  for (const auto& e : all) {
    if (seen.contains(e)) continue;
    // Orbit of e under conjugation by the group generators.
    std::vector<Permutation> members{e};
    seen.insert(e);
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Permutation x = members[head];
      for (const auto& s : g.generators()) {
        Permutation y = conjugate(x, s);
        if (seen.insert(y).second) members.push_back(std::move(y));
      }
    }
    std::sort(members.begin(), members.end());
    ConjugacyClass c;
    c.representative = members.front();
    c.size = static_cast<unsigned long>(members.size());
    c.element_order = c.representative.element_order();
    c.members = std::move(members);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              if (a.element_order != b.element_order) {
                return a.element_order < b.element_order;
              }
              if (a.size != b.size) return a.size < b.size;
              return a.representative < b.representative;
            });
  return classes;
}

PermutationGroup subgroup_from_elements(int degree,
                                        const std::vector<Permutation>& elems) {
  std::vector<Permutation> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  PermutationGroup h = PermutationGroup::trivial(degree);
  std::vector<Permutation> gens;
  for (const auto& e : sorted) {
    if (e.is_identity() || h.contains(e)) continue;
    gens.push_back(e);
    h = PermutationGroup(degree, gens);
  }
  return h;
}

PermutationGroup center(const PermutationGroup& g) {
  std::vector<Permutation> central;
  for (const auto& e : g.elements()) {
    bool commutes = true;
    for (const auto& s : g.generators()) {
      if (!commute(e, s)) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(e);
  }
  return subgroup_from_elements(g.degree(), central);
}

PermutationGroup normalizer(const PermutationGroup& g,
                            const PermutationGroup& h) {
  if (g.degree() != h.degree()) {
    throw DegreeMismatch("normalizer across degrees");
  }
  std::vector<Permutation> normalizing;
  for (const auto& n : g.elements()) {
    bool ok = true;
    for (const auto& s : h.generators()) {
      if (!h.contains(conjugate(s, n))) {
        ok = false;
        break;
      }
    }
    if (ok) normalizing.push_back(n);
  }
  return subgroup_from_elements(g.degree(), normalizing);
}

bool is_normal(const PermutationGroup& g, const PermutationGroup& h) {
  if (g.degree() != h.degree()) {
    throw DegreeMismatch("normality test across degrees");
  }
  for (const auto& s : h.generators()) {
    if (!g.contains(s)) {
      throw NotSubgroup("normality test against a non-subgroup");
    }
  }
  for (const auto& a : g.generators()) {
    for (const auto& s : h.generators()) {
      if (!h.contains(conjugate(s, a))) return false;
    }
  }
  return true;
}

bool is_abelian(const PermutationGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

PermutationGroup sylow_subgroup(const PermutationGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const std::uint64_t n = checked_u64(g.order(), "group order");
  const std::uint64_t target = p_part(n, p);
  if (target == 1) return PermutationGroup::trivial(g.degree());

  const auto all = g.elements();
  auto p_element_of = [&](const Permutation& x) {
    // x raised to its p'-part: a p-element generating the p-part of <x>.
    const std::uint64_t ord = x.element_order();
    return x.power(static_cast<std::int64_t>(ord / p_part(ord, p)));
  };

  PermutationGroup sylow = PermutationGroup::trivial(g.degree());
  std::vector<Permutation> gens;
  for (const auto& x : all) {
    if (x.element_order() % p == 0) {
      gens.push_back(p_element_of(x));
      sylow = PermutationGroup(g.degree(), gens);
      break;
    }
  }

  while (checked_u64(sylow.order(), "Sylow order") < target) {
    const PermutationGroup norm = normalizer(g, sylow);
    bool grown = false;
    for (const auto& z : norm.elements()) {
      if (z.is_identity()) continue;
      const Permutation y = p_element_of(z);
      if (y.is_identity() || sylow.contains(y)) continue;
      auto widened = gens;
      widened.push_back(y);
      PermutationGroup candidate(g.degree(), widened);
      const std::uint64_t ord = checked_u64(candidate.order(), "order");
      if (ord == p_part(ord, p)) {
        gens = std::move(widened);
        sylow = std::move(candidate);
        grown = true;
        break;
      }
    }
    if (!grown) {
      throw InternalError("Sylow construction stalled below the full p-part");
    }
  }
  return sylow;
}

bool is_nilpotent(const PermutationGroup& g) {
  const std::uint64_t n = checked_u64(g.order(), "group order");
  for (std::uint64_t p : prime_divisors(n)) {
    if (!is_normal(g, sylow_subgroup(g, p))) return false;
  }
  return true;
}

PermutationGroup p_core(const PermutationGroup& g, std::uint64_t p) {
  const PermutationGroup sylow = sylow_subgroup(g, p);
  if (sylow.is_trivial()) return sylow;
  // x lies in every Sylow p-subgroup iff the whole conjugacy class of x
  // stays inside this one.
  std::vector<Permutation> core_elems;
  std::unordered_set<Permutation, PermutationHash> decided_in, decided_out;
  for (const auto& x : sylow.elements()) {
    if (decided_in.contains(x)) {
      core_elems.push_back(x);
      continue;
    }
    if (decided_out.contains(x)) continue;
    std::vector<Permutation> cls{x};
    std::unordered_set<Permutation, PermutationHash> seen{x};
    bool inside = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      const Permutation cur = cls[head];
      for (const auto& s : g.generators()) {
        Permutation y = conjugate(cur, s);
        if (seen.insert(y).second) {
          if (!sylow.contains(y)) inside = false;
          cls.push_back(std::move(y));
        }
      }
      if (!inside) break;
    }
    auto& bucket = inside ? decided_in : decided_out;
    for (auto& y : cls) bucket.insert(std::move(y));
    if (inside) core_elems.push_back(x);
  }
  return subgroup_from_elements(g.degree(), core_elems);
}

PermutationGroup fitting_subgroup(const PermutationGroup& g) {
  const std::uint64_t n = checked_u64(g.order(), "group order");
  std::vector<Permutation> gens;
  for (std::uint64_t p : prime_divisors(n)) {
    const auto core = p_core(g, p);
    gens.insert(gens.end(), core.generators().begin(),
                core.generators().end());
  }
  return PermutationGroup(g.degree(), gens);
}

PermutationGroup intersection(const PermutationGroup& h,
                              const PermutationGroup& k) {
  if (h.degree() != k.degree()) {
    throw DegreeMismatch("intersection across degrees");
  }
  const PermutationGroup& small = h.order() <= k.order() ? h : k;
  const PermutationGroup& large = h.order() <= k.order() ? k : h;
  std::vector<Permutation> common;
  for (const auto& e : small.elements()) {
    if (large.contains(e)) common.push_back(e);
  }
  return subgroup_from_elements(h.degree(), common);
}

PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> gens;
  PermutationGroup h = PermutationGroup::trivial(g.degree());
  const auto& ggens = g.generators();
  for (const auto& a : ggens) {
    for (const auto& b : ggens) {
      Permutation c = compose(compose(a.inverse(), b.inverse()),
                              compose(a, b));
      if (!c.is_identity() && !h.contains(c)) {
        gens.push_back(std::move(c));
        h = PermutationGroup(g.degree(), gens);
      }
    }
  }
  // Normal closure under conjugation by the group generators.
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Permutation> hgens = h.generators();
    for (const auto& s : hgens) {
      for (const auto& a : ggens) {
        Permutation c = conjugate(s, a);
        if (!h.contains(c)) {
          gens.push_back(std::move(c));
          h = PermutationGroup(g.degree(), gens);
          changed = true;
        }
      }
    }
  }
  return h;
}

std::vector<PermutationGroup> normal_subgroups(const PermutationGroup& g,
                                               std::uint64_t bound) {
  if (g.order() > static_cast<unsigned long>(bound)) {
    throw GroupTooLarge("normal-subgroup enumeration bound exceeded: " +
                        g.order().get_str() + " > " + std::to_string(bound));
  }
  const auto classes = conjugacy_classes(g);

  auto normal_closure = [&](std::vector<Permutation> seed) {
    PermutationGroup h = subgroup_from_elements(g.degree(), seed);
    bool changed = true;
    while (changed) {
      changed = false;
      const std::vector<Permutation> hgens = h.generators();
      for (const auto& s : hgens) {
        for (const auto& a : g.generators()) {
          Permutation c = conjugate(s, a);
          if (!h.contains(c)) {
            auto gens = h.generators();
            gens.push_back(std::move(c));
            h = PermutationGroup(g.degree(), gens);
            changed = true;
          }
        }
      }
    }
    return h;
  };

  // Atoms: normal closures of single classes.  Every normal subgroup is a
  // join of atoms, and joins of normal subgroups need no further closure.
  std::map<std::vector<Permutation>, PermutationGroup> family;
  auto key_of = [](const PermutationGroup& h) { return h.elements(); };
  auto add = [&](PermutationGroup h) {
    auto key = key_of(h);
    std::sort(key.begin(), key.end());
    return family.emplace(std::move(key), std::move(h)).second;
  };

  add(PermutationGroup::trivial(g.degree()));
  for (const auto& c : classes) {
    add(normal_closure({c.representative}));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const PermutationGroup*> current;
    current.reserve(family.size());
    for (const auto& [k, h] : family) current.push_back(&h);
    for (std::size_t i = 0; i < current.size() && !grew; ++i) {
      for (std::size_t j = i + 1; j < current.size() && !grew; ++j) {
        std::vector<Permutation> gens = current[i]->generators();
        const auto& more = current[j]->generators();
        gens.insert(gens.end(), more.begin(), more.end());
        PermutationGroup join(g.degree(), gens);
        if (add(std::move(join))) grew = true;
      }
    }
  }

  std::vector<PermutationGroup> out;
  out.reserve(family.size());
  for (auto& [k, h] : family) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(),
            [](const PermutationGroup& a, const PermutationGroup& b) {
              return a.order() < b.order();
            });
  return out;
}

}  // namespace charvanish
