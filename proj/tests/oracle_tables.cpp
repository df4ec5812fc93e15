#include "oracle_tables.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "charvanish/cyclotomic.hpp"
#include "charvanish/groupspec.hpp"
#include "charvanish/permgroup.hpp"

namespace charvanish::oracle {
namespace {

using Mat = std::vector<std::vector<Cyclotomic>>;

void check(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("oracle check failed: " + what);
}

Mat identity_mat(std::size_t n) {
  Mat m(n, std::vector<Cyclotomic>(n, Cyclotomic(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic(1);
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, std::vector<Cyclotomic>(n, Cyclotomic(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

Cyclotomic trace(const Mat& m) {
  Cyclotomic t(0);
  for (std::size_t i = 0; i < m.size(); ++i) t = t + m[i][i];
  return t;
}

int sign_of(const Permutation& p) {
  int s = 1;
  for (const std::vector<int>& cycle : p.cycles()) {
    if (cycle.size() % 2 == 0) s = -s;
  }
  return s;
}

// The standard (n-1)-dimensional representation of Sym(n) on the basis
// f_i = e_i - e_{i+1} (0-based i in 0..n-2).
Mat standard_rep(const Permutation& sigma, int n) {
  Mat m(n - 1, std::vector<Cyclotomic>(n - 1, Cyclotomic(0)));
  for (int i = 0; i + 1 < n; ++i) {
    const int a = sigma.image(i);
    const int b = sigma.image(i + 1);
    // Column i holds e_a - e_b expanded in the f-basis.
    if (a < b) {
      for (int k = a; k < b; ++k) m[k][i] = m[k][i] + Cyclotomic(1);
    } else {
      for (int k = b; k < a; ++k) m[k][i] = m[k][i] - Cyclotomic(1);
    }
  }
  return m;
}

// Action of Sym(4) on the three partitions of {0,1,2,3} into two pairs,
// realizing the quotient map onto Sym(3).
Permutation partition_action(const Permutation& sigma) {
  using Pairing = std::array<std::array<int, 2>, 2>;
  auto normalize = [](Pairing p) {
    for (auto& pair : p) std::sort(pair.begin(), pair.end());
    std::sort(p.begin(), p.end());
    return p;
  };
  const std::array<Pairing, 3> partitions = {
      Pairing{{{0, 1}, {2, 3}}}, Pairing{{{0, 2}, {1, 3}}},
      Pairing{{{0, 3}, {1, 2}}}};
  std::vector<int> images(3);
  for (int t = 0; t < 3; ++t) {
    Pairing moved = partitions[t];
    for (auto& pair : moved) {
      for (int& point : pair) point = sigma.image(point);
    }
    moved = normalize(moved);
    bool found = false;
    for (int u = 0; u < 3; ++u) {
      if (moved == partitions[u]) {
        images[t] = u;
        found = true;
        break;
      }
    }
    check(found, "pair partition is not permuted");
  }
  return Permutation(std::move(images));
}

Mat scalar1(const Cyclotomic& v) { return Mat{{v}}; }

// An irreducible representation, as one matrix per group generator.
using Irrep = std::vector<Mat>;

std::vector<Irrep> irreps_for(const std::string& name,
                              const std::vector<Permutation>& gens) {
  const Cyclotomic one(1);
  const Cyclotomic minus_one(-1);
  const Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);

  if (name == "c2") {
    check(gens.size() == 1, "c2 generator count");
    return {{scalar1(one)}, {scalar1(minus_one)}};
  }
  if (name == "c6") {
    check(gens.size() == 1, "c6 generator count");
    std::vector<Irrep> out;
    for (int j = 0; j < 6; ++j) {
      out.push_back({scalar1(Cyclotomic::root_of_unity(6, j))});
    }
    return out;
  }
  if (name == "s3") {
    check(gens.size() == 2, "s3 generator count");
    return {{scalar1(one), scalar1(one)},
            {scalar1(Cyclotomic(sign_of(gens[0]))),
             scalar1(Cyclotomic(sign_of(gens[1])))},
            {standard_rep(gens[0], 3), standard_rep(gens[1], 3)}};
  }
  if (name == "d8") {
    check(gens.size() == 2, "d8 generator count");
    std::vector<Irrep> out;
    for (int er : {1, -1}) {
      for (int es : {1, -1}) {
        out.push_back({scalar1(Cyclotomic(er)), scalar1(Cyclotomic(es))});
      }
    }
    const Mat rot = {{i4, Cyclotomic(0)}, {Cyclotomic(0), i4.conjugate()}};
    const Mat flip = {{Cyclotomic(0), one}, {one, Cyclotomic(0)}};
    out.push_back({rot, flip});
    return out;
  }
  if (name == "q8") {
    check(gens.size() == 2, "q8 generator count");
    std::vector<Irrep> out;
    for (int ea : {1, -1}) {
      for (int eb : {1, -1}) {
        out.push_back({scalar1(Cyclotomic(ea)), scalar1(Cyclotomic(eb))});
      }
    }
    const Mat ma = {{i4, Cyclotomic(0)}, {Cyclotomic(0), i4.conjugate()}};
    const Mat mb = {{Cyclotomic(0), minus_one}, {one, Cyclotomic(0)}};
    out.push_back({ma, mb});
    return out;
  }
  if (name == "a4") {
    check(gens.size() == 2, "a4 generator count");
    const Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    const Cyclotomic w2 = Cyclotomic::root_of_unity(3, 2);
    return {{scalar1(one), scalar1(one)},
            {scalar1(w), scalar1(w2)},
            {scalar1(w2), scalar1(w)},
            {standard_rep(gens[0], 4), standard_rep(gens[1], 4)}};
  }
  if (name == "s4") {
    check(gens.size() == 2, "s4 generator count");
    std::vector<Irrep> out;
    out.push_back({scalar1(one), scalar1(one)});
    out.push_back({scalar1(Cyclotomic(sign_of(gens[0]))),
                   scalar1(Cyclotomic(sign_of(gens[1])))});
    out.push_back({standard_rep(partition_action(gens[0]), 3),
                   standard_rep(partition_action(gens[1]), 3)});
    out.push_back({standard_rep(gens[0], 4), standard_rep(gens[1], 4)});
    auto tensor_sign = [](const Mat& m, int s) {
      Mat out_m = m;
      if (s < 0) {
        for (auto& row : out_m) {
          for (Cyclotomic& v : row) v = -v;
        }
      }
      return out_m;
    };
    out.push_back({tensor_sign(standard_rep(gens[0], 4), sign_of(gens[0])),
                   tensor_sign(standard_rep(gens[1], 4), sign_of(gens[1]))});
    return out;
  }
  throw std::out_of_range("no reference table for group '" + name + "'");
}

// Extends generator matrices to the whole group by breadth-first search over
// left multiplication, asserting consistency on every edge.  Together with
// induction on word length this gives the homomorphism property; a random
// sample of full products double-checks the bookkeeping.
std::unordered_map<Permutation, Mat, PermutationHash> extend_rep(
    const PermutationGroup& g, const Irrep& rep) {
  const std::vector<Permutation>& gens = g.generators();
  const std::size_t dim = rep.empty() ? 1 : rep[0].size();

  std::unordered_map<Permutation, Mat, PermutationHash> table;
  const Permutation id(g.degree());
  table.emplace(id, identity_mat(dim));
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    const Permutation x = frontier.front();
    frontier.pop_front();
    const Mat mx = table.at(x);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Permutation y = compose(gens[gi], x);
      Mat my = mul(rep[gi], mx);
      auto it = table.find(y);
      if (it == table.end()) {
        table.emplace(y, std::move(my));
        frontier.push_back(y);
      } else {
        check(it->second == my, "representation is inconsistent on an edge");
      }
    }
  }
  check(table.size() == g.order(), "representation does not cover the group");

  const std::vector<Permutation> elements = g.elements();
  std::mt19937_64 rng(0x5eed);
  for (int t = 0; t < 2000; ++t) {
    const Permutation& x = elements[rng() % elements.size()];
    const Permutation& y = elements[rng() % elements.size()];
    check(table.at(compose(x, y)) == mul(table.at(x), table.at(y)),
          "representation is not multiplicative");
  }
  return table;
}

std::string render(const PermutationGroup& g,
                   const std::vector<std::vector<Cyclotomic>>& rows,
                   const std::vector<ConjugacyClass>& classes) {
  std::ostringstream out;
  out << "order " << g.order().get_str() << "\n";
  out << "classes " << classes.size() << "\n";
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const ConjugacyClass& c = classes[j];
    out << "class " << j << " | order " << c.element_order << " | size "
        << c.size.get_str() << " | rep " << c.representative.to_cycle_string()
        << "\n";
  }
  for (std::size_t s = 0; s < rows.size(); ++s) {
    out << "chi " << s;
    for (const Cyclotomic& v : rows[s]) out << " | " << v.to_string();
    out << "\n";
  }
  return out.str();
}

std::string build_table_text(const std::string& name) {
  const GroupSpec spec = [&] {
    const std::map<std::string, std::string> family = {
        {"c2", "family cyclic 2"},   {"c6", "family cyclic 6"},
        {"s3", "family symmetric 3"}, {"d8", "family dihedral 8"},
        {"q8", "family quaternion 8"}, {"a4", "family alternating 4"},
        {"s4", "family symmetric 4"}};
    return parse_group_spec(family.at(name));
  }();
  const PermutationGroup g = realize(spec);
  const std::vector<ConjugacyClass> classes = conjugacy_classes(g);
  const std::vector<Permutation> elements = g.elements();
  const std::vector<Irrep> irreps = irreps_for(name, g.generators());

  check(irreps.size() == classes.size(),
        "irreducible count must equal the class count");

  // Extend every representation and collect value vectors.
  struct Row {
    std::uint64_t degree = 0;
    std::vector<Cyclotomic> values;
    std::vector<std::string> rendered;
    bool trivial = true;
  };
  std::vector<Row> rows;
  std::vector<std::vector<Cyclotomic>> element_traces;
  Integer degree_square_sum = 0;
  for (const Irrep& rep : irreps) {
    auto table = extend_rep(g, rep);
    Row row;
    row.degree = rep.empty() ? 1 : rep[0].size();
    degree_square_sum += Integer(row.degree) * Integer(row.degree);
    for (const ConjugacyClass& c : classes) {
      Cyclotomic v = trace(table.at(c.representative));
      row.rendered.push_back(v.to_string());
      row.trivial = row.trivial && v == Cyclotomic(1);
      row.values.push_back(std::move(v));
    }
    check(row.values[0] == Cyclotomic(static_cast<long>(row.degree)),
          "value at the identity must be the degree");
    std::vector<Cyclotomic> traces;
    traces.reserve(elements.size());
    for (const Permutation& x : elements) traces.push_back(trace(table.at(x)));
    element_traces.push_back(std::move(traces));
    rows.push_back(std::move(row));
  }
  check(degree_square_sum == g.order(),
        "degree squares must sum to the group order");

  // Exact first orthogonality over all elements.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      Cyclotomic inner(0);
      for (std::size_t x = 0; x < elements.size(); ++x) {
        inner = inner + element_traces[i][x] * element_traces[j][x].conjugate();
      }
      const Cyclotomic expected =
          i == j ? Cyclotomic(Rational(g.order())) : Cyclotomic(0);
      check(inner == expected, "character rows must be orthonormal");
    }
  }

  // Canonical row order: trivial first, then by degree, then by the rendered
  // value vector.
  std::vector<std::size_t> idx(rows.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a].trivial != rows[b].trivial) return rows[a].trivial;
    if (rows[a].degree != rows[b].degree) return rows[a].degree < rows[b].degree;
    return rows[a].rendered < rows[b].rendered;
  });
  std::vector<std::vector<Cyclotomic>> ordered;
  for (std::size_t i : idx) ordered.push_back(rows[i].values);
  return render(g, ordered, classes);
}

}  // namespace

std::vector<std::string> reference_names() {
  return {"c2", "c6", "s3", "d8", "q8", "a4", "s4"};
}

std::string reference_table_text(const std::string& name) {
  return build_table_text(name);
}

}  // namespace charvanish::oracle
