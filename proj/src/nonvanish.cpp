#include "charvanish/nonvanish.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "charvanish/errors.hpp"
#include "report_detail.hpp"

namespace charvanish {

namespace {

// Classes of t met by the elements of `sub`, ascending, deduplicated.
std::vector<std::size_t> classes_met(const CharacterTable& t,
                                     const PermutationGroup& sub) {
  std::set<std::size_t> met;
  for (const Permutation& x : sub.elements()) met.insert(t.class_of(x));
  return {met.begin(), met.end()};
}

bool all_nonvanishing(const VanishingClassification& c,
                      const std::vector<std::size_t>& classes) {
  for (std::size_t j : classes) {
    if (c.vanishing[j]) return false;
  }
  return true;
}

const char* ok_str(bool b) { return b ? "ok" : "FAIL"; }
const char* pass_str(bool b) { return b ? "PASS" : "FAIL"; }

}  // namespace

VanishingClassification classify(const CharacterTable& t) {
  VanishingClassification out;
  out.vanishing.resize(t.class_count(), false);
  out.witnesses.resize(t.class_count());
  for (std::size_t j = 0; j < t.class_count(); ++j) {
    for (std::size_t r = 0; r < t.characters.size(); ++r) {
      if (t.value(r, j).is_zero()) out.witnesses[j].push_back(r);
    }
    out.vanishing[j] = !out.witnesses[j].empty();
  }
  return out;
}

SubgroupInfo describe_subgroup(const PermutationGroup& g) {
  SubgroupInfo info;
  info.order = g.order();
  for (const Permutation& gen : g.generators()) {
    info.generators.push_back(gen.to_cycle_string());
  }
  return info;
}

TheoremCheck verify_theorem(const PermutationGroup& g, std::uint64_t p,
                            const PermutationGroup& nilpotent_n,
                            TableCache& cache) {
  if (!is_normal(g, nilpotent_n)) {
    throw NotNormal("the theorem witness must be a normal subgroup");
  }
  if (!is_nilpotent(nilpotent_n)) {
    throw NotNilpotent("the theorem witness must be nilpotent");
  }

  TheoremCheck check;
  check.p = p;
  const auto t = cache.get(g);
  const PermutationGroup sylow = sylow_subgroup(g, p);
  const PermutationGroup sylow_center = center(sylow);
  const PermutationGroup inter = intersection(nilpotent_n, sylow_center);
  check.sylow = describe_subgroup(sylow);
  check.sylow_center = describe_subgroup(sylow_center);
  check.nilpotent_n = describe_subgroup(nilpotent_n);
  check.intersection = describe_subgroup(inter);
  check.intersection_classes = classes_met(*t, inter);
  check.nonvanishing_ok =
      all_nonvanishing(classify(*t), check.intersection_classes);

  // The proof's reduction: x in N ^ Z(P) lies in O_p(N), which is contained
  // in P, so x in Z(O_p(N)) ^ Z(P).
  const PermutationGroup op_n = p_core(nilpotent_n, p);
  const PermutationGroup z_op_n = center(op_n);
  check.reduction_ok = true;
  for (const Permutation& x : inter.elements()) {
    if (!contains(z_op_n, x)) check.reduction_ok = false;
  }

  check.pass = check.nonvanishing_ok && check.reduction_ok;
  return check;
}

PropositionCheck verify_proposition(const PermutationGroup& g, std::uint64_t p,
                                    const PermutationGroup& abelian_a,
                                    TableCache& cache) {
  if (!is_normal(g, abelian_a)) {
    throw NotNormal("the proposition witness must be a normal subgroup");
  }
  if (!is_abelian(abelian_a)) {
    throw NotAbelian("the proposition witness must be abelian");
  }

  PropositionCheck check;
  check.p = p;
  const auto t = cache.get(g);
  const PermutationGroup sylow = sylow_subgroup(g, p);
  const PermutationGroup sylow_center = center(sylow);
  const PermutationGroup inter = intersection(abelian_a, sylow_center);
  check.abelian_a = describe_subgroup(abelian_a);
  check.sylow = describe_subgroup(sylow);
  check.intersection = describe_subgroup(inter);
  check.intersection_classes = classes_met(*t, inter);
  check.nonvanishing_ok =
      all_nonvanishing(classify(*t), check.intersection_classes);

  check.clifford_uniform = true;
  check.orbit_constancy = true;
  check.divisibility = true;

  const std::vector<Permutation> xs = inter.elements();
  const std::vector<ConjugacyClass> a_classes = conjugacy_classes(abelian_a);
  const Rational inv_a_order = Rational(1) / Rational(abelian_a.order());

  for (std::size_t row = 0; row < t->characters.size(); ++row) {
    const CliffordRestriction restriction =
        restrict_character(g, *t, row, abelian_a, cache);
    const CharacterTable& a_table = *restriction.subgroup_table;

    // Independent recomputation of the restriction multiplicities by inner
    // products over A's classes: nonzero exactly on the orbit, always e.
    std::vector<Cyclotomic> ambient;
    ambient.reserve(a_classes.size());
    for (const ConjugacyClass& c : a_classes) {
      ambient.push_back(t->value(row, t->class_of(c.representative)));
    }
    const Cyclotomic e_value(Integer(restriction.multiplicity));
    for (std::size_t zr = 0; zr < a_table.characters.size(); ++zr) {
      // A is abelian: every constituent is linear.
      if (a_table.degrees[zr] != 1) check.clifford_uniform = false;
      Cyclotomic inner(0);
      for (std::size_t c = 0; c < a_classes.size(); ++c) {
        inner = inner + Cyclotomic(Rational(a_classes[c].size)) * ambient[c] *
                            a_table.value(zr, c).conjugate();
      }
      inner = Cyclotomic(inv_a_order) * inner;
      const bool in_orbit =
          std::find(restriction.orbit_rows.begin(),
                    restriction.orbit_rows.end(),
                    zr) != restriction.orbit_rows.end();
      if (inner != (in_orbit ? e_value : Cyclotomic(0))) {
        check.clifford_uniform = false;
      }
    }
    // chi(1) = e * t * zeta(1).
    if (Integer(restriction.multiplicity) *
            Integer(restriction.orbit_length) !=
        t->degrees[row]) {
      check.clifford_uniform = false;
    }

    for (const Permutation& x : xs) {
      const ValueMultiplicityReport report =
          p_orbit_value_report(g, *t, row, abelian_a, x, p, sylow, cache);
      ++check.replay_cases;

      // chi(x) = e * sum of the conjugate values at x.
      Cyclotomic total(0);
      for (const Cyclotomic& v : report.orbit_values) total = total + v;
      if (e_value * total != t->value(row, t->class_of(x))) {
        check.clifford_uniform = false;
      }

      // The two p-parts of |G : I| must agree, every value multiplicity must
      // be divisible by t_p, and every P-orbit size by |G:I|_p.
      if (report.t_p != report.index_p) check.divisibility = false;
      std::uint64_t multiplicity_total = 0;
      for (const auto& [value, count] : report.value_multiplicity) {
        if (count % report.t_p != 0) check.divisibility = false;
        multiplicity_total += count;
      }
      if (multiplicity_total != report.t) check.divisibility = false;
      std::size_t covered = 0;
      for (const std::vector<std::size_t>& orbit : report.p_orbits) {
        if (orbit.size() % report.index_p != 0) check.divisibility = false;
        covered += orbit.size();
        // Values constant on each P-orbit since x is central in P.
        auto value_of_row = [&](std::size_t table_row) {
          for (std::size_t i = 0; i < report.orbit_rows.size(); ++i) {
            if (report.orbit_rows[i] == table_row) {
              return report.orbit_values[i];
            }
          }
          throw InternalError("p-orbit entry is not a listed conjugate");
        };
        for (std::size_t table_row : orbit) {
          if (value_of_row(table_row) != value_of_row(orbit[0])) {
            check.orbit_constancy = false;
          }
        }
      }
      if (covered != report.orbit_rows.size()) check.orbit_constancy = false;
    }
  }

  check.pass = check.nonvanishing_ok && check.clifford_uniform &&
               check.orbit_constancy && check.divisibility;
  return check;
}

Corollary1Check verify_corollary1(const PermutationGroup& g,
                                  TableCache& cache) {
  Corollary1Check out;
  out.pass = true;
  const PermutationGroup fitting = fitting_subgroup(g);
  const std::uint64_t order = checked_u64(g.order(), "group order");
  for (std::uint64_t p : prime_divisors(order)) {
    out.per_prime.push_back(verify_theorem(g, p, fitting, cache));
    out.pass = out.pass && out.per_prime.back().pass;
  }
  return out;
}

Corollary2Check verify_corollary2(const PermutationGroup& g,
                                  const PermutationGroup& normal_n,
                                  std::uint64_t p, TableCache& cache) {
  if (!is_normal(g, normal_n)) {
    throw NotNormal("the corollary witness must be a normal subgroup");
  }

  Corollary2Check check;
  check.p = p;
  check.subgroup_n = describe_subgroup(normal_n);

  const auto n_table = cache.get(normal_n);
  check.hypothesis_met = true;
  for (const Integer& d : n_table->degrees) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) check.hypothesis_met = false;
  }
  if (!check.hypothesis_met) {
    check.pass = true;  // inapplicable, not a failure
    return check;
  }

  // Ito-Michler conclusion, checked structurally.
  const PermutationGroup q = sylow_subgroup(normal_n, p);
  check.q_normal_abelian = is_normal(normal_n, q) && is_abelian(q);
  if (check.q_normal_abelian && !is_normal(g, q)) {
    // A unique Sylow subgroup is characteristic in N, hence normal in G.
    throw InternalError("normal Sylow subgroup is not normal in the group");
  }

  const auto t = cache.get(g);
  const PermutationGroup sylow = sylow_subgroup(g, p);
  const PermutationGroup sylow_center = center(sylow);
  const PermutationGroup n_inter = intersection(normal_n, sylow_center);
  const PermutationGroup q_inter = intersection(q, sylow_center);
  check.intersections_match = n_inter.order() == q_inter.order();
  check.nonvanishing_ok =
      all_nonvanishing(classify(*t), classes_met(*t, n_inter));

  check.pass = check.q_normal_abelian && check.intersections_match &&
               check.nonvanishing_ok;
  return check;
}

DefectZeroCheck defect_zero_vanishing_check(const CharacterTable& t) {
  DefectZeroCheck check;
  const std::uint64_t order = checked_u64(t.order, "group order");
  const VanishingClassification classification = classify(t);

  check.covered = true;
  bool instances_ok = true;
  for (std::uint64_t r : prime_divisors(order)) {
    DefectZeroCheck::PerPrime per;
    per.r = r;
    const std::uint64_t order_part = p_part(order, r);
    for (std::size_t row = 0; row < t.characters.size(); ++row) {
      const std::uint64_t degree =
          checked_u64(t.degrees[row], "character degree");
      if (p_part(degree, r) == order_part) per.defect_zero_rows.push_back(row);
    }
    per.vanish_ok = true;
    for (std::size_t row : per.defect_zero_rows) {
      for (std::size_t j = 0; j < t.class_count(); ++j) {
        if (t.classes[j].element_order % r == 0 && !t.value(row, j).is_zero()) {
          per.vanish_ok = false;
        }
      }
    }
    check.covered = check.covered && !per.defect_zero_rows.empty();
    instances_ok = instances_ok && per.vanish_ok;
    check.per_prime.push_back(std::move(per));
  }

  if (check.covered) {
    check.all_nontrivial_vanishing = true;
    for (std::size_t j = 1; j < t.class_count(); ++j) {
      if (!classification.vanishing[j]) check.all_nontrivial_vanishing = false;
    }
  }
  check.pass =
      instances_ok && (!check.covered || check.all_nontrivial_vanishing);
  return check;
}

bool VerificationReport::all_pass() const {
  for (const TheoremCheck& c : theorem) {
    if (!c.pass) return false;
  }
  for (const PropositionCheck& c : proposition) {
    if (!c.pass) return false;
  }
  if (!corollary1.pass) return false;
  for (const Corollary2Check& c : corollary2) {
    if (!c.pass) return false;
  }
  if (!defect_zero.pass) return false;
  if (exhaustive.ran && !exhaustive.pass) return false;
  return true;
}

VerificationReport verify_group(const std::string& name,
                                const PermutationGroup& g,
                                const VerifyOptions& options,
                                TableCache& cache) {
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.group = name;
  report.order = g.order();
  report.degree = g.degree();
  const std::uint64_t order = checked_u64(g.order(), "group order");
  report.primes = prime_divisors(order);

  const auto t = cache.get(g);
  const PermutationGroup fitting = fitting_subgroup(g);
  for (std::uint64_t p : report.primes) {
    report.theorem.push_back(verify_theorem(g, p, fitting, cache));
    // The proposition witness from the theorem's proof: Z(O_p(F(G))).
    const PermutationGroup a = center(p_core(fitting, p));
    report.proposition.push_back(verify_proposition(g, p, a, cache));
    report.corollary2.push_back(verify_corollary2(g, fitting, p, cache));
  }
  report.corollary1 = verify_corollary1(g, cache);
  report.defect_zero = defect_zero_vanishing_check(*t);

  if (options.exhaustive && g.order() <= 100) {
    report.exhaustive.ran = true;
    for (const PermutationGroup& h : normal_subgroups(g)) {
      const bool nilpotent = is_nilpotent(h);
      const bool abelian = is_abelian(h);
      if (nilpotent) ++report.exhaustive.nilpotent_witnesses;
      if (abelian) ++report.exhaustive.abelian_witnesses;
      for (std::uint64_t p : report.primes) {
        if (nilpotent) {
          report.exhaustive.pass =
              report.exhaustive.pass && verify_theorem(g, p, h, cache).pass;
        }
        if (abelian) {
          report.exhaustive.pass = report.exhaustive.pass &&
                                   verify_proposition(g, p, h, cache).pass;
        }
        const Corollary2Check c2 = verify_corollary2(g, h, p, cache);
        if (c2.hypothesis_met) {
          ++report.exhaustive.corollary2_cases;
          report.exhaustive.pass = report.exhaustive.pass && c2.pass;
        }
      }
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

namespace {

nlohmann::ordered_json integer_json(const Integer& n) {
  if (n.fits_slong_p()) {
    return nlohmann::ordered_json(n.get_si());
  }
  return nlohmann::ordered_json(n.get_str());
}

nlohmann::ordered_json subgroup_json(const SubgroupInfo& info) {
  nlohmann::ordered_json j;
  j["order"] = integer_json(info.order);
  j["generators"] = info.generators;
  return j;
}

nlohmann::ordered_json theorem_json(const TheoremCheck& c) {
  nlohmann::ordered_json j;
  j["p"] = c.p;
  j["sylow"] = subgroup_json(c.sylow);
  j["sylow_center"] = subgroup_json(c.sylow_center);
  j["nilpotent_n"] = subgroup_json(c.nilpotent_n);
  j["intersection"] = subgroup_json(c.intersection);
  j["intersection_classes"] = c.intersection_classes;
  j["reduction_ok"] = c.reduction_ok;
  j["nonvanishing_ok"] = c.nonvanishing_ok;
  j["pass"] = c.pass;
  return j;
}

nlohmann::ordered_json proposition_json(const PropositionCheck& c) {
  nlohmann::ordered_json j;
  j["p"] = c.p;
  j["abelian_a"] = subgroup_json(c.abelian_a);
  j["sylow"] = subgroup_json(c.sylow);
  j["intersection"] = subgroup_json(c.intersection);
  j["intersection_classes"] = c.intersection_classes;
  j["nonvanishing_ok"] = c.nonvanishing_ok;
  j["clifford_uniform"] = c.clifford_uniform;
  j["orbit_constancy"] = c.orbit_constancy;
  j["divisibility"] = c.divisibility;
  j["replay_cases"] = c.replay_cases;
  j["pass"] = c.pass;
  return j;
}

nlohmann::ordered_json corollary2_json(const Corollary2Check& c) {
  nlohmann::ordered_json j;
  j["p"] = c.p;
  j["subgroup_n"] = subgroup_json(c.subgroup_n);
  j["hypothesis_met"] = c.hypothesis_met;
  j["q_normal_abelian"] = c.q_normal_abelian;
  j["intersections_match"] = c.intersections_match;
  j["nonvanishing_ok"] = c.nonvanishing_ok;
  j["pass"] = c.pass;
  return j;
}

}  // namespace

namespace detail {

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["group"] = r.group;
  j["order"] = integer_json(r.order);
  j["degree"] = r.degree;
  j["primes"] = r.primes;
  j["all_pass"] = r.all_pass();
  j["theorem"] = nlohmann::ordered_json::array();
  for (const TheoremCheck& c : r.theorem) j["theorem"].push_back(theorem_json(c));
  j["proposition"] = nlohmann::ordered_json::array();
  for (const PropositionCheck& c : r.proposition) {
    j["proposition"].push_back(proposition_json(c));
  }
  j["corollary1"] = nlohmann::ordered_json();
  j["corollary1"]["per_prime"] = nlohmann::ordered_json::array();
  for (const TheoremCheck& c : r.corollary1.per_prime) {
    j["corollary1"]["per_prime"].push_back(theorem_json(c));
  }
  j["corollary1"]["pass"] = r.corollary1.pass;
  j["corollary2"] = nlohmann::ordered_json::array();
  for (const Corollary2Check& c : r.corollary2) {
    j["corollary2"].push_back(corollary2_json(c));
  }
  nlohmann::ordered_json dz;
  dz["per_prime"] = nlohmann::ordered_json::array();
  for (const DefectZeroCheck::PerPrime& per : r.defect_zero.per_prime) {
    nlohmann::ordered_json pj;
    pj["r"] = per.r;
    pj["defect_zero_rows"] = per.defect_zero_rows;
    pj["vanish_ok"] = per.vanish_ok;
    dz["per_prime"].push_back(std::move(pj));
  }
  dz["covered"] = r.defect_zero.covered;
  dz["all_nontrivial_vanishing"] = r.defect_zero.all_nontrivial_vanishing;
  dz["pass"] = r.defect_zero.pass;
  j["defect_zero"] = std::move(dz);
  nlohmann::ordered_json ex;
  ex["ran"] = r.exhaustive.ran;
  ex["nilpotent_witnesses"] = r.exhaustive.nilpotent_witnesses;
  ex["abelian_witnesses"] = r.exhaustive.abelian_witnesses;
  ex["corollary2_cases"] = r.exhaustive.corollary2_cases;
  ex["pass"] = r.exhaustive.pass;
  j["exhaustive"] = std::move(ex);
  return j;
}

}  // namespace detail

std::string report_json(const VerificationReport& r) {
  return detail::report_to_json(r).dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "group " << r.group << " | order " << r.order.get_str() << " | degree "
      << r.degree << "\n";
  out << "primes";
  if (r.primes.empty()) out << " none";
  for (std::uint64_t p : r.primes) out << " " << p;
  out << "\n";
  for (const TheoremCheck& c : r.theorem) {
    out << "theorem p=" << c.p << " | N " << c.nilpotent_n.order.get_str()
        << " | Z(P) " << c.sylow_center.order.get_str() << " | N^Z(P) "
        << c.intersection.order.get_str() << " | classes";
    for (std::size_t j : c.intersection_classes) out << " " << j;
    out << " | reduction " << ok_str(c.reduction_ok) << " | nonvanishing "
        << ok_str(c.nonvanishing_ok) << " | " << pass_str(c.pass) << "\n";
  }
  for (const PropositionCheck& c : r.proposition) {
    out << "proposition p=" << c.p << " | A " << c.abelian_a.order.get_str()
        << " | A^Z(P) " << c.intersection.order.get_str() << " | replay "
        << c.replay_cases << " | uniform " << ok_str(c.clifford_uniform)
        << " | constancy " << ok_str(c.orbit_constancy) << " | divisibility "
        << ok_str(c.divisibility) << " | nonvanishing "
        << ok_str(c.nonvanishing_ok) << " | " << pass_str(c.pass) << "\n";
  }
  out << "corollary1 | " << pass_str(r.corollary1.pass) << "\n";
  for (const Corollary2Check& c : r.corollary2) {
    out << "corollary2 p=" << c.p << " | ";
    if (!c.hypothesis_met) {
      out << "inapplicable | " << pass_str(c.pass) << "\n";
      continue;
    }
    out << "hypothesis met | q " << ok_str(c.q_normal_abelian) << " | match "
        << ok_str(c.intersections_match) << " | nonvanishing "
        << ok_str(c.nonvanishing_ok) << " | " << pass_str(c.pass) << "\n";
  }
  for (const DefectZeroCheck::PerPrime& per : r.defect_zero.per_prime) {
    out << "defect_zero r=" << per.r << " | rows "
        << per.defect_zero_rows.size() << " | vanish " << ok_str(per.vanish_ok)
        << "\n";
  }
  out << "defect_zero | covered " << (r.defect_zero.covered ? "yes" : "no")
      << " | " << pass_str(r.defect_zero.pass) << "\n";
  if (r.exhaustive.ran) {
    out << "exhaustive | nilpotent " << r.exhaustive.nilpotent_witnesses
        << " | abelian " << r.exhaustive.abelian_witnesses << " | corollary2 "
        << r.exhaustive.corollary2_cases << " | " << pass_str(r.exhaustive.pass)
        << "\n";
  } else {
    out << "exhaustive | skipped\n";
  }
  out << "elapsed_seconds " << r.elapsed_seconds << "\n";
  out << "verdict " << pass_str(r.all_pass()) << "\n";
  return out.str();
}

}  // namespace charvanish
