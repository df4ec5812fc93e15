#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvanish/chartable.hpp"
#include "charvanish/permgroup.hpp"

namespace charvanish {

// Per-class vanishing data: a class vanishes iff some irreducible character
// is exactly zero on it; the witnesses are the rows that vanish there.
struct VanishingClassification {
  std::vector<bool> vanishing;                      // per class
  std::vector<std::vector<std::size_t>> witnesses;  // rows with value 0

  bool is_vanishing(std::size_t cls) const { return vanishing[cls]; }
};

VanishingClassification classify(const CharacterTable& t);

// Order plus generating set, for report output.
struct SubgroupInfo {
  Integer order;
  std::vector<std::string> generators;  // cycle notation
};

SubgroupInfo describe_subgroup(const PermutationGroup& g);

// Non-vanishing of F(G) intersect Z(P) for a Sylow p-subgroup P, plus the
// proof's reduction step F(G) intersect Z(P) contained in
// Z(O_p(F(G))) intersect Z(P).
struct TheoremCheck {
  std::uint64_t p = 2;
  SubgroupInfo sylow;
  SubgroupInfo sylow_center;
  SubgroupInfo nilpotent_n;  // the witness N
  SubgroupInfo intersection;
  std::vector<std::size_t> intersection_classes;  // classes met by N ^ Z(P)
  bool reduction_ok = false;  // N ^ Z(P) inside Z(O_p(N)) ^ Z(P)
  bool nonvanishing_ok = false;
  bool pass = false;
};

// Runs the check with N = nilpotent_n; callers normally pass the Fitting
// subgroup (the maximal witness).  Throws unless nilpotent_n is a normal
// nilpotent subgroup of g.
TheoremCheck verify_theorem(const PermutationGroup& g, std::uint64_t p,
                            const PermutationGroup& nilpotent_n,
                            TableCache& cache);

// Non-vanishing of A intersect Z(P) for normal abelian A, replaying the
// proof-level invariants per irreducible and per element.
struct PropositionCheck {
  std::uint64_t p = 2;
  SubgroupInfo abelian_a;
  SubgroupInfo sylow;
  SubgroupInfo intersection;
  std::vector<std::size_t> intersection_classes;
  bool nonvanishing_ok = false;
  bool clifford_uniform = false;   // equal multiplicity across each orbit
  bool orbit_constancy = false;    // values constant on each P-orbit
  bool divisibility = false;       // multiplicities divisible by |G:I|_p
  std::size_t replay_cases = 0;    // (row, x) pairs examined
  bool pass = false;
};

PropositionCheck verify_proposition(const PermutationGroup& g, std::uint64_t p,
                                    const PermutationGroup& abelian_a,
                                    TableCache& cache);

// Theorem with N = F(G) across every prime dividing |G|.
struct Corollary1Check {
  std::vector<TheoremCheck> per_prime;
  bool pass = false;
};

Corollary1Check verify_corollary1(const PermutationGroup& g, TableCache& cache);

// If no irreducible of normal N has degree divisible by p, then N has a
// normal abelian Sylow p-subgroup Q, N ^ Z(P) = Q ^ Z(P), and Z(P) ^ N is
// non-vanishing.  hypothesis_met false means inapplicable, not failed.
struct Corollary2Check {
  std::uint64_t p = 2;
  SubgroupInfo subgroup_n;
  bool hypothesis_met = false;   // all degrees of Irr(N) coprime to p
  bool q_normal_abelian = false;     // Q normal in N and abelian
  bool intersections_match = false;  // N ^ Z(P) = Q ^ Z(P)
  bool nonvanishing_ok = false;
  bool pass = false;  // true when inapplicable or all conclusions hold
};

Corollary2Check verify_corollary2(const PermutationGroup& g,
                                  const PermutationGroup& normal_n,
                                  std::uint64_t p, TableCache& cache);

// Defect-zero detection: for each prime r | |G|, the rows with
// chi(1)_r = |G|_r, each verified to vanish on every class of element order
// divisible by r.  If every prime has such a row, every non-trivial class
// must be vanishing.
struct DefectZeroCheck {
  struct PerPrime {
    std::uint64_t r = 2;
    std::vector<std::size_t> defect_zero_rows;
    bool vanish_ok = true;  // rows vanish where r divides the element order
  };
  std::vector<PerPrime> per_prime;
  bool covered = false;  // defect-zero rows found for every prime
  bool all_nontrivial_vanishing = false;  // checked when covered
  bool pass = false;  // instance checks hold (vacuous without rows)
};

DefectZeroCheck defect_zero_vanishing_check(const CharacterTable& t);

// Witness-enumeration sweep for small groups: every normal nilpotent N
// through the Theorem, every normal abelian A through the Proposition, and
// every (normal N, prime p) with the degree hypothesis through Corollary 2.
struct ExhaustiveCheck {
  bool ran = false;
  std::size_t nilpotent_witnesses = 0;
  std::size_t abelian_witnesses = 0;
  std::size_t corollary2_cases = 0;
  bool pass = true;
};

struct VerifyOptions {
  bool exhaustive = false;  // only honored for |G| <= 100
  std::uint64_t max_order = kDefaultTableOrderBound;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string group;
  Integer order;
  int degree = 0;
  std::vector<std::uint64_t> primes;  // primes dividing |G|, ascending
  std::vector<TheoremCheck> theorem;           // one per prime
  std::vector<PropositionCheck> proposition;   // one per prime
  Corollary1Check corollary1;
  std::vector<Corollary2Check> corollary2;     // one per prime, N = F(G)
  DefectZeroCheck defect_zero;
  ExhaustiveCheck exhaustive;
  double elapsed_seconds = 0.0;  // reported in text output only

  bool all_pass() const;
};

VerificationReport verify_group(const std::string& name,
                                const PermutationGroup& g,
                                const VerifyOptions& options,
                                TableCache& cache);

// Canonical JSON ("schema": 1); identical bytes for identical inputs, so
// timing stays out.  report_text includes the timing line.
std::string report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

}  // namespace charvanish
