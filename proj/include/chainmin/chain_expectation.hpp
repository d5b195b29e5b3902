#pragma once
// The probabilistic engine: uniform random maximal chains, the functional
//   f(X) = m_k(sum of |P_r(x)|) - c_k(union of P_r(x)),
// exact expectation identities over all maximal chains, and the discrete
// Jensen inequality for integer-valued convex tables.
//
// Everything here is exact: expectations are rationals with the maximal
// chain count as denominator, and every inequality is decided, not sampled.
// Sampling exists separately as a falsification probe.

#include <cstdint>
#include <string>
#include <vector>

#include "chainmin/centred.hpp"
#include "chainmin/level_profile.hpp"
#include "chainmin/numbers.hpp"
#include "chainmin/poset.hpp"
#include "chainmin/rng.hpp"

namespace chainmin {

struct MaximalChain {
  std::vector<int> elems;  // elems[i] has rank i
};

Count count_maximal_chains(const GradedPoset& p);

// Every maximal chain exactly once; refuses when the count exceeds `guard`.
std::vector<MaximalChain> enumerate_maximal_chains(const GradedPoset& p,
                                                   std::uint64_t guard = 1000000);

// Exactly uniform for every graded poset: each step picks the next element
// with probability proportional to the exact number of maximal chains through
// it (weighted sequential sampling).
MaximalChain sample_maximal_chain(const GradedPoset& p, Rng& rng);

// Number of maximal chains containing a given chain (any ranks).
Count count_maximal_chains_through(const GradedPoset& p,
                                   const std::vector<int>& chain);

// f bundled with the tables it needs.
struct ChainFunctional {
  const GradedPoset* poset = nullptr;
  LevelProfile profile;
  MkTable table;  // m_k over 0..|P|
  int k = 0;

  static ChainFunctional make(const GradedPoset& p, int k);
  // X given by its elements; must be a chain.
  Count value(const std::vector<int>& chain_elems) const;
};

Count f_value(const ChainFunctional& fn, const std::vector<int>& chain_elems);

struct ExpectationReport {
  Count chain_count = 0;      // number of maximal chains
  Count ck_family = 0;        // c_k(A)
  Count mk_of_size = 0;       // m_k(|A|)
  Rat e_f;                    // E[f(A cap C)]
  Rat e_mk_term;              // E[m_k(weighted size of A cap C)]
  Rat e_ck_term;              // E[sum over k-subchains of c_k(union of levels)]
  Rat e_weighted_size;        // E[sum of |P_r(x)| over A cap C]

  bool e_f_nonpositive = false;
  bool identity_ck = false;       // e_ck_term == c_k(A) exactly
  bool identity_size = false;     // e_weighted_size == |A| exactly
  bool jensen_ok = false;         // m_k(|A|) <= e_mk_term
  bool conclusion_ok = false;     // c_k(A) >= m_k(|A|)
  std::string witness;

  bool pass() const {
    return e_f_nonpositive && identity_ck && identity_size && jensen_ok &&
           conclusion_ok;
  }
};

// Exact mode: averages over every maximal chain.
ExpectationReport expectation_report(const Family& fam, int k,
                                     std::uint64_t guard = 1000000);

// Reusable form: caller supplies the functional and the enumerated chains
// (amortizes both across many families on the same poset).
ExpectationReport expectation_report(const Family& fam,
                                     const ChainFunctional& fn,
                                     const std::vector<MaximalChain>& chains);

// Monte Carlo falsification probe: sampled means plus exact references.
struct McExpectation {
  std::uint64_t samples = 0;
  Rat sample_e_f;
  Rat exact_e_f;
  bool e_f_nonpositive_sampled = false;
};

McExpectation expectation_probe_mc(const Family& fam, int k,
                                   std::uint64_t samples, std::uint64_t seed);

// Pr(x in C) * |P_r(x)| = 1 for every element, and the k-tuple analogue
// Pr(tuple in C) * (chains spanning its ranks) = 1, all in exact arithmetic.
// Tuples are exhausted when their number is at most `budget`, otherwise
// `budget` seeded random comparable tuples are confronted.
struct TupleIdentityReport {
  bool pass = false;
  std::uint64_t tuples_checked = 0;
  bool exhaustive = false;
  std::string witness;
};

TupleIdentityReport chain_probability_identities(const GradedPoset& p, int k,
                                                 std::uint64_t budget = 200000,
                                                 std::uint64_t seed = 1);

// Equality-case propagation: when c_k(A) = m_k(|A|) > 0, every maximal chain
// C must have r(A cap C) centred with |A cap C| in {l, l+1} for one common l.
struct EqualityCaseReport {
  bool applicable = false;  // c_k(A) == m_k(|A|) > 0
  bool pass = false;
  int ell = -1;
  std::string witness;
};

EqualityCaseReport equality_case_check(const Family& fam, int k,
                                       std::uint64_t guard = 1000000);

struct IntegerDistribution {
  // (value, probability), support strictly increasing, probabilities positive
  // and summing to 1
  std::vector<std::pair<long long, Rat>> pmf;

  void validate() const;
  Rat mean() const;
};

struct JensenReport {
  bool holds = false;   // E[f(X)] >= f(E[X])
  bool strict = false;
  long long c = 0, d = 0;      // support window when equality
  bool window_ok = false;      // equality implies Delta f constant on [c+1,d]
  Rat e_f;
  Count f_at_mean = 0;
  std::string witness;
};

// f_values[t] = f(a+t) for t = 0..b-a; dist must be supported in [a,b] with
// integral mean; throws on non-convex f or non-integral mean.
JensenReport discrete_jensen_check(long long a,
                                   const std::vector<Count>& f_values,
                                   const IntegerDistribution& dist);

}  // namespace chainmin
