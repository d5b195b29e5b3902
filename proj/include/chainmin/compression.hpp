#pragma once
// Mass-transfer compression on fractional rank occupancies.
//
// A distribution assigns each rank i an occupancy fraction p_i with
// p_i * |P_i| integral. One step moves mass from the outermost partially
// occupied rank toward the middle (after normalizing by reflection), keeping
// the total mass fixed. Iterating reaches a canonical fixpoint supported on a
// centred prefix, and the k-chain weight w_k never increases along the way.
//
// The step's effect on w_k splits into three sums: a gain term at the source
// rank, a loss term at the target rank, and a nonnegative correction from
// pairs using both ranks; the identity total = sum1 - sum2 + sum3 is checked
// exactly.

#include <string>
#include <vector>

#include "chainmin/level_profile.hpp"
#include "chainmin/numbers.hpp"
#include "chainmin/poset.hpp"
#include "chainmin/rng.hpp"

namespace chainmin {

struct RankDistribution {
  std::vector<Count> sizes;  // level sizes, index = rank
  std::vector<Rat> p;        // occupancy fraction per rank

  int n() const { return static_cast<int>(p.size()) - 1; }
  // 0 <= p_i <= 1 and p_i * |P_i| integral, sizes positive
  void validate() const;
  Count mass() const;  // sum of p_i * |P_i|, an integer
  Count h() const;     // sum of |2i - n| * p_i * |P_i|
  RankDistribution reversed() const;

  static RankDistribution from_rank_set(const LevelProfile& prof,
                                        const RankSet& I);
  static RankDistribution from_counts(const std::vector<Count>& sizes,
                                      const std::vector<Count>& counts);

  bool operator==(const RankDistribution&) const = default;
};

struct CompressionStep {
  RankDistribution input;
  RankDistribution normalized;  // input after any reflection
  RankDistribution output;      // equals input when fixpoint
  bool reversed = false;
  bool fixpoint = false;
  int i = -1;        // source rank (in the normalized frame)
  int i_prime = -1;  // target rank; -1 when none exists
  Rat delta;         // mass fraction leaving rank i
  Rat delta_prime;   // fraction arriving at rank i_prime
};

// One compression step. Fixpoint steps return output == input.
CompressionStep phi_step(const LevelProfile& prof, const RankDistribution& d);

// w_k(p) = sum over k-element rank sets S of (chains spanning S) * prod p_j.
Rat w_k(const LevelProfile& prof, const RankDistribution& d, int k);

struct WkChange {
  Rat sum1;  // source terms:  c_k'(0, J+{i}) * delta * prod p_j
  Rat sum2;  // target terms:  c_k'(0, J+{i'}) * delta' * prod p_j
  Rat sum3;  // pair terms, each summand nonnegative
  Rat min_pair_term;    // smallest sum3 summand (0 when none)
  bool total_matches = false;  // total() == w_k(input) - w_k(output)

  Rat total() const { return sum1 - sum2 + sum3; }
};

// Exact decomposition of the w_k drop across a transfer step.
WkChange wk_change_decomposition(const LevelProfile& prof,
                                 const CompressionStep& step, int k);

struct Trajectory {
  int k = 0;
  std::vector<CompressionStep> steps;  // applied (non-fixpoint) steps
  RankDistribution endpoint;
  std::vector<Rat> wk_values;   // length steps.size()+1, starts at the input
  std::vector<Count> h_values;  // same indexing
  std::vector<bool> wk_strict;  // per-step: did w_k strictly drop

  bool p1_ok = false;            // w_k nonincreasing at every step
  bool endpoint_form_ok = false; // endpoint is a centred-prefix distribution
  bool endpoint_matches_mk = false;  // w_k(endpoint) == m_k(mass)
  int endpoint_ell = -1;             // prefix length of the endpoint form
  bool endpoint_mu_plus = false;     // which ordering exhibits the form
  std::string witness;

  bool pass() const {
    return p1_ok && endpoint_form_ok && endpoint_matches_mk;
  }
};

// Iterate phi_step to the fixpoint. Throws if the step count ever exceeds
// h(start) + n + 4, which would contradict the termination argument.
Trajectory compress_to_fixpoint(const LevelProfile& prof,
                                const RankDistribution& start, int k);

// Seeded random valid distribution: an independent uniform element count at
// every rank.
RankDistribution random_distribution(const LevelProfile& prof, Rng& rng);

// sigma reflects the interval (i, i') onto itself and fixes everything else.
RankSet sigma_reflect(const RankSet& J, int i, int i_prime);

struct DeltaCkComparison {
  Rat lhs;  // delta  * c_k'(0, J + {i})
  Rat rhs;  // delta' * c_k'(0, sigma(J) + {i'})
  bool holds = false;
  bool strict = false;
  bool strict_expected = false;  // strictly descending, i' < n-i, k >= 2
};

// The source/target comparison behind sum1 >= sum2: requires |J| = k-1,
// J inside [i+1, n-i-1] avoiding i', and i < i' <= n-i. The ratio
// delta'/delta is fixed at |P_i|/|P_i'|, so delta only scales both sides.
DeltaCkComparison delta_ck_comparison(const LevelProfile& prof, int k, int i,
                                      int i_prime, const RankSet& J,
                                      const Rat& delta = Rat(1));

}  // namespace chainmin
