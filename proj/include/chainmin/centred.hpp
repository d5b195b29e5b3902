#pragma once
// Centred orderings of rank levels, nested extremal prefix families X_a, the
// minimizer function m_k with its convexity certificate, and the centredness
// predicate for families.

#include <cstdint>
#include <string>
#include <vector>

#include "chainmin/level_profile.hpp"
#include "chainmin/numbers.hpp"
#include "chainmin/poset.hpp"

namespace chainmin {

// A listing of the ranks 0..n that is nondecreasing in distance from n/2.
// Positions are 1-based: at(1) is the middlemost rank.
struct CentredOrdering {
  int n = 0;
  std::vector<int> mu;  // mu[l-1] = at(l), l = 1..n+1

  int at(int ell) const;
  RankSet prefix(int ell) const;  // {at(1), ..., at(ell)}
  void validate() const;          // permutation + nondecreasing distance
};

// The two canonical orderings: ties between equidistant ranks i and n-i are
// broken downward (mu_minus) or upward (mu_plus); mu_plus(l) = n - mu_minus(l).
CentredOrdering mu_minus(int n);
CentredOrdering mu_plus(int n);

// The one or two centred ell-subsets of {0..n}: prefixes of the canonical
// orderings, deduplicated.  Each is an integer interval around the middle.
std::vector<RankSet> centred_rank_sets(int n, int ell);

// A rank set is centred iff it is a prefix of mu_minus or mu_plus (the empty
// set counts as centred).
bool is_centred_rank_set(int n, const RankSet& I);

// Number of elements in the ell largest rank levels.  Computed along
// mu_minus and asserted equal along mu_plus (needs palindromic level sizes).
Count a_ell(const std::vector<Count>& level_sizes, int ell);
Count a_ell(const LevelProfile& prof, int ell);
Count a_ell(const GradedPoset& p, int ell);

// The prefix family X_a: full levels P_mu(1)..P_mu(l-1) plus the first
// a - a_{l-1} elements of P_mu(l) under the tie order.
struct ExtremalPrefix {
  CentredOrdering ordering;
  std::size_t a = 0;
  Family family;
  int boundary_level = 0;  // l with a_{l-1} < a <= a_l; 0 when a = 0
};

// tie_order, when given, is a permutation of all element indices; the
// within-level listing order is the induced one.  Default: ascending index.
ExtremalPrefix build_X(const GradedPoset& p, std::size_t a,
                       const CentredOrdering& ordering,
                       const std::vector<int>* tie_order = nullptr);

// m_k over the whole size range, with the level breakpoints a_0..a_{n+1}.
struct MkTable {
  int k = 0;
  int n = 0;
  std::vector<Count> m;       // m[a] for a = 0..N
  std::vector<Count> breaks;  // breaks[l] = a_l, l = 0..n+1; breaks[0] = 0

  std::size_t total() const { return m.size() - 1; }
  const Count& at(std::size_t a) const;
};

// Fewest k-chains among a-element families, by the exact per-level closed
// form: m_k(a) = c_k'(empty, mu([l-1])) + (a - a_{l-1}) * c_k'(mu(l), mu([l-1])).
MkTable make_mk_table(const LevelProfile& prof, int k);

// Single value without materializing the table (a may exceed size_t range).
Count mk_value(const LevelProfile& prof, int k, const Count& a);

// Forward differences: delta[a-1] = m(a) - m(a-1) for a = 1..N.
std::vector<Count> delta_mk(const MkTable& t);

struct ConvexityReport {
  bool nondecreasing = false;
  bool strict_jumps_ok = false;
  // a_l positions where a strict jump is required: l >= k-1 (and k >= 2; for
  // k = 1 every increment is a single 1-chain, so Delta is constant)
  std::vector<std::size_t> required_jumps;
  std::vector<std::size_t> change_positions;  // a where Delta(a) < Delta(a+1)
  std::string witness;                        // empty iff pass

  bool pass() const { return nondecreasing && strict_jumps_ok; }
};

ConvexityReport convexity_certificate(const MkTable& t);

struct CentredReport {
  bool centred = false;
  std::string violation;        // empty iff centred
  int witness_x = -1, witness_y = -1;
};

// Both conditions, with witnesses:
//  (i) if x is a member, every y whose rank is strictly closer to n/2 is too;
// (ii) for i < n/2 with levels i and n-i both partially filled, comparable
//      member pairs across (i, n-i) and comparable non-member pairs across
//      (i, n-i) cannot both exist.
CentredReport is_centred(const Family& fam);

}  // namespace chainmin
