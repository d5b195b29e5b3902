#pragma once
// Structural property checks: rank-reflection symmetry, descending two-point
// counts, and the counting consequences of homogeneity.  These are
// falsification tools: they certify a poset (or level profile) for the
// extremal machinery, and produce concrete witnesses when a property fails.

#include <cstdint>
#include <string>
#include <vector>

#include "chainmin/level_profile.hpp"
#include "chainmin/poset.hpp"

namespace chainmin {

struct SymmetryReport {
  bool pass = false;
  std::string witness;  // empty iff pass
};

// Checks |P_i| = |P_{n-i}| and c_k'(I, J) = c_k'(n-I, n-J) over disjoint
// rank-set pairs with |I| <= k <= |I| + |J|.  All pairs are tried when their
// number is at most max_pairs; otherwise a seeded sample of max_pairs pairs.
SymmetryReport check_symmetry(const GradedPoset& p, int k,
                              std::uint64_t max_pairs = 200000,
                              std::uint64_t seed = 1);

enum class Descent { StrictlyDescending, Descending, Neither };

struct DescentReport {
  Descent kind = Descent::Neither;
  // (i, j) pairs with c2(i,j) == c2(i-1,j-1), reported when kind is
  // Descending but not strictly so
  std::vector<std::pair<int, int>> tight_pairs;
  // (i, j) pairs with c2(i,j) > c2(i-1,j-1)
  std::vector<std::pair<int, int>> violations;
};

// Tests c2(i, j) <= c2(i-1, j-1) for all 1 <= i < j <= n, and classifies
// strictness (strict requires j < n on the pairs that must drop).
DescentReport check_descending(const LevelProfile& prof);
DescentReport check_descending(const GradedPoset& p);

struct HomogeneityReport {
  bool pass = false;
  std::string witness;
  // when failing: two chains with the same rank set but different extension
  // counts
  std::vector<int> chain_a, chain_b;
  Count count_a = 0, count_b = 0;
};

// Homogeneity says c_k'(L, J) depends on L only through its rank set.  This
// check confronts extension counts across distinct chains with equal rank
// sets, for all (I, J, k) with k <= k_max; chains per rank set are capped by
// max_chains (seeded sample above the cap).
HomogeneityReport check_homogeneity_consequence(const GradedPoset& p, int k_max,
                                                std::uint64_t max_chains = 64,
                                                std::uint64_t seed = 1);

// c_k'(i, J) with J = {j_1 < ... < j_{k-1}} splits into a telescoping
// product of two-point counts.  Verified directly against enumeration.
bool decomposition_identity_check(const GradedPoset& p, int i, const RankSet& J,
                                  int k, std::string* witness = nullptr);

// |P_i| * c2(i -> j) = |P_j| * c2(j -> i): both sides count comparable pairs
// across levels i < j.
bool double_counting_check(const GradedPoset& p, int i, int j,
                           std::string* witness = nullptr);

}  // namespace chainmin
