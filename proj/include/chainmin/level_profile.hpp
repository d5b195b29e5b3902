#pragma once
// Rank-level calculus.
//
// For a homogeneous poset, every c_k'(I, J) is a function of the level sizes
// and the two-point table c2[i][j] (elements of rank j comparable to a fixed
// rank-i element): fixing one element per rank splits the count into an
// independent product of single steps.  A LevelProfile carries exactly that
// data, so extremal tables and compression weights can be computed without
// materializing a poset.  Profiles come from closed forms (see lattices.hpp)
// or are measured off a concrete poset.

#include <vector>

#include "chainmin/numbers.hpp"
#include "chainmin/poset.hpp"

namespace chainmin {

struct LevelProfile {
  int n = 0;
  std::vector<Count> sizes;               // sizes[i] = |P_i|, i = 0..n
  std::vector<std::vector<Count>> c2;     // c2[i][j], i != j; c2[i][i] unused

  Count total_size() const;
  const Count& size(int i) const;
  const Count& c2_at(int i, int j) const;  // requires i != j, both in 0..n

  // Number of chains occupying exactly the ranks in J (one element per rank):
  // |P_min(J)| times a telescoping product of upward two-point counts.
  Count chains_spanning(const RankSet& J) const;

  // c_k'(empty, J): k-chains whose rank set is contained in J.
  Count ck_prime_empty(const RankSet& J, int k) const;

  // c_k'({i}, J): k-chains through one fixed rank-i element with the other
  // k-1 ranks drawn from J.  Requires i not in J.
  Count ck_prime_single(int i, const RankSet& J, int k) const;

  void validate() const;  // shape and nonnegativity
};

// Measured profile of a concrete poset: counts through the least-index
// element of each rank.  Faithful for homogeneous posets; for anything else
// it is just the canonical-element table (useful to falsify homogeneity).
LevelProfile measure_profile(const GradedPoset& p);

}  // namespace chainmin
