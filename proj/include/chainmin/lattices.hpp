#pragma once
// Concrete graded lattices: the boolean lattice of subsets of [n] and the
// lattice of subspaces of F_q^n (q prime), plus their closed-form level
// profiles.  Builders produce ordinary GradedPoset values; the closed forms
// are kept separate so tests can confront the two.

#include <cstdint>
#include <vector>

#include "chainmin/level_profile.hpp"
#include "chainmin/numbers.hpp"
#include "chainmin/poset.hpp"

namespace chainmin {

Count binomial(int n, int r);

// Gaussian binomial [m choose r]_q: number of r-dimensional subspaces of
// F_q^m.  Exact; the division is always integral.
Count gaussian_binomial(int m, int r, int q);

// Two-point counts from a fixed lower element up: requires 0 <= i < j <= n.
Count boolean_c2_prime(int n, int i, int j);
Count subspace_c2_prime(int q, int n, int i, int j);

LevelProfile boolean_profile(int n);
LevelProfile subspace_profile(int q, int n);

// Subsets of [n] ordered by strict inclusion.  Element x is the bitmask x;
// rank is popcount.  Guarded to n <= 14.
GradedPoset make_boolean_lattice(int n);

// Arithmetic in F_q for prime q.  Construction rejects non-primes: the
// subspace machinery relies on invertibility of every nonzero scalar.
class GaloisField {
 public:
  explicit GaloisField(int q);
  int q() const { return q_; }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b % q_ + q_) % q_; }
  int mul(int a, int b) const { return a * b % q_; }
  int neg(int a) const { return (q_ - a % q_) % q_; }
  int inv(int a) const;  // a != 0

 private:
  int q_;
};

// A subspace of F_q^n in row-reduced echelon form: rows are a canonical
// basis, pivots strictly increasing, pivot columns cleared above.
struct Subspace {
  std::vector<std::vector<std::uint8_t>> rows;
  int dim() const { return static_cast<int>(rows.size()); }
};

// All subspaces of F_q^n of every dimension, each exactly once, in
// (dimension, lexicographic RREF) order.
std::vector<Subspace> enumerate_subspaces(const GaloisField& gf, int n);

bool subspace_contains(const GaloisField& gf, const Subspace& big,
                       const Subspace& small);

// Subspaces of F_q^n ordered by strict containment.  Element order matches
// enumerate_subspaces.  Guarded: total count must stay below `max_elements`.
GradedPoset make_subspace_lattice(int q, int n,
                                  std::uint64_t max_elements = 100000);

}  // namespace chainmin
