#pragma once
// Finite graded posets and exact chain-counting primitives.
//
// Elements are dense indices 0..size-1.  The strict order is stored as
// per-element "above" bitsets; rank levels partition the ground set.  Height
// is n+1: ranks run 0..n, every level is nonempty, and every maximal chain
// hits each rank exactly once (checked at construction).

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainmin/numbers.hpp"

namespace chainmin {

using Bits = boost::dynamic_bitset<>;

// Thrown when an enumeration would exceed its declared budget.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set of rank indices, kept strictly increasing.
class RankSet {
 public:
  RankSet() = default;
  RankSet(std::initializer_list<int> ranks);
  explicit RankSet(std::vector<int> ranks);
  static RankSet from_mask(std::uint64_t mask);

  bool contains(int r) const;
  int size() const { return static_cast<int>(ranks_.size()); }
  bool empty() const { return ranks_.empty(); }
  int min() const;
  int max() const;
  std::uint64_t mask() const;     // bit r set iff r in the set; ranks must be < 64
  RankSet reflected(int n) const; // {n - r : r in set}
  RankSet without(int r) const;
  RankSet with(int r) const;
  bool disjoint(const RankSet& other) const;
  bool subset_of(const RankSet& other) const;
  const std::vector<int>& values() const { return ranks_; }
  std::vector<int>::const_iterator begin() const { return ranks_.begin(); }
  std::vector<int>::const_iterator end() const { return ranks_.end(); }
  std::string str() const;        // "{1,3}" for logs and witnesses

  friend bool operator==(const RankSet&, const RankSet&) = default;

 private:
  void normalize();
  std::vector<int> ranks_;
};

class GradedPoset {
 public:
  // `above[x]` has bit y set iff x < y strictly.  Validates the order axioms,
  // rank compatibility, nonempty levels, and gradedness; throws on violation.
  GradedPoset(int n, std::vector<int> ranks, std::vector<Bits> above,
              std::string descriptor);

  int n() const { return n_; }
  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int x) const { return rank_[x]; }
  bool less(int x, int y) const { return above_[x].test(y); }
  bool comparable(int x, int y) const {
    return x != y && (less(x, y) || less(y, x));
  }
  const Bits& above(int x) const { return above_[x]; }
  const Bits& below(int x) const { return below_[x]; }
  const std::vector<int>& level(int r) const { return levels_[r]; }
  const Bits& level_mask(int r) const { return level_masks_[r]; }
  std::vector<Count> level_sizes() const;
  Bits full_mask() const;  // all elements
  const std::string& descriptor() const { return descriptor_; }

 private:
  void validate() const;

  int n_;
  std::vector<int> rank_;
  std::vector<Bits> above_;
  std::vector<Bits> below_;
  std::vector<std::vector<int>> levels_;
  std::vector<Bits> level_masks_;
  std::string descriptor_;
};

// A subset of a poset's elements.  Non-owning: the poset must outlive it.
struct Family {
  const GradedPoset* poset = nullptr;
  Bits members;

  explicit Family(const GradedPoset& p) : poset(&p), members(p.size()) {}
  Family(const GradedPoset& p, Bits m);
  Family(const GradedPoset& p, const std::vector<int>& elems);

  std::size_t size() const { return members.count(); }
  std::vector<int> elements() const;  // ascending indices
};

bool is_chain(const GradedPoset& p, const std::vector<int>& elems);

// Exact number of k-element chains inside the family.  Dynamic programming
// over elements in rank order: O(k * |A|^2) comparisons.
Count count_chains(const Family& fam, int k);

// Independent cross-check: scans every k-subset of the family and tests
// pairwise comparability directly.  Guarded to |family| <= 20.
Count count_chains_enumeration(const Family& fam, int k);

// Number of k-chains that contain the chain `base` and whose remaining ranks
// lie in J.  Requires: base is a chain, |base| <= k, ranks(base) disjoint
// from J, |base| + |J| >= k.
Count ck_prime_chain(const GradedPoset& p, const std::vector<int>& base,
                     const RankSet& J, int k);

// Same count through the canonical chain with rank set I.  Well defined as a
// function of I only when the poset is homogeneous; see
// check_homogeneity_consequence for the falsification tool.
Count ck_prime_ranks(const GradedPoset& p, const RankSet& I, const RankSet& J,
                     int k);

// Least-index greedy chain hitting exactly the ranks in I (always exists in a
// graded poset; deterministic).
std::vector<int> canonical_chain(const GradedPoset& p, const RankSet& I);

}  // namespace chainmin
