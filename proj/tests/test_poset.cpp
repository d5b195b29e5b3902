#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "chainmin/lattices.hpp"
#include "chainmin/poset.hpp"
#include "chainmin/poset_checks.hpp"
#include "chainmin/rng.hpp"

using namespace chainmin;

namespace {

// Total order 0 < 1 < ... < m-1, one element per rank.
GradedPoset make_chain_poset(int m) {
  std::vector<int> ranks(m);
  std::vector<Bits> above(m, Bits(m));
  for (int x = 0; x < m; ++x) {
    ranks[x] = x;
    for (int y = x + 1; y < m; ++y) above[x].set(y);
  }
  return GradedPoset(m - 1, ranks, above, "chain:" + std::to_string(m));
}

}  // namespace

TEST_CASE("rank sets normalize, reflect, and convert to masks") {
  RankSet s(std::vector<int>{3, 1, 1});
  CHECK(s.values() == std::vector<int>{1, 3});
  CHECK(s.str() == "{1,3}");
  CHECK(s.mask() == 0b1010u);
  CHECK(RankSet::from_mask(0b101) == RankSet{0, 2});
  CHECK(s.reflected(3) == RankSet{0, 2});
  CHECK(s.reflected(4) == RankSet{1, 3});
  CHECK(s.with(2) == RankSet{1, 2, 3});
  CHECK(s.without(3) == RankSet{1});
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min() == 1);
  CHECK(s.max() == 3);
  CHECK(s.subset_of(RankSet{0, 1, 3}));
  CHECK_FALSE(s.subset_of(RankSet{1, 2}));
  CHECK(s.disjoint(RankSet{0, 2}));
  CHECK_FALSE(s.disjoint(RankSet{3}));
  CHECK(RankSet{}.empty());
  CHECK_THROWS_AS(RankSet(std::vector<int>{-1}), std::invalid_argument);
}

TEST_CASE("construction rejects broken posets") {
  // 0 < 1 and 1 < 2 without 0 < 2: not transitive.
  {
    std::vector<Bits> above(3, Bits(3));
    above[0].set(1);
    above[1].set(2);
    CHECK_THROWS_AS(GradedPoset(2, {0, 1, 2}, above, "bad"),
                    std::invalid_argument);
  }
  // Comparable elements of equal rank.
  {
    std::vector<Bits> above(2, Bits(2));
    above[0].set(1);
    CHECK_THROWS_AS(GradedPoset(0, {0, 0}, above, "bad"),
                    std::invalid_argument);
  }
  // Empty middle level.
  {
    std::vector<Bits> above(2, Bits(2));
    above[0].set(1);
    CHECK_THROWS_AS(GradedPoset(2, {0, 2}, above, "bad"),
                    std::invalid_argument);
  }
  // d sits at rank 2 directly above rank 0: a maximal chain skips rank 1.
  {
    std::vector<Bits> above(4, Bits(4));
    above[0].set(1);
    above[0].set(2);
    above[0].set(3);
    above[1].set(2);
    CHECK_THROWS_AS(GradedPoset(2, {0, 1, 2, 2}, above, "bad"),
                    std::invalid_argument);
  }
  // Reflexive bit.
  {
    std::vector<Bits> above(1, Bits(1));
    above[0].set(0);
    CHECK_THROWS_AS(GradedPoset(0, {0}, above, "bad"),
                    std::invalid_argument);
  }
}

TEST_CASE("boolean lattice structure") {
  GradedPoset p = make_boolean_lattice(3);
  CHECK(p.size() == 8);
  CHECK(p.n() == 3);
  CHECK(p.level(0).size() == 1);
  CHECK(p.level(1).size() == 3);
  CHECK(p.level(2).size() == 3);
  CHECK(p.level(3).size() == 1);
  CHECK(p.rank(5) == 2);
  CHECK(p.less(1, 3));
  CHECK(p.less(0, 7));
  CHECK_FALSE(p.less(3, 5));
  CHECK(p.comparable(1, 7));
  CHECK_FALSE(p.comparable(1, 2));
  CHECK(p.level_sizes() == std::vector<Count>{1, 3, 3, 1});
}

TEST_CASE("chain counting on the full boolean lattice") {
  GradedPoset p = make_boolean_lattice(3);
  Family full(p, p.full_mask());
  CHECK(count_chains(full, 1) == 8);
  CHECK(count_chains(full, 2) == 19);
  CHECK(count_chains(full, 3) == 18);
  CHECK(count_chains(full, 4) == 6);
  CHECK(count_chains(full, 5) == 0);
  CHECK(count_chains_enumeration(full, 2) == 19);
  CHECK(count_chains_enumeration(full, 3) == 18);

  Family tiny(p, std::vector<int>{0, 7});
  CHECK(count_chains(tiny, 2) == 1);
  Family atoms(p, std::vector<int>{1, 2, 4});
  CHECK(count_chains(atoms, 2) == 0);
  Family nested(p, std::vector<int>{1, 3, 7});
  CHECK(count_chains(nested, 2) == 3);
  CHECK(count_chains(nested, 3) == 1);
  Family empty(p);
  CHECK(count_chains(empty, 1) == 0);
}

TEST_CASE("chain predicate") {
  GradedPoset p = make_boolean_lattice(3);
  CHECK(is_chain(p, {1, 3, 7}));
  CHECK(is_chain(p, {5}));
  CHECK(is_chain(p, {}));
  CHECK_FALSE(is_chain(p, {1, 2}));
  CHECK_FALSE(is_chain(p, {3, 5, 7}));
}

TEST_CASE("DP count agrees with brute enumeration on random families") {
  Rng rng(20240817);
  for (int n : {3, 4}) {
    GradedPoset p = make_boolean_lattice(n);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t a = uniform_below(rng, p.size() + 1);
      std::vector<int> ids(p.size());
      for (std::size_t x = 0; x < ids.size(); ++x) ids[x] = static_cast<int>(x);
      fisher_yates(ids, rng);
      ids.resize(a);
      Family fam(p, ids);
      for (int k = 1; k <= 5; ++k)
        CHECK(count_chains(fam, k) == count_chains_enumeration(fam, k));
    }
  }
}

TEST_CASE("extension counts through a fixed chain") {
  GradedPoset p = make_boolean_lattice(3);
  CHECK(canonical_chain(p, RankSet{0, 1, 2}) == std::vector<int>{0, 1, 3});
  CHECK(ck_prime_chain(p, {1}, RankSet{0, 2}, 2) == 3);
  CHECK(ck_prime_ranks(p, RankSet{1}, RankSet{0, 2}, 2) == 3);
  // Whole-poset k-chain totals via the empty base.
  CHECK(ck_prime_chain(p, {}, RankSet{0, 1, 2, 3}, 2) == 19);
  CHECK(ck_prime_chain(p, {}, RankSet{0, 1, 2, 3}, 3) == 18);
  // A 2-chain base extended to maximal chains.
  CHECK(ck_prime_chain(p, {1, 3}, RankSet{0, 3}, 4) == 1);
}

TEST_CASE("measured profiles match the closed forms") {
  for (int n = 0; n <= 5; ++n) {
    LevelProfile measured = measure_profile(make_boolean_lattice(n));
    LevelProfile closed = boolean_profile(n);
    CHECK(measured.sizes == closed.sizes);
    CHECK(measured.c2 == closed.c2);
  }
  {
    LevelProfile measured = measure_profile(make_subspace_lattice(2, 3));
    LevelProfile closed = subspace_profile(2, 3);
    CHECK(measured.sizes == closed.sizes);
    CHECK(measured.c2 == closed.c2);
  }
  {
    LevelProfile measured = measure_profile(make_subspace_lattice(3, 2));
    LevelProfile closed = subspace_profile(3, 2);
    CHECK(measured.sizes == closed.sizes);
    CHECK(measured.c2 == closed.c2);
  }
}

TEST_CASE("profile chain formulas") {
  LevelProfile b3 = boolean_profile(3);
  CHECK(b3.chains_spanning(RankSet{0, 1, 2}) == 6);
  CHECK(b3.chains_spanning(RankSet{0, 1, 2, 3}) == 6);
  CHECK(b3.ck_prime_empty(RankSet{0, 1, 2, 3}, 2) == 19);
  CHECK(b3.ck_prime_empty(RankSet{0, 1, 2, 3}, 3) == 18);
  CHECK(b3.ck_prime_single(1, RankSet{0, 2}, 2) == 3);

  LevelProfile f23 = subspace_profile(2, 3);
  CHECK(f23.chains_spanning(RankSet{1, 2}) == 21);
  CHECK(f23.chains_spanning(RankSet{0, 1, 2, 3}) == 21);
}

TEST_CASE("symmetry, descent, and homogeneity certificates") {
  GradedPoset b3 = make_boolean_lattice(3);
  CHECK(check_symmetry(b3, 3).pass);
  CHECK(check_descending(b3).kind == Descent::StrictlyDescending);
  CHECK(check_homogeneity_consequence(b3, 3).pass);

  GradedPoset f23 = make_subspace_lattice(2, 3);
  CHECK(check_symmetry(f23, 3).pass);
  CHECK(check_descending(f23).kind == Descent::StrictlyDescending);
  CHECK(check_homogeneity_consequence(f23, 3).pass);

  GradedPoset chain = make_chain_poset(4);
  DescentReport d = check_descending(chain);
  CHECK(d.kind == Descent::Descending);
  CHECK_FALSE(d.tight_pairs.empty());
  CHECK(d.violations.empty());
  CHECK(check_symmetry(chain, 2).pass);
  CHECK(check_homogeneity_consequence(chain, 2).pass);
}

TEST_CASE("counting identities on concrete lattices") {
  GradedPoset b3 = make_boolean_lattice(3);
  std::string w;
  CHECK(double_counting_check(b3, 1, 2, &w));
  CHECK(double_counting_check(b3, 0, 3, &w));
  CHECK(decomposition_identity_check(b3, 1, RankSet{0, 2}, 3, &w));
  CHECK(decomposition_identity_check(b3, 0, RankSet{1, 2, 3}, 4, &w));

  GradedPoset f22 = make_subspace_lattice(2, 2);
  CHECK(double_counting_check(f22, 0, 1, &w));
  CHECK(double_counting_check(f22, 1, 2, &w));
  CHECK(decomposition_identity_check(f22, 1, RankSet{0, 2}, 3, &w));
}
