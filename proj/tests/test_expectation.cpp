#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "chainmin/chain_expectation.hpp"
#include "chainmin/lattices.hpp"
#include "chainmin/poset.hpp"
#include "chainmin/rng.hpp"

using namespace chainmin;

TEST_CASE("maximal chain counts") {
  CHECK(count_maximal_chains(make_boolean_lattice(0)) == 1);
  CHECK(count_maximal_chains(make_boolean_lattice(3)) == 6);
  CHECK(count_maximal_chains(make_boolean_lattice(4)) == 24);
  CHECK(count_maximal_chains(make_subspace_lattice(2, 2)) == 3);
  CHECK(count_maximal_chains(make_subspace_lattice(2, 3)) == 21);
  CHECK(count_maximal_chains(make_subspace_lattice(3, 2)) == 4);
}

TEST_CASE("maximal chain enumeration") {
  GradedPoset p = make_boolean_lattice(3);
  std::vector<MaximalChain> all = enumerate_maximal_chains(p);
  CHECK(all.size() == 6);
  for (const MaximalChain& c : all) {
    REQUIRE(c.elems.size() == 4);
    for (int r = 0; r <= 3; ++r) CHECK(p.rank(c.elems[r]) == r);
    for (int r = 0; r < 3; ++r) CHECK(p.less(c.elems[r], c.elems[r + 1]));
  }
  // All distinct.
  std::map<std::vector<int>, int> seen;
  for (const MaximalChain& c : all) ++seen[c.elems];
  CHECK(seen.size() == 6);
  CHECK_THROWS_AS(enumerate_maximal_chains(p, 5), ResourceGuardError);
}

TEST_CASE("chains through a fixed base") {
  GradedPoset p = make_boolean_lattice(3);
  CHECK(count_maximal_chains_through(p, {}) == 6);
  CHECK(count_maximal_chains_through(p, {0}) == 6);
  CHECK(count_maximal_chains_through(p, {1}) == 2);
  CHECK(count_maximal_chains_through(p, {3}) == 2);
  CHECK(count_maximal_chains_through(p, {1, 3}) == 1);
  CHECK(count_maximal_chains_through(p, {0, 1, 3, 7}) == 1);
}

TEST_CASE("chain sampling is uniform") {
  GradedPoset p = make_boolean_lattice(3);
  Rng rng(99);
  std::map<std::vector<int>, int> freq;
  const int N = 6000;
  for (int t = 0; t < N; ++t) {
    MaximalChain c = sample_maximal_chain(p, rng);
    REQUIRE(c.elems.size() == 4);
    for (int r = 0; r < 3; ++r) REQUIRE(p.less(c.elems[r], c.elems[r + 1]));
    ++freq[c.elems];
  }
  CHECK(freq.size() == 6);
  for (const auto& [chain, count] : freq) {
    CHECK(count > 800);
    CHECK(count < 1200);
  }
}

TEST_CASE("the chain functional on explicit intersections") {
  GradedPoset p = make_boolean_lattice(3);
  ChainFunctional fn = ChainFunctional::make(p, 2);
  CHECK(fn.value({0, 7}) == -1);
  CHECK(fn.value({}) == 0);
  CHECK(fn.value({1}) == 0);
  CHECK(fn.value({3}) == 0);
  CHECK(fn.value({1, 3}) == 0);
  CHECK(fn.value({0, 1}) == -1);
  CHECK(fn.value({0, 1, 3, 7}) == 0);
  CHECK(f_value(fn, {0, 7}) == -1);
  CHECK_THROWS_AS(fn.value({1, 2}), std::invalid_argument);
}

TEST_CASE("exact expectation identities on a two-point family") {
  GradedPoset p = make_boolean_lattice(3);
  Family fam(p, std::vector<int>{0, 7});
  ExpectationReport rep = expectation_report(fam, 2);
  CHECK(rep.chain_count == 6);
  CHECK(rep.ck_family == 1);
  CHECK(rep.mk_of_size == 0);
  CHECK(rep.e_f == Rat(-1));
  CHECK(rep.e_mk_term == Rat(0));
  CHECK(rep.e_ck_term == Rat(1));
  CHECK(rep.e_weighted_size == Rat(2));
  CHECK(rep.pass());
}

TEST_CASE("exact expectation identities on the full lattice") {
  GradedPoset p = make_boolean_lattice(3);
  Family fam(p, p.full_mask());
  ExpectationReport rep = expectation_report(fam, 2);
  CHECK(rep.e_f == Rat(0));
  CHECK(rep.e_ck_term == Rat(19));
  CHECK(rep.e_mk_term == Rat(19));
  CHECK(rep.e_weighted_size == Rat(8));
  CHECK(rep.pass());
}

TEST_CASE("expectations over seeded random families") {
  Rng seeds(5150);
  for (int n : {3, 4}) {
    GradedPoset p = make_boolean_lattice(n);
    ChainFunctional fn2 = ChainFunctional::make(p, 2);
    ChainFunctional fn3 = ChainFunctional::make(p, 3);
    std::vector<MaximalChain> chains = enumerate_maximal_chains(p);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t a = uniform_below(seeds, p.size() + 1);
      std::vector<int> ids(p.size());
      for (std::size_t x = 0; x < ids.size(); ++x) ids[x] = static_cast<int>(x);
      fisher_yates(ids, seeds);
      ids.resize(a);
      Family fam(p, ids);
      CHECK(expectation_report(fam, fn2, chains).pass());
      CHECK(expectation_report(fam, fn3, chains).pass());
    }
  }
}

TEST_CASE("sampled expectation probe") {
  GradedPoset p = make_boolean_lattice(3);
  Family fam(p, std::vector<int>{0, 7});
  McExpectation mc = expectation_probe_mc(fam, 2, 500, 31337);
  CHECK(mc.samples == 500);
  CHECK(mc.exact_e_f == Rat(-1));
  CHECK(mc.sample_e_f == Rat(-1));  // f is -1 on every maximal chain
  CHECK(mc.e_f_nonpositive_sampled);
}

TEST_CASE("membership probability identities") {
  for (int n : {2, 3, 4}) {
    GradedPoset p = make_boolean_lattice(n);
    for (int k = 1; k <= 3; ++k) {
      TupleIdentityReport rep = chain_probability_identities(p, k);
      CHECK(rep.pass);
      CHECK(rep.exhaustive);
    }
  }
  {
    GradedPoset p = make_boolean_lattice(3);
    TupleIdentityReport rep = chain_probability_identities(p, 2);
    CHECK(rep.tuples_checked == 19);
  }
  {
    GradedPoset p = make_subspace_lattice(2, 3);
    TupleIdentityReport rep = chain_probability_identities(p, 2);
    CHECK(rep.pass);
    CHECK(rep.tuples_checked == 50);
  }
  {
    // Forced sampling path.
    GradedPoset p = make_boolean_lattice(4);
    TupleIdentityReport rep = chain_probability_identities(p, 2, 10, 7);
    CHECK(rep.pass);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.tuples_checked == 10);
  }
}

TEST_CASE("equality-case propagation along chains") {
  GradedPoset b4 = make_boolean_lattice(4);
  ExtremalPrefix x8 = build_X(b4, 8, mu_minus(4));
  EqualityCaseReport rep = equality_case_check(x8.family, 2);
  CHECK(rep.applicable);
  CHECK(rep.pass);
  CHECK(rep.ell == 1);

  GradedPoset b3 = make_boolean_lattice(3);
  Family off(b3, std::vector<int>{0, 7});
  EqualityCaseReport rep2 = equality_case_check(off, 2);
  CHECK_FALSE(rep2.applicable);  // c_2 = 1 exceeds the minimum 0
  CHECK(rep2.pass);
}

TEST_CASE("integer distributions validate") {
  IntegerDistribution d{{{2, Rat(1, 2)}, {4, Rat(1, 2)}}};
  CHECK_NOTHROW(d.validate());
  CHECK(d.mean() == Rat(3));
  IntegerDistribution point{{{5, Rat(1)}}};
  CHECK(point.mean() == Rat(5));
  IntegerDistribution unsorted{{{4, Rat(1, 2)}, {2, Rat(1, 2)}}};
  CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);
  IntegerDistribution short_sum{{{2, Rat(1, 2)}, {4, Rat(1, 4)}}};
  CHECK_THROWS_AS(short_sum.validate(), std::invalid_argument);
  IntegerDistribution negative{{{2, Rat(-1, 2)}, {4, Rat(3, 2)}}};
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
  IntegerDistribution empty{};
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("discrete Jensen inequality") {
  // Strict case on the 3-cube pair table.
  {
    std::vector<Count> f = {0, 0, 2};  // m_2 on sizes 2,3,4
    IntegerDistribution d{{{2, Rat(1, 2)}, {4, Rat(1, 2)}}};
    JensenReport r = discrete_jensen_check(2, f, d);
    CHECK(r.holds);
    CHECK(r.strict);
    CHECK(r.e_f == Rat(1));
    CHECK(r.f_at_mean == 0);
  }
  // Equality on a linear stretch, with the constant-slope window.
  {
    std::vector<Count> f = {0, 1, 2};
    IntegerDistribution d{{{0, Rat(1, 2)}, {2, Rat(1, 2)}}};
    JensenReport r = discrete_jensen_check(0, f, d);
    CHECK(r.holds);
    CHECK_FALSE(r.strict);
    CHECK(r.c == 0);
    CHECK(r.d == 2);
    CHECK(r.window_ok);
  }
  // Point mass: equality with a trivial window.
  {
    std::vector<Count> f = {0, 0, 2};
    IntegerDistribution d{{{3, Rat(1)}}};
    JensenReport r = discrete_jensen_check(2, f, d);
    CHECK(r.holds);
    CHECK_FALSE(r.strict);
    CHECK(r.c == 3);
    CHECK(r.d == 3);
    CHECK(r.window_ok);
  }
  // Rejections.
  {
    std::vector<Count> f = {0, 0, 2};
    IntegerDistribution half{{{2, Rat(1, 2)}, {3, Rat(1, 2)}}};
    CHECK_THROWS_AS(discrete_jensen_check(2, f, half), std::invalid_argument);
    std::vector<Count> bent = {0, 2, 1};
    IntegerDistribution d{{{2, Rat(1, 2)}, {4, Rat(1, 2)}}};
    CHECK_THROWS_AS(discrete_jensen_check(2, bent, d), std::invalid_argument);
    IntegerDistribution outside{{{9, Rat(1)}}};
    CHECK_THROWS_AS(discrete_jensen_check(2, f, outside), std::invalid_argument);
  }
}
