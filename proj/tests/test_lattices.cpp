#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "chainmin/lattices.hpp"
#include "chainmin/poset.hpp"

using namespace chainmin;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(52, 26) == Count("495918532948104"));
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  CHECK(gaussian_binomial(2, 1, 3) == 4);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(5, 2, 2) == gaussian_binomial(5, 3, 2));
  CHECK(gaussian_binomial(6, 0, 3) == 1);
  CHECK(gaussian_binomial(1, 1, 5) == 1);
  CHECK(gaussian_binomial(2, 3, 2) == 0);
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 1), std::invalid_argument);
}

TEST_CASE("two-point counts") {
  CHECK(boolean_c2_prime(4, 1, 3) == 3);
  CHECK(boolean_c2_prime(3, 0, 3) == 1);
  CHECK(subspace_c2_prime(2, 3, 1, 2) == 3);
  CHECK(subspace_c2_prime(2, 3, 0, 2) == 7);
  CHECK_THROWS_AS(boolean_c2_prime(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(subspace_c2_prime(2, 3, 3, 1), std::invalid_argument);
}

TEST_CASE("boolean profile closed form") {
  LevelProfile b4 = boolean_profile(4);
  CHECK(b4.n == 4);
  CHECK(b4.sizes == std::vector<Count>{1, 4, 6, 4, 1});
  CHECK(b4.c2_at(1, 2) == 3);   // supersets one step up
  CHECK(b4.c2_at(2, 1) == 2);   // subsets one step down
  CHECK(b4.c2_at(2, 4) == 1);
  CHECK(b4.c2_at(0, 4) == 1);
  CHECK(b4.total_size() == 16);
  b4.validate();
}

TEST_CASE("subspace profile closed form") {
  LevelProfile f23 = subspace_profile(2, 3);
  CHECK(f23.sizes == std::vector<Count>{1, 7, 7, 1});
  CHECK(f23.c2_at(1, 2) == 3);
  CHECK(f23.c2_at(2, 1) == 3);
  CHECK(f23.c2_at(0, 2) == 7);
  CHECK(f23.c2_at(3, 1) == 7);

  LevelProfile f32 = subspace_profile(3, 2);
  CHECK(f32.sizes == std::vector<Count>{1, 4, 1});
  CHECK(f32.c2_at(0, 1) == 4);
  CHECK(f32.c2_at(2, 1) == 4);
}

TEST_CASE("prime field arithmetic") {
  GaloisField f5(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.neg(2) == 3);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.inv(4) == 4);
  for (int a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
  CHECK_NOTHROW(GaloisField(2));
  CHECK_NOTHROW(GaloisField(7));
  CHECK_THROWS_AS(GaloisField(4), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(6), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(1), std::invalid_argument);
}

TEST_CASE("subspace enumeration is complete and canonical") {
  GaloisField f2(2);
  std::vector<Subspace> all = enumerate_subspaces(f2, 3);
  CHECK(all.size() == 16);
  int by_dim[4] = {0, 0, 0, 0};
  for (const Subspace& s : all) {
    REQUIRE(s.dim() >= 0);
    REQUIRE(s.dim() <= 3);
    ++by_dim[s.dim()];
  }
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 7);
  CHECK(by_dim[2] == 7);
  CHECK(by_dim[3] == 1);
  // Dimension blocks are contiguous and ascending.
  for (std::size_t t = 1; t < all.size(); ++t)
    CHECK(all[t - 1].dim() <= all[t].dim());
  // The full space contains everything.
  const Subspace& full = all.back();
  for (const Subspace& s : all) CHECK(subspace_contains(f2, full, s));

  GaloisField f3(3);
  CHECK(enumerate_subspaces(f3, 2).size() == 6);
}

TEST_CASE("subspace lattice structure") {
  GradedPoset f22 = make_subspace_lattice(2, 2);
  CHECK(f22.size() == 5);
  CHECK(f22.n() == 2);
  CHECK(f22.level_sizes() == std::vector<Count>{1, 3, 1});
  Family full22(f22, f22.full_mask());
  CHECK(count_chains(full22, 3) == 3);
  CHECK(count_chains(full22, 2) == 7);

  GradedPoset f23 = make_subspace_lattice(2, 3);
  CHECK(f23.size() == 16);
  Family full23(f23, f23.full_mask());
  CHECK(count_chains(full23, 2) == 50);
  CHECK(count_chains(full23, 3) == 56);
  CHECK(count_chains(full23, 4) == 21);

  GradedPoset f32 = make_subspace_lattice(3, 2);
  CHECK(f32.size() == 6);
  Family full32(f32, f32.full_mask());
  CHECK(count_chains(full32, 3) == 4);
}

TEST_CASE("boolean lattice of every small order") {
  for (int n = 0; n <= 6; ++n) {
    GradedPoset p = make_boolean_lattice(n);
    CHECK(p.size() == (1 << n));
    for (int r = 0; r <= n; ++r)
      CHECK(Count(p.level(r).size()) == binomial(n, r));
  }
}

TEST_CASE("resource guards on lattice builders") {
  CHECK_THROWS_AS(make_boolean_lattice(15), ResourceGuardError);
  CHECK_THROWS_AS(make_subspace_lattice(5, 5, 1000), ResourceGuardError);
  CHECK_THROWS_AS(make_subspace_lattice(4, 2), std::invalid_argument);
}
