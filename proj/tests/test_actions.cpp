#include "doctest.h"
#include "ringlab/actions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/wedderburn.hpp"
#include "test_rings.hpp"

using namespace ringlab;

TEST_CASE("automorphism groups of small rings") {
  AutGroup a = automorphism_group(test_rings::zn(8));
  CHECK(a.order == 1);
  AutGroup b = automorphism_group(test_rings::fq(4));
  CHECK(b.order == 2);
  AutGroup c = automorphism_group(test_rings::m2f2());
  CHECK(c.order == 6);
  CHECK(c.generators.size() <= 2);
}

TEST_CASE("automorphism sets contain the identity and close under composition and inverse") {
  AutGroup g = automorphism_group(test_rings::m2f2());
  auto key = [](const RingHom& h) { return h.images(); };
  std::vector<std::vector<Vec>> keys;
  for (const RingHom& h : g.elements) keys.push_back(key(h));
  CHECK(std::find(keys.begin(), keys.end(), key(RingHom::identity(g.ring))) != keys.end());
  for (size_t i = 0; i < g.elements.size(); ++i) {
    CHECK(std::find(keys.begin(), keys.end(), key(g.elements[i].inverse())) != keys.end());
    for (size_t j = 0; j < g.elements.size(); ++j) {
      RingHom comp = g.elements[i].compose_after(g.elements[j]);
      CHECK(std::find(keys.begin(), keys.end(), key(comp)) != keys.end());
    }
  }
}

TEST_CASE("closed-form matrix automorphism orders") {
  CHECK(matrix_aut_order(1, 2) == 1);
  CHECK(matrix_aut_order(1, 4) == 2);  // Frobenius
  CHECK(matrix_aut_order(1, 8) == 3);
  CHECK(matrix_aut_order(2, 2) == 6);  // PGL_2(2)
  CHECK(matrix_aut_order(2, 3) == 24); // PGL_2(3)
}

TEST_CASE("brute force matches the closed form on M2(F3)") {
  CHECK(automorphism_group(test_rings::fq(9)).order == matrix_aut_order(1, 9));
  CHECK(automorphism_group(matrix_ring(2, 3)).order == matrix_aut_order(2, 3));
}

TEST_CASE("product automorphism orders") {
  CHECK(product_aut_order({{2, 2, 2}}) == BigUint(72));     // 2! * 6^2
  CHECK(product_aut_order({{1, 2, 1}}) == BigUint(1));
  CHECK(product_aut_order({{1, 4, 2}}) == BigUint(8));      // 2! * 2^2
  CHECK_THROWS_AS(product_aut_order({{1, 2, 1}, {1, 2, 1}}), RingError);
}

TEST_CASE("product automorphism structure checks") {
  ProductAutCheck a = check_product_aut_structure({{1, 2, 2}});
  CHECK(a.pass);
  CHECK(a.aut_order == 2); // identity and the swap
  ProductAutCheck b = check_product_aut_structure({{1, 2, 1}, {1, 3, 1}});
  CHECK(b.pass);
  CHECK(b.aut_order == 1); // no cross-characteristic permutation
  ProductAutCheck c = check_product_aut_structure({{2, 2, 1}});
  CHECK(c.pass);
  CHECK(c.aut_order == 6);
}

TEST_CASE("orbit counts on small grids") {
  OrbitReport a = orbit_count(test_rings::fq(2), 2, 1);
  CHECK(a.count == BigUint(3)); // {00},{01,10},{11}
  REQUIRE(a.enumeration_count.has_value());
  CHECK(*a.enumeration_count == a.count);

  OrbitReport b = orbit_count(test_rings::fq(2), 3, 1);
  CHECK(b.count == BigUint(4)); // multisets of size 3 over 2 symbols

  OrbitReport c = orbit_count(test_rings::zn(4), 1, 2);
  CHECK(c.count == BigUint(16)); // trivial group: |R|^n
}

TEST_CASE("orbit counts match the multiset formula for larger m") {
  // C(2 + 39, 40): far beyond enumeration, pure cycle-type arithmetic
  OrbitReport rep = orbit_count(test_rings::fq(2), 40, 1);
  CHECK(rep.count == multiset_count(2, 40));
  CHECK(rep.count == BigUint(41));
  CHECK_FALSE(rep.enumeration_count.has_value());

  OrbitReport big = orbit_count(test_rings::zn(4), 40, 2);
  CHECK(big.count == multiset_count(16, 40));
  CHECK(big.count.str() == "11899700525790"); // C(55,40), frozen from an external computation
}

TEST_CASE("multiset count via the stepwise binomial") {
  CHECK(multiset_count(2, 3) == BigUint(4));   // C(4,3)
  CHECK(multiset_count(16, 2) == BigUint(136)); // C(17,2)
  CHECK(multiset_count(1, 5) == BigUint(1));
}

TEST_CASE("null factor census") {
  NullCensus census = null_factor_census(
      {test_rings::null_ring({2}), test_rings::fq(2), test_rings::null_ring({3})});
  CHECK(census.non_null_count == 1);
  REQUIRE(census.entries.size() == 3);
  CHECK(census.entries[0].is_null);
  CHECK_FALSE(census.entries[1].is_null);
  REQUIRE(census.entries[1].witness.has_value());
  // the witness has a proper annihilator
  CHECK(annihilator(test_rings::fq(2), *census.entries[1].witness).order() < 2);

  NullCensus all_null = null_factor_census({test_rings::null_ring({2}), test_rings::null_ring({4})});
  CHECK(all_null.non_null_count == 0);

  NullCensus m2 = null_factor_census({test_rings::m2f2()});
  CHECK(m2.non_null_count == 1);
  CHECK(m2.entries[0].witness.has_value());
}

TEST_CASE("big integer arithmetic basics") {
  CHECK(BigUint::factorial(20).str() == "2432902008176640000");
  CHECK(BigUint::pow(2, 100).str() == "1267650600228229401496703205376");
  BigUint x = BigUint::pow(10, 30);
  x.divexact_small(1000000);
  CHECK(x == BigUint::pow(10, 24));
  CHECK((BigUint(uint64_t(1) << 63) + BigUint(uint64_t(1) << 63)).str() ==
        "18446744073709551616");
}
