#include "doctest.h"
#include "ringlab/errors.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/wedderburn.hpp"
#include "test_rings.hpp"

using namespace ringlab;

TEST_CASE("isomorphism is found between Z/6 and F2 x F3") {
  Ring z6 = test_rings::zn(6);
  Ring p = product({test_rings::fq(2), test_rings::fq(3)}).ring;
  auto iso = find_isomorphism(z6, p);
  REQUIRE(iso.has_value());
  CHECK(iso->validate().isomorphism());
}

TEST_CASE("no isomorphism between Z/4 and the dual numbers") {
  // characteristics 4 and 2 differ, so the invariant prefilter resolves it
  CHECK_FALSE(find_isomorphism(test_rings::zn(4), test_rings::dual(2)).has_value());
}

TEST_CASE("no isomorphism between F4 and F2 x F2") {
  CHECK_FALSE(
      find_isomorphism(test_rings::fq(4), product({test_rings::fq(2), test_rings::fq(2)}).ring)
          .has_value());
}

TEST_CASE("a ring is isomorphic to itself via the identity search") {
  for (Ring r : {test_rings::zn(8), test_rings::m2f2(), test_rings::null_ring({2, 2})}) {
    auto iso = find_isomorphism(r, r);
    REQUIRE(iso.has_value());
    CHECK(iso->validate().isomorphism());
  }
}

TEST_CASE("found witnesses invert to witnesses") {
  Ring z6 = test_rings::zn(6);
  Ring p = product({test_rings::fq(2), test_rings::fq(3)}).ring;
  auto iso = find_isomorphism(z6, p);
  REQUIRE(iso.has_value());
  RingHom back = iso->inverse();
  CHECK(back.validate().isomorphism());
  // composing gives the identity on generators
  RingHom round = back.compose_after(*iso);
  for (size_t i = 0; i < z6->rank(); ++i) CHECK(round.images()[i] == z6->gen(i));
}

TEST_CASE("unitalized null ring of order 2 is the dual numbers") {
  Unitalization u = unitalize(test_rings::null_ring({2}), 2);
  auto iso = find_isomorphism(u.ring, test_rings::dual(2));
  REQUIRE(iso.has_value());
  CHECK(iso->validate().isomorphism());
}

TEST_CASE("quotient Z/8 by {0,4} is Z/4") {
  Ring z8 = test_rings::zn(8);
  Quotient q = quotient(z8, AdditiveSubgroup::span(z8, {{4}}, SubgroupKind::two_sided_ideal));
  CHECK(find_isomorphism(q.ring, test_rings::zn(4)).has_value());
}

TEST_CASE("zero rings are isomorphic") {
  CHECK(find_isomorphism(test_rings::zero_ring(), test_rings::zero_ring()).has_value());
}

TEST_CASE("fingerprints separate obviously different elements") {
  Ring z4 = test_rings::zn(4);
  auto fp = element_fingerprints(z4);
  CHECK(fp[0].additive_order == 1);
  CHECK(fp[1].additive_order == 4);
  CHECK(fp[2].additive_order == 2);
  CHECK(fp[1].idempotent); // 1
  CHECK(fp[2].nilexponent == 2);
}

TEST_CASE("generating sets actually generate") {
  for (Ring r : {test_rings::zn(6), test_rings::m2f2(), test_rings::ut2(2)}) {
    std::vector<uint32_t> gens = ring_generating_set(r);
    std::vector<Vec> els;
    for (uint32_t g : gens) els.push_back(r->element_at(g));
    CHECK(subring_generated(r, els).is_whole_ring());
  }
}

TEST_CASE("automorphisms of small rings") {
  CHECK(all_automorphisms(test_rings::zn(6)).size() == 1);
  CHECK(all_automorphisms(test_rings::fq(4)).size() == 2);  // Frobenius
  CHECK(all_automorphisms(test_rings::m2f2()).size() == 6); // PGL_2(2)
  CHECK(all_automorphisms(test_rings::zero_ring()).size() == 1);
}

TEST_CASE("the search distinguishes budget exhaustion from absence") {
  // an absurdly small budget trips the budget error instead of "absent"
  CHECK_THROWS_AS(find_isomorphism(test_rings::m2f2(), test_rings::m2f2(), 2), RingError);
}

TEST_CASE("isomorphism search is symmetric on a small pool") {
  std::vector<Ring> pool = {test_rings::zn(4), test_rings::dual(2), test_rings::fq(4),
                            test_rings::null_ring({2, 2}),
                            product({test_rings::fq(2), test_rings::fq(2)}).ring};
  for (const Ring& a : pool)
    for (const Ring& b : pool) {
      bool ab = find_isomorphism(a, b).has_value();
      bool ba = find_isomorphism(b, a).has_value();
      CHECK(ab == ba);
      if (a.get() == b.get()) CHECK(ab);
    }
}
