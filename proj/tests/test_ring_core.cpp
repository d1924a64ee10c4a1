#include <set>

#include "doctest.h"
#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"
#include "test_rings.hpp"

using namespace ringlab;

TEST_CASE("build_ring validates the cyclic unital ring Z/4") {
  Ring z4 = test_rings::zn(4);
  CHECK(z4->order() == 4);
  CHECK(z4->is_unital());
  CHECK(characteristic(z4) == 4);
}

TEST_CASE("build_ring accepts zero multiplication (null ring)") {
  Ring n2 = test_rings::null_ring({2});
  CHECK(n2->order() == 2);
  CHECK_FALSE(n2->is_unital());
  CHECK(n2->mul(n2->gen(0), n2->gen(0)) == n2->zero());
}

TEST_CASE("build_ring associativity verdict by direct expansion") {
  // e0*e0 = e1, all other products zero: expanding both sides of every
  // generator triple gives 0 = 0, so this is associative (it is t*F2[t]/t^3).
  {
    std::vector<Mat> sc(2, Mat(2, Vec(2, 0)));
    sc[0][0] = {0, 1};
    Ring r = FiniteRing::make({2, 2}, sc);
    // independent expansion of (e0 e0) e0 and e0 (e0 e0):
    // (e0 e0) e0 = e1 e0 = 0, e0 (e0 e0) = e0 e1 = 0.
    CHECK(r->mul(r->sc(0, 0), r->gen(0)) == r->zero());
    CHECK(r->mul(r->gen(0), r->sc(0, 0)) == r->zero());
  }
  // e0^2 = e1 and e1^2 = e0 breaks: (e0 e0) e1 = e1 e1 = e0 but
  // e0 (e0 e1) = e0 * 0 = 0.
  {
    std::vector<Mat> sc(2, Mat(2, Vec(2, 0)));
    sc[0][0] = {0, 1};
    sc[1][1] = {1, 0};
    CHECK_THROWS_AS(FiniteRing::make({2, 2}, sc), RingError);
  }
}

TEST_CASE("build_ring rejects bad shapes and unreduced constants") {
  CHECK_THROWS_AS(FiniteRing::make({1}, {Mat{Vec{0}}}), RingError);
  CHECK_THROWS_AS(FiniteRing::make({2}, {}), RingError);
  std::vector<Mat> sc(1, Mat(1, Vec(1, 5)));
  CHECK_THROWS_AS(FiniteRing::make({4}, sc), RingError);
}

TEST_CASE("element arithmetic in Z/4 and Z/8") {
  Ring z4 = test_rings::zn(4);
  RingElement two(z4, {2});
  CHECK((two * two).is_zero());

  Ring z8 = test_rings::zn(8);
  RingElement x(z8, {2});
  CHECK(x.pow(3).is_zero());
  CHECK(x.pow(2) == RingElement(z8, {4}));
  CHECK(RingElement(z8, {3}).scaled(5) == RingElement(z8, {7}));
  CHECK((-RingElement(z8, {3})) == RingElement(z8, {5}));
}

TEST_CASE("element arithmetic rejects mixed parents") {
  RingElement a(test_rings::zn(4), {1});
  RingElement b(test_rings::zn(4), {1});
  CHECK_THROWS_AS(a + b, RingError); // distinct instances, same presentation
}

TEST_CASE("null ring multiplies everything to zero") {
  Ring n = test_rings::null_ring({2, 2});
  for (uint64_t i = 0; i < n->order(); ++i)
    for (uint64_t j = 0; j < n->order(); ++j)
      CHECK(n->is_zero(n->mul(n->element_at(i), n->element_at(j))));
}

TEST_CASE("subring generated by 2 in Z/8 is {0,2,4,6}") {
  Ring z8 = test_rings::zn(8);
  AdditiveSubgroup s = subring_generated(z8, {{2}});
  CHECK(s.order() == 4);
  CHECK(s.contains({6}));
  CHECK_FALSE(s.contains({1}));
  // idempotent: regenerating from its own elements changes nothing
  CHECK(subring_generated(z8, s.elements()) == s);
}

TEST_CASE("subring generated by zero is the zero subgroup") {
  Ring z8 = test_rings::zn(8);
  CHECK(subring_generated(z8, {{0}}).order() == 1);
}

TEST_CASE("annihilators in Z/4") {
  Ring z4 = test_rings::zn(4);
  AdditiveSubgroup a2 = annihilator(z4, {2});
  CHECK(a2.order() == 2);
  CHECK(a2.contains({2}));
  CHECK(annihilator(z4, {0}).order() == 4);
  CHECK(annihilator(z4, {1}).order() == 1);
  CHECK(a2.kind() == SubgroupKind::two_sided_ideal); // commutative ring
}

TEST_CASE("ideal generated in Z/8 includes the generator") {
  Ring z8 = test_rings::zn(8);
  AdditiveSubgroup i = ideal_generated(z8, {{2}}, Sided::two);
  CHECK(i.order() == 4);
  CHECK(i.contains({2}));
}

TEST_CASE("ideal generated by 1 in a unital ring is everything") {
  Ring z8 = test_rings::zn(8);
  CHECK(ideal_generated(z8, {{1}}, Sided::left).is_whole_ring());
}

TEST_CASE("quotient Z/8 by {0,4} has order 4 and correct projection") {
  Ring z8 = test_rings::zn(8);
  AdditiveSubgroup i = AdditiveSubgroup::span(z8, {{4}});
  Quotient q = quotient(z8, i.with_kind(SubgroupKind::two_sided_ideal));
  CHECK(q.ring->order() == 4);
  CHECK(q.proj.validate().homomorphism());
  CHECK(q.proj.validate().surjective);
  // order arithmetic: |R/I| * |I| = |R|
  CHECK(q.ring->order() * i.order() == z8->order());
}

TEST_CASE("quotient by the zero ideal and by the whole ring") {
  Ring z4 = test_rings::zn(4);
  Quotient q0 = quotient(z4, AdditiveSubgroup::zero(z4));
  CHECK(q0.ring->order() == 4);
  CHECK(q0.proj.validate().isomorphism());
  Quotient qr = quotient(z4, AdditiveSubgroup::whole(z4));
  CHECK(qr.ring->order() == 1);
}

TEST_CASE("quotient demands a two-sided ideal") {
  // in M2(F2), the first-row subgroup is a right ideal but not two-sided
  Ring m = test_rings::m2f2();
  AdditiveSubgroup row = AdditiveSubgroup::span(m, {m->gen(0), m->gen(1)});
  CHECK(row.check_kind(SubgroupKind::right_ideal));
  CHECK_FALSE(row.check_kind(SubgroupKind::two_sided_ideal));
  CHECK_THROWS_AS(quotient(m, row), RingError);
}

TEST_CASE("products have componentwise structure") {
  ProductRing p = product({test_rings::fq(2), test_rings::fq(3)});
  CHECK(p.ring->order() == 6);
  CHECK(p.ring->is_unital());
  CHECK(characteristic(p.ring) == 6);
  for (const RingHom& h : p.injections) CHECK(h.validate().homomorphism());
  for (const RingHom& h : p.projections) {
    HomFlags f = h.validate();
    CHECK(f.homomorphism());
    CHECK(f.surjective);
  }
  ProductRing single = product({test_rings::zn(4)});
  CHECK(single.ring->order() == 4);
  ProductRing nulls = product({test_rings::null_ring({2}), test_rings::null_ring({3})});
  for (uint64_t i = 0; i < 6; ++i)
    for (uint64_t j = 0; j < 6; ++j)
      CHECK(nulls.ring->is_zero(
          nulls.ring->mul(nulls.ring->element_at(i), nulls.ring->element_at(j))));
}

TEST_CASE("unitalization embeds the ring as a two-sided ideal") {
  Ring n2 = test_rings::null_ring({2});
  Unitalization u = unitalize(n2, 2);
  CHECK(u.ring->order() == 4);
  CHECK(u.ring->unit() == u.unit);
  CHECK(u.embed.validate().homomorphism());
  CHECK(u.embed.validate().injective);
  AdditiveSubgroup img = u.embed.image_subgroup();
  CHECK(img.check_kind(SubgroupKind::two_sided_ideal));
  // (a,1)^2 = (0,1) and (a,0)^2 = (0,0)
  Vec a1 = u.ring->add(u.ring->gen(0), u.unit);
  CHECK(u.ring->pow(a1, 2) == u.unit);
  CHECK(u.ring->is_zero(u.ring->pow(u.ring->gen(0), 2)));

  CHECK_THROWS_AS(unitalize(n2, 1), RingError);
  CHECK_THROWS_AS(unitalize(n2, 3), RingError); // not a multiple of char 2
}

TEST_CASE("unitalizing Z/4 as a non-unital input gives order 16") {
  Ring z4 = test_rings::zn(4);
  Unitalization u = unitalize(z4, 4);
  CHECK(u.ring->order() == 16);
  CHECK(u.ring->is_unital());
  CHECK(u.embed.image_subgroup().check_kind(SubgroupKind::two_sided_ideal));
}

TEST_CASE("characteristic is the lcm of the moduli") {
  CHECK(characteristic(test_rings::zn(8)) == 8);
  CHECK(characteristic(product({test_rings::fq(2), test_rings::fq(3)}).ring) == 6);
  CHECK(characteristic(test_rings::zero_ring()) == 1);
}

TEST_CASE("zero ring conventions") {
  Ring z = test_rings::zero_ring();
  CHECK(z->order() == 1);
  CHECK(z->is_unital()); // 1 = 0 in the trivial ring
  Quotient q = quotient(z, AdditiveSubgroup::whole(z));
  CHECK(q.ring->order() == 1);
}

TEST_CASE("associativity holds on all element triples for small rings") {
  for (Ring r : {test_rings::m2f2(), test_rings::ut2(2), test_rings::fq(9)}) {
    REQUIRE(r->order() <= 81);
    for (uint64_t i = 0; i < r->order(); ++i)
      for (uint64_t j = 0; j < r->order(); ++j)
        for (uint64_t k = 0; k < r->order(); ++k) {
          Vec a = r->element_at(i), b = r->element_at(j), c = r->element_at(k);
          REQUIRE(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
        }
  }
}

TEST_CASE("annihilator is a subgroup for every element (order <= 64 rings)") {
  for (Ring r : {test_rings::zn(12), test_rings::ut2(2), test_rings::m2f2()}) {
    for (uint64_t i = 0; i < r->order(); ++i) {
      AdditiveSubgroup a = annihilator(r, r->element_at(i));
      // closure under + and - over all pairs of members
      std::vector<Vec> els = a.elements();
      for (const Vec& x : els)
        for (const Vec& y : els) {
          CHECK(a.contains(r->add(x, y)));
          CHECK(a.contains(r->sub(x, y)));
        }
    }
  }
}

TEST_CASE("subgroup sum and intersection") {
  Ring z12 = test_rings::zn(12);
  AdditiveSubgroup a = AdditiveSubgroup::span(z12, {{4}});
  AdditiveSubgroup b = AdditiveSubgroup::span(z12, {{6}});
  CHECK(subgroup_sum(a, b).order() == 6);          // <2>
  CHECK(subgroup_intersection(a, b).order() == 1); // {0}
}

TEST_CASE("spans agree with brute-force additive closure (random generators)") {
  std::vector<Ring> pool = {test_rings::zn(12), test_rings::null_ring({2, 4}),
                            test_rings::ut2(3)};
  uint64_t state = 42;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  };
  for (const Ring& r : pool)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Vec> gens;
      for (int g = 0; g < 2; ++g) gens.push_back(r->element_at(next() % r->order()));
      AdditiveSubgroup h = AdditiveSubgroup::span(r, gens);
      // brute force: close the set under addition
      std::set<Vec> closure(gens.begin(), gens.end());
      closure.insert(r->zero());
      while (true) {
        std::set<Vec> bigger = closure;
        for (const Vec& x : closure)
          for (const Vec& y : closure) bigger.insert(r->add(x, y));
        if (bigger.size() == closure.size()) break;
        closure = std::move(bigger);
      }
      REQUIRE(h.order() == closure.size());
      for (uint64_t i = 0; i < r->order(); ++i) {
        Vec v = r->element_at(i);
        REQUIRE(h.contains(v) == (closure.count(v) > 0));
      }
    }
}

TEST_CASE("quotients by random ideals keep the order arithmetic and kernels exact") {
  std::vector<Ring> pool = {test_rings::zn(12), test_rings::m2f2(),
                            test_rings::ut2(2), test_rings::dual(3)};
  uint64_t state = 7;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  };
  for (const Ring& r : pool)
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = r->element_at(next() % r->order());
      AdditiveSubgroup ideal = ideal_generated(r, {x}, Sided::two);
      Quotient q = quotient(r, ideal);
      REQUIRE(q.ring->order() * ideal.order() == r->order());
      HomFlags flags = q.proj.validate();
      REQUIRE(flags.homomorphism());
      REQUIRE(flags.surjective);
      // the kernel of the projection is exactly the ideal
      for (uint64_t i = 0; i < r->order(); ++i) {
        Vec v = r->element_at(i);
        REQUIRE(q.ring->is_zero(q.proj.apply(v)) == ideal.contains(v));
      }
      // lifting a quotient element projects back to it
      for (uint64_t i = 0; i < q.ring->order(); ++i) {
        Vec w = q.ring->element_at(i);
        REQUIRE(q.proj.apply(q.lift(w)) == w);
      }
    }
}
