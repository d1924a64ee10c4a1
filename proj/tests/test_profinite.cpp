#include "doctest.h"
#include "ringlab/errors.hpp"
#include "ringlab/profinite.hpp"
#include "ringlab/radical.hpp"
#include "test_rings.hpp"

using namespace ringlab;

TEST_CASE("free nil ring shapes") {
  Ring a = free_nil_ring(2, 2);
  CHECK(a->order() == 8); // basis x0, x1, x0x1
  CHECK(a->rank() == 3);
  CHECK(a->is_commutative());
  CHECK_FALSE(a->is_unital());

  Ring b = free_nil_ring(3, 1);
  CHECK(b->order() == 9); // basis x0, x0^2
  CHECK(characteristic(b) == 3);

  Ring c = free_nil_ring(2, 1);
  CHECK(c->order() == 2);
  CHECK(nil_report(c).is_null);

  CHECK_THROWS_AS(free_nil_ring(4, 1), RingError);
}

TEST_CASE("dimension formula p^(p^n - 1) for small levels") {
  CHECK(free_nil_ring(2, 1)->order() == 2);
  CHECK(free_nil_ring(2, 2)->order() == 8);
  CHECK(free_nil_ring(2, 3)->order() == 128);
  CHECK(free_nil_ring(3, 1)->order() == 9);
  CHECK(free_nil_ring(3, 2)->order() == 6561);
}

TEST_CASE("nilexponent p with the first generator as witness") {
  for (auto [p, n] : std::vector<std::pair<int64_t, size_t>>{{2, 2}, {3, 1}, {3, 2}}) {
    Ring r = free_nil_ring(p, n);
    std::vector<int64_t> e0(n, 0);
    e0[0] = 1;
    Vec x0 = r->gen(free_nil_monomial_index(p, n, e0));
    CHECK_FALSE(r->is_zero(r->pow(x0, uint64_t(p - 1))));
    CHECK(r->is_zero(r->pow(x0, uint64_t(p))));
  }
}

TEST_CASE("subring generated by x0 in free_nil(3,1) is the whole ring") {
  Ring r = free_nil_ring(3, 1);
  AdditiveSubgroup s = subring_generated(r, {r->gen(0)});
  CHECK(s.order() == 9);
}

TEST_CASE("two-sided ideal generated by x0 in free_nil(2,2)") {
  Ring r = free_nil_ring(2, 2);
  Vec x0 = r->gen(free_nil_monomial_index(2, 2, {1, 0}));
  AdditiveSubgroup i = ideal_generated(r, {x0}, Sided::two);
  CHECK(i.order() == 4); // span{x0, x0x1}
  CHECK(i.contains(r->gen(free_nil_monomial_index(2, 2, {1, 1}))));
  CHECK_FALSE(i.contains(r->gen(free_nil_monomial_index(2, 2, {0, 1}))));
}

TEST_CASE("free nil towers connect by killing the last generator") {
  InverseSystem sys = free_nil_system(2, 3);
  REQUIRE(sys.levels.size() == 3);
  CHECK(sys.levels[0]->order() == 2);
  CHECK(sys.levels[1]->order() == 8);
  CHECK(sys.levels[2]->order() == 128);
  Verdict v = check_system(sys, true);
  CHECK(v.pass);

  // x2 dies, x0 and x1 survive
  const RingHom& f = sys.maps[1];
  Ring big = sys.levels[2], small = sys.levels[1];
  CHECK(f.apply(big->gen(free_nil_monomial_index(2, 3, {0, 0, 1}))) == small->zero());
  CHECK(f.apply(big->gen(free_nil_monomial_index(2, 3, {1, 0, 0}))) ==
        small->gen(free_nil_monomial_index(2, 2, {1, 0})));
}

TEST_CASE("radical commutes with the connecting maps on free nil towers") {
  InverseSystem sys = free_nil_system(2, 2);
  for (const Ring& level : sys.levels) CHECK(jacobson_radical(level).is_whole_ring());
  // image of J(level n+1) spans J(level n) since both are everything
  AdditiveSubgroup img = sys.maps[0].image_subgroup();
  CHECK(img.is_whole_ring());
}

TEST_CASE("single-level systems pass vacuously") {
  InverseSystem sys = free_nil_system(3, 1);
  CHECK(check_system(sys, true).pass);
}

TEST_CASE("a deliberately broken connecting map fails with a certificate") {
  InverseSystem sys = free_nil_system(2, 2);
  // x0 -> x0^2 = 0, x1 -> x1, x0x1 -> x0x1: not multiplicative
  Ring big = sys.levels[1], small = sys.levels[0];
  std::vector<Vec> bad_images = {small->zero(), small->gen(0), small->gen(0)};
  sys.maps[0] = RingHom(big, small, bad_images);
  Verdict v = check_system(sys);
  CHECK_FALSE(v.pass);
  CHECK(v.detail.find("map 0") != std::string::npos);
}

TEST_CASE("reduced polynomial evaluation is nonzero at the generators") {
  // x0 x1 + x0 over F2
  Polynomial f;
  f[{1, 1}] = 1;
  f[{1, 0}] = 1;
  CHECK(reduced_poly_nonvanishing(2, 2, f).pass);

  // x0^2 over F3 in one variable
  Polynomial g;
  g[{2}] = 1;
  CHECK(reduced_poly_nonvanishing(3, 1, g).pass);
}

TEST_CASE("reduced polynomial preconditions") {
  Polynomial too_big;
  too_big[{2}] = 1; // degree 2 >= p = 2
  CHECK_THROWS_AS(reduced_poly_nonvanishing(2, 1, too_big), RingError);

  Polynomial zero;
  CHECK_THROWS_AS(reduced_poly_nonvanishing(2, 1, zero), RingError);
  Polynomial zero_mod_p;
  zero_mod_p[{1}] = 2; // = 0 mod 2
  CHECK_THROWS_AS(reduced_poly_nonvanishing(2, 1, zero_mod_p), RingError);

  Polynomial with_constant;
  with_constant[{0}] = 1;
  with_constant[{1}] = 1;
  CHECK_THROWS_AS(reduced_poly_nonvanishing(2, 1, with_constant), RingError);
}

TEST_CASE("tower nil profile: fixed nilexponent, growing class") {
  TowerProfile prof = tower_nil_profile(2, 3);
  REQUIRE(prof.rows.size() == 3);
  for (size_t i = 0; i < prof.rows.size(); ++i) {
    CHECK(prof.rows[i].nilexponent == 2);
    CHECK(prof.rows[i].nilpotency_class == i + 2); // n(p-1)+1 with n = i+1
    CHECK(prof.rows[i].radical_is_whole);
  }
}

TEST_CASE("tower profile at a single level has class p") {
  TowerProfile prof = tower_nil_profile(3, 1);
  REQUIRE(prof.rows.size() == 1);
  CHECK(prof.rows[0].nilpotency_class == 3);
  CHECK(prof.rows[0].nilexponent == 3);
}
