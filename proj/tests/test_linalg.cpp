#include "doctest.h"
#include "ringlab/linalg.hpp"

using namespace ringlab;

TEST_CASE("hnf canonical form identifies equal subgroups") {
  Vec moduli{2, 4};
  // (1,1) and (1,3) generate the same subgroup of Z/2 x Z/4? They do not:
  // <(1,1)> = {(0,0),(1,1),(0,2),(1,3)} and <(1,3)> = same set.
  Mat a = hnf_with_moduli({{1, 1}}, moduli);
  Mat b = hnf_with_moduli({{1, 3}}, moduli);
  CHECK(a == b);
  Mat c = hnf_with_moduli({{1, 2}}, moduli);
  CHECK(a != c);
}

TEST_CASE("hnf membership matches brute-force closure") {
  Vec moduli{4, 6};
  Mat h = hnf_with_moduli({{2, 3}}, moduli);
  // brute force the subgroup generated by (2,3)
  std::vector<std::pair<int64_t, int64_t>> want;
  for (int t = 0; t < 12; ++t) want.push_back({(2 * t) % 4, (3 * t) % 6});
  auto in_want = [&](int64_t x, int64_t y) {
    for (auto& p : want)
      if (p.first == x && p.second == y) return true;
    return false;
  };
  for (int64_t x = 0; x < 4; ++x)
    for (int64_t y = 0; y < 6; ++y)
      CHECK(hnf_lattice_contains(h, {x, y}) == in_want(x, y));
}

TEST_CASE("smith transform diagonalizes and tracks an exact inverse") {
  Mat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  SmithU s = smith_left_transform(a);
  // invariant factors of this classic example: 2, 2, 156
  CHECK(s.diag == Vec{2, 2, 156});
  // u * u_inv = identity
  const size_t n = 3;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int64_t acc = 0;
      for (size_t k = 0; k < n; ++k) acc += s.u[i][k] * s.u_inv[k][j];
      CHECK(acc == (i == j ? 1 : 0));
    }
  for (size_t i = 0; i + 1 < n; ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
}
