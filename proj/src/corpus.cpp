#include "ringlab/corpus.hpp"

#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"
#include "ringlab/profinite.hpp"
#include "ringlab/wedderburn.hpp"

namespace ringlab::corpus {

Ring zero_ring() { return FiniteRing::make({}, {}, "zero"); }

Ring zn(int64_t n) {
  std::vector<Mat> sc(1, Mat(1, Vec(1, 0)));
  sc[0][0][0] = 1 % n;
  return FiniteRing::make({n}, std::move(sc), "Z/" + std::to_string(n));
}

Ring null_ring(Vec moduli) {
  const size_t r = moduli.size();
  std::vector<Mat> sc(r, Mat(r, Vec(r, 0)));
  std::string name = "null(";
  for (size_t i = 0; i < r; ++i) name += (i ? "x" : "") + std::to_string(moduli[i]);
  name += ")";
  return FiniteRing::make(std::move(moduli), std::move(sc), name);
}

Ring dual_numbers(int64_t p) {
  require(is_prime(p), errc::not_prime, "dual numbers need a prime field");
  // generators 1, t with t^2 = 0
  std::vector<Mat> sc(2, Mat(2, Vec(2, 0)));
  sc[0][0] = {1, 0};
  sc[0][1] = {0, 1};
  sc[1][0] = {0, 1};
  return FiniteRing::make({p, p}, std::move(sc), "F" + std::to_string(p) + "[t]/(t^2)");
}

Ring upper_triangular2(int64_t p) {
  require(is_prime(p), errc::not_prime, "triangular ring needs a prime field");
  // generators E11, E12, E22
  std::vector<Mat> sc(3, Mat(3, Vec(3, 0)));
  auto set = [&](size_t i, size_t j, size_t k) { sc[i][j][k] = 1; };
  set(0, 0, 0); // E11 E11 = E11
  set(0, 1, 1); // E11 E12 = E12
  set(1, 2, 1); // E12 E22 = E12
  set(2, 2, 2); // E22 E22 = E22
  return FiniteRing::make({p, p, p}, std::move(sc), "UT2(F" + std::to_string(p) + ")");
}

Ring scaled_cyclic(int64_t n, int64_t c) {
  std::vector<Mat> sc(1, Mat(1, Vec(1, 0)));
  sc[0][0][0] = mod_floor(c, n);
  return FiniteRing::make({n}, std::move(sc),
                          "cyclic(" + std::to_string(n) + ",e*e=" + std::to_string(c) + "e)");
}

Ring two_z8() {
  // {0,2,4,6} under the arithmetic of Z/8: one generator e = 2 of additive
  // order 4 with e*e = 2e
  std::vector<Mat> sc(1, Mat(1, Vec(1, 2)));
  return FiniteRing::make({4}, std::move(sc), "2Z/8");
}

const std::vector<CorpusEntry>& curated() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    auto add = [&](const std::string& id, Ring r) { out.push_back({id, std::move(r)}); };
    add("zero", zero_ring());
    add("z2", zn(2));
    add("z4", zn(4));
    add("z6", zn(6));
    add("z8", zn(8));
    add("z12", zn(12));
    add("f4", matrix_ring(1, 4));
    add("f8", matrix_ring(1, 8));
    add("f9", matrix_ring(1, 9));
    add("f2xf2", product({matrix_ring(1, 2), matrix_ring(1, 2)}).ring);
    add("f4xf4", product({matrix_ring(1, 4), matrix_ring(1, 4)}).ring);
    add("m2f2", matrix_ring(2, 2));
    add("m2f3", matrix_ring(2, 3));
    add("m2f2xm2f2", product({matrix_ring(2, 2), matrix_ring(2, 2)}).ring);
    add("f2xm2f2", product({matrix_ring(1, 2), matrix_ring(2, 2)}).ring);
    add("ut2f2", upper_triangular2(2));
    add("ut2f3", upper_triangular2(3));
    add("dual_f2", dual_numbers(2));
    add("null2", null_ring({2}));
    add("null3", null_ring({3}));
    add("null_z4", null_ring({4}));
    add("null_2x2", null_ring({2, 2}));
    add("two_z8", two_z8());
    add("freenil_2_2", free_nil_ring(2, 2));
    add("freenil_3_1", free_nil_ring(3, 1));
    add("freenil_2_3", free_nil_ring(2, 3));
    return out;
  }();
  return entries;
}

} // namespace ringlab::corpus
