#ifndef RINGLAB_CORPUS_HPP
#define RINGLAB_CORPUS_HPP

#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab::corpus {

Ring zero_ring();
Ring zn(int64_t n);                 // Z/n with its usual multiplication
Ring null_ring(Vec moduli);         // zero multiplication on the given group
Ring dual_numbers(int64_t p);       // F_p[t]/(t^2)
Ring upper_triangular2(int64_t p);  // 2x2 upper triangular matrices over F_p
Ring scaled_cyclic(int64_t n, int64_t c); // single generator e with e*e = c e
Ring two_z8();                      // the subring {0,2,4,6} of Z/8

struct CorpusEntry {
  std::string id; // file-name friendly
  Ring ring;
};

// The curated test corpus: cyclic rings, finite fields, matrix rings,
// upper triangular rings, null rings, free nil levels and a few products.
// Orders stay at or below 256.
const std::vector<CorpusEntry>& curated();

} // namespace ringlab::corpus

#endif
