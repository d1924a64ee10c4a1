#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ringlab/corpus.hpp"
#include "ringlab/io.hpp"
#include "test_rings.hpp"

using namespace ringlab;

TEST_CASE("curated corpus shape") {
  const auto& entries = corpus::curated();
  CHECK(entries.size() >= 15);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    CHECK(ids.insert(e.id).second); // unique ids
    CHECK(e.ring->order() <= 256);
  }
}

TEST_CASE("corpus has both unital and non-unital members") {
  size_t unital = 0, radical_rings = 0;
  for (const auto& e : corpus::curated()) {
    if (e.ring->is_unital()) ++unital;
    if (!e.ring->is_unital()) ++radical_rings;
  }
  CHECK(unital >= 5);
  CHECK(radical_rings >= 5);
}

TEST_CASE("associativity: exhaustive to order 64, sampled above") {
  uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (const auto& e : corpus::curated()) {
    const Ring& r = e.ring;
    if (r->order() <= 64) {
      for (uint64_t i = 0; i < r->order(); ++i)
        for (uint64_t j = 0; j < r->order(); ++j)
          for (uint64_t k = 0; k < r->order(); ++k) {
            Vec a = r->element_at(i), b = r->element_at(j), c = r->element_at(k);
            REQUIRE(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
          }
    } else {
      for (int trial = 0; trial < 10000; ++trial) {
        Vec a = r->element_at(next() % r->order());
        Vec b = r->element_at(next() % r->order());
        Vec c = r->element_at(next() % r->order());
        REQUIRE(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
      }
    }
  }
}

TEST_CASE("shipped corpus files are the canonical dumps") {
  for (const auto& e : corpus::curated()) {
    std::string path = std::string(RINGLAB_SOURCE_DIR) + "/corpus/" + e.id + ".ring";
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing corpus file ", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK_MESSAGE(buf.str() == dump_ring_text(e.ring), "stale corpus file ", path);
  }
}
