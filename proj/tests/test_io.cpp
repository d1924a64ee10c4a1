#include "doctest.h"
#include "ringlab/errors.hpp"
#include "ringlab/io.hpp"
#include "test_rings.hpp"

using namespace ringlab;

TEST_CASE("canonical dump round trip") {
  Ring z6 = test_rings::zn(6);
  std::string text = dump_ring_text(z6);
  Ring back = parse_ring_text(text);
  CHECK(back->moduli() == z6->moduli());
  CHECK(back->name() == z6->name());
  CHECK(dump_ring_text(back) == text); // dump(load(f)) is canonical and stable
}

TEST_CASE("omitted pairs default to zero products") {
  Ring r = parse_ring_text("ring nil2\nmoduli 2\n");
  CHECK(r->order() == 2);
  CHECK(r->is_zero(r->mul(r->gen(0), r->gen(0))));
}

TEST_CASE("dump omits zero products and sorts pairs") {
  Ring ut = test_rings::ut2(2);
  std::string text = dump_ring_text(ut);
  CHECK(text ==
        "ring UT2(F2)\n"
        "moduli 2 2 2\n"
        "mul 0 0 : 1 0 0\n"
        "mul 0 1 : 0 1 0\n"
        "mul 1 2 : 0 1 0\n"
        "mul 2 2 : 0 0 1\n");
}

TEST_CASE("parse errors carry line information") {
  try {
    parse_ring_text("ring x\nmoduli 2 banana\n");
    FAIL("expected ParseError");
  } catch (const RingError& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ring_text("moduli 2\n"), RingError);              // no header
  CHECK_THROWS_AS(parse_ring_text("ring x\n"), RingError);                // no moduli
  CHECK_THROWS_AS(parse_ring_text("ring x\nmoduli 2\nmul 0 1 : 0\n"), RingError);
  CHECK_THROWS_AS(parse_ring_text("ring x\nmoduli 2\nmul 0 0 : 0\nmul 0 0 : 0\n"),
                  RingError); // duplicate pair
}

TEST_CASE("non-associative constants are rejected at load") {
  // e0^2 = e1, e1^2 = e0 is not associative
  std::string text =
      "ring broken\n"
      "moduli 2 2\n"
      "mul 0 0 : 0 1\n"
      "mul 1 1 : 1 0\n";
  CHECK_THROWS_AS(parse_ring_text(text), RingError);
}

TEST_CASE("JSON form is accepted") {
  std::string json = R"({"ring": "Z/4", "moduli": [4], "mul": [[0, 0, [1]]]})";
  Ring r = parse_ring_text(json);
  CHECK(r->order() == 4);
  CHECK(r->is_unital());
  CHECK(r->name() == "Z/4");
  // canonical dump of the JSON equals the canonical dump of the text form
  CHECK(dump_ring_text(r) == dump_ring_text(test_rings::zn(4)));
}

TEST_CASE("JSON errors are parse errors") {
  CHECK_THROWS_AS(parse_ring_text("{"), RingError);
  CHECK_THROWS_AS(parse_ring_text(R"({"moduli": "nope"})"), RingError);
  CHECK_THROWS_AS(parse_ring_text(R"({"moduli": [2], "mul": [[0, 5, [1]]]})"), RingError);
}

TEST_CASE("file round trip") {
  Ring m = test_rings::m2f2();
  std::string path = "test_io_m2f2.ring";
  write_ring_file(m, path);
  Ring back = load_ring_file(path);
  CHECK(dump_ring_text(back) == dump_ring_text(m));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_ring_file("does_not_exist.ring"), RingError);
}
