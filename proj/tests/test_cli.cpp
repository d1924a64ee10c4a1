#include <array>
#include <fstream>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(RINGLAB_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string corpus_file(const std::string& id) {
  return std::string(RINGLAB_SOURCE_DIR) + "/corpus/" + id + ".ring";
}

} // namespace

TEST_CASE("cli decompose prints the canonical factor line") {
  CliResult r = run_cli("decompose " + corpus_file("z6"));
  CHECK(r.code == 0);
  CHECK(r.out == "[(1,2)^1, (1,3)^1]\n");
}

TEST_CASE("cli decompose of a radical ring exits 1 with a witness") {
  CliResult r = run_cli("decompose " + corpus_file("z4"));
  CHECK(r.code == 1);
  CHECK(r.out.find("NotSemisimple") != std::string::npos);
}

TEST_CASE("cli nil on a free nil level") {
  CliResult r = run_cli("nil " + corpus_file("freenil_2_2"));
  CHECK(r.code == 0);
  CHECK(r.out.find("nilexponent 2") != std::string::npos);
  CHECK(r.out.find("class 3") != std::string::npos);
}

TEST_CASE("cli radical output in json") {
  CliResult r = run_cli("--format json radical " + corpus_file("z4"));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"semisimple\": false") != std::string::npos);
  CHECK(r.out.find("\"order\": 4") != std::string::npos);
}

TEST_CASE("cli aut reports the automorphism count") {
  CliResult r = run_cli("aut " + corpus_file("m2f2"));
  CHECK(r.code == 0);
  CHECK(r.out.find("|Aut| = 6") != std::string::npos);
}

TEST_CASE("cli orbits") {
  CliResult r = run_cli("orbits " + corpus_file("z2") + " -m 3 -n 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("orbits = 4") != std::string::npos);
}

TEST_CASE("cli bounds") {
  CliResult r = run_cli("bounds -m 3 -s 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("k_bound = 4") != std::string::npos);
  CHECK(r.out.find("w_degree = 8") != std::string::npos);
}

TEST_CASE("cli freenil emits a loadable ring file") {
  CliResult r = run_cli("freenil -p 2 -g 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("ring freenil(p=2,n=2)\n") == 0);
  CHECK(r.out.find("moduli 2 2 2") != std::string::npos);
}

TEST_CASE("cli freenil tower profile") {
  CliResult r = run_cli("freenil -p 3 -g 1 --tower 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("3  5") != std::string::npos); // level 2: class 5
}

TEST_CASE("cli rejects malformed files with exit 2") {
  std::string tmp = "bad_ring_tmp.ring";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    fputs("ring broken\nmoduli nonsense\n", f);
    fclose(f);
  }
  CliResult r = run_cli("radical " + tmp);
  CHECK(r.code == 2);
  CHECK(r.out.find("ParseError") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("cli surfaces non-associative constants as exit 2") {
  std::string tmp = "nonassoc_tmp.ring";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    fputs("ring broken\nmoduli 2 2\nmul 0 0 : 0 1\nmul 1 1 : 1 0\n", f);
    fclose(f);
  }
  CliResult r = run_cli("nil " + tmp);
  CHECK(r.code == 2);
  CHECK(r.out.find("NonAssociative") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("cli aut budget exhaustion exits 3") {
  CliResult r = run_cli("aut " + corpus_file("m2f2") + " --budget 2");
  CHECK(r.code == 3);
}

TEST_CASE("cli verify runs a single deterministic suite") {
  CliResult a = run_cli("verify orbits --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out.find("summary:") != std::string::npos);
  CliResult b = run_cli("verify orbits --seed 7");
  CHECK(a.out == b.out); // byte-identical across runs
}

TEST_CASE("cli --out writes the report to a file") {
  std::string tmp = "cli_out_tmp.txt";
  CliResult r = run_cli("--out " + tmp + " bounds -m 2 -s 1");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(tmp);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(line == "m = 2, s = 1");
  in.close();
  std::remove(tmp.c_str());
}

TEST_CASE("cli verify json and text agree on verdicts") {
  CliResult t = run_cli("verify unitalization");
  CliResult j = run_cli("--format json verify unitalization");
  CHECK(t.code == 0);
  CHECK(j.code == 0);
  size_t text_passes = 0, json_passes = 0;
  for (size_t pos = 0; (pos = t.out.find("[pass]", pos)) != std::string::npos; ++pos)
    ++text_passes;
  for (size_t pos = 0; (pos = j.out.find("\"verdict\": \"pass\"", pos)) != std::string::npos;
       ++pos)
    ++json_passes;
  CHECK(text_passes == json_passes);
  CHECK(text_passes > 0);
}
