// Command-line front end: load ring files, run the computations and the
// verification suites, emit text or JSON reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringlab/actions.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/io.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/profinite.hpp"
#include "ringlab/radical.hpp"
#include "ringlab/verify.hpp"
#include "ringlab/wedderburn.hpp"

using namespace ringlab;

namespace {

int exit_code_for(const RingError& e) {
  switch (e.code()) {
    case errc::search_budget_exceeded:
    case errc::budget_exceeded:
      return 3;
    case errc::not_semisimple:
    case errc::internal_check_failed:
      return 1;
    default:
      return 2;
  }
}

struct Output {
  std::string format = "text";
  std::string path;
  bool timings = false;

  void emit(const std::string& text, const nlohmann::json& json) const {
    std::string payload = (format == "json") ? json.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(path, std::ios::binary);
      require(out.good(), errc::parse_error, "cannot open " + path + " for writing");
      out << payload;
    }
  }
};

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

nlohmann::json subgroup_json(const AdditiveSubgroup& s) {
  nlohmann::json j;
  j["order"] = s.order();
  j["basis"] = nlohmann::json::array();
  for (const Vec& b : s.basis()) j["basis"].push_back(b);
  return j;
}

int cmd_radical(const std::string& file, const Output& out) {
  Ring r = load_ring_file(file);
  AdditiveSubgroup j = jacobson_radical_via_maximal_ideals(r);
  std::ostringstream os;
  os << "ring " << r->name() << " (order " << r->order() << ")\n";
  os << "radical order " << j.order() << (j.is_zero_group() ? " (semisimple)" : "") << "\n";
  for (const Vec& b : j.basis()) os << "  basis " << vec_str(b) << "\n";
  nlohmann::json jj;
  jj["ring"] = r->name();
  jj["order"] = r->order();
  jj["radical"] = subgroup_json(j);
  jj["semisimple"] = j.is_zero_group();
  out.emit(os.str(), jj);
  return 0;
}

int cmd_decompose(const std::string& file, const Output& out) {
  Ring r = load_ring_file(file);
  Decomposition d = decompose_semisimple(r);
  std::string line = factors_to_string(d.factors);
  nlohmann::json j;
  j["ring"] = r->name();
  j["factors"] = nlohmann::json::array();
  for (const DecompositionFactor& f : d.factors)
    j["factors"].push_back({{"k", f.k}, {"q", f.q}, {"multiplicity", f.multiplicity}});
  j["canonical"] = line;
  out.emit(line + "\n", j);
  return 0;
}

int cmd_nil(const std::string& file, const Output& out) {
  Ring r = load_ring_file(file);
  NilReport rep = nil_report(r);
  std::ostringstream os;
  os << "ring " << r->name() << " (order " << r->order() << ")\n";
  os << "nil: " << (rep.is_nil ? "yes" : "no");
  if (rep.nilexponent) os << ", nilexponent " << *rep.nilexponent;
  os << "\n";
  os << "nilpotent: " << (rep.is_nilpotent ? "yes" : "no");
  if (rep.nilpotency_class) os << ", class " << *rep.nilpotency_class;
  os << "\n";
  os << "null: " << (rep.is_null ? "yes" : "no") << "\n";
  if (rep.witness) os << "witness " << vec_str(*rep.witness) << "\n";
  nlohmann::json j;
  j["ring"] = r->name();
  j["is_nil"] = rep.is_nil;
  if (rep.nilexponent) j["nilexponent"] = *rep.nilexponent;
  j["is_nilpotent"] = rep.is_nilpotent;
  if (rep.nilpotency_class) j["nilpotency_class"] = *rep.nilpotency_class;
  j["is_null"] = rep.is_null;
  if (rep.witness) j["witness"] = *rep.witness;
  out.emit(os.str(), j);
  return 0;
}

int cmd_aut(const std::string& file, uint64_t budget, const Output& out) {
  Ring r = load_ring_file(file);
  AutGroup g = automorphism_group(r, budget);
  std::ostringstream os;
  os << "ring " << r->name() << " (order " << r->order() << ")\n";
  os << "|Aut| = " << g.order << "\n";
  for (size_t gi : g.generators) {
    os << "generator:";
    for (const Vec& img : g.elements[gi].images()) os << " " << vec_str(img);
    os << "\n";
  }
  nlohmann::json j;
  j["ring"] = r->name();
  j["aut_order"] = g.order;
  j["generators"] = nlohmann::json::array();
  for (size_t gi : g.generators) {
    nlohmann::json imgs = nlohmann::json::array();
    for (const Vec& img : g.elements[gi].images()) imgs.push_back(img);
    j["generators"].push_back(std::move(imgs));
  }
  out.emit(os.str(), j);
  return 0;
}

int cmd_orbits(const std::string& file, size_t m, size_t n, const Output& out) {
  Ring r = load_ring_file(file);
  OrbitReport rep = orbit_count(r, m, n);
  std::ostringstream os;
  os << "ring " << r->name() << " (order " << r->order() << "), m=" << m << ", n=" << n << "\n";
  os << "orbits = " << rep.count.str() << " (" << rep.method << ")\n";
  if (rep.enumeration_count)
    os << "enumeration agrees: " << rep.enumeration_count->str() << "\n";
  nlohmann::json j;
  j["ring"] = r->name();
  j["m"] = m;
  j["n"] = n;
  j["orbits"] = rep.count.str();
  j["method"] = rep.method;
  if (rep.enumeration_count) j["enumeration"] = rep.enumeration_count->str();
  out.emit(os.str(), j);
  return 0;
}

int cmd_freenil(int64_t p, size_t gens, size_t tower, const Output& out) {
  if (tower == 0) {
    Ring r = free_nil_ring(p, gens);
    nlohmann::json j;
    j["ring"] = r->name();
    j["moduli"] = r->moduli();
    j["mul"] = nlohmann::json::array();
    for (size_t a = 0; a < r->rank(); ++a)
      for (size_t b = 0; b < r->rank(); ++b) {
        bool nonzero = false;
        for (int64_t x : r->sc(a, b))
          if (x) nonzero = true;
        if (nonzero) j["mul"].push_back({a, b, r->sc(a, b)});
      }
    out.emit(dump_ring_text(r), j);
    return 0;
  }
  TowerProfile prof = tower_nil_profile(p, tower);
  std::ostringstream os;
  os << "level  order  nilexponent  class  radical\n";
  nlohmann::json rows = nlohmann::json::array();
  for (const TowerProfileRow& row : prof.rows) {
    os << row.level << "  " << row.order << "  " << row.nilexponent << "  "
       << row.nilpotency_class << "  " << (row.radical_is_whole ? "whole" : "proper") << "\n";
    rows.push_back({{"level", row.level},
                    {"order", row.order},
                    {"nilexponent", row.nilexponent},
                    {"class", row.nilpotency_class},
                    {"radical_is_whole", row.radical_is_whole}});
  }
  nlohmann::json j;
  j["p"] = p;
  j["rows"] = std::move(rows);
  out.emit(os.str(), j);
  return 0;
}

int cmd_bounds(size_t m, uint64_t s, const Output& out) {
  BoundReport rep = size_bounds(m, s);
  std::ostringstream os;
  os << "m = " << rep.m << ", s = " << rep.s << "\n";
  os << "k_bound = " << rep.k_bound << "\n";
  os << "f_bound = " << rep.f_bound << "\n";
  os << "w_degree = " << rep.w_degree << "\n";
  nlohmann::json j;
  j["m"] = rep.m;
  j["s"] = rep.s;
  j["k_bound"] = rep.k_bound;
  j["f_bound"] = rep.f_bound;
  j["w_degree"] = rep.w_degree;
  out.emit(os.str(), j);
  return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed, const Output& out) {
  std::vector<std::string> names;
  if (suite == "all")
    names = verify_suite_names();
  else
    names.push_back(suite);
  bool all_ok = true;
  std::ostringstream text;
  nlohmann::json jall = nlohmann::json::array();
  for (const std::string& name : names) {
    VerificationReport rep = run_verify_suite(name, seed);
    all_ok = all_ok && rep.ok();
    text << report_text(rep, out.timings);
    jall.push_back(nlohmann::json::parse(report_json(rep, out.timings)));
  }
  out.emit(text.str(), names.size() == 1 ? jall[0] : jall);
  return all_ok ? 0 : 1;
}

int cmd_corpus_export(const std::string& dir, const Output&) {
  for (const auto& entry : corpus::curated())
    write_ring_file(entry.ring, dir + "/" + entry.id + ".ring");
  std::cout << "wrote " << corpus::curated().size() << " ring files to " << dir << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ring structure toolkit"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out.path, "write output to a file instead of stdout");
  app.add_flag("--timings", out.timings, "include per-case timings in verify reports");

  std::string file, suite = "all", dir = ".";
  uint64_t budget = 50'000'000, seed = 1, s_index = 1;
  size_t m = 2, n = 1, gens = 1, tower = 0;
  int64_t p = 2;

  CLI::App* c_radical = app.add_subcommand("radical", "Jacobson radical of a ring file");
  c_radical->add_option("file", file)->required();

  CLI::App* c_decompose =
      app.add_subcommand("decompose", "decompose a semisimple ring into matrix rings");
  c_decompose->add_option("file", file)->required();

  CLI::App* c_nil = app.add_subcommand("nil", "nil/nilpotent/null diagnostics");
  c_nil->add_option("file", file)->required();

  CLI::App* c_aut = app.add_subcommand("aut", "automorphism group by backtracking search");
  c_aut->add_option("file", file)->required();
  c_aut->add_option("--budget", budget, "search node budget");

  CLI::App* c_orbits = app.add_subcommand("orbits", "coordinate-permutation orbit count");
  c_orbits->add_option("file", file)->required();
  c_orbits->add_option("-m", m, "number of permuted coordinates")->required();
  c_orbits->add_option("-n", n, "tuple length")->required();

  CLI::App* c_freenil = app.add_subcommand("freenil", "free commutative nil ring levels");
  c_freenil->add_option("-p", p, "prime nilexponent")->required();
  c_freenil->add_option("-g", gens, "number of generators")->required();
  c_freenil->add_option("--tower", tower, "emit a profile of levels 1..K instead of a ring");

  CLI::App* c_bounds = app.add_subcommand("bounds", "size bounds for epimorphic matrix images");
  c_bounds->add_option("-m", m, "power-difference parameter")->required();
  c_bounds->add_option("-s", s_index, "ideal index")->required();

  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite, "suite name or 'all'");
  c_verify->add_option("--seed", seed, "seed for randomized cases");

  CLI::App* c_corpus = app.add_subcommand("corpus", "export the curated corpus as ring files");
  c_corpus->add_option("--dir", dir, "target directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_radical->parsed()) return cmd_radical(file, out);
    if (c_decompose->parsed()) return cmd_decompose(file, out);
    if (c_nil->parsed()) return cmd_nil(file, out);
    if (c_aut->parsed()) return cmd_aut(file, budget, out);
    if (c_orbits->parsed()) return cmd_orbits(file, m, n, out);
    if (c_freenil->parsed()) return cmd_freenil(p, gens, tower, out);
    if (c_bounds->parsed()) return cmd_bounds(m, s_index, out);
    if (c_verify->parsed()) return cmd_verify(suite, seed, out);
    if (c_corpus->parsed()) return cmd_corpus_export(dir, out);
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
