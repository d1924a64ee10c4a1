#include "ringlab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

[[noreturn]] void parse_fail(size_t line, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

Ring parse_ring_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  try {
    std::string name = j.value("ring", std::string());
    if (!j.contains("moduli") || !j["moduli"].is_array())
      fail(errc::parse_error, "missing moduli array");
    Vec moduli = j["moduli"].get<Vec>();
    const size_t r = moduli.size();
    std::vector<Mat> sc(r, Mat(r, Vec(r, 0)));
    if (j.contains("mul")) {
      for (const auto& entry : j["mul"]) {
        if (!entry.is_array() || entry.size() != 3)
          fail(errc::parse_error, "mul entries must be [i, j, [c...]]");
        size_t a = entry[0].get<size_t>();
        size_t b = entry[1].get<size_t>();
        if (a >= r || b >= r) fail(errc::parse_error, "mul indices out of range");
        Vec c = entry[2].get<Vec>();
        if (c.size() != r) fail(errc::parse_error, "mul constant vector has wrong length");
        sc[a][b] = std::move(c);
      }
    }
    return FiniteRing::make(std::move(moduli), std::move(sc), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad JSON shape: ") + e.what());
  }
}

} // namespace

Ring parse_ring_text(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_ring_json(text);

  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;

  std::string name;
  Vec moduli;
  bool saw_ring = false, saw_moduli = false;
  std::vector<Mat> sc;
  std::vector<std::vector<bool>> seen_pair;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue; // blank line
    if (word == "ring") {
      if (saw_ring) parse_fail(lineno, "duplicate ring header");
      std::string rest;
      std::getline(ls, rest);
      size_t start = rest.find_first_not_of(" \t");
      name = (start == std::string::npos) ? "" : rest.substr(start);
      saw_ring = true;
    } else if (word == "moduli") {
      if (!saw_ring) parse_fail(lineno, "moduli before ring header");
      if (saw_moduli) parse_fail(lineno, "duplicate moduli line");
      int64_t d;
      while (ls >> d) moduli.push_back(d);
      if (!ls.eof()) parse_fail(lineno, "moduli entries must be integers");
      saw_moduli = true;
      sc.assign(moduli.size(), Mat(moduli.size(), Vec(moduli.size(), 0)));
      seen_pair.assign(moduli.size(), std::vector<bool>(moduli.size(), false));
    } else if (word == "mul") {
      if (!saw_moduli) parse_fail(lineno, "mul before moduli");
      size_t i, j;
      std::string colon;
      if (!(ls >> i >> j >> colon) || colon != ":")
        parse_fail(lineno, "expected 'mul i j : c_1 ... c_r'");
      if (i >= moduli.size() || j >= moduli.size())
        parse_fail(lineno, "generator index out of range");
      if (seen_pair[i][j]) parse_fail(lineno, "duplicate mul pair");
      seen_pair[i][j] = true;
      Vec c;
      int64_t v;
      while (ls >> v) c.push_back(v);
      if (!ls.eof()) parse_fail(lineno, "constants must be integers");
      if (c.size() != moduli.size())
        parse_fail(lineno, "expected " + std::to_string(moduli.size()) + " constants");
      sc[i][j] = std::move(c);
    } else {
      parse_fail(lineno, "unknown directive '" + word + "'");
    }
  }
  if (!saw_ring) fail(errc::parse_error, "missing 'ring' header line");
  if (!saw_moduli) fail(errc::parse_error, "missing 'moduli' line");
  return FiniteRing::make(std::move(moduli), std::move(sc), std::move(name));
}

Ring load_ring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_text(buf.str());
}

std::string dump_ring_text(const Ring& r) {
  std::ostringstream out;
  out << "ring " << r->name() << "\n";
  out << "moduli";
  for (int64_t d : r->moduli()) out << " " << d;
  out << "\n";
  for (size_t i = 0; i < r->rank(); ++i)
    for (size_t j = 0; j < r->rank(); ++j) {
      const Vec& c = r->sc(i, j);
      bool nonzero = false;
      for (int64_t x : c)
        if (x != 0) nonzero = true;
      if (!nonzero) continue;
      out << "mul " << i << " " << j << " :";
      for (int64_t x : c) out << " " << x;
      out << "\n";
    }
  return out.str();
}

void write_ring_file(const Ring& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), errc::parse_error, "cannot open " + path + " for writing");
  out << dump_ring_text(r);
}

} // namespace ringlab
