#include "qc/golden.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <fstream>
#include <sstream>

namespace qc {

namespace {

[[noreturn]] void die(const std::string& msg) {
  throw std::runtime_error("golden: " + msg);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Lines of a file as (keyword, rest) pairs; comments and blanks dropped.
std::vector<std::pair<std::string, std::string>> read_lines(const std::string& name) {
  std::string path = golden_dir() + "/" + name;
  std::ifstream in(path);
  if (!in) die("cannot open " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t sp = line.find_first_of(" \t");
    if (sp == std::string::npos)
      out.push_back({line, ""});
    else
      out.push_back({line.substr(0, sp), trim(line.substr(sp + 1))});
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::pair<Int, ARec> parse_dominant(const std::string& text) {
  auto terms = ya_parse(text);
  if (terms.size() != 1) die("dominant line is not a single term: " + text);
  return {terms[0].coeff, terms[0].m.a};
}

void load_variables(GoldenCorpus& g) {
  VariableEntry cur;
  bool open = false;
  auto flush = [&] {
    if (!open) return;
    if (cur.expr.empty()) die("variable entry " + cur.key + " lacks a formula");
    g.variables.push_back(cur);
    cur = {};
    open = false;
  };
  for (const auto& [kw, rest] : read_lines("variables.txt")) {
    if (kw == "entry") {
      flush();
      cur.key = rest;
      open = true;
    } else if (kw == "seq") {
      cur.seq = split_commas(rest);
    } else if (kw == "expr") {
      cur.expr = rest;
    } else if (kw == "flag") {
      cur.flagged = true;
      cur.flag = rest;
    } else {
      die("variables.txt: unknown keyword " + kw);
    }
  }
  flush();
}

void load_compat(GoldenCorpus& g) {
  CompatEntry cur;
  bool open = false;
  auto flush = [&] {
    if (!open) return;
    g.compat.push_back(cur);
    cur = {};
    open = false;
  };
  for (const auto& [kw, rest] : read_lines("compatible_sets.txt")) {
    if (kw == "root") {
      flush();
      cur.root = root_parse(rest);
      open = true;
    } else if (kw == "compat") {
      for (const std::string& t : split_commas(rest)) cur.compat.push_back(root_parse(t));
    } else if (kw == "flag") {
      cur.flagged = true;
      cur.flag = rest;
    } else {
      die("compatible_sets.txt: unknown keyword " + kw);
    }
  }
  flush();
}

void load_presentation(GoldenCorpus& g) {
  PresentationEntry cur;
  bool open = false;
  auto flush = [&] {
    if (!open) return;
    if (cur.poly.empty()) die("presentation entry " + cur.target + " lacks a polynomial");
    g.presentation.push_back(cur);
    cur = {};
    open = false;
  };
  for (const auto& [kw, rest] : read_lines("presentation.txt")) {
    if (kw == "gen") {
      size_t sp = rest.find_first_of(" \t");
      if (sp == std::string::npos) die("gen line needs a name and a root");
      g.gens.push_back({trim(rest.substr(0, sp)), root_parse(trim(rest.substr(sp + 1)))});
    } else if (kw == "target") {
      flush();
      cur.target = rest;
      open = true;
    } else if (kw == "poly") {
      cur.poly = rest;
    } else if (kw == "flag") {
      cur.flagged = true;
      cur.flag = rest;
    } else {
      die("presentation.txt: unknown keyword " + kw);
    }
  }
  flush();
}

void load_characters(GoldenCorpus& g) {
  CharEntry cur;
  bool open = false;
  auto flush = [&] {
    if (!open) return;
    if (cur.poly.empty()) die("character entry " + cur.key + " lacks a polynomial");
    g.characters.push_back(cur);
    cur = {};
    open = false;
  };
  for (const auto& [kw, rest] : read_lines("characters.txt")) {
    if (kw == "char") {
      flush();
      cur.key = rest;
      open = true;
    } else if (kw == "method") {
      if (rest != "fm" && rest != "n") die("character method must be fm or n");
      cur.n_method = rest == "n";
    } else if (kw == "poly") {
      cur.poly = rest;
    } else if (kw == "flag") {
      cur.flagged = true;
      cur.flag = rest;
    } else {
      die("characters.txt: unknown keyword " + kw);
    }
  }
  flush();
}

void load_pairs(GoldenCorpus& g) {
  PairCase cur;
  bool open = false;
  auto flush = [&] {
    if (!open) return;
    g.pair_cases.push_back(cur);
    cur = {};
    open = false;
  };
  for (const auto& [kw, rest] : read_lines("pair_cases.txt")) {
    if (kw == "case") {
      flush();
      cur.number = std::stoi(rest);
      open = true;
    } else if (kw == "alpha") {
      cur.alpha = root_parse(rest);
    } else if (kw == "beta") {
      PairBeta b;
      b.beta = root_parse(rest);
      cur.betas.push_back(b);
    } else if (kw == "dominant") {
      if (cur.betas.empty()) die("dominant line before any beta");
      cur.betas.back().has_dominants = true;
      cur.betas.back().dominants.push_back(parse_dominant(rest));
    } else if (kw == "simple-only") {
      if (cur.betas.empty()) die("simple-only line before any beta");
      cur.betas.back().simple_only = true;
    } else if (kw == "fm-contradiction") {
      if (cur.betas.empty()) die("fm-contradiction line before any beta");
      cur.betas.back().fm_contradiction = true;
    } else if (kw == "fmpoly") {
      if (cur.betas.empty()) die("fmpoly line before any beta");
      cur.betas.back().fm_poly = rest;
    } else if (kw == "flag") {
      if (cur.betas.empty()) die("flag line before any beta");
      cur.betas.back().flagged = true;
      cur.betas.back().flag = rest;
    } else {
      die("pair_cases.txt: unknown keyword " + kw);
    }
  }
  flush();
}

}  // namespace

std::string golden_dir() {
  if (const char* env = std::getenv("CLUSTER_QCHAR_GOLDEN_DIR"); env && *env) return env;
#ifdef QC_DEFAULT_GOLDEN_DIR
  return QC_DEFAULT_GOLDEN_DIR;
#else
  return "data";
#endif
}

const GoldenCorpus& corpus() {
  static const GoldenCorpus g = [] {
    GoldenCorpus c;
    load_variables(c);
    load_compat(c);
    load_presentation(c);
    load_characters(c);
    load_pairs(c);
    return c;
  }();
  return g;
}

}  // namespace qc
