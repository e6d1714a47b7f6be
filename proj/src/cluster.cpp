#include "qc/cluster.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <deque>
#include <set>

#include <json.hpp>

namespace qc {

namespace {

[[noreturn]] void die(const std::string& msg) {
  throw std::runtime_error("cluster: " + msg);
}

int sgn(int v) { return (v > 0) - (v < 0); }

Seed seed_from_arrows(const std::vector<std::pair<int, int>>& arrows,
                      std::vector<std::string> names) {
  Seed s;
  for (auto [i, j] : arrows) {
    if (j < kMutable) s.m.b[i][j] += 1;
    if (i < kMutable) s.m.b[j][i] -= 1;
  }
  for (int i = 0; i < kNumVars; ++i) s.vars[i] = lp_var(i);
  s.vertex_names = std::move(names);
  return s;
}

}  // namespace

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k) {
  if (k < 0 || k >= kMutable) die("mutation vertex out of range");
  ExchangeMatrix r;
  for (int i = 0; i < kNumVars; ++i)
    for (int j = 0; j < kMutable; ++j) {
      if (i == k || j == k)
        r.b[i][j] = -m.b[i][j];
      else
        r.b[i][j] = m.b[i][j] + sgn(m.b[i][k]) * std::max(m.b[i][k] * m.b[k][j], 0);
    }
  return r;
}

Seed initial_seed() {
  return seed_from_arrows(
      {{1, 0}, {1, 2}, {3, 2}, {3, 4}, {5, 2}, {0, 7}, {7, 1}, {2, 6}, {6, 5}, {8, 3}, {4, 8}},
      {"0", "1", "2", "3", "4", "5", "6", "7", "8"});
}

Seed grid_seed() {
  // Vertex order: (1,1) (2,1) (3,1) (1,2) (2,2) (3,2) | (1,3) (2,3) (3,3).
  return seed_from_arrows(
      {{3, 0}, {3, 6}, {0, 1}, {1, 4}, {7, 4}, {4, 3}, {2, 1}, {4, 5}, {5, 2}, {5, 8}},
      {"(1,1)", "(2,1)", "(3,1)", "(1,2)", "(2,2)", "(3,2)", "(1,3)", "(2,3)", "(3,3)"});
}

Seed mutate_seed(const Seed& s, int k) {
  if (k < 0 || k >= kMutable) die("mutation vertex out of range");
  LaurentPoly plus = lp_const(1), minus = lp_const(1);
  for (int i = 0; i < kNumVars; ++i) {
    int b = s.m.b[i][k];
    if (b > 0)
      plus = lp_mul(plus, lp_pow(s.vars[i], b));
    else if (b < 0)
      minus = lp_mul(minus, lp_pow(s.vars[i], -b));
  }
  Seed r = s;
  r.m = mutate_matrix(s.m, k);
  r.vars[k] = lp_div_exact(lp_add(plus, minus), s.vars[k]);
  return r;
}

Seed replay_sequence(const Seed& s, const std::vector<int>& seq, bool left_to_right) {
  Seed cur = s;
  if (left_to_right) {
    for (int k : seq) cur = mutate_seed(cur, k);
  } else {
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) cur = mutate_seed(cur, *it);
  }
  return cur;
}

std::vector<int> parse_sequence(const Seed& s, const std::string& text) {
  // Split on commas that are not inside parentheses.
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  std::vector<int> seq;
  for (const auto& p : parts) {
    auto it = std::find(s.vertex_names.begin(), s.vertex_names.end(), p);
    if (it == s.vertex_names.end()) die("unknown vertex '" + p + "' in sequence");
    int idx = static_cast<int>(it - s.vertex_names.begin());
    if (idx >= kMutable) die("vertex '" + p + "' is frozen");
    seq.push_back(idx);
  }
  return seq;
}

std::string seed_to_json(const Seed& s) {
  nlohmann::json j;
  for (int i = 0; i < kNumVars; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < kMutable; ++k) row.push_back(s.m.b[i][k]);
    j["matrix"].push_back(row);
  }
  for (int i = 0; i < kNumVars; ++i) j["vars"].push_back(lp_print(s.vars[i]));
  j["frozen"] = {6, 7, 8};
  j["names"] = s.vertex_names;
  return j.dump(2);
}

Seed seed_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Seed s;
  for (int i = 0; i < kNumVars; ++i)
    for (int k = 0; k < kMutable; ++k) s.m.b[i][k] = j.at("matrix").at(i).at(k).get<int>();
  for (int i = 0; i < kNumVars; ++i)
    s.vars[i] = lp_parse(j.at("vars").at(i).get<std::string>());
  if (j.contains("names"))
    s.vertex_names = j.at("names").get<std::vector<std::string>>();
  else
    for (int i = 0; i < kNumVars; ++i) s.vertex_names.push_back(std::to_string(i));
  return s;
}

std::array<int, kMutable> denominator_root(const LaurentPoly& v) {
  std::array<int, kMutable> r{};
  if (v.is_monomial()) {
    const auto& [m, c] = *v.terms.begin();
    int nz = -1;
    bool single = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (nz >= 0 || m[i] != 1) single = false;
      nz = i;
    }
    if (single && nz >= 0 && nz < kMutable && c == 1) {
      r[nz] = -1;
      return r;
    }
  }
  Mono d = lp_monomial_denominator(v);
  for (int i = kMutable; i < kNumVars; ++i)
    if (d[i] != 0) die("variable with a frozen denominator");
  for (int i = 0; i < kMutable; ++i) r[i] = d[i];
  return r;
}

EnumerationResult enumerate_cluster_variables(const Seed& start, size_t cap) {
  EnumerationResult res;
  std::map<std::string, int> var_ids;
  std::map<std::string, int> frozen_check;
  auto var_id = [&](const LaurentPoly& v, const std::vector<int>& seq) {
    std::string key = lp_print(v);
    auto it = var_ids.find(key);
    if (it != var_ids.end()) return it->second;
    int id = static_cast<int>(res.variables.size());
    var_ids.emplace(std::move(key), id);
    res.variables.push_back({v, denominator_root(v), seq});
    return id;
  };

  struct Node {
    Seed seed;
    std::array<int, kMutable> ids;
    std::vector<int> seq;
  };
  auto cluster_key = [](std::array<int, kMutable> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  std::set<std::array<int, kMutable>> seen;
  std::set<std::string> edge_seen;
  std::deque<Node> queue;

  Node first;
  first.seed = start;
  for (int i = 0; i < kMutable; ++i) first.ids[i] = var_id(start.vars[i], {});
  seen.insert(cluster_key(first.ids));
  res.clusters.push_back(cluster_key(first.ids));
  queue.push_back(std::move(first));

  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k < kMutable; ++k) {
      Seed next = mutate_seed(cur.seed, k);
      std::vector<int> seq = cur.seq;
      seq.push_back(k);
      std::array<int, kMutable> ids = cur.ids;
      ids[k] = var_id(next.vars[k], seq);

      ExchangeEdge e;
      e.var_out = cur.ids[k];
      e.var_in = ids[k];
      for (int i = 0; i < kNumVars; ++i) {
        int b = cur.seed.m.b[i][k];
        if (b == 0) continue;
        int fid = (i < kMutable) ? cur.ids[i] : -(i + 1);
        if (b > 0)
          e.plus_side.push_back({fid, b});
        else
          e.minus_side.push_back({fid, -b});
      }
      std::sort(e.plus_side.begin(), e.plus_side.end());
      std::sort(e.minus_side.begin(), e.minus_side.end());
      std::string ekey;
      {
        int a = std::min(e.var_out, e.var_in), b2 = std::max(e.var_out, e.var_in);
        ekey = std::to_string(a) + "|" + std::to_string(b2);
        auto app = [&ekey](const std::vector<std::pair<int, int>>& side) {
          ekey += "|";
          for (auto [id, ex] : side) ekey += std::to_string(id) + "^" + std::to_string(ex) + ",";
        };
        if (e.var_out <= e.var_in) {
          app(e.plus_side);
          app(e.minus_side);
        } else {
          app(e.minus_side);
          app(e.plus_side);
        }
      }
      if (edge_seen.insert(ekey).second) res.edges.push_back(std::move(e));

      auto key = cluster_key(ids);
      if (seen.insert(key).second) {
        if (seen.size() > cap) die("seed cap exceeded");
        res.clusters.push_back(key);
        queue.push_back({std::move(next), ids, std::move(seq)});
      }
    }
  }
  std::sort(res.clusters.begin(), res.clusters.end());
  return res;
}

}  // namespace qc
