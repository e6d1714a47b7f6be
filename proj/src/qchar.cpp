#include "qc/qchar.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace qc {

namespace {

[[noreturn]] void die(const std::string& msg) {
  throw std::runtime_error("qchar: " + msg);
}

}  // namespace

std::vector<Segment> segment_decompose(const std::map<int, int>& shift_counts) {
  std::vector<Segment> out;
  int max_count = 0;
  for (const auto& [s, c] : shift_counts) {
    if (c < 0) die("negative multiplicity in segment decomposition");
    max_count = std::max(max_count, c);
  }
  for (int level = 1; level <= max_count; ++level) {
    int run_start = 0, run_len = 0;
    int prev = 0;
    for (const auto& [s, c] : shift_counts) {
      if (c < level) continue;
      if (run_len > 0 && s == prev + 2) {
        ++run_len;
      } else {
        if (run_len > 0) out.push_back({run_len, run_start});
        run_start = s;
        run_len = 1;
      }
      prev = s;
    }
    if (run_len > 0) out.push_back({run_len, run_start});
  }
  return out;
}

std::vector<Sl2Term> sl2_char(const std::map<int, int>& shift_counts, int trunc) {
  std::vector<Sl2Term> acc{{{}, Int(1)}};
  for (const Segment& seg : segment_decompose(shift_counts)) {
    // String character: 1 + A_top^-1 (1 + A_{top-2}^-1 (...)), top = r+2k-1.
    // A term either has no steps or contains the top one, so truncation keeps
    // only the leading term when top > trunc.
    std::vector<Sl2Term> factor{{{}, Int(1)}};
    int top = seg.r + 2 * seg.k - 1;
    if (top <= trunc) {
      for (int j = 1; j <= seg.k; ++j) {
        Sl2Term t{{}, Int(1)};
        for (int u = 0; u < j; ++u) ++t.steps[top - 2 * u];
        factor.push_back(std::move(t));
      }
    }
    std::map<std::map<int, int>, Int> prod;
    for (const Sl2Term& a : acc)
      for (const Sl2Term& b : factor) {
        std::map<int, int> steps = a.steps;
        for (const auto& [s, c] : b.steps) steps[s] += c;
        prod[steps] += a.coeff * b.coeff;
      }
    acc.clear();
    for (auto& [steps, coeff] : prod) acc.push_back({steps, coeff});
  }
  return acc;
}

std::vector<TrackedTerm> phi_terms(const TrackedYMono& m, int node, int trunc) {
  std::map<int, int> shifts;
  for (const auto& [key, exp] : m.y) {
    if (key.first != node) continue;
    if (exp < 0) die("phi expansion of a non-dominant node part");
    if (exp > 0) shifts[key.second] = exp;
  }
  std::vector<TrackedTerm> out;
  for (const Sl2Term& t : sl2_char(shifts, trunc)) {
    TrackedYMono tm = m;
    for (const auto& [s, c] : t.steps)
      for (int u = 0; u < c; ++u) {
        tm.y = ym_apply_a_inverse(tm.y, node, s);
        ++tm.a[{node, s}];
      }
    out.push_back({tm, t.coeff});
  }
  return out;
}

namespace {

struct GenEntry {
  YMono y;
  std::array<Int, 3> acc{};  // per-node pushed contributions, nodes 1..3
};

// Shared generator for fm_char and phi_closure. Processes monomials in
// increasing step-record size; a monomial only receives contributions from
// strictly smaller records, so every entry is final when visited.
std::map<ARec, Int> generate(const TrackedYMono& start, const std::vector<int>& nodes,
                             int trunc, long cap, bool reverse_levels = false) {
  std::map<std::pair<int, ARec>, GenEntry> table;
  const int base = arec_total(start.a);
  table[{base, start.a}].y = start.y;
  std::map<ARec, Int> result;
  long count = 0;
  while (!table.empty()) {
    const int level = table.begin()->first.first;
    std::vector<std::pair<ARec, GenEntry>> block;
    while (!table.empty() && table.begin()->first.first == level) {
      auto node_handle = table.extract(table.begin());
      block.emplace_back(std::move(node_handle.key().second), std::move(node_handle.mapped()));
    }
    if (reverse_levels) std::reverse(block.begin(), block.end());
    for (auto& [rec, e] : block) {
      Int s = 0;
      if (level == base && rec == start.a) s = 1;
      for (const Int& v : e.acc) s = std::max(s, v);
      if (s == 0) continue;
      result[rec] = s;
      if (++count > cap) die("monomial cap exceeded");
      for (int node : nodes) {
        if (!ym_is_dominant_at(e.y, node)) continue;
        Int push = s - e.acc[node - 1];
        if (push == 0) continue;
        TrackedYMono tm{e.y, rec};
        for (const TrackedTerm& t : phi_terms(tm, node, trunc)) {
          if (t.m.a == rec) continue;
          int total = arec_total(t.m.a);
          if (total <= level) die("expansion did not grow the step record");
          auto& target = table[{total, t.m.a}];
          target.y = t.m.y;
          target.acc[node - 1] += push * t.coeff;
        }
      }
    }
  }
  return result;
}

}  // namespace

YPoly fm_char(const YMono& m, int trunc, long cap, bool reverse_levels) {
  if (!ym_is_dominant(m)) die("character generation needs a dominant start");
  YPoly p;
  p.highest = m;
  p.terms = generate({m, {}}, {1, 2, 3}, trunc, cap, reverse_levels);
  return p;
}

bool is_minuscule(const YMono& m, int trunc, long cap) {
  YPoly p = fm_char(m, trunc, cap);
  return yp_dominant_monomials(p).size() == 1;
}

YPoly yp_truncate(const YPoly& p, int trunc) {
  YPoly out;
  out.highest = p.highest;
  for (const auto& [rec, c] : p.terms)
    if (arec_max_shift(rec) <= trunc) out.terms.emplace(rec, c);
  return out;
}

YPoly n_poly(const YMono& m, int trunc, long cap) {
  if (!ym_is_dominant(m)) die("n_poly needs a dominant start");
  struct NEntry {
    YMono y;
    Int w;
  };
  std::map<std::pair<int, ARec>, NEntry> table;
  table[{0, {}}] = {m, Int(1)};
  YPoly out;
  out.highest = m;
  long count = 0;
  for (auto it = table.begin(); it != table.end(); it = table.erase(it)) {
    const ARec& rec = it->first.second;
    NEntry& e = it->second;
    out.terms[rec] = e.w;
    if (++count > cap) die("monomial cap exceeded");
    bool seen[4] = {};
    for (const auto& [key, exp] : rec)
      if (exp != 0) seen[key.first] = true;
    for (int node = 1; node <= 3; ++node) {
      if (seen[node]) continue;
      if (!ym_is_dominant_at(e.y, node)) continue;
      for (const TrackedTerm& t : phi_terms({e.y, rec}, node, trunc)) {
        if (t.m.a == rec) continue;
        auto& target = table[{arec_total(t.m.a), t.m.a}];
        target.y = t.m.y;
        target.w = std::max(target.w, Int(e.w * t.coeff));
      }
    }
  }
  return out;
}

std::vector<TrackedTerm> phi_closure(const TrackedYMono& m, const std::vector<int>& nodes,
                                     int trunc, long cap) {
  for (int node : nodes)
    if (!ym_is_dominant_at(m.y, node)) die("phi_closure start not dominant on its node set");
  std::vector<TrackedTerm> out;
  for (const auto& [rec, coeff] : generate(m, nodes, trunc, cap)) {
    YMono y = m.y;
    for (const auto& [key, exp] : rec) {
      int extra = exp - (m.a.count(key) ? m.a.at(key) : 0);
      for (int u = 0; u < extra; ++u) y = ym_apply_a_inverse(y, key.first, key.second);
    }
    out.push_back({{y, rec}, coeff});
  }
  return out;
}

YMono kr_monomial(int node, int k, int r) {
  YMono m;
  for (int t = 0; t < k; ++t) m = ym_mul(m, ym_var(node, r + 2 * t));
  return m;
}

namespace {

using ShiftMono = std::map<int, int>;

std::map<ShiftMono, Int> single_char(int k, int r, int trunc) {
  ShiftMono top;
  for (int t = 0; t < k; ++t) ++top[r + 2 * t];
  std::map<ShiftMono, Int> out;
  std::map<int, int> counts = top;
  for (const Sl2Term& t : sl2_char(counts, trunc)) {
    ShiftMono y = top;
    for (const auto& [s, c] : t.steps) {
      y[s - 1] -= c;
      y[s + 1] -= c;
    }
    std::erase_if(y, [](const auto& kv) { return kv.second == 0; });
    out[y] += t.coeff;
  }
  return out;
}

std::map<ShiftMono, Int> single_mul(const std::map<ShiftMono, Int>& a,
                                    const std::map<ShiftMono, Int>& b) {
  std::map<ShiftMono, Int> out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      ShiftMono m = ma;
      for (const auto& [s, e] : mb) {
        m[s] += e;
        if (m[s] == 0) m.erase(s);
      }
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

bool check_t_system_single(int k, int r, int trunc) {
  auto lhs = single_mul(single_char(k, r, trunc), single_char(k, r + 2, trunc));
  auto rhs = single_mul(single_char(k + 1, r, trunc), single_char(k - 1, r + 2, trunc));
  rhs[{}] += 1;
  std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
  return lhs == rhs;
}

bool check_t_system(int node, int k, int r, int trunc) {
  auto X = [&](int n, int kk, int rr) { return yp_collapse(fm_char(kr_monomial(n, kk, rr), trunc)); };
  auto lhs = yr_mul(X(node, k, r), X(node, k, r + 2));
  auto rhs = yr_mul(X(node, k + 1, r), X(node, k - 1, r + 2));
  YRing adj{{YMono{}, Int(1)}};
  for (int j : node_adjacent(node)) adj = yr_mul(adj, X(j, k, r + 1));
  yr_add(rhs, adj);
  return lhs == rhs;
}

}  // namespace qc
