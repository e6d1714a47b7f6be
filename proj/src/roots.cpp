#include "qc/roots.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <set>

#include "qc/bigint.hpp"

namespace qc {

namespace {

[[noreturn]] void die(const std::string& msg) {
  throw std::runtime_error("roots: " + msg);
}

constexpr std::array<std::pair<int, int>, 5> kEdges{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}};

std::array<std::array<int, 6>, 6> make_cartan() {
  std::array<std::array<int, 6>, 6> c{};
  for (int i = 0; i < 6; ++i) c[i][i] = 2;
  for (auto [i, j] : kEdges) {
    c[i][j] = -1;
    c[j][i] = -1;
  }
  return c;
}

}  // namespace

const std::array<std::array<int, 6>, 6> kCartan = make_cartan();

bool e6_adjacent(int i, int j) { return i != j && kCartan[i][j] == -1; }

int eps_of(int i) { return (i == 1 || i == 3 || i == 5) ? 1 : -1; }

int root_height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

const std::vector<Root>& almost_positive_roots() {
  static const std::vector<Root> all = [] {
    std::set<Root> pos;
    for (int i = 0; i < 6; ++i) {
      Root r{};
      r[i] = 1;
      pos.insert(r);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Root> cur(pos.begin(), pos.end());
      for (const Root& r : cur) {
        for (int i = 0; i < 6; ++i) {
          int pair_i = 0;
          for (int j = 0; j < 6; ++j) pair_i += kCartan[i][j] * r[j];
          Root s = r;
          s[i] -= pair_i;
          bool nonneg = true, nonzero = false;
          for (int c : s) {
            if (c < 0) nonneg = false;
            if (c != 0) nonzero = true;
          }
          if (nonneg && nonzero && pos.insert(s).second) grew = true;
        }
      }
    }
    std::vector<Root> out;
    for (int i = 0; i < 6; ++i) {
      Root r{};
      r[i] = -1;
      out.push_back(r);
    }
    std::vector<Root> p(pos.begin(), pos.end());
    std::sort(p.begin(), p.end(), [](const Root& a, const Root& b) {
      int ha = root_height(a), hb = root_height(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    out.insert(out.end(), p.begin(), p.end());
    return out;
  }();
  return all;
}

int root_index(const Root& r) {
  const auto& all = almost_positive_roots();
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == r) return static_cast<int>(i);
  return -1;
}

Root tau(const Root& r, int eps) {
  Root out = r;
  for (int i = 0; i < 6; ++i) {
    if (eps_of(i) != eps) continue;
    int v = -r[i];
    for (int j = 0; j < 6; ++j)
      if (e6_adjacent(i, j)) v += std::max(r[j], 0);
    out[i] = v;
  }
  return out;
}

int pairing(const Root& xi, const Root& gamma) {
  int s = 0;
  for (int i = 0; i < 6; ++i) s += eps_of(i) * xi[i] * gamma[i];
  return s;
}

int compat_degree(const Root& a, const Root& b) {
  return std::max({pairing(a, tau(b, 1)), pairing(tau(a, 1), b), 0});
}

std::vector<Root> compatible_set(const Root& a) {
  std::vector<Root> out;
  for (const Root& b : almost_positive_roots()) {
    if (b == a) continue;
    if (compat_degree(a, b) == 0) out.push_back(b);
  }
  return out;
}

const std::vector<std::array<int, 6>>& clusters() {
  static const std::vector<std::array<int, 6>> all = [] {
    const auto& roots = almost_positive_roots();
    const int n = static_cast<int>(roots.size());
    std::vector<uint64_t> compat(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && compat_degree(roots[i], roots[j]) == 0)
          compat[i] |= uint64_t(1) << j;

    std::vector<std::array<int, 6>> found;
    std::array<int, 6> chosen{};
    auto rec = [&](auto&& self, int depth, uint64_t cand, int min_next) -> void {
      if (depth == 6) {
        found.push_back(chosen);
        return;
      }
      if (std::popcount(cand >> min_next) < 6 - depth) return;
      for (int i = min_next; i < n; ++i) {
        if (!(cand & (uint64_t(1) << i))) continue;
        chosen[depth] = i;
        self(self, depth + 1, cand & compat[i], i + 1);
      }
    };
    rec(rec, 0, ~uint64_t(0) >> (64 - n), 0);
    return found;
  }();
  return all;
}

ClusterExpansion cluster_expansion(const Root& gamma) {
  const auto& roots = almost_positive_roots();
  bool found = false;
  ClusterExpansion result;
  for (const auto& cl : clusters()) {
    // Solve sum_j n_j * roots[cl[j]] = gamma exactly.
    std::array<std::array<Rat, 7>, 6> m{};
    for (int row = 0; row < 6; ++row) {
      for (int col = 0; col < 6; ++col) m[row][col] = roots[cl[col]][row];
      m[row][6] = gamma[row];
    }
    int rank = 0;
    std::array<int, 6> pivot_row{};
    pivot_row.fill(-1);
    for (int col = 0; col < 6 && rank < 6; ++col) {
      int pr = rank;
      while (pr < 6 && m[pr][col] == 0) ++pr;
      if (pr == 6) continue;
      std::swap(m[pr], m[rank]);
      Rat piv = m[rank][col];
      for (int j = col; j <= 6; ++j) m[rank][j] /= piv;
      for (int i = 0; i < 6; ++i) {
        if (i == rank || m[i][col] == 0) continue;
        Rat f = m[i][col];
        for (int j = col; j <= 6; ++j) m[i][j] -= f * m[rank][j];
      }
      pivot_row[col] = rank;
      ++rank;
    }
    bool ok = true;
    std::array<Int, 6> n{};
    for (int i = rank; i < 6 && ok; ++i)
      if (m[i][6] != 0) ok = false;
    for (int col = 0; col < 6 && ok; ++col) {
      Rat v = pivot_row[col] >= 0 ? m[pivot_row[col]][6] : Rat(0);
      if (denominator(v) != 1 || numerator(v) < 0) ok = false;
      else n[col] = numerator(v);
    }
    if (!ok) continue;
    // Confirm (guards free columns).
    Root check{};
    for (int col = 0; col < 6; ++col)
      for (int row = 0; row < 6; ++row)
        check[row] += static_cast<int>(n[col]) * roots[cl[col]][row];
    if (check != gamma) continue;

    ClusterExpansion e;
    for (int col = 0; col < 6; ++col)
      if (n[col] > 0) e.coeff[roots[cl[col]]] = static_cast<int>(n[col]);
    if (!found) {
      found = true;
      result = e;
    } else if (result.coeff != e.coeff) {
      die("ambiguous cluster expansion for " + root_print(gamma));
    }
  }
  if (!found) die("no cluster expansion for " + root_print(gamma));
  return result;
}

std::string root_print(const Root& r) {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    int c = r[i];
    if (c == 0) continue;
    std::string t = (std::abs(c) != 1 ? std::to_string(std::abs(c)) : "") + "a" + std::to_string(i);
    if (out.empty())
      out = (c < 0 ? "-" : "") + t;
    else
      out += (c < 0 ? "-" : "+") + t;
  }
  return out.empty() ? "0" : out;
}

Root root_parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '*') s.push_back(c);
  Root r{};
  if (!s.empty() && s[0] == '[') {
    size_t pos = 1;
    for (int i = 0; i < 6; ++i) {
      size_t end = s.find_first_of(",]", pos);
      if (end == std::string::npos) die("bad root vector '" + text + "'");
      r[i] = std::stoi(s.substr(pos, end - pos));
      pos = end + 1;
    }
    return r;
  }
  if (s == "0") return r;
  size_t pos = 0;
  int sign = 1;
  while (pos < s.size()) {
    if (s[pos] == '+') {
      sign = 1;
      ++pos;
      continue;
    }
    if (s[pos] == '-') {
      sign = -1;
      ++pos;
      continue;
    }
    int coef = 1;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        coef = coef * 10 + (s[pos++] - '0');
    }
    if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'A')) die("bad root term in '" + text + "'");
    ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      die("bad root index in '" + text + "'");
    int idx = s[pos++] - '0';
    if (idx > 5) die("root index out of range in '" + text + "'");
    r[idx] += sign * coef;
    sign = 1;
  }
  return r;
}

}  // namespace qc
