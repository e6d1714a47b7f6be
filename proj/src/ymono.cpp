#include "qc/ymono.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <set>

namespace qc {

namespace {

[[noreturn]] void die(const std::string& msg) {
  throw std::runtime_error("ymono: " + msg);
}

void put_exp(YMono& m, YKey k, int e) {
  if (e == 0) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, e);
  } else {
    it->second += e;
    if (it->second == 0) m.erase(it);
  }
}

bool nodes_adjacent(int a, int b) {
  return (a >= 1 && a <= 3 && b >= 1 && b <= 3 && (a - b == 1 || b - a == 1));
}

}  // namespace

const std::vector<int>& node_adjacent(int node) {
  static const std::vector<int> adj[4] = {{}, {2}, {1, 3}, {2}};
  if (node < 1 || node > 3) die("node out of range");
  return adj[node];
}

YMono ym_one() { return {}; }

YMono ym_var(int node, int shift, int exp) {
  YMono m;
  put_exp(m, {node, shift}, exp);
  return m;
}

YMono ym_mul(const YMono& a, const YMono& b) {
  YMono r = a;
  for (const auto& [k, e] : b) put_exp(r, k, e);
  return r;
}

YMono ym_pow(const YMono& a, int n) {
  YMono r;
  for (const auto& [k, e] : a) put_exp(r, k, e * n);
  return r;
}

YMono ym_div(const YMono& a, const YMono& b) {
  YMono r = a;
  for (const auto& [k, e] : b) put_exp(r, k, -e);
  return r;
}

bool ym_is_dominant(const YMono& m) {
  for (const auto& [k, e] : m)
    if (e < 0) return false;
  return true;
}

bool ym_is_dominant_at(const YMono& m, int node) {
  for (const auto& [k, e] : m)
    if (k.first == node && e < 0) return false;
  return true;
}

std::map<int, int> ym_node_part(const YMono& m, int node) {
  std::map<int, int> part;
  for (const auto& [k, e] : m)
    if (k.first == node) part[k.second] = e;
  return part;
}

YMono ym_apply_a_inverse(const YMono& m, int node, int shift) {
  YMono r = m;
  put_exp(r, {node, shift - 1}, -1);
  put_exp(r, {node, shift + 1}, -1);
  for (int j : node_adjacent(node)) put_exp(r, {j, shift}, 1);
  return r;
}

YMono ym_apply_a_record(const YMono& m, const ARec& a) {
  YMono r = m;
  for (const auto& [k, e] : a)
    for (int t = 0; t < e; ++t) r = ym_apply_a_inverse(r, k.first, k.second);
  return r;
}

ARec arec_add(const ARec& a, const ARec& b) {
  ARec r = a;
  for (const auto& [k, e] : b) {
    auto it = r.find(k);
    if (it == r.end())
      r.emplace(k, e);
    else
      it->second += e;
  }
  return r;
}

int arec_total(const ARec& a) {
  int t = 0;
  for (const auto& [k, e] : a) t += e;
  return t;
}

int arec_max_shift(const ARec& a) {
  int m = 0;
  for (const auto& [k, e] : a) m = std::max(m, k.second);
  return m;
}

std::optional<ARec> ym_dominance_witness(const YMono& m, const YMono& mp) {
  YMono q = ym_div(mp, m);
  if (q.empty()) return ARec{};
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [k, e] : q) {
    lo = std::min(lo, k.second);
    hi = std::max(hi, k.second);
  }
  // A step at shift r contributes uncancellably at shifts r-1 and r+1, so any
  // usable step lies strictly inside the quotient's shift window.
  std::vector<YKey> cand;
  for (int node = 1; node <= 3; ++node)
    for (int r = lo + 1; r <= hi - 1; ++r) cand.push_back({node, r});
  if (cand.empty()) return std::nullopt;

  std::set<YKey> keys;
  for (const auto& [k, e] : q) keys.insert(k);
  for (const auto& [node, r] : cand) {
    keys.insert({node, r - 1});
    keys.insert({node, r + 1});
    for (int j : node_adjacent(node)) keys.insert({j, r});
  }

  const size_t n = cand.size();
  std::vector<std::vector<Rat>> rows;
  for (const auto& key : keys) {
    std::vector<Rat> row(n + 1, Rat(0));
    for (size_t c = 0; c < n; ++c) {
      const auto& [node, r] = cand[c];
      int coef = 0;
      if (key.first == node && (key.second == r - 1 || key.second == r + 1)) coef += 1;
      if (key.second == r && nodes_adjacent(key.first, node)) coef -= 1;
      row[c] = coef;
    }
    auto it = q.find(key);
    row[n] = (it == q.end()) ? Rat(0) : Rat(it->second);
    rows.push_back(std::move(row));
  }

  // Exact Gaussian elimination; the A-vectors are linearly independent, so the
  // system has at most one solution.
  size_t rank_row = 0;
  std::vector<int> pivot_of_col(n, -1);
  for (size_t col = 0; col < n && rank_row < rows.size(); ++col) {
    size_t pr = rank_row;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[rank_row]);
    Rat piv = rows[rank_row][col];
    for (size_t j = col; j <= n; ++j) rows[rank_row][j] /= piv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank_row || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (size_t j = col; j <= n; ++j) rows[i][j] -= f * rows[rank_row][j];
    }
    pivot_of_col[col] = static_cast<int>(rank_row);
    ++rank_row;
  }
  for (size_t i = rank_row; i < rows.size(); ++i)
    if (rows[i][n] != 0) return std::nullopt;

  std::vector<Int> v(n, 0);
  for (size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] < 0) continue;  // defensively treat as zero
    const Rat& val = rows[static_cast<size_t>(pivot_of_col[col])][n];
    if (denominator(val) != 1) return std::nullopt;
    v[col] = numerator(val);
    if (v[col] < 0) return std::nullopt;
  }

  ARec witness;
  for (size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    if (v[c] > INT_MAX) return std::nullopt;
    witness.emplace(cand[c], static_cast<int>(v[c]));
  }
  // Confirm by direct expansion (guards the free-column case).
  YMono check;
  for (const auto& [k, e] : witness) {
    put_exp(check, {k.first, k.second - 1}, e);
    put_exp(check, {k.first, k.second + 1}, e);
    for (int j : node_adjacent(k.first)) put_exp(check, {j, k.second}, -e);
  }
  if (check != q) return std::nullopt;
  return witness;
}

bool ym_dominance_leq(const YMono& m, const YMono& mp) {
  return ym_dominance_witness(m, mp).has_value();
}

YRing yr_mul(const YRing& a, const YRing& b) {
  YRing r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      YMono m = ym_mul(ma, mb);
      r[m] += ca * cb;
      if (r[m] == 0) r.erase(m);
    }
  return r;
}

void yr_add(YRing& a, const YRing& b, const Int& scale) {
  for (const auto& [m, c] : b) {
    a[m] += c * scale;
    if (a[m] == 0) a.erase(m);
  }
}

YPoly yp_one(const YMono& highest) {
  YPoly p;
  p.highest = highest;
  p.terms.emplace(ARec{}, Int(1));
  return p;
}

YPoly yp_mul(const YPoly& a, const YPoly& b) {
  YPoly r;
  r.highest = ym_mul(a.highest, b.highest);
  for (const auto& [ra, ca] : a.terms)
    for (const auto& [rb, cb] : b.terms) {
      ARec sum = arec_add(ra, rb);
      r.terms[sum] += ca * cb;
    }
  return r;
}

YPoly yp_pow(const YPoly& a, int n) {
  if (n < 0) die("negative character power");
  YPoly r = yp_one(ym_one());
  for (int i = 0; i < n; ++i) r = yp_mul(r, a);
  return r;
}

Int yp_coeff(const YPoly& p, const ARec& a) {
  auto it = p.terms.find(a);
  return it == p.terms.end() ? Int(0) : it->second;
}

YMono yp_term_y(const YPoly& p, const ARec& a) {
  return ym_apply_a_record(p.highest, a);
}

std::map<YMono, Int> yp_collapse(const YPoly& p) {
  std::map<YMono, Int> r;
  for (const auto& [a, c] : p.terms) {
    YMono y = ym_apply_a_record(p.highest, a);
    r[y] += c;
    if (r[y] == 0) r.erase(y);
  }
  return r;
}

bool yp_ring_equal(const YPoly& a, const YPoly& b) {
  return yp_collapse(a) == yp_collapse(b);
}

std::vector<std::pair<TrackedYMono, Int>> yp_dominant_monomials(const YPoly& p) {
  std::vector<std::pair<TrackedYMono, Int>> out;
  for (const auto& [a, c] : p.terms) {
    YMono y = ym_apply_a_record(p.highest, a);
    if (ym_is_dominant(y)) out.push_back({TrackedYMono{std::move(y), a}, c});
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    int tl = arec_total(l.first.a), tr = arec_total(r.first.a);
    if (tl != tr) return tl < tr;
    return l.first.a < r.first.a;
  });
  return out;
}

std::string ym_print(const YMono& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : m) {
    if (!out.empty()) out += "*";
    out += "Y[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string arec_print(const ARec& a) {
  if (a.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : a) {
    if (!out.empty()) out += "*";
    out += "A[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]^-" +
           std::to_string(e);
  }
  return out;
}

std::string yp_print(const YPoly& p) {
  std::vector<std::pair<ARec, Int>> ts(p.terms.begin(), p.terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
    int tl = arec_total(l.first), tr = arec_total(r.first);
    if (tl != tr) return tl < tr;
    return l.first < r.first;
  });
  if (ts.size() == 1 && ts[0].first.empty() && ts[0].second == 1)
    return ym_print(p.highest);
  std::string inner;
  for (const auto& [a, c] : ts) {
    std::string t;
    if (c != 1)
      t = c.str() + (a.empty() ? "" : "*");
    if (!a.empty())
      t += arec_print(a);
    else if (c == 1)
      t = "1";
    if (!inner.empty()) inner += " + ";
    inner += t;
  }
  return ym_print(p.highest) + "*(" + inner + ")";
}

namespace {

struct YaParser {
  std::string s;
  size_t pos = 0;
  const std::map<std::string, TrackedYMono>& bindings;

  YaParser(const std::string& raw, const std::map<std::string, TrackedYMono>& b)
      : bindings(b) {
    for (char ch : raw)
      if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_') s.push_back(ch);
  }

  [[noreturn]] void fail(const std::string& why) {
    die("parse error at '" + s.substr(pos, 16) + "': " + why);
  }

  char peek(size_t ahead = 0) const {
    return pos + ahead < s.size() ? s[pos + ahead] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eof() const { return pos >= s.size(); }

  long long integer() {
    bool neg = eat('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  using TExpr = std::vector<TrackedTerm>;

  static TExpr mul(const TExpr& a, const TExpr& b) {
    TExpr r;
    for (const auto& ta : a)
      for (const auto& tb : b)
        r.push_back({TrackedYMono{ym_mul(ta.m.y, tb.m.y), arec_add(ta.m.a, tb.m.a)},
                     ta.coeff * tb.coeff});
    return normalize(r);
  }

  static TExpr normalize(const TExpr& in) {
    std::map<TrackedYMono, Int> acc;
    for (const auto& t : in) {
      acc[t.m] += t.coeff;
      if (acc[t.m] == 0) acc.erase(t.m);
    }
    TExpr r;
    for (const auto& [m, c] : acc) r.push_back({m, c});
    return r;
  }

  static TExpr scalar(const Int& c) { return {{TrackedYMono{}, c}}; }

  bool is_variable_here() const {
    return (peek() == 'Y' || peek() == 'A') && peek(1) == '[';
  }

  bool starts_factor() const {
    char c = peek();
    if (c == '(') return true;
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return std::isalpha(static_cast<unsigned char>(c));
  }

  TExpr primary() {
    if (eat('(')) {
      TExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return scalar(integer());
    if (is_variable_here()) {
      char kind = s[pos];
      pos += 2;  // letter and '['
      long long node = integer();
      if (!eat(',')) fail("expected ','");
      long long shift = integer();
      if (!eat(']')) fail("expected ']'");
      long long e = 1;
      if (eat('^')) e = integer();
      if (kind == 'Y') {
        return {{TrackedYMono{ym_var(static_cast<int>(node), static_cast<int>(shift),
                                     static_cast<int>(e)),
                              ARec{}},
                 Int(1)}};
      }
      if (e >= 0) fail("A-factors must carry negative exponents");
      int steps = static_cast<int>(-e);
      YMono y = ym_one();
      for (int t = 0; t < steps; ++t)
        y = ym_apply_a_inverse(y, static_cast<int>(node), static_cast<int>(shift));
      ARec a;
      a.emplace(YKey{static_cast<int>(node), static_cast<int>(shift)}, steps);
      return {{TrackedYMono{std::move(y), std::move(a)}, Int(1)}};
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek()))) name.push_back(s[pos++]);
      auto it = bindings.find(name);
      if (it == bindings.end()) fail("unknown name '" + name + "'");
      return {{it->second, Int(1)}};
    }
    fail("expected factor");
  }

  TExpr factor() {
    // '^' binds to Y/A atoms inside primary; a parenthesized power is not used
    // by any stored text, so reject it explicitly for clarity.
    TExpr p = primary();
    if (peek() == '^') fail("unexpected '^'");
    return p;
  }

  TExpr term() {
    TExpr r = factor();
    for (;;) {
      if (eat('*'))
        r = mul(r, factor());
      else if (starts_factor())
        r = mul(r, factor());
      else
        return r;
    }
  }

  TExpr expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    TExpr r = term();
    if (neg) r = mul(scalar(-1), r);
    for (;;) {
      if (eat('+')) {
        r = normalize([&] {
          TExpr t = term(), sum = r;
          sum.insert(sum.end(), t.begin(), t.end());
          return sum;
        }());
      } else if (eat('-')) {
        TExpr t = mul(scalar(-1), term());
        r.insert(r.end(), t.begin(), t.end());
        r = normalize(r);
      } else {
        return r;
      }
    }
  }
};

}  // namespace

std::vector<TrackedTerm> ya_parse(const std::string& text,
                                  const std::map<std::string, TrackedYMono>& bindings) {
  YaParser p(text, bindings);
  auto r = p.expr();
  if (!p.eof()) p.fail("trailing input");
  return r;
}

YPoly yp_parse(const std::string& text) {
  auto terms = ya_parse(text);
  YPoly p;
  bool have_top = false;
  for (const auto& t : terms) {
    if (t.coeff <= 0) die("character term with non-positive multiplicity");
    if (t.m.a.empty()) {
      if (have_top) die("character with two top terms");
      have_top = true;
      p.highest = t.m.y;
    }
  }
  if (!have_top) die("character without a top term");
  for (const auto& t : terms) {
    if (ym_apply_a_record(p.highest, t.m.a) != t.m.y)
      die("character term inconsistent with its a-record");
    p.terms[t.m.a] += t.coeff;
  }
  return p;
}

}  // namespace qc
