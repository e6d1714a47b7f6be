#include "qc/bridge.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace qc {

namespace {

[[noreturn]] void die(const std::string& msg) {
  throw std::runtime_error("bridge: " + msg);
}

Root rp(const char* s) { return root_parse(s); }

const std::array<YKey, 9>& alphabet() {
  static const std::array<YKey, 9> keys{{{1, 0}, {1, 2}, {1, 4}, {2, 1}, {2, 3}, {2, 5},
                                         {3, 0}, {3, 2}, {3, 4}}};
  return keys;
}

}  // namespace

Root sigma_root(const Root& r) {
  return Root{r[4], r[3], r[2], r[1], r[0], r[5]};
}

YMono sigma_ymono(const YMono& m) {
  YMono out;
  for (const auto& [key, exp] : m) {
    int node = key.first == 1 ? 3 : key.first == 3 ? 1 : 2;
    out[{node, key.second}] = exp;
  }
  return out;
}

YMono root_to_monomial(const Root& b) {
  static const std::map<Root, YMono> table = [] {
    std::map<Root, YMono> t;
    auto put = [&](const char* root, const char* mono) { t[rp(root)] = ym_parse(mono); };
    put("-a0", "Y[1,0]");
    put("a0+a1+a2+a5", "Y[1,2]");
    put("a3+a4", "Y[1,4]");
    put("-a4", "Y[3,0]");
    put("a2+a3+a4+a5", "Y[3,2]");
    put("a0+a1", "Y[3,4]");
    put("a2+a5", "Y[2,1]");
    put("a0+a1+a2+a3+a4+a5", "Y[2,3]");
    put("-a5", "Y[2,5]");
    put("-a1", "Y[1,4]*Y[2,1]");
    put("-a2", "Y[1,4]*Y[2,1]*Y[3,4]");
    put("-a3", "Y[2,1]*Y[3,4]");
    put("a0", "Y[1,2]*Y[1,4]");
    put("a4", "Y[3,2]*Y[3,4]");
    put("a5", "Y[2,1]*Y[2,3]");
    put("a1", "Y[1,0]*Y[3,4]");
    put("a2", "Y[2,1]*Y[2,5]");
    put("a3", "Y[1,4]*Y[3,0]");
    return t;
  }();
  if (auto it = table.find(b); it != table.end()) return it->second;
  if (root_index(b) < 0) die("not an almost positive root: " + root_print(b));

  const Root theta = rp("a0+a1+a2+a3+a4+a5");
  const Root v1 = rp("a0+a1+a2+a5");
  const Root v2 = rp("a2+a3+a4+a5");
  int a1 = b[1], a2 = b[2], a3 = b[3];
  Root combo{};
  YMono m;
  auto add = [&](const Root& part, int times) {
    for (int i = 0; i < 6; ++i) combo[i] += times * part[i];
  };
  if (a1 == a2 && a2 >= a3) {
    add(theta, a3);
    add(v1, a1 - a3);
    m = ym_mul(ym_var(1, 2, a1 - a3), ym_var(2, 3, a3));
  } else if (a1 <= a2 && a2 == a3) {
    add(theta, a1);
    add(v2, a3 - a1);
    m = ym_mul(ym_var(2, 3, a1), ym_var(3, 2, a3 - a1));
  } else if (a1 == a3 && a3 < a2) {
    int h = a2 / 2;
    add(v1, h);
    add(v2, h);
    add(theta, a1 - h);
    m = ym_mul(ym_mul(ym_var(1, 2, h), ym_var(2, 3, a1 - h)), ym_var(3, 2, h));
  } else {
    die("no case applies to " + root_print(b));
  }
  int b0 = combo[0] - b[0], b4 = combo[4] - b[4], b5 = combo[5] - b[5];
  if (b0 < 0 || b4 < 0 || b5 < 0 || combo[1] != b[1] || combo[2] != b[2] || combo[3] != b[3])
    die("inconsistent decomposition of " + root_print(b));
  m = ym_mul(m, ym_var(1, 0, b0));
  m = ym_mul(m, ym_var(3, 0, b4));
  m = ym_mul(m, ym_var(2, 5, b5));
  if (!ym_is_dominant(m)) die("non-dominant image for " + root_print(b));
  return m;
}

YMono frozen_monomial(int node) {
  int base = node == 2 ? 1 : 0;
  return kr_monomial(node, 3, base);
}

int frozen_node_of_vertex(int vertex) {
  switch (vertex) {
    case 6: return 2;
    case 7: return 1;
    case 8: return 3;
  }
  die("vertex has no frozen module");
}

bool root_uses_n_method(const Root& b) {
  static const std::vector<Root> n_roots = [] {
    std::vector<Root> v;
    for (const char* s : {"a1+a2+a3+a5", "a0+a1+2a2+a3+a4+a5", "a0+2a1+2a2+a3+a4+a5",
                          "a0+2a1+2a2+a3+a5", "a1+a2+a3", "a1+2a2+a3+a4+a5", "a1+2a2+a3+a5",
                          "a0+2a1+3a2+2a3+a4+2a5", "a0+2a1+2a2+2a3+a4+a5",
                          "a0+2a1+3a2+2a3+a4+a5", "a0+a1+2a2+2a3+a4+a5", "a1+2a2+2a3+a4+a5",
                          "a0+a1+2a2+a3+a5"})
      v.push_back(rp(s));
    return v;
  }();
  return std::find(n_roots.begin(), n_roots.end(), b) != n_roots.end();
}

const YPoly& bridge_char(const Root& b) {
  static std::map<Root, YPoly> memo;
  auto it = memo.find(b);
  if (it != memo.end()) return it->second;
  YMono m = root_to_monomial(b);
  YPoly p = root_uses_n_method(b) ? n_poly(m, 4) : fm_char(m, 4);
  return memo.emplace(b, std::move(p)).first->second;
}

const YPoly& bridge_char_frozen(int node) {
  static std::map<int, YPoly> memo;
  auto it = memo.find(node);
  if (it != memo.end()) return it->second;
  return memo.emplace(node, fm_char(frozen_monomial(node), 4)).first->second;
}

namespace {

// Per-cluster linear solver for the residual exponent system: 6 root columns
// over the 9-variable alphabet, a full-rank 6x6 row selection, and its
// determinant for Cramer solves.
struct ClusterSolver {
  std::array<int, 6> roots;       // indices into almost_positive_roots()
  std::array<int, 6> rows;        // pivot rows into the alphabet
  std::array<std::array<long, 6>, 6> sub;
  long det = 0;
};

long det6(std::array<std::array<long, 6>, 6> m) {
  // Fraction-free elimination; entries stay small.
  long sign = 1;
  long prev = 1;
  for (int k = 0; k < 5; ++k) {
    int piv = k;
    while (piv < 6 && m[piv][k] == 0) ++piv;
    if (piv == 6) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < 6; ++i)
      for (int j = k + 1; j < 6; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[5][5];
}

struct BridgeTables {
  std::vector<std::array<int, 9>> columns;  // per almost positive root
  std::vector<ClusterSolver> solvers;
};

const BridgeTables& tables() {
  static const BridgeTables t = [] {
    BridgeTables bt;
    const auto& roots = almost_positive_roots();
    bt.columns.resize(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
      YMono m = root_to_monomial(roots[i]);
      for (int v = 0; v < 9; ++v) {
        auto it = m.find(alphabet()[v]);
        bt.columns[i][v] = it == m.end() ? 0 : it->second;
      }
    }
    for (const auto& cl : clusters()) {
      ClusterSolver s;
      s.roots = cl;
      // Greedy pivot-row selection by rational elimination.
      std::array<std::array<Rat, 6>, 9> m{};
      for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 6; ++c) m[r][c] = bt.columns[cl[c]][r];
      std::array<bool, 9> used{};
      int rank = 0;
      for (int c = 0; c < 6; ++c) {
        int pr = -1;
        for (int r = 0; r < 9; ++r)
          if (!used[r] && m[r][c] != 0) {
            pr = r;
            break;
          }
        if (pr < 0) die("rank-deficient cluster column system");
        used[pr] = true;
        s.rows[rank++] = pr;
        for (int r = 0; r < 9; ++r) {
          if (r == pr || m[r][c] == 0) continue;
          Rat f = m[r][c] / m[pr][c];
          for (int cc = 0; cc < 6; ++cc) m[r][cc] -= f * m[pr][cc];
        }
      }
      std::sort(s.rows.begin(), s.rows.end());
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) s.sub[i][j] = bt.columns[cl[j]][s.rows[i]];
      s.det = det6(s.sub);
      if (s.det == 0) die("singular pivot selection");
      bt.solvers.push_back(s);
    }
    return bt;
  }();
  return t;
}

}  // namespace

FactorizationResult factor_dominant_monomial(const YMono& m) {
  FactorizationResult res;
  std::array<long, 9> exps{};
  for (const auto& [key, exp] : m) {
    if (exp < 0) die("factorization input not dominant");
    bool found = false;
    for (int v = 0; v < 9; ++v)
      if (alphabet()[v] == key) {
        exps[v] = exp;
        found = true;
      }
    if (!found && exp != 0) die("factorization input outside the truncated alphabet");
  }
  for (int node = 1; node <= 3; ++node) {
    int base = 3 * (node - 1);
    long t = std::min({exps[base], exps[base + 1], exps[base + 2]});
    res.frozen_powers[node - 1] = static_cast<int>(t);
    for (int j = 0; j < 3; ++j) exps[base + j] -= t;
  }

  const auto& bt = tables();
  const auto& roots = almost_positive_roots();
  bool found = false;
  for (const ClusterSolver& s : bt.solvers) {
    std::array<long, 6> n{};
    bool ok = true;
    for (int j = 0; j < 6 && ok; ++j) {
      auto cramer = s.sub;
      for (int i = 0; i < 6; ++i) cramer[i][j] = exps[s.rows[i]];
      long d = det6(cramer);
      if (d % s.det != 0) ok = false;
      else {
        n[j] = d / s.det;
        if (n[j] < 0) ok = false;
      }
    }
    if (!ok) continue;
    for (int r = 0; r < 9 && ok; ++r) {
      long acc = 0;
      for (int j = 0; j < 6; ++j) acc += n[j] * bt.columns[s.roots[j]][r];
      if (acc != exps[r]) ok = false;
    }
    if (!ok) continue;
    std::map<Root, int> expansion;
    for (int j = 0; j < 6; ++j)
      if (n[j] > 0) expansion[roots[s.roots[j]]] = static_cast<int>(n[j]);
    if (!found) {
      found = true;
      res.expansion = expansion;
    } else if (res.expansion != expansion) {
      die("ambiguous factorization of " + ym_print(m));
    }
  }
  if (!found) die("no factorization of " + ym_print(m));
  return res;
}

YMono assemble_factorization(const FactorizationResult& f) {
  YMono m;
  for (int node = 1; node <= 3; ++node)
    m = ym_mul(m, ym_pow(frozen_monomial(node), f.frozen_powers[node - 1]));
  for (const auto& [root, n] : f.expansion) m = ym_mul(m, ym_pow(root_to_monomial(root), n));
  return m;
}

bool verify_exchange_edge(const EnumerationResult& e, const ExchangeEdge& edge) {
  auto char_of = [&](int factor) -> const YPoly& {
    if (factor < 0) return bridge_char_frozen(frozen_node_of_vertex(-factor - 1));
    Root r;
    std::copy(e.variables[factor].droot.begin(), e.variables[factor].droot.end(), r.begin());
    return bridge_char(r);
  };
  auto side = [&](const std::vector<std::pair<int, int>>& factors) {
    YRing prod{{YMono{}, Int(1)}};
    for (const auto& [factor, mult] : factors)
      for (int u = 0; u < mult; ++u) prod = yr_mul(prod, yp_collapse(char_of(factor)));
    return prod;
  };
  YRing lhs = yr_mul(yp_collapse(char_of(edge.var_out)), yp_collapse(char_of(edge.var_in)));
  YRing rhs = side(edge.plus_side);
  yr_add(rhs, side(edge.minus_side));
  return lhs == rhs;
}

PairReport check_pair_simplicity(const Root& a, const Root& b) {
  if (compat_degree(a, b) != 0) die("pair is not compatible");
  PairReport rep;
  rep.a = a;
  rep.b = b;
  YPoly prod = yp_mul(bridge_char(a), bridge_char(b));
  // The refinement of the top monomial certifies occurrences on its own; its
  // coefficients seed the sweep alongside the subset expansions.
  YPoly refined = n_poly(prod.highest, 4);

  static const std::vector<std::vector<int>> subsets = {{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 3}};
  // Certified lower bounds on the simple character, swept in step-record
  // order so a witness is final before anything larger is visited.
  std::vector<std::pair<int, ARec>> order;
  for (const auto& [rec, c] : prod.terms) order.push_back({arec_total(rec), rec});
  std::sort(order.begin(), order.end());
  std::map<ARec, std::array<Int, 6>> acc;
  std::map<ARec, Int> certified;
  for (const auto& [deg, rec] : order) {
    Int w = deg == 0 ? Int(1) : yp_coeff(refined, rec);
    if (auto it = acc.find(rec); it != acc.end())
      for (const Int& v : it->second) w = std::max(w, v);
    if (w == 0) continue;
    certified[rec] = w;
    YMono y = yp_term_y(prod, rec);
    for (size_t ji = 0; ji < subsets.size(); ++ji) {
      const auto& J = subsets[ji];
      bool usable = true;
      for (const auto& [key, cnt] : rec)
        if (cnt != 0 && std::find(J.begin(), J.end(), key.first) != J.end()) usable = false;
      for (int node : J)
        if (!ym_is_dominant_at(y, node)) usable = false;
      if (!usable) continue;
      for (const TrackedTerm& t : phi_closure({y, rec}, J, 4)) {
        if (t.m.a == rec) continue;
        if (!prod.terms.count(t.m.a))
          die("certified expansion leaves the product character");
        acc[t.m.a][ji] += w * t.coeff;
      }
    }
  }

  rep.simple = true;
  for (const auto& [tm, mult] : yp_dominant_monomials(prod)) {
    PairMonomialReport mr;
    mr.rec = tm.a;
    mr.mult = mult;
    auto it = certified.find(tm.a);
    mr.certified = it == certified.end() ? Int(0) : it->second;
    if (mr.certified > mult) die("certificate exceeds the product multiplicity");
    if (mr.certified < mult) rep.simple = false;
    rep.monomials.push_back(mr);
  }
  return rep;
}

}  // namespace qc
