#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qc/bridge.hpp"
#include "qc/cluster.hpp"
#include "qc/qchar.hpp"
#include "qc/roots.hpp"
#include "qc/verify.hpp"

using namespace qc;

namespace {

void print_seed_text(const Seed& s) {
  for (int i = 0; i < kNumVars; ++i)
    std::printf("%s = %s\n", s.vertex_names[i].c_str(), lp_print(s.vars[i]).c_str());
  std::printf("arrows:\n");
  auto arrow = [&](int u, int v, int n) {
    std::printf("  %s -> %s", s.vertex_names[u].c_str(), s.vertex_names[v].c_str());
    if (n > 1) std::printf(" (x%d)", n);
    std::printf("\n");
  };
  for (int u = 0; u < kNumVars; ++u)
    for (int v = 0; v < kMutable; ++v)
      if (s.m.b[u][v] > 0) arrow(u, v, s.m.b[u][v]);
  for (int f = kMutable; f < kNumVars; ++f)
    for (int u = 0; u < kMutable; ++u)
      if (s.m.b[f][u] < 0) arrow(u, f, -s.m.b[f][u]);
}

nlohmann::json qchar_json(const YPoly& p) {
  std::vector<std::pair<ARec, Int>> terms(p.terms.begin(), p.terms.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) {
                     return arec_total(a.first) < arec_total(b.first);
                   });
  nlohmann::json out_terms = nlohmann::json::array();
  for (const auto& [rec, c] : terms) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& [key, e] : rec) steps.push_back({key.first, key.second, e});
    out_terms.push_back({{"y", ym_print(ym_apply_a_record(p.highest, rec))},
                         {"a", steps},
                         {"mult", c.convert_to<long long>()}});
  }
  return {{"highest", ym_print(p.highest)}, {"terms", out_terms}};
}

void print_factorization(const FactorizationResult& f, bool json) {
  if (json) {
    nlohmann::json expansion = nlohmann::json::array();
    for (const auto& [r, n] : f.expansion)
      expansion.push_back({{"root", root_print(r)}, {"power", n}});
    nlohmann::json out = {
        {"frozen", {f.frozen_powers[0], f.frozen_powers[1], f.frozen_powers[2]}},
        {"expansion", expansion}};
    std::printf("%s\n", out.dump(2).c_str());
    return;
  }
  std::string frozen;
  for (int t = 0; t < 3; ++t) {
    if (f.frozen_powers[t] == 0) continue;
    if (!frozen.empty()) frozen += " * ";
    frozen += "f" + std::to_string(t + 1);
    if (f.frozen_powers[t] > 1) frozen += "^" + std::to_string(f.frozen_powers[t]);
  }
  std::string expansion;
  for (const auto& [r, n] : f.expansion) {
    if (!expansion.empty()) expansion += " * ";
    expansion += "x[" + root_print(r) + "]";
    if (n > 1) expansion += "^" + std::to_string(n);
  }
  std::printf("frozen: %s\n", frozen.empty() ? "1" : frozen.c_str());
  std::printf("expansion: %s\n", expansion.empty() ? "1" : expansion.c_str());
}

int print_reports(const std::vector<VerificationReport>& reps, bool json) {
  if (json) {
    std::printf("%s\n", report_json(reps).c_str());
  } else {
    for (const auto& r : reps) std::printf("%s", report_text(r).c_str());
  }
  for (const auto& r : reps)
    if (r.failed > 0) return 1;
  return 0;
}

int print_report(const VerificationReport& rep, bool json) {
  if (json)
    std::printf("%s\n", report_json(rep).c_str());
  else
    std::printf("%s", report_text(rep).c_str());
  return rep.failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cluster mutation and truncated character toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence to a seed");
  std::string mutate_from = "gamma";
  std::string mutate_sequence;
  bool mutate_json = false;
  mutate->add_option("--from", mutate_from, "starting seed")
      ->check(CLI::IsMember({"gamma", "gamma2"}));
  mutate->add_option("--sequence", mutate_sequence,
                     "comma-separated vertex names, applied left to right");
  mutate->add_flag("--json", mutate_json, "machine output");
  mutate->callback([&] {
    Seed start = mutate_from == "gamma2" ? grid_seed() : initial_seed();
    Seed cur = start;
    if (!mutate_sequence.empty()) {
      std::vector<int> seq = parse_sequence(start, mutate_sequence);
      cur = replay_sequence(start, seq, /*left_to_right=*/true);
    }
    if (mutate_json)
      std::printf("%s\n", seed_to_json(cur).c_str());
    else
      print_seed_text(cur);
  });

  auto* enumerate = app.add_subcommand("enumerate", "walk the whole exchange graph");
  bool enumerate_json = false;
  enumerate->add_flag("--json", enumerate_json, "machine output");
  enumerate->callback([&] {
    const EnumerationResult& e = enumeration();
    if (enumerate_json) {
      nlohmann::json vars = nlohmann::json::array();
      for (const auto& v : e.variables)
        vars.push_back({{"droot", root_print(v.droot)},
                        {"value", lp_print(v.value)},
                        {"witness", v.witness_seq}});
      nlohmann::json out = {{"variables", vars},
                            {"clusters", e.clusters.size()},
                            {"edges", e.edges.size()}};
      std::printf("%s\n", out.dump(2).c_str());
      return;
    }
    std::printf("mutable variables: %zu\nclusters: %zu\nexchange edges: %zu\n",
                e.variables.size(), e.clusters.size(), e.edges.size());
    for (const auto& v : e.variables)
      std::printf("x[%s] = %s\n", root_print(v.droot).c_str(), lp_print(v.value).c_str());
  });

  auto* qchar = app.add_subcommand("qchar", "truncated character of a simple module");
  std::string qchar_hw;
  std::string qchar_method = "fm";
  int qchar_trunc = 4;
  bool qchar_json_flag = false;
  qchar->add_option("--hw", qchar_hw, "highest-weight monomial, e.g. \"Y[1,0]*Y[2,3]\"")
      ->required();
  qchar->add_option("--method", qchar_method, "generation or bounded closure")
      ->check(CLI::IsMember({"fm", "n"}));
  qchar->add_option("--truncate", qchar_trunc, "largest allowed lowering shift");
  qchar->add_flag("--json", qchar_json_flag, "machine output");
  qchar->callback([&] {
    YMono m = ym_parse(qchar_hw);
    YPoly p = qchar_method == "n" ? n_poly(m, qchar_trunc) : fm_char(m, qchar_trunc);
    if (qchar_json_flag)
      std::printf("%s\n", qchar_json(p).dump(2).c_str());
    else
      std::printf("%s\n", yp_print(p).c_str());
  });

  auto* compat = app.add_subcommand("compat", "compatible almost positive roots");
  std::string compat_root;
  bool compat_json = false;
  compat->add_option("--root", compat_root, "root, e.g. \"a1+a2\" or \"-a3\"")->required();
  compat->add_flag("--json", compat_json, "machine output");
  compat->callback([&] {
    Root r = root_parse(compat_root);
    std::vector<Root> set = compatible_set(r);
    if (compat_json) {
      nlohmann::json roots = nlohmann::json::array();
      for (const Root& c : set) roots.push_back(root_print(c));
      nlohmann::json out = {{"root", root_print(r)}, {"compatible", roots}};
      std::printf("%s\n", out.dump(2).c_str());
      return;
    }
    std::printf("C[%s]:", root_print(r).c_str());
    for (const Root& c : set) std::printf(" %s", root_print(c).c_str());
    std::printf("\n");
  });

  auto* expand = app.add_subcommand("expand", "expansion in the unique compatible cone");
  std::string expand_gamma;
  bool expand_json = false;
  expand->add_option("--gamma", expand_gamma, "integer vector, e.g. \"[1,1,0,0,0,0]\"")
      ->required();
  expand->add_flag("--json", expand_json, "machine output");
  expand->callback([&] {
    Root g = root_parse(expand_gamma);
    ClusterExpansion e = cluster_expansion(g);
    if (expand_json) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [r, n] : e.coeff)
        terms.push_back({{"root", root_print(r)}, {"coeff", n}});
      nlohmann::json out = {{"gamma", root_print(g)}, {"expansion", terms}};
      std::printf("%s\n", out.dump(2).c_str());
      return;
    }
    std::string text;
    for (const auto& [r, n] : e.coeff) {
      if (!text.empty()) text += " + ";
      if (n != 1) text += std::to_string(n) + "*";
      text += "x[" + root_print(r) + "]";
    }
    std::printf("%s\n", text.empty() ? "0" : text.c_str());
  });

  auto* factor = app.add_subcommand("factor", "factor a dominant monomial over a cluster");
  std::string factor_mono;
  bool factor_json = false;
  factor->add_option("monomial", factor_mono, "dominant monomial, e.g. \"Y[2,1]*Y[2,3]\"")
      ->required();
  factor->add_flag("--json", factor_json, "machine output");
  factor->callback(
      [&] { print_factorization(factor_dominant_monomial(ym_parse(factor_mono)), factor_json); });

  auto* tsystem = app.add_subcommand("tsystem", "short exact multiplication identities");
  bool tsystem_json = false;
  tsystem->add_flag("--json", tsystem_json, "machine output");
  tsystem->callback([&] { rc = print_report(verify_tsystem(), tsystem_json); });

  auto* verify = app.add_subcommand("verify", "run a recorded verification suite");
  std::string verify_suite;
  bool verify_json = false;
  bool verify_strict = false;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", verify_suite, "suite name or \"all\"")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_flag("--json", verify_json, "machine output");
  verify->add_flag("--strict", verify_strict, "count repaired readings as failures");
  verify->callback([&] {
    bool lenient = !verify_strict;
    if (verify_suite == "all")
      rc = print_reports(verify_all(lenient), verify_json);
    else
      rc = print_report(run_suite(verify_suite, lenient), verify_json);
  });

  auto* bridge = app.add_subcommand("bridge", "correspondence checks and factorization");
  std::string bridge_verify;
  std::string bridge_factor;
  bool bridge_json = false;
  bridge->add_option("--verify", bridge_verify, "suite to run")
      ->check(CLI::IsMember({"exchange", "factorization", "pairs"}));
  bridge->add_option("--factor", bridge_factor, "dominant monomial to factor");
  bridge->add_flag("--json", bridge_json, "machine output");
  bridge->callback([&] {
    if (bridge_verify.empty() == bridge_factor.empty())
      throw std::runtime_error("bridge needs exactly one of --verify and --factor");
    if (!bridge_verify.empty()) {
      rc = print_report(run_suite(bridge_verify, true), bridge_json);
      return;
    }
    print_factorization(factor_dominant_monomial(ym_parse(bridge_factor)), bridge_json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
