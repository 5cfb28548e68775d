// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gelfand/chartab.hpp"
#include "gelfand/engine.hpp"
#include "gelfand/error.hpp"
#include "gelfand/oracle.hpp"
#include "gelfand/partition.hpp"
#include "gelfand/plancherel.hpp"
#include "gelfand/presets.hpp"

using namespace gelfand;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& s) {
    if (!ok) return;
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

struct Built {
  PairInstance inst;
  PairData pair;
};

Built build(const std::string& spec) {
  auto inst = parse_pair(spec);
  auto pair = build_pair(inst.group, inst.K);
  return {std::move(inst), std::move(pair)};
}

std::string fails_of(const std::vector<CheckResult>& checks) {
  std::string s;
  for (const auto& c : checks)
    if (!c.passed) s += (s.empty() ? "" : ", ") + c.name + " (" + c.detail + ")";
  return s;
}

// 1
Outcome center_frobenius() {
  Outcome o;
  for (int n : {3, 4, 5}) {
    auto g = symmetric_group(n);
    auto t = character_table(g);
    const int k = static_cast<int>(g->class_count());
    int bad = 0;
    for (int l = 0; l < k; ++l)
      for (int d = 0; d < k; ++d) {
        auto col = oracle::class_product_oracle(*g, l, d);
        for (int r = 0; r < k; ++r) bad += frobenius_center_coeff(*t, l, d, r) != col[static_cast<std::size_t>(r)];
      }
    o.expect(bad == 0, "S" + std::to_string(n) + ": " + std::to_string(bad) + " mismatches");
    o.note("S" + std::to_string(n) + " " + std::to_string(k * k * k) + " triples");
  }
  return o;
}

// 2
Outcome hecke_s2n_bn() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    auto b = build("s2n-bn:" + std::to_string(n));
    const std::string tag = "n=" + std::to_string(n);
    o.expect(b.pair.gelfand.gelfand, tag + " not Gelfand");
    if (!b.pair.gelfand.gelfand) continue;
    auto r = check_structure_vs_oracle(b.pair);
    o.expect(r.passed, tag + " " + r.detail);

    auto labels = coset_labels(b.inst, b.pair.cosets);
    const std::size_t m = b.pair.cosets.count();
    int hook_bad = 0, inverse_bad = 0;
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t d = 0; d < m; ++d)
        for (std::size_t rr = 0; rr < m; ++rr) {
          const auto want = b.pair.tensor(l, d, rr);
          try {
            auto h = hss_coeff(b.inst, b.pair, labels.coset_types[l], labels.coset_types[d], labels.coset_types[rr]);
            hook_bad += h.value != want;
            inverse_bad += std::abs(h.inverse_form - static_cast<double>(want)) > 1e-6;
          } catch (const Error&) {
            ++hook_bad;
          }
        }
    o.expect(hook_bad == 0, tag + " hook form: " + std::to_string(hook_bad) + " mismatches");
    o.note(tag + " " + std::to_string(m * m * m) + " triples, H=hook product agrees, H=dim/|S_2n| off on " +
           std::to_string(inverse_bad));
  }
  return o;
}

// 3
Outcome strahov() {
  Outcome o;
  auto b = build("sn-sn1:4");
  o.expect(b.pair.cosets.count() == 7, std::to_string(b.pair.cosets.count()) + " double cosets");
  o.expect(b.pair.gelfand.gelfand, "not Gelfand");
  if (b.pair.gelfand.gelfand) {
    auto r = check_structure_vs_oracle(b.pair);
    o.expect(r.passed, r.detail);
  }
  auto extra = verify_preset(b.inst, b.pair);
  auto f = fails_of(extra);
  o.expect(f.empty(), f);
  o.note("7 cosets, 343 triples, sizes (n-1)!^2/z_λ");
  return o;
}

// 4
Outcome gxgopp_reduction() {
  Outcome o;
  for (const char* g : {"S3", "S4"}) {
    auto b = build(std::string("gxgopp:") + g);
    auto checks = verify_preset(b.inst, b.pair);
    bool found = false;
    for (const auto& c : checks)
      if (c.name == "k' = |G| c") {
        found = true;
        o.expect(c.passed, std::string(g) + ": " + c.detail);
        o.note(std::string(g) + " " + c.detail);
      }
    o.expect(found, "reduction check missing");
    auto r = check_structure_vs_oracle(b.pair);
    o.expect(r.passed, std::string(g) + " oracle: " + r.detail);
  }
  return o;
}

// 5
Outcome multi_products() {
  Outcome o;
  for (const char* spec : {"s2n-bn:2", "s2n-bn:3"}) {
    auto b = build(spec);
    for (int r : {3, 4}) {
      auto c = check_multi_vs_oracle(b.pair, r);
      o.expect(c.passed, std::string(spec) + " " + c.name + ": " + c.detail);
      o.note(std::string(spec) + " r=" + std::to_string(r) + " " + c.detail);
    }
  }
  return o;
}

// 6
Outcome coset_types() {
  Outcome o;
  std::vector<Permutation::point_type> img{8, 12, 4, 6, 10, 9, 11, 1, 7, 2, 3, 5};
  for (auto& x : img) --x;
  auto t = coset_type(Permutation(img));
  o.expect(t == Partition({3, 2, 1}), "twelve-point example gives " + t.to_string());
  for (int n : {2, 3}) {
    auto g = symmetric_group(2 * n);
    auto k = hyperoctahedral(g);
    auto dc = double_cosets(k, k);
    std::set<Partition> types;
    std::size_t off = 0;
    for (std::size_t c = 0; c < dc.count(); ++c) types.insert(coset_type(g->element(dc.reps[c])));
    for (std::size_t x = 0; x < g->order(); ++x)
      off += coset_type(g->element(static_cast<ElementId>(x))) !=
             coset_type(g->element(dc.reps[static_cast<std::size_t>(dc.dc_of[x])]));
    o.expect(off == 0, "2n=" + std::to_string(2 * n) + ": " + std::to_string(off) + " elements off");
    o.expect(types.size() == partitions_of(n).size() && dc.count() == types.size(),
             "2n=" + std::to_string(2 * n) + ": " + std::to_string(types.size()) + " types");
  }
  o.note("t -> " + t.to_string() + ", constant on cosets for 2n=4,6, counts p(2)=2, p(3)=3");
  return o;
}

// 7
Outcome zonal_identities() {
  Outcome o;
  for (const char* spec : {"s2n-bn:2", "s2n-bn:3", "sn-sn1:4", "gxgopp:S3", "gxgopp:S4"}) {
    auto b = build(spec);
    if (!b.pair.gelfand.gelfand) {
      o.expect(false, std::string(spec) + " not Gelfand");
      continue;
    }
    std::vector<CheckResult> checks{check_identity_value(b.pair), check_functional_equation(b.pair, 50, 2024),
                                    check_orthogonality(b.pair), check_idempotents(b.pair)};
    auto f = fails_of(checks);
    o.expect(f.empty(), std::string(spec) + ": " + f);
  }
  o.note("5 pairs: ω(1)=1, functional equation (50 samples), orthogonality, idempotents, tol 1e-9");
  return o;
}

// 8
Outcome table_health() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    auto g = symmetric_group(n);
    auto t = character_table(g);
    std::int64_t sum = 0;
    for (auto d : t->degrees) sum += d * d;
    const std::string tag = "S" + std::to_string(n);
    o.expect(sum == static_cast<std::int64_t>(g->order()), tag + " Σd² = " + std::to_string(sum));
    o.expect(rows_orthogonal_exact(*t), tag + " rows");
    o.expect(columns_orthogonal_exact(*t), tag + " columns");
    if (n > 5) continue;
    std::vector<Partition> mu;
    for (std::size_t c = 0; c < g->class_count(); ++c) mu.push_back(cycle_type(g->element(g->class_rep(static_cast<int>(c)))));
    std::set<Partition> matched;
    for (std::size_t i = 0; i < t->size(); ++i)
      for (const auto& lam : partitions_of(n)) {
        bool same = true;
        for (std::size_t c = 0; c < mu.size() && same; ++c) same = t->values[i][c].as_integer() == mn_character(lam, mu[c]);
        if (same) matched.insert(lam);
      }
    o.expect(matched.size() == t->size() && t->size() == partitions_of(n).size(), tag + " MN matching");
  }
  o.note("S1..S6 exact orthogonality, S1..S5 match Murnaghan-Nakayama");
  return o;
}

// 9
Outcome moments() {
  Outcome o;
  int rows = 0;
  for (int n : {3, 4, 5}) {
    auto g = symmetric_group(n);
    auto a = class_constants(*g);
    auto t = character_table(g, a);
    for (int c = 0; c < static_cast<int>(g->class_count()); ++c)
      for (int m = 1; m <= 4; ++m) {
        ++rows;
        auto d = moment_direct(*t, c, m);
        auto s = moment_structural(*g, a, c, m);
        const std::string tag = "S" + std::to_string(n) + " class " + std::to_string(c) + " m=" + std::to_string(m);
        o.expect(d.exact.has_value() && *d.exact == s, tag);
        if (m == 1) o.expect(s == (c == 0 ? 1 : 0), tag + " first moment");
      }
  }
  o.note(std::to_string(rows) + " exact rational equalities");
  return o;
}

// 10
Outcome concordance() {
  Outcome o;
  struct Case {
    std::string name;
    std::function<Subgroup(const GroupPtr&)> k;
    GroupPtr g;
  };
  auto s3 = symmetric_group(3), s4 = symmetric_group(4), s6 = symmetric_group(6);
  auto gen = [](std::vector<std::string> cycles) {
    return [cycles](const GroupPtr& g) {
      std::vector<Permutation> ps;
      for (const auto& c : cycles) ps.push_back(parse_cycles(c, g->degree()));
      return make_subgroup(g, ps);
    };
  };
  std::vector<Case> cases{
      {"(S4,B2)", [](const GroupPtr& g) { return hyperoctahedral(g); }, s4},
      {"(S6,B3)", [](const GroupPtr& g) { return hyperoctahedral(g); }, s6},
      {"(S4,S3)", [](const GroupPtr& g) { return stabilizer_of_first(g); }, s4},
      {"(S4,<(1 2 3 4)>)", gen({"(1 2 3 4)"}), s4},
      {"(S4,<(1 2 3)>)", gen({"(1 2 3)"}), s4},
      {"(S4,<(1 2)>)", gen({"(1 2)"}), s4},
      {"(S4,<(1 2)(3 4)>)", gen({"(1 2)(3 4)"}), s4},
      {"(S4,A4)", gen({"(1 2 3)", "(2 3 4)"}), s4},
      {"(S3,1)", gen({}), s3},
  };
  int gelfand = 0, not_gelfand = 0;
  std::string statuses;
  for (const auto& c : cases) {
    try {
      auto t = character_table(c.g);
      auto r = is_gelfand(*t, c.k(c.g));
      o.expect(r.multiplicity_free == r.commutative, c.name + " criteria disagree");
      (r.gelfand ? gelfand : not_gelfand)++;
      statuses += (statuses.empty() ? "" : " ") + c.name + (r.gelfand ? "=G" : "=nonG");
    } catch (const InternalError& e) {
      o.expect(false, c.name + ": " + e.what());
    }
  }
  for (const char* spec : {"sn-sn1:4", "gxgopp:S3"}) {
    try {
      auto b = build(spec);
      o.expect(b.pair.gelfand.multiplicity_free == b.pair.gelfand.commutative, std::string(spec) + " disagree");
      (b.pair.gelfand.gelfand ? gelfand : not_gelfand)++;
    } catch (const InternalError& e) {
      o.expect(false, std::string(spec) + ": " + e.what());
    }
  }
  o.expect(not_gelfand > 0, "no non-Gelfand control");
  o.note(std::to_string(gelfand) + " Gelfand, " + std::to_string(not_gelfand) + " not; " + statuses);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "center coefficients: character formula vs counting", center_frobenius},
      {2, "(S_2n,B_n) coefficients vs oracle, hook-product form", hecke_s2n_bn},
      {3, "(S_n x S_n-1^opp, diag S_n-1) at n=4", strahov},
      {4, "G x G^opp reduction k' = |G| c", gxgopp_reduction},
      {5, "r-fold products vs iterated convolution", multi_products},
      {6, "coset types", coset_types},
      {7, "zonal identities", zonal_identities},
      {8, "character table health", table_health},
      {9, "Plancherel moments", moments},
      {10, "Gelfand criteria concordance", concordance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2d  %s: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
