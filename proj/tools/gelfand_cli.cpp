#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gelfand/chartab.hpp"
#include "gelfand/engine.hpp"
#include "gelfand/error.hpp"
#include "gelfand/io.hpp"
#include "gelfand/oracle.hpp"
#include "gelfand/parallel.hpp"
#include "gelfand/plancherel.hpp"
#include "gelfand/presets.hpp"

using namespace gelfand;

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kOverflow = 3, kVerify = 4 };

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string format = "json";
  std::string out;
  int threads = 1;
  std::size_t cap = 0;
  std::string group;
  std::string pair;
  std::string method = "formula";
  int r = 2;
  int max_m = 4;
};

void emit(const Options& o, const Rendered& r) {
  const std::string text = o.format == "csv" ? r.csv.str() : r.json.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

GroupPtr need_group(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  return resolve_group(o.group, o.cap);
}

PairInstance need_pair(const Options& o) {
  if (o.pair.empty()) throw UsageError("--pair is required");
  return parse_pair(o.pair, o.cap);
}

PairData gelfand_pair(const PairInstance& inst) {
  auto pair = build_pair(inst.group, inst.K);
  if (!pair.gelfand.gelfand) throw UsageError("'" + inst.spec + "' is not a Gelfand pair");
  return pair;
}

std::vector<CheckResult> verify_group(const GroupPtr& g) {
  std::vector<CheckResult> out;
  const auto a = class_constants(*g);
  const auto t = character_table(g, a);
  std::int64_t sum = 0;
  for (auto d : t->degrees) sum += d * d;
  out.push_back({"sum of squared degrees", sum == static_cast<std::int64_t>(g->order()), std::to_string(sum)});
  out.push_back({"row orthogonality", rows_orthogonal_exact(*t), "exact"});
  out.push_back({"column orthogonality", columns_orthogonal_exact(*t), "exact"});

  const int k = static_cast<int>(g->class_count());
  int bad = 0;
  for (int l = 0; l < k; ++l)
    for (int d = 0; d < k; ++d)
      for (int r = 0; r < k; ++r) {
        try {
          if (frobenius_center_coeff(*t, l, d, r) == a(l, d, r)) continue;
        } catch (const IntegralityError&) {
        }
        ++bad;
      }
  out.push_back({"center coefficients vs oracle", bad == 0,
                 std::to_string(k * k * k) + " triples, " + std::to_string(bad) + " mismatches"});

  int mbad = 0;
  for (int c = 0; c < k; ++c)
    for (int m = 1; m <= 4; ++m) {
      auto direct = moment_direct(*t, c, m);
      auto s = moment_structural(*g, a, c, m);
      bool eq = direct.exact ? *direct.exact == s
                             : std::abs(direct.approx - s.convert_to<double>()) < 1e-9;
      if (!eq) ++mbad;
    }
  out.push_back({"moments direct vs structural", mbad == 0, std::to_string(mbad) + " mismatches, m <= 4"});
  return out;
}

int report(const Options& o, const std::string& subject, const std::vector<CheckResult>& checks) {
  bool all = true;
  for (const auto& c : checks) {
    std::cerr << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
    all = all && c.passed;
  }
  emit(o, render_checks(subject, checks));
  return all ? kOk : kVerify;
}

int run(CLI::App& app, const Options& o) {
  set_thread_count(o.threads);
  const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
  if (!sub) throw UsageError("no subcommand given; see --help");
  const std::string cmd = sub->get_name();

  if (cmd == "classes") {
    emit(o, render_classes(*need_group(o)));
  } else if (cmd == "chartable") {
    emit(o, render_chartable(*character_table(need_group(o))));
  } else if (cmd == "cosets") {
    auto inst = need_pair(o);
    emit(o, render_cosets(inst, double_cosets(inst.K, inst.K)));
  } else if (cmd == "gelfand-check") {
    auto inst = need_pair(o);
    emit(o, render_gelfand(inst, build_pair(inst.group, inst.K)));
  } else if (cmd == "zonal") {
    auto inst = need_pair(o);
    emit(o, render_zonal(inst, gelfand_pair(inst)));
  } else if (cmd == "coeffs") {
    if (o.r < 2) throw UsageError("--r must be at least 2");
    auto inst = need_pair(o);
    auto pair = gelfand_pair(inst);
    std::optional<CoeffTable> f, orc;
    if (o.method == "formula" || o.method == "both") f = coeff_table_formula(pair, o.r);
    if (o.method == "oracle" || o.method == "both") orc = coeff_table_oracle(pair, o.r);
    emit(o, render_coeffs(inst, pair, f ? &*f : nullptr, orc ? &*orc : nullptr));
    if (f && orc)
      for (std::size_t e = 0; e < f->entries.size(); ++e)
        if (f->entries[e].value != orc->entries[e].value) {
          std::cerr << "formula and oracle disagree\n";
          return kVerify;
        }
  } else if (cmd == "moments") {
    auto g = need_group(o);
    auto a = class_constants(*g);
    auto t = character_table(g, a);
    std::vector<MomentRow> rows;
    for (int c = 0; c < static_cast<int>(g->class_count()); ++c)
      for (int m = 1; m <= o.max_m; ++m) {
        MomentRow row{c, m, moment_direct(*t, c, m), moment_structural(*g, a, c, m), false};
        row.equal = row.direct.exact ? *row.direct.exact == row.structural
                                     : std::abs(row.direct.approx - row.structural.convert_to<double>()) < 1e-9;
        rows.push_back(std::move(row));
      }
    emit(o, render_moments(*g, rows));
  } else if (cmd == "verify") {
    if (!o.pair.empty()) {
      auto inst = need_pair(o);
      auto pair = build_pair(inst.group, inst.K);
      auto checks = verify_pair(pair);
      auto extra = verify_preset(inst, pair);
      checks.insert(checks.end(), extra.begin(), extra.end());
      return report(o, inst.spec, checks);
    }
    auto g = need_group(o);
    return report(o, g->name().empty() ? o.group : g->name(), verify_group(g));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, double-coset algebras and zonal spherical functions of finite Gelfand pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--threads", o.threads, "Worker threads for counting kernels")->check(CLI::Range(1, 256));
  app.add_option("--cap", o.cap, "Enumeration cap (default 2000000 or $GELFAND_CAP)");

  auto group_opt = [&](CLI::App* s) {
    s->add_option("--group", o.group, "S<n> or a group spec JSON file");
  };
  auto pair_opt = [&](CLI::App* s) {
    s->add_option("--pair", o.pair, "gxgopp:<group> | s2n-bn:<n> | sn-sn1:<n> | custom:<G.json>,<K.json>");
  };

  group_opt(app.add_subcommand("classes", "Conjugacy classes"));
  group_opt(app.add_subcommand("chartable", "Character table"));
  pair_opt(app.add_subcommand("cosets", "Double cosets K\\G/K"));
  pair_opt(app.add_subcommand("gelfand-check", "Multiplicity-freeness and commutativity"));
  pair_opt(app.add_subcommand("zonal", "Zonal spherical functions"));
  auto* coeffs = app.add_subcommand("coeffs", "Double-coset structure coefficients");
  pair_opt(coeffs);
  coeffs->add_option("--method", o.method, "formula, oracle or both")->check(CLI::IsMember({"formula", "oracle", "both"}));
  coeffs->add_option("--r", o.r, "Number of factors");
  auto* moments = app.add_subcommand("moments", "Plancherel moments of normalized characters");
  group_opt(moments);
  moments->add_option("--max-m", o.max_m, "Highest moment")->check(CLI::Range(1, 64));
  auto* verify = app.add_subcommand("verify", "Run the invariant suite for a pair or a group");
  pair_opt(verify);
  group_opt(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (o.cap == 0) o.cap = default_cap();

  try {
    return run(app, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerify;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
