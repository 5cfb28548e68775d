#include "gelfand/engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gelfand/error.hpp"
#include "gelfand/parallel.hpp"

namespace gelfand {

namespace {

constexpr double kTol = 1e-9;
constexpr std::size_t kFullConstancyLimit = 5000;
constexpr int kConstancySamples = 100;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// Histogram of the classes of x^-1 k over k ∈ K.
std::vector<std::int64_t> class_histogram(const GroupTable& g, const Subgroup& k, ElementId x) {
  std::vector<std::int64_t> hist(g.class_count(), 0);
  const ElementId xinv = g.inverse(x);
  for (auto kk : k.members()) ++hist[static_cast<std::size_t>(g.class_of(g.mul(xinv, kk)))];
  return hist;
}

std::vector<Complex> zonal_row_at(const PairData& pair, ElementId x) {
  auto hist = class_histogram(*pair.group, pair.K, x);
  std::vector<Complex> row;
  const double kn = static_cast<double>(pair.K.order());
  for (auto i : pair.constituents) {
    Complex s = 0;
    for (std::size_t c = 0; c < hist.size(); ++c)
      if (hist[c]) s += static_cast<double>(hist[c]) * pair.table->approx[i][c];
    row.push_back(s / kn);
  }
  return row;
}

// Calls f(tuple) for every tuple in [0, m)^r, last index fastest.
template <class F>
void for_each_tuple(std::size_t m, int r, F&& f) {
  std::vector<int> t(static_cast<std::size_t>(r), 0);
  if (m == 0) return;
  for (;;) {
    f(std::span<const int>(t));
    int pos = r - 1;
    while (pos >= 0 && ++t[static_cast<std::size_t>(pos)] == static_cast<int>(m)) {
      t[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
  }
}

CheckResult result(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok, std::move(detail)};
}

}  // namespace

std::vector<std::int64_t> induced_multiplicities(const CharTable& table, const Subgroup& k) {
  const GroupTable& g = *table.group;
  std::vector<std::int64_t> hist(g.class_count(), 0);
  for (auto x : k.members()) ++hist[static_cast<std::size_t>(g.class_of(x))];
  std::vector<std::int64_t> m;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Complex s = 0;
    for (std::size_t c = 0; c < hist.size(); ++c)
      if (hist[c]) s += static_cast<double>(hist[c]) * table.approx[i][c];
    auto v = checked_integer(s / static_cast<double>(k.order()), "induced multiplicity");
    if (v < 0) throw InternalError("negative induced multiplicity for irreducible " + std::to_string(i));
    m.push_back(v);
  }
  return m;
}

GelfandReport is_gelfand(const CharTable& table, const Subgroup& k, const oracle::DcTensor& tensor) {
  GelfandReport rep;
  rep.multiplicities = induced_multiplicities(table, k);
  rep.multiplicity_free =
      std::all_of(rep.multiplicities.begin(), rep.multiplicities.end(), [](auto m) { return m <= 1; });
  rep.commutative = oracle::algebra_commutes(tensor);
  if (rep.multiplicity_free != rep.commutative)
    throw InternalError(std::string("Gelfand criteria disagree: multiplicity-free = ") +
                        (rep.multiplicity_free ? "true" : "false") + ", commutative = " +
                        (rep.commutative ? "true" : "false"));
  rep.gelfand = rep.multiplicity_free && rep.commutative;
  return rep;
}

GelfandReport is_gelfand(const CharTable& table, const Subgroup& k) {
  return is_gelfand(table, k, oracle::dc_structure_tensor(*table.group, double_cosets(k, k)));
}

PairData build_pair(GroupPtr g, Subgroup k, CharTablePtr table) {
  if (k.parent() != g) throw Error("build_pair: subgroup does not belong to the group");
  PairData p;
  p.group = std::move(g);
  p.K = std::move(k);
  p.cosets = double_cosets(p.K, p.K);
  p.table = table ? std::move(table) : character_table(p.group);
  if (p.table->group != p.group) throw Error("build_pair: character table of another group");
  p.tensor = oracle::dc_structure_tensor(*p.group, p.cosets);
  p.gelfand = is_gelfand(*p.table, p.K, p.tensor);
  for (std::size_t i = 0; i < p.table->size(); ++i)
    if (p.gelfand.multiplicities[i] > 0) {
      p.constituents.push_back(i);
      p.degrees.push_back(p.table->degrees[i]);
    }
  if (p.gelfand.gelfand) {
    if (p.constituents.size() != p.cosets.count())
      throw InternalError("constituent count " + std::to_string(p.constituents.size()) +
                          " differs from double coset count " + std::to_string(p.cosets.count()));
    p.zonal = zonal_table(p);
  }
  return p;
}

std::vector<std::vector<Complex>> zonal_table(const PairData& pair) {
  if (!pair.gelfand.gelfand) throw Error("zonal_table: not a Gelfand pair");
  const GroupTable& g = *pair.group;
  const std::size_t m = pair.cosets.count();
  const std::size_t nc = pair.constituents.size();

  std::vector<std::vector<Complex>> at_rep(m);
  parallel_for(m, [&](std::size_t l) { at_rep[l] = zonal_row_at(pair, pair.cosets.reps[l]); });

  std::vector<ElementId> probe;
  if (g.order() <= kFullConstancyLimit) {
    for (std::size_t x = 0; x < g.order(); ++x) probe.push_back(static_cast<ElementId>(x));
  } else {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
    for (int s = 0; s < kConstancySamples; ++s) probe.push_back(pick(rng));
  }
  std::vector<char> bad(probe.size(), 0);
  parallel_for(probe.size(), [&](std::size_t s) {
    auto row = zonal_row_at(pair, probe[s]);
    const auto& ref = at_rep[static_cast<std::size_t>(pair.cosets.dc_of[static_cast<std::size_t>(probe[s])])];
    for (std::size_t t = 0; t < nc; ++t)
      if (std::abs(row[t] - ref[t]) > kTol) bad[s] = 1;
  });
  for (std::size_t s = 0; s < probe.size(); ++s)
    if (bad[s])
      throw Error("zonal function not constant on the double coset of " +
                  g.element(probe[s]).to_cycle_string());

  std::vector<std::vector<Complex>> z(nc, std::vector<Complex>(m));
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t t = 0; t < nc; ++t) z[t][l] = at_rep[l][t];
  return z;
}

Complex zonal_by_average(const PairData& pair, std::size_t theta, ElementId x) {
  return zonal_row_at(pair, x)[theta];
}

Complex structure_coeff_raw(const PairData& pair, int l, int d, int r) {
  const auto& sz = pair.cosets.sizes;
  Complex s = 0;
  for (std::size_t t = 0; t < pair.constituents.size(); ++t) {
    const auto& w = pair.zonal[t];
    s += static_cast<double>(pair.degrees[t]) * w[static_cast<std::size_t>(l)] *
         w[static_cast<std::size_t>(d)] * std::conj(w[static_cast<std::size_t>(r)]);
  }
  return s * static_cast<double>(sz[static_cast<std::size_t>(l)]) *
         static_cast<double>(sz[static_cast<std::size_t>(d)]) / static_cast<double>(pair.group->order());
}

std::int64_t structure_coeff(const PairData& pair, int l, int d, int r) {
  if (pair.zonal.empty()) throw Error("structure_coeff: not a Gelfand pair");
  auto v = checked_integer(structure_coeff_raw(pair, l, d, r), "structure coefficient");
  if (v < 0) throw IntegralityError("structure coefficient is negative", static_cast<double>(v), 0);
  return v;
}

std::int64_t structure_coeff_multi(const PairData& pair, std::span<const int> lambdas, int r) {
  if (lambdas.size() < 2) throw Error("structure_coeff_multi: need at least two factors");
  if (pair.zonal.empty()) throw Error("structure_coeff_multi: not a Gelfand pair");
  const auto& sz = pair.cosets.sizes;
  Complex s = 0;
  for (std::size_t t = 0; t < pair.constituents.size(); ++t) {
    Complex term = static_cast<double>(pair.degrees[t]) * std::conj(pair.zonal[t][static_cast<std::size_t>(r)]);
    for (int l : lambdas) term *= pair.zonal[t][static_cast<std::size_t>(l)];
    s += term;
  }
  // Π|DC_λ| / |G| can be large; divide once at the end.
  double scale = 1.0 / static_cast<double>(pair.group->order());
  for (int l : lambdas) scale *= static_cast<double>(sz[static_cast<std::size_t>(l)]);
  auto v = checked_integer(s * scale, "multi-product coefficient");
  if (v < 0) throw IntegralityError("multi-product coefficient is negative", static_cast<double>(v), 0);
  if (lambdas.size() == 2) {
    auto two = structure_coeff(pair, lambdas[0], lambdas[1], r);
    if (two != v) throw InternalError("r = 2 multi-product differs from structure_coeff");
  }
  return v;
}

CoeffTable coeff_table_formula(const PairData& pair, int r) {
  if (r < 2) throw Error("coefficient tables need r >= 2");
  CoeffTable t;
  t.method = CoeffTable::Method::formula;
  const std::size_t m = pair.cosets.count();
  for_each_tuple(m, r, [&](std::span<const int> lhs) {
    for (std::size_t rho = 0; rho < m; ++rho) {
      auto v = r == 2 ? structure_coeff(pair, lhs[0], lhs[1], static_cast<int>(rho))
                      : structure_coeff_multi(pair, lhs, static_cast<int>(rho));
      t.entries.push_back({std::vector<int>(lhs.begin(), lhs.end()), static_cast<int>(rho), v});
    }
  });
  return t;
}

CoeffTable coeff_table_oracle(const PairData& pair, int r) {
  if (r < 2) throw Error("coefficient tables need r >= 2");
  CoeffTable t;
  t.method = CoeffTable::Method::oracle;
  const std::size_t m = pair.cosets.count();
  for_each_tuple(m, r, [&](std::span<const int> lhs) {
    std::vector<std::int64_t> col;
    if (r == 2) {
      for (std::size_t rho = 0; rho < m; ++rho)
        col.push_back(pair.tensor(static_cast<std::size_t>(lhs[0]), static_cast<std::size_t>(lhs[1]), rho));
    } else {
      col = oracle::multi_product_oracle(*pair.group, pair.cosets, lhs);
    }
    for (std::size_t rho = 0; rho < m; ++rho)
      t.entries.push_back({std::vector<int>(lhs.begin(), lhs.end()), static_cast<int>(rho), col[rho]});
  });
  return t;
}

std::vector<std::vector<Complex>> idempotents(const PairData& pair) {
  const double order = static_cast<double>(pair.group->order());
  std::vector<std::vector<Complex>> e;
  for (std::size_t t = 0; t < pair.constituents.size(); ++t) {
    std::vector<Complex> row;
    for (auto w : pair.zonal[t]) row.push_back(static_cast<double>(pair.degrees[t]) / order * std::conj(w));
    e.push_back(std::move(row));
  }
  return e;
}

std::vector<Complex> dc_algebra_product(const PairData& pair, std::span<const Complex> u,
                                        std::span<const Complex> v) {
  const std::size_t m = pair.cosets.count();
  std::vector<Complex> w(m, 0);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t d = 0; d < m; ++d) {
      Complex uv = u[l] * v[d];
      if (uv == Complex(0)) continue;
      for (std::size_t r = 0; r < m; ++r)
        if (auto k = pair.tensor(l, d, r)) w[r] += uv * static_cast<double>(k);
    }
  return w;
}

CheckResult check_identity_value(const PairData& pair) {
  double worst = 0;
  for (const auto& row : pair.zonal) worst = std::max(worst, std::abs(row[0] - 1.0));
  return result("zonal value at identity", worst < kTol, "max |ω(1) - 1| = " + fmt(worst));
}

CheckResult check_functional_equation(const PairData& pair, int samples, std::uint64_t seed) {
  const GroupTable& g = *pair.group;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  double worst = 0;
  const double kn = static_cast<double>(pair.K.order());
  for (int s = 0; s < samples; ++s) {
    ElementId x = pick(rng), y = pick(rng);
    for (std::size_t t = 0; t < pair.constituents.size(); ++t) {
      Complex avg = 0;
      for (auto k : pair.K.members()) avg += pair.omega(t, g.mul(g.mul(x, k), y));
      worst = std::max(worst, std::abs(pair.omega(t, x) * pair.omega(t, y) - avg / kn));
    }
  }
  return result("functional equation", worst < kTol,
                std::to_string(samples) + " sampled pairs, max error " + fmt(worst));
}

CheckResult check_orthogonality(const PairData& pair) {
  const std::size_t nc = pair.constituents.size();
  const double order = static_cast<double>(pair.group->order());
  double worst = 0;
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b) {
      Complex s = 0;
      for (std::size_t l = 0; l < pair.cosets.count(); ++l)
        s += static_cast<double>(pair.cosets.sizes[l]) * pair.zonal[a][l] * std::conj(pair.zonal[b][l]);
      s /= order;
      double want = a == b ? 1.0 / static_cast<double>(pair.degrees[a]) : 0.0;
      worst = std::max(worst, std::abs(s - want));
    }
  return result("zonal orthogonality", worst < kTol, "max error " + fmt(worst));
}

CheckResult check_convolution_property(const PairData& pair, std::size_t limit) {
  const GroupTable& g = *pair.group;
  if (g.order() > limit)
    return result("zonal convolution", true, "skipped, |G| = " + std::to_string(g.order()));
  const std::size_t nc = pair.constituents.size();
  std::vector<std::vector<Complex>> f(nc, std::vector<Complex>(g.order()));
  for (std::size_t t = 0; t < nc; ++t)
    for (std::size_t x = 0; x < g.order(); ++x) f[t][x] = pair.omega(t, static_cast<ElementId>(x));

  std::vector<double> worst(nc * nc, 0);
  parallel_for(nc * nc, [&](std::size_t ab) {
    const std::size_t a = ab / nc, b = ab % nc;
    auto conv = oracle::convolve<Complex>(g, f[a], f[b]);
    const double factor = a == b ? static_cast<double>(g.order()) / static_cast<double>(pair.degrees[a]) : 0.0;
    double w = 0;
    for (std::size_t x = 0; x < g.order(); ++x) w = std::max(w, std::abs(conv[x] - factor * f[a][x]));
    worst[ab] = w;
  });
  double mx = *std::max_element(worst.begin(), worst.end());
  return result("zonal convolution", mx < kTol, "max error " + fmt(mx));
}

CheckResult check_morphism(const PairData& pair) {
  const std::size_t m = pair.cosets.count();
  const auto& sz = pair.cosets.sizes;
  double worst = 0;
  for (std::size_t t = 0; t < pair.constituents.size(); ++t) {
    const auto& w = pair.zonal[t];
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t d = 0; d < m; ++d) {
        Complex lhs = 0;
        for (std::size_t r = 0; r < m; ++r)
          lhs += static_cast<double>(pair.tensor(l, d, r)) * static_cast<double>(sz[r]) * w[r];
        Complex rhs = static_cast<double>(sz[l]) * w[l] * static_cast<double>(sz[d]) * w[d];
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
  }
  return result("zonal morphism", worst < kTol, "max relative error " + fmt(worst));
}

CheckResult check_idempotents(const PairData& pair) {
  const auto e = idempotents(pair);
  const std::size_t nc = e.size(), m = pair.cosets.count();
  double worst = 0;
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b) {
      auto p = dc_algebra_product(pair, e[a], e[b]);
      for (std::size_t r = 0; r < m; ++r) worst = std::max(worst, std::abs(p[r] - (a == b ? e[a][r] : 0.0)));
    }
  // DC_λ = |DC_λ| Σ_ψ ω^ψ_λ E_ψ
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t r = 0; r < m; ++r) {
      Complex s = 0;
      for (std::size_t t = 0; t < nc; ++t) s += pair.zonal[t][l] * e[t][r];
      s *= static_cast<double>(pair.cosets.sizes[l]);
      worst = std::max(worst, std::abs(s - (l == r ? 1.0 : 0.0)));
    }
  return result("idempotents", worst < kTol, std::to_string(nc) + " idempotents, max error " + fmt(worst));
}

CheckResult check_structure_vs_oracle(const PairData& pair) {
  const int m = static_cast<int>(pair.cosets.count());
  int mismatches = 0;
  std::string first;
  for (int l = 0; l < m; ++l)
    for (int d = 0; d < m; ++d)
      for (int r = 0; r < m; ++r) {
        std::int64_t want = pair.tensor(static_cast<std::size_t>(l), static_cast<std::size_t>(d),
                                        static_cast<std::size_t>(r));
        try {
          if (structure_coeff(pair, l, d, r) == want) continue;
        } catch (const IntegralityError& e) {
          if (first.empty()) first = e.what();
        }
        if (first.empty())
          first = "first at (" + std::to_string(l) + "," + std::to_string(d) + "," + std::to_string(r) + ")";
        ++mismatches;
      }
  return result("structure coefficients vs oracle", mismatches == 0,
                std::to_string(m * m * m) + " triples, " + std::to_string(mismatches) + " mismatches" +
                    (first.empty() ? "" : "; " + first));
}

CheckResult check_multi_vs_oracle(const PairData& pair, int r) {
  auto f = coeff_table_formula(pair, r);
  auto o = coeff_table_oracle(pair, r);
  int mismatches = 0;
  for (std::size_t i = 0; i < f.entries.size(); ++i)
    if (f.entries[i].value != o.entries[i].value) ++mismatches;
  return result("r = " + std::to_string(r) + " products vs oracle", mismatches == 0,
                std::to_string(f.entries.size()) + " entries, " + std::to_string(mismatches) + " mismatches");
}

CheckResult check_gelfand_concordance(const PairData& pair) {
  const auto& g = pair.gelfand;
  return result("Gelfand criteria concordance", g.multiplicity_free == g.commutative,
                std::string("multiplicity-free ") + (g.multiplicity_free ? "yes" : "no") + ", commutative " +
                    (g.commutative ? "yes" : "no"));
}

std::vector<CheckResult> verify_pair(const PairData& pair, std::size_t multi_limit) {
  std::vector<CheckResult> out;
  std::int64_t total = 0;
  for (auto s : pair.cosets.sizes) total += s;
  out.push_back(result("double coset sizes", total == static_cast<std::int64_t>(pair.group->order()),
                       std::to_string(pair.cosets.count()) + " cosets covering " + std::to_string(total) +
                           " elements"));
  out.push_back(check_gelfand_concordance(pair));
  if (!pair.gelfand.gelfand) return out;
  out.push_back(result("constituent count", pair.constituents.size() == pair.cosets.count(),
                       std::to_string(pair.constituents.size()) + " constituents"));
  out.push_back(check_identity_value(pair));
  out.push_back(check_functional_equation(pair));
  out.push_back(check_orthogonality(pair));
  out.push_back(check_convolution_property(pair));
  out.push_back(check_morphism(pair));
  out.push_back(check_idempotents(pair));
  out.push_back(check_structure_vs_oracle(pair));
  if (pair.group->order() <= multi_limit) out.push_back(check_multi_vs_oracle(pair, 3));
  return out;
}

}  // namespace gelfand
