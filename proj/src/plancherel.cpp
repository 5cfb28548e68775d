#include "gelfand/plancherel.hpp"

#include <cmath>

#include "gelfand/error.hpp"

namespace gelfand {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::vector<Rational> plancherel(const CharTable& table) {
  std::vector<Rational> p;
  const auto order = static_cast<std::int64_t>(table.group->order());
  for (auto d : table.degrees) p.emplace_back(Rational(d * d) / order);
  Rational total = 0;
  for (const auto& q : p) total += q;
  if (total != 1) throw InternalError("Plancherel measure sums to " + to_string(total));
  return p;
}

namespace {

MomentValue weighted_sum(const CharTable& table, int l, int d, int m_l, int m_d) {
  // Σ_χ (dim²/|G|) (χ_l/dim)^m_l (χ_d/dim)^m_d
  MomentValue out;
  const auto order = static_cast<std::int64_t>(table.group->order());
  bool exact = true;
  Rational q = 0;
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double dim = static_cast<double>(table.degrees[i]);
    const auto& vl = table.values[i][static_cast<std::size_t>(l)];
    const auto& vd = table.values[i][static_cast<std::size_t>(d)];
    z += dim * dim / static_cast<double>(order) * std::pow(eval_complex(vl) / dim, m_l) *
         std::pow(eval_complex(vd) / dim, m_d);
    auto il = vl.as_integer(), id = vd.as_integer();
    if (!il || !id) {
      exact = false;
      continue;
    }
    Rational term = Rational(table.degrees[i] * table.degrees[i]) / order;
    for (int j = 0; j < m_l; ++j) term *= Rational(*il) / table.degrees[i];
    for (int j = 0; j < m_d; ++j) term *= Rational(*id) / table.degrees[i];
    q += term;
  }
  out.approx = z;
  if (exact) out.exact = q;
  return out;
}

Rational size_of(const GroupTable& g, std::size_t c) { return Rational(g.class_size(static_cast<int>(c))); }

}  // namespace

MomentValue moment_direct(const CharTable& table, int c, int m) {
  if (m < 1) throw Error("moment order must be at least 1");
  return weighted_sum(table, c, 0, m, 0);
}

Rational moment_structural(const GroupTable& g, const ClassConstants& a, int c, int m) {
  if (m < 1) throw Error("moment order must be at least 1");
  const std::size_t k = a.classes();
  const auto lam = static_cast<std::size_t>(c);
  std::vector<Rational> v(k, 0);  // coefficients over F_σ
  v[lam] = 1;
  for (int step = 1; step < m; ++step) {
    std::vector<Rational> next(k, 0);
    for (std::size_t rho = 0; rho < k; ++rho) {
      if (v[rho] == 0) continue;
      const Rational scale = v[rho] / (size_of(g, rho) * size_of(g, lam));
      for (std::size_t s = 0; s < k; ++s)
        if (auto coeff = a(rho, lam, s)) next[s] += scale * coeff * size_of(g, s);
    }
    v = std::move(next);
  }
  return v[0];
}

Rational moment_display(const GroupTable& g, const ClassConstants& a, int c, int m) {
  const auto lam = static_cast<std::size_t>(c);
  const Rational n = size_of(g, lam);
  switch (m) {
    case 2:
      return Rational(a(lam, lam, 0)) / (n * n);
    case 3:
      return Rational(a(lam, lam, lam)) / (n * n);
    case 4: {
      Rational s = 0;
      for (std::size_t rho = 0; rho < a.classes(); ++rho) s += Rational(a(lam, lam, rho) * a(rho, lam, lam));
      return s / (n * n * n);
    }
    default:
      throw Error("closed moment forms exist for m = 2, 3, 4 only");
  }
}

MomentValue mixed_second_moment_direct(const CharTable& table, int l, int d) {
  return weighted_sum(table, l, d, 1, 1);
}

Rational mixed_second_moment_structural(const GroupTable& g, const ClassConstants& a, int l, int d) {
  const auto sl = static_cast<std::size_t>(l), sd = static_cast<std::size_t>(d);
  return Rational(a(sl, sd, 0)) / (size_of(g, sl) * size_of(g, sd));
}

bool center_constants_symmetric(const GroupTable& g, const ClassConstants& a) {
  const std::size_t k = a.classes();
  auto w = [&](std::size_t l, std::size_t d, std::size_t r) { return g.class_size(static_cast<int>(r)) * a(l, d, r); };
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t d = 0; d < k; ++d)
      for (std::size_t r = 0; r < k; ++r) {
        const auto v = w(l, d, r);
        if (v != w(d, l, r) || v != w(l, r, d) || v != w(r, d, l) || v != w(d, r, l) || v != w(r, l, d))
          return false;
      }
  return true;
}

}  // namespace gelfand
