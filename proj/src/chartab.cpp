#include "gelfand/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gelfand/cyclotomic.hpp"
#include "gelfand/error.hpp"
#include "gelfand/parallel.hpp"

namespace gelfand {

std::int64_t RootMultiset::total() const {
  return std::accumulate(mult.begin(), mult.end(), std::int64_t{0});
}

std::optional<std::int64_t> RootMultiset::as_integer() const {
  return cyclo::as_integer(mult, exponent);
}

RootMultiset RootMultiset::conj() const {
  RootMultiset r{exponent, std::vector<std::int64_t>(mult.size(), 0)};
  for (std::size_t k = 0; k < mult.size(); ++k) r.mult[(mult.size() - k) % mult.size()] = mult[k];
  return r;
}

std::complex<double> eval_complex(const RootMultiset& v) {
  std::complex<double> s{0.0, 0.0};
  for (std::size_t k = 0; k < v.mult.size(); ++k) {
    if (v.mult[k] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / v.exponent;
    s += static_cast<double>(v.mult[k]) * std::polar(1.0, angle);
  }
  return s;
}

ClassConstants class_constants(const GroupTable& g) {
  const std::size_t k = g.class_count();
  std::vector<std::vector<ElementId>> members(k);
  for (std::size_t x = 0; x < g.order(); ++x)
    members[static_cast<std::size_t>(g.class_of(static_cast<ElementId>(x)))].push_back(
        static_cast<ElementId>(x));

  ClassConstants a(k);
  parallel_for(k, [&](std::size_t r) {
    ElementId z = g.class_rep(static_cast<int>(r));
    for (std::size_t l = 0; l < k; ++l)
      for (auto x : members[l]) {
        auto d = static_cast<std::size_t>(g.class_of(g.mul(g.inverse(x), z)));
        ++a(l, d, r);
      }
  });
  return a;
}

namespace {

using u64 = std::uint64_t;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(std::int64_t v) const {
    auto m = v % static_cast<std::int64_t>(p);
    return static_cast<u64>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }
};

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(const Field& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root mod " + std::to_string(f.p));
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Row-reduces `rows` in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Mat& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    u64 inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {u : A u = 0} for a square matrix A.
Mat nullspace(const Field& f, Mat a) {
  const std::size_t n = a.size();
  auto pivots = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec u(n, 0);
    u[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(u));
  }
  return basis;
}

struct Subspace {
  Mat basis;  // rows, reduced echelon
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(const Field& f, Mat rows) {
  Subspace s;
  s.pivots = rref(f, rows);
  s.basis = std::move(rows);
  return s;
}

// Splits every subspace into the eigenspaces of the class matrix M_λ,
// (M_λ)_{δρ} = a[λ][δ][ρ].
std::vector<Subspace> split(const Field& f, const ClassConstants& a, std::size_t l,
                            std::vector<Subspace> spaces) {
  const std::size_t k = a.classes();
  std::vector<Subspace> out;
  for (auto& s : spaces) {
    const std::size_t d = s.basis.size();
    if (d == 1) {
      out.push_back(std::move(s));
      continue;
    }
    // Restriction of M_λ in the basis: coordinates are read at pivots.
    Mat m(d, Vec(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t row = s.pivots[i];
        u64 acc = 0;
        for (std::size_t r = 0; r < k; ++r) {
          if (s.basis[j][r] == 0) continue;
          acc = f.add(acc, f.mul(f.from(a(l, row, r)), s.basis[j][r]));
        }
        m[i][j] = acc;
      }
    }
    std::size_t found = 0;
    std::vector<Subspace> pieces;
    for (u64 t = 0; t < f.p && found < d; ++t) {
      Mat shifted = m;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], t);
      Mat null = nullspace(f, std::move(shifted));
      if (null.empty()) continue;
      found += null.size();
      Mat vecs;
      for (const auto& u : null) {
        Vec v(k, 0);
        for (std::size_t i = 0; i < d; ++i) {
          if (u[i] == 0) continue;
          for (std::size_t r = 0; r < k; ++r) v[r] = f.add(v[r], f.mul(u[i], s.basis[i][r]));
        }
        vecs.push_back(std::move(v));
      }
      pieces.push_back(make_subspace(f, std::move(vecs)));
    }
    if (found != d)
      throw InternalError("class matrix " + std::to_string(l) +
                          " is not diagonalizable over F_" + std::to_string(f.p));
    for (auto& piece : pieces) out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace

std::int64_t dixon_prime(std::int64_t exponent, std::int64_t order) {
  auto root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  while (root * root < order) ++root;
  const std::int64_t bound = 2 * root;
  for (std::int64_t p = exponent + 1;; p += exponent) {
    if (p > bound && is_prime(p)) return p;
    if (p > (std::int64_t{1} << 31)) throw Error("no suitable prime for the modular character computation");
  }
}

CharTablePtr character_table(const GroupPtr& g) { return character_table(g, class_constants(*g)); }

CharTablePtr character_table(const GroupPtr& gp, const ClassConstants& a) {
  const GroupTable& g = *gp;
  const std::size_t k = g.class_count();
  const auto order = static_cast<std::int64_t>(g.order());
  const std::int64_t e = g.exponent();

  auto table = std::make_shared<CharTable>();
  table->group = gp;
  table->exponent = e;
  table->prime = dixon_prime(e, order);
  const Field f{static_cast<u64>(table->prime)};

  // Power maps.
  table->power_map.assign(k, std::vector<int>(static_cast<std::size_t>(e), 0));
  std::vector<std::int64_t> rep_order(k, 1);
  for (std::size_t c = 0; c < k; ++c) {
    ElementId r = g.class_rep(static_cast<int>(c));
    rep_order[c] = g.element(r).order();
    ElementId x = 0;
    for (std::int64_t j = 0; j < e; ++j) {
      table->power_map[c][static_cast<std::size_t>(j)] = g.class_of(x);
      x = g.mul(x, r);
    }
  }

  // Common eigenvectors of the class matrices.
  Mat identity(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces{make_subspace(f, std::move(identity))};
  for (std::size_t l = 1; l < k; ++l) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; }))
      break;
    spaces = split(f, a, l, std::move(spaces));
  }
  if (spaces.size() != k)
    throw InternalError("eigenspaces did not split into " + std::to_string(k) + " lines");

  const u64 zeta = f.pow(primitive_root(f), (f.p - 1) / static_cast<u64>(e));
  auto max_degree = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(order))));

  struct Row {
    std::int64_t degree;
    std::vector<RootMultiset> values;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    Vec w = s.basis[0];
    if (w[0] == 0) throw InternalError("central character vanishes at the identity class");
    u64 inv0 = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, inv0);

    u64 norm = 0;
    for (std::size_t c = 0; c < k; ++c) {
      auto ci = static_cast<std::size_t>(g.inverse_class(static_cast<int>(c)));
      norm = f.add(norm, f.mul(f.mul(w[c], w[ci]), f.inv(f.from(g.class_size(static_cast<int>(c))))));
    }
    if (norm == 0) throw InternalError("degenerate norm in degree recovery");
    u64 target = f.mul(f.from(order), f.inv(norm));
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= max_degree; ++d)
      if (f.mul(f.from(d), f.from(d)) == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalError("no character degree matches the norm mod p");

    Vec chi(k);
    for (std::size_t c = 0; c < k; ++c)
      chi[c] = f.mul(f.mul(f.from(degree), w[c]), f.inv(f.from(g.class_size(static_cast<int>(c)))));

    Row row{degree, {}};
    for (std::size_t c = 0; c < k; ++c) {
      const std::int64_t o = rep_order[c];
      const std::int64_t step = e / o;
      const u64 zo = f.pow(zeta, static_cast<u64>(step));
      const u64 inv_o = f.inv(f.from(o));
      RootMultiset v{static_cast<int>(e), std::vector<std::int64_t>(static_cast<std::size_t>(e), 0)};
      for (std::int64_t kk = 0; kk < o; ++kk) {
        u64 acc = 0;
        for (std::int64_t j = 0; j < o; ++j) {
          u64 value = chi[static_cast<std::size_t>(table->power_map[c][static_cast<std::size_t>(j)])];
          u64 root = f.pow(zo, static_cast<u64>(((o - (j * kk) % o) % o)));
          acc = f.add(acc, f.mul(value, root));
        }
        acc = f.mul(acc, inv_o);
        if (acc > static_cast<u64>(degree))
          throw InternalError("eigenvalue multiplicity out of range while lifting a character");
        v.mult[static_cast<std::size_t>(kk * step)] = static_cast<std::int64_t>(acc);
      }
      if (v.total() != degree) throw InternalError("lifted multiplicities do not sum to the degree");
      row.values.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    for (std::size_t c = 0; c < x.values.size(); ++c)
      if (x.values[c].mult != y.values[c].mult) return x.values[c].mult > y.values[c].mult;
    return false;
  });

  std::int64_t sum_sq = 0;
  for (auto& r : rows) {
    sum_sq += r.degree * r.degree;
    table->degrees.push_back(r.degree);
    std::vector<std::complex<double>> approx;
    for (const auto& v : r.values) approx.push_back(eval_complex(v));
    table->approx.push_back(std::move(approx));
    table->values.push_back(std::move(r.values));
  }
  if (sum_sq != order) throw InternalError("sum of squared degrees differs from the group order");
  return table;
}

std::size_t CharTable::conjugate_row(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j) {
    bool match = true;
    for (std::size_t c = 0; c < values[i].size() && match; ++c)
      match = values[j][c] == values[i][c].conj();
    if (match) return j;
  }
  throw InternalError("character table is not closed under complex conjugation");
}

namespace {

// acc += weight · x · conj(y) in Z[x]/(x^e - 1).
void accumulate_product(cyclo::Poly& acc, const RootMultiset& x, const RootMultiset& y,
                        std::int64_t weight) {
  const auto e = static_cast<std::size_t>(x.exponent);
  for (std::size_t a = 0; a < e; ++a) {
    if (x.mult[a] == 0) continue;
    for (std::size_t b = 0; b < e; ++b) {
      if (y.mult[b] == 0) continue;
      acc[(a + e - b) % e] += weight * x.mult[a] * y.mult[b];
    }
  }
}

}  // namespace

bool rows_orthogonal_exact(const CharTable& t) {
  const auto& g = *t.group;
  const auto e = static_cast<std::size_t>(t.exponent);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i; j < t.size(); ++j) {
      cyclo::Poly acc(e, 0);
      for (std::size_t c = 0; c < g.class_count(); ++c)
        accumulate_product(acc, t.values[i][c], t.values[j][c], g.class_size(static_cast<int>(c)));
      if (i == j) acc[0] -= static_cast<std::int64_t>(g.order());
      if (!cyclo::is_zero(acc, static_cast<int>(e))) return false;
    }
  return true;
}

bool columns_orthogonal_exact(const CharTable& t) {
  const auto& g = *t.group;
  const auto e = static_cast<std::size_t>(t.exponent);
  for (std::size_t c = 0; c < g.class_count(); ++c)
    for (std::size_t d = c; d < g.class_count(); ++d) {
      cyclo::Poly acc(e, 0);
      for (std::size_t i = 0; i < t.size(); ++i) accumulate_product(acc, t.values[i][c], t.values[i][d], 1);
      if (c == d)
        acc[0] -= static_cast<std::int64_t>(g.order()) / g.class_size(static_cast<int>(c));
      if (!cyclo::is_zero(acc, static_cast<int>(e))) return false;
    }
  return true;
}

std::int64_t checked_integer(std::complex<double> z, const char* what, double tol) {
  double nearest = std::round(z.real());
  if (std::abs(z.imag()) >= tol || std::abs(z.real() - nearest) >= tol)
    throw IntegralityError(what, z.real(), z.imag());
  return static_cast<std::int64_t>(nearest);
}

std::int64_t frobenius_center_coeff(const CharTable& t, int l, int d, int r) {
  const auto& g = *t.group;
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < t.size(); ++i)
    sum += t.approx[i][static_cast<std::size_t>(l)] * t.approx[i][static_cast<std::size_t>(d)] *
           std::conj(t.approx[i][static_cast<std::size_t>(r)]) / static_cast<double>(t.degrees[i]);
  sum *= static_cast<double>(g.class_size(l)) * static_cast<double>(g.class_size(d)) /
         static_cast<double>(g.order());
  auto c = checked_integer(sum, "center structure coefficient");
  if (c < 0) throw IntegralityError("negative center structure coefficient", sum.real(), sum.imag());
  return c;
}

std::complex<double> alternate_center_form(const CharTable& t, int l, int d, int r) {
  const auto& g = *t.group;
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto deg = static_cast<double>(t.degrees[i]);
    sum += t.approx[i][static_cast<std::size_t>(l)] * t.approx[i][static_cast<std::size_t>(d)] *
           std::conj(t.approx[i][static_cast<std::size_t>(r)]) / (deg * deg);
  }
  return sum * static_cast<double>(g.class_size(l)) * static_cast<double>(g.class_size(d));
}

}  // namespace gelfand
