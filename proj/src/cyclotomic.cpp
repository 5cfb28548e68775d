#include "gelfand/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "gelfand/error.hpp"

namespace gelfand::cyclo {

namespace {

// Exact division by a monic polynomial; throws if the remainder is nonzero.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InternalError("cyclotomic division: degree too small");
  Poly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::int64_t c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (num[j] != 0) throw InternalError("cyclotomic division: nonzero remainder");
  return q;
}

std::mutex g_mutex;
std::map<int, Poly> g_cache;

const Poly& compute(int n) {
  if (auto it = g_cache.find(n); it != g_cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), compute(d));
  return g_cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

const Poly& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic_polynomial: n must be positive");
  std::lock_guard lock(g_mutex);
  return compute(n);
}

Poly reduce(const Poly& coeffs, int e) {
  const Poly& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  Poly r = coeffs;
  for (std::size_t i = r.size(); i-- > deg;) {
    std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg, 0);
  return r;
}

bool is_zero(const Poly& coeffs, int e) {
  for (auto c : reduce(coeffs, e))
    if (c != 0) return false;
  return true;
}

std::optional<std::int64_t> as_integer(const Poly& coeffs, int e) {
  Poly r = reduce(coeffs, e);
  if (r.empty()) return 0;
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return r[0];
}

}  // namespace gelfand::cyclo
