#include "gelfand/oracle.hpp"

#include "gelfand/error.hpp"
#include "gelfand/parallel.hpp"

namespace gelfand::oracle {

std::vector<std::int64_t> class_product_oracle(const GroupTable& g, int l, int d,
                                               std::span<const ElementId> reps) {
  const std::size_t k = g.class_count();
  if (!reps.empty() && reps.size() != k) throw Error("class_product_oracle: wrong number of representatives");
  std::vector<ElementId> members;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.class_of(static_cast<ElementId>(x)) == l) members.push_back(static_cast<ElementId>(x));

  std::vector<std::int64_t> out(k, 0);
  parallel_for(k, [&](std::size_t r) {
    ElementId z = reps.empty() ? g.class_rep(static_cast<int>(r)) : reps[r];
    std::int64_t count = 0;
    for (auto x : members)
      if (g.class_of(g.mul(g.inverse(x), z)) == d) ++count;
    out[r] = count;
  });
  return out;
}

std::vector<std::int64_t> dc_product_oracle(const GroupTable& g, const DoubleCosetPartition& dc,
                                            int l, int d, std::span<const ElementId> reps) {
  const std::size_t m = dc.count();
  if (!reps.empty() && reps.size() != m) throw Error("dc_product_oracle: wrong number of representatives");
  std::vector<ElementId> members;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (dc.dc_of[x] == l) members.push_back(static_cast<ElementId>(x));

  std::vector<std::int64_t> out(m, 0);
  parallel_for(m, [&](std::size_t r) {
    ElementId z = reps.empty() ? dc.reps[r] : reps[r];
    std::int64_t count = 0;
    for (auto x : members)
      if (dc.dc_of[static_cast<std::size_t>(g.mul(g.inverse(x), z))] == d) ++count;
    out[r] = count;
  });
  return out;
}

DcTensor dc_structure_tensor(const GroupTable& g, const DoubleCosetPartition& dc) {
  const std::size_t m = dc.count();
  std::vector<std::vector<ElementId>> members(m);
  for (std::size_t x = 0; x < g.order(); ++x)
    members[static_cast<std::size_t>(dc.dc_of[x])].push_back(static_cast<ElementId>(x));

  DcTensor t(m);
  // One scan of DC_λ per (λ, ρ) fills every δ at once.
  parallel_for(m, [&](std::size_t r) {
    ElementId z = dc.reps[r];
    for (std::size_t l = 0; l < m; ++l)
      for (auto x : members[l]) {
        auto d = static_cast<std::size_t>(dc.dc_of[static_cast<std::size_t>(g.mul(g.inverse(x), z))]);
        ++t(l, d, r);
      }
  });
  return t;
}

AlgebraVector<std::int64_t> indicator(const DoubleCosetPartition& dc, int coset) {
  AlgebraVector<std::int64_t> v(dc.dc_of.size(), 0);
  for (std::size_t x = 0; x < v.size(); ++x)
    if (dc.dc_of[x] == coset) v[x] = 1;
  return v;
}

AlgebraVector<std::int64_t> class_indicator(const GroupTable& g, int cls) {
  AlgebraVector<std::int64_t> v(g.order(), 0);
  for (std::size_t x = 0; x < v.size(); ++x)
    if (g.class_of(static_cast<ElementId>(x)) == cls) v[x] = 1;
  return v;
}

std::vector<std::int64_t> multi_product_oracle(const GroupTable& g, const DoubleCosetPartition& dc,
                                               std::span<const int> lambdas) {
  if (lambdas.empty()) throw Error("multi_product_oracle: empty product");
  auto acc = indicator(dc, lambdas[0]);
  for (std::size_t s = 1; s < lambdas.size(); ++s) {
    auto next = indicator(dc, lambdas[s]);
    acc = convolve<std::int64_t>(g, acc, next);
  }
  std::vector<std::int64_t> out;
  for (auto r : dc.reps) out.push_back(acc[static_cast<std::size_t>(r)]);
  return out;
}

bool algebra_commutes(const DcTensor& t) {
  const std::size_t m = t.cosets();
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t d = l + 1; d < m; ++d)
      for (std::size_t r = 0; r < m; ++r)
        if (t(l, d, r) != t(d, l, r)) return false;
  return true;
}

bool algebra_commutes(const GroupTable& g, const DoubleCosetPartition& dc) {
  return algebra_commutes(dc_structure_tensor(g, dc));
}

}  // namespace gelfand::oracle
