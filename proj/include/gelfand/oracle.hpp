#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gelfand/group.hpp"

// Brute-force ground truth by direct counting.  Everything here is exact
// integer arithmetic.
namespace gelfand::oracle {

// Dense coefficient vector over the element ids of a group.
template <class T>
using AlgebraVector = std::vector<T>;

// For each class ρ: #{x ∈ C_λ : x^-1 z_ρ ∈ C_δ}.  `reps` overrides the
// class representatives z_ρ when nonempty.
std::vector<std::int64_t> class_product_oracle(const GroupTable& g, int l, int d,
                                               std::span<const ElementId> reps = {});

// For each coset ρ: #{x ∈ DC_λ : x^-1 z_ρ ∈ DC_δ}.
std::vector<std::int64_t> dc_product_oracle(const GroupTable& g, const DoubleCosetPartition& dc,
                                            int l, int d, std::span<const ElementId> reps = {});

// Full tensor k[λ][δ][ρ], flattened as (λ·m + δ)·m + ρ.
class DcTensor {
 public:
  DcTensor() = default;
  explicit DcTensor(std::size_t m) : m_(m), k_(m * m * m, 0) {}
  std::size_t cosets() const { return m_; }
  std::int64_t operator()(std::size_t l, std::size_t d, std::size_t r) const {
    return k_[(l * m_ + d) * m_ + r];
  }
  std::int64_t& operator()(std::size_t l, std::size_t d, std::size_t r) {
    return k_[(l * m_ + d) * m_ + r];
  }
  bool operator==(const DcTensor&) const = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::int64_t> k_;
};

DcTensor dc_structure_tensor(const GroupTable& g, const DoubleCosetPartition& dc);

// (u * v)(x) = Σ_y u(y) v(y^-1 x).
template <class T>
AlgebraVector<T> convolve(const GroupTable& g, std::span<const T> u, std::span<const T> v) {
  const std::size_t n = g.order();
  AlgebraVector<T> w(n, T{});
  for (std::size_t y = 0; y < n; ++y) {
    if (u[y] == T{}) continue;
    for (std::size_t z = 0; z < n; ++z) {
      if (v[z] == T{}) continue;
      w[static_cast<std::size_t>(g.mul(static_cast<ElementId>(y), static_cast<ElementId>(z)))] +=
          u[y] * v[z];
    }
  }
  return w;
}

AlgebraVector<std::int64_t> indicator(const DoubleCosetPartition& dc, int coset);
AlgebraVector<std::int64_t> class_indicator(const GroupTable& g, int cls);

// Coefficients of DC_ρ in DC_{λ_1} ··· DC_{λ_r}, by iterated convolution
// read off at the coset representatives.
std::vector<std::int64_t> multi_product_oracle(const GroupTable& g, const DoubleCosetPartition& dc,
                                               std::span<const int> lambdas);

// True iff k_{λδ}^ρ = k_{δλ}^ρ for all triples.
bool algebra_commutes(const DcTensor& t);
bool algebra_commutes(const GroupTable& g, const DoubleCosetPartition& dc);

}  // namespace gelfand::oracle
