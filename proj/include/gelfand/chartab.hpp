#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gelfand/group.hpp"

namespace gelfand {

// A character value χ(g) recorded exactly as the eigenvalue multiset of
// ρ(g): mult[k] copies of ζ_e^k.
struct RootMultiset {
  int exponent = 1;
  std::vector<std::int64_t> mult;

  std::int64_t total() const;
  // The value as a rational integer, when it is one.
  std::optional<std::int64_t> as_integer() const;
  // Complex conjugate (k -> -k).
  RootMultiset conj() const;

  bool operator==(const RootMultiset&) const = default;
};

std::complex<double> eval_complex(const RootMultiset& v);

// Class multiplication constants a[λ][δ][ρ] = #{x ∈ C_λ : x^-1 z ∈ C_δ} for
// a fixed z ∈ C_ρ, i.e. the coefficient of C_ρ in C_λ C_δ.
class ClassConstants {
 public:
  ClassConstants() = default;
  explicit ClassConstants(std::size_t classes) : k_(classes), a_(classes * classes * classes, 0) {}

  std::size_t classes() const { return k_; }
  std::int64_t operator()(std::size_t l, std::size_t d, std::size_t r) const {
    return a_[(l * k_ + d) * k_ + r];
  }
  std::int64_t& operator()(std::size_t l, std::size_t d, std::size_t r) {
    return a_[(l * k_ + d) * k_ + r];
  }

  bool operator==(const ClassConstants&) const = default;

 private:
  std::size_t k_ = 0;
  std::vector<std::int64_t> a_;
};

ClassConstants class_constants(const GroupTable& g);

struct CharTable {
  GroupPtr group;
  std::int64_t exponent = 1;
  std::int64_t prime = 0;  // the F_p used by the modular computation

  std::vector<std::int64_t> degrees;                      // per irreducible
  std::vector<std::vector<RootMultiset>> values;          // [irreducible][class]
  std::vector<std::vector<std::complex<double>>> approx;  // eval_complex of values
  // power_map[c][j] = class of rep(c)^j, j = 0 .. exponent-1
  std::vector<std::vector<int>> power_map;

  std::size_t size() const { return degrees.size(); }
  // Row index of conj(χ_i), located by value comparison.
  std::size_t conjugate_row(std::size_t i) const;
  // χ_i evaluated at an arbitrary element.
  std::complex<double> at(std::size_t i, ElementId x) const {
    return approx[i][static_cast<std::size_t>(group->class_of(x))];
  }
};

using CharTablePtr = std::shared_ptr<const CharTable>;

// Smallest prime p ≡ 1 (mod exponent) with p > 2·ceil(sqrt(order)).
std::int64_t dixon_prime(std::int64_t exponent, std::int64_t order);

// Irreducible characters by simultaneous diagonalization of the class
// matrices over F_p followed by lifting to root multisets.  Rows are sorted
// by degree, then by descending exact value tuple, so row 0 is trivial.
CharTablePtr character_table(const GroupPtr& g);
CharTablePtr character_table(const GroupPtr& g, const ClassConstants& constants);

// Σ_ρ |C_ρ| χ_i(ρ) conj χ_j(ρ) = δ_ij |G| and the column relations, checked
// exactly in Z[ζ_e].
bool rows_orthogonal_exact(const CharTable& t);
bool columns_orthogonal_exact(const CharTable& t);

// c_{λδ}^ρ = (|C_λ||C_δ|/|G|) Σ_χ χ_λ χ_δ conj(χ_ρ) / χ(1), with an
// integrality gate of 1e-6.
std::int64_t frobenius_center_coeff(const CharTable& t, int l, int d, int r);

// |C_λ||C_δ| Σ_χ χ_λ χ_δ conj(χ_ρ) / χ(1)^2, the alternate normalization
// sometimes quoted for the same coefficient.  Reported, never asserted.
std::complex<double> alternate_center_form(const CharTable& t, int l, int d, int r);

// Rounds z to the nearest integer, throwing IntegralityError if it is
// farther than tol or has |imag| >= tol.
std::int64_t checked_integer(std::complex<double> z, const char* what, double tol = 1e-6);

}  // namespace gelfand
