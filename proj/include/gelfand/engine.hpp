#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gelfand/chartab.hpp"
#include "gelfand/group.hpp"
#include "gelfand/oracle.hpp"

namespace gelfand {

using Complex = std::complex<double>;

// m_χ = (1/|K|) Σ_{k∈K} χ(k) for every irreducible χ of the parent group.
std::vector<std::int64_t> induced_multiplicities(const CharTable& table, const Subgroup& k);

struct GelfandReport {
  bool multiplicity_free = false;
  bool commutative = false;
  bool gelfand = false;
  std::vector<std::int64_t> multiplicities;
};

// Runs both criteria: m_χ <= 1 for all χ, and commutativity of the oracle
// double-coset tensor.  Throws InternalError if they disagree.
GelfandReport is_gelfand(const CharTable& table, const Subgroup& k, const oracle::DcTensor& tensor);
GelfandReport is_gelfand(const CharTable& table, const Subgroup& k);

struct PairData {
  GroupPtr group;
  Subgroup K;
  DoubleCosetPartition cosets;
  CharTablePtr table;
  GelfandReport gelfand;
  oracle::DcTensor tensor;  // k[λ][δ][ρ] by direct counting

  // Irreducibles with m_χ > 0, in table row order.
  std::vector<std::size_t> constituents;
  std::vector<std::int64_t> degrees;  // χ^θ(1) per constituent
  // zonal[θ][λ] = ω^θ at the representative of coset λ; empty unless Gelfand.
  std::vector<std::vector<Complex>> zonal;

  std::size_t coset_count() const { return cosets.count(); }
  // ω^θ at an arbitrary element, by coset lookup.
  Complex omega(std::size_t theta, ElementId x) const {
    return zonal[theta][static_cast<std::size_t>(cosets.dc_of[static_cast<std::size_t>(x)])];
  }
};

// Double cosets, table (computed when null), both Gelfand criteria and, for
// Gelfand pairs, the zonal table.
PairData build_pair(GroupPtr g, Subgroup k, CharTablePtr table = nullptr);

// ω^θ(x) = (1/|K|) Σ_{k∈K} χ^θ(x^-1 k) at each coset representative.  The
// value is checked to be constant on every coset when |G| <= 5000 and on 100
// sampled elements otherwise.  Throws Error for a non-Gelfand pair.
std::vector<std::vector<Complex>> zonal_table(const PairData& pair);

// ω^θ(x) by the averaging formula, without coset lookup.
Complex zonal_by_average(const PairData& pair, std::size_t theta, ElementId x);

// k_{λδ}^ρ = (|DC_λ||DC_δ|/|G|) Σ_θ χ^θ(1) ω^θ_λ ω^θ_δ conj(ω^θ_ρ), integrality gated.
std::int64_t structure_coeff(const PairData& pair, int l, int d, int r);
Complex structure_coeff_raw(const PairData& pair, int l, int d, int r);

// The r-fold version; r = lambdas.size() must be at least 2.
std::int64_t structure_coeff_multi(const PairData& pair, std::span<const int> lambdas, int r);

struct CoeffEntry {
  std::vector<int> lhs;
  int rhs = 0;
  std::int64_t value = 0;
};

struct CoeffTable {
  enum class Method { formula, oracle };
  Method method = Method::formula;
  std::vector<CoeffEntry> entries;  // lhs tuples in lexicographic order, then rhs

  static const char* method_name(Method m) { return m == Method::formula ? "formula" : "oracle"; }
};

// All r-fold coefficients over the cosets of the pair.
CoeffTable coeff_table_formula(const PairData& pair, int r);
CoeffTable coeff_table_oracle(const PairData& pair, int r);

// E_θ = (χ^θ(1)/|G|) Σ_ρ conj(ω^θ_ρ) DC_ρ, as coefficient vectors over cosets.
std::vector<std::vector<Complex>> idempotents(const PairData& pair);

// Product in the double-coset algebra using the oracle tensor.
std::vector<Complex> dc_algebra_product(const PairData& pair, std::span<const Complex> u,
                                        std::span<const Complex> v);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

CheckResult check_identity_value(const PairData& pair);
CheckResult check_functional_equation(const PairData& pair, int samples = 50, std::uint64_t seed = 1);
CheckResult check_orthogonality(const PairData& pair);
// ω^θ * ω^ψ = δ_θψ (|G|/χ^θ(1)) ω^θ, as functions on G.  Skipped (passed,
// detail says so) when |G| > limit.
CheckResult check_convolution_property(const PairData& pair, std::size_t limit = 720);
CheckResult check_morphism(const PairData& pair);
CheckResult check_idempotents(const PairData& pair);
CheckResult check_structure_vs_oracle(const PairData& pair);
// r-fold formula against iterated convolution on every tuple.
CheckResult check_multi_vs_oracle(const PairData& pair, int r);
CheckResult check_gelfand_concordance(const PairData& pair);

// The generic suite; the multi-product check runs only when |G| <= multi_limit.
std::vector<CheckResult> verify_pair(const PairData& pair, std::size_t multi_limit = 5000);

}  // namespace gelfand
