#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gelfand/engine.hpp"
#include "gelfand/group.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

// S_n generated by (1 2) and (1 2 ... n).
GroupPtr symmetric_group(int n, std::size_t cap = default_cap());

// B_n inside S_2n: the centralizer of (1 2)(3 4)...(2n-1 2n), generated by
// the (2i-1 2i) and the (2i-1 2i+1)(2i 2i+2).  Its order is checked.
Subgroup hyperoctahedral(const GroupPtr& s2n);

// The permutations of S_n fixing point 1.
Subgroup stabilizer_of_first(const GroupPtr& sn);

enum class PairKind { gxgopp, s2n_bn, sn_sn1, custom };

struct PairInstance {
  PairKind kind = PairKind::custom;
  std::string spec;  // as given, e.g. "s2n-bn:3"
  int n = 0;         // preset parameter (0 for gxgopp and custom)
  GroupPtr group;    // the ambient group of the pair
  Subgroup K;
  GroupPtr base;                                // G for gxgopp, S_n for sn-sn1
  std::optional<ProductWithOpposite> product;   // gxgopp and sn-sn1
};

// "gxgopp:<group>", "s2n-bn:<n>", "sn-sn1:<n>", "custom:<G.json>,<K.json>";
// <group> is a group spec file or S<n>.  Throws ParseError on bad input.
PairInstance parse_pair(std::string_view spec, std::size_t cap = default_cap());

// Human-readable coset labels: coset types for s2n-bn, (i,λ) for sn-sn1,
// the class of ab for gxgopp and the representative otherwise.
struct CosetLabels {
  std::vector<std::string> text;
  std::vector<Partition> coset_types;  // s2n-bn only
  std::vector<PairLabel> pair_labels;  // sn-sn1 only
  std::vector<int> classes;            // gxgopp only: class in the base group
};

CosetLabels coset_labels(const PairInstance& inst, const DoubleCosetPartition& dc);

// Coefficients of the (S_2n, B_n) Hecke algebra from the hook-product form
// (1/|K_ρ|) Σ_θ φ^θ(λ)φ^θ(δ)φ^θ(ρ)/H_2θ, φ^θ(λ) = |K_λ| ω^θ_λ.
struct HssValue {
  std::int64_t value = 0;
  Complex hook_form;     // H_2θ = hook product of 2θ
  Complex inverse_form;  // H_2θ = χ^{2θ}(1)/|S_2n|
  Complex zonal_form;    // structure_coeff_raw
};

// θ ⊢ n for each constituent of the s2n-bn pair, matched through χ^{2θ}.
std::vector<Partition> hss_thetas(const PairInstance& inst, const PairData& pair);

// Throws InternalError if the hook form and the zonal form disagree.
HssValue hss_coeff(const PairInstance& inst, const PairData& pair, const Partition& l, const Partition& d,
                   const Partition& r);

// Checks specific to the preset: coset-type constancy and HSS agreement,
// (i,λ) labels and sizes, or the k' = |G| c reduction.
std::vector<CheckResult> verify_preset(const PairInstance& inst, const PairData& pair);

}  // namespace gelfand
