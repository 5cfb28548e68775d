#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Exact arithmetic in the cyclotomic integers Z[ζ_e], with elements given as
// coefficient vectors over the powers ζ_e^0 .. ζ_e^{e-1}.
namespace gelfand::cyclo {

using Poly = std::vector<std::int64_t>;

// Φ_n, lowest degree first.
const Poly& cyclotomic_polynomial(int n);

// Canonical form: remainder of Σ c_k x^k modulo Φ_e.
Poly reduce(const Poly& coeffs, int e);

bool is_zero(const Poly& coeffs, int e);

// The rational integer represented by coeffs, if it is one.
std::optional<std::int64_t> as_integer(const Poly& coeffs, int e);

}  // namespace gelfand::cyclo
