#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gelfand/chartab.hpp"

namespace gelfand {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);

// dim²/|G| per irreducible, in table row order.
std::vector<Rational> plancherel(const CharTable& table);

// A moment value: exact when every character value involved is a rational
// integer, otherwise only the complex approximation is set.
struct MomentValue {
  std::optional<Rational> exact;
  std::complex<double> approx;
};

// E[F_g^m] = Σ_χ (dim²/|G|) (χ(g)/dim)^m for g in class c.
MomentValue moment_direct(const CharTable& table, int c, int m);

// Same moment from the class constants alone: F_ρ F_λ is expanded as
// Σ_σ c_{ρλ}^σ |C_σ|/(|C_ρ||C_λ|) F_σ and E[F_σ] = δ_{σ,1}.  Always exact.
Rational moment_structural(const GroupTable& g, const ClassConstants& a, int c, int m);

// The closed forms for m = 2, 3, 4:
//   c_{λλ}^1/|C_λ|²,  c_{λλ}^λ/|C_λ|²,  Σ_ρ c_{λλ}^ρ c_{ρλ}^λ/|C_λ|³.
// They coincide with the moment when C_λ is closed under inversion.
Rational moment_display(const GroupTable& g, const ClassConstants& a, int c, int m);

// E[F_g F_g'] two ways: directly, and as c_{λδ}^1/(|C_λ||C_δ|).
MomentValue mixed_second_moment_direct(const CharTable& table, int l, int d);
Rational mixed_second_moment_structural(const GroupTable& g, const ClassConstants& a, int l, int d);

// |C_ρ| c_{λδ}^ρ is invariant under every permutation of (λ, δ, ρ).
bool center_constants_symmetric(const GroupTable& g, const ClassConstants& a);

}  // namespace gelfand
