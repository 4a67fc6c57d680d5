#pragma once

#include <optional>

#include "tropitheta/lattice.hpp"
#include "tropitheta/torus.hpp"

namespace tropitheta {

enum class Convention { LambdaGamma, QEll };

const char* convention_name(Convention c);
Convention parse_convention(const std::string& name);

struct ThetaFunction {
  TropicalDescentDatum datum;
  IntVec b;  // e-coordinates
  Convention convention = Convention::QEll;
};

struct ThetaEvaluation {
  Rational value;
  ArgminResult argmin;  // minimizing a ∈ ℤⁿ (f'-coordinates)
};

// +∞ is represented by an empty optional.
using TropicalNumber = std::optional<Rational>;

struct ThetaCombination {
  std::vector<std::pair<TropicalNumber, ThetaFunction>> terms;
};

// θ_b(x) = b·x̂ + min_a [½aᵀGa + h·a], h = Lᵀx̂ + Pmatᵀb − ℓ, plus the
// constant ½(L⁻¹b − r)ᵀG(L⁻¹b − r) in the (Q, ℓ) normalization.
ThetaEvaluation theta_evaluate(const ThetaFunction& theta, const RatVec& x);
Rational theta_eval(const ThetaFunction& theta, const RatVec& x);

// Linear term h of the lattice objective at x.
RatVec theta_linear_term(const TropicalDescentDatum& datum, const IntVec& b, const RatVec& x);
// Additive constant separating the two conventions.
Rational q_ell_constant(const TropicalDescentDatum& datum, const IntVec& b);
// Value at x of the affine piece indexed by a.
Rational theta_piece(const ThetaFunction& theta, const IntVec& a, const RatVec& x);
// Slope b + L·a and intercept of that piece.
IntVec piece_slope(const TropicalDescentDatum& datum, const IntVec& b, const IntVec& a);
Rational piece_intercept(const ThetaFunction& theta, const IntVec& a);

bool quasi_periodicity_check(const ThetaFunction& theta, const RatVec& x, const IntVec& u);

TropicalNumber min_plus_eval(const ThetaCombination& comb, const RatVec& x);

struct TranslatedDatum {
  TropicalDescentDatum datum;
  Rational constant;  // ½vᵀGv
  Rational offset;    // θ^{(Q,ℓ)}(x+v) = θ^{(Q,ℓ')}(x) + offset, offset = ℓ·v − ½vᵀGv
};

// v in f'-coordinates; ℓ' = ℓ − G·v.
TranslatedDatum translate_datum(const TropicalDescentDatum& datum, const RatVec& v);
bool translation_identity_check(const TropicalDescentDatum& datum, const IntVec& b, const RatVec& v,
                                const RatVec& x);

struct SublatticeCheck {
  bool holds = false;
  Rational lhs;  // min over 𝔅₁
  Rational rhs;  // θ₀(d₁x)/d₁²
  std::vector<IntVec> b1_reps;
};

SublatticeCheck sublattice_identity(const TropicalDescentDatum& datum, const RatVec& x);
bool sublattice_identity_check(const TropicalDescentDatum& datum, const RatVec& x);

bool gamma_rational_check(const ThetaCombination& comb);

}  // namespace tropitheta
