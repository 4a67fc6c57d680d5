#pragma once

#include "tropitheta/linalg.hpp"

namespace tropitheta {

// Column j of Pmat: f'_j in e^∨-coordinates.
struct TorusPresentation {
  RatMatrix Pmat;
  std::size_t dim() const { return Pmat.rows(); }
};

// λ(f'_j) = Σ_i L_ij e_i, ellVec_j = ℓ(f'_j), G = Lᵀ·Pmat.
struct TropicalDescentDatum {
  TorusPresentation torus;
  IntMatrix L;
  RatVec ell;
  RatMatrix G;
  bool positive_definite = false;

  std::size_t dim() const { return torus.dim(); }
  const RatMatrix& Pmat() const { return torus.Pmat; }
};

struct PolarizationInfo {
  IntVec type;
  IntMatrix U;
  IntMatrix V;
  Integer D;
  std::vector<IntVec> reps;  // e-coordinates
};

TorusPresentation build_torus(const RatMatrix& Pmat);
TropicalDescentDatum validate_datum(const TorusPresentation& torus, const IntMatrix& L, const RatVec& ell);
TropicalDescentDatum datum_from_Q(const TorusPresentation& torus, const RatMatrix& G, const RatVec& ell);
PolarizationInfo polarization_type(const TropicalDescentDatum& datum);

// ½ aᵀGa − ℓ·a
Rational gamma_eval(const TropicalDescentDatum& datum, const IntVec& a);
// r = G⁻¹ℓ in f'-coordinates.
RatVec ell_point(const TropicalDescentDatum& datum);

// Q(x, y) for x, y in e^∨-coordinates: x̂ᵀ·L·Pmat⁻¹·ŷ.
Rational Q_form(const TropicalDescentDatum& datum, const RatVec& x, const RatVec& y);

// b1 ≡ b2 mod λ(M').
bool congruent_mod_lambda(const IntMatrix& L, const IntVec& b1, const IntVec& b2);

void require_polarized(const TropicalDescentDatum& datum);

}  // namespace tropitheta
