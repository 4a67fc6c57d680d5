#pragma once

#include <functional>

#include "tropitheta/linalg.hpp"

namespace tropitheta {

struct ArgminResult {
  std::vector<IntVec> minimizers;  // sorted lexicographically
  Rational value;
  bool tie = false;
};

struct BruteForceResult {
  ArgminResult argmin;
  bool certified = false;
};

// ½aᵀGa + h·a
Rational quadratic_objective(const RatMatrix& G, const RatVec& h, const IntVec& a);

// Calls visit(a, q) for every a ∈ ℤⁿ with q = (a−c)ᵀG(a−c) ≤ bound, using the LDLᵀ of G.
void enumerate_ellipsoid(const RatMatrix& G, const RatVec& center, const Rational& bound,
                         const std::function<void(const IntVec&, const Rational&)>& visit);

// All integer minimizers of ½aᵀGa + h·a (Fincke–Pohst). Throws NotPolarization.
ArgminResult lattice_argmin(const RatMatrix& G, const RatVec& h);

// Exhaustive search over |a_i − round(â_i)| ≤ radius. Throws WindowInsufficient if the box
// cannot be shown to contain every minimizer.
ArgminResult brute_force_argmin(const RatMatrix& G, const RatVec& h, long radius);
BruteForceResult brute_force_argmin_unchecked(const RatMatrix& G, const RatVec& h, long radius);

// Smallest integer k ≥ 0 with k² ≥ value.
Integer ceil_sqrt(const Rational& value);

}  // namespace tropitheta
