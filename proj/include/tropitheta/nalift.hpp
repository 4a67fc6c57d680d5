#pragma once

#include <map>

#include "tropitheta/polytope.hpp"
#include "tropitheta/theta.hpp"
#include "tropitheta/valued.hpp"

namespace tropitheta {

using ValuedMatrix = std::vector<std::vector<ValuedScalar>>;

// Totally degenerate descent datum: Tmat_ij = χ^{e_i}(Φ̃(f'_j)), cBasis_j = c(f'_j).
struct NADescentDatum {
  TorusPresentation torus;
  IntMatrix L;
  ValuedMatrix Tmat;
  std::vector<ValuedScalar> cBasis;
  ValuedMatrix S;  // S_ij = t(f'_i, λ(f'_j))

  std::size_t dim() const { return torus.dim(); }
};

NADescentDatum build_na_datum(const TorusPresentation& torus, const IntMatrix& L, const ValuedMatrix& Tmat,
                              const std::vector<ValuedScalar>& cBasis);

// t(a, m) = Π Tmat_ij^{m_i·a_j} for a ∈ M' (f'-coordinates), m ∈ M (e-coordinates).
ValuedScalar pairing(const NADescentDatum& datum, const IntVec& a, const IntVec& m);
// c(a) = Π cBasis_i^{a_i} · Π_{i<j} S_ij^{a_i a_j} · Π S_ii^{a_i(a_i−1)/2}
ValuedScalar c_extend(const NADescentDatum& datum, const IntVec& a);
TropicalDescentDatum c_trop(const NADescentDatum& datum);

// One block of Fourier support: u = b + L·a with |a_i| ≤ radius, and
// val(g_u) = ½aᵀGa + linear·a + constant for every a ∈ ℤⁿ.
struct FourierWindow {
  IntVec b;
  Integer radius;
  RatMatrix G;
  RatVec linear;
  Rational constant;
};

struct FourierData {
  std::map<IntVec, ValuedScalar> coeffs;
  std::vector<FourierWindow> windows;
  IntMatrix L;
};

FourierData fourier_lift(const NADescentDatum& datum, const IntVec& b, long radius);
// Sum of Fourier data (coefficientwise), windows concatenated.
FourierData fourier_sum(const FourierData& a, const FourierData& b);
// Multiply every coefficient by a scalar with valuation shift; windows adjust their constant.
FourierData fourier_scale(const FourierData& fd, const ValuedScalar& s);

// min_u u·v̂ + val(g_u); throws WindowInsufficient unless the window provably attains it.
Rational tropicalize_fourier(const FourierData& fd, const RatVec& v);
// Exact check that every stored coefficient obeys the recorded quadratic valuation growth.
bool check_convergence(const FourierData& fd);

// g_{u + L·w} = g_u · c(w) · t(w, u) on every in-window pair.
bool verify_na_quasi_periodicity(const FourierData& fd, const NADescentDatum& datum, const IntVec& w);

struct LiftSample {
  RatVec point;
  Rational target;
  Rational lifted;
};

struct SurjectiveLiftResult {
  FourierData fd;
  std::vector<Rational> residues;  // λ_b per representative (0 for +∞ targets)
  std::vector<IntVec> reps;
  std::vector<Cell> target_cells;
  std::vector<LiftSample> samples;
  std::size_t attempts = 0;
  bool verified = false;
};

// Targets c_b weight θ_b in the (Q, ℓ) normalization, one per polarization representative.
SurjectiveLiftResult surjective_lift(const NADescentDatum& datum, const std::vector<TropicalNumber>& targets,
                                     long radius);

NADescentDatum divide_datum(const NADescentDatum& datum, const Integer& d1);

}  // namespace tropitheta
