#pragma once

#include "tropitheta/embedding.hpp"
#include "tropitheta/lattice.hpp"
#include "tropitheta/polytope.hpp"
#include "tropitheta/torus.hpp"

namespace tropitheta {

// Lattice ℤⁿ with inner product [a, b] = aᵀGb. All geometry is in lattice coordinates.
struct VoronoiCell {
  std::vector<IntVec> relevant;
  std::vector<HalfSpace> halfspaces;  // (G·v)·x ≤ ½vᵀGv
};

std::vector<IntVec> relevant_vectors(const RatMatrix& G);
VoronoiCell voronoi_cell(const RatMatrix& G);
// Vertex form of the Voronoi cell, n ≤ 2.
Cell voronoi_polytope(const RatMatrix& G);

bool in_cell(const RatMatrix& G, const RatVec& x);
// All lattice points nearest to x.
ArgminResult closest_point(const RatMatrix& G, const RatVec& x);

std::vector<RatVec> half_period_system(const RatMatrix& G, const RatVec& x);

// ℤ-basis of (1/r)ℤⁿ inside the simplex conv(0, q₁, …, q_n).
std::vector<RatVec> basis_in_simplex(const std::vector<IntVec>& q, const Rational& r);

struct DecompositionCell {
  Cell cell;
  RatVec interior;
  std::vector<RatVec> q;      // half-period system at the interior point
  std::vector<RatVec> basis;  // p^(1..n), lattice coordinates, p^(i) + σ ⊆ V
  std::vector<IntVec> ell;    // ℓ^(i) = d ∘ p^(i)
};

struct GoodDecomposition {
  RatMatrix G;
  IntVec d;
  Cell voronoi;
  std::vector<RatVec> S;
  std::vector<DecompositionCell> cells;
};

GoodDecomposition good_decomposition(const RatMatrix& G, const IntVec& d);

// Datum expressed in SNF-adapted bases: L becomes diag(d), G becomes VᵀGV.
TropicalDescentDatum adapted_datum(const TropicalDescentDatum& datum, const PolarizationInfo& info);

struct CellCertificate {
  std::vector<IntVec> ell;  // ℓ^(0) = 0, ℓ^(1..n)
  IntVec a_tilde;           // adapted f'-coordinates
  IntMatrix A;              // rows (b_j + L·a_j) − (b_0 + L·a_0), original e-coordinates
  std::size_t samples = 0;
};

// Certificate for the translate p + σ of a decomposition cell of the adapted Voronoi cell.
CellCertificate cell_certificate(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                 const DecompositionCell& sigma, const IntVec& p);
// Checks a proposed (ℓ, ã) on p + σ; throws CertificateFailed naming the violating (j, ỹ).
CellCertificate verify_cell_certificate(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                        const DecompositionCell& sigma, const IntVec& p,
                                        const std::vector<IntVec>& ell, const IntVec& a_tilde);

}  // namespace tropitheta
