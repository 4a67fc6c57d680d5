#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tropitheta/polytope.hpp"
#include "tropitheta/theta.hpp"

namespace tropitheta {

struct ThetaPiece {
  IntVec a;
  IntVec slope;
  Rational intercept;
  Cell region;  // where this piece attains θ_b on the domain
};

// Every a whose affine piece of θ_b can attain the minimum somewhere on the domain.
std::vector<IntVec> candidate_pieces(const TropicalDescentDatum& datum, const IntVec& b, const Cell& domain);
// Full-dimensional linearity regions of θ_b on the domain.
std::vector<ThetaPiece> theta_pieces(const ThetaFunction& theta, const Cell& domain);

struct AffineCell {
  Cell cell;
  std::vector<IntVec> argmins;  // a^(σ)(i) per representative
  IntMatrix A;                  // (D−1)×n
  RatVec offset;                // c^(σ)
};

struct PiecewiseAffineMap {
  Cell domain;
  std::vector<IntVec> reps;
  std::vector<AffineCell> cells;
};

Cell fundamental_domain(const TropicalDescentDatum& datum);

// (θ_{b_i}(x) − θ_{b_0}(x))_{i ≥ 1}, (Q, ℓ) normalization.
RatVec phi_eval(const TropicalDescentDatum& datum, const PolarizationInfo& info, const RatVec& x);

PiecewiseAffineMap linearity_cells(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                   const Cell& domain);
PiecewiseAffineMap linearity_cells(const TropicalDescentDatum& datum, const PolarizationInfo& info);

std::vector<IntMatrix> cell_matrices(const PiecewiseAffineMap& map);

struct UnimodularReport {
  std::vector<bool> per_cell;
  bool overall = false;
};

UnimodularReport check_unimodular(const PiecewiseAffineMap& map);

enum class InjectivityVerdict { Certified, Refuted, SampledOk };
const char* verdict_name(InjectivityVerdict v);

struct InjectivityResult {
  InjectivityVerdict verdict = InjectivityVerdict::SampledOk;
  std::optional<std::pair<RatVec, RatVec>> witness;
  std::string mode;
  long resolution = 0;
  std::size_t comparisons = 0;
};

enum class InjectivityMode { Exact1d, Grid };

InjectivityResult check_injective(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                  InjectivityMode mode, long resolution = 20);

struct ImageEdge {
  IntVec direction;  // primitive
  Rational lattice_length;
};

struct ImageComplex {
  std::vector<Rational> parameters;  // x at each vertex
  std::vector<RatVec> vertices;
  std::vector<ImageEdge> edges;      // edge k joins vertex k to vertex k+1 (cyclically)
  bool degenerate = false;
};

ImageComplex image_complex_1d(const TropicalDescentDatum& datum, const PolarizationInfo& info);

struct FaithfulOptions {
  long resolution = 20;
  // Defaults to Exact1d for n = 1 and Grid otherwise.
  std::optional<InjectivityMode> mode;
};

struct FaithfulReport {
  bool unimodular = false;
  std::vector<bool> per_cell;
  std::string unimodular_method;  // "exact-cells" or "sampled"
  InjectivityResult injective;
  bool faithful = false;
  std::size_t cells = 0;
};

FaithfulReport faithful_certificate(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                    const FaithfulOptions& options = {});

// Grid points Pmat·t, t ∈ {0, 1/N, …, (N−1)/N}ⁿ.
std::vector<RatVec> fundamental_grid(const TropicalDescentDatum& datum, long resolution);

}  // namespace tropitheta
