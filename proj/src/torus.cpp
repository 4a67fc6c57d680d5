#include "tropitheta/torus.hpp"

namespace tropitheta {

TorusPresentation build_torus(const RatMatrix& Pmat) {
  require(Pmat.square(), ErrorKind::Schema, "period matrix must be square");
  require(Pmat.rows() > 0, ErrorKind::Schema, "period matrix must be nonempty");
  require(determinant(Pmat) != 0, ErrorKind::SingularEmbedding, "period matrix is singular");
  return {Pmat};
}

TropicalDescentDatum validate_datum(const TorusPresentation& torus, const IntMatrix& L, const RatVec& ell) {
  const std::size_t n = torus.dim();
  require(L.rows() == n && L.cols() == n, ErrorKind::Schema, "L must be n x n");
  require(ell.size() == n, ErrorKind::Schema, "ell must have n entries");
  RatMatrix G = transpose(to_rational(L)) * torus.Pmat;
  require(is_symmetric(G), ErrorKind::NotSymmetric, "G = L^T Pmat is not symmetric");
  TropicalDescentDatum d{torus, L, ell, G, false};
  d.positive_definite = ldlt(G).positive_definite;
  return d;
}

TropicalDescentDatum datum_from_Q(const TorusPresentation& torus, const RatMatrix& G, const RatVec& ell) {
  const std::size_t n = torus.dim();
  require(G.rows() == n && G.cols() == n, ErrorKind::Schema, "G must be n x n");
  require(is_symmetric(G), ErrorKind::NotSymmetric, "G is not symmetric");
  RatMatrix Lr = transpose(inverse(torus.Pmat)) * G;
  require(is_integral(Lr), ErrorKind::NonIntegerLambda, "Pmat^-T G is not integral");
  return validate_datum(torus, to_integer(Lr), ell);
}

void require_polarized(const TropicalDescentDatum& datum) {
  require(datum.positive_definite, ErrorKind::NotPolarization, "G is not positive-definite");
}

PolarizationInfo polarization_type(const TropicalDescentDatum& datum) {
  require_polarized(datum);
  const std::size_t n = datum.dim();
  SmithDecomposition s = snf(datum.L);
  PolarizationInfo info;
  info.type = s.invariant_factors();
  info.U = s.U;
  info.V = s.V;
  info.D = 1;
  for (const auto& d : info.type) info.D *= d;

  // M/λ(M') ≅ ⊕ ℤ/d_i via m ↦ U·m, so representatives are U⁻¹·(box vectors).
  IntMatrix Uinv = to_integer(inverse(to_rational(s.U)));
  IntVec box = zero_int_vec(n);
  while (true) {
    info.reps.push_back(Uinv * box);
    std::size_t i = n;
    while (i > 0) {
      --i;
      box[i] += 1;
      if (box[i] < info.type[i]) break;
      box[i] = 0;
      if (i == 0) return info;
    }
    if (n == 0) return info;
  }
}

Rational gamma_eval(const TropicalDescentDatum& datum, const IntVec& a) {
  RatVec ar = to_rational(a);
  return Rational(1, 2) * bilinear(datum.G, ar, ar) - dot(datum.ell, ar);
}

RatVec ell_point(const TropicalDescentDatum& datum) {
  require_polarized(datum);
  return solve(datum.G, datum.ell);
}

Rational Q_form(const TropicalDescentDatum& datum, const RatVec& x, const RatVec& y) {
  RatVec yf = solve(datum.Pmat(), y);
  return dot(x, to_rational(datum.L) * yf);
}

bool congruent_mod_lambda(const IntMatrix& L, const IntVec& b1, const IntVec& b2) {
  RatVec a = solve(to_rational(L), to_rational(b1 - b2));
  return is_integral(a);
}

}  // namespace tropitheta
