#include "tropitheta/voronoi.hpp"

#include <algorithm>
#include <set>

namespace tropitheta {

namespace {

void require_pd(const RatMatrix& G) {
  require(is_positive_definite(G), ErrorKind::NotPolarization, "Gram matrix is not positive-definite");
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

std::vector<IntVec> relevant_vectors(const RatMatrix& G) {
  require_pd(G);
  const std::size_t n = G.rows();
  std::vector<IntVec> out;
  // v is relevant iff ±v are the only shortest vectors of the coset v + 2ℤⁿ.
  IntVec c = zero_int_vec(n);
  while (true) {
    std::size_t i = 0;
    while (i < n && c[i] == 1) c[i++] = 0;
    if (i == n) break;
    c[i] = 1;
    // ½(c+2a)ᵀG(c+2a) = 2aᵀGa + 2(Gc)·a + const
    RatVec cr = to_rational(c);
    ArgminResult r = lattice_argmin(scale(Rational(4), G), Rational(2) * (G * cr));
    if (r.minimizers.size() == 2)
      for (const auto& a : r.minimizers) out.push_back(c + Integer(2) * a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VoronoiCell voronoi_cell(const RatMatrix& G) {
  VoronoiCell cell;
  cell.relevant = relevant_vectors(G);
  for (const auto& v : cell.relevant) {
    RatVec vr = to_rational(v);
    cell.halfspaces.push_back({G * vr, Rational(1, 2) * bilinear(G, vr, vr)});
  }
  return cell;
}

Cell voronoi_polytope(const RatMatrix& G) {
  const std::size_t n = G.rows();
  require(n >= 1 && n <= 2, ErrorKind::DimensionUnsupported, "Voronoi polytopes are limited to n <= 2");
  VoronoiCell vc = voronoi_cell(G);
  // The cell lies within the covering radius, whose square is at most ¼Σ|G_ij|.
  RatMatrix Ginv = inverse(G);
  Rational cover = 0;
  for (const auto& g : G.entries()) cover += abs(g);
  cover /= 4;
  RatVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational reach = Rational(ceil_sqrt(cover * Ginv(i, i)) + 1);
    lo[i] = -reach;
    hi[i] = reach;
  }
  Cell c = Cell::box(lo, hi);
  for (const auto& h : vc.halfspaces) c = c.clip(h);
  require(c.full_dimensional(), ErrorKind::InternalInvariantViolated, "Voronoi cell is degenerate");
  return c;
}

bool in_cell(const RatMatrix& G, const RatVec& x) {
  for (const auto& h : voronoi_cell(G).halfspaces)
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

ArgminResult closest_point(const RatMatrix& G, const RatVec& x) {
  require_pd(G);
  RatVec h = G * x;
  for (auto& v : h) v = -v;
  return lattice_argmin(G, h);
}

std::vector<RatVec> half_period_system(const RatMatrix& G, const RatVec& x) {
  const std::size_t n = G.rows();
  require(in_cell(G, x), ErrorKind::PreconditionViolated, "point is not in the Voronoi cell");
  std::vector<RatVec> qs;
  IntVec t = zero_int_vec(n);
  while (true) {
    std::size_t i = 0;
    while (i < n && t[i] == 1) t[i++] = 0;
    if (i == n) break;
    t[i] = 1;
    RatVec shifted = x + Rational(1, 2) * to_rational(t);
    ArgminResult near = closest_point(G, shifted);
    RatVec y = shifted - to_rational(near.minimizers.front());
    qs.push_back(y - x);
  }
  std::vector<std::size_t> idx = independent_columns(qs);
  require(idx.size() == n, ErrorKind::InternalInvariantViolated, "half periods do not span");
  std::vector<RatVec> out;
  for (auto k : idx) out.push_back(qs[k]);
  return out;
}

namespace {

// Basis of (1/(n−1)!)ℤⁿ inside conv(0, q₁, …, q_n), q's integral and independent.
std::vector<RatVec> simplex_basis_factorial(const std::vector<IntVec>& q) {
  const std::size_t n = q.size();
  if (n == 1) return {RatVec{Rational(q[0][0] > 0 ? 1 : -1)}};

  // Saturated lattice of span(q₁..q_{n−1}): first n−1 columns of W = U⁻¹ from the SNF.
  IntMatrix Q(n, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t i = 0; i < n; ++i) Q(i, j) = q[j][i];
  SmithDecomposition s = snf(Q);
  RatMatrix W = inverse(to_rational(s.U));
  RatMatrix Winv = to_rational(s.U);

  std::vector<IntVec> sub(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    IntVec c = to_integer(Winv * to_rational(q[j]));
    require(c[n - 1] == 0, ErrorKind::InternalInvariantViolated, "saturation basis mismatch");
    sub[j] = IntVec(c.begin(), c.end() - 1);
  }
  std::vector<RatVec> inner = simplex_basis_factorial(sub);

  std::vector<RatVec> qq;
  for (const auto& coords : inner) {
    RatVec full = coords;
    full.push_back(0);
    qq.push_back(W * full);
  }
  Rational inv_fact = Rational(1) / Rational(factorial(n - 2));
  qq.push_back(inv_fact * W.col(n - 1));

  RatVec w = solve(RatMatrix::from_columns(qq, n), to_rational(q[n - 1]));
  require(is_integral(w), ErrorKind::InternalInvariantViolated, "q_n is not in the scaled lattice");
  if (w[n - 1] < 0) {
    qq[n - 1] = Rational(-1) * qq[n - 1];
    w[n - 1] = -w[n - 1];
  }
  Integer wn = w[n - 1].get_num();
  require(wn != 0, ErrorKind::PreconditionViolated, "q vectors are dependent");

  // Shear so that w'_i = w_i + h_i·w_n ∈ (0, w_n].
  RatVec last = qq[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Integer wi = w[i].get_num();
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), Integer(wi - 1).get_mpz_t(), wn.get_mpz_t());
    Integer wprime = r + 1;
    Integer h = (wprime - wi) / wn;
    // ψ⁻¹(q^(n)) = q^(n) − Σ h_i q^(i)
    last = last - Rational(h) * qq[i];
  }
  Rational inv = Rational(1, static_cast<long>(n - 1));
  std::vector<RatVec> p;
  RatVec sum = last;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    p.push_back(inv * qq[j]);
    sum = sum + qq[j];
  }
  p.push_back(inv * sum);
  return p;
}

}  // namespace

std::vector<RatVec> basis_in_simplex(const std::vector<IntVec>& q, const Rational& r) {
  const std::size_t n = q.size();
  require(n >= 1, ErrorKind::PreconditionViolated, "need at least one vector");
  for (const auto& v : q) require(v.size() == n, ErrorKind::PreconditionViolated, "q vectors must be n-dimensional");
  std::vector<RatVec> qr;
  for (const auto& v : q) qr.push_back(to_rational(v));
  require(rank(RatMatrix::from_columns(qr, n)) == n, ErrorKind::PreconditionViolated, "q vectors are dependent");
  Rational fact = Rational(factorial(n - 1));
  require(r >= fact, ErrorKind::PreconditionViolated, "r must be at least (n-1)!");
  std::vector<RatVec> p = simplex_basis_factorial(q);
  Rational s = fact / r;
  for (auto& v : p) v = s * v;
  return p;
}

GoodDecomposition good_decomposition(const RatMatrix& G, const IntVec& d) {
  const std::size_t n = G.rows();
  require(n >= 1 && n <= 2, ErrorKind::DimensionUnsupported, "good decompositions are limited to n <= 2");
  require(d.size() == n, ErrorKind::PreconditionViolated, "type has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    require(d[i] > 0, ErrorKind::PreconditionViolated, "type entries must be positive");
    if (i + 1 < n) require(d[i + 1] % d[i] == 0, ErrorKind::PreconditionViolated, "type must form a divisibility chain");
  }
  require(d[0] >= 2 * factorial(n - 1), ErrorKind::PreconditionViolated, "d_1 must be at least 2(n-1)!");
  require_pd(G);

  GoodDecomposition out;
  out.G = G;
  out.d = d;
  out.voronoi = voronoi_polytope(G);
  const Rational diam2 = out.voronoi.squared_diameter(G);

  // 𝖲 = {s ∈ ½ℤⁿ : [s, s] ≤ diam²}, enumerated as k = 2s.
  enumerate_ellipsoid(G, zero_rat_vec(n), 4 * diam2, [&](const IntVec& k, const Rational&) {
    out.S.push_back(Rational(1, 2) * to_rational(k));
  });
  std::sort(out.S.begin(), out.S.end());

  std::vector<Cell> cells{out.voronoi};
  for (const auto& s : out.S) {
    std::vector<RatVec> shifts;
    // Translates p − s + V meeting V have [p − s, p − s] ≤ (2·covering radius)² ≤ 4·diam².
    enumerate_ellipsoid(G, s, 4 * diam2, [&](const IntVec& p, const Rational&) {
      shifts.push_back(to_rational(p) - s);
    });
    std::vector<Cell> next;
    for (const auto& c : cells)
      for (const auto& t : shifts) {
        Cell piece = c.intersect(out.voronoi.translate(t));
        if (piece.full_dimensional()) next.push_back(piece);
      }
    cells = std::move(next);
  }

  const Integer d1 = d[0];
  const Rational r = Rational(d1, 2);
  for (const auto& c : cells) {
    DecompositionCell dc;
    dc.cell = c;
    dc.interior = c.centroid();
    dc.q = half_period_system(G, dc.interior);
    // ½ℤⁿ-coordinates scaled into P' = ⊕ ℤ·p_i/(2δ_i).
    std::vector<IntVec> k;
    for (const auto& qv : dc.q) {
      IntVec kv(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational x = qv[i] * Rational(2 * (d[i] / d1));
        kv[i] = x.get_num();
        require(is_integer(x), ErrorKind::InternalInvariantViolated, "half period outside P'");
      }
      k.push_back(kv);
    }
    std::vector<RatVec> pprime = basis_in_simplex(k, r);
    for (const auto& pv : pprime) {
      RatVec lat(n);
      IntVec ell(n);
      for (std::size_t i = 0; i < n; ++i) {
        lat[i] = pv[i] / Rational(2 * (d[i] / d1));
        Rational li = lat[i] * Rational(d[i]);
        require(is_integer(li), ErrorKind::InternalInvariantViolated, "basis vector outside the d-scaled lattice");
        ell[i] = li.get_num();
      }
      require(out.voronoi.contains(c.translate(lat)), ErrorKind::CertificateFailed,
              "basis vector translate leaves the Voronoi cell");
      dc.basis.push_back(lat);
      dc.ell.push_back(ell);
    }
    IntMatrix E(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) E(i, j) = dc.ell[j][i];
    require(abs(determinant(E)) == 1, ErrorKind::CertificateFailed, "ell vectors are not a basis");
    out.cells.push_back(std::move(dc));
  }
  return out;
}

TropicalDescentDatum adapted_datum(const TropicalDescentDatum& datum, const PolarizationInfo& info) {
  RatMatrix Uinv_t = transpose(inverse(to_rational(info.U)));
  RatMatrix Vr = to_rational(info.V);
  TorusPresentation torus = build_torus(Uinv_t * datum.Pmat() * Vr);
  IntMatrix L = info.U * datum.L * info.V;
  RatVec ell = transpose(Vr) * datum.ell;
  return validate_datum(torus, L, ell);
}

CellCertificate verify_cell_certificate(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                        const DecompositionCell& sigma, const IntVec& p,
                                        const std::vector<IntVec>& ell, const IntVec& a_tilde) {
  require_polarized(datum);
  require(is_zero(datum.ell), ErrorKind::PreconditionViolated, "certificates are stated for ell = 0");
  const std::size_t n = datum.dim();
  require(ell.size() == n + 1 && is_zero(ell[0]), ErrorKind::PreconditionViolated, "need ell^(0) = 0 and n more");
  IntMatrix Uinv = to_integer(inverse(to_rational(info.U)));
  RatMatrix Ut = transpose(to_rational(info.U));
  TropicalDescentDatum ad = adapted_datum(datum, info);
  IntVec a_orig = info.V * a_tilde;

  CellCertificate cert;
  cert.ell = ell;
  cert.a_tilde = a_tilde;

  std::vector<RatVec> samples = sigma.cell.vertices();
  for (const auto& s : sigma.cell.interior_samples(5)) samples.push_back(s);
  for (const auto& y : samples) {
    RatVec ytilde = to_rational(p) + y;
    RatVec x_adapted = ad.Pmat() * ytilde;
    RatVec x_orig = Ut * x_adapted;
    for (std::size_t j = 0; j <= n; ++j) {
      // Adapted bases: argmin ξ_ℓ(ỹ) = argmin θ_{b_ℓ}; checked again in the original bases.
      ThetaEvaluation ev = theta_evaluate(ThetaFunction{ad, ell[j], Convention::QEll}, x_adapted);
      ThetaEvaluation ev_orig = theta_evaluate(ThetaFunction{datum, Uinv * ell[j], Convention::QEll}, x_orig);
      bool ok = std::binary_search(ev.argmin.minimizers.begin(), ev.argmin.minimizers.end(), a_tilde) &&
                std::binary_search(ev_orig.argmin.minimizers.begin(), ev_orig.argmin.minimizers.end(), a_orig);
      if (!ok)
        fail(ErrorKind::CertificateFailed,
             "shared argmin fails for j = " + std::to_string(j) + " at y = " + to_string(ytilde));
    }
    ++cert.samples;
  }

  IntMatrix E(n, n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < n; ++i) E(i, j - 1) = ell[j][i] - ell[0][i];
  if (abs(determinant(E)) != 1) fail(ErrorKind::CertificateFailed, "ell^(1..n) is not a basis of Z^n");

  cert.A = IntMatrix(n, n);
  IntVec base = Uinv * ell[0] + datum.L * a_orig;
  for (std::size_t j = 1; j <= n; ++j) {
    IntVec row = Uinv * ell[j] + datum.L * a_orig - base;
    for (std::size_t i = 0; i < n; ++i) cert.A(j - 1, i) = row[i];
  }
  return cert;
}

CellCertificate cell_certificate(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                 const DecompositionCell& sigma, const IntVec& p) {
  std::vector<IntVec> ell{zero_int_vec(datum.dim())};
  for (const auto& e : sigma.ell) ell.push_back(e);
  return verify_cell_certificate(datum, info, sigma, p, ell, -p);
}

}  // namespace tropitheta
