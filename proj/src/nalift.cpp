#include "tropitheta/nalift.hpp"

#include <algorithm>

#include "tropitheta/embedding.hpp"

namespace tropitheta {

namespace {

ValuedMatrix pairing_matrix(const ValuedMatrix& Tmat, const IntMatrix& L) {
  const std::size_t n = L.rows();
  ValuedMatrix S(n, std::vector<ValuedScalar>(n, ValuedScalar::one()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) S[i][j] *= Tmat[k][i].pow(L(k, j));
  return S;
}

void odometer_box(std::size_t n, long radius, const std::function<void(const IntVec&)>& visit) {
  IntVec a(n, Integer(-radius));
  while (true) {
    visit(a);
    std::size_t i = 0;
    while (i < n) {
      if (a[i] < radius) {
        ++a[i];
        break;
      }
      a[i] = -radius;
      ++i;
    }
    if (i == n) return;
  }
}

}  // namespace

NADescentDatum build_na_datum(const TorusPresentation& torus, const IntMatrix& L, const ValuedMatrix& Tmat,
                              const std::vector<ValuedScalar>& cBasis) {
  const std::size_t n = torus.dim();
  require(L.rows() == n && L.cols() == n, ErrorKind::Schema, "L must be n x n");
  require(Tmat.size() == n && cBasis.size() == n, ErrorKind::Schema, "Tmat / cBasis shape mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    require(Tmat[i].size() == n, ErrorKind::Schema, "Tmat must be n x n");
    require(!cBasis[i].is_zero(), ErrorKind::PreconditionViolated, "cBasis entries must be nonzero");
    for (std::size_t j = 0; j < n; ++j) {
      auto v = Tmat[i][j].val();
      require(v.has_value(), ErrorKind::PreconditionViolated, "Tmat entries must be nonzero");
      require(*v == torus.Pmat(i, j), ErrorKind::ValuationMismatch,
              "val(Tmat[" + std::to_string(i) + "][" + std::to_string(j) + "]) != Pmat entry");
    }
  }
  NADescentDatum d{torus, L, Tmat, cBasis, pairing_matrix(Tmat, L)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(d.S[i][j] == d.S[j][i], ErrorKind::AsymmetricPairing, "pairing matrix S is not symmetric");
  return d;
}

ValuedScalar pairing(const NADescentDatum& datum, const IntVec& a, const IntVec& m) {
  const std::size_t n = datum.dim();
  ValuedScalar r = ValuedScalar::one();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer e = m[i] * a[j];
      if (e != 0) r *= datum.Tmat[i][j].pow(e);
    }
  return r;
}

ValuedScalar c_extend(const NADescentDatum& datum, const IntVec& a) {
  const std::size_t n = datum.dim();
  ValuedScalar r = ValuedScalar::one();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) r *= datum.cBasis[i].pow(a[i]);
    Integer tri = a[i] * (a[i] - 1) / 2;
    if (tri != 0) r *= datum.S[i][i].pow(tri);
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer e = a[i] * a[j];
      if (e != 0) r *= datum.S[i][j].pow(e);
    }
  }
  return r;
}

TropicalDescentDatum c_trop(const NADescentDatum& datum) {
  const std::size_t n = datum.dim();
  RatMatrix Pmat = datum.torus.Pmat;
  TropicalDescentDatum base = validate_datum(datum.torus, datum.L, zero_rat_vec(n));
  // γ(e_i) = ½G_ii − ℓ_i
  RatVec ell(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e = zero_int_vec(n);
    e[i] = 1;
    ell[i] = Rational(1, 2) * base.G(i, i) - *c_extend(datum, e).val();
  }
  TropicalDescentDatum td = validate_datum(datum.torus, datum.L, ell);
  // γ(a+b) − γ(a) − γ(b) = aᵀGb, and γ = val ∘ c on a box.
  auto gamma = [&](const IntVec& a) { return *c_extend(datum, a).val(); };
  odometer_box(n, 1, [&](const IntVec& a) {
    odometer_box(n, 1, [&](const IntVec& b) {
      Rational lhs = gamma(a + b) - gamma(a) - gamma(b);
      Rational rhs = bilinear(td.G, to_rational(a), to_rational(b));
      require(lhs == rhs, ErrorKind::NotQuadratic, "val(c) violates the tropical cocycle");
    });
    require(gamma(a) == gamma_eval(td, a), ErrorKind::NotQuadratic, "val(c) is not the quadratic gamma");
  });
  return td;
}

FourierData fourier_lift(const NADescentDatum& datum, const IntVec& b, long radius) {
  require(radius >= 0, ErrorKind::PreconditionViolated, "window radius must be nonnegative");
  const std::size_t n = datum.dim();
  require(b.size() == n, ErrorKind::Schema, "b has wrong dimension");
  TropicalDescentDatum td = c_trop(datum);
  require_polarized(td);
  FourierData fd;
  fd.L = datum.L;
  FourierWindow w;
  w.b = b;
  w.radius = radius;
  w.G = td.G;
  w.linear = transpose(td.Pmat()) * b - td.ell;
  w.constant = 0;
  fd.windows.push_back(w);
  odometer_box(n, radius, [&](const IntVec& a) {
    IntVec u = b + datum.L * a;
    fd.coeffs[u] = c_extend(datum, a) * pairing(datum, a, b);
  });
  return fd;
}

FourierData fourier_sum(const FourierData& a, const FourierData& b) {
  FourierData out = a;
  if (out.L.rows() == 0) out.L = b.L;
  for (const auto& [u, g] : b.coeffs) {
    auto it = out.coeffs.find(u);
    if (it == out.coeffs.end()) {
      out.coeffs.emplace(u, g);
    } else {
      it->second += g;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  }
  for (const auto& w : b.windows) out.windows.push_back(w);
  return out;
}

FourierData fourier_scale(const FourierData& fd, const ValuedScalar& s) {
  require(s.is_monomial(), ErrorKind::PreconditionViolated, "scaling factor must be a monomial");
  FourierData out = fd;
  for (auto& [u, g] : out.coeffs) g = g * s;
  for (auto& w : out.windows) w.constant += *s.val();
  return out;
}

namespace {

// Membership of u in a window: u = b + L·a with |a_i| ≤ radius.
std::optional<IntVec> window_index(const FourierWindow& w, const IntMatrix& L, const IntVec& u) {
  RatVec a = solve(to_rational(L), to_rational(u - w.b));
  if (!is_integral(a)) return std::nullopt;
  for (const auto& x : a)
    if (abs(x) > Rational(w.radius)) return std::nullopt;
  return to_integer(a);
}

}  // namespace

Rational tropicalize_fourier(const FourierData& fd, const RatVec& v) {
  require(!fd.coeffs.empty(), ErrorKind::WindowInsufficient, "empty Fourier data");
  std::optional<Rational> best;
  for (const auto& [u, g] : fd.coeffs) {
    Rational t = dot(u, v) + *g.val();
    if (!best || t < *best) best = t;
  }
  // Outside its box, a window's terms are bounded below via (a−ẑ)ᵀG(a−ẑ) ≥ (a_i−ẑ_i)²/(G⁻¹)_ii.
  for (const auto& w : fd.windows) {
    RatMatrix Ginv = inverse(w.G);
    RatVec h = transpose(to_rational(fd.L)) * v + w.linear;
    RatVec z = Ginv * h;
    for (auto& x : z) x = -x;
    Rational base = dot(w.b, v) + w.constant - Rational(1, 2) * dot(h, Ginv * h);
    std::optional<Rational> gain;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Rational delta = Rational(w.radius + 1) - abs(z[i]);
      Rational g = delta > 0 ? delta * delta / (2 * Ginv(i, i)) : Rational(0);
      if (!gain || g < *gain) gain = g;
    }
    Rational lower = base + *gain;
    if (lower < *best)
      fail(ErrorKind::WindowInsufficient, "window radius " + to_string(w.radius) + " does not certify v = " +
                                              to_string(v));
  }
  return *best;
}

bool check_convergence(const FourierData& fd) {
  for (const auto& w : fd.windows) {
    if (!is_positive_definite(w.G)) return false;
  }
  for (const auto& [u, g] : fd.coeffs) {
    bool matched = false;
    for (const auto& w : fd.windows) {
      auto a = window_index(w, fd.L, u);
      if (!a) continue;
      matched = true;
      Rational expected = quadratic_objective(w.G, w.linear, *a) + w.constant;
      if (*g.val() != expected) return false;
    }
    if (!matched) return false;
  }
  return true;
}

bool verify_na_quasi_periodicity(const FourierData& fd, const NADescentDatum& datum, const IntVec& w) {
  ValuedScalar cw = c_extend(datum, w);
  IntVec shift = datum.L * w;
  std::size_t checked = 0;
  for (const auto& [u, g] : fd.coeffs) {
    auto it = fd.coeffs.find(u + shift);
    if (it == fd.coeffs.end()) continue;
    ++checked;
    if (it->second != g * cw * pairing(datum, w, u)) return false;
  }
  if (checked == 0 && !fd.coeffs.empty())
    fail(ErrorKind::WindowInsufficient, "no coefficient pair lies inside the window");
  return true;
}

namespace {

// Linearity cells of min_b {c_b + θ_b} in the (Q, ℓ) normalization over the domain.
std::vector<Cell> target_cells(const TropicalDescentDatum& td, const std::vector<IntVec>& reps,
                               const std::vector<TropicalNumber>& targets, const Cell& domain) {
  struct Piece {
    IntVec slope;
    Rational intercept;
  };
  std::vector<Piece> pieces;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (!targets[k]) continue;
    ThetaFunction theta{td, reps[k], Convention::QEll};
    for (const auto& a : candidate_pieces(td, reps[k], domain))
      pieces.push_back({piece_slope(td, reps[k], a), piece_intercept(theta, a) + *targets[k]});
  }
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    Cell region = domain;
    for (std::size_t j = 0; j < pieces.size() && region.full_dimensional(); ++j) {
      if (j == k) continue;
      if (pieces[j].slope == pieces[k].slope && pieces[j].intercept == pieces[k].intercept && j < k) {
        region = Cell::empty(domain.ambient());
        break;
      }
      region = region.clip({to_rational(pieces[k].slope - pieces[j].slope), pieces[j].intercept - pieces[k].intercept});
    }
    if (region.full_dimensional()) cells.push_back(region);
  }
  return cells;
}

}  // namespace

SurjectiveLiftResult surjective_lift(const NADescentDatum& datum, const std::vector<TropicalNumber>& targets,
                                     long radius) {
  TropicalDescentDatum td = c_trop(datum);
  PolarizationInfo info = polarization_type(td);
  const std::size_t D = info.reps.size();
  require(targets.size() == D, ErrorKind::Schema, "one target per representative is required");
  require(std::any_of(targets.begin(), targets.end(), [](const TropicalNumber& t) { return t.has_value(); }),
          ErrorKind::PreconditionViolated, "at least one finite target is required");

  SurjectiveLiftResult res;
  res.reps = info.reps;
  ThetaCombination comb;
  for (std::size_t k = 0; k < D; ++k)
    comb.terms.push_back({targets[k], ThetaFunction{td, info.reps[k], Convention::QEll}});
  // The lifts tropicalize to (λ, γ) thetas; shift each into the (Q, ℓ) normalization.
  std::vector<Rational> shift(D, Rational(0));
  for (std::size_t k = 0; k < D; ++k)
    if (targets[k]) shift[k] = *targets[k] + q_ell_constant(td, info.reps[k]);

  std::vector<RatVec> points;
  if (td.dim() <= 2) {
    res.target_cells = target_cells(td, info.reps, targets, fundamental_domain(td));
    for (const auto& c : res.target_cells)
      for (const auto& p : c.interior_samples(3)) points.push_back(p);
  } else {
    points = fundamental_grid(td, 6);
  }

  std::vector<FourierData> lifts(D);
  for (std::size_t k = 0; k < D; ++k)
    if (targets[k]) lifts[k] = fourier_lift(datum, info.reps[k], radius);

  // Residues λ_b: slot-wise 1, 2, 3, … until no leading coefficient cancels at any sample.
  const std::size_t max_attempts = 16;
  std::vector<Rational> residues(D, Rational(0));
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    res.attempts = attempt + 1;
    for (std::size_t k = 0; k < D; ++k)
      residues[k] = targets[k] ? Rational(static_cast<long>(1 + (attempt + k) % (attempt + 1))) : Rational(0);
    FourierData total;
    for (std::size_t k = 0; k < D; ++k) {
      if (!targets[k]) continue;
      total = fourier_sum(total, fourier_scale(lifts[k], ValuedScalar::monomial(residues[k], shift[k])));
    }
    bool cancelled = false;
    for (std::size_t k = 0; k < D && !cancelled; ++k) {
      if (!targets[k]) continue;
      for (const auto& [u, g] : lifts[k].coeffs) {
        auto it = total.coeffs.find(u);
        if (it == total.coeffs.end() || *it->second.val() != *g.val() + shift[k]) {
          cancelled = true;
          break;
        }
      }
    }
    if (cancelled) continue;
    std::vector<LiftSample> samples;
    bool ok = true;
    for (const auto& v : points) {
      Rational target = *min_plus_eval(comb, v);
      Rational lifted = tropicalize_fourier(total, v);
      samples.push_back({v, target, lifted});
      ok = ok && target == lifted;
    }
    res.fd = std::move(total);
    res.samples = std::move(samples);
    res.residues = residues;
    res.verified = ok;
    return res;
  }
  fail(ErrorKind::ResidueCancellation, "no residue choice avoided cancellation");
}

NADescentDatum divide_datum(const NADescentDatum& datum, const Integer& d1) {
  require(d1 >= 1, ErrorKind::PreconditionViolated, "divisor must be positive");
  if (d1 == 1) return datum;
  TropicalDescentDatum td = c_trop(datum);
  PolarizationInfo info = polarization_type(td);
  require(info.type[0] % d1 == 0, ErrorKind::PreconditionViolated, "divisor does not divide the type");
  const std::size_t n = datum.dim();
  IntMatrix L1(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) L1(i, j) = datum.L(i, j) / d1;

  // α_ij² = t(f'_i, λ₁(f'_j)); l(f'_i) = c(f'_i)^{1/d₁}·α_ii⁻¹; c₁ = l·√t(·, λ₁·).
  ValuedMatrix S1 = pairing_matrix(datum.Tmat, L1);
  ValuedMatrix alpha(n, std::vector<ValuedScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) alpha[i][j] = alpha[j][i] = S1[i][j].root(2);
  const unsigned long k = d1.get_ui();
  std::vector<ValuedScalar> c1(n);
  for (std::size_t i = 0; i < n; ++i) {
    ValuedScalar l = datum.cBasis[i].root(k) * alpha[i][i].inverse();
    c1[i] = l * alpha[i][i];
  }
  NADescentDatum out = build_na_datum(datum.torus, L1, datum.Tmat, c1);
  for (std::size_t i = 0; i < n; ++i)
    require(c1[i].pow(d1) == datum.cBasis[i], ErrorKind::InternalInvariantViolated, "c1^d1 != c on a basis vector");
  odometer_box(n, 2, [&](const IntVec& a) {
    require(c_extend(out, a).pow(d1) == c_extend(datum, a), ErrorKind::InternalInvariantViolated,
            "c1^d1 != c on the extension");
  });
  return out;
}

}  // namespace tropitheta
