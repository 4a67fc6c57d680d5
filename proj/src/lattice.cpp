#include "tropitheta/lattice.hpp"

#include <algorithm>

namespace tropitheta {

Rational quadratic_objective(const RatMatrix& G, const RatVec& h, const IntVec& a) {
  RatVec ar = to_rational(a);
  return Rational(1, 2) * bilinear(G, ar, ar) + dot(h, ar);
}

Integer ceil_sqrt(const Rational& value) {
  if (value <= 0) return 0;
  Integer k;
  Integer c = ceil(value);
  mpz_sqrt(k.get_mpz_t(), c.get_mpz_t());
  while (Rational(k * k) < value) ++k;
  while (k > 0 && Rational((k - 1) * (k - 1)) >= value) --k;
  return k;
}

namespace {

LdltResult definite_ldlt(const RatMatrix& G) {
  require(is_symmetric(G), ErrorKind::NotPolarization, "Gram matrix is not symmetric");
  LdltResult f = ldlt(G);
  require(f.positive_definite, ErrorKind::NotPolarization, "Gram matrix is not positive-definite");
  return f;
}

struct Enumerator {
  const LdltResult& f;
  const RatVec& center;
  std::size_t n;
  IntVec a;
  RatVec z;  // a − center
  const std::function<bool(const IntVec&, const Rational&, Rational&)>& visit;
  Rational bound;

  // Level j: coordinates j+1..n−1 are fixed, partial is the accumulated sum.
  void run(std::size_t level, const Rational& partial) {
    const std::size_t j = level;
    Rational shift = 0;
    for (std::size_t i = j + 1; i < n; ++i) shift += f.L(i, j) * z[i];
    // Minimizing coordinate: z_j = −shift, i.e. a_j = center_j − shift.
    Rational c = center[j] - shift;
    const Rational& d = f.D[j];
    Integer start = round_nearest(c);
    // Walk outward from the center; the level term is convex in a_j so each side is contiguous.
    for (int dir = 0; dir < 2; ++dir) {
      for (Integer v = dir == 0 ? start : Integer(start - 1);; dir == 0 ? ++v : --v) {
        Rational t = Rational(v) - c;
        Rational q = partial + d * t * t;
        if (q > bound) break;
        a[j] = v;
        z[j] = Rational(v) - center[j];
        if (j == 0) {
          visit(a, q, bound);
        } else {
          run(j - 1, q);
        }
      }
    }
  }
};

void enumerate_impl(const LdltResult& f, const RatVec& center, const Rational& bound,
                    const std::function<bool(const IntVec&, const Rational&, Rational&)>& visit) {
  const std::size_t n = center.size();
  if (n == 0) return;
  Enumerator e{f, center, n, zero_int_vec(n), zero_rat_vec(n), visit, bound};
  e.run(n - 1, Rational(0));
}

}  // namespace

void enumerate_ellipsoid(const RatMatrix& G, const RatVec& center, const Rational& bound,
                         const std::function<void(const IntVec&, const Rational&)>& visit) {
  LdltResult f = definite_ldlt(G);
  enumerate_impl(f, center, bound, [&](const IntVec& a, const Rational& q, Rational&) {
    visit(a, q);
    return true;
  });
}

ArgminResult lattice_argmin(const RatMatrix& G, const RatVec& h) {
  const std::size_t n = h.size();
  require(G.rows() == n && G.cols() == n, ErrorKind::Schema, "argmin shape mismatch");
  LdltResult f = definite_ldlt(G);
  // ½aᵀGa + h·a = ½(a−â)ᵀG(a−â) − ½âᵀGâ with â = −G⁻¹h.
  RatVec center = solve(G, h);
  for (auto& x : center) x = -x;

  IntVec incumbent(n);
  for (std::size_t i = 0; i < n; ++i) incumbent[i] = round_nearest(center[i]);
  RatVec dz = to_rational(incumbent) - center;
  Rational bound = bilinear(G, dz, dz);

  std::vector<IntVec> best;
  Rational best_q = bound;
  enumerate_impl(f, center, bound, [&](const IntVec& a, const Rational& q, Rational& live_bound) {
    if (q < best_q) {
      best_q = q;
      best.clear();
      live_bound = q;
    }
    if (q == best_q) best.push_back(a);
    return true;
  });
  require(!best.empty(), ErrorKind::InternalInvariantViolated, "enumeration lost the incumbent");
  std::sort(best.begin(), best.end());
  ArgminResult r;
  r.value = quadratic_objective(G, h, best.front());
  r.tie = best.size() > 1;
  r.minimizers = std::move(best);
  return r;
}

BruteForceResult brute_force_argmin_unchecked(const RatMatrix& G, const RatVec& h, long radius) {
  const std::size_t n = h.size();
  require(radius >= 1, ErrorKind::PreconditionViolated, "radius must be at least 1");
  require(G.rows() == n && G.cols() == n, ErrorKind::Schema, "argmin shape mismatch");
  RatMatrix Ginv = inverse(G);
  RatVec center = Ginv * h;
  for (auto& x : center) x = -x;
  IntVec mid(n);
  for (std::size_t i = 0; i < n; ++i) mid[i] = round_nearest(center[i]);

  BruteForceResult out;
  std::vector<IntVec> best;
  Rational best_v;
  IntVec off(n, Integer(-radius));
  while (true) {
    IntVec a = mid + off;
    Rational v = quadratic_objective(G, h, a);
    if (best.empty() || v < best_v) {
      best_v = v;
      best.assign(1, a);
    } else if (v == best_v) {
      best.push_back(a);
    }
    std::size_t i = 0;
    while (i < n) {
      if (off[i] < radius) {
        ++off[i];
        break;
      }
      off[i] = -radius;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(best.begin(), best.end());
  out.argmin.value = best_v;
  out.argmin.tie = best.size() > 1;
  out.argmin.minimizers = std::move(best);

  // Every minimizer satisfies (a−â)ᵀG(a−â) ≤ R := (mid−â)ᵀG(mid−â), hence
  // (a_i − â_i)² ≤ R·(G⁻¹)_ii. Leaving the box forces |a_i − â_i| ≥ radius + ½.
  RatVec dz = to_rational(mid) - center;
  Rational R = bilinear(G, dz, dz);
  Rational reach = Rational(radius) + Rational(1, 2);
  out.certified = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!(reach * reach > R * Ginv(i, i))) out.certified = false;
  return out;
}

ArgminResult brute_force_argmin(const RatMatrix& G, const RatVec& h, long radius) {
  require(is_positive_definite(G), ErrorKind::NotPolarization, "Gram matrix is not positive-definite");
  BruteForceResult r = brute_force_argmin_unchecked(G, h, radius);
  require(r.certified, ErrorKind::WindowInsufficient, "search box is not certified to contain all minimizers");
  return r.argmin;
}

}  // namespace tropitheta
