#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "tropitheta/nalift.hpp"
#include "tropitheta/theta.hpp"

namespace oracle {

using namespace tropitheta;

template <class T>
T leibniz_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = 0;
  do {
    T term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? T(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Invariant factors from determinantal divisors: Δ_k = gcd of k×k minors, d_k = Δ_k / Δ_{k−1}.
inline IntVec minor_gcd_factors(const IntMatrix& A) {
  const std::size_t r = std::min(A.rows(), A.cols());
  IntVec out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    combinations(A.rows(), k, [&](const std::vector<std::size_t>& rows) {
      combinations(A.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = A(rows[i], cols[j]);
        Integer d = leibniz_det(sub);
        g = gcd(g, d);
      });
    });
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? Integer(0) : Integer(g / prev));
    prev = g;
  }
  return out;
}

inline RatMatrix adjugate_inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  Rational det = leibniz_det(m);
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Rational cof = leibniz_det(minor);
      inv(i, j) = ((i + j) % 2 ? Rational(-cof) : cof) / det;
    }
  return inv;
}

inline void box(const IntVec& center, long radius, const std::function<void(const IntVec&)>& f) {
  const std::size_t n = center.size();
  IntVec a(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      f(a);
      return;
    }
    for (long k = -radius; k <= radius; ++k) {
      a[i] = center[i] + k;
      rec(i + 1);
    }
  };
  rec(0);
}

struct NaiveArgmin {
  std::vector<IntVec> minimizers;
  Rational value;
};

inline Rational objective(const RatMatrix& G, const RatVec& h, const IntVec& a) {
  const std::size_t n = a.size();
  Rational q = 0, lin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lin += h[i] * a[i];
    for (std::size_t j = 0; j < n; ++j) q += Rational(a[i] * a[j]) * G(i, j);
  }
  return q / 2 + lin;
}

// Box search whose radius comes from λ_min ≥ 1/tr(G⁻¹).
inline NaiveArgmin naive_argmin(const RatMatrix& G, const RatVec& h) {
  const std::size_t n = G.rows();
  RatMatrix Ginv = adjugate_inverse(G);
  RatVec z(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z[i] -= Ginv(i, j) * h[j];
  IntVec c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = round_nearest(z[i]);
  Rational fmin = 0;
  for (std::size_t i = 0; i < n; ++i) fmin += h[i] * z[i];
  fmin /= 2;
  Rational trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += Ginv(i, i);
  Rational slack = objective(G, h, c) - fmin;
  long radius = static_cast<long>(std::ceil(std::sqrt(Rational(2 * slack * trace).get_d()))) + 2;
  NaiveArgmin best;
  bool first = true;
  box(c, radius, [&](const IntVec& a) {
    Rational v = objective(G, h, a);
    if (first || v < best.value) {
      best.value = v;
      best.minimizers.clear();
      first = false;
    }
    if (v == best.value) best.minimizers.push_back(a);
  });
  std::sort(best.minimizers.begin(), best.minimizers.end());
  return best;
}

// v is relevant iff ±v are the strictly shortest vectors of v + 2ℤⁿ (searched over a box).
inline std::vector<IntVec> naive_relevant(const RatMatrix& G, long radius) {
  const std::size_t n = G.rows();
  auto norm = [&](const IntVec& v) { return objective(G, RatVec(n, Rational(0)), v); };
  std::vector<IntVec> out;
  box(zero_int_vec(n), radius, [&](const IntVec& v) {
    if (is_zero(v)) return;
    Rational nv = norm(v);
    bool relevant = true;
    box(zero_int_vec(n), radius, [&](const IntVec& w) {
      if (!relevant) return;
      IntVec u = v - Integer(2) * w;
      if (u == v || u == -v) return;
      if (norm(u) <= nv) relevant = false;
    });
    if (relevant) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Defining minimum of θ_b over |a_i| ≤ radius, evaluated term by term.
inline Rational naive_theta(const TropicalDescentDatum& d, const IntVec& b, const RatVec& x, Convention conv,
                            long radius) {
  const std::size_t n = d.dim();
  std::optional<Rational> best;
  box(zero_int_vec(n), radius, [&](const IntVec& a) {
    Rational v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Integer m = b[i];
      for (std::size_t j = 0; j < n; ++j) m += d.L(i, j) * a[j];
      v += m * x[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      v -= d.ell[i] * a[i];
      for (std::size_t j = 0; j < n; ++j) {
        v += Rational(a[i] * a[j]) * d.G(i, j) / 2;
        v += Rational(b[i] * a[j]) * d.Pmat()(i, j);
      }
    }
    if (!best || v < *best) best = v;
  });
  if (conv == Convention::QEll) {
    // ½Q(λ⁻¹b − r, λ⁻¹b − r) with λ⁻¹b and r in f'-coordinates
    RatMatrix Linv = adjugate_inverse(to_rational(d.L));
    RatMatrix Ginv = adjugate_inverse(d.G);
    RatVec w(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += Linv(i, j) * b[j] - Ginv(i, j) * d.ell[j];
    Rational q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += w[i] * d.G(i, j) * w[j];
    *best += q / 2;
  }
  return *best;
}

// c(a) by walking from 0 along ±basis steps with c(u + w) = c(u)·c(w)·t(u, λ(w)).
inline ValuedScalar cocycle_walk(const NADescentDatum& d, const IntVec& a) {
  const std::size_t n = d.dim();
  auto t = [&](const IntVec& u, const IntVec& m) {
    ValuedScalar r = ValuedScalar::one();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer e = m[i] * u[j];
        if (e != 0) r *= d.Tmat[i][j].pow(e);
      }
    return r;
  };
  auto lambda = [&](const IntVec& w) { return d.L * w; };
  ValuedScalar c = ValuedScalar::one();
  IntVec u = zero_int_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e = zero_int_vec(n);
    e[i] = 1;
    // c(−e) from c(e − e) = c(e)c(−e)t(e, λ(−e)) = 1
    ValuedScalar c_minus = (d.cBasis[i] * t(e, lambda(-e))).inverse();
    IntVec step = a[i] >= 0 ? e : -e;
    ValuedScalar c_step = a[i] >= 0 ? d.cBasis[i] : c_minus;
    for (Integer k = 0; k < abs(a[i]); ++k) {
      c = c * c_step * t(u, lambda(step));
      u = u + step;
    }
  }
  return c;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational(long num_bound, long den_bound) {
    return make_rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
  }
};

// BᵀB + k·I with small integer B, divided by a random denominator.
inline RatMatrix random_pd(Rng& rng, std::size_t n, long entry = 3) {
  RatMatrix B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = rng.uniform(-entry, entry);
  RatMatrix G = transpose(B) * B;
  for (std::size_t i = 0; i < n; ++i) G(i, i) += 1;
  Rational den(rng.uniform(1, 3));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) /= den;
  return G;
}

inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 4) {
  IntMatrix U = IntMatrix::identity(n);
  if (n < 2) return U;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
    if (i == j) continue;
    long k = rng.uniform(-2, 2);
    for (std::size_t c = 0; c < n; ++c) U(i, c) += k * U(j, c);
  }
  return U;
}

// Datum with L = U·diag(type)·V and Gram G; Pmat = L⁻ᵀG.
inline TropicalDescentDatum random_datum(Rng& rng, const IntVec& type, const RatMatrix& G, const RatVec& ell) {
  const std::size_t n = type.size();
  IntMatrix D(n, n);
  for (std::size_t i = 0; i < n; ++i) D(i, i) = type[i];
  IntMatrix L = random_unimodular(rng, n) * D * random_unimodular(rng, n);
  RatMatrix Pmat = transpose(adjugate_inverse(to_rational(L))) * G;
  return validate_datum(build_torus(Pmat), L, ell);
}

}  // namespace oracle
