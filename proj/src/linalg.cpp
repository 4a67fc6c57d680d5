#include "tropitheta/linalg.hpp"

#include <algorithm>

namespace tropitheta {

IntVec SmithDecomposition::invariant_factors() const {
  std::size_t k = std::min(D.rows(), D.cols());
  IntVec d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = D(i, i);
  return d;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer trunc_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& A) {
  const std::size_t h = A.rows(), n = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(h);
  IntMatrix V = IntMatrix::identity(n);
  const std::size_t k = std::min(h, n);

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Pivot: minimal nonzero absolute value in the trailing block.
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < h; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
            found = true;
            best = abs(D(i, j));
            pr = i;
            pc = j;
          }
      if (!found) return {U, D, V};
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < h; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = trunc_quotient(D(i, t), D(t, t));
        add_row_multiple(D, i, t, -q);
        add_row_multiple(U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = trunc_quotient(D(t, j), D(t, t));
        add_col_multiple(D, j, t, -q);
        add_col_multiple(V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divisible = true;
      for (std::size_t i = t + 1; i < h && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row_multiple(D, t, i, Integer(1));
            add_row_multiple(U, t, i, Integer(1));
            divisible = false;
            break;
          }
      if (!divisible) continue;

      if (D(t, t) < 0) {
        negate_row(D, t);
        negate_row(U, t);
      }
      break;
    }
  }
  return {U, D, V};
}

bool is_unimodular_map(const IntMatrix& A) {
  const std::size_t h = A.rows(), n = A.cols();
  if (h < n || n == 0) return false;
  SmithDecomposition s = snf(A);
  for (std::size_t i = 0; i < n; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

LdltResult ldlt(const RatMatrix& G) {
  require(is_symmetric(G), ErrorKind::NotSymmetric, "ldlt requires a symmetric matrix");
  const std::size_t n = G.rows();
  LdltResult r;
  r.L = RatMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational pivot = G(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= r.L(j, k) * r.L(j, k) * r.D[k];
    r.D.push_back(pivot);
    if (pivot == 0) {
      // Elimination cannot proceed without pivoting; the remaining rows are not determined.
      bool rest_zero = true;
      for (std::size_t i = j + 1; i < n && rest_zero; ++i) {
        Rational s = G(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= r.L(i, k) * r.L(j, k) * r.D[k];
        if (s != 0) rest_zero = false;
      }
      if (!rest_zero) {
        r.complete = false;
        r.positive_definite = false;
        return r;
      }
      continue;
    }
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = G(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= r.L(i, k) * r.L(j, k) * r.D[k];
      r.L(i, j) = s / pivot;
    }
  }
  r.complete = true;
  r.positive_definite = std::all_of(r.D.begin(), r.D.end(), [](const Rational& d) { return d > 0; });
  return r;
}

bool is_positive_definite(const RatMatrix& G) { return is_symmetric(G) && ldlt(G).positive_definite; }

namespace {

// Row-echelon form by exact Gaussian elimination; returns the pivot columns and the determinant sign/product.
struct Echelon {
  RatMatrix M;
  std::vector<std::size_t> pivots;
  Rational det_factor = 1;
};

Echelon echelon(RatMatrix M) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
    std::size_t p = row;
    while (p < M.rows() && M(p, col) == 0) ++p;
    if (p == M.rows()) continue;
    if (p != row) {
      M.swap_rows(p, row);
      e.det_factor = -e.det_factor;
    }
    e.det_factor *= M(row, col);
    for (std::size_t i = row + 1; i < M.rows(); ++i) {
      if (M(i, col) == 0) continue;
      Rational f = M(i, col) / M(row, col);
      for (std::size_t j = col; j < M.cols(); ++j) M(i, j) -= f * M(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.M = std::move(M);
  return e;
}

}  // namespace

Rational determinant(const RatMatrix& A) {
  require(A.square(), ErrorKind::InternalInvariantViolated, "determinant of a non-square matrix");
  if (A.rows() == 0) return 1;
  Echelon e = echelon(A);
  if (e.pivots.size() < A.rows()) return 0;
  return e.det_factor;
}

Integer determinant(const IntMatrix& A) { return determinant(to_rational(A)).get_num(); }

std::size_t rank(const RatMatrix& A) { return echelon(A).pivots.size(); }

RatMatrix inverse(const RatMatrix& A) {
  require(A.square(), ErrorKind::InternalInvariantViolated, "inverse of a non-square matrix");
  const std::size_t n = A.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug(p, col) == 0) ++p;
    require(p < n, ErrorKind::DivisionByZero, "matrix is singular");
    aug.swap_rows(p, col);
    Rational inv = 1 / aug(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      Rational f = aug(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

RatVec solve(const RatMatrix& A, const RatVec& b) { return inverse(A) * b; }

std::vector<std::size_t> independent_columns(const std::vector<RatVec>& vectors) {
  std::vector<std::size_t> chosen;
  if (vectors.empty()) return chosen;
  const std::size_t n = vectors.front().size();
  std::vector<RatVec> basis;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    std::vector<RatVec> trial = basis;
    trial.push_back(vectors[k]);
    if (rank(RatMatrix::from_columns(trial, n)) == trial.size()) {
      basis = std::move(trial);
      chosen.push_back(k);
    }
  }
  return chosen;
}

}  // namespace tropitheta
