#pragma once

#include <optional>
#include <vector>

#include "tropitheta/matrix.hpp"

namespace tropitheta {

struct SmithDecomposition {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // same shape as the input, diagonal, nonnegative
  IntMatrix V;  // unimodular, cols x cols

  // The min(rows, cols) diagonal entries of D.
  IntVec invariant_factors() const;
};

// U·A·V = D with d_i | d_{i+1}.
SmithDecomposition snf(const IntMatrix& A);

// rank(A) = n and all n invariant factors equal 1. Requires h >= n.
bool is_unimodular_map(const IntMatrix& A);

struct LdltResult {
  RatMatrix L;   // unit lower triangular
  RatVec D;      // pivots; fewer than n entries when elimination stopped at a zero pivot
  bool complete = false;           // G = L·diag(D)·Lᵀ exactly
  bool positive_definite = false;  // complete and all pivots > 0
};

// Rational LDLᵀ without pivoting. Throws NotSymmetric.
LdltResult ldlt(const RatMatrix& G);

bool is_positive_definite(const RatMatrix& G);

Rational determinant(const RatMatrix& A);
Integer determinant(const IntMatrix& A);
std::size_t rank(const RatMatrix& A);
// Throws DivisionByZero when singular.
RatMatrix inverse(const RatMatrix& A);
// Solves A·x = b for square nonsingular A. Throws DivisionByZero when singular.
RatVec solve(const RatMatrix& A, const RatVec& b);
// Returns indices of a maximal linearly independent subset, scanning columns in order.
std::vector<std::size_t> independent_columns(const std::vector<RatVec>& vectors);

}  // namespace tropitheta
