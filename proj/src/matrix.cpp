#include "tropitheta/matrix.hpp"

namespace tropitheta {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      require(is_integer(m(i, j)), ErrorKind::NonIntegerLambda, "entry " + to_string(m(i, j)) + " is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.entries())
    if (!is_integer(x)) return false;
  return true;
}

namespace {
template <class M, class V, class R>
std::vector<R> apply(const M& m, const V& v) {
  require(m.cols() == v.size(), ErrorKind::InternalInvariantViolated, "matrix-vector shape mismatch");
  std::vector<R> out(m.rows(), R(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}
}  // namespace

RatVec operator*(const RatMatrix& m, const RatVec& v) { return apply<RatMatrix, RatVec, Rational>(m, v); }
RatVec operator*(const RatMatrix& m, const IntVec& v) { return apply<RatMatrix, IntVec, Rational>(m, v); }
RatVec operator*(const IntMatrix& m, const RatVec& v) { return apply<IntMatrix, RatVec, Rational>(m, v); }
IntVec operator*(const IntMatrix& m, const IntVec& v) { return apply<IntMatrix, IntVec, Integer>(m, v); }

Rational bilinear(const RatMatrix& m, const RatVec& v, const RatVec& w) { return dot(v, m * w); }

}  // namespace tropitheta
