#pragma once

#include <map>
#include <optional>
#include <string>

#include "tropitheta/rational.hpp"

namespace tropitheta {

// Finitely supported Σ a_γ t^γ with a_γ ∈ ℚ∖{0}, γ ∈ ℚ; val = min exponent.
class ValuedScalar {
 public:
  ValuedScalar() = default;
  explicit ValuedScalar(const Rational& constant);
  static ValuedScalar monomial(const Rational& coefficient, const Rational& exponent);
  static ValuedScalar one() { return ValuedScalar(Rational(1)); }

  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Empty for zero (val 0 = +∞).
  std::optional<Rational> val() const;
  Rational leading() const;

  ValuedScalar operator+(const ValuedScalar& o) const;
  ValuedScalar operator-(const ValuedScalar& o) const;
  ValuedScalar operator-() const;
  ValuedScalar operator*(const ValuedScalar& o) const;
  ValuedScalar& operator+=(const ValuedScalar& o) { return *this = *this + o; }
  ValuedScalar& operator*=(const ValuedScalar& o) { return *this = *this * o; }
  bool operator==(const ValuedScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const ValuedScalar& o) const { return !(*this == o); }

  // Inverse exists in the model only for monomials; DivisionByZero for zero.
  ValuedScalar inverse() const;
  ValuedScalar pow(const Integer& k) const;
  // k-th root of a monomial with a rational root of its coefficient; RootUnavailable otherwise.
  ValuedScalar root(unsigned long k) const;

  std::string to_string() const;

 private:
  void add_term(const Rational& exponent, const Rational& coefficient);
  std::map<Rational, Rational> terms_;
};

}  // namespace tropitheta
