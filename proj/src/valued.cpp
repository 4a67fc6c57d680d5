#include "tropitheta/valued.hpp"

#include "tropitheta/error.hpp"

namespace tropitheta {

ValuedScalar::ValuedScalar(const Rational& constant) { add_term(Rational(0), constant); }

ValuedScalar ValuedScalar::monomial(const Rational& coefficient, const Rational& exponent) {
  ValuedScalar s;
  s.add_term(exponent, coefficient);
  return s;
}

void ValuedScalar::add_term(const Rational& exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

std::optional<Rational> ValuedScalar::val() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational ValuedScalar::leading() const {
  require(!terms_.empty(), ErrorKind::DivisionByZero, "leading coefficient of zero");
  return terms_.begin()->second;
}

ValuedScalar ValuedScalar::operator+(const ValuedScalar& o) const {
  ValuedScalar s = *this;
  for (const auto& [e, c] : o.terms_) s.add_term(e, c);
  return s;
}

ValuedScalar ValuedScalar::operator-() const {
  ValuedScalar s;
  for (const auto& [e, c] : terms_) s.terms_.emplace(e, -c);
  return s;
}

ValuedScalar ValuedScalar::operator-(const ValuedScalar& o) const { return *this + (-o); }

ValuedScalar ValuedScalar::operator*(const ValuedScalar& o) const {
  ValuedScalar s;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) s.add_term(e1 + e2, c1 * c2);
  return s;
}

ValuedScalar ValuedScalar::inverse() const {
  require(!terms_.empty(), ErrorKind::DivisionByZero, "inverse of zero");
  require(is_monomial(), ErrorKind::PreconditionViolated, "inverse of a non-monomial is not finitely supported");
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e);
}

ValuedScalar ValuedScalar::pow(const Integer& k) const {
  if (k == 0) return one();
  if (is_monomial()) {
    const auto& [e, c] = *terms_.begin();
    require(k > 0 || c != 0, ErrorKind::DivisionByZero, "negative power of zero");
    Rational coeff = 1;
    Rational base = k > 0 ? c : 1 / c;
    Integer m = abs(k);
    mpz_pow_ui(coeff.get_num_mpz_t(), base.get_num_mpz_t(), m.get_ui());
    mpz_pow_ui(coeff.get_den_mpz_t(), base.get_den_mpz_t(), m.get_ui());
    return monomial(coeff, e * Rational(k));
  }
  if (k < 0) return inverse().pow(-k);
  ValuedScalar result = one();
  ValuedScalar base = *this;
  Integer m = k;
  while (m > 0) {
    if (m % 2 == 1) result = result * base;
    base = base * base;
    m /= 2;
  }
  return result;
}

ValuedScalar ValuedScalar::root(unsigned long k) const {
  require(k >= 1, ErrorKind::PreconditionViolated, "root order must be positive");
  if (k == 1) return *this;
  if (terms_.empty()) return *this;
  if (!is_monomial()) fail(ErrorKind::RootUnavailable, "root of a non-monomial " + to_string());
  const auto& [e, c] = *terms_.begin();
  Rational r;
  if (!exact_root(c, k, r))
    fail(ErrorKind::RootUnavailable, "coefficient " + tropitheta::to_string(c) + " has no rational root of order " +
                                         std::to_string(k));
  return monomial(r, e / Rational(static_cast<long>(k)));
}

std::string ValuedScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += tropitheta::to_string(c) + "*t^" + tropitheta::to_string(e);
  }
  return s;
}

}  // namespace tropitheta
