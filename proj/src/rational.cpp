#include "tropitheta/rational.hpp"

#include <cctype>

#include "tropitheta/error.hpp"

namespace tropitheta {

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, ErrorKind::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

namespace {

bool valid_integer_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(const std::string& s) {
  require(valid_integer_text(s), ErrorKind::Schema, "malformed integer '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  require(den != 0, ErrorKind::Schema, "zero denominator in '" + text + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer round_nearest(const Rational& value) { return floor(value + Rational(1, 2)); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool exact_root(const Rational& value, unsigned long k, Rational& root) {
  if (k == 0) return false;
  if (k == 1) {
    root = value;
    return true;
  }
  if (value < 0 && k % 2 == 0) return false;
  Integer num = abs(value.get_num());
  Integer den = value.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return false;
  root = make_rational(value < 0 ? Integer(-rn) : rn, rd);
  return true;
}

RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

IntVec to_integer(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(is_integer(v[i]), ErrorKind::InternalInvariantViolated, "non-integral entry " + to_string(v[i]));
    out[i] = v[i].get_num();
  }
  return out;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

IntVec zero_int_vec(std::size_t n) { return IntVec(n, Integer(0)); }
RatVec zero_rat_vec(std::size_t n) { return RatVec(n, Rational(0)); }

namespace {
void check_sizes(std::size_t a, std::size_t b) {
  require(a == b, ErrorKind::InternalInvariantViolated, "vector size mismatch");
}
}  // namespace

Rational dot(const RatVec& a, const RatVec& b) {
  check_sizes(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVec& a, const IntVec& b) {
  check_sizes(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) { return dot(b, a); }

Integer dot(const IntVec& a, const IntVec& b) {
  check_sizes(a.size(), b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  check_sizes(a.size(), b.size());
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  check_sizes(a.size(), b.size());
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec operator*(const Rational& s, const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  check_sizes(a.size(), b.size());
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  check_sizes(a.size(), b.size());
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec operator-(const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntVec operator*(const Integer& s, const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

namespace {
template <class V>
std::string join(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}
}  // namespace

std::string to_string(const IntVec& v) { return join(v); }
std::string to_string(const RatVec& v) { return join(v); }

}  // namespace tropitheta
