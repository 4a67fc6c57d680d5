#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace tropitheta {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q" and "-p/q"; throws Error(Schema) otherwise.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);
// Nearest integer, ties rounded up.
Integer round_nearest(const Rational& value);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Exact k-th root of a rational, if it exists in Q.
bool exact_root(const Rational& value, unsigned long k, Rational& root);

RatVec to_rational(const IntVec& v);
IntVec to_integer(const RatVec& v);
bool is_integral(const RatVec& v);
IntVec zero_int_vec(std::size_t n);
RatVec zero_rat_vec(std::size_t n);

Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const RatVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);
Integer dot(const IntVec& a, const IntVec& b);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& a);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(const Integer& s, const IntVec& a);

bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace tropitheta
