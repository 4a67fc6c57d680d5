#include "tropitheta/theta.hpp"

namespace tropitheta {

const char* convention_name(Convention c) { return c == Convention::QEll ? "Q_ELL" : "LAMBDA_GAMMA"; }

Convention parse_convention(const std::string& name) {
  if (name == "Q_ELL") return Convention::QEll;
  if (name == "LAMBDA_GAMMA") return Convention::LambdaGamma;
  fail(ErrorKind::Schema, "unknown convention '" + name + "'");
}

RatVec theta_linear_term(const TropicalDescentDatum& datum, const IntVec& b, const RatVec& x) {
  RatMatrix Lt = transpose(to_rational(datum.L));
  return Lt * x + transpose(datum.Pmat()) * b - datum.ell;
}

Rational q_ell_constant(const TropicalDescentDatum& datum, const IntVec& b) {
  RatVec c = solve(to_rational(datum.L), to_rational(b)) - ell_point(datum);
  return Rational(1, 2) * bilinear(datum.G, c, c);
}

namespace {

void check_theta(const ThetaFunction& theta, const RatVec& x) {
  require_polarized(theta.datum);
  require(theta.b.size() == theta.datum.dim(), ErrorKind::Schema, "b has wrong dimension");
  require(x.size() == theta.datum.dim(), ErrorKind::Schema, "point has wrong dimension");
}

}  // namespace

ThetaEvaluation theta_evaluate(const ThetaFunction& theta, const RatVec& x) {
  check_theta(theta, x);
  const auto& datum = theta.datum;
  ThetaEvaluation ev;
  ev.argmin = lattice_argmin(datum.G, theta_linear_term(datum, theta.b, x));
  ev.value = dot(theta.b, x) + ev.argmin.value;
  if (theta.convention == Convention::QEll) ev.value += q_ell_constant(datum, theta.b);
  return ev;
}

Rational theta_eval(const ThetaFunction& theta, const RatVec& x) { return theta_evaluate(theta, x).value; }

IntVec piece_slope(const TropicalDescentDatum& datum, const IntVec& b, const IntVec& a) {
  return b + datum.L * a;
}

Rational piece_intercept(const ThetaFunction& theta, const IntVec& a) {
  const auto& datum = theta.datum;
  Rational c = gamma_eval(datum, a) + dot(theta.b, datum.Pmat() * a);
  if (theta.convention == Convention::QEll) c += q_ell_constant(datum, theta.b);
  return c;
}

Rational theta_piece(const ThetaFunction& theta, const IntVec& a, const RatVec& x) {
  return dot(piece_slope(theta.datum, theta.b, a), x) + piece_intercept(theta, a);
}

bool quasi_periodicity_check(const ThetaFunction& theta, const RatVec& x, const IntVec& u) {
  const auto& datum = theta.datum;
  RatVec shifted = x + datum.Pmat() * u;
  RatVec ur = to_rational(u);
  Rational Qxu = dot(x, to_rational(datum.L) * ur);
  Rational Quu = bilinear(datum.G, ur, ur);
  Rational expected = theta_eval(theta, x) - Qxu - Rational(1, 2) * Quu + dot(datum.ell, ur);
  return theta_eval(theta, shifted) == expected;
}

TropicalNumber min_plus_eval(const ThetaCombination& comb, const RatVec& x) {
  TropicalNumber best;
  bool any_finite = false;
  for (const auto& [c, theta] : comb.terms) {
    if (!c) continue;
    any_finite = true;
    Rational v = *c + theta_eval(theta, x);
    if (!best || v < *best) best = v;
  }
  require(any_finite, ErrorKind::PreconditionViolated, "combination has no finite coefficient");
  return best;
}

TranslatedDatum translate_datum(const TropicalDescentDatum& datum, const RatVec& v) {
  require(v.size() == datum.dim(), ErrorKind::Schema, "translation has wrong dimension");
  TranslatedDatum t;
  t.datum = validate_datum(datum.torus, datum.L, datum.ell - datum.G * v);
  t.constant = Rational(1, 2) * bilinear(datum.G, v, v);
  t.offset = dot(datum.ell, v) - t.constant;
  return t;
}

bool translation_identity_check(const TropicalDescentDatum& datum, const IntVec& b, const RatVec& v,
                                const RatVec& x) {
  TranslatedDatum t = translate_datum(datum, v);
  ThetaFunction original{datum, b, Convention::QEll};
  ThetaFunction moved{t.datum, b, Convention::QEll};
  RatVec xv = x + datum.Pmat() * v;
  return theta_eval(original, xv) == theta_eval(moved, x) + t.offset;
}

SublatticeCheck sublattice_identity(const TropicalDescentDatum& datum, const RatVec& x) {
  require_polarized(datum);
  require(is_zero(datum.ell), ErrorKind::PreconditionViolated, "sublattice identity needs ell = 0");
  PolarizationInfo info = polarization_type(datum);
  const std::size_t n = datum.dim();
  const Integer d1 = info.type[0];
  IntMatrix Uinv = to_integer(inverse(to_rational(info.U)));

  SublatticeCheck out;
  IntVec box = zero_int_vec(n);
  while (true) {
    IntVec adapted(n);
    for (std::size_t i = 0; i < n; ++i) adapted[i] = (info.type[i] / d1) * box[i];
    out.b1_reps.push_back(Uinv * adapted);
    std::size_t i = 0;
    while (i < n) {
      if (++box[i] < d1) break;
      box[i] = 0;
      ++i;
    }
    if (i == n) break;
  }

  bool first = true;
  for (const auto& b : out.b1_reps) {
    Rational v = theta_eval(ThetaFunction{datum, b, Convention::QEll}, x);
    if (first || v < out.lhs) out.lhs = v;
    first = false;
  }
  Rational scale = Rational(d1);
  out.rhs = theta_eval(ThetaFunction{datum, zero_int_vec(n), Convention::QEll}, scale * x) / (scale * scale);
  out.holds = out.lhs == out.rhs;
  return out;
}

bool sublattice_identity_check(const TropicalDescentDatum& datum, const RatVec& x) {
  return sublattice_identity(datum, x).holds;
}

bool gamma_rational_check(const ThetaCombination& comb) {
  // Slopes b + L·a are integral and intercepts γ(a) + b·Pmat·a + c_b are rational by construction.
  bool any_finite = false;
  for (const auto& term : comb.terms) any_finite = any_finite || term.first.has_value();
  require(any_finite, ErrorKind::PreconditionViolated, "combination has no finite coefficient");
  return true;
}

}  // namespace tropitheta
