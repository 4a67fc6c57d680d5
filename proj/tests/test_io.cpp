#include <doctest.h>

#include "support/oracles.hpp"
#include "tropitheta/json_io.hpp"
#include "tropitheta/svg.hpp"

using namespace tropitheta;

namespace {

TropicalDescentDatum elliptic(long d) {
  return validate_datum(build_torus(RatMatrix{{Rational(12)}}), IntMatrix{{Integer(d)}}, RatVec{0});
}

json reparse(const json& j) { return json::parse(j.dump()); }

}  // namespace

TEST_CASE("rational and matrix round trips") {
  oracle::Rng rng(71);
  for (int k = 0; k < 50; ++k) {
    Rational r = rng.rational(1000, 97);
    CHECK(rational_from_json(reparse(to_json(r))) == r);
  }
  RatMatrix m{{Rational(1, 2), Rational(-3)}, {Rational(7, 9), Rational(0)}};
  CHECK(ratmatrix_from_json(reparse(to_json(m))) == m);
  CHECK(to_json(m)["entries"][0][0] == "1/2");
  CHECK(intmatrix_from_json(json::parse("[[1,2],[3,4]]")) == IntMatrix{{1, 2}, {3, 4}});
  CHECK(tropical_from_json(to_json(TropicalNumber{})) == std::nullopt);
  CHECK(*tropical_from_json(to_json(TropicalNumber{Rational(1, 2)})) == Rational(1, 2));
}

TEST_CASE("schema errors") {
  auto schema = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Schema;
    }
    return false;
  };
  CHECK(schema([] { parse_json("{bad"); }));
  CHECK(schema([] { datum_from_json(json::parse(R"({"L":[[1]]})")); }));
  CHECK(schema([] { rational_from_json(json::parse("1.5")); }));
  CHECK(schema([] { rational_from_json(json("1/0")); }));
  CHECK(schema([] { intmatrix_from_json(json::parse("[[1,2],[3]]")); }));
  CHECK(schema([] { integer_from_json(json("1/2")); }));
}

TEST_CASE("datum, valued scalar and Fourier data round trips") {
  auto d = elliptic(3);
  auto back = datum_from_json(reparse(datum_to_json(d)));
  CHECK(back.L == d.L);
  CHECK(back.Pmat() == d.Pmat());
  CHECK(back.ell == d.ell);
  ValuedScalar s = ValuedScalar::monomial(Rational(2, 3), Rational(-1, 2)) + ValuedScalar::monomial(5, 7);
  CHECK(valued_from_json(reparse(to_json(s))) == s);
  auto na = build_na_datum(build_torus(RatMatrix{{Rational(12)}}), IntMatrix{{3}},
                           ValuedMatrix{{ValuedScalar::monomial(1, 12)}}, {ValuedScalar::monomial(1, 18)});
  auto na2 = na_datum_from_json(reparse(na_datum_to_json(na)));
  CHECK(na2.Tmat == na.Tmat);
  CHECK(na2.cBasis == na.cBasis);
  auto fd = fourier_lift(na, IntVec{1}, 3);
  json j = fourier_to_json(fd);
  CHECK(j["coeffs"].contains("[-2]"));
  auto fd2 = fourier_from_json(reparse(j));
  CHECK(fd2.coeffs == fd.coeffs);
  CHECK(fourier_to_json(fd2) == j);
  CHECK(vector_from_key(vector_key(IntVec{-3, 4})) == IntVec{-3, 4});
}

TEST_CASE("reports are deterministic") {
  auto d = elliptic(3);
  auto info = polarization_type(d);
  std::string a = faithful_report_to_json(faithful_certificate(d, info)).dump(2);
  std::string b = faithful_report_to_json(faithful_certificate(d, info)).dump(2);
  CHECK(a == b);
  json r = json::parse(a);
  CHECK(r["faithful"] == true);
  CHECK(r.dump(2) == a);
  CHECK(piecewise_map_to_json(linearity_cells(d, info)).dump() == piecewise_map_to_json(linearity_cells(d, info)).dump());
}

TEST_CASE("svg output records its scale") {
  auto d = elliptic(3);
  auto info = polarization_type(d);
  std::string graphs = svg_theta_graphs(d, info);
  CHECK(graphs.find("data-scale=") != std::string::npos);
  CHECK(graphs.find("<polyline") != std::string::npos);
  std::string poly = svg_image_polygon(image_complex_1d(d, info));
  CHECK(poly.find("<polygon") != std::string::npos);
  auto sq = validate_datum(build_torus(RatMatrix::identity(2)), IntMatrix{{2, 0}, {0, 2}}, zero_rat_vec(2));
  CHECK(svg_cells(linearity_cells(sq, polarization_type(sq))).find("<polygon") != std::string::npos);
}
