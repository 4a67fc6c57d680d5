#include <doctest.h>

#include "support/oracles.hpp"
#include "tropitheta/voronoi.hpp"

using namespace tropitheta;

namespace {

RatMatrix hex() { return RatMatrix{{2, 1}, {1, 2}}; }

bool in_simplex(const std::vector<IntVec>& q, const RatVec& p) {
  const std::size_t n = q.size();
  RatMatrix Q(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) Q(i, j) = q[j][i];
  RatMatrix Qinv = oracle::adjugate_inverse(Q);
  RatVec bary = Qinv * p;
  Rational sum = 0;
  for (const auto& x : bary) {
    if (x < 0) return false;
    sum += x;
  }
  return sum <= 1;
}

bool is_basis(const std::vector<RatVec>& p, const Rational& r) {
  const std::size_t n = p.size();
  RatMatrix B(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) B(i, j) = p[j][i] * r;
  if (!is_integral(B)) return false;
  return abs(oracle::leibniz_det(B)) == 1;
}

}  // namespace

TEST_CASE("relevant vectors") {
  CHECK(relevant_vectors(RatMatrix::identity(2)).size() == 4);
  CHECK(relevant_vectors(hex()).size() == 6);
  CHECK(relevant_vectors(RatMatrix{{Rational(1)}}) == std::vector<IntVec>{{-1}, {1}});
  oracle::Rng rng(51);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = rng.uniform(1, 3);
    RatMatrix G = oracle::random_pd(rng, n, 1);
    auto rel = relevant_vectors(G);
    std::sort(rel.begin(), rel.end());
    CHECK(rel == oracle::naive_relevant(G, n == 3 ? 3 : 4));
    for (const auto& v : rel) CHECK(std::find(rel.begin(), rel.end(), -v) != rel.end());
  }
}

TEST_CASE("cell membership and closest points") {
  CHECK(in_cell(RatMatrix::identity(2), RatVec{0, 0}));
  auto c = closest_point(RatMatrix::identity(2), RatVec{Rational(1, 2), Rational(1, 2)});
  CHECK(c.minimizers == std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(in_cell(RatMatrix::identity(2), RatVec{Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(in_cell(RatMatrix{{Rational(1)}}, RatVec{Rational(7, 10)}));
  CHECK(closest_point(RatMatrix{{Rational(1)}}, RatVec{Rational(7, 10)}).minimizers == std::vector<IntVec>{{1}});
}

TEST_CASE("Voronoi translates tile a box") {
  for (const RatMatrix& G : {RatMatrix::identity(2), hex(), RatMatrix{{3, 1}, {1, 1}}}) {
    Cell V = voronoi_polytope(G);
    CHECK(V.measure() == 1);
    Cell box = Cell::box(RatVec{-1, -1}, RatVec{2, 1});
    std::vector<Cell> pieces;
    oracle::box(IntVec{0, 0}, 4, [&](const IntVec& p) {
      Cell piece = V.translate(to_rational(p)).intersect(box);
      if (piece.full_dimensional()) pieces.push_back(piece);
    });
    Rational area = 0;
    for (const auto& p : pieces) area += p.measure();
    CHECK(area == box.measure());
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j) CHECK_FALSE(pieces[i].intersect(pieces[j]).full_dimensional());
  }
}

TEST_CASE("half-period systems") {
  auto q = half_period_system(RatMatrix::identity(2), RatVec{0, 0});
  CHECK(q.size() == 2);
  oracle::Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = rng.uniform(1, 2);
    RatMatrix G = oracle::random_pd(rng, n, 2);
    std::vector<RatVec> pts = n == 1 ? std::vector<RatVec>{} : voronoi_polytope(G).interior_samples(1);
    if (n == 1) {
      Rational half = Rational(1, 2);
      pts.push_back(RatVec{half * rng.rational(1, 3)});
    }
    RatVec x = pts[0];
    REQUIRE(in_cell(G, x));
    auto sys = half_period_system(G, x);
    CHECK(sys.size() == n);
    RatMatrix Q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(is_integral(Rational(2) * sys[j]));
      CHECK(in_cell(G, x + sys[j]));
      for (std::size_t i = 0; i < n; ++i) Q(i, j) = sys[j][i];
    }
    CHECK(oracle::leibniz_det(Q) != 0);
  }
}

TEST_CASE("basis in simplex") {
  auto p = basis_in_simplex({IntVec{5}}, Rational(1));
  CHECK(p == std::vector<RatVec>{{1}});
  std::vector<IntVec> q2{{1, 0}, {0, 1}};
  p = basis_in_simplex(q2, 1);
  CHECK(is_basis(p, 1));
  for (const auto& v : p) CHECK(in_simplex(q2, v));
  std::vector<IntVec> q3{{2, 1}, {1, 3}};
  p = basis_in_simplex(q3, 2);
  CHECK(is_basis(p, 2));
  for (const auto& v : p) CHECK(in_simplex(q3, v));
  CHECK_THROWS_AS(basis_in_simplex({IntVec{1, 0}, IntVec{2, 0}}, 1), Error);
  CHECK_THROWS_AS(basis_in_simplex({IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1}}, 1), Error);

  oracle::Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(1, 4);
    std::vector<IntVec> q(n, IntVec(n));
    IntMatrix Q(n, n);
    do {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) Q(i, j) = q[j][i] = rng.uniform(-4, 4);
    } while (oracle::leibniz_det(Q) == 0);
    long fact = 1;
    for (std::size_t k = 2; k < n; ++k) fact *= k;
    Rational r = make_rational(fact * rng.uniform(2, 6), rng.uniform(1, 2));
    if (r < fact) r = fact;
    auto basis = basis_in_simplex(q, r);
    CHECK(is_basis(basis, r));
    for (const auto& v : basis) CHECK(in_simplex(q, v));
  }
}

TEST_CASE("good decompositions") {
  auto gd = good_decomposition(RatMatrix{{Rational(1)}}, IntVec{2});
  CHECK(gd.voronoi.vertices() == std::vector<RatVec>{{Rational(-1, 2)}, {Rational(1, 2)}});
  for (const auto& c : gd.cells) {
    CHECK(is_integral(Rational(2) * c.basis[0]));
    CHECK(gd.voronoi.contains(c.cell.translate(c.basis[0])));
  }
  gd = good_decomposition(RatMatrix::identity(2), IntVec{2, 2});
  Rational area = 0;
  for (const auto& c : gd.cells) {
    area += c.cell.measure();
    for (const auto& p : c.basis) CHECK(gd.voronoi.contains(c.cell.translate(p)));
    RatMatrix B(2, 2);
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t i = 0; i < 2; ++i) B(i, j) = c.ell[j][i];
    CHECK(abs(oracle::leibniz_det(B)) == 1);
  }
  CHECK(area == gd.voronoi.measure());
  CHECK_THROWS_AS(good_decomposition(RatMatrix::identity(2), IntVec{1, 1}), Error);
  CHECK_THROWS_AS(good_decomposition(RatMatrix::identity(3), IntVec{4, 4, 4}), Error);
}

TEST_CASE("cell certificates") {
  auto d2 = validate_datum(build_torus(RatMatrix{{Rational(12)}}), IntMatrix{{2}}, RatVec{0});
  auto sq = validate_datum(build_torus(RatMatrix::identity(2)), IntMatrix{{2, 0}, {0, 2}}, zero_rat_vec(2));
  for (const auto& datum : {d2, sq}) {
    auto info = polarization_type(datum);
    auto gd = good_decomposition(adapted_datum(datum, info).G, info.type);
    CHECK_FALSE(gd.cells.empty());
    for (const auto& sigma : gd.cells) {
      auto cert = cell_certificate(datum, info, sigma, zero_int_vec(datum.dim()));
      CHECK(is_unimodular_map(cert.A));
      IntVec bad = cert.a_tilde;
      bad[0] += 1;
      CHECK_THROWS_AS(verify_cell_certificate(datum, info, sigma, zero_int_vec(datum.dim()), cert.ell, bad), Error);
    }
  }
}
