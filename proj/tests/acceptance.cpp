#include <chrono>
#include <iostream>

#include "support/oracles.hpp"
#include "tropitheta/embedding.hpp"
#include "tropitheta/nalift.hpp"
#include "tropitheta/voronoi.hpp"

using namespace tropitheta;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

#define EXPECT(cond)                                        \
  do {                                                      \
    if (!(cond)) return Outcome{false, "failed: " #cond};   \
  } while (0)

TropicalDescentDatum elliptic(long d, long varpi = 12) {
  return validate_datum(build_torus(RatMatrix{{Rational(varpi)}}), IntMatrix{{Integer(d)}}, RatVec{0});
}

std::vector<Rational> breakpoints(const PiecewiseAffineMap& map) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < map.cells.size(); ++i) out.push_back(map.cells[i].cell.vertices().back()[0]);
  return out;
}

struct Affine {
  Rational lo, hi, slope, intercept;
  bool operator==(const Affine& o) const {
    return lo == o.lo && hi == o.hi && slope == o.slope && intercept == o.intercept;
  }
};

std::vector<Affine> table(const TropicalDescentDatum& d, long b) {
  std::vector<Affine> out;
  for (const auto& p : theta_pieces(ThetaFunction{d, IntVec{Integer(b)}, Convention::QEll}, fundamental_domain(d)))
    out.push_back({p.region.vertices().front()[0], p.region.vertices().back()[0], Rational(p.slope[0]), p.intercept});
  return out;
}

Outcome elliptic_degree_two() {
  auto d = elliptic(2);
  auto info = polarization_type(d);
  EXPECT((table(d, 0) == std::vector<Affine>{{0, 6, 0, 0}, {6, 12, -2, 12}}));
  EXPECT((table(d, 1) == std::vector<Affine>{{0, 12, -1, 3}}));
  auto map = linearity_cells(d, info);
  EXPECT(breakpoints(map) == std::vector<Rational>{6});
  EXPECT(map.cells[0].A == IntMatrix{{Integer(-1)}});
  EXPECT(map.cells[1].A == IntMatrix{{Integer(1)}});
  auto rep = faithful_certificate(d, info);
  EXPECT(rep.unimodular);
  EXPECT(rep.injective.verdict == InjectivityVerdict::Refuted);
  EXPECT(rep.injective.witness.has_value());
  const auto& [y, z] = *rep.injective.witness;
  EXPECT(y[0] + z[0] == 12 && y[0] != z[0]);
  EXPECT(phi_eval(d, info, y) == phi_eval(d, info, z));
  return {true, "witness (" + to_string(y[0]) + ", " + to_string(z[0]) + ")"};
}

Outcome elliptic_polygon(long degree, const std::vector<Rational>& expected_breaks,
                         const std::vector<RatVec>& expected_vertices) {
  auto d = elliptic(degree);
  auto info = polarization_type(d);
  EXPECT(breakpoints(linearity_cells(d, info)) == expected_breaks);
  auto img = image_complex_1d(d, info);
  EXPECT(!img.degenerate);
  EXPECT(img.vertices.size() == static_cast<std::size_t>(degree));
  if (!expected_vertices.empty()) EXPECT(img.vertices == expected_vertices);
  for (const auto& e : img.edges) EXPECT(e.lattice_length == make_rational(12, degree));
  auto rep = faithful_certificate(d, info);
  EXPECT(rep.unimodular);
  EXPECT(rep.injective.verdict == InjectivityVerdict::Certified);
  EXPECT(rep.faithful);
  return {true, std::to_string(img.edges.size()) + " edges of lattice length " + to_string(make_rational(12, degree))};
}

Outcome random_surfaces() {
  oracle::Rng rng(401);
  std::size_t cells = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Integer d1 = rng.uniform(3, 4);
    auto datum = oracle::random_datum(rng, IntVec{d1, d1}, oracle::random_pd(rng, 2, 1), zero_rat_vec(2));
    auto info = polarization_type(datum);
    FaithfulOptions opt;
    opt.resolution = 20;
    auto rep = faithful_certificate(datum, info, opt);
    EXPECT(rep.unimodular_method == "exact-cells");
    EXPECT(rep.unimodular);
    EXPECT(rep.injective.verdict == InjectivityVerdict::SampledOk);
    EXPECT(rep.injective.resolution == 20);
    cells += rep.cells;
  }
  return {true, std::to_string(cells) + " exact cells"};
}

Outcome argmin_oracles() {
  oracle::Rng rng(402);
  std::size_t ties = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(1, 3);
    RatMatrix G = oracle::random_pd(rng, n, 3);
    RatVec h(n);
    for (auto& x : h) x = rng.rational(15, 4);
    if (trial % 5 == 0)
      for (std::size_t i = 0; i < n; ++i) h[i] = G(i, i) / 2;
    ArgminResult fp = lattice_argmin(G, h);
    long radius = 1;
    while (!brute_force_argmin_unchecked(G, h, radius).certified) ++radius;
    ArgminResult bf = brute_force_argmin(G, h, radius);
    EXPECT(fp.value == bf.value);
    EXPECT(fp.minimizers == bf.minimizers);
    auto nv = oracle::naive_argmin(G, h);
    EXPECT(fp.value == nv.value && fp.minimizers == nv.minimizers);
    ties += fp.tie;
  }
  return {true, "100 instances, " + std::to_string(ties) + " with ties"};
}

Outcome quasi_periodicity() {
  oracle::Rng rng(403);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(1, 3);
    RatVec ell(n);
    for (auto& x : ell) x = rng.rational(4, 3);
    auto datum = oracle::random_datum(rng, IntVec(n, Integer(rng.uniform(1, 3))), oracle::random_pd(rng, n, 2), ell);
    IntVec b(n), u(n);
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = rng.uniform(-3, 3), u[i] = rng.uniform(-3, 3), x[i] = rng.rational(30, 7);
    Convention c = trial % 2 ? Convention::QEll : Convention::LambdaGamma;
    EXPECT(quasi_periodicity_check(ThetaFunction{datum, b, c}, x, u));
  }
  return {true, "100 tuples"};
}

Outcome sublattice() {
  auto d2 = elliptic(2);
  auto sq = validate_datum(build_torus(RatMatrix::identity(2)), IntMatrix{{2, 0}, {0, 2}}, zero_rat_vec(2));
  for (long i = 0; i < 25; ++i) EXPECT(sublattice_identity_check(d2, RatVec{make_rational(12 * i, 25)}));
  for (long i = 0; i < 5; ++i)
    for (long j = 0; j < 5; ++j) EXPECT(sublattice_identity_check(sq, RatVec{make_rational(i, 5), make_rational(j, 5)}));
  return {true, "50 points"};
}

Outcome voronoi_vanishing() {
  auto datum = datum_from_Q(build_torus(RatMatrix{{2, 1}, {1, 3}}), RatMatrix{{4, 2}, {2, 6}}, zero_rat_vec(2));
  Cell cell = voronoi_polytope(datum.G);
  auto pts = cell.interior_samples(20);
  EXPECT(pts.size() >= 20);
  pts.resize(20);
  for (const auto& y : pts) {
    EXPECT(in_cell(datum.G, y));
    EXPECT(theta_eval(ThetaFunction{datum, zero_int_vec(2), Convention::QEll}, datum.Pmat() * y) == 0);
  }
  return {true, "20 points"};
}

Outcome voronoi_tiling() {
  EXPECT(relevant_vectors(RatMatrix::identity(2)).size() == 4);
  RatMatrix hex{{2, 1}, {1, 2}};
  EXPECT(relevant_vectors(hex).size() == 6);
  for (const RatMatrix& G : {RatMatrix::identity(2), hex}) {
    Cell V = voronoi_polytope(G);
    Cell box = Cell::box(RatVec{Rational(-3, 2), -1}, RatVec{2, Rational(5, 3)});
    std::vector<Cell> pieces;
    oracle::box(IntVec{0, 0}, 4, [&](const IntVec& p) {
      Cell piece = V.translate(to_rational(p)).intersect(box);
      if (piece.full_dimensional()) pieces.push_back(piece);
    });
    Rational area = 0;
    for (const auto& p : pieces) area += p.measure();
    EXPECT(area == box.measure());
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j) EXPECT(!pieces[i].intersect(pieces[j]).full_dimensional());
  }
  return {true, "counts 4 and 6; tiling exact"};
}

Outcome simplex_bases() {
  oracle::Rng rng(410);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(1, 4);
    std::vector<IntVec> q(n, IntVec(n));
    RatMatrix Q(n, n);
    do {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) Q(i, j) = q[j][i] = rng.uniform(-4, 4);
    } while (oracle::leibniz_det(Q) == 0);
    long fact = 1;
    for (std::size_t k = 2; k < n; ++k) fact *= k;
    Rational r = make_rational(fact * rng.uniform(2, 6), rng.uniform(1, 2));
    if (r < fact) r = fact;
    auto p = basis_in_simplex(q, r);
    RatMatrix B(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) B(i, j) = r * p[j][i];
    EXPECT(is_integral(B));
    EXPECT(abs(oracle::leibniz_det(B)) == 1);
    RatMatrix Qinv = oracle::adjugate_inverse(Q);
    for (const auto& v : p) {
      RatVec bary = Qinv * v;
      Rational sum = 0;
      for (const auto& x : bary) {
        EXPECT(x >= 0);
        sum += x;
      }
      EXPECT(sum <= 1);
    }
  }
  return {true, "100 instances"};
}

Outcome certificates() {
  auto d2 = elliptic(2);
  auto sq = validate_datum(build_torus(RatMatrix::identity(2)), IntMatrix{{2, 0}, {0, 2}}, zero_rat_vec(2));
  std::size_t total = 0;
  for (const auto& datum : {d2, sq}) {
    auto info = polarization_type(datum);
    auto gd = good_decomposition(adapted_datum(datum, info).G, info.type);
    EXPECT(!gd.cells.empty());
    for (const auto& sigma : gd.cells) {
      auto cert = cell_certificate(datum, info, sigma, zero_int_vec(datum.dim()));
      EXPECT(cert.ell.size() == datum.dim() + 1);
      EXPECT(is_unimodular_map(cert.A));
      ++total;
    }
  }
  return {true, std::to_string(total) + " cells certified"};
}

NADescentDatum elliptic_na() {
  return build_na_datum(build_torus(RatMatrix{{Rational(12)}}), IntMatrix{{3}},
                        ValuedMatrix{{ValuedScalar::monomial(1, 12)}}, {ValuedScalar::monomial(1, 18)});
}

Outcome lifting() {
  auto na = elliptic_na();
  auto td = c_trop(na);
  for (long b = 0; b < 3; ++b) {
    auto fd = fourier_lift(na, IntVec{b}, 5);
    EXPECT(check_convergence(fd));
    for (long i = 0; i < 25; ++i) {
      RatVec v{make_rational(12 * i, 25)};
      EXPECT(tropicalize_fourier(fd, v) == theta_eval(ThetaFunction{td, IntVec{b}, Convention::LambdaGamma}, v));
    }
  }
  return {true, "75 points"};
}

Outcome surjectivity() {
  auto na = elliptic_na();
  std::size_t samples = 0;
  for (const auto& targets : {std::vector<TropicalNumber>{Rational(0), Rational(0), Rational(0)},
                              std::vector<TropicalNumber>{Rational(0), Rational(1, 2), std::nullopt}}) {
    auto r = surjective_lift(na, targets, 5);
    EXPECT(r.verified);
    EXPECT(!r.target_cells.empty());
    for (const auto& cell : r.target_cells) {
      bool sampled = false;
      for (const auto& s : r.samples) sampled = sampled || cell.strictly_inside(s.point);
      EXPECT(sampled);
    }
    for (const auto& s : r.samples) EXPECT(s.lifted == s.target);
    samples += r.samples.size();
  }
  return {true, std::to_string(samples) + " cell samples"};
}

Outcome divisibility() {
  auto na = build_na_datum(build_torus(RatMatrix{{Rational(12)}}), IntMatrix{{4}},
                           ValuedMatrix{{ValuedScalar::monomial(1, 12)}}, {ValuedScalar::monomial(1, 48)});
  auto half = divide_datum(na, 2);
  EXPECT(half.L == IntMatrix{{Integer(2)}});
  EXPECT(half.cBasis[0].pow(2) == na.cBasis[0]);
  auto bad = build_na_datum(build_torus(RatMatrix{{Rational(12)}}), IntMatrix{{4}},
                            ValuedMatrix{{ValuedScalar::monomial(1, 12)}}, {ValuedScalar::monomial(2, 48)});
  try {
    divide_datum(bad, 2);
    return {false, "non-square coefficient accepted"};
  } catch (const Error& e) {
    EXPECT(e.kind() == ErrorKind::RootUnavailable);
  }
  return {true, "c1 = " + half.cBasis[0].to_string()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"elliptic d=2: theta tables, slopes, unimodular, not injective", elliptic_degree_two},
      {"elliptic d=3: breakpoints, triangle, lattice lengths, faithful",
       [] { return elliptic_polygon(3, {2, 6, 10}, {{4, 0}, {-4, -4}, {0, 4}}); }},
      {"elliptic d=4: breakpoints, quadrangle, lattice lengths, faithful",
       [] { return elliptic_polygon(4, {3, 6, 9}, {}); }},
      {"random surfaces d1>=3: grid injectivity and exact unimodular cells", random_surfaces},
      {"Fincke-Pohst argmin equals brute force", argmin_oracles},
      {"quasi-periodicity on random tuples", quasi_periodicity},
      {"sublattice identity", sublattice},
      {"theta_0 vanishes on the Voronoi cell", voronoi_vanishing},
      {"relevant vectors and tiling", voronoi_tiling},
      {"basis in simplex", simplex_bases},
      {"per-cell certificates", certificates},
      {"Fourier lifts tropicalize to theta", lifting},
      {"surjective lifts", surjectivity},
      {"datum divisibility", divisibility},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.detail << ", " << secs << "s)" << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures ? 1 : 0;
}
