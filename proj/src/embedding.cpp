#include "tropitheta/embedding.hpp"

#include <algorithm>
#include <map>

namespace tropitheta {

namespace {

RatVec to_rat(const IntVec& v) { return to_rational(v); }

void odometer(const IntVec& lo, const IntVec& hi, const std::function<void(const IntVec&)>& visit) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  IntVec a = lo;
  while (true) {
    visit(a);
    std::size_t i = 0;
    while (i < n) {
      if (a[i] < hi[i]) {
        ++a[i];
        break;
      }
      a[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

}  // namespace

Cell fundamental_domain(const TropicalDescentDatum& datum) { return Cell::parallelotope(datum.Pmat()); }

std::vector<IntVec> candidate_pieces(const TropicalDescentDatum& datum, const IntVec& b, const Cell& domain) {
  require_polarized(datum);
  const std::size_t n = datum.dim();
  RatMatrix Ginv = inverse(datum.G);
  std::vector<RatVec> centers;
  for (const auto& v : domain.vertices()) {
    RatVec c = Ginv * theta_linear_term(datum, b, v);
    for (auto& x : c) x = -x;
    centers.push_back(c);
  }
  require(!centers.empty(), ErrorKind::PreconditionViolated, "empty domain");
  // Any minimizer satisfies (a−â)ᵀG(a−â) ≤ (round(â)−â)ᵀG(round(â)−â) ≤ ¼Σ|G_ij|,
  // so |a_i − â_i|² ≤ ¼Σ|G_ij|·(G⁻¹)_ii; â is affine in x, so its range is spanned by the vertices.
  Rational cover = 0;
  for (const auto& g : datum.G.entries()) cover += abs(g);
  cover /= 4;
  IntVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = centers[0][i], mx = centers[0][i];
    for (const auto& c : centers) {
      mn = std::min(mn, c[i]);
      mx = std::max(mx, c[i]);
    }
    Integer rho = ceil_sqrt(cover * Ginv(i, i));
    lo[i] = floor(mn) - rho;
    hi[i] = ceil(mx) + rho;
  }
  std::vector<IntVec> out;
  odometer(lo, hi, [&](const IntVec& a) { out.push_back(a); });
  return out;
}

std::vector<ThetaPiece> theta_pieces(const ThetaFunction& theta, const Cell& domain) {
  const auto& datum = theta.datum;
  require(domain.full_dimensional(), ErrorKind::PreconditionViolated, "domain must be full-dimensional");
  require(domain.ambient() == datum.dim(), ErrorKind::DimensionUnsupported, "exact cells need n <= 2");
  std::vector<IntVec> cand = candidate_pieces(datum, theta.b, domain);
  std::vector<IntVec> slopes;
  std::vector<Rational> intercepts;
  for (const auto& a : cand) {
    slopes.push_back(piece_slope(datum, theta.b, a));
    intercepts.push_back(piece_intercept(theta, a));
  }
  std::vector<ThetaPiece> pieces;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    Cell region = domain;
    for (std::size_t j = 0; j < cand.size() && region.full_dimensional(); ++j) {
      if (j == k) continue;
      region = region.clip({to_rat(slopes[k] - slopes[j]), intercepts[j] - intercepts[k]});
    }
    if (region.full_dimensional()) pieces.push_back({cand[k], slopes[k], intercepts[k], region});
  }
  require(!pieces.empty(), ErrorKind::InternalInvariantViolated, "no linearity region found");
  std::sort(pieces.begin(), pieces.end(), [](const ThetaPiece& p, const ThetaPiece& q) {
    return std::min_element(p.region.vertices().begin(), p.region.vertices().end())[0] <
           std::min_element(q.region.vertices().begin(), q.region.vertices().end())[0];
  });
  return pieces;
}

RatVec phi_eval(const TropicalDescentDatum& datum, const PolarizationInfo& info, const RatVec& x) {
  require_polarized(datum);
  std::vector<Rational> values;
  for (const auto& b : info.reps) values.push_back(theta_eval(ThetaFunction{datum, b, Convention::QEll}, x));
  RatVec out;
  for (std::size_t i = 1; i < values.size(); ++i) out.push_back(values[i] - values[0]);
  return out;
}

PiecewiseAffineMap linearity_cells(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                   const Cell& domain) {
  require_polarized(datum);
  require(datum.dim() <= 2, ErrorKind::DimensionUnsupported, "exact cells need n <= 2; use sampled mode");
  struct Partial {
    Cell cell;
    std::vector<const ThetaPiece*> pieces;
  };
  std::vector<std::vector<ThetaPiece>> per_rep;
  for (const auto& b : info.reps) per_rep.push_back(theta_pieces(ThetaFunction{datum, b, Convention::QEll}, domain));

  std::vector<Partial> cells{{domain, {}}};
  for (const auto& pieces : per_rep) {
    std::vector<Partial> next;
    for (const auto& part : cells)
      for (const auto& piece : pieces) {
        Cell c = part.cell.intersect(piece.region);
        if (!c.full_dimensional()) continue;
        Partial p{c, part.pieces};
        p.pieces.push_back(&piece);
        next.push_back(std::move(p));
      }
    cells = std::move(next);
  }

  PiecewiseAffineMap map;
  map.domain = domain;
  map.reps = info.reps;
  const std::size_t n = datum.dim();
  const std::size_t D = info.reps.size();
  for (const auto& part : cells) {
    AffineCell ac;
    ac.cell = part.cell;
    ac.A = IntMatrix(D - 1, n);
    for (const auto* piece : part.pieces) ac.argmins.push_back(piece->a);
    const ThetaPiece& base = *part.pieces[0];
    for (std::size_t i = 1; i < D; ++i) {
      IntVec row = part.pieces[i]->slope - base.slope;
      for (std::size_t j = 0; j < n; ++j) ac.A(i - 1, j) = row[j];
      ac.offset.push_back(part.pieces[i]->intercept - base.intercept);
    }
    map.cells.push_back(std::move(ac));
  }
  if (n == 1)
    std::sort(map.cells.begin(), map.cells.end(), [](const AffineCell& a, const AffineCell& b) {
      return a.cell.vertices()[0][0] < b.cell.vertices()[0][0];
    });
  return map;
}

PiecewiseAffineMap linearity_cells(const TropicalDescentDatum& datum, const PolarizationInfo& info) {
  return linearity_cells(datum, info, fundamental_domain(datum));
}

std::vector<IntMatrix> cell_matrices(const PiecewiseAffineMap& map) {
  std::vector<IntMatrix> out;
  for (const auto& c : map.cells) out.push_back(c.A);
  return out;
}

UnimodularReport check_unimodular(const PiecewiseAffineMap& map) {
  UnimodularReport r;
  r.overall = !map.cells.empty();
  for (const auto& c : map.cells) {
    bool ok = is_unimodular_map(c.A);
    r.per_cell.push_back(ok);
    r.overall = r.overall && ok;
  }
  return r;
}

const char* verdict_name(InjectivityVerdict v) {
  switch (v) {
    case InjectivityVerdict::Certified: return "certified";
    case InjectivityVerdict::Refuted: return "refuted";
    case InjectivityVerdict::SampledOk: return "sampled-ok";
  }
  return "unknown";
}

std::vector<RatVec> fundamental_grid(const TropicalDescentDatum& datum, long resolution) {
  require(resolution >= 1, ErrorKind::PreconditionViolated, "resolution must be positive");
  const std::size_t n = datum.dim();
  std::vector<RatVec> pts;
  odometer(zero_int_vec(n), IntVec(n, Integer(resolution - 1)), [&](const IntVec& k) {
    RatVec t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = make_rational(k[i], Integer(resolution));
    pts.push_back(datum.Pmat() * t);
  });
  return pts;
}

namespace {

// y ≡ y' on ℝ/ϖℤ for points of the closed fundamental interval.
bool equivalent_1d(const Rational& y, const Rational& yp, const Rational& period) {
  Rational q = (y - yp) / period;
  return is_integer(q);
}

struct Segment {
  // Points (y(s), y'(s)) = base + s·dir for s ∈ [0, 1].
  Rational y0, yp0, dy, dyp;
};

std::optional<std::pair<Rational, Rational>> refuting_point(const Segment& seg, const Rational& period) {
  std::vector<Rational> params;
  // Prefer points with integral y, then simple fractions along the segment.
  if (seg.dy != 0) {
    Rational a = seg.y0, b = seg.y0 + seg.dy;
    Rational lo = std::min(a, b), hi = std::max(a, b);
    for (Integer k = floor(lo) + 1; Rational(k) < hi && params.size() < 64; ++k)
      params.push_back((Rational(k) - seg.y0) / seg.dy);
  }
  for (const auto& t : {Rational(1, 2), Rational(1, 4), Rational(3, 4), Rational(1, 3), Rational(2, 3), Rational(0),
                        Rational(1)})
    params.push_back(t);
  for (const auto& s : params) {
    Rational y = seg.y0 + s * seg.dy;
    Rational yp = seg.yp0 + s * seg.dyp;
    if (!equivalent_1d(y, yp, period)) return std::make_pair(y, yp);
  }
  return std::nullopt;
}

InjectivityResult injective_exact_1d(const TropicalDescentDatum& datum, const PolarizationInfo& info) {
  require(datum.dim() == 1, ErrorKind::DimensionUnsupported, "exact injectivity is limited to n = 1");
  PiecewiseAffineMap map = linearity_cells(datum, info);
  const Rational period = abs(datum.Pmat()(0, 0));
  InjectivityResult res;
  res.mode = "exact1d";
  res.verdict = InjectivityVerdict::Certified;
  const std::size_t m = info.reps.size() - 1;

  auto refute = [&](const Rational& y, const Rational& yp) {
    res.verdict = InjectivityVerdict::Refuted;
    res.witness = std::make_pair(RatVec{y}, RatVec{yp});
  };

  if (m == 0) {
    // Constant map to a point: any two non-equivalent points collide.
    const auto& v = map.domain.vertices();
    refute(v[0][0], v[0][0] + period / 2);
    return res;
  }

  for (std::size_t s = 0; s < map.cells.size() && !res.witness; ++s)
    for (std::size_t t = s; t < map.cells.size() && !res.witness; ++t) {
      ++res.comparisons;
      const AffineCell& cs = map.cells[s];
      const AffineCell& ct = map.cells[t];
      Rational slo = cs.cell.vertices()[0][0], shi = cs.cell.vertices()[1][0];
      Rational tlo = ct.cell.vertices()[0][0], thi = ct.cell.vertices()[1][0];
      // A_s·y − A_t·y' = c_t − c_s
      std::vector<Rational> alpha(m), beta(m), rhs(m);
      for (std::size_t i = 0; i < m; ++i) {
        alpha[i] = Rational(cs.A(i, 0));
        beta[i] = Rational(-ct.A(i, 0));
        rhs[i] = ct.offset[i] - cs.offset[i];
      }
      std::size_t pivot = m;
      for (std::size_t i = 0; i < m; ++i)
        if (alpha[i] != 0 || beta[i] != 0) {
          pivot = i;
          break;
        }
      if (pivot == m) {
        bool consistent = std::all_of(rhs.begin(), rhs.end(), [](const Rational& r) { return r == 0; });
        if (!consistent) continue;
        auto w = refuting_point({slo, tlo, shi - slo, thi - tlo}, period);
        if (w) refute(w->first, w->second);
        continue;
      }
      // Reduce to the pivot equation, detecting a second independent equation.
      std::optional<std::pair<Rational, Rational>> unique;
      bool inconsistent = false;
      for (std::size_t i = 0; i < m && !inconsistent; ++i) {
        if (i == pivot) continue;
        Rational det = alpha[pivot] * beta[i] - alpha[i] * beta[pivot];
        if (det != 0) {
          Rational y = (rhs[pivot] * beta[i] - rhs[i] * beta[pivot]) / det;
          Rational yp = (alpha[pivot] * rhs[i] - alpha[i] * rhs[pivot]) / det;
          if (unique && (unique->first != y || unique->second != yp)) inconsistent = true;
          unique = std::make_pair(y, yp);
        } else {
          // Parallel rows: consistent only if the right-hand sides scale identically.
          Rational mu = alpha[pivot] != 0 ? alpha[i] / alpha[pivot] : beta[i] / beta[pivot];
          if (rhs[i] != mu * rhs[pivot]) inconsistent = true;
        }
      }
      if (inconsistent) continue;
      if (unique) {
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i)
          if (alpha[i] * unique->first + beta[i] * unique->second != rhs[i]) ok = false;
        const Rational& y = unique->first;
        const Rational& yp = unique->second;
        if (ok && slo <= y && y <= shi && tlo <= yp && yp <= thi && !equivalent_1d(y, yp, period)) refute(y, yp);
        continue;
      }
      // One equation α·y + β·y' = γ, intersected with the box.
      const Rational& a = alpha[pivot];
      const Rational& b = beta[pivot];
      const Rational& g = rhs[pivot];
      Segment seg;
      if (b == 0) {
        Rational y = g / a;
        if (y < slo || y > shi) continue;
        seg = {y, tlo, 0, thi - tlo};
      } else {
        // y' = (g − a·y)/b; restrict y so that y' ∈ [tlo, thi].
        Rational e1 = (g - b * tlo) / a, e2 = (g - b * thi) / a;
        Rational lo = slo, hi = shi;
        if (a != 0) {
          lo = std::max(lo, std::min(e1, e2));
          hi = std::min(hi, std::max(e1, e2));
        } else {
          Rational yp = g / b;
          if (yp < tlo || yp > thi) continue;
        }
        if (lo > hi) continue;
        Rational yp_lo = (g - a * lo) / b, yp_hi = (g - a * hi) / b;
        seg = {lo, yp_lo, hi - lo, yp_hi - yp_lo};
      }
      auto w = refuting_point(seg, period);
      if (w) refute(w->first, w->second);
    }
  return res;
}

InjectivityResult injective_grid(const TropicalDescentDatum& datum, const PolarizationInfo& info, long resolution) {
  InjectivityResult res;
  res.mode = "grid";
  res.resolution = resolution;
  res.verdict = InjectivityVerdict::SampledOk;
  std::map<RatVec, RatVec> seen;
  for (const auto& x : fundamental_grid(datum, resolution)) {
    ++res.comparisons;
    RatVec phi = phi_eval(datum, info, x);
    auto [it, inserted] = seen.emplace(phi, x);
    if (!inserted) {
      res.verdict = InjectivityVerdict::Refuted;
      res.witness = std::make_pair(it->second, x);
      return res;
    }
  }
  return res;
}

}  // namespace

InjectivityResult check_injective(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                  InjectivityMode mode, long resolution) {
  require_polarized(datum);
  if (mode == InjectivityMode::Exact1d) return injective_exact_1d(datum, info);
  return injective_grid(datum, info, resolution);
}

ImageComplex image_complex_1d(const TropicalDescentDatum& datum, const PolarizationInfo& info) {
  require(datum.dim() == 1, ErrorKind::DimensionUnsupported, "image complex is limited to n = 1");
  PiecewiseAffineMap map = linearity_cells(datum, info);
  ImageComplex img;
  const std::size_t k = map.cells.size();
  if (info.reps.size() < 2) {
    img.degenerate = true;
    return img;
  }
  // Vertices sit at cell boundaries (cyclically) where the slope vector changes.
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < k; ++i) {
    const IntMatrix& prev = map.cells[(i + k - 1) % k].A;
    if (prev != map.cells[i].A) starts.push_back(i);
  }
  if (starts.empty()) {
    img.degenerate = true;
    return img;
  }
  for (std::size_t s = 0; s < starts.size(); ++s) {
    std::size_t first = starts[s];
    std::size_t stop = starts[(s + 1) % starts.size()];
    Rational x0 = map.cells[first].cell.vertices()[0][0];
    img.parameters.push_back(x0);
    img.vertices.push_back(phi_eval(datum, info, RatVec{x0}));
    Rational length = 0;
    std::size_t i = first;
    do {
      length += map.cells[i].cell.measure();
      i = (i + 1) % k;
    } while (i != stop);
    IntVec slope = map.cells[first].A.col(0);
    Integer g = 0;
    for (const auto& e : slope) g = gcd(g, e);
    ImageEdge edge;
    if (g == 0) {
      edge.direction = slope;
      edge.lattice_length = 0;
    } else {
      for (auto& e : slope) e /= g;
      edge.direction = slope;
      edge.lattice_length = length * Rational(g);
    }
    img.edges.push_back(edge);
  }
  img.degenerate = img.vertices.size() < 3;
  for (std::size_t e = 0; e < img.edges.size() && !img.degenerate; ++e) {
    const IntVec& d1 = img.edges[e].direction;
    const IntVec& d2 = img.edges[(e + 1) % img.edges.size()].direction;
    if (d1 == -d2) img.degenerate = true;
  }
  return img;
}

FaithfulReport faithful_certificate(const TropicalDescentDatum& datum, const PolarizationInfo& info,
                                    const FaithfulOptions& options) {
  require_polarized(datum);
  FaithfulReport rep;
  const std::size_t n = datum.dim();
  if (n <= 2) {
    PiecewiseAffineMap map = linearity_cells(datum, info);
    UnimodularReport u = check_unimodular(map);
    rep.unimodular = u.overall;
    rep.per_cell = u.per_cell;
    rep.cells = map.cells.size();
    rep.unimodular_method = "exact-cells";
  } else {
    rep.unimodular_method = "sampled";
    rep.unimodular = true;
    for (const auto& x : fundamental_grid(datum, options.resolution)) {
      std::vector<IntVec> slopes;
      bool generic = true;
      for (const auto& b : info.reps) {
        ThetaEvaluation ev = theta_evaluate(ThetaFunction{datum, b, Convention::QEll}, x);
        if (ev.argmin.tie) {
          generic = false;
          break;
        }
        slopes.push_back(piece_slope(datum, b, ev.argmin.minimizers[0]));
      }
      if (!generic) continue;
      IntMatrix A(slopes.size() - 1, n);
      for (std::size_t i = 1; i < slopes.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) A(i - 1, j) = slopes[i][j] - slopes[0][j];
      bool ok = is_unimodular_map(A);
      rep.per_cell.push_back(ok);
      rep.unimodular = rep.unimodular && ok;
    }
    rep.cells = rep.per_cell.size();
  }
  InjectivityMode mode = options.mode.value_or(n == 1 ? InjectivityMode::Exact1d : InjectivityMode::Grid);
  rep.injective = check_injective(datum, info, mode, options.resolution);
  rep.faithful = rep.unimodular && rep.injective.verdict != InjectivityVerdict::Refuted;
  return rep;
}

}  // namespace tropitheta
