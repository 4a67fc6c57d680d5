#include "tropitheta/reports.hpp"

#include "tropitheta/svg.hpp"

namespace tropitheta {

namespace {

std::vector<Rational> breakpoints(const PiecewiseAffineMap& map) {
  std::vector<Rational> out;
  const Rational lo = map.domain.vertices().front()[0];
  const Rational hi = map.domain.vertices().back()[0];
  for (const auto& c : map.cells) {
    Rational x = c.cell.vertices().back()[0];
    if (x != lo && x != hi) out.push_back(x);
  }
  return out;
}

json theta_table(const TropicalDescentDatum& datum, const PolarizationInfo& info) {
  Cell domain = fundamental_domain(datum);
  json table = json::array();
  for (const auto& b : info.reps)
    table.push_back({{"b", to_json(b)}, {"pieces", theta_pieces_to_json(theta_pieces({datum, b, Convention::QEll}, domain))}});
  return table;
}

Report analyze_embedding(const TropicalDescentDatum& datum, const PolarizationInfo& info) {
  Report r;
  json& out = r.body;
  out["datum"] = datum_to_json(datum);
  out["polarization"] = polarization_to_json(info);
  if (datum.dim() > 2) return r;
  PiecewiseAffineMap map = linearity_cells(datum, info);
  out["map"] = piecewise_map_to_json(map);
  if (datum.dim() == 1) {
    out["theta"] = theta_table(datum, info);
    out["breakpoints"] = to_json(breakpoints(map));
    r.files.emplace_back("theta.svg", svg_theta_graphs(datum, info));
    if (info.reps.size() >= 2) {
      ImageComplex img = image_complex_1d(datum, info);
      out["image"] = image_complex_to_json(img);
      json lengths = json::array();
      for (const auto& e : img.edges) lengths.push_back(to_json(e.lattice_length));
      out["edge_lattice_lengths"] = lengths;
      r.files.emplace_back("image.svg", svg_image_polygon(img));
    }
  } else {
    r.files.emplace_back("cells.svg", svg_cells(map));
  }
  return r;
}

FaithfulOptions faithful_options(const ReportOptions& opt, std::size_t n) {
  require(opt.mode == "exact" || opt.mode == "sampled", ErrorKind::Schema, "mode must be exact or sampled");
  require(opt.resolution >= 1, ErrorKind::Schema, "resolution must be positive");
  FaithfulOptions fo;
  fo.resolution = opt.resolution;
  if (opt.mode == "sampled" || n > 1) fo.mode = InjectivityMode::Grid;
  return fo;
}

}  // namespace

Report type_report(const json& in) {
  auto datum = datum_from_json(field(in, "datum"));
  Report r;
  r.body = {{"datum", datum_to_json(datum)},
            {"G", to_json(datum.G)},
            {"positive_definite", datum.positive_definite},
            {"polarization", polarization_to_json(polarization_type(datum))}};
  return r;
}

Report theta_report(const json& in) {
  auto datum = datum_from_json(field(in, "datum"));
  IntVec b = intvec_from_json(field(in, "b"));
  require(b.size() == datum.dim(), ErrorKind::Schema, "b has wrong dimension");
  Convention conv = in.contains("convention") ? parse_convention(in["convention"].get<std::string>()) : Convention::QEll;
  ThetaFunction theta{datum, b, conv};
  json values = json::array(), argmins = json::array();
  for (const auto& p : field(in, "points")) {
    RatVec x = ratvec_from_json(p);
    require(x.size() == datum.dim(), ErrorKind::Schema, "point has wrong dimension");
    ThetaEvaluation ev = theta_evaluate(theta, x);
    values.push_back(to_json(ev.value));
    argmins.push_back(argmin_to_json(ev.argmin));
  }
  Report r;
  r.body = {{"convention", convention_name(conv)}, {"b", to_json(b)}, {"values", values}, {"argmins", argmins}};
  return r;
}

Report embed_report(const json& in) {
  auto datum = datum_from_json(field(in, "datum"));
  require_polarized(datum);
  return analyze_embedding(datum, polarization_type(datum));
}

Report certify_report(const json& in, const ReportOptions& opt) {
  auto datum = datum_from_json(field(in, "datum"));
  PolarizationInfo info = polarization_type(datum);
  FaithfulReport rep = faithful_certificate(datum, info, faithful_options(opt, datum.dim()));
  Report r;
  r.body = faithful_report_to_json(rep);
  r.body["polarization"] = polarization_to_json(info);
  r.status = rep.faithful ? 0 : 3;
  return r;
}

Report voronoi_report(const json& in) {
  Report r;
  json& out = r.body;
  if (in.contains("datum")) {
    auto datum = datum_from_json(in["datum"]);
    PolarizationInfo info = polarization_type(datum);
    TropicalDescentDatum ad = adapted_datum(datum, info);
    GoodDecomposition gd = good_decomposition(ad.G, info.type);
    out["polarization"] = polarization_to_json(info);
    out["voronoi"] = voronoi_to_json(voronoi_cell(ad.G), gd.voronoi);
    out["decomposition"] = decomposition_to_json(gd);
    json certs = json::array();
    for (const auto& sigma : gd.cells)
      certs.push_back(certificate_to_json(cell_certificate(datum, info, sigma, zero_int_vec(datum.dim()))));
    out["certificates"] = certs;
  } else {
    RatMatrix G = ratmatrix_from_json(field(in, "G"));
    out["voronoi"] = voronoi_to_json(voronoi_cell(G), voronoi_polytope(G));
    if (in.contains("d")) out["decomposition"] = decomposition_to_json(good_decomposition(G, intvec_from_json(in["d"])));
  }
  return r;
}

Report lift_report(const json& in, const ReportOptions& opt) {
  NADescentDatum na = na_datum_from_json(field(in, "na_datum"));
  TropicalDescentDatum td = c_trop(na);
  Report r;
  json& out = r.body;
  out["c_trop"] = datum_to_json(td);
  if (in.contains("b")) {
    IntVec b = intvec_from_json(in["b"]);
    FourierData fd = fourier_lift(na, b, opt.window);
    json checks = json::array();
    bool ok = check_convergence(fd);
    for (std::size_t i = 0; i < na.dim(); ++i) {
      IntVec w = zero_int_vec(na.dim());
      w[i] = 1;
      ok = verify_na_quasi_periodicity(fd, na, w) && ok;
    }
    ThetaFunction theta{td, b, Convention::LambdaGamma};
    if (in.contains("points"))
      for (const auto& p : in["points"]) {
        RatVec v = ratvec_from_json(p);
        Rational lifted = tropicalize_fourier(fd, v);
        Rational expected = theta_eval(theta, v);
        ok = ok && lifted == expected;
        checks.push_back({{"point", to_json(v)}, {"tropicalized", to_json(lifted)}, {"theta", to_json(expected)}});
      }
    out["fourier"] = fourier_to_json(fd);
    out["checks"] = checks;
    out["verified"] = ok;
    if (!ok) {
      r.status = 3;
      return r;
    }
  }
  if (in.contains("targets")) {
    std::vector<TropicalNumber> targets;
    for (const auto& t : in["targets"]) targets.push_back(tropical_from_json(t));
    SurjectiveLiftResult res = surjective_lift(na, targets, opt.window);
    out["surjective"] = lift_result_to_json(res);
    if (!res.verified) r.status = 3;
  }
  if (in.contains("divide")) out["divided"] = na_datum_to_json(divide_datum(na, integer_from_json(in["divide"])));
  return r;
}

Report example_report(long d, const Rational& varpi, const ReportOptions& opt) {
  require(d >= 2, ErrorKind::PreconditionViolated, "d must be at least 2");
  require(varpi > 0, ErrorKind::PreconditionViolated, "varpi must be positive");
  auto datum = validate_datum(build_torus(RatMatrix{{varpi}}), IntMatrix{{Integer(d)}}, RatVec{Rational(0)});
  PolarizationInfo info = polarization_type(datum);
  Report r = analyze_embedding(datum, info);
  FaithfulReport rep = faithful_certificate(datum, info, faithful_options(opt, 1));
  json& out = r.body;
  out["d"] = d;
  out["varpi"] = to_json(varpi);
  out["report"] = faithful_report_to_json(rep);
  out["unimodular"] = rep.unimodular;
  out["injective"] = rep.injective.verdict != InjectivityVerdict::Refuted;
  out["faithful"] = rep.faithful;
  return r;
}

}  // namespace tropitheta
