#include "tropitheta/json_io.hpp"

namespace tropitheta {

json to_json(const Rational& r) { return to_string(r); }
json to_json(const Integer& z) { return to_string(z); }

json to_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

namespace {

template <class T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class T, class F>
Matrix<T> matrix_from(const json& j, F parse) {
  const json& entries = j.is_object() ? field(j, "entries") : j;
  require(entries.is_array(), ErrorKind::Schema, "matrix entries must be an array of rows");
  const std::size_t rows = entries.size();
  const std::size_t cols = rows ? entries[0].size() : 0;
  if (j.is_object()) {
    require(field(j, "rows").get<std::size_t>() == rows && field(j, "cols").get<std::size_t>() == cols,
            ErrorKind::Schema, "matrix shape does not match its entries");
  }
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(entries[i].is_array() && entries[i].size() == cols, ErrorKind::Schema, "ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse(entries[i][k]);
  }
  return m;
}

}  // namespace

json to_json(const RatMatrix& m) { return matrix_json(m); }
json to_json(const IntMatrix& m) { return matrix_json(m); }

json to_json(const TropicalNumber& t) { return t ? to_json(*t) : json("inf"); }

json to_json(const ValuedScalar& s) {
  json out = json::array();
  for (const auto& [e, c] : s.terms()) out.push_back(json::array({to_json(e), to_json(c)}));
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  fail(ErrorKind::Schema, "expected a rational as \"p/q\" string or an integer, got " + j.dump());
}

Integer integer_from_json(const json& j) {
  Rational r = rational_from_json(j);
  require(is_integer(r), ErrorKind::Schema, "expected an integer, got " + j.dump());
  return r.get_num();
}

RatVec ratvec_from_json(const json& j) {
  require(j.is_array(), ErrorKind::Schema, "expected an array, got " + j.dump());
  RatVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

IntVec intvec_from_json(const json& j) {
  require(j.is_array(), ErrorKind::Schema, "expected an array, got " + j.dump());
  IntVec v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

RatMatrix ratmatrix_from_json(const json& j) { return matrix_from<Rational>(j, rational_from_json); }
IntMatrix intmatrix_from_json(const json& j) { return matrix_from<Integer>(j, integer_from_json); }

TropicalNumber tropical_from_json(const json& j) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "inf")) return std::nullopt;
  return rational_from_json(j);
}

ValuedScalar valued_from_json(const json& j) {
  if (!j.is_array()) return ValuedScalar(rational_from_json(j));
  ValuedScalar s;
  for (const auto& term : j) {
    require(term.is_array() && term.size() == 2, ErrorKind::Schema, "valued term must be [exponent, coefficient]");
    s += ValuedScalar::monomial(rational_from_json(term[1]), rational_from_json(term[0]));
  }
  return s;
}

const json& field(const json& j, const char* key) {
  require(j.is_object(), ErrorKind::Schema, std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  require(it != j.end(), ErrorKind::Schema, std::string("missing key \"") + key + "\"");
  return *it;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
  }
}

json datum_to_json(const TropicalDescentDatum& d) {
  return {{"Pmat", to_json(d.Pmat())}, {"L", to_json(d.L)}, {"ell", to_json(d.ell)}};
}

TropicalDescentDatum datum_from_json(const json& j) {
  auto torus = build_torus(ratmatrix_from_json(field(j, "Pmat")));
  IntMatrix L = intmatrix_from_json(field(j, "L"));
  RatVec ell = j.contains("ell") ? ratvec_from_json(j["ell"]) : zero_rat_vec(torus.dim());
  require(ell.size() == torus.dim(), ErrorKind::Schema, "ell has wrong dimension");
  return validate_datum(torus, L, ell);
}

json polarization_to_json(const PolarizationInfo& info) {
  json reps = json::array();
  for (const auto& b : info.reps) reps.push_back(to_json(b));
  return {{"type", to_json(info.type)}, {"U", to_json(info.U)}, {"V", to_json(info.V)},
          {"D", to_json(info.D)},       {"reps", reps}};
}

json na_datum_to_json(const NADescentDatum& d) {
  json T = json::array();
  for (const auto& row : d.Tmat) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    T.push_back(r);
  }
  json c = json::array();
  for (const auto& x : d.cBasis) c.push_back(to_json(x));
  return {{"Pmat", to_json(d.torus.Pmat)}, {"L", to_json(d.L)}, {"Tmat", T}, {"cBasis", c}};
}

NADescentDatum na_datum_from_json(const json& j) {
  auto torus = build_torus(ratmatrix_from_json(field(j, "Pmat")));
  IntMatrix L = intmatrix_from_json(field(j, "L"));
  const json& T = field(j, "Tmat");
  require(T.is_array(), ErrorKind::Schema, "Tmat must be an array of rows");
  ValuedMatrix Tmat;
  for (const auto& row : T) {
    require(row.is_array(), ErrorKind::Schema, "Tmat rows must be arrays");
    std::vector<ValuedScalar> r;
    for (const auto& x : row) r.push_back(valued_from_json(x));
    Tmat.push_back(r);
  }
  const json& c = field(j, "cBasis");
  require(c.is_array(), ErrorKind::Schema, "cBasis must be an array");
  std::vector<ValuedScalar> cBasis;
  for (const auto& x : c) cBasis.push_back(valued_from_json(x));
  return build_na_datum(torus, L, Tmat, cBasis);
}

std::string vector_key(const IntVec& u) {
  std::string s = "[";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += to_string(u[i]);
  }
  return s + "]";
}

IntVec vector_from_key(const std::string& key) { return intvec_from_json(parse_json(key)); }

json fourier_to_json(const FourierData& fd) {
  json coeffs = json::object();
  for (const auto& [u, g] : fd.coeffs) coeffs[vector_key(u)] = to_json(g);
  json windows = json::array();
  for (const auto& w : fd.windows)
    windows.push_back({{"b", to_json(w.b)},
                       {"radius", to_json(w.radius)},
                       {"G", to_json(w.G)},
                       {"linear", to_json(w.linear)},
                       {"constant", to_json(w.constant)}});
  return {{"L", to_json(fd.L)}, {"coeffs", coeffs}, {"windows", windows}};
}

FourierData fourier_from_json(const json& j) {
  FourierData fd;
  fd.L = intmatrix_from_json(field(j, "L"));
  for (const auto& [key, value] : field(j, "coeffs").items()) fd.coeffs[vector_from_key(key)] = valued_from_json(value);
  for (const auto& w : field(j, "windows"))
    fd.windows.push_back({intvec_from_json(field(w, "b")), integer_from_json(field(w, "radius")),
                          ratmatrix_from_json(field(w, "G")), ratvec_from_json(field(w, "linear")),
                          rational_from_json(field(w, "constant"))});
  return fd;
}

json cell_to_json(const Cell& c) {
  json verts = json::array();
  for (const auto& v : c.vertices()) verts.push_back(to_json(v));
  return {{"vertices", verts}, {"dim", c.dim()}};
}

json argmin_to_json(const ArgminResult& r) {
  json mins = json::array();
  for (const auto& a : r.minimizers) mins.push_back(to_json(a));
  return {{"minimizers", mins}, {"value", to_json(r.value)}, {"tie", r.tie}};
}

json theta_pieces_to_json(const std::vector<ThetaPiece>& pieces) {
  json out = json::array();
  for (const auto& p : pieces)
    out.push_back({{"a", to_json(p.a)},
                   {"slope", to_json(p.slope)},
                   {"intercept", to_json(p.intercept)},
                   {"region", cell_to_json(p.region)}});
  return out;
}

json piecewise_map_to_json(const PiecewiseAffineMap& map) {
  json cells = json::array();
  for (const auto& c : map.cells) {
    json argmins = json::array();
    for (const auto& a : c.argmins) argmins.push_back(to_json(a));
    cells.push_back({{"cell", cell_to_json(c.cell)}, {"argmins", argmins}, {"A", to_json(c.A)},
                     {"offset", to_json(c.offset)}});
  }
  json reps = json::array();
  for (const auto& b : map.reps) reps.push_back(to_json(b));
  return {{"domain", cell_to_json(map.domain)}, {"reps", reps}, {"cells", cells}};
}

json image_complex_to_json(const ImageComplex& img) {
  json verts = json::array();
  for (std::size_t i = 0; i < img.vertices.size(); ++i)
    verts.push_back({{"x", to_json(img.parameters[i])}, {"point", to_json(img.vertices[i])}});
  json edges = json::array();
  for (const auto& e : img.edges)
    edges.push_back({{"direction", to_json(e.direction)}, {"lattice_length", to_json(e.lattice_length)}});
  return {{"vertices", verts}, {"edges", edges}, {"degenerate", img.degenerate}};
}

json injectivity_to_json(const InjectivityResult& r) {
  json out = {{"verdict", verdict_name(r.verdict)},
              {"mode", r.mode},
              {"resolution", r.resolution},
              {"comparisons", r.comparisons},
              {"certified", r.verdict == InjectivityVerdict::Certified}};
  if (r.witness) out["witness"] = json::array({to_json(r.witness->first), to_json(r.witness->second)});
  return out;
}

json faithful_report_to_json(const FaithfulReport& r) {
  json per_cell = json::array();
  for (bool b : r.per_cell) per_cell.push_back(b);
  return {{"unimodular", r.unimodular},
          {"unimodular_method", r.unimodular_method},
          {"per_cell", per_cell},
          {"cells", r.cells},
          {"injective", r.injective.verdict != InjectivityVerdict::Refuted},
          {"injectivity", injectivity_to_json(r.injective)},
          {"faithful", r.faithful}};
}

json voronoi_to_json(const VoronoiCell& v, const Cell& polytope) {
  json rel = json::array();
  for (const auto& r : v.relevant) rel.push_back(to_json(r));
  return {{"relevant", rel}, {"relevant_count", v.relevant.size()}, {"cell", cell_to_json(polytope)}};
}

json decomposition_to_json(const GoodDecomposition& gd) {
  json S = json::array();
  for (const auto& s : gd.S) S.push_back(to_json(s));
  json cells = json::array();
  for (const auto& c : gd.cells) {
    json q = json::array(), basis = json::array(), ell = json::array();
    for (const auto& x : c.q) q.push_back(to_json(x));
    for (const auto& x : c.basis) basis.push_back(to_json(x));
    for (const auto& x : c.ell) ell.push_back(to_json(x));
    cells.push_back({{"cell", cell_to_json(c.cell)}, {"interior", to_json(c.interior)}, {"q", q}, {"basis", basis},
                     {"ell", ell}});
  }
  return {{"G", to_json(gd.G)}, {"d", to_json(gd.d)}, {"voronoi", cell_to_json(gd.voronoi)}, {"S", S},
          {"cells", cells}};
}

json certificate_to_json(const CellCertificate& c) {
  json ell = json::array();
  for (const auto& x : c.ell) ell.push_back(to_json(x));
  return {{"ell", ell}, {"a_tilde", to_json(c.a_tilde)}, {"A", to_json(c.A)}, {"samples", c.samples}};
}

json lift_result_to_json(const SurjectiveLiftResult& r) {
  json reps = json::array();
  for (const auto& b : r.reps) reps.push_back(to_json(b));
  json cells = json::array();
  for (const auto& c : r.target_cells) cells.push_back(cell_to_json(c));
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"point", to_json(s.point)}, {"target", to_json(s.target)}, {"lifted", to_json(s.lifted)}});
  return {{"fourier", fourier_to_json(r.fd)}, {"residues", to_json(r.residues)}, {"reps", reps},
          {"target_cells", cells}, {"samples", samples}, {"attempts", r.attempts}, {"verified", r.verified}};
}

json error_to_json(const Error& e) { return {{"error", kind_name(e.kind())}, {"message", e.what()}}; }

}  // namespace tropitheta
