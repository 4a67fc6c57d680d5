#pragma once

#include <json.hpp>

#include "tropitheta/embedding.hpp"
#include "tropitheta/error.hpp"
#include "tropitheta/nalift.hpp"
#include "tropitheta/voronoi.hpp"

namespace tropitheta {

using json = nlohmann::json;

// Rationals travel as strings "p" or "p/q"; integers may also be JSON numbers on input.
json to_json(const Rational& r);
json to_json(const Integer& z);
json to_json(const RatVec& v);
json to_json(const IntVec& v);
json to_json(const RatMatrix& m);
json to_json(const IntMatrix& m);
json to_json(const TropicalNumber& t);
json to_json(const ValuedScalar& s);

Rational rational_from_json(const json& j);
Integer integer_from_json(const json& j);
RatVec ratvec_from_json(const json& j);
IntVec intvec_from_json(const json& j);
RatMatrix ratmatrix_from_json(const json& j);
IntMatrix intmatrix_from_json(const json& j);
TropicalNumber tropical_from_json(const json& j);
ValuedScalar valued_from_json(const json& j);

// Missing keys and wrong types become ErrorKind::Schema.
const json& field(const json& j, const char* key);
json parse_json(const std::string& text);

json datum_to_json(const TropicalDescentDatum& d);
TropicalDescentDatum datum_from_json(const json& j);
json polarization_to_json(const PolarizationInfo& info);

json na_datum_to_json(const NADescentDatum& d);
NADescentDatum na_datum_from_json(const json& j);
std::string vector_key(const IntVec& u);
IntVec vector_from_key(const std::string& key);
json fourier_to_json(const FourierData& fd);
FourierData fourier_from_json(const json& j);

json cell_to_json(const Cell& c);
json argmin_to_json(const ArgminResult& r);
json theta_pieces_to_json(const std::vector<ThetaPiece>& pieces);
json piecewise_map_to_json(const PiecewiseAffineMap& map);
json image_complex_to_json(const ImageComplex& img);
json injectivity_to_json(const InjectivityResult& r);
json faithful_report_to_json(const FaithfulReport& r);
json voronoi_to_json(const VoronoiCell& v, const Cell& polytope);
json decomposition_to_json(const GoodDecomposition& gd);
json certificate_to_json(const CellCertificate& c);
json lift_result_to_json(const SurjectiveLiftResult& r);
json error_to_json(const Error& e);

}  // namespace tropitheta
