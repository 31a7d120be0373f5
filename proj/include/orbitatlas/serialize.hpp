#ifndef ORBITATLAS_SERIALIZE_HPP
#define ORBITATLAS_SERIALIZE_HPP

#include "orbitatlas/cominuscule.hpp"
#include "orbitatlas/hasse.hpp"
#include "orbitatlas/isotropic.hpp"
#include "orbitatlas/qmatrix.hpp"

#include <json.hpp>

#include <string>

namespace orbitatlas {

// Wire formats: rationals as "num/den" strings, matrices as row-major string
// arrays, orbit triplets as 3-element integer arrays. Everything is emitted
// through ordered containers, so identical inputs give identical bytes.

nlohmann::ordered_json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json tangent_to_json(const TangentElement& x);
TangentElement tangent_from_json(const IsoContext& ctx, const nlohmann::json& j);

nlohmann::ordered_json triplet_to_json(const OrbitTriplet& o);
OrbitTriplet triplet_from_json(const nlohmann::json& j);

nlohmann::ordered_json hasse_to_json(const HasseDiagram& d);
std::string hasse_to_dot(const HasseDiagram& d, const std::string& graph_name);

nlohmann::ordered_json family_to_json(const LociReport& rep);
std::string loci_to_tsv(const LociReport& rep);

std::string triplets_to_tsv(const IsoContext& ctx, const std::vector<OrbitTriplet>& orbits);

void write_text_file(const std::string& path, const std::string& content);

} // namespace orbitatlas

#endif
