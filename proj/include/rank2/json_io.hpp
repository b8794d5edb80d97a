#pragma once

// Deterministic JSON and text rendering of all public value types, plus the
// inverse parsers. Terms are emitted in canonical lex(g1,g2) order; all
// integers are decimal strings in JSON.

#include <string>

#include <json.hpp>

#include "rank2/canonical.hpp"
#include "rank2/deform.hpp"
#include "rank2/polygon.hpp"

namespace rank2 {

nlohmann::ordered_json poly_to_json(const ZPoly& a);
nlohmann::ordered_json poly_to_json(const QLaurent& a);
ZPoly zpoly_from_json(const nlohmann::json& j);          // RING_MISMATCH on "qpoly"
QLaurent qlaurent_from_json(const nlohmann::json& j);    // RING_MISMATCH on "int"

nlohmann::ordered_json polygon_to_json(const LatticePolygon& p);
LatticePolygon polygon_from_json(const nlohmann::json& j);

nlohmann::ordered_json rootvec_to_json(const RootVec& r);

nlohmann::ordered_json decomposition_to_json(const Decomposition& d);

// (y1 + y2 + 1) / (y1*y2) style; names are the chart variable names.
std::string poly_to_text(const ZPoly& a, const std::string& v1, const std::string& v2);
std::string poly_to_text(const QLaurent& a, const std::string& v1, const std::string& v2);

std::string polygon_to_svg(const LatticePolygon& p);

}  // namespace rank2
