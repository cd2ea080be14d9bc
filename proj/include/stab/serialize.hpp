#pragma once

// JSON serialization with exact rationals as "p/q" strings. The
// descriptor schema is the stable on-disk format consumed by `scan`:
//   {"type":"glued","A1":{"M":[[p,q],[r,s]],"n":k},"A2":{...}}
//   {"type":"divisorial","B":[x,y],"omega":[z,w],"translate":{...}}
// Keys keep insertion order (ordered_json) so identical inputs always
// produce byte-identical reports.

#include "stab/conditions.hpp"
#include "stab/walls.hpp"

#include <json.hpp>

namespace stab {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json gauss_json(const GaussQ& z);
GaussQ gauss_from_json(const Json& j);

Json divisor_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

Json numclass_json(const NumClass& c);
NumClass numclass_from_json(const Json& j);

Json complexclass_json(const ComplexClass& c);
ComplexClass complexclass_from_json(const Json& j);

Json curveclass_json(const CurveClass& c);

Json mat2_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

Json liftedgl_json(const LiftedGL& g);
LiftedGL liftedgl_from_json(const Json& j);

Json phasepoint_json(const PhasePoint& p);

Json descriptor_json(const StabilityDescriptor& d);
StabilityDescriptor descriptor_from_json(const Json& j);

Json perversity_json(const PerversityComparison& p);
Json sky_verdict_json(const SkyscraperVerdict& v);
Json boundary_result_json(const BoundaryResult& r);
Json side_result_json(const SideResult& r);
Json neighborhood_json(const NeighborhoodReport& r);
Json catalog_entry_json(const CatalogEntry& e);
Json validation_json(const ValidationReport& r);

}  // namespace stab
