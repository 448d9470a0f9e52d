#pragma once

#include <json.hpp>

#include "alcove/apartment.hpp"
#include "alcove/concave.hpp"
#include "alcove/fibre.hpp"
#include "alcove/series.hpp"

namespace alcove {

// All rationals serialize as "p/q" strings, roots as integer coefficient
// arrays, points as coordinate-string arrays. Readers throw ParseError on
// malformed input.

nlohmann::json concave_to_json(const ConcaveMap& f);
ConcaveMap concave_from_json(const nlohmann::json& j);

nlohmann::json tuple_to_json(const ConcaveTuple& fs);
ConcaveTuple tuple_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const ApartmentPoint& p);
ApartmentPoint point_from_json(const nlohmann::json& j, DynkinType dynkin);

nlohmann::json set_to_json(const BoundedSet& s);
BoundedSet set_from_json(const nlohmann::json& j, DynkinType dynkin);

nlohmann::json matrix_to_json(const TruncatedLaurentMatrix& m);
TruncatedLaurentMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json pattern_to_json(const ValuationPattern& p);
ValuationPattern pattern_from_json(const nlohmann::json& j);

nlohmann::json fibre_to_json(const FibreRootDatum& f);
nlohmann::json mckay_to_json(const McKayData& m);
nlohmann::json witness_to_json(const TypeWitness& w);
nlohmann::json moyprasad_to_json(const MoyPrasadDatum& d);

}  // namespace alcove
