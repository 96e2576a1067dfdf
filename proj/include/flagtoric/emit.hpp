#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "flagtoric/census.hpp"
#include "flagtoric/fan.hpp"
#include "flagtoric/mirror.hpp"
#include "flagtoric/polytope.hpp"
#include "flagtoric/sections.hpp"
#include "flagtoric/series.hpp"

namespace flagtoric {

inline constexpr const char* kSchema = "flagtoric/1";

using json = nlohmann::ordered_json;

json graph_json(const LadderGraph& g);
json paths_json(const LadderGraph& g, const PathTable& t);
json meanders_json(const LadderGraph& g, const std::vector<Meander>& ms);
json polytope_json(const LadderGraph& g, const ReflexivePolytope& p);
json fan_json(const LadderGraph& g, const std::vector<SimplicialCone>& cones);
json strata_json(const LadderGraph& g, const std::vector<ConifoldStratum>& strata);
json relations_json(const LadderGraph& g, const PathTable& t,
                    const std::vector<QuadraticRelation>& rels);
json series_json(const FlagShape& shape, const std::map<std::vector<long>, Rat>& coeffs);
json mirror_json(const LadderGraph& g, const MirrorSystem& sys);
json census_json(const std::vector<CensusRow>& rows);

std::string series_csv(const std::map<std::vector<long>, Rat>& coeffs);
std::string relations_csv(const std::vector<QuadraticRelation>& rels);
std::string census_csv(const std::vector<CensusRow>& rows);
std::string mirror_text(const LadderGraph& g, const MirrorSystem& sys);

} // namespace flagtoric
