#pragma once

#include <string>

#include <json.hpp>

#include "orthoplan/pipeline.hpp"
#include "orthoplan/verify.hpp"

namespace orthoplan {

using json = nlohmann::ordered_json;

PlanarGraph graph_from_json(const json& j);
PlanarGraph read_graph_file(const std::string& path);
json graph_to_json(const PlanarGraph& g);

json plan_to_json(const OrthoPlan& plan, const std::unordered_map<Vid, std::string>& labels);
OrthoPlan plan_from_json(const json& j);
OrthoPlan read_plan_file(const std::string& path);

json rel_to_json(const Rel& rel);
json ordering_to_json(const CanonicalOrdering& ord);
json analysis_to_json(const PlanarGraph& g);
json manifest_to_json(const PipelineResult& res, const std::string& command,
                      const std::string& input, const std::vector<std::string>& outputs);
json verify_report_to_json(const VerifyReport& rep);

// vertical-slab decomposition of a simple rectilinear polygon
std::vector<Rect> polygon_to_rects(const RectilinearPolygon& poly);

} // namespace orthoplan
