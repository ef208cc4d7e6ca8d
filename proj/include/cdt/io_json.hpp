#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdt/planners.hpp"
#include "cdt/tcs.hpp"

namespace cdt {
namespace io {

using Json = nlohmann::ordered_json;

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json polyline_to_json(const Polyline& p);
Polyline polyline_from_json(const Json& j);

Json encoding_to_json(const Encoding& e);
Encoding encoding_from_json(const Json& j);

// Canonical map schema:
// {"name": str, "boundary": [[x,y],...], "obstacles": [[[x,y],...],...]}
Json environment_to_json(const Environment& env);
Environment environment_from_json(const Json& j);  // normalizes orientations
Environment load_environment_file(const std::string& path);

Json dissection_to_json(const DissectionGraph& g);

// The index file embeds the environment; dissect() is deterministic, so the
// graph and cell ids reconstruct exactly on load.
Json tcs_index_to_json(const TcsIndex& idx);

struct TcsIndexBundle {
    Environment env;
    std::unique_ptr<DissectionGraph> graph;
    TcsIndex index;
};
TcsIndexBundle tcs_index_from_json(const Json& j);
TcsIndexBundle load_tcs_index_file(const std::string& path);

Json config_set_to_json(const ConfigSet& set);

Json plan_result_to_json(const Polyline& path);

enum class TaskKind { Tcs, Foc, Tpp, Tmv, Utpp };

struct Task {
    TaskKind kind = TaskKind::Tcs;
    std::string label;
    Point anchor;
    double tether = 0.0;
    double zeta_eff = 0.0;
    Polyline start_config;   // tpp/tmv
    std::vector<Point> goals;  // foc/tpp/utpp goal, tmv targets; utpp uses [start, goal]
};

std::string task_kind_name(TaskKind kind);

// Parses {"tasks":[...]} and validates the per-kind required fields plus the
// boundary bounding box containment of all coordinates.
std::vector<Task> tasks_from_json(const Json& j, const Environment& env);

}  // namespace io
}  // namespace cdt
