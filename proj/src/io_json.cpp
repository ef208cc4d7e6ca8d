#include "cdt/io_json.hpp"

#include <fstream>

namespace cdt {
namespace io {

namespace {

double number_at(const Json& j, const char* what) {
    if (!j.is_number()) throw InvalidInput(std::string("expected a number for ") + what);
    return j.get<double>();
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Point> points_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of [x,y]");
    std::vector<Point> pts;
    pts.reserve(j.size());
    for (const Json& item : j) pts.push_back(point_from_json(item));
    return pts;
}

}  // namespace

Json point_to_json(const Point& p) { return Json::array({p.x, p.y}); }

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidInput("a point must be an [x,y] array");
    return {number_at(j[0], "x"), number_at(j[1], "y")};
}

Json polyline_to_json(const Polyline& p) {
    Json out = Json::array();
    for (const Point& w : p.waypoints) out.push_back(point_to_json(w));
    return out;
}

Polyline polyline_from_json(const Json& j) {
    return make_polyline(points_from_json(j, "polyline"));
}

Json encoding_to_json(const Encoding& e) {
    Json out;
    out["start"] = point_to_json(e.start);
    out["seq"] = e.seq;
    out["end"] = point_to_json(e.end);
    return out;
}

Encoding encoding_from_json(const Json& j) {
    Encoding e;
    e.start = point_from_json(member(j, "start"));
    e.end = point_from_json(member(j, "end"));
    const Json& seq = member(j, "seq");
    if (!seq.is_array()) throw InvalidInput("'seq' must be an array of cell ids");
    for (const Json& c : seq) e.seq.push_back(c.get<CellId>());
    return e;
}

Json environment_to_json(const Environment& env) {
    Json out;
    out["name"] = env.name;
    Json boundary = Json::array();
    for (const Point& p : env.boundary.vertices) boundary.push_back(point_to_json(p));
    out["boundary"] = boundary;
    Json obstacles = Json::array();
    for (const auto& obs : env.obstacles) {
        Json ring = Json::array();
        for (const Point& p : obs.vertices) ring.push_back(point_to_json(p));
        obstacles.push_back(ring);
    }
    out["obstacles"] = obstacles;
    return out;
}

Environment environment_from_json(const Json& j) {
    Environment env;
    if (j.contains("name")) env.name = j.at("name").get<std::string>();
    env.boundary.vertices = points_from_json(member(j, "boundary"), "boundary");
    if (j.contains("obstacles")) {
        const Json& obstacles = j.at("obstacles");
        if (!obstacles.is_array()) throw InvalidInput("'obstacles' must be an array of rings");
        for (const Json& ring : obstacles) {
            SimplePolygon poly;
            poly.vertices = points_from_json(ring, "obstacle");
            env.obstacles.push_back(std::move(poly));
        }
    }
    return normalize_environment(std::move(env));
}

Environment load_environment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open map file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
    return environment_from_json(j);
}

Json dissection_to_json(const DissectionGraph& g) {
    Json out;
    out["name"] = g.env().name;
    out["cellCount"] = g.cells().size();
    out["cutlineCount"] = g.cutlines().size();
    Json cells = Json::array();
    for (const ConvexCell& cell : g.cells()) {
        Json c;
        c["id"] = cell.id;
        Json poly = Json::array();
        for (const Point& p : cell.polygon.vertices) poly.push_back(point_to_json(p));
        c["polygon"] = poly;
        c["cutlines"] = cell.cutline_ids;
        cells.push_back(c);
    }
    out["cells"] = cells;
    Json cuts = Json::array();
    for (const Cutline& cut : g.cutlines()) {
        Json c;
        c["id"] = cut.id;
        c["segment"] = Json::array({point_to_json(cut.segment.a), point_to_json(cut.segment.b)});
        c["cells"] = Json::array({cut.cells[0], cut.cells[1]});
        cuts.push_back(c);
    }
    out["cutlines"] = cuts;
    return out;
}

Json tcs_index_to_json(const TcsIndex& idx) {
    Json out;
    out["type"] = "cdt-tcs-index";
    out["anchor"] = point_to_json(idx.anchor);
    out["tether"] = idx.tether;
    out["cellCount"] = idx.table.size();
    out["encodingCount"] = idx.encoding_count();
    out["environment"] = environment_to_json(idx.graph->env());
    Json table = Json::array();
    for (const auto& entries : idx.table) {
        Json cell_entries = Json::array();
        for (const NodeSeq& s : entries) cell_entries.push_back(s);
        table.push_back(cell_entries);
    }
    out["table"] = table;
    return out;
}

TcsIndexBundle tcs_index_from_json(const Json& j) {
    if (!j.is_object() || j.value("type", "") != std::string("cdt-tcs-index"))
        throw InvalidInput("not a cdt-tcs-index file");
    TcsIndexBundle b;
    b.env = environment_from_json(member(j, "environment"));
    b.graph = std::make_unique<DissectionGraph>(dissect(b.env));
    b.index.anchor = point_from_json(member(j, "anchor"));
    b.index.tether = number_at(member(j, "tether"), "tether");
    b.index.graph = b.graph.get();
    const Json& table = member(j, "table");
    if (!table.is_array() || table.size() != b.graph->cells().size())
        throw InvalidInput("index table does not match the dissection");
    b.index.table.resize(table.size());
    for (std::size_t c = 0; c < table.size(); ++c) {
        for (const Json& seq : table[c]) {
            NodeSeq s;
            for (const Json& id : seq) s.push_back(id.get<CellId>());
            b.index.table[c].push_back(std::move(s));
        }
    }
    return b;
}

TcsIndexBundle load_tcs_index_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open index file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
    return tcs_index_from_json(j);
}

Json config_set_to_json(const ConfigSet& set) {
    Json out;
    out["goal"] = point_to_json(set.goal);
    Json configs = Json::array();
    for (const TetherConfig& c : set.configs) {
        Json item;
        item["path"] = polyline_to_json(c.path);
        item["cost"] = c.cost;
        item["seq"] = c.seq;
        configs.push_back(item);
    }
    out["configs"] = configs;
    out["count"] = set.configs.size();
    return out;
}

Json plan_result_to_json(const Polyline& path) {
    Json out;
    out["path"] = polyline_to_json(path);
    out["cost"] = cost(path);
    return out;
}

std::string task_kind_name(TaskKind kind) {
    switch (kind) {
        case TaskKind::Tcs: return "tcs";
        case TaskKind::Foc: return "foc";
        case TaskKind::Tpp: return "tpp";
        case TaskKind::Tmv: return "tmv";
        case TaskKind::Utpp: return "utpp";
    }
    return "?";
}

std::vector<Task> tasks_from_json(const Json& j, const Environment& env) {
    const BBox box = bbox_of(env.boundary.vertices);
    const auto check_inside = [&](const Point& p, const std::string& what) {
        if (!box.contains(p, kPointTol))
            throw InvalidInput("task " + what + " lies outside the boundary bounding box");
    };

    const Json& tasks = member(j, "tasks");
    if (!tasks.is_array()) throw InvalidInput("'tasks' must be an array");
    std::vector<Task> out;
    int n = 0;
    for (const Json& tj : tasks) {
        Task t;
        const std::string kind = member(tj, "kind").get<std::string>();
        if (kind == "tcs")
            t.kind = TaskKind::Tcs;
        else if (kind == "foc")
            t.kind = TaskKind::Foc;
        else if (kind == "tpp")
            t.kind = TaskKind::Tpp;
        else if (kind == "tmv")
            t.kind = TaskKind::Tmv;
        else if (kind == "utpp")
            t.kind = TaskKind::Utpp;
        else
            throw InvalidInput("unknown task kind '" + kind + "'");
        t.label = tj.value("label", kind + "-" + std::to_string(n));

        t.anchor = point_from_json(member(tj, "anchor"));
        check_inside(t.anchor, "anchor");

        if (t.kind == TaskKind::Utpp) {
            t.zeta_eff = tj.value("zetaEff", 0.0);
        } else {
            t.tether = number_at(member(tj, "tether"), "tether");
            if (!(t.tether > 0.0)) throw InvalidInput("task tether must be positive");
        }

        if (t.kind == TaskKind::Tpp || t.kind == TaskKind::Tmv) {
            t.start_config = polyline_from_json(member(tj, "config"));
            for (const Point& p : t.start_config.waypoints) check_inside(p, "config waypoint");
        }

        if (t.kind == TaskKind::Foc || t.kind == TaskKind::Tpp) {
            t.goals.push_back(point_from_json(member(tj, "goal")));
        } else if (t.kind == TaskKind::Tmv) {
            for (const Json& g : member(tj, "targets")) t.goals.push_back(point_from_json(g));
            if (t.goals.empty()) throw InvalidInput("tmv task needs at least one target");
        } else if (t.kind == TaskKind::Utpp) {
            t.goals.push_back(point_from_json(member(tj, "start")));
            t.goals.push_back(point_from_json(member(tj, "goal")));
        }
        for (const Point& p : t.goals) check_inside(p, "goal");
        out.push_back(std::move(t));
        ++n;
    }
    return out;
}

}  // namespace io
}  // namespace cdt
