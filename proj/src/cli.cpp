#include "cdt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cdt/bench.hpp"
#include "cdt/io_json.hpp"
#include "cdt/oracle.hpp"
#include "cdt/svg.hpp"

namespace cdt {
namespace cli {

namespace {

Point parse_point(const std::string& s) {
    std::istringstream is(s);
    double x, y;
    char comma = 0;
    if (!(is >> x >> comma >> y) || comma != ',')
        throw InvalidInput("expected a point as X,Y but got '" + s + "'");
    std::string rest;
    if (is >> rest) throw InvalidInput("trailing characters in point '" + s + "'");
    return {x, y};
}

Polyline parse_polyline(const std::string& s) {
    std::vector<Point> pts;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ';'))
        if (!item.empty()) pts.push_back(parse_point(item));
    if (pts.empty()) throw InvalidInput("expected a polyline as x0,y0;x1,y1;... got '" + s + "'");
    return make_polyline(std::move(pts));
}

std::vector<Point> parse_points(const std::string& s) {
    return parse_polyline(s).waypoints;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << content;
}

void emit_json(std::ostream& out, const io::Json& j) { out << j.dump(2) << "\n"; }

std::size_t max_encodings_default() {
    if (const char* env = std::getenv("CDT_MAX_ENCODINGS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw InvalidInput("CDT_MAX_ENCODINGS must be a positive integer");
    }
    return kDefaultMaxEncodings;
}

void print_path_summary(std::ostream& out, const Polyline& path) {
    out << "cost " << cost(path) << "\n";
    out << "path";
    for (const Point& p : path.waypoints) out << " " << p.x << "," << p.y;
    out << "\n";
}

struct SvgRequest {
    std::string path;
    bool wanted() const { return !path.empty(); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tethered-robot planning over convex dissection topology"};
    app.require_subcommand(1);

    // dissect
    std::string d_map, d_out, d_svg;
    bool d_json = false;
    auto* cmd_dissect = app.add_subcommand("dissect", "Convex dissection of a map");
    cmd_dissect->add_option("map", d_map, "map JSON file")->required();
    cmd_dissect->add_option("-o,--output", d_out, "write dissection JSON here");
    cmd_dissect->add_option("--svg", d_svg, "write an SVG rendering here");
    cmd_dissect->add_flag("--json", d_json, "machine-readable stdout");

    // tcs
    std::string t_map, t_anchor, t_out, t_svg;
    double t_tether = 0.0;
    std::size_t t_max = 0;
    bool t_json = false;
    auto* cmd_tcs = app.add_subcommand("tcs", "Tethered configuration search preprocessing");
    cmd_tcs->add_option("map", t_map, "map JSON file")->required();
    cmd_tcs->add_option("--anchor", t_anchor, "anchor point X,Y")->required();
    cmd_tcs->add_option("--tether", t_tether, "tether length")->required();
    cmd_tcs->add_option("-o,--output", t_out, "write the index JSON here")->required();
    cmd_tcs->add_option("--max-encodings", t_max, "abort past this many encodings");
    cmd_tcs->add_option("--svg", t_svg, "write an SVG rendering here");
    cmd_tcs->add_flag("--json", t_json, "machine-readable stdout");

    // foc
    std::string f_index, f_goal, f_svg;
    bool f_json = false;
    auto* cmd_foc = app.add_subcommand("foc", "All feasible optimal configurations at a goal");
    cmd_foc->add_option("index", f_index, "index JSON file")->required();
    cmd_foc->add_option("--goal", f_goal, "goal point X,Y")->required();
    cmd_foc->add_option("--svg", f_svg, "write an SVG rendering here");
    cmd_foc->add_flag("--json", f_json, "machine-readable stdout");

    // tpp
    std::string p_index, p_config, p_goal, p_svg;
    bool p_json = false;
    auto* cmd_tpp = app.add_subcommand("tpp", "Optimal tethered point-to-point path");
    cmd_tpp->add_option("index", p_index, "index JSON file")->required();
    cmd_tpp->add_option("--config", p_config, "start configuration x0,y0;x1,y1;...")->required();
    cmd_tpp->add_option("--goal", p_goal, "goal point X,Y")->required();
    cmd_tpp->add_option("--svg", p_svg, "write an SVG rendering here");
    cmd_tpp->add_flag("--json", p_json, "machine-readable stdout");

    // tmv
    std::string m_index, m_config, m_targets, m_svg;
    bool m_json = false;
    auto* cmd_tmv = app.add_subcommand("tmv", "Optimal tethered multi-goal tour");
    cmd_tmv->add_option("index", m_index, "index JSON file")->required();
    cmd_tmv->add_option("--config", m_config, "start configuration x0,y0;x1,y1;...")->required();
    cmd_tmv->add_option("--targets", m_targets, "ordered targets x1,y1;x2,y2;...")->required();
    cmd_tmv->add_option("--svg", m_svg, "write an SVG rendering here");
    cmd_tmv->add_flag("--json", m_json, "machine-readable stdout");

    // utpp
    std::string u_map, u_anchor, u_start, u_goal, u_svg;
    double u_zeta_eff = 0.0;
    bool u_json = false;
    auto* cmd_utpp = app.add_subcommand("utpp", "Globally optimal untethered path");
    cmd_utpp->add_option("map", u_map, "map JSON file")->required();
    cmd_utpp->add_option("--anchor", u_anchor, "anchor point X,Y")->required();
    cmd_utpp->add_option("--zeta-eff", u_zeta_eff,
                         "effective tether bound (default: 2 x map diameter)");
    cmd_utpp->add_option("--start", u_start, "start point X,Y")->required();
    cmd_utpp->add_option("--goal", u_goal, "goal point X,Y")->required();
    cmd_utpp->add_option("--svg", u_svg, "write an SVG rendering here");
    cmd_utpp->add_flag("--json", u_json, "machine-readable stdout");

    // bench
    std::string b_map, b_suite;
    int b_reps = 20;
    unsigned b_seed = 42;
    bool b_json = false, b_no_timing = false;
    auto* cmd_bench = app.add_subcommand("bench", "Desk-scale benchmark harness");
    cmd_bench->add_option("map", b_map, "map JSON file")->required();
    cmd_bench->add_option("--suite", b_suite, "task suite JSON file")->required();
    cmd_bench->add_option("--reps", b_reps, "repetitions per task (default 20)");
    cmd_bench->add_option("--seed", b_seed, "seed recorded with the report (default 42)");
    cmd_bench->add_flag("--no-timing", b_no_timing, "omit timings for byte-stable output");
    cmd_bench->add_flag("--json", b_json, "machine-readable stdout");

    // oracle (debugging namespace, not a stable interface)
    auto* cmd_oracle = app.add_subcommand("oracle", "Ground-truth oracles (debugging)");
    cmd_oracle->require_subcommand(1);
    std::string ov_map, ov_a, ov_b;
    auto* cmd_ov = cmd_oracle->add_subcommand("visibility", "Visibility-graph shortest path");
    cmd_ov->add_option("map", ov_map)->required();
    cmd_ov->add_option("--a", ov_a)->required();
    cmd_ov->add_option("--b", ov_b)->required();
    std::string of_map, of_start, of_end, of_seq;
    auto* cmd_of = cmd_oracle->add_subcommand("funnel", "Funnel shortest homotopic path");
    cmd_of->add_option("map", of_map)->required();
    cmd_of->add_option("--start", of_start)->required();
    cmd_of->add_option("--seq", of_seq, "cell ids a,b,c,...")->required();
    cmd_of->add_option("--end", of_end)->required();
    std::string oh_map, oh_path;
    auto* cmd_oh = cmd_oracle->add_subcommand("hsig", "h-signature of a path");
    cmd_oh->add_option("map", oh_map)->required();
    cmd_oh->add_option("--path", oh_path)->required();
    std::string og_map, og_anchor, og_goal;
    double og_tether = 0.0, og_res = 0.0;
    auto* cmd_og = cmd_oracle->add_subcommand("gridhag", "Grid-HAG tethered classes");
    cmd_og->add_option("map", og_map)->required();
    cmd_og->add_option("--anchor", og_anchor)->required();
    cmd_og->add_option("--tether", og_tether)->required();
    cmd_og->add_option("--goal", og_goal)->required();
    cmd_og->add_option("--resolution", og_res);

    std::vector<const char*> argv;
    argv.push_back("cdt");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_dissect->parsed()) {
            const Environment env = io::load_environment_file(d_map);
            const DissectionGraph g = dissect(env);
            const io::Json j = io::dissection_to_json(g);
            if (!d_out.empty()) write_file(d_out, j.dump(2) + "\n");
            if (!d_svg.empty()) write_file(d_svg, render_svg(g, SvgLayers{}));
            if (d_json)
                emit_json(out, j);
            else
                out << env.name << ": " << g.cells().size() << " cells, "
                    << g.cutlines().size() << " cutlines\n";
            return 0;
        }
        if (cmd_tcs->parsed()) {
            const Environment env = io::load_environment_file(t_map);
            const DissectionGraph g = dissect(env);
            const std::size_t cap = t_max > 0 ? t_max : max_encodings_default();
            const TcsIndex idx = tcs_preprocess(g, parse_point(t_anchor), t_tether, cap);
            const io::Json j = io::tcs_index_to_json(idx);
            write_file(t_out, j.dump(2) + "\n");
            if (!t_svg.empty()) {
                SvgLayers layers;
                layers.anchor = idx.anchor;
                write_file(t_svg, render_svg(g, layers));
            }
            io::Json summary;
            summary["anchor"] = io::point_to_json(idx.anchor);
            summary["tether"] = idx.tether;
            summary["cellCount"] = g.cells().size();
            summary["encodingCount"] = idx.encoding_count();
            if (t_json)
                emit_json(out, summary);
            else
                out << "indexed " << idx.encoding_count() << " encodings over "
                    << g.cells().size() << " cells -> " << t_out << "\n";
            return 0;
        }
        if (cmd_foc->parsed()) {
            io::TcsIndexBundle b = io::load_tcs_index_file(f_index);
            const ConfigSet set = get_all_foc(b.index, parse_point(f_goal));
            if (!f_svg.empty()) {
                SvgLayers layers;
                layers.anchor = b.index.anchor;
                layers.markers.push_back(set.goal);
                for (const auto& c : set.configs) layers.configs.push_back(c.path);
                write_file(f_svg, render_svg(*b.graph, layers));
            }
            if (f_json)
                emit_json(out, io::config_set_to_json(set));
            else {
                out << set.configs.size() << " feasible optimal configurations\n";
                for (const auto& c : set.configs) out << "  cost " << c.cost << "\n";
            }
            return 0;
        }
        if (cmd_tpp->parsed()) {
            io::TcsIndexBundle b = io::load_tcs_index_file(p_index);
            const Polyline path =
                tpp_plan(b.index, {parse_polyline(p_config), parse_point(p_goal)});
            if (!p_svg.empty()) {
                SvgLayers layers;
                layers.anchor = b.index.anchor;
                layers.paths.push_back(path);
                write_file(p_svg, render_svg(*b.graph, layers));
            }
            if (p_json)
                emit_json(out, io::plan_result_to_json(path));
            else
                print_path_summary(out, path);
            return 0;
        }
        if (cmd_tmv->parsed()) {
            io::TcsIndexBundle b = io::load_tcs_index_file(m_index);
            const Polyline path =
                tmv_plan(b.index, parse_polyline(m_config), parse_points(m_targets));
            if (!m_svg.empty()) {
                SvgLayers layers;
                layers.anchor = b.index.anchor;
                layers.paths.push_back(path);
                for (const Point& p : parse_points(m_targets)) layers.markers.push_back(p);
                write_file(m_svg, render_svg(*b.graph, layers));
            }
            if (m_json)
                emit_json(out, io::plan_result_to_json(path));
            else
                print_path_summary(out, path);
            return 0;
        }
        if (cmd_utpp->parsed()) {
            const Environment env = io::load_environment_file(u_map);
            const DissectionGraph g = dissect(env);
            const UtppIndex idx =
                utpp_preprocess(g, parse_point(u_anchor), u_zeta_eff, max_encodings_default());
            const Polyline path = utpp_plan(idx, parse_point(u_start), parse_point(u_goal));
            if (!u_svg.empty()) {
                SvgLayers layers;
                layers.anchor = idx.anchor;
                layers.paths.push_back(path);
                write_file(u_svg, render_svg(g, layers));
            }
            if (u_json)
                emit_json(out, io::plan_result_to_json(path));
            else
                print_path_summary(out, path);
            return 0;
        }
        if (cmd_bench->parsed()) {
            const Environment env = io::load_environment_file(b_map);
            std::ifstream in(b_suite);
            if (!in) throw InvalidInput("cannot open suite file: " + b_suite);
            io::Json suite;
            try {
                in >> suite;
            } catch (const std::exception& e) {
                throw InvalidInput("malformed JSON in " + b_suite + ": " + e.what());
            }
            const std::vector<io::Task> tasks = io::tasks_from_json(suite, env);
            const bench::BenchReport report = bench::run_bench(env, tasks, b_reps);
            io::Json j = bench::bench_report_to_json(report, !b_no_timing);
            j["seed"] = b_seed;
            if (b_json)
                emit_json(out, j);
            else
                out << bench::bench_report_markdown(report, !b_no_timing);
            return 0;
        }
        if (cmd_oracle->parsed()) {
            if (cmd_ov->parsed()) {
                const Environment env = io::load_environment_file(ov_map);
                const Polyline path =
                    oracle::visibility_shortest(env, parse_point(ov_a), parse_point(ov_b));
                emit_json(out, io::plan_result_to_json(path));
                return 0;
            }
            if (cmd_of->parsed()) {
                const Environment env = io::load_environment_file(of_map);
                const DissectionGraph g = dissect(env);
                Encoding e;
                e.start = parse_point(of_start);
                e.end = parse_point(of_end);
                std::istringstream is(of_seq);
                std::string item;
                while (std::getline(is, item, ','))
                    if (!item.empty()) e.seq.push_back(std::stoi(item));
                const Polyline path = oracle::funnel_shortest(g, e);
                emit_json(out, io::plan_result_to_json(path));
                return 0;
            }
            if (cmd_oh->parsed()) {
                const Environment env = io::load_environment_file(oh_map);
                const oracle::HSignature sig =
                    oracle::h_signature(env, parse_polyline(oh_path));
                io::Json j;
                j["word"] = sig.word;
                emit_json(out, j);
                return 0;
            }
            if (cmd_og->parsed()) {
                const Environment env = io::load_environment_file(og_map);
                const auto classes = oracle::grid_hag_configs(
                    env, parse_point(og_anchor), og_tether, parse_point(og_goal), og_res);
                io::Json j = io::Json::array();
                for (const auto& cls : classes) {
                    io::Json c;
                    c["word"] = cls.signature.word;
                    c["approxCost"] = cls.approx_cost;
                    c["representative"] = io::polyline_to_json(cls.representative);
                    j.push_back(c);
                }
                emit_json(out, j);
                return 0;
            }
        }
        err << "error: no subcommand\n";
        return 1;
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace cli
}  // namespace cdt
