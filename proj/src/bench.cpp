#include "cdt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace cdt {
namespace bench {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Stat stat_of(std::vector<double> samples) {
    Stat s;
    if (samples.empty()) return s;
    double sum = 0.0;
    for (double v : samples) sum += v;
    s.mean = sum / static_cast<double>(samples.size());
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    s.median = (n % 2 == 1) ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
    return s;
}

}  // namespace

BenchReport run_bench(const Environment& env, const std::vector<io::Task>& tasks, int reps) {
    if (reps <= 0) throw InvalidInput("bench repetitions must be positive");

    BenchReport report;
    report.map_name = env.name;
    report.reps = reps;

    const DissectionGraph graph = dissect(env);

    for (const io::Task& task : tasks) {
        TaskReport tr;
        tr.label = task.label;
        tr.kind = io::task_kind_name(task.kind);

        std::vector<double> pre_ms, query_us;
        for (int r = 0; r < reps; ++r) {
            switch (task.kind) {
                case io::TaskKind::Tcs: {
                    const auto t0 = Clock::now();
                    TcsIndex idx = tcs_preprocess(graph, task.anchor, task.tether);
                    pre_ms.push_back(elapsed_ms(t0));
                    if (r == 0) tr.encoding_count = idx.encoding_count();
                    break;
                }
                case io::TaskKind::Foc: {
                    const auto t0 = Clock::now();
                    TcsIndex idx = tcs_preprocess(graph, task.anchor, task.tether);
                    pre_ms.push_back(elapsed_ms(t0));
                    const auto t1 = Clock::now();
                    ConfigSet set = get_all_foc(idx, task.goals[0]);
                    query_us.push_back(elapsed_ms(t1) * 1000.0);
                    if (r == 0) {
                        tr.encoding_count = idx.encoding_count();
                        for (const auto& c : set.configs) tr.costs.push_back(c.cost);
                    }
                    break;
                }
                case io::TaskKind::Tpp: {
                    const auto t0 = Clock::now();
                    TcsIndex idx = tcs_preprocess(graph, task.anchor, task.tether);
                    pre_ms.push_back(elapsed_ms(t0));
                    const auto t1 = Clock::now();
                    Polyline path = tpp_plan(idx, {task.start_config, task.goals[0]});
                    query_us.push_back(elapsed_ms(t1) * 1000.0);
                    if (r == 0) {
                        tr.encoding_count = idx.encoding_count();
                        tr.costs.push_back(cost(path));
                    }
                    break;
                }
                case io::TaskKind::Tmv: {
                    const auto t0 = Clock::now();
                    TcsIndex idx = tcs_preprocess(graph, task.anchor, task.tether);
                    pre_ms.push_back(elapsed_ms(t0));
                    const auto t1 = Clock::now();
                    Polyline path = tmv_plan(idx, task.start_config, task.goals);
                    query_us.push_back(elapsed_ms(t1) * 1000.0);
                    if (r == 0) {
                        tr.encoding_count = idx.encoding_count();
                        tr.costs.push_back(cost(path));
                    }
                    break;
                }
                case io::TaskKind::Utpp: {
                    const auto t0 = Clock::now();
                    UtppIndex idx = utpp_preprocess(graph, task.anchor, task.zeta_eff);
                    pre_ms.push_back(elapsed_ms(t0));
                    const auto t1 = Clock::now();
                    Polyline path = utpp_plan(idx, task.goals[0], task.goals[1]);
                    query_us.push_back(elapsed_ms(t1) * 1000.0);
                    if (r == 0) {
                        tr.encoding_count = idx.encoding_count();
                        tr.costs.push_back(cost(path));
                    }
                    break;
                }
            }
        }
        tr.preprocess_ms = stat_of(pre_ms);
        tr.query_us = stat_of(query_us);
        report.tasks.push_back(std::move(tr));
    }
    return report;
}

io::Json bench_report_to_json(const BenchReport& report, bool with_timing) {
    io::Json out;
    out["map"] = report.map_name;
    out["reps"] = report.reps;
    io::Json tasks = io::Json::array();
    for (const TaskReport& tr : report.tasks) {
        io::Json t;
        t["label"] = tr.label;
        t["kind"] = tr.kind;
        t["encodingCount"] = tr.encoding_count;
        t["costs"] = tr.costs;
        if (with_timing) {
            t["preprocessMs"] = {{"median", tr.preprocess_ms.median},
                                 {"mean", tr.preprocess_ms.mean}};
            t["queryUs"] = {{"median", tr.query_us.median}, {"mean", tr.query_us.mean}};
        }
        tasks.push_back(t);
    }
    out["tasks"] = tasks;
    return out;
}

std::string bench_report_markdown(const BenchReport& report, bool with_timing) {
    std::ostringstream os;
    os << "# bench: " << report.map_name << " (reps=" << report.reps << ")\n\n";
    if (with_timing) {
        os << "| task | kind | preprocess ms (med/mean) | query us (med/mean) | encodings | "
              "costs |\n";
        os << "|---|---|---|---|---|---|\n";
    } else {
        os << "| task | kind | encodings | costs |\n";
        os << "|---|---|---|---|\n";
    }
    for (const TaskReport& tr : report.tasks) {
        os << "| " << tr.label << " | " << tr.kind << " | ";
        if (with_timing) {
            os << tr.preprocess_ms.median << " / " << tr.preprocess_ms.mean << " | "
               << tr.query_us.median << " / " << tr.query_us.mean << " | ";
        }
        os << tr.encoding_count << " | ";
        for (std::size_t i = 0; i < tr.costs.size(); ++i) {
            if (i) os << "; ";
            os << tr.costs[i];
        }
        os << " |\n";
    }
    return os.str();
}

}  // namespace bench
}  // namespace cdt
