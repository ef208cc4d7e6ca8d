#pragma once

#include <string>
#include <vector>

#include "cdt/io_json.hpp"

namespace cdt {
namespace bench {

struct Stat {
    double median = 0.0;
    double mean = 0.0;
};

struct TaskReport {
    std::string label;
    std::string kind;
    Stat preprocess_ms;
    Stat query_us;
    std::vector<double> costs;
    std::size_t encoding_count = 0;
};

struct BenchReport {
    std::string map_name;
    int reps = 0;
    std::vector<TaskReport> tasks;
};

// Runs every task `reps` times; preprocessing and query stages are timed
// separately. reps must be positive.
BenchReport run_bench(const Environment& env, const std::vector<io::Task>& tasks, int reps);

io::Json bench_report_to_json(const BenchReport& report, bool with_timing);
std::string bench_report_markdown(const BenchReport& report, bool with_timing);

}  // namespace bench
}  // namespace cdt
