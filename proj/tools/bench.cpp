// Benchmark of the OpenMP kernels against their serial reference
// implementations; also asserts that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "palin/enumerate.hpp"
#include "palin/survey.hpp"

using namespace palin;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 8;
    unsigned hw = std::thread::hardware_concurrency();
    const int workers = hw == 0 ? 2 : static_cast<int>(hw);
    std::printf("order n=%d, %d workers\n", n, workers);

    auto parents = all_graphs_level(n - 1, false, workers);

    auto t0 = std::chrono::steady_clock::now();
    auto serial = expand_level(parents, false, 1);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = expand_level(parents, false, workers);
    auto t2 = std::chrono::steady_clock::now();
    if (serial != parallel) {
        std::fprintf(stderr, "FAIL: enumeration results differ between serial and parallel\n");
        return 1;
    }
    double es = seconds(t0, t1), ep = seconds(t1, t2);
    std::printf("expand_level    n=%-2d  serial %.3fs  parallel %.3fs  speedup %.2fx  (%zu graphs)\n",
                n, es, ep, es / ep, serial.size());

    std::vector<Graph> graphs;
    for (const auto& b : serial)
        if (bitgraph_connected(b)) graphs.push_back(to_graph(b));
    SurveyFilter filter;
    filter.order = n;
    filter.connected_only = true;

    t0 = std::chrono::steady_clock::now();
    SurveyReport rs = classify_survey(graphs, filter, 1);
    t1 = std::chrono::steady_clock::now();
    SurveyReport rp = classify_survey(graphs, filter, workers);
    t2 = std::chrono::steady_clock::now();
    if (report_json(rs) != report_json(rp)) {
        std::fprintf(stderr, "FAIL: survey reports differ between serial and parallel\n");
        return 1;
    }
    double cs = seconds(t0, t1), cp = seconds(t1, t2);
    std::printf("classify_survey n=%-2d  serial %.3fs  parallel %.3fs  speedup %.2fx  (%llu graphs)\n",
                n, cs, cp, cs / cp, static_cast<unsigned long long>(rs.total));
    return 0;
}
