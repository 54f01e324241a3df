#include <sstream>

#include "bcnrand/bench.hpp"
#include "doctest.h"

using namespace bcn;

TEST_CASE("tiny n trips the timer-resolution guard") {
    bench::BenchConfig config;
    config.n = 1000;
    config.repeats = 1;
    CHECK_THROWS_AS(bench::run(config), bench::GuardError);
}

TEST_CASE("bench reports cover the requested methods with sane rates") {
    bench::BenchConfig config;
    config.n = 400000;
    config.repeats = 3;
    config.workers = 2;
    config.min_run_seconds = 0.0;  // guard exercised separately above
    const auto reports = bench::run(config);
    REQUIRE(reports.size() == 5);  // four kernels + Constant
    for (const auto& r : reports) {
        CHECK(r.elements == config.n);
        CHECK(r.exec_seconds > 0.0);
        CHECK(r.total_seconds >= r.exec_seconds);
        CHECK(r.exec_rate_gnum == doctest::Approx(config.n / r.exec_seconds / 1e9));
        CHECK(r.total_rate_gnum <= r.exec_rate_gnum);
        CHECK(r.workers == 2);
    }
    CHECK(reports.back().method == "Constant");
}

TEST_CASE("timed generation output equals an untimed fill") {
    // run() re-generates each method's buffer with par::fill and throws on any
    // difference; reaching the report list means the comparison passed.
    bench::BenchConfig config;
    config.n = 200000;
    config.repeats = 1;
    config.methods = {"BarrettModified", "LEcuyerFast", "Ref128"};
    config.min_run_seconds = 0.0;
    config.check_output = true;
    config.layout = par::Layout::Interleaved;
    CHECK(bench::run(config).size() == 3);
}

TEST_CASE("unrolled variant produces the same stream") {
    bench::BenchConfig config;
    config.n = 100001;  // exercise the remainder loop
    config.repeats = 1;
    config.min_run_seconds = 0.0;
    config.variant = bench::Variant::Unrolled;
    config.methods = {"Barrett", "LEcuyer"};
    CHECK(bench::run(config).size() == 2);
    CHECK_THROWS_AS(bench::parse_variant("vectorized"), std::invalid_argument);
}

TEST_CASE("unknown method names are rejected") {
    bench::BenchConfig config;
    config.methods = {"mtgp"};
    config.min_run_seconds = 0.0;
    CHECK_THROWS_AS(bench::run(config), std::invalid_argument);
}

TEST_CASE("table and csv outputs carry one row per method") {
    bench::BenchConfig config;
    config.n = 100000;
    config.repeats = 1;
    config.workers = 1;
    config.min_run_seconds = 0.0;
    config.methods = {"BarrettModified", "Constant"};
    const auto reports = bench::run(config);

    std::ostringstream table;
    bench::write_table(table, reports);
    CHECK(table.str().find("BarrettModified") != std::string::npos);
    CHECK(table.str().find("Constant") != std::string::npos);

    std::ostringstream csv;
    bench::write_csv(csv, reports);
    int lines = 0;
    std::string line;
    std::istringstream in(csv.str());
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 3);  // header + 2 rows
}
