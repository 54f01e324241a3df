#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bcnrand/cli.hpp"
#include "bcnrand/generator.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

int run_cli(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"bcnrand"};
    storage.insert(storage.end(), args);
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());
    return bcn::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / "bcnrand_cli_test";
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    fs::path operator/(const char* name) const { return dir / name; }
};

}  // namespace

TEST_CASE("gen text emits n parsable lines in (0,1)") {
    TempDir tmp;
    const auto path = tmp / "five.txt";
    CHECK(run_cli({"gen", "--n", "5", "--seed", "5559060566555623", "--format", "text",
                   "--out", path.string()}) == 0);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        const double v = std::stod(line);
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
    CHECK(lines == 5);
}

TEST_CASE("gen text round-trips exactly at 17 significant digits") {
    TempDir tmp;
    const auto path = tmp / "roundtrip.txt";
    REQUIRE(run_cli({"gen", "--n", "200", "--format", "text", "--out", path.string()}) == 0);
    const std::string original = slurp(path);
    std::istringstream in(original);
    std::ostringstream rendered;
    std::string line;
    while (std::getline(in, line)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g\n", std::stod(line));
        rendered << buf;
    }
    CHECK(rendered.str() == original);
}

TEST_CASE("gen raw-u64 n=1 writes the little-endian first iterate") {
    TempDir tmp;
    const auto path = tmp / "one.u64";
    REQUIRE(run_cli({"gen", "--n", "1", "--seed", "5559060566555623", "--format", "raw-u64",
                     "--out", path.string()}) == 0);
    const std::string bytes = slurp(path);
    REQUIRE(bytes.size() == 8);
    std::uint64_t value = 0;
    for (int i = 7; i >= 0; --i) value = (value << 8) | static_cast<unsigned char>(bytes[i]);
    CHECK(value == 2138759898642167ull);  // one step from the default seed
}

TEST_CASE("gen output is byte-identical across worker counts and runs") {
    TempDir tmp;
    const auto a = tmp / "w1.f64";
    const auto b = tmp / "w8.f64";
    const auto c = tmp / "w8_again.f64";
    REQUIRE(run_cli({"gen", "--n", "40000", "--format", "raw-f64", "--workers", "1", "--out",
                     a.string()}) == 0);
    REQUIRE(run_cli({"gen", "--n", "40000", "--format", "raw-f64", "--workers", "8", "--out",
                     b.string()}) == 0);
    REQUIRE(run_cli({"gen", "--n", "40000", "--format", "raw-f64", "--workers", "8",
                     "--layout", "interleaved", "--out", c.string()}) == 0);
    const std::string bytes = slurp(a);
    CHECK(bytes.size() == 40000 * 8);
    CHECK(slurp(b) == bytes);
    CHECK(slurp(c) == bytes);  // interleaved is de-interleaved before writing
}

TEST_CASE("gen methods produce identical files") {
    TempDir tmp;
    const auto a = tmp / "ref.f64";
    const auto b = tmp / "lec.f64";
    REQUIRE(run_cli({"gen", "--n", "5000", "--format", "raw-f64", "--method", "Ref128",
                     "--out", a.string()}) == 0);
    REQUIRE(run_cli({"gen", "--n", "5000", "--format", "raw-f64", "--method", "LEcuyer",
                     "--out", b.string()}) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("gen chunked streaming matches a single-shot run") {
    TempDir tmp;
    const auto whole = tmp / "whole.f64";
    const auto chunked = tmp / "chunked.f64";
    REQUIRE(run_cli({"gen", "--n", "30000", "--format", "raw-f64", "--out", whole.string()}) ==
            0);
    REQUIRE(run_cli({"gen", "--n", "30000", "--format", "raw-f64", "--chunk", "7777", "--out",
                     chunked.string()}) == 0);
    CHECK(slurp(whole) == slurp(chunked));
}

TEST_CASE("gen usage errors exit 2, I/O errors exit 3") {
    CHECK(run_cli({"gen", "--n", "5", "--seed", "100"}) == 2);           // below range
    CHECK(run_cli({"gen", "--n", "5", "--format", "xml"}) == 2);         // bad format
    CHECK(run_cli({"gen"}) == 2);                                        // missing --n
    CHECK(run_cli({"frobnicate"}) == 2);                                 // bad subcommand
    CHECK(run_cli({"gen", "--n", "5", "--out", "/nonexistent-dir/x"}) == 3);
}

TEST_CASE("seed-info prints the golden seed and validates the range") {
    CHECK(run_cli({"seed-info", "5559060566555623"}) == 0);  // a = 3^33 + 100
    CHECK(run_cli({"seed-info", "5559060566555622"}) == 2);  // a = 3^33 + 99
    CHECK(run_cli({"seed-info", "9007199254740992"}) == 0);  // a = 2^53
    CHECK(run_cli({"seed-info", "9007199254740993"}) == 2);
}

TEST_CASE("bench with a tiny n exits 2 via the guard") {
    CHECK(run_cli({"bench", "--n", "1000", "--repeats", "1"}) == 2);
}
