#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "psolab/errors.hpp"
#include "psolab/run_csv.hpp"

using namespace psolab;
using experiment::RunRecord;

namespace {

RunRecord record(std::string variant, std::size_t run, std::uint64_t seed,
                 std::size_t evals, double fitness, bool success, double ms)
{
    return {std::move(variant), run, seed, evals, fitness, success, ms};
}

std::string serialize(const std::vector<RunRecord>& records)
{
    std::ostringstream out;
    run_csv::write(out, records);
    return out.str();
}

std::vector<RunRecord> parse(const std::string& text)
{
    std::istringstream in(text);
    return run_csv::read(in);
}

void check_same(const RunRecord& a, const RunRecord& b)
{
    CHECK(a.variant == b.variant);
    CHECK(a.run_index == b.run_index);
    CHECK(a.seed == b.seed);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.best_fitness == b.best_fitness); // bitwise
    CHECK(a.success == b.success);
    CHECK(a.runtime_ms == b.runtime_ms); // bitwise
}

void expect_error(const std::string& text, const std::string& needle)
{
    try {
        parse(text);
        FAIL("expected CsvError for input: " << text);
    } catch (const CsvError& e) {
        const std::string what = e.what();
        CHECK_MESSAGE(what.find(needle) != std::string::npos,
                      "message '" << what << "' lacks '" << needle << "'");
    }
}

} // namespace

TEST_CASE("round trip preserves every bit")
{
    const std::vector<RunRecord> original = {
        record("RS", 1, 0, 45, 0.1, true, 1.0 / 3.0),
        record("RS", 2, 18446744073709551615ull, 4000, std::numbers::pi, false, 0.0),
        record("SA", 1, 424242, 613, 1e-300, true, 123456.789),
        record("SA", 2, 7, 38, 5e-324, true, 2.5e17), // denormal fitness
        record("custom", 9, 1, 1, 0.0009765625, true, 0.06),
    };

    const std::vector<RunRecord> reread = parse(serialize(original));
    REQUIRE(reread.size() == original.size());
    for (std::size_t i = 0; i < original.size(); ++i)
        check_same(reread[i], original[i]);
}

TEST_CASE("writer emits the exact header and sorted rows")
{
    // deliberately shuffled: sorted output is (variant, run) ascending
    const std::string text = serialize({
        record("SS", 2, 0, 10, 0.5, true, 1.0),
        record("RA", 1, 0, 20, 0.5, true, 1.0),
        record("SS", 1, 0, 30, 0.5, true, 1.0),
        record("RS", 3, 0, 40, 0.5, true, 1.0),
    });

    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == run_csv::kHeader);
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("RA,1,", 0) == 0);
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("RS,3,", 0) == 0);
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("SS,1,", 0) == 0);
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("SS,2,", 0) == 0);
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("reader accepts CRLF line endings and skips blank lines")
{
    const std::string text = std::string(run_csv::kHeader) +
                             "\r\nRS,1,5,100,0.25,1,3.5\r\n\r\n\nSA,1,6,200,0.5,0,4.5\r\n";
    const auto records = parse(text);
    REQUIRE(records.size() == 2);
    CHECK(records[0].variant == "RS");
    CHECK(records[0].seed == 5);
    CHECK(records[0].best_fitness == 0.25);
    CHECK(records[0].success);
    CHECK(records[1].variant == "SA");
    CHECK_FALSE(records[1].success);
}

TEST_CASE("header-only input yields no records")
{
    CHECK(parse(std::string(run_csv::kHeader) + "\n").empty());
}

TEST_CASE("reader reports the offending line")
{
    const std::string h = std::string(run_csv::kHeader) + "\n";

    expect_error("", "line 1");
    expect_error("variant,run\n", "line 1");
    expect_error("Variant,run,seed,evaluations,best_fitness,success,runtime_ms\n",
                 "line 1"); // header is case-sensitive
    expect_error(h + "RS,1,5,100,0.25,1\n", "line 2");          // 6 fields
    expect_error(h + "RS,1,5,100,0.25,1,3.5,9\n", "line 2");    // 8 fields
    expect_error(h + "RS,1,5,100,0.25,1,3.5\nRS,2,5,1e2,0.25,1,3.5\n",
                 "line 3"); // evaluations must be an integer
    expect_error(h + "RS,x,5,100,0.25,1,3.5\n", "run");
    expect_error(h + "RS,0,5,100,0.25,1,3.5\n", ">= 1");
    expect_error(h + "RS,1,-5,100,0.25,1,3.5\n", "seed");
    expect_error(h + "RS,1,5,100,zero,1,3.5\n", "best_fitness");
    expect_error(h + "RS,1,5,100,0.25,2,3.5\n", "success");
    expect_error(h + "RS,1,5,100,0.25,true,3.5\n", "success");
    expect_error(h + "RS,1,5,100,0.25,1,\n", "runtime_ms");
    expect_error(h + ",1,5,100,0.25,1,3.5\n", "variant");
}

TEST_CASE("file round trip and file errors")
{
    namespace fs = std::filesystem;
    const std::string path =
        (fs::temp_directory_path() / "psolab_test_run_csv.csv").string();

    const std::vector<RunRecord> original = {
        record("RA", 1, 3, 77, 0.0001220703125, true, 0.75),
        record("SS", 1, 4, 129, 1.0 / 7.0, true, 1.25),
    };
    run_csv::write_file(path, original);
    const auto reread = run_csv::read_file(path);
    REQUIRE(reread.size() == 2);
    check_same(reread[0], original[0]);
    check_same(reread[1], original[1]);
    std::remove(path.c_str());

    CHECK_THROWS_AS(run_csv::read_file(path), CsvError); // just deleted
    CHECK_THROWS_AS(run_csv::write_file("/nonexistent-dir/out.csv", original),
                    CsvError);
}
