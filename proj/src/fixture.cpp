#include "psolab/fixture.hpp"

#include <array>
#include <utility>

namespace psolab::fixture {

namespace {

// Evaluations consumed per run (4000 = budget exhausted, no success),
// 30 runs per variant.
constexpr std::array<int, 30> kRS = {
    4000, 4000, 82,   62,   4000, 72,   95,   45,   71,   61,
    4000, 50,   4000, 4000, 4000, 4000, 54,   76,   58,   4000,
    55,   90,   4000, 4000, 90,   55,   4000, 65,   62,   68,
};

constexpr std::array<int, 30> kRA = {
    77,   71,   82,   60,   72,   4000, 4000, 4000, 54,   68,
    66,   4000, 4000, 72,   65,   57,   69,   81,   77,   95,
    4000, 65,   72,   4000, 4000, 4000, 58,   4000, 4000, 4000,
};

constexpr std::array<int, 30> kSS = {
    129,  57,   82,   4000, 49,   48,   83,   4000, 4000, 91,
    38,   71,   4000, 4000, 4000, 4000, 58,   65,   47,   4000,
    89,   51,   4000, 4000, 55,   4000, 61,   47,   110,  68,
};

constexpr std::array<int, 30> kSA = {
    75,   72,   65,   71,   56,   4000, 189,  4000, 4000, 4000,
    89,   4000, 4000, 4000, 4000, 146,  4000, 53,   4000, 4000,
    56,   4000, 4000, 73,   52,   4000, 40,   4000, 4000, 64,
};

constexpr std::array<std::pair<const char*, const std::array<int, 30>*>, 4>
    kColumns = {{{"RS", &kRS}, {"RA", &kRA}, {"SS", &kSS}, {"SA", &kSA}}};

} // namespace

std::vector<stats::SampleGroup> fixture_groups()
{
    std::vector<stats::SampleGroup> groups;
    groups.reserve(kColumns.size());
    for (const auto& [name, column] : kColumns) {
        stats::SampleGroup g;
        g.label = name;
        g.values.assign(column->begin(), column->end());
        groups.push_back(std::move(g));
    }
    return groups;
}

std::vector<experiment::RunRecord> fixture_records()
{
    std::vector<experiment::RunRecord> records;
    records.reserve(kColumns.size() * 30);
    for (const auto& [name, column] : kColumns) {
        for (std::size_t run = 0; run < column->size(); ++run) {
            experiment::RunRecord rec;
            rec.variant = name;
            rec.run_index = run + 1;
            rec.seed = 0;
            rec.evaluations = static_cast<std::size_t>((*column)[run]);
            rec.best_fitness = 0.0;
            rec.success = rec.evaluations < 4000;
            rec.runtime_ms = 0.0;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

} // namespace psolab::fixture
