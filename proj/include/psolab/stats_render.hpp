#ifndef PSOLAB_STATS_RENDER_HPP
#define PSOLAB_STATS_RENDER_HPP

#include <string>

#include "psolab/stats.hpp"

namespace psolab::stats {

/// Classic spreadsheet-style report blocks: SUMMARY table, then the
/// Source of Variation table (Between/Within/Total rows).
std::string to_text(const AnovaResult& r);

/// "t-Test: Two-Sample ..." block with the traditional row labels
/// (Mean, Variance, Observations, ..., t Critical two-tail).
std::string to_text(const TTestResult& r);

std::string to_text(const FTestResult& r);

/// JSON with keys mirroring the result structs, machine-diffable.
std::string to_json(const AnovaResult& r);
std::string to_json(const TTestResult& r);
std::string to_json(const FTestResult& r);

} // namespace psolab::stats

#endif // PSOLAB_STATS_RENDER_HPP
