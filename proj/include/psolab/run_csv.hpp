#ifndef PSOLAB_RUN_CSV_HPP
#define PSOLAB_RUN_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "psolab/experiment.hpp"

namespace psolab::run_csv {

/// The exact header line every run CSV starts with.
inline constexpr char kHeader[] =
    "variant,run,seed,evaluations,best_fitness,success,runtime_ms";

/// Serializes records sorted by (variant, run). best_fitness and runtime_ms
/// are written with shortest round-trip formatting, so read(write(x)) == x
/// bit for bit.
void write(std::ostream& out, std::vector<experiment::RunRecord> records);
void write_file(const std::string& path, std::vector<experiment::RunRecord> records);

/// Parses a run CSV. Throws psolab::CsvError -- with the 1-based line
/// number in the message -- on a bad header, wrong field count, or any
/// unparseable field.
std::vector<experiment::RunRecord> read(std::istream& in);
std::vector<experiment::RunRecord> read_file(const std::string& path);

} // namespace psolab::run_csv

#endif // PSOLAB_RUN_CSV_HPP
