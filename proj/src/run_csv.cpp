#include "psolab/run_csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "psolab/errors.hpp"

namespace psolab::run_csv {

namespace {

// Shortest representation that parses back to the identical double.
std::string double_field(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what)
{
    throw CsvError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

template <typename T>
T parse_number(const std::string& field, std::size_t line, const char* name)
{
    T value{};
    const char* first = field.data();
    const char* last = first + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        bad_line(line, std::string(name) + ": cannot parse '" + field + "'");
    return value;
}

} // namespace

void write(std::ostream& out, std::vector<experiment::RunRecord> records)
{
    std::sort(records.begin(), records.end(),
              [](const experiment::RunRecord& a, const experiment::RunRecord& b) {
                  return std::tie(a.variant, a.run_index) <
                         std::tie(b.variant, b.run_index);
              });
    out << kHeader << '\n';
    for (const experiment::RunRecord& rec : records) {
        out << rec.variant << ',' << rec.run_index << ',' << rec.seed << ','
            << rec.evaluations << ',' << double_field(rec.best_fitness) << ','
            << (rec.success ? '1' : '0') << ',' << double_field(rec.runtime_ms)
            << '\n';
    }
}

void write_file(const std::string& path, std::vector<experiment::RunRecord> records)
{
    std::ofstream out(path);
    if (!out)
        throw CsvError("cannot open '" + path + "' for writing");
    write(out, std::move(records));
    out.flush();
    if (!out)
        throw CsvError("failed writing '" + path + "'");
}

std::vector<experiment::RunRecord> read(std::istream& in)
{
    std::vector<experiment::RunRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line_no == 1) {
            if (line != kHeader)
                bad_line(1, "expected header '" + std::string(kHeader) + "'");
            continue;
        }
        if (line.empty())
            continue;

        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 7)
            bad_line(line_no, "expected 7 fields, got " + std::to_string(fields.size()));

        experiment::RunRecord rec;
        if (fields[0].empty())
            bad_line(line_no, "variant: must not be empty");
        rec.variant = fields[0];
        rec.run_index = parse_number<std::size_t>(fields[1], line_no, "run");
        if (rec.run_index < 1)
            bad_line(line_no, "run: must be >= 1");
        rec.seed = parse_number<std::uint64_t>(fields[2], line_no, "seed");
        rec.evaluations = parse_number<std::size_t>(fields[3], line_no, "evaluations");
        rec.best_fitness = parse_number<double>(fields[4], line_no, "best_fitness");
        if (fields[5] == "0")
            rec.success = false;
        else if (fields[5] == "1")
            rec.success = true;
        else
            bad_line(line_no, "success: expected 0 or 1, got '" + fields[5] + "'");
        rec.runtime_ms = parse_number<double>(fields[6], line_no, "runtime_ms");
        records.push_back(std::move(rec));
    }
    if (line_no == 0)
        throw CsvError("line 1: empty input, expected header");
    return records;
}

std::vector<experiment::RunRecord> read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CsvError("cannot open '" + path + "' for reading");
    return read(in);
}

} // namespace psolab::run_csv
