#ifndef PSOLAB_ERRORS_HPP
#define PSOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psolab {

/// Invalid configuration (bad model/learning-rate combination, bad bounds,
/// budget smaller than the swarm, ...). Maps to CLI exit status 2.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed run-record CSV. The message carries the 1-based line number.
/// Maps to CLI exit status 1.
class CsvError : public std::runtime_error {
public:
    explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace psolab

#endif // PSOLAB_ERRORS_HPP
