#ifndef SNARK_ERRORS_HPP
#define SNARK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace snark {

// Exit-code mapping used by the CLI: UsageError -> 1, DataError -> 2,
// InsufficientDataError -> 3.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace snark

#endif
