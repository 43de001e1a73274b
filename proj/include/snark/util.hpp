#ifndef SNARK_UTIL_HPP
#define SNARK_UTIL_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace snark {

std::uint64_t fnv1a64(std::string_view data);
std::string hash_hex(std::uint64_t h);

std::string read_file(const std::filesystem::path& path);
// Write-temp-then-rename so partially written outputs never appear.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split_on(std::string_view text, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string to_lower(std::string_view s);

// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double v);
std::optional<double> parse_double(std::string_view s);
std::optional<long> parse_long(std::string_view s);

}  // namespace snark

#endif
