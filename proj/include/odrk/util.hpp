#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace odrk::util {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

/// Splits on a single delimiter character, keeping empty fields.
std::vector<std::string> split(std::string_view s, char delim);

/// Splits on runs of ASCII whitespace, dropping empty tokens.
std::vector<std::string> tokenize(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string url_encode(std::string_view s);

bool valid_utf8(std::string_view bytes);

/// Stable short rendering for doubles ("%.6g"), used by text reports.
std::string format_number(double v);

/// Fixed-decimal rendering, round-half-away-from-zero.
std::string format_fixed(double v, int decimals);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// Pads each column to its widest cell, two spaces between columns.
std::string aligned_table(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows);

}  // namespace odrk::util
