#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace scenforge {

/// Read a whole file; throws IoError when unreadable.
std::string read_file(const std::filesystem::path& path);

/// Write-then-rename so concurrent readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

/// Shortest round-trip decimal form, locale independent ("3.5", "10", "0.7").
std::string format_double(double value);

/// Parse a decimal number; returns false on trailing garbage.
bool parse_double(const std::string& text, double& out);

std::string to_lower(std::string s);
std::string trim(const std::string& s);

std::vector<std::string> split_lines(const std::string& text);

}  // namespace scenforge
