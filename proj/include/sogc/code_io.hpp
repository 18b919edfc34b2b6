#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sogc/code.hpp"

namespace sogc {

// Text format: a line "n k", then k lines of n '0'/'1' characters. Lines
// starting with '#' are comments and blank lines are ignored.

struct CodeFile {
  GF2Matrix generator;
  std::vector<std::string> comments;  // without the leading '#'
};

CodeFile parse_code_text(std::string_view text);
std::string format_code_text(const GF2Matrix& generator, const std::vector<std::string>& comments = {});

CodeFile read_code_file(const std::filesystem::path& path);
void write_code_file(const std::filesystem::path& path, const GF2Matrix& generator,
                     const std::vector<std::string>& comments = {});

/// Reads a code file and validates it as a full-rank generator.
LinearCode load_code(const std::filesystem::path& path);

}  // namespace sogc
