#pragma once

// Plain-text matrix format: one row per line, whitespace-separated signed
// decimal integers. Blank lines and lines starting with '#' are ignored.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cubify/core_algebra.hpp"

namespace cubify {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line;
  std::size_t column;
};

Basis parse_matrix(std::string_view text);
Basis read_matrix_file(const std::filesystem::path& path);

std::string format_matrix(const Basis& b);
void write_matrix_file(const std::filesystem::path& path, const Basis& b);

}  // namespace cubify
