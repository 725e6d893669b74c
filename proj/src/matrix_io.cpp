#include "cubify/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cubify {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Basis parse_matrix(std::string_view text) {
  IntMatrix rows;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    IntVector row;
    std::size_t i = first;
    while (i < line.size()) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      std::string_view tok = line.substr(start, i - start);
      std::size_t digits = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
      bool ok = digits < tok.size();
      for (std::size_t k = digits; k < tok.size() && ok; ++k) ok = is_digit(tok[k]);
      if (!ok) throw ParseError(line_no, start + 1, "not an integer: '" + std::string(tok) + "'");
      row.emplace_back(std::string(tok[0] == '+' ? tok.substr(1) : tok), 10);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(line_no, 1,
                       "row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
    last_line = line_no;
  }
  if (rows.empty()) throw ParseError(line_no, 1, "no matrix rows found");
  if (rows.size() != rows.front().size()) {
    throw ParseError(last_line, 1,
                     "matrix is not square: " + std::to_string(rows.size()) + " rows of " +
                         std::to_string(rows.front().size()) + " entries");
  }
  return Basis(std::move(rows));
}

Basis read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

std::string format_matrix(const Basis& b) {
  std::string out;
  for (const auto& row : b.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j].get_str();
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const Basis& b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_matrix(b);
}

}  // namespace cubify
