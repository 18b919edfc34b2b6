#include "sogc/code_io.hpp"

#include <fstream>
#include <sstream>

#include "sogc/error.hpp"

namespace sogc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

CodeFile parse_code_text(std::string_view text) {
  CodeFile out;
  std::vector<std::string> rows;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view c = line.substr(1);
      if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
      out.comments.emplace_back(c);
      continue;
    }
    if (!have_header) {
      std::istringstream hs{std::string(line)};
      std::string extra;
      if (!(hs >> n >> k) || (hs >> extra)) {
        throw ValidationError("line " + std::to_string(line_no) + ": expected header 'n k'");
      }
      if (k == 0) throw ValidationError("line " + std::to_string(line_no) + ": dimension must be positive");
      have_header = true;
      continue;
    }
    if (rows.size() == k) throw ValidationError("line " + std::to_string(line_no) + ": more than k rows");
    if (line.size() != n) {
      throw ValidationError("line " + std::to_string(line_no) + ": row has " + std::to_string(line.size()) +
                            " entries, expected " + std::to_string(n));
    }
    rows.emplace_back(line);
  }
  if (!have_header) throw ValidationError("missing 'n k' header");
  if (rows.size() != k) {
    throw ValidationError("expected " + std::to_string(k) + " rows, found " + std::to_string(rows.size()));
  }
  std::vector<GF2Vector> parsed;
  parsed.reserve(k);
  for (const auto& r : rows) parsed.push_back(GF2Vector::from_string(r));
  out.generator = GF2Matrix(std::move(parsed), n);
  return out;
}

std::string format_code_text(const GF2Matrix& generator, const std::vector<std::string>& comments) {
  std::string out = std::to_string(generator.cols()) + " " + std::to_string(generator.rows()) + "\n";
  for (const auto& r : generator.row_vectors()) {
    out += r.to_string();
    out += '\n';
  }
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  return out;
}

CodeFile read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_code_text(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_code_file(const std::filesystem::path& path, const GF2Matrix& generator,
                     const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_code_text(generator, comments);
  if (!out) throw IoError("write failed for " + path.string());
}

LinearCode load_code(const std::filesystem::path& path) { return LinearCode(read_code_file(path).generator); }

}  // namespace sogc
