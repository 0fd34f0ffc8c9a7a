#include "cdec/io.hpp"

#include "cdec/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace cdec {

namespace {

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view trim(std::string_view s) {
  s = trim_right(s);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::string comment_body(std::string_view line) {
  line.remove_prefix(1);
  return std::string(trim(line));
}

std::size_t parse_count(std::string_view text, std::size_t line_no,
                        std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line_no, "malformed " + std::string(what) + " '" +
                                  std::string(text) + "'");
  }
  return value;
}

/// "dim <n>" -> n, validated.
std::size_t parse_dim_line(std::string_view line, std::size_t line_no) {
  if (line.substr(0, 4) != "dim ") {
    throw ParseError(line_no, "expected 'dim <n>', got '" + std::string(line) + "'");
  }
  const std::size_t dim = parse_count(trim(line.substr(4)), line_no, "dimension");
  if (dim < 1 || dim > Gf2Vector::kMaxDim) {
    throw ParseError(line_no, "dimension " + std::to_string(dim) +
                                  " outside [1, 4096]");
  }
  return dim;
}

Gf2Vector parse_vector_line(std::string_view line, std::size_t dim,
                            std::size_t line_no) {
  if (line.size() != dim) {
    throw ParseError(line_no, "vector has " + std::to_string(line.size()) +
                                  " characters, expected " + std::to_string(dim));
  }
  Gf2Vector v;
  try {
    v = Gf2Vector::parse(line);
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
  if (v.is_zero()) throw ParseError(line_no, "all-zeros vector");
  return v;
}

void parse_meta(std::string_view body, std::map<std::string, std::string>& meta) {
  std::istringstream tokens{std::string(body)};
  std::string token;
  while (tokens >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) continue;
    meta[token.substr(0, eq)] = token.substr(eq + 1);
  }
}

std::vector<std::string> split_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

BmFile read_bm(std::istream& in) {
  const auto lines = split_lines(in);
  BmFile out;
  std::size_t dim = 0;
  std::vector<Gf2Vector> vectors;
  std::unordered_set<Gf2Vector, Gf2VectorHash> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = trim_right(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      out.comments.push_back(comment_body(line));
      continue;
    }
    if (dim == 0) {
      dim = parse_dim_line(line, line_no);
      continue;
    }
    Gf2Vector v = parse_vector_line(line, dim, line_no);
    if (!seen.insert(v).second) {
      throw ParseError(line_no, "duplicate vector " + v.to_string());
    }
    vectors.push_back(std::move(v));
  }
  if (dim == 0) throw ParseError(0, "missing 'dim <n>' line");
  out.matroid = BinaryMatroid(dim, std::move(vectors));
  return out;
}

BmFile read_bm_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path.string());
  return read_bm(in);
}

BmFile parse_bm(const std::string& text) {
  std::istringstream in(text);
  return read_bm(in);
}

void write_bm(std::ostream& out, const BinaryMatroid& m,
              const std::vector<std::string>& comments) {
  out << "dim " << m.dim() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& v : m) out << v.to_string() << '\n';
}

std::string format_bm(const BinaryMatroid& m,
                      const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_bm(out, m, comments);
  return out.str();
}

BmdecFile read_bmdec(std::istream& in) {
  const auto lines = split_lines(in);
  BmdecFile out;
  bool have_header = false;
  std::size_t expected = 0;
  std::string pending_label;
  std::size_t block_dim = 0;  // nonzero while inside a block
  std::unordered_set<Gf2Vector, Gf2VectorHash> block_seen;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = trim_right(lines[i]);
    if (line.empty()) {
      block_dim = 0;
      continue;
    }
    if (line.front() == '#') {
      const std::string body = comment_body(line);
      if (body.find('=') != std::string::npos) {
        parse_meta(body, out.meta);
      } else if (body == "circuit" || body == "independent-set") {
        pending_label = body;
      }
      continue;
    }
    if (!have_header) {
      const auto space = line.find(' ');
      if (space == std::string_view::npos) {
        throw ParseError(line_no, "expected '<kind> <count>' header");
      }
      out.kind = std::string(line.substr(0, space));
      if (out.kind != "circuits" && out.kind != "oddcover" && out.kind != "parts") {
        throw ParseError(line_no, "unknown block file kind '" + out.kind + "'");
      }
      expected = parse_count(trim(line.substr(space + 1)), line_no, "block count");
      have_header = true;
      continue;
    }
    if (block_dim == 0) {
      block_dim = parse_dim_line(line, line_no);
      if (out.dim != 0 && out.dim != block_dim) {
        throw ParseError(line_no, "block dimension differs from earlier blocks");
      }
      out.dim = block_dim;
      out.blocks.emplace_back();
      out.labels.push_back(pending_label.empty()
                               ? (out.kind == "parts" ? "independent-set" : "circuit")
                               : pending_label);
      pending_label.clear();
      block_seen.clear();
      continue;
    }
    Gf2Vector v = parse_vector_line(line, block_dim, line_no);
    if (!block_seen.insert(v).second) {
      throw ParseError(line_no, "duplicate vector " + v.to_string() + " in block");
    }
    out.blocks.back().push_back(std::move(v));
  }
  if (!have_header) throw ParseError(0, "missing '<kind> <count>' header");
  if (out.blocks.size() != expected) {
    throw ParseError(0, "header announces " + std::to_string(expected) +
                            " blocks, found " + std::to_string(out.blocks.size()));
  }
  return out;
}

BmdecFile read_bmdec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path.string());
  return read_bmdec(in);
}

BmdecFile parse_bmdec(const std::string& text) {
  std::istringstream in(text);
  return read_bmdec(in);
}

void write_bmdec(std::ostream& out, const BmdecFile& file) {
  out << file.kind << ' ' << file.blocks.size() << '\n';
  for (std::size_t b = 0; b < file.blocks.size(); ++b) {
    if (b > 0) out << '\n';
    const std::string& label = b < file.labels.size() ? file.labels[b] : "circuit";
    out << "# " << label << '\n';
    out << "dim " << file.dim << '\n';
    for (const auto& v : file.blocks[b]) out << v.to_string() << '\n';
  }
  if (!file.meta.empty()) {
    if (!file.blocks.empty()) out << '\n';
    out << '#';
    for (const auto& [key, value] : file.meta) out << ' ' << key << '=' << value;
    out << '\n';
  }
}

std::string format_bmdec(const BmdecFile& file) {
  std::ostringstream out;
  write_bmdec(out, file);
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::kInvalidArgument, "write failed for " + path.string());
}

}  // namespace cdec
