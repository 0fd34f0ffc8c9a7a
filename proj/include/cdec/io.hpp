#pragma once

// ".bm" matroid files and ".bmdec" block files.
//
//   .bm     dim <n>
//           # optional comments
//           0110...        one vector per line, leftmost char = coordinate 0
//
//   .bmdec  <kind> <k>     kind is circuits, oddcover or parts
//           # circuit      (or "# independent-set" for parts)
//           dim <n>
//           <vectors>
//           <blank line between blocks>
//           # key=value ...  trailing metadata

#include "cdec/gf2.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cdec {

struct BmFile {
  BinaryMatroid matroid;
  std::vector<std::string> comments;  // without the leading "# "
};

BmFile read_bm(std::istream& in);
BmFile read_bm_file(const std::filesystem::path& path);
BmFile parse_bm(const std::string& text);

void write_bm(std::ostream& out, const BinaryMatroid& m,
              const std::vector<std::string>& comments = {});
std::string format_bm(const BinaryMatroid& m,
                      const std::vector<std::string>& comments = {});

struct BmdecFile {
  std::string kind = "circuits";
  std::size_t dim = 0;
  std::vector<std::vector<Gf2Vector>> blocks;
  /// "circuit" or "independent-set"; one per block.
  std::vector<std::string> labels;
  /// Parsed from "# key=value key=value" comment lines.
  std::map<std::string, std::string> meta;

  friend bool operator==(const BmdecFile&, const BmdecFile&) = default;
};

BmdecFile read_bmdec(std::istream& in);
BmdecFile read_bmdec_file(const std::filesystem::path& path);
BmdecFile parse_bmdec(const std::string& text);

void write_bmdec(std::ostream& out, const BmdecFile& file);
std::string format_bmdec(const BmdecFile& file);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace cdec
