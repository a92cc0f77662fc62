#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyper/bundle.hpp"

namespace hyper {

struct ParsedStructure {
  StructureBundle bundle;
  std::vector<std::string> warnings;
};

/// Parses the JSON structure format:
///
///   { "name": ..., "elements": [...], "op": [[[...], ...], ...],
///     "left_division": ..., "right_division": ...,   (optional, same shape as op)
///     "identity": "...", "inverse": {"x": "y", ...} } (optional)
///
/// Syntax errors are Error{parse} with the line number; semantic errors name
/// the offending field, e.g. `op[2][3]`.
ParsedStructure parse_structure(std::string_view text);

/// Canonical text: two-space indent, keys in the order above, one table row
/// per line, cell members sorted by carrier index, trailing newline.
std::string serialize_structure(const StructureBundle& bundle);

/// Reads a whole file. Throws Error{parse} if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace hyper
