#include "hyper/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hyper/error.hpp"
#include "json.hpp"

namespace hyper {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::parse, "ParseError at " + field + ": " + what);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string expect_string(const json& value, const std::string& field) {
  if (!value.is_string()) parse_error(field, "expected a string");
  return value.get<std::string>();
}

CarrierIndex lookup(const HyperTable& t, const std::string& label, const std::string& field) {
  auto idx = t.index_of(label);
  if (!idx) throw Error(ErrorKind::unknown_element, "UnknownElement(\"" + label + "\") at " + field);
  return *idx;
}

RawTable read_raw_table(const json& value, const std::string& field, std::size_t order) {
  if (!value.is_array()) parse_error(field, "expected an array of rows");
  if (value.size() != order) {
    parse_error(field, "has " + std::to_string(value.size()) + " rows, expected " + std::to_string(order));
  }
  RawTable raw;
  for (std::size_t r = 0; r < value.size(); ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    const json& row = value[r];
    if (!row.is_array()) parse_error(row_field, "expected an array of cells");
    if (row.size() != order) {
      parse_error(row_field, "has " + std::to_string(row.size()) + " cells, expected " + std::to_string(order));
    }
    auto& out_row = raw.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string cell_field = row_field + "[" + std::to_string(c) + "]";
      if (!row[c].is_array()) parse_error(cell_field, "expected an array of element names");
      auto& cell = out_row.emplace_back();
      for (std::size_t k = 0; k < row[c].size(); ++k) {
        cell.push_back(expect_string(row[c][k], cell_field + "[" + std::to_string(k) + "]"));
      }
    }
  }
  return raw;
}

HyperTable read_table(const json& value, const std::string& field, const std::vector<std::string>& names,
                      std::vector<std::string>& warnings) {
  const RawTable raw = read_raw_table(value, field, names.size());
  try {
    ValidatedTable v = validate_table(names, raw);
    for (auto& w : v.warnings) warnings.push_back(field + ": " + w);
    return std::move(v.table);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(e.what()) + " in " + field);
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

void write_table(std::ostringstream& out, const HyperTable& t, std::string_view key, const HyperTable& cells) {
  out << "  " << quoted(std::string(key)) << ": [\n";
  const std::size_t n = t.order();
  for (CarrierIndex a = 0; a < n; ++a) {
    out << "    [";
    for (CarrierIndex b = 0; b < n; ++b) {
      if (b) out << ", ";
      out << '[';
      bool first = true;
      for (CarrierIndex m : cells.cell(a, b)) {
        if (!first) out << ", ";
        first = false;
        out << quoted(t.name(m));
      }
      out << ']';
    }
    out << (a + 1 < n ? "],\n" : "]\n");
  }
  out << "  ]";
}

}  // namespace

ParsedStructure parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, "ParseError at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) parse_error("<root>", "expected a JSON object");

  static const std::vector<std::string> kKeys = {"name",           "elements", "op",     "left_division",
                                                 "right_division", "identity", "inverse"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) parse_error(key, "unknown key");
  }
  for (const char* required : {"name", "elements", "op"}) {
    if (!doc.contains(required)) parse_error(required, "missing required key");
  }

  std::vector<std::string> warnings;
  const std::string name = expect_string(doc["name"], "name");
  const json& elements = doc["elements"];
  if (!elements.is_array() || elements.empty()) parse_error("elements", "expected a non-empty array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(expect_string(elements[i], "elements[" + std::to_string(i) + "]"));
  }
  if (names.size() > kMaxOrder) {
    throw Error(ErrorKind::order_limit, "order " + std::to_string(names.size()) + " exceeds the maximum of " +
                                            std::to_string(kMaxOrder) + " at elements");
  }

  HyperTable table = read_table(doc["op"], "op", names, warnings);
  StructureBundle bundle{name, std::move(table), std::nullopt, std::nullopt, std::nullopt};

  const bool has_left = doc.contains("left_division");
  const bool has_right = doc.contains("right_division");
  if (has_left != has_right) {
    parse_error(has_left ? "right_division" : "left_division", "division tables must be given together");
  }
  if (has_left) {
    HyperTable left = read_table(doc["left_division"], "left_division", names, warnings);
    HyperTable right = read_table(doc["right_division"], "right_division", names, warnings);
    bundle.divisions = DivisionPair{std::move(left), std::move(right)};
  }
  if (doc.contains("identity")) {
    bundle.identity = lookup(bundle.table, expect_string(doc["identity"], "identity"), "identity");
  }
  if (doc.contains("inverse")) {
    const json& inv = doc["inverse"];
    if (!inv.is_object()) parse_error("inverse", "expected an object mapping element to element");
    std::vector<std::optional<CarrierIndex>> map(names.size());
    for (const auto& [key, value] : inv.items()) {
      const std::string field = "inverse." + key;
      const CarrierIndex from = lookup(bundle.table, key, field);
      map[from] = lookup(bundle.table, expect_string(value, field), field);
    }
    std::vector<CarrierIndex> inverse;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (!map[i]) parse_error("inverse", "no entry for element \"" + names[i] + "\"");
      inverse.push_back(*map[i]);
    }
    bundle.inverse = std::move(inverse);
  }
  return ParsedStructure{std::move(bundle), std::move(warnings)};
}

std::string serialize_structure(const StructureBundle& bundle) {
  check_bundle_consistency(bundle);
  const HyperTable& t = bundle.table;
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << quoted(bundle.name) << ",\n";
  out << "  \"elements\": [";
  for (CarrierIndex i = 0; i < t.order(); ++i) out << (i ? ", " : "") << quoted(t.name(i));
  out << "],\n";
  write_table(out, t, "op", t);
  if (bundle.divisions) {
    out << ",\n";
    write_table(out, t, "left_division", bundle.divisions->left_division);
    out << ",\n";
    write_table(out, t, "right_division", bundle.divisions->right_division);
  }
  if (bundle.identity) out << ",\n  \"identity\": " << quoted(t.name(*bundle.identity));
  if (bundle.inverse) {
    out << ",\n  \"inverse\": {";
    for (CarrierIndex i = 0; i < t.order(); ++i) {
      out << (i ? ", " : "") << quoted(t.name(i)) << ": " << quoted(t.name((*bundle.inverse)[i]));
    }
    out << "}";
  }
  out << "\n}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hyper
