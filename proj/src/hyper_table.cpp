#include "hyper/hyper_table.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "hyper/error.hpp"

namespace hyper {

namespace {

void check_names(const std::vector<std::string>& names) {
  if (names.empty()) throw Error(ErrorKind::parse, "carrier must contain at least one element");
  if (names.size() > kMaxOrder) {
    throw Error(ErrorKind::order_limit,
                "order " + std::to_string(names.size()) + " exceeds the maximum of " + std::to_string(kMaxOrder));
  }
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto [it, inserted] = seen.emplace(names[i], i);
    if (!inserted) {
      throw Error(ErrorKind::duplicate_name, "duplicate element name \"" + names[i] + "\" at positions " +
                                                 std::to_string(it->second) + " and " + std::to_string(i));
    }
  }
}

}  // namespace

HyperTable::HyperTable(std::vector<std::string> names, std::vector<ElementSet> cells)
    : names_(std::move(names)), cells_(std::move(cells)) {
  check_names(names_);
  const std::size_t n = names_.size();
  if (cells_.size() != n * n) {
    throw Error(ErrorKind::carrier_mismatch,
                "expected " + std::to_string(n * n) + " cells, got " + std::to_string(cells_.size()));
  }
  const ElementSet universe = carrier();
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].empty()) {
      throw Error(ErrorKind::empty_cell, "empty cell at (" + names_[i / n] + ", " + names_[i % n] + ")");
    }
    if (!cells_[i].subset_of(universe)) {
      throw Error(ErrorKind::carrier_mismatch,
                  "cell (" + names_[i / n] + ", " + names_[i % n] + ") has members outside the carrier");
    }
  }
}

std::optional<CarrierIndex> HyperTable::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<CarrierIndex>(it - names_.begin());
}

ElementSet HyperTable::row_union(CarrierIndex a) const {
  ElementSet out;
  for (CarrierIndex b = 0; b < order(); ++b) out |= cell(a, b);
  return out;
}

ElementSet HyperTable::column_union(CarrierIndex b) const {
  ElementSet out;
  for (CarrierIndex a = 0; a < order(); ++a) out |= cell(a, b);
  return out;
}

ElementSet product(const HyperTable& table, CarrierIndex a, CarrierIndex b) {
  if (a >= table.order() || b >= table.order()) {
    throw Error(ErrorKind::index_out_of_range, "index (" + std::to_string(a) + ", " + std::to_string(b) +
                                                   ") out of range for order " + std::to_string(table.order()));
  }
  return table.cell(a, b);
}

ElementSet left_multiply(const HyperTable& table, CarrierIndex a, ElementSet rhs) {
  ElementSet out;
  for (CarrierIndex b : rhs) out |= table.cell(a, b);
  return out;
}

ElementSet right_multiply(const HyperTable& table, ElementSet lhs, CarrierIndex b) {
  ElementSet out;
  for (CarrierIndex a : lhs) out |= table.cell(a, b);
  return out;
}

ElementSet set_product(const HyperTable& table, ElementSet lhs, ElementSet rhs) {
  const ElementSet universe = table.carrier();
  if (!lhs.subset_of(universe) || !rhs.subset_of(universe)) {
    throw Error(ErrorKind::carrier_mismatch, "set_product operand has members outside the carrier");
  }
  ElementSet out;
  for (CarrierIndex a : lhs) {
    for (CarrierIndex b : rhs) out |= table.cell(a, b);
  }
  return out;
}

ValidatedTable validate_table(const std::vector<std::string>& names, const RawTable& raw) {
  check_names(names);
  const std::size_t n = names.size();
  std::unordered_map<std::string_view, CarrierIndex> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(names[i], i);

  if (raw.size() != n) {
    throw Error(ErrorKind::parse, "table has " + std::to_string(raw.size()) + " rows, expected " + std::to_string(n));
  }
  std::vector<std::string> warnings;
  std::vector<ElementSet> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (raw[r].size() != n) {
      throw Error(ErrorKind::parse, "row " + std::to_string(r) + " has " + std::to_string(raw[r].size()) +
                                        " cells, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& labels = raw[r][c];
      if (labels.empty()) {
        throw Error(ErrorKind::empty_cell, "EmptyCell(" + std::to_string(r) + ", " + std::to_string(c) + ")");
      }
      ElementSet cell;
      for (const auto& label : labels) {
        auto it = index.find(label);
        if (it == index.end()) {
          throw Error(ErrorKind::unknown_element, "UnknownElement(\"" + label + "\", " + std::to_string(r) + ", " +
                                                      std::to_string(c) + ")");
        }
        if (cell.contains(it->second)) {
          warnings.push_back("duplicate label \"" + label + "\" in cell (" + std::to_string(r) + ", " +
                             std::to_string(c) + ") collapsed");
        }
        cell.insert(it->second);
      }
      cells.push_back(cell);
    }
  }
  return ValidatedTable{HyperTable(names, std::move(cells)), std::move(warnings)};
}

DivisionPair derive_divisions(const HyperTable& table) {
  const std::size_t n = table.order();
  const ElementSet universe = table.carrier();
  for (CarrierIndex x = 0; x < n; ++x) {
    ElementSet missing = universe - table.row_union(x);
    if (!missing.empty()) {
      throw Error(ErrorKind::not_divisible, "NotDivisible: row " + table.name(x) + " misses " + format_set(table, missing));
    }
  }
  for (CarrierIndex y = 0; y < n; ++y) {
    ElementSet missing = universe - table.column_union(y);
    if (!missing.empty()) {
      throw Error(ErrorKind::not_divisible,
                  "NotDivisible: column " + table.name(y) + " misses " + format_set(table, missing));
    }
  }

  std::vector<ElementSet> left(n * n);
  std::vector<ElementSet> right(n * n);
  for (CarrierIndex x = 0; x < n; ++x) {
    for (CarrierIndex y = 0; y < n; ++y) {
      for (CarrierIndex z : table.cell(x, y)) {
        left[x * n + z].insert(y);   // y ∈ x\z
        right[z * n + y].insert(x);  // x ∈ z/y
      }
    }
  }
  return DivisionPair{HyperTable(table.names(), std::move(left)), HyperTable(table.names(), std::move(right))};
}

std::string format_set(const HyperTable& table, ElementSet set) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (CarrierIndex i : set) {
    if (!first) out << ", ";
    first = false;
    out << table.name(i);
  }
  out << '}';
  return out.str();
}

}  // namespace hyper
