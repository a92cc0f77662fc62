#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/element_set.hpp"

namespace hyper {

/// A finite hyperoperation: an order-n carrier with display names and an
/// n x n table of non-empty subsets of the carrier.
///
/// Construction validates every invariant, so a HyperTable value is always a
/// hypergroupoid. Instances are immutable.
class HyperTable {
 public:
  /// Throws Error{duplicate_name, order_limit, empty_cell, carrier_mismatch}.
  HyperTable(std::vector<std::string> names, std::vector<ElementSet> cells);

  std::size_t order() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(CarrierIndex i) const { return names_.at(i); }
  std::optional<CarrierIndex> index_of(std::string_view name) const;
  ElementSet carrier() const { return ElementSet::full(order()); }

  /// Unchecked cell access for hot loops.
  ElementSet cell(CarrierIndex a, CarrierIndex b) const { return cells_[a * order() + b]; }
  const std::vector<ElementSet>& cells() const { return cells_; }

  /// Union of the cells in row `a`, i.e. a·H.
  ElementSet row_union(CarrierIndex a) const;
  /// Union of the cells in column `b`, i.e. H·b.
  ElementSet column_union(CarrierIndex b) const;

  /// Same carrier (order and names in order).
  bool same_carrier(const HyperTable& other) const { return names_ == other.names_; }

  friend bool operator==(const HyperTable&, const HyperTable&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<ElementSet> cells_;
};

/// The stored cell a·b. Throws Error{index_out_of_range}.
ElementSet product(const HyperTable& table, CarrierIndex a, CarrierIndex b);

/// Union-extension A·B = ⋃_{a∈A, b∈B} a·b. Empty iff A or B is empty.
/// Throws Error{carrier_mismatch} if either operand has members outside the carrier.
ElementSet set_product(const HyperTable& table, ElementSet lhs, ElementSet rhs);

/// a·S for a single left factor, unchecked.
ElementSet left_multiply(const HyperTable& table, CarrierIndex a, ElementSet rhs);
/// S·b for a single right factor, unchecked.
ElementSet right_multiply(const HyperTable& table, ElementSet lhs, CarrierIndex b);

/// Left (\) and right (/) division tables over the same carrier as a base table.
/// left_division.cell(x, z) is x\z and right_division.cell(z, y) is z/y.
struct DivisionPair {
  HyperTable left_division;
  HyperTable right_division;

  friend bool operator==(const DivisionPair&, const DivisionPair&) = default;
};

/// Raw table as read from a file or typed in: per cell a list of labels.
using RawTable = std::vector<std::vector<std::vector<std::string>>>;

struct ValidatedTable {
  HyperTable table;
  std::vector<std::string> warnings;
};

/// Builds a HyperTable from labelled cells. Duplicate labels inside a cell
/// collapse with a warning. Throws Error{duplicate_name, empty_cell,
/// unknown_element, parse (wrong shape), order_limit}.
ValidatedTable validate_table(const std::vector<std::string>& names, const RawTable& raw);

/// Canonical divisions x\z = {y : z ∈ x·y} and z/y = {x : z ∈ x·y}.
/// Throws Error{not_divisible} naming the row or column and missing elements
/// when the reproduction axiom fails.
DivisionPair derive_divisions(const HyperTable& table);

/// Renders a subset as "{a, b, c}" using the table's element names.
std::string format_set(const HyperTable& table, ElementSet set);

}  // namespace hyper
