#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyper/hyper_table.hpp"

namespace hyper {

/// A hyperoperation with the optional extra structure a file may carry:
/// division tables, a distinguished identity and a unary inverse.
struct StructureBundle {
  std::string name;
  HyperTable table;
  std::optional<DivisionPair> divisions;
  std::optional<CarrierIndex> identity;
  std::optional<std::vector<CarrierIndex>> inverse;

  friend bool operator==(const StructureBundle&, const StructureBundle&) = default;
};

/// Checks that divisions share the base carrier, identity is in range and the
/// inverse map is total. Throws Error{carrier_mismatch, index_out_of_range}.
void check_bundle_consistency(const StructureBundle& bundle);

}  // namespace hyper
