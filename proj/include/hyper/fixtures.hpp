#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyper/axioms.hpp"
#include "hyper/bundle.hpp"

namespace hyper {

/// Published nucleus sets, identical for all four orders.
struct PublishedNuclei {
  std::array<std::vector<std::string>, 3> sides;  // left, middle, right
  std::vector<std::string> intersection;
  /// The published value contradicts the identity lemma; the brute-force
  /// oracle is authoritative and the mismatch is reported, not failed.
  bool disputed = false;
};

/// A worked example from the literature with its published classification.
struct Fixture {
  std::string id;
  std::string provenance;
  StructureBundle bundle;
  std::vector<std::pair<Flag, bool>> expected_flags;
  std::optional<std::string> expected_identity;
  std::optional<PublishedNuclei> expected_nuclei;
};

/// tab1..tab9, ex32_bundle_1..3, ex33_bundle_1..3, ex34, ex35.
const std::vector<Fixture>& fixtures();
/// nullptr if unknown.
const Fixture* find_fixture(const std::string& id);

/// Builds a table from compact text: rows separated by newlines, cells by '|',
/// members by ','. A cell reading "P" is the whole carrier.
HyperTable compact_table(const std::vector<std::string>& names, std::string_view text);

struct FixtureOutcome {
  std::string id;
  bool passed = true;
  std::vector<std::string> lines;
  /// Published values that disagree with the computation but are known errata.
  std::vector<std::string> errata;
};

/// Re-classifies the bundle, recomputes every nucleus (with the brute-force
/// oracle when the order is within `brute_cap`) and checks the containments.
FixtureOutcome check_fixture(const Fixture& fixture, std::size_t brute_cap = 7);

}  // namespace hyper
