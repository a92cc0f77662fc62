#pragma once

#include <string>

#include "hyper/axioms.hpp"
#include "hyper/bundle.hpp"
#include "hyper/fixtures.hpp"
#include "hyper/nuclei.hpp"

namespace hyper {

// Human and machine renderings of the computed objects. The JSON forms carry
// every fact the text forms show. Timings are left out so output is
// reproducible byte for byte.

std::string profile_text(const StructureBundle& bundle, const StructureProfile& profile);
std::string profile_json(const StructureBundle& bundle, const StructureProfile& profile);

std::string nuclei_text(const HyperTable& table, const NucleusReport& report);
std::string nuclei_json(const HyperTable& table, const NucleusReport& report);

std::string theorems_text(const HyperTable& table, const TheoremReport& report);
std::string theorems_json(const HyperTable& table, const TheoremReport& report);

std::string fixture_outcome_text(const FixtureOutcome& outcome);

/// "a, b" for elements, "{a, b}" style for sets; used in witnesses.
std::string witness_text(const HyperTable& table, const Witness& witness);

}  // namespace hyper
