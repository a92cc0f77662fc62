#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/bundle.hpp"
#include "hyper/hyper_table.hpp"

namespace hyper {

enum class Truth { holds, fails, undetermined };

/// A concrete tuple demonstrating the failure of a universally quantified axiom.
struct Witness {
  std::vector<CarrierIndex> elements;
  /// The two sides that were compared (or the single offending set).
  std::vector<ElementSet> sets;
  /// Which clause failed, e.g. "(ii)" or "row".
  std::string clause;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Result of checking one axiom or class. A witness is present iff the
/// verdict is `fails`; `undetermined` carries a reason instead.
class Verdict {
 public:
  /// Undetermined until assigned.
  Verdict() : Verdict(Truth::undetermined, std::nullopt, "not computed") {}
  static Verdict holding() { return Verdict(Truth::holds, std::nullopt, {}); }
  static Verdict failing(Witness w) { return Verdict(Truth::fails, std::move(w), {}); }
  static Verdict undetermined(std::string reason) { return Verdict(Truth::undetermined, std::nullopt, std::move(reason)); }

  Truth truth() const { return truth_; }
  bool holds() const { return truth_ == Truth::holds; }
  bool fails() const { return truth_ == Truth::fails; }
  const std::optional<Witness>& witness() const { return witness_; }
  const std::string& reason() const { return reason_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict(Truth t, std::optional<Witness> w, std::string reason)
      : truth_(t), witness_(std::move(w)), reason_(std::move(reason)) {}

  Truth truth_;
  std::optional<Witness> witness_;
  std::string reason_;
};

/// Full associativity (a·b)·c = a·(b·c). Witness: first failing (a,b,c) in
/// lexicographic order with both sides.
Verdict check_associativity(const HyperTable& table);

/// Weak associativity: a·(b·c) ∩ (a·b)·c ≠ ∅ for every triple.
Verdict check_weak_associativity(const HyperTable& table);

/// Reproduction x·H = H = H·x. Witness: (x), clause "row"/"column", missing set.
Verdict check_reproduction(const HyperTable& table);

/// The four membership conditions of a polyquasigroup:
///   (i) x ∈ (x·y)/y   (ii) x ∈ (x/y)·y   (iii) x ∈ y\(y·x)   (iv) x ∈ y·(y\x)
/// Witness: (x, y), clause name, and the computed set. Throws
/// Error{carrier_mismatch} if the division tables are over another carrier.
Verdict check_polyquasigroup(const HyperTable& table, const DivisionPair& divisions);

struct IdentityInfo {
  /// e with x·e = e·x = {x} for all x.
  std::optional<CarrierIndex> strict;
  /// All e with x ∈ x·e = e·x for all x.
  std::vector<CarrierIndex> weak;
};

/// Finds strict and weak identities. Throws Error{internal} if two strict
/// identities are observed, which is impossible for a valid table.
IdentityInfo check_identity(const HyperTable& table);

bool is_strict_identity(const HyperTable& table, CarrierIndex e);
bool is_weak_identity(const HyperTable& table, CarrierIndex e);

/// Polygroup axioms P1 (associativity), P2 (strict identity at e) and
/// P3 (x ∈ y·z ⇒ y ∈ x·z⁻¹ and z ∈ y⁻¹·x). Witness clause is "P1"/"P2"/"P3".
Verdict check_polygroup(const HyperTable& table, CarrierIndex e, const std::vector<CarrierIndex>& inverse);

/// For each x the unique y with e ∈ x·y and e ∈ y·x.
/// Throws Error{no_inverse, ambiguous_inverse}.
std::vector<CarrierIndex> derive_inverse(const HyperTable& table, CarrierIndex e);

struct TalliniReport {
  Verdict tallini1;
  Verdict tallini2;
  Verdict tallini3;
  Verdict tallini4;
  Verdict tallini5;
  /// Tallini 1, 2 and 3 on a quasihypergroup.
  Verdict geometric;
};

TalliniReport check_tallini(const HyperTable& table);

Verdict check_commutativity(const HyperTable& table);

/// One flag per structure class. Order is the canonical report order.
enum class Flag : std::size_t {
  hypergroupoid,
  semihypergroup,
  quasihypergroup,
  hypergroup,
  weak_associativity,
  hv_group,
  polyquasigroup,
  polyloop,
  multiloop,
  associative_polyloop,
  polygroup,
  tallini1,
  tallini2,
  tallini3,
  tallini4,
  tallini5,
  geometric_hyperquasigroup,
  commutative,
};

inline constexpr std::size_t kFlagCount = 18;

std::string_view flag_name(Flag flag);
/// Accepts the canonical names plus "polygroupoid" as a synonym for hypergroupoid.
std::optional<Flag> parse_flag(std::string_view name);
std::array<Flag, kFlagCount> all_flags();

struct StructureProfile {
  std::array<Verdict, kFlagCount> flags;
  std::optional<CarrierIndex> identity;
  std::vector<CarrierIndex> weak_identities;
  std::optional<std::vector<CarrierIndex>> inverse;
  /// "given", "derived" or "none".
  std::string divisions_source;

  const Verdict& operator[](Flag f) const { return flags[static_cast<std::size_t>(f)]; }
  Verdict& operator[](Flag f) { return flags[static_cast<std::size_t>(f)]; }
};

/// Computes every flag. Missing optional inputs (divisions, identity, inverse)
/// are derived from the table where possible.
StructureProfile classify(const StructureBundle& bundle);

/// Lattice relations between flags that every profile must satisfy; returns
/// a description of each violated relation (empty when consistent).
std::vector<std::string> lattice_violations(const StructureProfile& profile);

}  // namespace hyper
