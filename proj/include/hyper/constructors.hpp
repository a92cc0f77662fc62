#pragma once

#include <string>
#include <vector>

#include "hyper/bundle.hpp"
#include "hyper/hyper_table.hpp"

namespace hyper {

/// A finite group given by its Cayley table. Construct through
/// GroupTable::validated, which checks every group axiom exhaustively.
class GroupTable {
 public:
  /// Throws Error{invalid_group} with a witness on the first violated axiom.
  static GroupTable validated(std::vector<std::string> names, std::vector<CarrierIndex> cayley, CarrierIndex identity,
                              std::vector<CarrierIndex> inverse);

  std::size_t order() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(CarrierIndex i) const { return names_.at(i); }
  CarrierIndex mul(CarrierIndex a, CarrierIndex b) const { return cayley_[a * order() + b]; }
  CarrierIndex identity() const { return identity_; }
  CarrierIndex inverse(CarrierIndex a) const { return inverse_[a]; }
  const std::vector<CarrierIndex>& inverse_map() const { return inverse_; }

  /// aS and Sa for a set S.
  ElementSet left_translate(CarrierIndex a, ElementSet s) const;
  ElementSet right_translate(ElementSet s, CarrierIndex a) const;

 private:
  GroupTable(std::vector<std::string> names, std::vector<CarrierIndex> cayley, CarrierIndex identity,
             std::vector<CarrierIndex> inverse)
      : names_(std::move(names)), cayley_(std::move(cayley)), identity_(identity), inverse_(std::move(inverse)) {}

  std::vector<std::string> names_;
  std::vector<CarrierIndex> cayley_;
  CarrierIndex identity_;
  std::vector<CarrierIndex> inverse_;
};

/// Reads a group from an all-singleton bundle with identity and inverse.
/// Throws Error{invalid_group}.
GroupTable group_from_bundle(const StructureBundle& bundle);

/// The group as an all-singleton bundle with identity and inverse filled in.
StructureBundle group_to_bundle(const GroupTable& group, std::string name);

/// Members of a subgroup. Validity is checked by the constructors that take it.
struct SubgroupSpec {
  ElementSet members;
};

/// Throws Error{not_subgroup} with the offending element or product.
void check_subgroup(const GroupTable& group, const SubgroupSpec& subgroup);

/// Every subgroup of a small group, by exhaustive subset scan (order <= 16).
std::vector<SubgroupSpec> all_subgroups(const GroupTable& group);

/// The group as a hyperoperation with singleton cells.
HyperTable from_cayley_table(const GroupTable& group);

/// The hypergroup of left cosets, aH ∘ bH = {cH | c ∈ aH·bH}. Cosets are
/// ordered by their smallest member and named "<rep>H".
HyperTable quotient_hypergroup(const GroupTable& group, const SubgroupSpec& subgroup);

/// The double coset polygroup G//H with (Hg₁H)*(Hg₂H) = {Hg₁hg₂H | h ∈ H},
/// identity H and inverse HgH ↦ Hg⁻¹H. Double cosets are ordered by their
/// smallest member and named "H<rep>H".
StructureBundle double_coset_algebra(const GroupTable& group, const SubgroupSpec& subgroup);

/// Small concrete groups for fixtures, tests and the CLI.
namespace groups {

/// Z_n with elements "0".."n-1".
GroupTable cyclic(std::size_t n);
/// Symmetric group on three points; elements id, (12), (13), (23), (123), (132).
GroupTable symmetric3();
/// Dihedral group of order 2n; rotations r0..r{n-1} then reflections s0..s{n-1}.
GroupTable dihedral(std::size_t n);
/// Quaternion group: 1, -1, i, -i, j, -j, k, -k.
GroupTable quaternion();
/// G x H with elements named "(g,h)".
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
/// One representative of each isomorphism class of groups of order <= 8.
std::vector<std::pair<std::string, GroupTable>> all_up_to_order8();

}  // namespace groups

}  // namespace hyper
