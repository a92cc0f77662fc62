#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyper/hyper_table.hpp"

namespace hyper {

/// Which arguments of the defining equation range over subsets:
///   first:  a·(x·y) = (a·x)·y     (elements only)
///   second: a·(X·y) = (a·X)·y     (left argument a subset)
///   third:  a·(x·Y) = (a·x)·Y     (right argument a subset)
///   fourth: a·(X·Y) = (a·X)·Y     (both subsets)
/// shown for the left side; middle and right place `a` accordingly.
enum class NucleusOrder : int { first = 1, second = 2, third = 3, fourth = 4 };

/// left:   a·(X·Y) = (a·X)·Y
/// middle: (X·a)·Y = X·(a·Y)
/// right:  (X·Y)·a = X·(Y·a)
enum class NucleusSide : int { left = 0, middle = 1, right = 2 };

inline constexpr std::array<NucleusOrder, 4> kAllOrders = {NucleusOrder::first, NucleusOrder::second,
                                                           NucleusOrder::third, NucleusOrder::fourth};
inline constexpr std::array<NucleusSide, 3> kAllSides = {NucleusSide::left, NucleusSide::middle, NucleusSide::right};

/// Throws Error{invalid_argument} outside 1..4.
NucleusOrder nucleus_order(int value);
inline int order_value(NucleusOrder o) { return static_cast<int>(o); }
const char* side_name(NucleusSide side);

inline constexpr std::size_t kDefaultSubsetCap = 6;

/// Nucleus of the given order and side, computed with element-valued
/// arguments. Under union-extension every subset-quantified equation splits
/// into its singleton instances, so this is exact for all four orders; the
/// claim is checked independently by nucleus_bruteforce.
ElementSet nucleus(const HyperTable& table, NucleusOrder order, NucleusSide side);

/// Intersection of the left, middle and right nuclei of one order.
ElementSet nucleus_intersection(const HyperTable& table, NucleusOrder order);

/// Evaluates the defining equation with set_product for one candidate and one
/// pair of argument sets.
bool nuclear_at(const HyperTable& table, CarrierIndex a, NucleusSide side, ElementSet lhs_arg, ElementSet rhs_arg);

/// Enumerates every non-empty subset for each subset-valued argument and
/// tests the defining equation literally. Orders above `subset_cap` throw
/// Error{budget_exceeded}. The first order delegates to nucleus().
ElementSet nucleus_bruteforce(const HyperTable& table, NucleusOrder order, NucleusSide side,
                              std::size_t subset_cap = kDefaultSubsetCap);

enum class NucleusMethod { fast_path, brute_force };
const char* method_name(NucleusMethod m);

struct NucleusEntry {
  ElementSet set;
  NucleusMethod method = NucleusMethod::fast_path;
  std::chrono::nanoseconds elapsed{0};
  /// Present when the brute-force oracle ran: whether it matched the fast path.
  std::optional<bool> oracle_agrees;
};

struct NucleusOptions {
  std::vector<NucleusOrder> orders{kAllOrders.begin(), kAllOrders.end()};
  bool brute = false;
  std::size_t subset_cap = kDefaultSubsetCap;
};

/// All requested nuclei of a table. Entries for orders not requested are empty.
struct NucleusReport {
  std::array<std::array<std::optional<NucleusEntry>, 3>, 4> sides;
  std::array<std::optional<ElementSet>, 4> intersections;

  const std::optional<NucleusEntry>& at(NucleusOrder o, NucleusSide s) const {
    return sides[static_cast<std::size_t>(order_value(o) - 1)][static_cast<std::size_t>(s)];
  }
  const std::optional<ElementSet>& intersection(NucleusOrder o) const {
    return intersections[static_cast<std::size_t>(order_value(o) - 1)];
  }
  /// False if any brute-force entry disagreed with the fast path.
  bool consistent() const;
};

/// In brute mode orders 2..4 are computed by the oracle and compared with the
/// fast path. Throws Error{budget_exceeded} if the table order exceeds the cap.
NucleusReport compute_nuclei(const HyperTable& table, const NucleusOptions& options = {});

enum class VerifyMode { fast, brute };

/// One containment N^smaller ⊆ N^larger, for one side or for the intersections.
struct ContainmentClause {
  std::optional<NucleusSide> side;  // nullopt: the intersections N^i
  NucleusOrder smaller;
  NucleusOrder larger;
  ElementSet smaller_set;
  ElementSet larger_set;
  bool holds = false;

  std::string label() const;
};

/// The twenty containments N^1 ⊆ N^2, N^1 ⊆ N^3, N^1 ⊆ N^4, N^2 ⊆ N^4,
/// N^3 ⊆ N^4 for each side and for the intersections.
struct TheoremReport {
  VerifyMode mode = VerifyMode::fast;
  std::vector<ContainmentClause> clauses;

  bool all_hold() const;
};

TheoremReport verify_containment_theorems(const HyperTable& table, VerifyMode mode,
                                          std::size_t subset_cap = kDefaultSubsetCap);

struct ClassicalNuclei {
  ElementSet left;
  ElementSet middle;
  ElementSet right;
};

/// Nuclei of an ordinary groupoid given as an all-singleton table.
/// Throws Error{not_classical} naming the first multi-element cell.
ClassicalNuclei classical_nuclei(const HyperTable& table);

}  // namespace hyper
