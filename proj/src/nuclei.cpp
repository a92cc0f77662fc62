#include "hyper/nuclei.hpp"

#include <sstream>

#include "hyper/error.hpp"

namespace hyper {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t order_slot(NucleusOrder o) { return static_cast<std::size_t>(order_value(o) - 1); }

bool subset_valued_lhs(NucleusOrder o) { return o == NucleusOrder::second || o == NucleusOrder::fourth; }
bool subset_valued_rhs(NucleusOrder o) { return o == NucleusOrder::third || o == NucleusOrder::fourth; }

bool nuclear_on_elements(const HyperTable& t, CarrierIndex a, NucleusSide side) {
  const std::size_t n = t.order();
  for (CarrierIndex x = 0; x < n; ++x) {
    for (CarrierIndex y = 0; y < n; ++y) {
      bool equal = false;
      switch (side) {
        case NucleusSide::left:
          equal = left_multiply(t, a, t.cell(x, y)) == right_multiply(t, t.cell(a, x), y);
          break;
        case NucleusSide::middle:
          equal = right_multiply(t, t.cell(x, a), y) == left_multiply(t, x, t.cell(a, y));
          break;
        case NucleusSide::right:
          equal = right_multiply(t, t.cell(x, y), a) == left_multiply(t, x, t.cell(y, a));
          break;
      }
      if (!equal) return false;
    }
  }
  return true;
}

}  // namespace

NucleusOrder nucleus_order(int value) {
  if (value < 1 || value > 4) {
    throw Error(ErrorKind::invalid_argument, "nucleus order must be 1, 2, 3 or 4 (got " + std::to_string(value) + ")");
  }
  return static_cast<NucleusOrder>(value);
}

const char* side_name(NucleusSide side) {
  switch (side) {
    case NucleusSide::left: return "left";
    case NucleusSide::middle: return "middle";
    case NucleusSide::right: return "right";
  }
  return "?";
}

const char* method_name(NucleusMethod m) { return m == NucleusMethod::fast_path ? "fast-path" : "brute-force"; }

ElementSet nucleus(const HyperTable& table, NucleusOrder /*order*/, NucleusSide side) {
  ElementSet out;
  for (CarrierIndex a = 0; a < table.order(); ++a) {
    if (nuclear_on_elements(table, a, side)) out.insert(a);
  }
  return out;
}

ElementSet nucleus_intersection(const HyperTable& table, NucleusOrder order) {
  return nucleus(table, order, NucleusSide::left) & nucleus(table, order, NucleusSide::middle) &
         nucleus(table, order, NucleusSide::right);
}

bool nuclear_at(const HyperTable& t, CarrierIndex a, NucleusSide side, ElementSet lhs_arg, ElementSet rhs_arg) {
  const ElementSet sa = ElementSet::singleton(a);
  switch (side) {
    case NucleusSide::left:
      return set_product(t, sa, set_product(t, lhs_arg, rhs_arg)) ==
             set_product(t, set_product(t, sa, lhs_arg), rhs_arg);
    case NucleusSide::middle:
      return set_product(t, set_product(t, lhs_arg, sa), rhs_arg) ==
             set_product(t, lhs_arg, set_product(t, sa, rhs_arg));
    case NucleusSide::right:
      return set_product(t, set_product(t, lhs_arg, rhs_arg), sa) ==
             set_product(t, lhs_arg, set_product(t, rhs_arg, sa));
  }
  return false;
}

ElementSet nucleus_bruteforce(const HyperTable& table, NucleusOrder order, NucleusSide side, std::size_t subset_cap) {
  if (order == NucleusOrder::first) return nucleus(table, order, side);
  const std::size_t n = table.order();
  if (n > subset_cap) {
    throw Error(ErrorKind::budget_exceeded, "BudgetExceeded: order " + std::to_string(n) +
                                                " exceeds the brute-force subset cap " + std::to_string(subset_cap));
  }

  // Candidate arguments: every non-empty subset, or every singleton.
  auto arguments = [n](bool subsets) {
    std::vector<ElementSet> out;
    if (subsets) {
      const std::uint64_t limit = ElementSet::full(n).bits();
      for (std::uint64_t bits = 1; bits != 0 && bits <= limit; ++bits) out.push_back(ElementSet::from_bits(bits));
    } else {
      for (CarrierIndex x = 0; x < n; ++x) out.push_back(ElementSet::singleton(x));
    }
    return out;
  };
  const std::vector<ElementSet> lhs_args = arguments(subset_valued_lhs(order));
  const std::vector<ElementSet> rhs_args = arguments(subset_valued_rhs(order));

  ElementSet out;
  for (CarrierIndex a = 0; a < n; ++a) {
    bool nuclear = true;
    for (std::size_t i = 0; nuclear && i < lhs_args.size(); ++i) {
      for (std::size_t j = 0; nuclear && j < rhs_args.size(); ++j) {
        nuclear = nuclear_at(table, a, side, lhs_args[i], rhs_args[j]);
      }
    }
    if (nuclear) out.insert(a);
  }
  return out;
}

bool NucleusReport::consistent() const {
  for (const auto& row : sides) {
    for (const auto& entry : row) {
      if (entry && entry->oracle_agrees && !*entry->oracle_agrees) return false;
    }
  }
  return true;
}

NucleusReport compute_nuclei(const HyperTable& table, const NucleusOptions& options) {
  if (options.brute && table.order() > options.subset_cap) {
    throw Error(ErrorKind::budget_exceeded, "BudgetExceeded: order " + std::to_string(table.order()) +
                                                " exceeds the brute-force subset cap " +
                                                std::to_string(options.subset_cap));
  }
  NucleusReport report;
  for (NucleusOrder order : options.orders) {
    const std::size_t slot = order_slot(order);
    ElementSet all = table.carrier();
    for (NucleusSide side : kAllSides) {
      NucleusEntry entry;
      const auto start = Clock::now();
      const ElementSet fast = nucleus(table, order, side);
      entry.set = fast;
      if (options.brute && order != NucleusOrder::first) {
        const ElementSet brute = nucleus_bruteforce(table, order, side, options.subset_cap);
        entry.set = brute;
        entry.method = NucleusMethod::brute_force;
        entry.oracle_agrees = brute == fast;
      }
      entry.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
      all &= entry.set;
      report.sides[slot][static_cast<std::size_t>(side)] = entry;
    }
    report.intersections[slot] = all;
  }
  return report;
}

std::string ContainmentClause::label() const {
  std::ostringstream out;
  const char* suffix = side ? side_name(*side) : "";
  out << "N" << order_value(smaller) << (side ? "_" : "") << suffix << " ⊆ N" << order_value(larger)
      << (side ? "_" : "") << suffix;
  return out.str();
}

bool TheoremReport::all_hold() const {
  for (const auto& c : clauses) {
    if (!c.holds) return false;
  }
  return true;
}

TheoremReport verify_containment_theorems(const HyperTable& table, VerifyMode mode, std::size_t subset_cap) {
  NucleusOptions options;
  options.brute = mode == VerifyMode::brute;
  options.subset_cap = subset_cap;
  const NucleusReport nuclei = compute_nuclei(table, options);

  static constexpr std::array<std::pair<NucleusOrder, NucleusOrder>, 5> kPairs = {{
      {NucleusOrder::first, NucleusOrder::second},
      {NucleusOrder::first, NucleusOrder::third},
      {NucleusOrder::first, NucleusOrder::fourth},
      {NucleusOrder::second, NucleusOrder::fourth},
      {NucleusOrder::third, NucleusOrder::fourth},
  }};

  TheoremReport report;
  report.mode = mode;
  for (NucleusSide side : kAllSides) {
    for (auto [lo, hi] : kPairs) {
      ContainmentClause c{side, lo, hi, nuclei.at(lo, side)->set, nuclei.at(hi, side)->set, false};
      c.holds = c.smaller_set.subset_of(c.larger_set);
      report.clauses.push_back(c);
    }
  }
  for (auto [lo, hi] : kPairs) {
    ContainmentClause c{std::nullopt, lo, hi, *nuclei.intersection(lo), *nuclei.intersection(hi), false};
    c.holds = c.smaller_set.subset_of(c.larger_set);
    report.clauses.push_back(c);
  }
  return report;
}

ClassicalNuclei classical_nuclei(const HyperTable& table) {
  const std::size_t n = table.order();
  std::vector<CarrierIndex> op(n * n);
  for (CarrierIndex a = 0; a < n; ++a) {
    for (CarrierIndex b = 0; b < n; ++b) {
      const ElementSet c = table.cell(a, b);
      if (c.size() != 1) {
        throw Error(ErrorKind::not_classical,
                    "NotClassical(" + table.name(a) + ", " + table.name(b) + "): cell " + format_set(table, c));
      }
      op[a * n + b] = c.min();
    }
  }
  auto mul = [&](CarrierIndex a, CarrierIndex b) { return op[a * n + b]; };

  ClassicalNuclei out;
  for (CarrierIndex a = 0; a < n; ++a) {
    bool left = true, middle = true, right = true;
    for (CarrierIndex x = 0; x < n; ++x) {
      for (CarrierIndex y = 0; y < n; ++y) {
        left = left && mul(a, mul(x, y)) == mul(mul(a, x), y);
        middle = middle && mul(mul(x, a), y) == mul(x, mul(a, y));
        right = right && mul(mul(x, y), a) == mul(x, mul(y, a));
      }
    }
    if (left) out.left.insert(a);
    if (middle) out.middle.insert(a);
    if (right) out.right.insert(a);
  }
  return out;
}

}  // namespace hyper
