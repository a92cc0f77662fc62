#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyper/axioms.hpp"
#include "hyper/bundle.hpp"

namespace hyper {

inline constexpr std::size_t kMaxSearchOrder = 8;

struct SearchSpec {
  std::size_t order = 1;
  /// Flags with the truth value each found structure must have.
  std::vector<std::pair<Flag, bool>> required;
  /// Largest cell size tried; 0 means the order.
  std::size_t cell_size_max = 0;
  std::uint64_t seed = 0;
  /// Cell assignments tried before giving up.
  std::uint64_t node_budget = 1'000'000;
  std::size_t count = 1;
};

struct SearchResult {
  std::vector<StructureBundle> bundles;
  std::uint64_t nodes = 0;
  /// The whole search space was explored (fewer than `count` exist).
  bool exhausted = false;
  /// Stopped because the node budget ran out.
  bool budget_hit = false;
};

/// Throws Error{invalid_argument} on order outside 1..8, zero budget or zero
/// count.
void validate_search_spec(const SearchSpec& spec);

/// Backtracking search over tables of the requested order, filling cells
/// row-major. Candidate cells are tried smallest first; the seed only permutes
/// candidates of equal size. Structural pins (identity row and column, Tallini
/// diagonal, commutative mirror) and reproduction completability prune the
/// tree; every emitted table is re-classified against all required flags.
/// Deterministic for a fixed spec.
SearchResult search_structures(const SearchSpec& spec);

/// Each cell contains each element independently with probability `density`;
/// an empty draw is replaced by one uniformly chosen element. Deterministic
/// per seed across platforms. Throws Error{invalid_argument} for an order
/// outside 1..64 or density outside (0, 1].
HyperTable random_hypergroupoid(std::size_t order, double density, std::uint64_t seed);

/// Random all-singleton table (an ordinary groupoid).
HyperTable random_groupoid(std::size_t order, std::uint64_t seed);

/// Element names "1".."n" as used for generated tables.
std::vector<std::string> numbered_names(std::size_t order);

}  // namespace hyper
