#include "hyper/search.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "hyper/error.hpp"

namespace hyper {

namespace {

// std distributions are implementation-defined; these helpers only use the
// raw engine output, which the standard pins down.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v, std::size_t first, std::size_t last) {
    for (std::size_t i = last; i > first + 1; --i) {
      const std::size_t j = first + below(i - first);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

bool needs_reproduction(Flag f) {
  switch (f) {
    case Flag::quasihypergroup:
    case Flag::hypergroup:
    case Flag::hv_group:
    case Flag::polyquasigroup:
    case Flag::polyloop:
    case Flag::multiloop:
    case Flag::associative_polyloop:
    case Flag::polygroup:
    case Flag::geometric_hyperquasigroup:
      return true;
    default:
      return false;
  }
}

bool needs_associativity(Flag f) {
  return f == Flag::semihypergroup || f == Flag::hypergroup || f == Flag::associative_polyloop || f == Flag::polygroup;
}

bool needs_strict_identity(Flag f) {
  return f == Flag::polyloop || f == Flag::associative_polyloop || f == Flag::polygroup;
}

class Searcher {
 public:
  explicit Searcher(const SearchSpec& spec)
      : spec_(spec),
        n_(spec.order),
        cmax_(spec.cell_size_max == 0 ? spec.order : std::min(spec.cell_size_max, spec.order)),
        full_(ElementSet::full(spec.order)),
        cells_(n_ * n_),
        exact_(n_ * n_),
        must_(n_ * n_) {
    for (auto [flag, value] : spec.required) {
      if (!value) continue;
      reproduction_ = reproduction_ || needs_reproduction(flag);
      associative_ = associative_ || needs_associativity(flag);
      strict_identity_ = strict_identity_ || needs_strict_identity(flag);
      weak_identity_ = weak_identity_ || flag == Flag::multiloop;
      commutative_ = commutative_ || flag == Flag::commutative;
      tallini1_ = tallini1_ || flag == Flag::tallini1 || flag == Flag::geometric_hyperquasigroup;
      tallini2_ = tallini2_ || flag == Flag::tallini2 || flag == Flag::geometric_hyperquasigroup;
    }
  }

  SearchResult run() {
    SearchResult result;
    if (pin_cells()) {
      build_candidates();
      descend(0, result);
      result.exhausted = !result.budget_hit && result.bundles.size() < spec_.count;
    } else {
      result.exhausted = true;
    }
    return result;
  }

 private:
  std::size_t at(CarrierIndex a, CarrierIndex b) const { return a * n_ + b; }

  // Fixes cells forced by the required flags. False if the pins contradict.
  bool pin_cells() {
    auto force = [&](CarrierIndex a, CarrierIndex b, ElementSet value) {
      auto& slot = exact_[at(a, b)];
      if (slot && *slot != value) return false;
      slot = value;
      return true;
    };
    if (strict_identity_) {
      for (CarrierIndex x = 0; x < n_; ++x) {
        if (!force(0, x, ElementSet::singleton(x)) || !force(x, 0, ElementSet::singleton(x))) return false;
      }
    }
    if (weak_identity_) {
      for (CarrierIndex x = 0; x < n_; ++x) must_[at(0, x)].insert(x);
    }
    if (tallini1_) {
      for (CarrierIndex h = 0; h < n_; ++h) {
        if (!force(h, h, ElementSet::singleton(h))) return false;
      }
    }
    if (tallini2_) {
      for (CarrierIndex a = 0; a < n_; ++a) {
        for (CarrierIndex b = 0; b < n_; ++b) {
          must_[at(a, b)].insert(a);
          must_[at(a, b)].insert(b);
        }
      }
    }
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      if (exact_[k] && !must_[k].subset_of(*exact_[k])) return false;
    }
    return true;
  }

  void build_candidates() {
    Rng rng(spec_.seed);
    std::vector<ElementSet> base;
    for (std::uint64_t bits = 1; bits <= full_.bits(); ++bits) {
      const ElementSet s = ElementSet::from_bits(bits);
      if (s.size() <= cmax_) base.push_back(s);
    }
    std::stable_sort(base.begin(), base.end(), [](ElementSet x, ElementSet y) { return x.size() < y.size(); });
    candidates_.resize(n_ * n_);
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      if (exact_[k]) {
        candidates_[k] = {*exact_[k]};
        continue;
      }
      std::vector<ElementSet>& list = candidates_[k];
      for (ElementSet s : base) {
        if (must_[k].subset_of(s)) list.push_back(s);
      }
      for (std::size_t first = 0; first < list.size();) {
        std::size_t last = first;
        while (last < list.size() && list[last].size() == list[first].size()) ++last;
        rng.shuffle(list, first, last);
        first = last;
      }
    }
  }

  // Can the row and column of cell k still reach the whole carrier?
  bool completable(std::size_t k) const {
    const CarrierIndex a = k / n_;
    const CarrierIndex b = k % n_;
    ElementSet row;
    for (CarrierIndex c = 0; c <= b; ++c) row = row | cells_[at(a, c)];
    if ((full_ - row).size() > (n_ - 1 - b) * cmax_) return false;
    ElementSet column;
    for (CarrierIndex r = 0; r <= a; ++r) column = column | cells_[at(r, b)];
    return (full_ - column).size() <= (n_ - 1 - a) * cmax_;
  }

  // Associativity over the triples whose cells all lie in rows 0..last_row.
  bool associative_so_far(CarrierIndex last_row) const {
    for (CarrierIndex x = 0; x <= last_row; ++x) {
      for (CarrierIndex y = 0; y <= last_row; ++y) {
        const ElementSet xy = cells_[at(x, y)];
        if (max_member(xy) > last_row) continue;
        for (CarrierIndex z = 0; z < n_; ++z) {
          ElementSet lhs;
          for (CarrierIndex p : xy) lhs = lhs | cells_[at(p, z)];
          ElementSet rhs;
          for (CarrierIndex q : cells_[at(y, z)]) rhs = rhs | cells_[at(x, q)];
          if (lhs != rhs) return false;
        }
      }
    }
    return true;
  }

  static CarrierIndex max_member(ElementSet s) {
    CarrierIndex m = 0;
    for (CarrierIndex i : s) m = i;
    return m;
  }

  bool emit(SearchResult& result) {
    std::vector<ElementSet> cells(cells_.begin(), cells_.end());
    HyperTable table(numbered_names(n_), std::move(cells));
    StructureBundle bundle{"search-o" + std::to_string(n_) + "-s" + std::to_string(spec_.seed) + "-" +
                               std::to_string(result.bundles.size() + 1),
                           std::move(table), std::nullopt, std::nullopt, std::nullopt};
    const StructureProfile profile = classify(bundle);
    for (auto [flag, value] : spec_.required) {
      const Verdict& v = profile[flag];
      if (value ? !v.holds() : !v.fails()) return false;
    }
    result.bundles.push_back(std::move(bundle));
    return result.bundles.size() >= spec_.count;
  }

  // Returns true when the search should stop.
  bool descend(std::size_t k, SearchResult& result) {
    if (k == n_ * n_) return emit(result);
    const CarrierIndex a = k / n_;
    const CarrierIndex b = k % n_;
    for (ElementSet candidate : candidates_[k]) {
      if (commutative_ && b < a && candidate != cells_[at(b, a)]) continue;
      if (weak_identity_ && b == 0 && a > 0 && candidate != cells_[at(0, a)]) continue;
      if (result.nodes >= spec_.node_budget) {
        result.budget_hit = true;
        return true;
      }
      ++result.nodes;
      cells_[k] = candidate;
      if (reproduction_ && !completable(k)) continue;
      if (associative_ && b == n_ - 1 && !associative_so_far(a)) continue;
      if (descend(k + 1, result)) return true;
    }
    cells_[k] = ElementSet();
    return false;
  }

  const SearchSpec& spec_;
  std::size_t n_;
  std::size_t cmax_;
  ElementSet full_;
  std::vector<ElementSet> cells_;
  std::vector<std::optional<ElementSet>> exact_;
  std::vector<ElementSet> must_;
  std::vector<std::vector<ElementSet>> candidates_;
  bool reproduction_ = false;
  bool associative_ = false;
  bool strict_identity_ = false;
  bool weak_identity_ = false;
  bool commutative_ = false;
  bool tallini1_ = false;
  bool tallini2_ = false;
};

}  // namespace

std::vector<std::string> numbered_names(std::size_t order) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= order; ++i) names.push_back(std::to_string(i));
  return names;
}

void validate_search_spec(const SearchSpec& spec) {
  if (spec.order < 1 || spec.order > kMaxSearchOrder) {
    throw Error(ErrorKind::invalid_argument,
                "search order must be between 1 and " + std::to_string(kMaxSearchOrder) + ", got " +
                    std::to_string(spec.order));
  }
  if (spec.node_budget == 0) throw Error(ErrorKind::invalid_argument, "node budget must be positive");
  if (spec.count == 0) throw Error(ErrorKind::invalid_argument, "count must be positive");
}

SearchResult search_structures(const SearchSpec& spec) {
  validate_search_spec(spec);
  return Searcher(spec).run();
}

HyperTable random_hypergroupoid(std::size_t order, double density, std::uint64_t seed) {
  if (order < 1 || order > kMaxOrder) {
    throw Error(ErrorKind::invalid_argument, "order must be between 1 and 64, got " + std::to_string(order));
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "density must lie in (0, 1], got " + std::to_string(density));
  }
  Rng rng(seed);
  std::vector<ElementSet> cells(order * order);
  for (ElementSet& cell : cells) {
    for (CarrierIndex i = 0; i < order; ++i) {
      if (rng.unit() < density) cell.insert(i);
    }
    if (cell.empty()) cell.insert(rng.below(order));
  }
  return HyperTable(numbered_names(order), std::move(cells));
}

HyperTable random_groupoid(std::size_t order, std::uint64_t seed) {
  if (order < 1 || order > kMaxOrder) {
    throw Error(ErrorKind::invalid_argument, "order must be between 1 and 64, got " + std::to_string(order));
  }
  Rng rng(seed);
  std::vector<ElementSet> cells(order * order);
  for (ElementSet& cell : cells) cell = ElementSet::singleton(rng.below(order));
  return HyperTable(numbered_names(order), std::move(cells));
}

}  // namespace hyper
