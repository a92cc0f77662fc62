#include "hyper/constructors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <unordered_set>

#include "hyper/error.hpp"

namespace hyper {

namespace {

[[noreturn]] void invalid_group(const std::string& what) { throw Error(ErrorKind::invalid_group, "InvalidGroup: " + what); }

/// Distinct sets ordered by smallest member, plus a member -> class lookup.
struct Partition {
  std::vector<ElementSet> classes;
  std::vector<CarrierIndex> class_of;
};

Partition partition_by(std::size_t n, const std::function<ElementSet(CarrierIndex)>& class_containing) {
  Partition p;
  p.class_of.assign(n, n);
  for (CarrierIndex g = 0; g < n; ++g) {
    if (p.class_of[g] != n) continue;
    const ElementSet c = class_containing(g);
    // Visiting g in increasing order makes g the smallest member of a new class.
    for (CarrierIndex m : c) p.class_of[m] = p.classes.size();
    p.classes.push_back(c);
  }
  return p;
}

GroupTable from_cayley(std::vector<std::string> names, std::vector<CarrierIndex> cayley) {
  const std::size_t n = names.size();
  std::optional<CarrierIndex> e;
  for (CarrierIndex c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (CarrierIndex x = 0; x < n && ok; ++x) ok = cayley[c * n + x] == x && cayley[x * n + c] == x;
    if (ok) e = c;
  }
  if (!e) invalid_group("no identity element");
  std::vector<CarrierIndex> inverse(n, n);
  for (CarrierIndex x = 0; x < n; ++x) {
    for (CarrierIndex y = 0; y < n; ++y) {
      if (cayley[x * n + y] == *e) inverse[x] = y;
    }
  }
  return GroupTable::validated(std::move(names), std::move(cayley), *e, std::move(inverse));
}

}  // namespace

GroupTable GroupTable::validated(std::vector<std::string> names, std::vector<CarrierIndex> cayley,
                                 CarrierIndex identity, std::vector<CarrierIndex> inverse) {
  const std::size_t n = names.size();
  if (n == 0) invalid_group("empty carrier");
  if (n > kMaxOrder) throw Error(ErrorKind::order_limit, "group order exceeds " + std::to_string(kMaxOrder));
  if (cayley.size() != n * n) invalid_group("Cayley table has the wrong number of entries");
  if (identity >= n) invalid_group("identity out of range");
  if (inverse.size() != n) invalid_group("inverse map must cover every element");
  std::unordered_set<std::string> seen(names.begin(), names.end());
  if (seen.size() != n) throw Error(ErrorKind::duplicate_name, "duplicate element name in group");

  auto mul = [&](CarrierIndex a, CarrierIndex b) { return cayley[a * n + b]; };
  for (CarrierIndex a = 0; a < n; ++a) {
    ElementSet row, column;
    for (CarrierIndex b = 0; b < n; ++b) {
      if (mul(a, b) >= n || mul(b, a) >= n) invalid_group("product out of range");
      row.insert(mul(a, b));
      column.insert(mul(b, a));
    }
    if (row != ElementSet::full(n)) invalid_group("row " + names[a] + " is not a permutation");
    if (column != ElementSet::full(n)) invalid_group("column " + names[a] + " is not a permutation");
  }
  for (CarrierIndex a = 0; a < n; ++a) {
    for (CarrierIndex b = 0; b < n; ++b) {
      for (CarrierIndex c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          invalid_group("(" + names[a] + "·" + names[b] + ")·" + names[c] + " != " + names[a] + "·(" + names[b] +
                        "·" + names[c] + ")");
        }
      }
    }
  }
  for (CarrierIndex x = 0; x < n; ++x) {
    if (mul(identity, x) != x || mul(x, identity) != x) invalid_group(names[identity] + " is not an identity");
    if (inverse[x] >= n || mul(x, inverse[x]) != identity || mul(inverse[x], x) != identity) {
      invalid_group("wrong inverse for " + names[x]);
    }
  }
  return GroupTable(std::move(names), std::move(cayley), identity, std::move(inverse));
}

ElementSet GroupTable::left_translate(CarrierIndex a, ElementSet s) const {
  ElementSet out;
  for (CarrierIndex m : s) out.insert(mul(a, m));
  return out;
}

ElementSet GroupTable::right_translate(ElementSet s, CarrierIndex a) const {
  ElementSet out;
  for (CarrierIndex m : s) out.insert(mul(m, a));
  return out;
}

GroupTable group_from_bundle(const StructureBundle& bundle) {
  const HyperTable& t = bundle.table;
  const std::size_t n = t.order();
  if (!bundle.identity) invalid_group("group files must name the identity");
  if (!bundle.inverse) invalid_group("group files must give the inverse map");
  std::vector<CarrierIndex> cayley(n * n);
  for (CarrierIndex a = 0; a < n; ++a) {
    for (CarrierIndex b = 0; b < n; ++b) {
      const ElementSet c = t.cell(a, b);
      if (c.size() != 1) invalid_group("cell (" + t.name(a) + ", " + t.name(b) + ") is not a singleton");
      cayley[a * n + b] = c.min();
    }
  }
  return GroupTable::validated(t.names(), std::move(cayley), *bundle.identity, *bundle.inverse);
}

StructureBundle group_to_bundle(const GroupTable& group, std::string name) {
  return StructureBundle{std::move(name), from_cayley_table(group), std::nullopt, group.identity(), group.inverse_map()};
}

void check_subgroup(const GroupTable& group, const SubgroupSpec& subgroup) {
  const ElementSet h = subgroup.members;
  if (!h.subset_of(ElementSet::full(group.order()))) {
    throw Error(ErrorKind::not_subgroup, "NotSubgroup: members outside the group");
  }
  if (!h.contains(group.identity())) {
    throw Error(ErrorKind::not_subgroup, "NotSubgroup: identity " + group.name(group.identity()) + " missing");
  }
  for (CarrierIndex a : h) {
    if (!h.contains(group.inverse(a))) {
      throw Error(ErrorKind::not_subgroup, "NotSubgroup: inverse of " + group.name(a) + " missing");
    }
    for (CarrierIndex b : h) {
      if (!h.contains(group.mul(a, b))) {
        throw Error(ErrorKind::not_subgroup, "NotSubgroup: " + group.name(a) + "·" + group.name(b) + " = " +
                                                 group.name(group.mul(a, b)) + " not in the subgroup");
      }
    }
  }
}

std::vector<SubgroupSpec> all_subgroups(const GroupTable& group) {
  const std::size_t n = group.order();
  if (n > 16) throw Error(ErrorKind::budget_exceeded, "subgroup enumeration is limited to order 16");
  std::vector<SubgroupSpec> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const ElementSet h = ElementSet::from_bits(bits);
    if (!h.contains(group.identity())) continue;
    bool closed = true;
    for (CarrierIndex a : h) {
      for (CarrierIndex b : h) closed = closed && h.contains(group.mul(a, b));
    }
    if (closed) out.push_back(SubgroupSpec{h});
  }
  return out;
}

HyperTable from_cayley_table(const GroupTable& group) {
  const std::size_t n = group.order();
  std::vector<ElementSet> cells(n * n);
  for (CarrierIndex a = 0; a < n; ++a) {
    for (CarrierIndex b = 0; b < n; ++b) cells[a * n + b] = ElementSet::singleton(group.mul(a, b));
  }
  return HyperTable(group.names(), std::move(cells));
}

HyperTable quotient_hypergroup(const GroupTable& group, const SubgroupSpec& subgroup) {
  check_subgroup(group, subgroup);
  const ElementSet h = subgroup.members;
  const Partition cosets = partition_by(group.order(), [&](CarrierIndex g) { return group.left_translate(g, h); });

  const std::size_t m = cosets.classes.size();
  std::vector<std::string> names;
  for (const ElementSet& c : cosets.classes) names.push_back(group.name(c.min()) + "H");
  std::vector<ElementSet> cells(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ElementSet meets;
      for (CarrierIndex p : cosets.classes[i]) {
        for (CarrierIndex q : cosets.classes[j]) meets.insert(cosets.class_of[group.mul(p, q)]);
      }
      cells[i * m + j] = meets;
    }
  }
  return HyperTable(std::move(names), std::move(cells));
}

StructureBundle double_coset_algebra(const GroupTable& group, const SubgroupSpec& subgroup) {
  check_subgroup(group, subgroup);
  const ElementSet h = subgroup.members;
  const Partition dcs = partition_by(group.order(), [&](CarrierIndex g) {
    ElementSet out;
    for (CarrierIndex x : h) out |= group.right_translate(group.right_translate(h, g), x);
    return out;
  });

  const std::size_t m = dcs.classes.size();
  std::vector<std::string> names;
  for (const ElementSet& c : dcs.classes) names.push_back("H" + group.name(c.min()) + "H");
  std::vector<ElementSet> cells(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const CarrierIndex g1 = dcs.classes[i].min();
    for (std::size_t j = 0; j < m; ++j) {
      const CarrierIndex g2 = dcs.classes[j].min();
      ElementSet out;
      for (CarrierIndex x : h) out.insert(dcs.class_of[group.mul(group.mul(g1, x), g2)]);
      cells[i * m + j] = out;
    }
  }
  std::vector<CarrierIndex> inverse(m);
  for (std::size_t i = 0; i < m; ++i) inverse[i] = dcs.class_of[group.inverse(dcs.classes[i].min())];

  return StructureBundle{"double-cosets", HyperTable(std::move(names), std::move(cells)), std::nullopt,
                         dcs.class_of[group.identity()], std::move(inverse)};
}

namespace groups {

GroupTable cyclic(std::size_t n) {
  std::vector<std::string> names;
  std::vector<CarrierIndex> cayley(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) cayley[a * n + b] = (a + b) % n;
  }
  return from_cayley(std::move(names), std::move(cayley));
}

GroupTable symmetric3() {
  using Perm = std::array<int, 3>;
  // (s·t)(x) = s(t(x)): the right factor acts first.
  const std::vector<std::pair<std::string, Perm>> perms = {
      {"id", {0, 1, 2}},    {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},
      {"(23)", {0, 2, 1}},  {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}},
  };
  const std::size_t n = perms.size();
  std::vector<std::string> names;
  for (const auto& [name, p] : perms) names.push_back(name);
  std::vector<CarrierIndex> cayley(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Perm c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a].second[perms[b].second[x]];
      auto it = std::find_if(perms.begin(), perms.end(), [&](const auto& p) { return p.second == c; });
      cayley[a * n + b] = static_cast<CarrierIndex>(it - perms.begin());
    }
  }
  return from_cayley(std::move(names), std::move(cayley));
}

GroupTable dihedral(std::size_t n) {
  // index k < n is r^k, index n + k is s·r^k.
  const std::size_t order = 2 * n;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("r" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) names.push_back("s" + std::to_string(k));
  std::vector<CarrierIndex> cayley(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const bool sa = a >= n, sb = b >= n;
      const std::size_t ka = a % n, kb = b % n;
      std::size_t out = 0;
      if (!sa && !sb) out = (ka + kb) % n;               // r^a r^b
      if (!sa && sb) out = n + (kb + n - ka) % n;        // r^a s r^b = s r^(b-a)
      if (sa && !sb) out = n + (ka + kb) % n;            // s r^a r^b
      if (sa && sb) out = (kb + n - ka) % n;             // s r^a s r^b = r^(b-a)
      cayley[a * order + b] = out;
    }
  }
  return from_cayley(std::move(names), std::move(cayley));
}

GroupTable quaternion() {
  // unit products u·v = sign · w for units 1, i, j, k.
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnits = {{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  const std::array<const char*, 4> unit_names = {"1", "i", "j", "k"};
  std::vector<std::string> names;
  for (const char* u : unit_names) {
    names.push_back(u);
    names.push_back(std::string("-") + u);
  }
  std::vector<CarrierIndex> cayley(64);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const auto [sign, unit] = kUnits[a / 2][b / 2];
      const bool negative = (sign < 0) != ((a % 2) != (b % 2));
      cayley[a * 8 + b] = static_cast<CarrierIndex>(unit) * 2 + (negative ? 1 : 0);
    }
  }
  return from_cayley(std::move(names), std::move(cayley));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::string> names;
  for (CarrierIndex a = 0; a < g.order(); ++a) {
    for (CarrierIndex b = 0; b < h.order(); ++b) names.push_back("(" + g.name(a) + "," + h.name(b) + ")");
  }
  std::vector<CarrierIndex> cayley(n * n);
  for (CarrierIndex x = 0; x < n; ++x) {
    for (CarrierIndex y = 0; y < n; ++y) {
      const CarrierIndex ga = g.mul(x / h.order(), y / h.order());
      const CarrierIndex hb = h.mul(x % h.order(), y % h.order());
      cayley[x * n + y] = ga * h.order() + hb;
    }
  }
  return from_cayley(std::move(names), std::move(cayley));
}

std::vector<std::pair<std::string, GroupTable>> all_up_to_order8() {
  std::vector<std::pair<std::string, GroupTable>> out;
  for (std::size_t n : {1, 2, 3, 4}) out.emplace_back("Z" + std::to_string(n), cyclic(n));
  out.emplace_back("Z2xZ2", direct_product(cyclic(2), cyclic(2)));
  out.emplace_back("Z5", cyclic(5));
  out.emplace_back("Z6", cyclic(6));
  out.emplace_back("S3", symmetric3());
  out.emplace_back("Z7", cyclic(7));
  out.emplace_back("Z8", cyclic(8));
  out.emplace_back("Z4xZ2", direct_product(cyclic(4), cyclic(2)));
  out.emplace_back("Z2xZ2xZ2", direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
  out.emplace_back("D4", dihedral(4));
  out.emplace_back("Q8", quaternion());
  return out;
}

}  // namespace groups

}  // namespace hyper
