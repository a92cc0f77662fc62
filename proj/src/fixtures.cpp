#include "hyper/fixtures.hpp"

#include <sstream>

#include "hyper/error.hpp"
#include "hyper/nuclei.hpp"

namespace hyper {

namespace {

// Multiplication tables transcribed from the published examples. Rows are the
// left factor, columns the right factor, in the published element order.

constexpr std::string_view kTable1 = R"(1|3,4|1,5|1,4|1,3|4,5
3,4|6|2,3|4,6|3,6|2,6
1,5|2,3|5|1,2|3,5|2,5
1,4|4,6|1,2|4|1,6|2,4
1,3|3,6|3,5|1,6|3|5,6
4,5|2,6|2,5|2,4|5,6|2)";

constexpr std::string_view kTable2 = R"(2|4,5|1,6|1,4|3,7|3,6|6,7
4,5|7|2,3|4,6|2,6|1,5|1,3
1,6|2,3|5|1,7|2,4|4,7|3,6
1,4|4,6|1,7|3|5,6|2,7|2,5
3,7|2,6|2,4|5,6|1|3,4|5,7
3,6|1,5|4,7|2,7|3,4|6|1,2
6,7|1,3|3,6|2,5|5,7|1,2|4)";

constexpr std::string_view kTable3 = R"(3,4|6,7|1,4|1,3|5|2,7|2,6
1|3,5|2,5|6,7|2,3|4,7|4,6
5,6|3,7|2,7|4|1,6|1,5|2,3
2,4|1,4|5,6|1,2|3,6|3,5|7
2,6|1,6|3|5,7|4,7|1,2|4,5
3,7|4,5|1,7|2,5|2,4|6|1,3
5,7|2|4,6|3,6|1,7|3,4|1,5)";

constexpr std::string_view kTable4 = R"(3,4|1|5,6|2,4|2,6|3,7|5,7
6,7|3,5|3,7|1,4|1,6|4,5|2
1,4|2,5|2,7|5,6|3|1,7|4,6
1,3|6,7|4|1,2|5,7|2,5|3,6
5|2,3|1,6|3,6|4,7|2,4|1,7
2,7|4,7|1,5|3,5|1,2|6|3,4
2,6|4,6|2,3|7|4,5|1,3|1,5)";

constexpr std::string_view kTable5 = R"(1|2|3|4|5|6
2|1|4,6|5,6|3,4|3,5
3|4,6|1|2,5|2,6|4,5
4|5,6|2,5|1|3,6|2,3
5|3,4|2,6|3,6|1|2,4
6|3,5|4,5|2,3|2,4|1)";

constexpr std::string_view kTable6 = R"(1|2|3|4|5|6
2|1|5,6|3,5|4,6|3,4
3|4,5|1|2,6|4,6|2,5
4|3,6|5,6|1|2,3|2,5
5|3,6|2,4|2,6|1|3,4
6|4,5|2,4|3,5|3,4|1)";

constexpr std::string_view kTable7 = R"(1|2|3|4|5|6
2|1|4,5|3,6|3,6|4,5
3|5,6|1|5,6|2,4|2,4
4|3,5|2,6|1|2,6|3,5
5|4,6|4,6|2,3|1|2,3
6|3,4|2,5|2,5|3,4|1)";

constexpr std::string_view kTable8 = R"(A|A,B|P|A,E,I,D,H,L|A,E|A,E,B,F|A,G,H,B|A,H|A,I|A,I,B,J|A,K,L,B|A,L
A,B|B|C,G,K,B,F,J|P|A,E,B,F|B,F|G,B|A,G,H,B|A,I,B,J|B,J|K,B|A,K,L,B
P|C,G,K,B,F,J|C|C,D|C,E,D,F|C,F|C,G|C,G,D,H|C,I,D,J|C,J|C,K|C,K,D,L
A,E,I,D,H,L|P|C,H|D|E,D|C,E,D,F|C,G,D,H|D,H|I,D|C,I,D,J|C,K,D,L|D,L
A,E|A,E,B,F|C,E,D,F|E,D|E|E,F|P|A,E,I,D,H,L|E,I|E,I,F,J|E,K,L,F|E,L
A,E,B,F|B,F|C,F|C,E,D,F|E,F|F|C,G,K,B,F,J|P|E,I,F,J|F,J|K,F|E,K,L,F
A,G,H,B|G,B|C,G|C,G,D,H|P|C,G,K,B,F,J|G|G,H|G,I,H,J|G,J|G,K|G,K,H,L
A,H|A,G,H,B|C,G,D,H|H,D|A,E,I,D,H,L|P|H,G|H|I,H|G,I,H,J|G,K,H,L|H,L
A,I|A,I,B,J|C,I,D,J|I,D|E,I|E,I,F,J|G,I,H,J|I,H|I|I,J|P|A,E,I,D,H,L
A,I,B,J|B,J|C,J|C,I,D,J|E,I,F,J|F,J|G,J|G,I,H,J|I,J|J|C,G,K,B,F,J|P
A,K,L,B|K,B|C,K|C,K,D,L|E,K,L,F|K,F|G,K|G,K,H,L|P|C,G,K,B,F,J|K|K,L
A,L|A,K,L,B|C,K,D,L|L,D|E,L|E,K,L,F|G,K,H,L|H,L|A,E,I,D,H,L|P|K,L|L)";

constexpr std::string_view kTable9 = R"(e|A|B|C|D|E|F|G|H|I|J|K|L
A|A|A,B|P|A,E,I,D,H,L|A,E|A,E,B,F|A,G,H,B|A,H|A,I|A,I,B,J|A,K,L,B|A,L
B|A,B|B|C,G,K,B,F,J|P|A,E,B,F|B,F|G,B|A,G,H,B|A,I,B,J|B,J|K,B|A,K,L,B
C|P|C,G,K,B,F,J|C|C,D|C,E,D,F|C,F|C,G|C,G,D,H|C,I,D,J|C,J|C,K|C,K,D,L
D|A,E,I,D,H,L|P|C,H|D|E,D|C,E,D,F|C,G,D,H|D,H|I,D|C,I,D,J|C,K,D,L|D,L
E|A,E|A,E,B,F|C,E,D,F|E,D|E|E,F|P|A,E,I,D,H,L|E,I|E,I,F,J|E,K,L,F|E,L
F|A,E,B,F|B,F|C,F|C,E,D,F|E,F|F|C,G,K,B,F,J|P|E,I,F,J|F,J|K,F|E,K,L,F
G|A,G,H,B|G,B|C,G|C,G,D,H|P|C,G,K,B,F,J|G|G,H|G,I,H,J|G,J|G,K|G,K,H,L
H|A,H|A,G,H,B|C,G,D,H|H,D|A,E,I,D,H,L|P|H,G|H|I,H|G,I,H,J|G,K,H,L|H,L
I|A,I|A,I,B,J|C,I,D,J|I,D|E,I|E,I,F,J|G,I,H,J|I,H|I|I,J|P|A,E,I,D,H,L
J|A,I,B,J|B,J|C,J|C,I,D,J|E,I,F,J|F,J|G,J|G,I,H,J|I,J|J|C,G,K,B,F,J|P
K|A,K,L,B|K,B|C,K|C,K,D,L|E,K,L,F|K,F|G,K|G,K,H,L|P|C,G,K,B,F,J|K|K,L
L|A,L|A,K,L,B|C,K,D,L|L,D|E,L|E,K,L,F|G,K,H,L|H,L|A,E,I,D,H,L|P|K,L|L)";

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<std::string> lettered(bool with_identity) {
  std::vector<std::string> out;
  if (with_identity) out.emplace_back("e");
  for (char c = 'A'; c <= 'L'; ++c) out.emplace_back(1, c);
  return out;
}

PublishedNuclei uniform_nuclei(const std::vector<std::string>& set, bool disputed = false) {
  return PublishedNuclei{{set, set, set}, set, disputed};
}

std::vector<Fixture> build_fixtures() {
  const auto n6 = numbered(6);
  const auto n7 = numbered(7);
  const HyperTable t1 = compact_table(n6, kTable1);
  const HyperTable t2 = compact_table(n7, kTable2);
  const HyperTable t3 = compact_table(n7, kTable3);
  const HyperTable t4 = compact_table(n7, kTable4);
  const HyperTable t5 = compact_table(n6, kTable5);
  const HyperTable t6 = compact_table(n6, kTable6);
  const HyperTable t7 = compact_table(n6, kTable7);
  const HyperTable t8 = compact_table(lettered(false), kTable8);
  const HyperTable t9 = compact_table(lettered(true), kTable9);

  auto bare = [](std::string name, const HyperTable& t) {
    return StructureBundle{std::move(name), t, std::nullopt, std::nullopt, std::nullopt};
  };
  auto with_divisions = [](std::string name, const HyperTable& op, const HyperTable& left_div,
                           const HyperTable& right_div, std::optional<CarrierIndex> identity) {
    return StructureBundle{std::move(name), op, DivisionPair{left_div, right_div}, identity, std::nullopt};
  };

  const std::vector<std::pair<Flag, bool>> not_group_like = {
      {Flag::hypergroupoid, true}, {Flag::hypergroup, false}, {Flag::polygroup, false},
      {Flag::geometric_hyperquasigroup, false}};
  auto plus = [&](std::vector<std::pair<Flag, bool>> extra) {
    std::vector<std::pair<Flag, bool>> out = not_group_like;
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  };
  const auto polygroupoid_only =
      plus({{Flag::quasihypergroup, false}, {Flag::polyquasigroup, false}, {Flag::polyloop, false}});
  const auto polyquasigroup_not_loop = plus({{Flag::polyquasigroup, true}, {Flag::polyloop, false}});
  const auto polyloop = plus({{Flag::polyquasigroup, true}, {Flag::polyloop, true}});
  const std::vector<std::pair<Flag, bool>> tallini_quasi = {
      {Flag::polyquasigroup, true}, {Flag::tallini1, true}, {Flag::tallini2, false}};
  const std::vector<std::pair<Flag, bool>> tallini_loop = {
      {Flag::polyquasigroup, true}, {Flag::polyloop, true}, {Flag::tallini1, true}, {Flag::tallini2, false}};

  const PublishedNuclei empty = uniform_nuclei({});
  const PublishedNuclei empty_disputed = uniform_nuclei({}, true);
  const PublishedNuclei identity_only = uniform_nuclei({"1"});
  const PublishedNuclei ex34{{{{"A", "H"}, {"A", "B", "G", "H"}, {"A", "H", "I", "L"}}}, {"A", "H"}, false};
  const PublishedNuclei ex35{{{{"e", "A", "H"}, {"e", "A", "B", "G", "H"}, {"e", "A", "H", "I", "L"}}},
                             {"e", "A", "H"},
                             false};

  const CarrierIndex one = 0;  // element "1" in tab5-tab7
  std::vector<Fixture> out;
  out.push_back({"tab1", "polygroupoid (G, ⊙)", bare("tab1", t1), polygroupoid_only, std::nullopt, empty});
  out.push_back({"tab2", "polyquasigroup operation ⊙", bare("tab2", t2), polyquasigroup_not_loop,
                 std::nullopt, empty});
  out.push_back({"tab3", "polyquasigroup operation ↖", bare("tab3", t3), polyquasigroup_not_loop,
                 std::nullopt, empty});
  out.push_back({"tab4", "polyquasigroup operation ↗", bare("tab4", t4), polyquasigroup_not_loop,
                 std::nullopt, empty});
  out.push_back({"tab5", "polyloop operation ⊙", bare("tab5", t5), polyloop, "1", empty_disputed});
  out.push_back({"tab6", "polyloop operation ↖", bare("tab6", t6), polyloop, "1", empty_disputed});
  out.push_back({"tab7", "polyloop operation ↗", bare("tab7", t7), polyloop, "1", identity_only});
  out.push_back({"tab8", "polyquasigroup (P, ⋆)", bare("tab8", t8), tallini_quasi, std::nullopt, ex34});
  out.push_back({"tab9", "polyloop (P, ∗)", bare("tab9", t9), tallini_loop, "e", ex35});

  // Published as (G, op, 2nd, 3rd); the second slot acts as right division (/)
  // and the third as left division (\); see README.
  out.push_back({"ex32_bundle_1", "polyquasigroup (G, ⊙, ↖, ↗) from tab2 tab3 tab4",
                 with_divisions("ex32_bundle_1", t2, t4, t3, std::nullopt), polyquasigroup_not_loop, std::nullopt,
                 empty});
  out.push_back({"ex32_bundle_2", "polyquasigroup (G, ↖, ⊙, ↖) from tab3 tab2 tab3",
                 with_divisions("ex32_bundle_2", t3, t3, t2, std::nullopt), polyquasigroup_not_loop, std::nullopt,
                 empty});
  out.push_back({"ex32_bundle_3", "polyquasigroup (G, ↗, ↗, ⊙) from tab4 tab4 tab2",
                 with_divisions("ex32_bundle_3", t4, t2, t4, std::nullopt), polyquasigroup_not_loop, std::nullopt,
                 empty});
  // Published as (G, ·, \, /, 1).
  out.push_back({"ex33_bundle_1", "polyloop (G, ⊙, ↖, ↗, 1) from tab5 tab6 tab7",
                 with_divisions("ex33_bundle_1", t5, t6, t7, one), polyloop, "1", empty_disputed});
  out.push_back({"ex33_bundle_2", "polyloop (G, ↖, ⊙, ↖, 1) from tab6 tab5 tab6",
                 with_divisions("ex33_bundle_2", t6, t5, t6, one), polyloop, "1", empty_disputed});
  out.push_back({"ex33_bundle_3", "polyloop (G, ↗, ↗, ⊙, 1) from tab7 tab7 tab5",
                 with_divisions("ex33_bundle_3", t7, t7, t5, one), polyloop, "1", identity_only});
  out.push_back({"ex34", "polyquasigroup (P, ⋆) with Tallini 1, same table as tab8", bare("ex34", t8), tallini_quasi,
                 std::nullopt, ex34});
  out.push_back({"ex35", "polyloop (P, ∗) with Tallini 1, same table as tab9", bare("ex35", t9), tallini_loop, "e", ex35});
  return out;
}

ElementSet labels_to_set(const HyperTable& t, const std::vector<std::string>& labels) {
  ElementSet out;
  for (const auto& l : labels) {
    auto i = t.index_of(l);
    if (!i) throw Error(ErrorKind::internal, "fixture refers to unknown element " + l);
    out.insert(*i);
  }
  return out;
}

}  // namespace

HyperTable compact_table(const std::vector<std::string>& names, std::string_view text) {
  RawTable raw;
  std::istringstream rows{std::string(text)};
  std::string row;
  while (std::getline(rows, row)) {
    if (row.empty()) continue;
    auto& cells = raw.emplace_back();
    std::istringstream cell_stream(row);
    std::string cell;
    while (std::getline(cell_stream, cell, '|')) {
      auto& members = cells.emplace_back();
      if (cell == "P") {
        members = names;
        continue;
      }
      std::istringstream member_stream(cell);
      std::string member;
      while (std::getline(member_stream, member, ',')) members.push_back(member);
    }
  }
  return validate_table(names, raw).table;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build_fixtures();
  return all;
}

const Fixture* find_fixture(const std::string& id) {
  for (const auto& f : fixtures()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

FixtureOutcome check_fixture(const Fixture& fixture, std::size_t brute_cap) {
  FixtureOutcome out;
  out.id = fixture.id;
  const HyperTable& t = fixture.bundle.table;
  auto record = [&](bool ok, const std::string& what) {
    out.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    out.passed = out.passed && ok;
  };

  const StructureProfile profile = classify(fixture.bundle);
  for (auto [flag, expected] : fixture.expected_flags) {
    const bool got = profile[flag].holds();
    record(got == expected, std::string(flag_name(flag)) + " = " + (got ? "true" : "false") + " (published " +
                                (expected ? "true" : "false") + ")");
  }
  if (fixture.expected_identity) {
    const std::string got = profile.identity ? t.name(*profile.identity) : "none";
    record(got == *fixture.expected_identity, "identity = " + got + " (published " + *fixture.expected_identity + ")");
  }
  for (const auto& v : lattice_violations(profile)) record(false, "lattice: " + v);

  if (fixture.expected_nuclei) {
    const PublishedNuclei& published = *fixture.expected_nuclei;
    for (NucleusOrder order : kAllOrders) {
      for (NucleusSide side : kAllSides) {
        const ElementSet fast = nucleus(t, order, side);
        // Orders 2 and 3 quantify over one subset argument and stay cheap up to 13 elements.
        const bool single_subset = order == NucleusOrder::second || order == NucleusOrder::third;
        const std::size_t cap = single_subset ? std::max<std::size_t>(brute_cap, 13) : brute_cap;
        std::string how = "fast";
        if (order != NucleusOrder::first && t.order() <= cap) {
          const ElementSet brute = nucleus_bruteforce(t, order, side, cap);
          record(brute == fast, "N" + std::to_string(order_value(order)) + "_" + side_name(side) +
                                    " brute-force oracle agrees with fast path");
          how = "fast+oracle";
        }
        const ElementSet expected = labels_to_set(t, published.sides[static_cast<std::size_t>(side)]);
        const std::string label = "N" + std::to_string(order_value(order)) + "_" + side_name(side) + " = " +
                                  format_set(t, fast) + " [" + how + "]";
        if (fast == expected) {
          record(true, label);
        } else if (published.disputed) {
          out.errata.push_back(label + ", published " + format_set(t, expected) +
                               " contradicts the strict identity being nuclear");
        } else {
          record(false, label + ", published " + format_set(t, expected));
        }
      }
      const ElementSet inter = nucleus_intersection(t, order);
      const ElementSet expected = labels_to_set(t, published.intersection);
      const std::string label = "N" + std::to_string(order_value(order)) + " = " + format_set(t, inter);
      if (inter == expected) {
        record(true, label);
      } else if (published.disputed) {
        out.errata.push_back(label + ", published " + format_set(t, expected));
      } else {
        record(false, label + ", published " + format_set(t, expected));
      }
    }
  }

  const TheoremReport theorems = verify_containment_theorems(t, VerifyMode::fast);
  record(theorems.all_hold(), "all " + std::to_string(theorems.clauses.size()) + " nucleus containments hold");
  return out;
}

}  // namespace hyper
