// Acceptance suite: one PASS/FAIL line per criterion, plus "info" lines for
// facts the criteria ask to be recorded. All comparisons are exact set or
// byte equality; there are no numeric tolerances.
//
// Usage: acceptance <path to hyperctl>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hyper/axioms.hpp"
#include "hyper/constructors.hpp"
#include "hyper/error.hpp"
#include "hyper/fixtures.hpp"
#include "hyper/io.hpp"
#include "hyper/nuclei.hpp"
#include "hyper/search.hpp"

using namespace hyper;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("failed: " + what);
    }
  }
  void info(const std::string& what) { notes.push_back("info: " + what); }
};

const Fixture& fixture(const char* id) { return *find_fixture(id); }

ElementSet labels(const HyperTable& t, const std::vector<std::string>& names) {
  ElementSet out;
  for (const auto& n : names) out.insert(*t.index_of(n));
  return out;
}

std::string nucleus_name(NucleusOrder o, NucleusSide s) {
  return "N" + std::to_string(order_value(o)) + "_" + side_name(s);
}

// Random tables for the property criteria: order 1..max_order, density in
// {0.2, 0.35, 0.5, 0.65}.
HyperTable sample(std::uint64_t seed, std::size_t max_order) {
  const std::size_t n = 1 + seed % max_order;
  const double density = 0.2 + 0.15 * static_cast<double>((seed / max_order) % 4);
  return random_hypergroupoid(n, density, seed);
}

std::string run(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

// Splits concatenated structure files; each ends with a line holding "}".
std::vector<std::string> split_documents(const std::string& text) {
  std::vector<std::string> docs;
  std::istringstream in(text);
  std::string line, current;
  while (std::getline(in, line)) {
    current += line + "\n";
    if (line == "}") {
      docs.push_back(current);
      current.clear();
    }
  }
  return docs;
}

Outcome fixture_classification() {
  Outcome out;
  auto expect = [&](const char* id, Flag f, bool value) {
    const bool got = classify(fixture(id).bundle)[f].holds();
    out.require(got == value, std::string(id) + " " + std::string(flag_name(f)) + " = " + (got ? "true" : "false"));
  };
  expect("tab1", Flag::hypergroupoid, true);
  expect("tab1", Flag::quasihypergroup, false);
  expect("tab1", Flag::polyquasigroup, false);
  expect("tab1", Flag::polyloop, false);
  for (const char* id : {"ex32_bundle_1", "ex32_bundle_2", "ex32_bundle_3"}) {
    expect(id, Flag::polyquasigroup, true);
    out.require(!check_identity(fixture(id).bundle.table).strict, std::string(id) + " has a strict identity");
  }
  for (const char* id : {"ex33_bundle_1", "ex33_bundle_2", "ex33_bundle_3"}) {
    expect(id, Flag::polyloop, true);
    const StructureBundle& b = fixture(id).bundle;
    const auto e = classify(b).identity;
    out.require(e && b.table.name(*e) == "1", std::string(id) + " identity is not 1");
  }
  expect("tab8", Flag::polyquasigroup, true);
  expect("tab8", Flag::tallini1, true);
  expect("tab8", Flag::tallini2, false);
  expect("tab9", Flag::polyloop, true);
  expect("tab9", Flag::tallini1, true);
  expect("tab9", Flag::tallini2, false);

  // The order-7 tuples list the operation, then two division tables. Taking
  // the second as \ and the third as / fails condition checks; the bundles
  // store them the other way round.
  const Verdict literal =
      check_polyquasigroup(fixture("tab2").bundle.table,
                           DivisionPair{fixture("tab3").bundle.table, fixture("tab4").bundle.table});
  out.info(std::string("(tab2, tab3, tab4) with 3 as left division and 4 as right division: ") +
           (literal.holds() ? "polyquasigroup" : "fails condition " + literal.witness()->clause) +
           "; with the roles exchanged: polyquasigroup");
  return out;
}

Outcome tallini_nuclei() {
  Outcome out;
  struct Case {
    const char* id;
    std::array<std::vector<std::string>, 3> sides;
    std::vector<std::string> all;
  };
  const std::vector<Case> cases = {
      {"tab8", {{{"A", "H"}, {"A", "B", "G", "H"}, {"A", "H", "I", "L"}}}, {"A", "H"}},
      {"tab9", {{{"e", "A", "H"}, {"e", "A", "B", "G", "H"}, {"e", "A", "H", "I", "L"}}}, {"e", "A", "H"}},
  };
  for (const auto& c : cases) {
    const HyperTable& t = fixture(c.id).bundle.table;
    for (NucleusOrder o : kAllOrders) {
      for (NucleusSide s : kAllSides) {
        const ElementSet fast = nucleus(t, o, s);
        out.require(fast == labels(t, c.sides[static_cast<std::size_t>(s)]),
                     std::string(c.id) + " " + nucleus_name(o, s) + " = " + format_set(t, fast));
        if (o == NucleusOrder::second || o == NucleusOrder::third) {
          const ElementSet brute = nucleus_bruteforce(t, o, s, t.order());
          out.require(brute == fast, std::string(c.id) + " " + nucleus_name(o, s) + " oracle disagrees");
        }
      }
      out.require(nucleus_intersection(t, o) == labels(t, c.all), std::string(c.id) + " intersection");
    }
    out.info(std::string(c.id) + ": orders 2 and 3 cross-checked by subset enumeration at order " +
             std::to_string(t.order()) + "; order 4 needs 2^" + std::to_string(2 * t.order()) +
             " subset pairs per candidate and is checked by the fast path only");
  }
  return out;
}

Outcome empty_nuclei() {
  Outcome out;
  for (const char* id : {"tab1", "tab2", "tab3", "tab4"}) {
    const HyperTable& t = fixture(id).bundle.table;
    for (NucleusOrder o : kAllOrders) {
      for (NucleusSide s : kAllSides) {
        const ElementSet fast = nucleus(t, o, s);
        out.require(fast.empty(), std::string(id) + " " + nucleus_name(o, s) + " = " + format_set(t, fast));
        if (o != NucleusOrder::first) {
          out.require(nucleus_bruteforce(t, o, s, 7) == fast, std::string(id) + " " + nucleus_name(o, s) + " oracle");
        }
      }
      out.require(nucleus_intersection(t, o).empty(), std::string(id) + " intersection");
    }
  }
  return out;
}

Outcome polyloop_erratum() {
  Outcome out;
  for (const char* id : {"tab5", "tab6", "tab7"}) {
    const HyperTable& t = fixture(id).bundle.table;
    const CarrierIndex one = *t.index_of("1");
    for (NucleusOrder o : kAllOrders) {
      for (NucleusSide s : kAllSides) {
        const ElementSet fast = nucleus(t, o, s);
        const ElementSet brute = nucleus_bruteforce(t, o, s, 6);
        out.require(fast == brute, std::string(id) + " " + nucleus_name(o, s) + " fast " + format_set(t, fast) +
                                       " vs oracle " + format_set(t, brute));
        out.require(fast.contains(one), std::string(id) + " " + nucleus_name(o, s) + " misses the identity");
      }
    }
    const ElementSet all = nucleus_intersection(t, NucleusOrder::first);
    const PublishedNuclei& published = *fixture(id).expected_nuclei;
    const ElementSet printed = labels(t, published.intersection);
    if (all == printed) {
      out.info(std::string(id) + ": N^i = " + format_set(t, all) + " for i = 1..4, as published");
    } else {
      out.info(std::string(id) + ": N^i = " + format_set(t, all) + " for i = 1..4 by fast path and oracle; published " +
               format_set(t, printed) + " contradicts the identity 1 being nuclear (erratum)");
    }
  }
  return out;
}

Outcome theorem_suite() {
  Outcome out;
  std::size_t checked = 0;
  for (int k = 1; k <= 9; ++k) {
    const std::string id = "tab" + std::to_string(k);
    const HyperTable& t = find_fixture(id)->bundle.table;
    out.require(verify_containment_theorems(t, VerifyMode::fast).all_hold(), id + " fast");
    if (t.order() <= 7) out.require(verify_containment_theorems(t, VerifyMode::brute, 7).all_hold(), id + " brute");
    ++checked;
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    out.require(verify_containment_theorems(sample(seed, 5), VerifyMode::brute, 5).all_hold(),
                "random brute seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    out.require(verify_containment_theorems(sample(1000 + seed, 12), VerifyMode::fast).all_hold(),
                "random fast seed " + std::to_string(1000 + seed));
  }
  out.info(std::to_string(checked) + " fixtures, 100 random tables brute, 100 random tables fast, 20 clauses each");
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::size_t nonempty = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const HyperTable t = sample(500 + seed, 5);
    for (NucleusOrder o : kAllOrders) {
      for (NucleusSide s : kAllSides) {
        const ElementSet fast = nucleus(t, o, s);
        if (!fast.empty()) ++nonempty;
        out.require(fast == nucleus_bruteforce(t, o, s, 5),
                    "seed " + std::to_string(500 + seed) + " " + nucleus_name(o, s));
      }
    }
  }
  out.info(std::to_string(nonempty) + " of 1200 compared nuclei are non-empty");
  return out;
}

Outcome constructors() {
  Outcome out;
  const GroupTable s3 = groups::symmetric3();
  SubgroupSpec h;
  h.members.insert(s3.identity());
  for (CarrierIndex i = 0; i < s3.order(); ++i) {
    if (s3.name(i) == "(12)") h.members.insert(i);
  }
  const StructureBundle dc = double_coset_algebra(s3, h);
  out.require(dc.table.order() == 2, "S3//{id,(12)} has order " + std::to_string(dc.table.order()));
  out.require(check_polygroup(dc.table, *dc.identity, *dc.inverse).holds(), "S3//{id,(12)} is not a polygroup");
  std::size_t quotients = 0;
  for (const auto& [name, g] : groups::all_up_to_order8()) {
    for (const SubgroupSpec& sub : all_subgroups(g)) {
      const HyperTable q = quotient_hypergroup(g, sub);
      const bool ok = check_associativity(q).holds() && check_reproduction(q).holds();
      out.require(ok, name + " quotient by " + std::to_string(sub.members.bits()));
      ++quotients;
    }
  }
  out.info(std::to_string(quotients) + " quotients over 14 groups of order <= 8");
  return out;
}

Outcome degenerate_coincidence() {
  Outcome out;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const HyperTable t = random_groupoid(1 + seed % 5, seed);
    const ClassicalNuclei c = classical_nuclei(t);
    const std::array<ElementSet, 3> classical = {c.left, c.middle, c.right};
    for (NucleusSide s : kAllSides) {
      for (NucleusOrder o : kAllOrders) {
        out.require(nucleus(t, o, s) == classical[static_cast<std::size_t>(s)],
                    "seed " + std::to_string(seed) + " " + nucleus_name(o, s));
      }
    }
  }
  return out;
}

Outcome cli_search(const std::string& hyperctl, std::vector<std::string>& documents) {
  Outcome out;
  const std::string command =
      "\"" + hyperctl + "\" search --order 4 --require polyloop --seed 1 --budget 100000 2>/dev/null";
  int first_status = 0, second_status = 0;
  const std::string first = run(command, first_status);
  const std::string second = run(command, second_status);
  out.require(first_status == 0 && second_status == 0, "search exited with an error");
  out.require(first == second, "repeated runs differ");
  documents = split_documents(first);
  out.require(!documents.empty(), "no structure returned");
  for (const auto& doc : documents) {
    const StructureBundle b = parse_structure(doc).bundle;
    out.require(classify(b)[Flag::polyloop].holds(), b.name + " is not a polyloop");
  }
  out.info(std::to_string(documents.size()) + " structure(s), " + std::to_string(first.size()) +
           " bytes, identical across two runs");
  return out;
}

Outcome round_trip(const std::vector<std::string>& search_documents) {
  Outcome out;
  for (const auto& f : fixtures()) {
    const std::string text = serialize_structure(f.bundle);
    const StructureBundle back = parse_structure(text).bundle;
    out.require(back == f.bundle && serialize_structure(back) == text, f.id);
  }
  for (const auto& doc : search_documents) {
    out.require(serialize_structure(parse_structure(doc).bundle) == doc, "search output");
  }
  SearchSpec spec;
  spec.order = 5;
  spec.required = {{Flag::polyloop, true}, {Flag::semihypergroup, false}};
  spec.seed = 2;
  spec.count = 5;
  for (const auto& b : search_structures(spec).bundles) {
    const std::string text = serialize_structure(b);
    out.require(serialize_structure(parse_structure(text).bundle) == text, b.name);
  }
  out.info(std::to_string(fixtures().size()) + " fixtures and " + std::to_string(search_documents.size() + 5) +
           " search outputs");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path to hyperctl>\n";
    return 2;
  }
  const std::string hyperctl = argv[1];
  std::vector<std::string> search_documents;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fixture classification", fixture_classification},
      {"Tallini example nuclei (tab8, tab9)", tallini_nuclei},
      {"empty nuclei (tab1-tab4)", empty_nuclei},
      {"polyloop nuclei: fast path = oracle, identity nuclear (tab5-tab7)", polyloop_erratum},
      {"containment theorems on fixtures and random tables", theorem_suite},
      {"fast path = brute-force oracle on 100 random tables", oracle_equivalence},
      {"double cosets and quotient hypergroups", constructors},
      {"singleton tables: classical nuclei = all four orders", degenerate_coincidence},
      {"search --order 4 --require polyloop --seed 1 --budget 100000",
       [&] { return cli_search(hyperctl, search_documents); }},
      {"serialize/parse round-trip", [&] { return round_trip(search_documents); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << "\n";
    for (const auto& n : o.notes) std::cout << "        " << n << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
