#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyper/axioms.hpp"
#include "hyper/constructors.hpp"
#include "hyper/error.hpp"
#include "hyper/fixtures.hpp"
#include "hyper/nuclei.hpp"
#include "hyper/search.hpp"
#include "reference.hpp"

using namespace hyper;

namespace {

const HyperTable& table_of(const char* id) { return find_fixture(id)->bundle.table; }

ElementSet labels(const HyperTable& t, std::initializer_list<const char*> names) {
  ElementSet out;
  for (const char* n : names) out.insert(*t.index_of(n));
  return out;
}

int side_index(NucleusSide s) { return static_cast<int>(s); }

}  // namespace

TEST_CASE("order and side helpers") {
  CHECK(nucleus_order(3) == NucleusOrder::third);
  CHECK_THROWS_AS(nucleus_order(0), Error);
  CHECK_THROWS_AS(nucleus_order(5), Error);
  CHECK(std::string(side_name(NucleusSide::middle)) == "middle");
}

TEST_CASE("published nuclei of the Tallini examples") {
  const HyperTable& t8 = table_of("tab8");
  for (NucleusOrder o : kAllOrders) {
    CHECK(nucleus(t8, o, NucleusSide::left) == labels(t8, {"A", "H"}));
    CHECK(nucleus(t8, o, NucleusSide::middle) == labels(t8, {"A", "B", "G", "H"}));
    CHECK(nucleus(t8, o, NucleusSide::right) == labels(t8, {"A", "H", "I", "L"}));
    CHECK(nucleus_intersection(t8, o) == labels(t8, {"A", "H"}));
  }
  const HyperTable& t9 = table_of("tab9");
  CHECK(nucleus_intersection(t9, NucleusOrder::first) == labels(t9, {"e", "A", "H"}));
}

TEST_CASE("empty nuclei of the published order-6 and order-7 examples") {
  for (const char* id : {"tab1", "tab2", "tab3", "tab4"}) {
    const HyperTable& t = table_of(id);
    for (NucleusOrder o : kAllOrders) {
      for (NucleusSide s : kAllSides) CHECK(nucleus(t, o, s).empty());
    }
  }
}

TEST_CASE("groups: every element is nuclear") {
  const HyperTable z = from_cayley_table(groups::cyclic(3));
  for (NucleusOrder o : kAllOrders) {
    for (NucleusSide s : kAllSides) CHECK(nucleus(z, o, s) == z.carrier());
  }
}

TEST_CASE("fast path equals the reference on the first order") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const HyperTable t = random_hypergroupoid(1 + seed % 7, 0.3, seed);
    const reference::Table r = reference::from(t);
    for (NucleusSide s : kAllSides) {
      REQUIRE(nucleus(t, NucleusOrder::first, s) == reference::to_element_set(reference::nucleus(r, 1, side_index(s))));
    }
  }
}

TEST_CASE("brute-force oracle equals the literal reference") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const HyperTable t = random_hypergroupoid(n, 0.35, seed + 1000);
    const reference::Table r = reference::from(t);
    for (NucleusOrder o : {NucleusOrder::second, NucleusOrder::third, NucleusOrder::fourth}) {
      for (NucleusSide s : kAllSides) {
        REQUIRE(nucleus_bruteforce(t, o, s) ==
                reference::to_element_set(reference::nucleus(r, order_value(o), side_index(s))));
      }
    }
  }
}

TEST_CASE("brute-force cap") {
  const HyperTable& t9 = table_of("tab9");
  try {
    nucleus_bruteforce(t9, NucleusOrder::fourth, NucleusSide::left);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
  // The first order never needs subsets.
  CHECK(nucleus_bruteforce(t9, NucleusOrder::first, NucleusSide::left) ==
        nucleus(t9, NucleusOrder::first, NucleusSide::left));
}

TEST_CASE("tab5, fourth order: oracle equals fast path") {
  const HyperTable& t5 = table_of("tab5");
  for (NucleusSide s : kAllSides) {
    CHECK(nucleus_bruteforce(t5, NucleusOrder::fourth, s) == nucleus(t5, NucleusOrder::fourth, s));
  }
}

TEST_CASE("strict identities are nuclear") {
  for (const char* id : {"tab5", "tab6", "tab7", "tab9"}) {
    const HyperTable& t = table_of(id);
    const auto e = check_identity(t).strict;
    REQUIRE(e);
    for (NucleusOrder o : kAllOrders) {
      for (NucleusSide s : kAllSides) CHECK(nucleus(t, o, s).contains(*e));
    }
  }
  int seen = 0;
  for (std::uint64_t seed = 0; seen < 20 && seed < 500; ++seed) {
    SearchSpec spec;
    spec.order = 3 + seed % 3;
    spec.required = {{Flag::polyloop, true}};
    spec.seed = seed;
    spec.count = 1;
    for (const auto& b : search_structures(spec).bundles) {
      ++seen;
      for (NucleusOrder o : kAllOrders) {
        for (NucleusSide s : kAllSides) CHECK(nucleus(b.table, o, s).contains(0));
      }
    }
  }
  CHECK(seen == 20);
}

TEST_CASE("compute_nuclei report") {
  const HyperTable& t5 = table_of("tab5");
  NucleusOptions options;
  options.brute = true;
  const NucleusReport r = compute_nuclei(t5, options);
  CHECK(r.consistent());
  for (NucleusOrder o : kAllOrders) {
    REQUIRE(r.intersection(o));
    CHECK(*r.intersection(o) == (r.at(o, NucleusSide::left)->set & r.at(o, NucleusSide::middle)->set &
                                 r.at(o, NucleusSide::right)->set));
    const auto& entry = *r.at(o, NucleusSide::left);
    if (o == NucleusOrder::first) {
      CHECK(entry.method == NucleusMethod::fast_path);
      CHECK_FALSE(entry.oracle_agrees);
    } else {
      CHECK(entry.method == NucleusMethod::brute_force);
      CHECK(entry.oracle_agrees == true);
    }
  }
  NucleusOptions some;
  some.orders = {NucleusOrder::second};
  const NucleusReport partial = compute_nuclei(t5, some);
  CHECK(partial.intersection(NucleusOrder::second));
  CHECK_FALSE(partial.intersection(NucleusOrder::first));
  CHECK_THROWS_AS(compute_nuclei(table_of("tab8"), options), Error);
}

TEST_CASE("containment theorems") {
  for (const auto& f : fixtures()) {
    const TheoremReport r = verify_containment_theorems(f.bundle.table, VerifyMode::fast);
    CHECK(r.clauses.size() == 20);
    CHECK(r.all_hold());
  }
  const TheoremReport one =
      verify_containment_theorems(HyperTable({"0"}, {ElementSet::singleton(0)}), VerifyMode::brute);
  CHECK(one.all_hold());
  for (const auto& c : one.clauses) CHECK(c.larger_set == ElementSet::singleton(0));
  CHECK(one.clauses.front().label() == "N1_left ⊆ N2_left");
  CHECK(one.clauses.back().label() == "N3 ⊆ N4");
  CHECK_THROWS_AS(verify_containment_theorems(table_of("tab8"), VerifyMode::brute), Error);
}

TEST_CASE("classical nuclei") {
  const HyperTable z = from_cayley_table(groups::cyclic(3));
  const ClassicalNuclei c = classical_nuclei(z);
  CHECK(c.left == z.carrier());
  CHECK(c.middle == z.carrier());
  CHECK(c.right == z.carrier());

  // x·y = 2x + y mod 3 is not associative.
  std::vector<ElementSet> cells;
  for (CarrierIndex x = 0; x < 3; ++x) {
    for (CarrierIndex y = 0; y < 3; ++y) cells.push_back(ElementSet::singleton((2 * x + y) % 3));
  }
  const HyperTable t(numbered_names(3), cells);
  CHECK_FALSE(check_associativity(t).holds());
  const ClassicalNuclei ct = classical_nuclei(t);
  const reference::Classical rc = reference::classical(reference::from(t));
  CHECK(ct.left == reference::to_element_set(rc.left));
  CHECK(ct.middle == reference::to_element_set(rc.middle));
  CHECK(ct.right == reference::to_element_set(rc.right));
  CHECK(ct.left == nucleus(t, NucleusOrder::first, NucleusSide::left));
  CHECK(ct.middle == nucleus(t, NucleusOrder::first, NucleusSide::middle));
  CHECK(ct.right == nucleus(t, NucleusOrder::first, NucleusSide::right));

  try {
    classical_nuclei(table_of("tab1"));
    FAIL("tab1 treated as classical");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_classical);
  }
}
