#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyper/axioms.hpp"
#include "hyper/constructors.hpp"
#include "hyper/error.hpp"
#include "hyper/fixtures.hpp"
#include "hyper/hyper_table.hpp"
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

HyperTable z3() { return from_cayley_table(groups::cyclic(3)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::internal;
}

}  // namespace

TEST_CASE("element set basics") {
  ElementSet s;
  CHECK(s.empty());
  s.insert(3);
  s.insert(0);
  s.insert(63);
  CHECK(s.size() == 3);
  CHECK(s.contains(63));
  CHECK_FALSE(s.contains(1));
  CHECK(s.min() == 0);
  std::vector<CarrierIndex> members(s.begin(), s.end());
  CHECK(members == std::vector<CarrierIndex>{0, 3, 63});
  s.erase(0);
  CHECK(s.min() == 3);
  CHECK(ElementSet::full(64).size() == 64);
  CHECK(ElementSet::full(5).bits() == 0b11111);
  const ElementSet a = ElementSet::from_bits(0b0110);
  const ElementSet b = ElementSet::from_bits(0b0011);
  CHECK((a | b).bits() == 0b0111);
  CHECK((a & b).bits() == 0b0010);
  CHECK((a - b).bits() == 0b0100);
  CHECK(a.intersects(b));
  CHECK((a & b).subset_of(a));
  CHECK_FALSE(a.subset_of(b));
}

TEST_CASE("product reads the stored cell") {
  const HyperTable& t1 = table_of("tab1");
  CHECK(product(t1, *t1.index_of("1"), *t1.index_of("2")) == labels(t1, {"3", "4"}));
  CHECK(product(t1, *t1.index_of("6"), *t1.index_of("6")) == labels(t1, {"2"}));
  const HyperTable z = z3();
  CHECK(product(z, 1, 2) == ElementSet::singleton(0));
  CHECK(kind_of([&] { product(z, 3, 0); }) == ErrorKind::index_out_of_range);
}

TEST_CASE("set_product is the union of cell products") {
  const HyperTable& t1 = table_of("tab1");
  CHECK(set_product(t1, labels(t1, {"1"}), labels(t1, {"2"})) == labels(t1, {"3", "4"}));
  const HyperTable& t2 = table_of("tab2");
  CHECK(set_product(t2, labels(t2, {"1"}), t2.carrier()) == t2.carrier());
  CHECK(set_product(t2, ElementSet(), t2.carrier()).empty());
  CHECK(set_product(t2, t2.carrier(), ElementSet()).empty());
  CHECK(kind_of([&] { set_product(z3(), ElementSet::singleton(5), ElementSet::singleton(0)); }) ==
        ErrorKind::carrier_mismatch);
}

TEST_CASE("set_product agrees with the reference on random tables") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const HyperTable t = random_hypergroupoid(n, 0.4, seed);
    const reference::Table r = reference::from(t);
    for (const auto& a : reference::nonempty_subsets(static_cast<int>(n))) {
      for (const auto& b : reference::nonempty_subsets(static_cast<int>(n))) {
        REQUIRE(set_product(t, reference::to_element_set(a), reference::to_element_set(b)) ==
                reference::to_element_set(reference::product(r, a, b)));
      }
    }
  }
}

TEST_CASE("singletons, union-linearity and monotonicity") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const HyperTable t = random_hypergroupoid(n, 0.3, seed);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (CarrierIndex a = 0; a < n; ++a) {
      for (CarrierIndex b = 0; b < n; ++b) {
        CHECK(set_product(t, ElementSet::singleton(a), ElementSet::singleton(b)) == product(t, a, b));
      }
    }
    for (std::uint64_t x = 0; x < limit; ++x) {
      for (std::uint64_t x2 = 0; x2 < limit; ++x2) {
        for (std::uint64_t y = 0; y < limit; ++y) {
          const ElementSet A = ElementSet::from_bits(x), A2 = ElementSet::from_bits(x2), B = ElementSet::from_bits(y);
          REQUIRE(set_product(t, A | A2, B) == (set_product(t, A, B) | set_product(t, A2, B)));
          REQUIRE(set_product(t, B, A | A2) == (set_product(t, B, A) | set_product(t, B, A2)));
          if (A.subset_of(A2)) REQUIRE(set_product(t, A, B).subset_of(set_product(t, A2, B)));
        }
      }
    }
  }
}

TEST_CASE("validate_table") {
  const std::vector<std::string> names = {"a", "b"};
  SUBCASE("valid with duplicate collapse") {
    const RawTable raw = {{{"a"}, {"a", "a", "b"}}, {{"b"}, {"a"}}};
    const ValidatedTable v = validate_table(names, raw);
    CHECK(v.table.cell(0, 1) == ElementSet::from_bits(0b11));
    CHECK(v.warnings.size() == 1);
  }
  SUBCASE("empty cell") {
    const RawTable raw = {{{"a"}, {}}, {{"b"}, {"a"}}};
    try {
      validate_table(names, raw);
      FAIL("accepted an empty cell");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::empty_cell);
      CHECK(std::string(e.what()) == "EmptyCell(0, 1)");
    }
  }
  SUBCASE("unknown label") {
    const RawTable raw = {{{"a"}, {"c"}}, {{"b"}, {"a"}}};
    try {
      validate_table(names, raw);
      FAIL("accepted an unknown label");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::unknown_element);
      CHECK(std::string(e.what()) == "UnknownElement(\"c\", 0, 1)");
    }
  }
  SUBCASE("duplicate carrier names") {
    const RawTable raw = {{{"a"}, {"a"}}, {{"a"}, {"a"}}};
    CHECK(kind_of([&] { validate_table({"a", "a"}, raw); }) == ErrorKind::duplicate_name);
  }
  SUBCASE("wrong shape") {
    const RawTable raw = {{{"a"}, {"a"}}};
    CHECK(kind_of([&] { validate_table(names, raw); }) == ErrorKind::parse);
  }
  SUBCASE("order limit") {
    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i) many.push_back("x" + std::to_string(i));
    CHECK(kind_of([&] { HyperTable(many, std::vector<ElementSet>(65 * 65, ElementSet::singleton(0))); }) ==
          ErrorKind::order_limit);
  }
  SUBCASE("tab5 has order 6") { CHECK(table_of("tab5").order() == 6); }
}

TEST_CASE("derive_divisions") {
  SUBCASE("tab5 left division at (2, 1)") {
    const HyperTable& t5 = table_of("tab5");
    const DivisionPair d = derive_divisions(t5);
    const CarrierIndex two = *t5.index_of("2"), one = *t5.index_of("1");
    // Oracle: every y with 1 in 2·y, read off the raw cells.
    ElementSet expected;
    for (CarrierIndex y = 0; y < 6; ++y) {
      if (t5.cell(two, y).contains(one)) expected.insert(y);
    }
    CHECK(expected == ElementSet::singleton(two));
    CHECK(d.left_division.cell(two, one) == expected);
  }
  SUBCASE("tab1 is not divisible: row 1 misses 2 and 6") {
    const HyperTable& t1 = table_of("tab1");
    const reference::Table r = reference::from(t1);
    reference::Set row;
    for (int b = 0; b < 6; ++b) row.insert(r.at(0, b).begin(), r.at(0, b).end());
    CHECK(row == reference::Set{0, 2, 3, 4});
    try {
      derive_divisions(t1);
      FAIL("tab1 divided");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_divisible);
      CHECK(std::string(e.what()) == "NotDivisible: row 1 misses {2, 6}");
    }
  }
  SUBCASE("a group gives classical divisions") {
    const HyperTable z = z3();
    const DivisionPair d = derive_divisions(z);
    for (CarrierIndex x = 0; x < 3; ++x) {
      for (CarrierIndex y = 0; y < 3; ++y) {
        CHECK(d.left_division.cell(x, y) == ElementSet::singleton((y + 3 - x) % 3));
        CHECK(d.right_division.cell(x, y) == ElementSet::singleton((x + 3 - y) % 3));
      }
    }
  }
  SUBCASE("derived divisions always make a polyquasigroup") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 50; ++seed) {
      const HyperTable t = random_hypergroupoid(2 + seed % 5, 0.45, seed);
      if (!check_reproduction(t).holds()) continue;
      ++tested;
      CHECK(check_polyquasigroup(t, derive_divisions(t)).holds());
    }
  }
}

TEST_CASE("format_set uses element names") {
  const HyperTable& t8 = table_of("tab8");
  CHECK(format_set(t8, labels(t8, {"H", "A"})) == "{A, H}");
  CHECK(format_set(t8, ElementSet()) == "{}");
}

TEST_CASE("compact fixture text expands P to the carrier") {
  const HyperTable& t8 = table_of("tab8");
  CHECK(t8.order() == 12);
  CHECK(t8.cell(*t8.index_of("A"), *t8.index_of("C")) == t8.carrier());
  const HyperTable& t9 = table_of("tab9");
  CHECK(t9.order() == 13);
  CHECK(t9.cell(*t9.index_of("A"), *t9.index_of("C")) == t9.carrier());
  CHECK(t9.cell(*t9.index_of("e"), *t9.index_of("C")) == labels(t9, {"C"}));
}
