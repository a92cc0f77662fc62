#include "hyper/axioms.hpp"

#include <algorithm>
#include <utility>

#include "hyper/error.hpp"

namespace hyper {

namespace {

Verdict fail(std::vector<CarrierIndex> elements, std::vector<ElementSet> sets, std::string clause) {
  return Verdict::failing(Witness{std::move(elements), std::move(sets), std::move(clause)});
}

/// Conjunction keeping the first failure's witness.
Verdict both(const Verdict& a, const Verdict& b) {
  if (a.fails()) return a;
  if (b.fails()) return b;
  if (a.truth() == Truth::undetermined) return a;
  if (b.truth() == Truth::undetermined) return b;
  return Verdict::holding();
}

/// First x violating x·e = e·x = {x}, if any.
std::optional<CarrierIndex> strict_identity_failure(const HyperTable& t, CarrierIndex e) {
  for (CarrierIndex x = 0; x < t.order(); ++x) {
    const ElementSet sx = ElementSet::singleton(x);
    if (t.cell(x, e) != sx || t.cell(e, x) != sx) return x;
  }
  return std::nullopt;
}

std::optional<CarrierIndex> weak_identity_failure(const HyperTable& t, CarrierIndex e) {
  for (CarrierIndex x = 0; x < t.order(); ++x) {
    if (t.cell(x, e) != t.cell(e, x) || !t.cell(x, e).contains(x)) return x;
  }
  return std::nullopt;
}

}  // namespace

Verdict check_associativity(const HyperTable& t) {
  const std::size_t n = t.order();
  for (CarrierIndex a = 0; a < n; ++a) {
    for (CarrierIndex b = 0; b < n; ++b) {
      for (CarrierIndex c = 0; c < n; ++c) {
        const ElementSet lhs = right_multiply(t, t.cell(a, b), c);
        const ElementSet rhs = left_multiply(t, a, t.cell(b, c));
        if (lhs != rhs) return fail({a, b, c}, {lhs, rhs}, "(a·b)·c = a·(b·c)");
      }
    }
  }
  return Verdict::holding();
}

Verdict check_weak_associativity(const HyperTable& t) {
  const std::size_t n = t.order();
  for (CarrierIndex a = 0; a < n; ++a) {
    for (CarrierIndex b = 0; b < n; ++b) {
      for (CarrierIndex c = 0; c < n; ++c) {
        const ElementSet lhs = right_multiply(t, t.cell(a, b), c);
        const ElementSet rhs = left_multiply(t, a, t.cell(b, c));
        if (!lhs.intersects(rhs)) return fail({a, b, c}, {lhs, rhs}, "(a·b)·c ∩ a·(b·c) ≠ ∅");
      }
    }
  }
  return Verdict::holding();
}

Verdict check_reproduction(const HyperTable& t) {
  const ElementSet universe = t.carrier();
  for (CarrierIndex x = 0; x < t.order(); ++x) {
    if (ElementSet missing = universe - t.row_union(x); !missing.empty()) return fail({x}, {missing}, "row");
    if (ElementSet missing = universe - t.column_union(x); !missing.empty()) return fail({x}, {missing}, "column");
  }
  return Verdict::holding();
}

Verdict check_polyquasigroup(const HyperTable& t, const DivisionPair& d) {
  if (!t.same_carrier(d.left_division) || !t.same_carrier(d.right_division)) {
    throw Error(ErrorKind::carrier_mismatch, "division tables must share the base table's carrier");
  }
  const HyperTable& left = d.left_division;    // left.cell(x, z) = x\z
  const HyperTable& right = d.right_division;  // right.cell(z, y) = z/y
  const std::size_t n = t.order();
  for (CarrierIndex x = 0; x < n; ++x) {
    for (CarrierIndex y = 0; y < n; ++y) {
      if (ElementSet s = right_multiply(right, t.cell(x, y), y); !s.contains(x)) return fail({x, y}, {s}, "(i)");
      if (ElementSet s = right_multiply(t, right.cell(x, y), y); !s.contains(x)) return fail({x, y}, {s}, "(ii)");
      if (ElementSet s = left_multiply(left, y, t.cell(y, x)); !s.contains(x)) return fail({x, y}, {s}, "(iii)");
      if (ElementSet s = left_multiply(t, y, left.cell(y, x)); !s.contains(x)) return fail({x, y}, {s}, "(iv)");
    }
  }
  return Verdict::holding();
}

bool is_strict_identity(const HyperTable& t, CarrierIndex e) { return !strict_identity_failure(t, e).has_value(); }

bool is_weak_identity(const HyperTable& t, CarrierIndex e) { return !weak_identity_failure(t, e).has_value(); }

IdentityInfo check_identity(const HyperTable& t) {
  IdentityInfo info;
  for (CarrierIndex e = 0; e < t.order(); ++e) {
    if (is_weak_identity(t, e)) info.weak.push_back(e);
    if (is_strict_identity(t, e)) {
      if (info.strict) {
        throw Error(ErrorKind::internal, "two strict identities " + t.name(*info.strict) + " and " + t.name(e));
      }
      info.strict = e;
    }
  }
  if (info.strict && std::find(info.weak.begin(), info.weak.end(), *info.strict) == info.weak.end()) {
    throw Error(ErrorKind::internal, "strict identity is not a weak identity");
  }
  return info;
}

Verdict check_polygroup(const HyperTable& t, CarrierIndex e, const std::vector<CarrierIndex>& inverse) {
  const std::size_t n = t.order();
  if (e >= n) throw Error(ErrorKind::index_out_of_range, "identity index out of range");
  if (inverse.size() != n) throw Error(ErrorKind::carrier_mismatch, "inverse map must be total on the carrier");
  for (CarrierIndex v : inverse) {
    if (v >= n) throw Error(ErrorKind::index_out_of_range, "inverse value out of range");
  }

  Verdict p1 = check_associativity(t);
  if (p1.fails()) {
    Witness w = *p1.witness();
    w.clause = "P1";
    return Verdict::failing(std::move(w));
  }
  if (auto x = strict_identity_failure(t, e)) return fail({e, *x}, {t.cell(*x, e), t.cell(e, *x)}, "P2");

  for (CarrierIndex y = 0; y < n; ++y) {
    for (CarrierIndex z = 0; z < n; ++z) {
      for (CarrierIndex x : t.cell(y, z)) {
        if (!t.cell(x, inverse[z]).contains(y)) return fail({x, y, z}, {t.cell(x, inverse[z])}, "P3");
        if (!t.cell(inverse[y], x).contains(z)) return fail({x, y, z}, {t.cell(inverse[y], x)}, "P3");
      }
    }
  }
  return Verdict::holding();
}

std::vector<CarrierIndex> derive_inverse(const HyperTable& t, CarrierIndex e) {
  const std::size_t n = t.order();
  if (e >= n) throw Error(ErrorKind::index_out_of_range, "identity index out of range");
  std::vector<CarrierIndex> inverse(n);
  for (CarrierIndex x = 0; x < n; ++x) {
    ElementSet candidates;
    for (CarrierIndex y = 0; y < n; ++y) {
      if (t.cell(x, y).contains(e) && t.cell(y, x).contains(e)) candidates.insert(y);
    }
    if (candidates.empty()) throw Error(ErrorKind::no_inverse, "NoInverse(" + t.name(x) + ")");
    if (candidates.size() > 1) {
      throw Error(ErrorKind::ambiguous_inverse,
                  "AmbiguousInverse(" + t.name(x) + ", " + format_set(t, candidates) + ")");
    }
    inverse[x] = candidates.min();
  }
  return inverse;
}

TalliniReport check_tallini(const HyperTable& t) {
  const std::size_t n = t.order();
  auto t1 = [&] {
    for (CarrierIndex h = 0; h < n; ++h) {
      if (t.cell(h, h) != ElementSet::singleton(h)) return fail({h}, {t.cell(h, h)}, "h·h = {h}");
    }
    return Verdict::holding();
  }();
  auto t2 = [&] {
    for (CarrierIndex a = 0; a < n; ++a) {
      for (CarrierIndex b = 0; b < n; ++b) {
        const ElementSet pair = ElementSet::singleton(a) | ElementSet::singleton(b);
        if (!pair.subset_of(t.cell(a, b))) return fail({a, b}, {t.cell(a, b)}, "h1, h2 ∈ h1·h2");
      }
    }
    return Verdict::holding();
  }();
  // Tallini 3 (containment) and 5 (equality) over all pairs and all g1 != g2.
  auto across_pairs = [&](bool equality) {
    for (CarrierIndex h1 = 0; h1 < n; ++h1) {
      for (CarrierIndex h2 = 0; h2 < n; ++h2) {
        const ElementSet lhs = t.cell(h1, h2);
        for (CarrierIndex g1 = 0; g1 < n; ++g1) {
          for (CarrierIndex g2 = 0; g2 < n; ++g2) {
            if (g1 == g2) continue;
            const ElementSet rhs = t.cell(g1, g2);
            const bool ok = equality ? lhs == rhs : lhs.subset_of(rhs);
            if (!ok) return fail({h1, h2, g1, g2}, {lhs, rhs}, equality ? "h1·h2 = g1·g2" : "h1·h2 ⊆ g1·g2");
          }
        }
      }
    }
    return Verdict::holding();
  };
  auto t4 = [&] {
    for (CarrierIndex h1 = 0; h1 < n; ++h1) {
      for (CarrierIndex h2 = 0; h2 < n; ++h2) {
        const ElementSet p = t.cell(h1, h2);
        for (CarrierIndex h3 : p) {
          const ElementSet lhs = left_multiply(t, h1, t.cell(h2, h3));
          const ElementSet mid = right_multiply(t, p, h3);
          if (lhs != p || mid != p) return fail({h1, h2, h3}, {lhs, mid, p}, "h1·(h2·h3) = (h1·h2)·h3 = h1·h2");
        }
      }
    }
    return Verdict::holding();
  }();
  Verdict t3 = across_pairs(false);
  Verdict t5 = across_pairs(true);
  Verdict geometric = both(both(both(t1, t2), t3), check_reproduction(t));
  return TalliniReport{std::move(t1), std::move(t2), std::move(t3), std::move(t4), std::move(t5), std::move(geometric)};
}

Verdict check_commutativity(const HyperTable& t) {
  for (CarrierIndex a = 0; a < t.order(); ++a) {
    for (CarrierIndex b = a + 1; b < t.order(); ++b) {
      if (t.cell(a, b) != t.cell(b, a)) return fail({a, b}, {t.cell(a, b), t.cell(b, a)}, "a·b = b·a");
    }
  }
  return Verdict::holding();
}

std::string_view flag_name(Flag flag) {
  switch (flag) {
    case Flag::hypergroupoid: return "hypergroupoid";
    case Flag::semihypergroup: return "semihypergroup";
    case Flag::quasihypergroup: return "quasihypergroup";
    case Flag::hypergroup: return "hypergroup";
    case Flag::weak_associativity: return "weak_associativity";
    case Flag::hv_group: return "hv_group";
    case Flag::polyquasigroup: return "polyquasigroup";
    case Flag::polyloop: return "polyloop";
    case Flag::multiloop: return "multiloop";
    case Flag::associative_polyloop: return "associative_polyloop";
    case Flag::polygroup: return "polygroup";
    case Flag::tallini1: return "tallini1";
    case Flag::tallini2: return "tallini2";
    case Flag::tallini3: return "tallini3";
    case Flag::tallini4: return "tallini4";
    case Flag::tallini5: return "tallini5";
    case Flag::geometric_hyperquasigroup: return "geometric_hyperquasigroup";
    case Flag::commutative: return "commutative";
  }
  return "?";
}

std::array<Flag, kFlagCount> all_flags() {
  std::array<Flag, kFlagCount> out{};
  for (std::size_t i = 0; i < kFlagCount; ++i) out[i] = static_cast<Flag>(i);
  return out;
}

std::optional<Flag> parse_flag(std::string_view name) {
  if (name == "polygroupoid") return Flag::hypergroupoid;
  for (Flag f : all_flags()) {
    if (flag_name(f) == name) return f;
  }
  return std::nullopt;
}

StructureProfile classify(const StructureBundle& bundle) {
  check_bundle_consistency(bundle);
  const HyperTable& t = bundle.table;
  StructureProfile p;

  const Verdict assoc = check_associativity(t);
  const Verdict weak = check_weak_associativity(t);
  const Verdict repro = check_reproduction(t);

  p[Flag::hypergroupoid] = Verdict::holding();
  p[Flag::semihypergroup] = assoc;
  p[Flag::quasihypergroup] = repro;
  p[Flag::hypergroup] = both(assoc, repro);
  p[Flag::weak_associativity] = weak;
  p[Flag::hv_group] = both(repro, weak);

  // Without reproduction no division tables can satisfy (ii)/(iv), so the
  // reproduction witness refutes the class for every choice of divisions.
  if (bundle.divisions) {
    p.divisions_source = "given";
    p[Flag::polyquasigroup] = check_polyquasigroup(t, *bundle.divisions);
  } else if (repro.holds()) {
    p.divisions_source = "derived";
    p[Flag::polyquasigroup] = check_polyquasigroup(t, derive_divisions(t));
  } else {
    p.divisions_source = "none";
    p[Flag::polyquasigroup] = repro;
  }

  const IdentityInfo ids = check_identity(t);
  p.weak_identities = ids.weak;
  const std::optional<CarrierIndex> e = bundle.identity ? bundle.identity : ids.strict;
  p.identity = e;

  Verdict strict_at_e = fail({}, {}, "no strict identity");
  Verdict weak_at_e = fail({}, {}, "no weak identity");
  if (e) {
    if (auto x = strict_identity_failure(t, *e)) {
      strict_at_e = fail({*e, *x}, {t.cell(*x, *e), t.cell(*e, *x)}, "x·e = e·x = {x}");
    } else {
      strict_at_e = Verdict::holding();
    }
  }
  if (bundle.identity) {
    if (auto x = weak_identity_failure(t, *bundle.identity)) {
      weak_at_e = fail({*bundle.identity, *x}, {t.cell(*x, *bundle.identity), t.cell(*bundle.identity, *x)},
                       "x ∈ x·e = e·x");
    } else {
      weak_at_e = Verdict::holding();
    }
  } else if (!ids.weak.empty()) {
    weak_at_e = Verdict::holding();
  }

  p[Flag::polyloop] = both(p[Flag::polyquasigroup], strict_at_e);
  p[Flag::multiloop] = both(p[Flag::polyquasigroup], weak_at_e);
  p[Flag::associative_polyloop] = both(p[Flag::polyloop], assoc);

  if (!e) {
    p[Flag::polygroup] = fail({}, {}, "P2");
  } else {
    std::optional<std::vector<CarrierIndex>> inv = bundle.inverse;
    if (!inv) {
      try {
        inv = derive_inverse(t, *e);
      } catch (const Error& err) {
        // P3 forces e ∈ x·y ⇒ y = x⁻¹, so a missing or ambiguous inverse refutes P3.
        if (err.kind() != ErrorKind::no_inverse && err.kind() != ErrorKind::ambiguous_inverse) throw;
        p[Flag::polygroup] = fail({*e}, {}, std::string("P3: ") + err.what());
      }
    }
    if (inv) {
      p.inverse = inv;
      p[Flag::polygroup] = check_polygroup(t, *e, *inv);
    }
  }

  TalliniReport tal = check_tallini(t);
  p[Flag::tallini1] = tal.tallini1;
  p[Flag::tallini2] = tal.tallini2;
  p[Flag::tallini3] = tal.tallini3;
  p[Flag::tallini4] = tal.tallini4;
  p[Flag::tallini5] = tal.tallini5;
  p[Flag::geometric_hyperquasigroup] = tal.geometric;
  p[Flag::commutative] = check_commutativity(t);
  return p;
}

std::vector<std::string> lattice_violations(const StructureProfile& p) {
  std::vector<std::string> out;
  auto h = [&](Flag f) { return p[f].holds(); };
  auto require = [&](bool ok, const char* what) {
    if (!ok) out.emplace_back(what);
  };
  require(h(Flag::hypergroupoid), "hypergroupoid must hold");
  require(h(Flag::hypergroup) == (h(Flag::semihypergroup) && h(Flag::quasihypergroup)),
          "hypergroup = semihypergroup and quasihypergroup");
  require(!h(Flag::semihypergroup) || h(Flag::weak_associativity), "semihypergroup implies weak associativity");
  require(h(Flag::hv_group) == (h(Flag::quasihypergroup) && h(Flag::weak_associativity)),
          "hv_group = quasihypergroup and weak associativity");
  require(!h(Flag::polyloop) || h(Flag::multiloop), "polyloop implies multiloop");
  require(!h(Flag::polyloop) || h(Flag::polyquasigroup), "polyloop implies polyquasigroup");
  require(!h(Flag::multiloop) || h(Flag::polyquasigroup), "multiloop implies polyquasigroup");
  require(!h(Flag::associative_polyloop) || (h(Flag::polyloop) && h(Flag::semihypergroup)),
          "associative polyloop implies polyloop and semihypergroup");
  require(h(Flag::geometric_hyperquasigroup) ==
              (h(Flag::tallini1) && h(Flag::tallini2) && h(Flag::tallini3) && h(Flag::quasihypergroup)),
          "geometric = tallini1, tallini2, tallini3 on a quasihypergroup");
  require(!h(Flag::polygroup) || h(Flag::hypergroup), "polygroup implies hypergroup");
  require(!(h(Flag::tallini1) && h(Flag::tallini2) && h(Flag::tallini5)) || (h(Flag::commutative) && h(Flag::tallini4)),
          "tallini1, tallini2, tallini5 imply commutativity and tallini4");
  for (Flag f : all_flags()) {
    const Verdict& v = p[f];
    if (v.fails() != v.witness().has_value()) out.emplace_back("witness present iff verdict fails");
  }
  return out;
}

}  // namespace hyper
