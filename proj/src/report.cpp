#include "hyper/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hyper {

namespace {

using nlohmann::ordered_json;

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::holds: return "true";
    case Truth::fails: return "false";
    case Truth::undetermined: return "undetermined";
  }
  return "undetermined";
}

ordered_json set_json(const HyperTable& t, ElementSet s) {
  ordered_json out = ordered_json::array();
  for (CarrierIndex i : s) out.push_back(t.name(i));
  return out;
}

ordered_json verdict_json(const HyperTable& t, const Verdict& v) {
  ordered_json out;
  if (v.truth() == Truth::undetermined) {
    out["value"] = nullptr;
    out["reason"] = v.reason();
  } else {
    out["value"] = v.holds();
  }
  if (v.witness()) {
    const Witness& w = *v.witness();
    ordered_json elements = ordered_json::array();
    for (CarrierIndex e : w.elements) elements.push_back(t.name(e));
    ordered_json sets = ordered_json::array();
    for (ElementSet s : w.sets) sets.push_back(set_json(t, s));
    out["witness"] = {{"clause", w.clause}, {"elements", elements}, {"sets", sets}};
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  // Names are ASCII, so byte length is display width.
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string witness_text(const HyperTable& t, const Witness& w) {
  std::ostringstream out;
  out << w.clause;
  if (!w.elements.empty()) {
    out << " at (";
    for (std::size_t i = 0; i < w.elements.size(); ++i) out << (i ? ", " : "") << t.name(w.elements[i]);
    out << ")";
  }
  for (std::size_t i = 0; i < w.sets.size(); ++i) out << (i ? " vs " : ": ") << format_set(t, w.sets[i]);
  return out.str();
}

std::string profile_text(const StructureBundle& bundle, const StructureProfile& profile) {
  const HyperTable& t = bundle.table;
  std::ostringstream out;
  out << bundle.name << " (order " << t.order() << ")\n";
  for (Flag f : all_flags()) {
    const Verdict& v = profile[f];
    out << "  " << pad(std::string(flag_name(f)), 26) << truth_name(v.truth());
    if (v.witness()) out << "  [" << witness_text(t, *v.witness()) << "]";
    if (v.truth() == Truth::undetermined) out << "  [" << v.reason() << "]";
    out << "\n";
  }
  out << "  identity: " << (profile.identity ? t.name(*profile.identity) : "none") << "\n";
  ElementSet weak;
  for (CarrierIndex w : profile.weak_identities) weak.insert(w);
  out << "  weak identities: " << format_set(t, weak) << "\n";
  if (profile.inverse) {
    out << "  inverse:";
    for (CarrierIndex x = 0; x < t.order(); ++x) out << " " << t.name(x) << "->" << t.name((*profile.inverse)[x]);
    out << "\n";
  }
  out << "  divisions: " << profile.divisions_source << "\n";
  return out.str();
}

std::string profile_json(const StructureBundle& bundle, const StructureProfile& profile) {
  const HyperTable& t = bundle.table;
  ordered_json out;
  out["name"] = bundle.name;
  out["order"] = t.order();
  ordered_json flags = ordered_json::object();
  for (Flag f : all_flags()) flags[std::string(flag_name(f))] = verdict_json(t, profile[f]);
  out["flags"] = flags;
  out["identity"] = profile.identity ? ordered_json(t.name(*profile.identity)) : ordered_json(nullptr);
  ordered_json weak = ordered_json::array();
  for (CarrierIndex w : profile.weak_identities) weak.push_back(t.name(w));
  out["weak_identities"] = weak;
  if (profile.inverse) {
    ordered_json inv = ordered_json::object();
    for (CarrierIndex x = 0; x < t.order(); ++x) inv[t.name(x)] = t.name((*profile.inverse)[x]);
    out["inverse"] = inv;
  } else {
    out["inverse"] = nullptr;
  }
  out["divisions"] = profile.divisions_source;
  return out.dump(2) + "\n";
}

std::string nuclei_text(const HyperTable& t, const NucleusReport& report) {
  std::ostringstream out;
  for (NucleusOrder o : kAllOrders) {
    if (!report.intersection(o)) continue;
    out << "order " << order_value(o) << "\n";
    for (NucleusSide s : kAllSides) {
      const auto& entry = report.at(o, s);
      out << "  " << pad(side_name(s), 8) << format_set(t, entry->set) << "  (" << method_name(entry->method);
      if (entry->oracle_agrees) out << (*entry->oracle_agrees ? ", fast path agrees" : ", FAST PATH DISAGREES");
      out << ")\n";
    }
    out << "  " << pad("all", 8) << format_set(t, *report.intersection(o)) << "\n";
  }
  return out.str();
}

std::string nuclei_json(const HyperTable& t, const NucleusReport& report) {
  ordered_json orders = ordered_json::array();
  for (NucleusOrder o : kAllOrders) {
    if (!report.intersection(o)) continue;
    ordered_json entry;
    entry["order"] = order_value(o);
    for (NucleusSide s : kAllSides) {
      const auto& e = report.at(o, s);
      ordered_json side;
      side["set"] = set_json(t, e->set);
      side["method"] = method_name(e->method);
      side["oracle_agrees"] = e->oracle_agrees ? ordered_json(*e->oracle_agrees) : ordered_json(nullptr);
      entry[side_name(s)] = side;
    }
    entry["intersection"] = set_json(t, *report.intersection(o));
    orders.push_back(entry);
  }
  ordered_json out;
  out["orders"] = orders;
  out["consistent"] = report.consistent();
  return out.dump(2) + "\n";
}

std::string theorems_text(const HyperTable& t, const TheoremReport& report) {
  std::ostringstream out;
  out << "mode: " << (report.mode == VerifyMode::fast ? "fast" : "brute") << "\n";
  std::size_t failed = 0;
  for (const auto& c : report.clauses) {
    if (!c.holds) ++failed;
    out << (c.holds ? "  ok    " : "  FAIL  ") << pad(c.label(), 24) << format_set(t, c.smaller_set) << " ⊆ "
        << format_set(t, c.larger_set) << "\n";
  }
  out << (report.clauses.size() - failed) << "/" << report.clauses.size() << " containments hold\n";
  return out.str();
}

std::string theorems_json(const HyperTable& t, const TheoremReport& report) {
  ordered_json clauses = ordered_json::array();
  for (const auto& c : report.clauses) {
    clauses.push_back({{"clause", c.label()},
                       {"side", c.side ? ordered_json(side_name(*c.side)) : ordered_json(nullptr)},
                       {"smaller_order", order_value(c.smaller)},
                       {"larger_order", order_value(c.larger)},
                       {"smaller", set_json(t, c.smaller_set)},
                       {"larger", set_json(t, c.larger_set)},
                       {"holds", c.holds}});
  }
  ordered_json out;
  out["mode"] = report.mode == VerifyMode::fast ? "fast" : "brute";
  out["clauses"] = clauses;
  out["all_hold"] = report.all_hold();
  return out.dump(2) + "\n";
}

std::string fixture_outcome_text(const FixtureOutcome& outcome) {
  std::ostringstream out;
  out << (outcome.passed ? "PASS " : "FAIL ") << outcome.id << "\n";
  for (const auto& line : outcome.lines) out << "  " << line << "\n";
  for (const auto& e : outcome.errata) out << "  erratum: " << e << "\n";
  return out.str();
}

}  // namespace hyper
