// hyperctl: classify, inspect and generate finite hyperstructures.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyper/axioms.hpp"
#include "hyper/constructors.hpp"
#include "hyper/error.hpp"
#include "hyper/fixtures.hpp"
#include "hyper/io.hpp"
#include "hyper/nuclei.hpp"
#include "hyper/report.hpp"
#include "hyper/search.hpp"

namespace {

using namespace hyper;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

StructureBundle load(const std::string& path) {
  ParsedStructure parsed = parse_structure(read_file(path));
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(parsed.bundle);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path);
  out << text;
}

// "polyloop", "polyloop=false" or "!polyloop".
std::pair<Flag, bool> parse_requirement(const std::string& item) {
  std::string name = item;
  bool value = true;
  if (!name.empty() && name[0] == '!') {
    value = false;
    name = name.substr(1);
  } else if (auto eq = name.find('='); eq != std::string::npos) {
    const std::string rhs = name.substr(eq + 1);
    name = name.substr(0, eq);
    if (rhs == "true") {
      value = true;
    } else if (rhs == "false") {
      value = false;
    } else {
      throw Error(ErrorKind::invalid_argument, "requirement " + item + " must be name, name=true, name=false or !name");
    }
  }
  auto flag = parse_flag(name);
  if (!flag) throw Error(ErrorKind::invalid_argument, "unknown flag \"" + name + "\"");
  return {*flag, value};
}

GroupTable named_group(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string kind = parts.empty() ? "" : parts[0];
  auto size = [&]() -> std::size_t {
    if (parts.size() != 2) throw Error(ErrorKind::invalid_argument, kind + " needs a size, e.g. " + kind + ":4");
    return std::stoul(parts[1]);
  };
  if (kind == "cyclic") return groups::cyclic(size());
  if (kind == "dihedral") return groups::dihedral(size());
  if (kind == "s3") return groups::symmetric3();
  if (kind == "quaternion") return groups::quaternion();
  throw Error(ErrorKind::invalid_argument, "unknown group \"" + spec + "\" (cyclic:N, dihedral:N, s3, quaternion)");
}

SubgroupSpec subgroup_from_labels(const GroupTable& g, const std::string& labels) {
  SubgroupSpec h;
  for (const auto& label : split(labels, ',')) {
    bool found = false;
    for (CarrierIndex i = 0; i < g.order(); ++i) {
      if (g.name(i) == label) {
        h.members.insert(i);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::unknown_element, "UnknownElement(\"" + label + "\") at --subgroup");
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify, inspect and generate finite hyperstructures"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Structure profile of a structure file");
  std::string classify_file;
  std::string classify_format = "text";
  classify_cmd->add_option("file", classify_file, "Structure file")->required();
  classify_cmd->add_option("--format", classify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // nuclei
  auto* nuclei_cmd = app.add_subcommand("nuclei", "Nuclei of every requested order and side");
  std::string nuclei_file;
  std::string nuclei_orders = "1,2,3,4";
  bool nuclei_brute = false;
  std::size_t nuclei_cap = kDefaultSubsetCap;
  std::string nuclei_format = "text";
  nuclei_cmd->add_option("file", nuclei_file, "Structure file")->required();
  nuclei_cmd->add_option("--orders", nuclei_orders, "Comma-separated orders among 1,2,3,4");
  nuclei_cmd->add_flag("--brute", nuclei_brute, "Cross-check orders 2-4 with the subset enumeration");
  nuclei_cmd->add_option("--cap", nuclei_cap, "Largest table order the subset enumeration accepts");
  nuclei_cmd->add_option("--format", nuclei_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check the twenty nucleus containments");
  std::string verify_file;
  bool verify_brute = false;
  std::size_t verify_cap = kDefaultSubsetCap;
  std::string verify_format = "text";
  verify_cmd->add_option("file", verify_file, "Structure file")->required();
  verify_cmd->add_flag("--brute", verify_brute, "Compute orders 2-4 by subset enumeration");
  verify_cmd->add_option("--cap", verify_cap, "Largest table order the subset enumeration accepts");
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Hypergroup from a group and a subgroup");
  std::string construct_kind;
  std::string construct_group_file;
  std::string construct_named;
  std::string construct_subgroup;
  construct_cmd->add_option("kind", construct_kind, "quotient or double-coset")
      ->required()
      ->check(CLI::IsMember({"quotient", "double-coset"}));
  auto* group_opt = construct_cmd->add_option("--group", construct_group_file, "Group file");
  auto* named_opt =
      construct_cmd->add_option("--named", construct_named, "Built-in group: cyclic:N, dihedral:N, s3, quaternion");
  group_opt->excludes(named_opt);
  construct_cmd->add_option("--subgroup", construct_subgroup, "Comma-separated subgroup members")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "Find tables with a required profile");
  SearchSpec spec;
  std::string search_require;
  std::string search_out_dir;
  search_cmd->add_option("--order", spec.order, "Carrier order, 1..8")->required();
  search_cmd->add_option("--require", search_require, "Comma-separated flags: name, name=false or !name");
  search_cmd->add_option("--seed", spec.seed, "Seed permuting equal-size candidates");
  search_cmd->add_option("--budget", spec.node_budget, "Cell assignments tried before giving up");
  search_cmd->add_option("--count", spec.count, "Number of structures wanted");
  search_cmd->add_option("--cell-max", spec.cell_size_max, "Largest cell size tried (default: order)");
  search_cmd->add_option("--out-dir", search_out_dir, "Write one file per structure instead of printing");

  // format
  auto* format_cmd = app.add_subcommand("format", "Re-serialize a structure file canonically");
  std::string format_file;
  format_cmd->add_option("file", format_file, "Structure file")->required();

  // random
  auto* random_cmd = app.add_subcommand("random", "Random hypergroupoid");
  std::size_t random_order = 5;
  double random_density = 0.5;
  std::uint64_t random_seed = 0;
  random_cmd->add_option("--order", random_order, "Carrier order")->required();
  random_cmd->add_option("--density", random_density, "Probability of each member, in (0, 1]");
  random_cmd->add_option("--seed", random_seed, "Seed");

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Embedded published examples");
  fixtures_cmd->require_subcommand(1);
  fixtures_cmd->add_subcommand("list", "List fixture ids");
  auto* dump_cmd = fixtures_cmd->add_subcommand("dump", "Print one fixture as a structure file");
  std::string dump_id;
  std::string dump_out;
  dump_cmd->add_option("id", dump_id, "Fixture id")->required();
  dump_cmd->add_option("--out", dump_out, "Write to this file instead of standard output");
  auto* check_cmd = fixtures_cmd->add_subcommand("check", "Re-derive every published classification and nucleus");
  std::size_t check_cap = 7;
  check_cmd->add_option("--cap", check_cap, "Largest order cross-checked by full subset enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify_cmd) {
      const StructureBundle bundle = load(classify_file);
      const StructureProfile profile = classify(bundle);
      const auto violations = lattice_violations(profile);
      std::cout << (classify_format == "json" ? profile_json(bundle, profile) : profile_text(bundle, profile));
      for (const auto& v : violations) std::cerr << "internal: lattice violated: " << v << "\n";
      return violations.empty() ? kOk : kInternalError;
    }
    if (*nuclei_cmd) {
      const StructureBundle bundle = load(nuclei_file);
      NucleusOptions options;
      options.orders.clear();
      for (const auto& o : split(nuclei_orders, ',')) options.orders.push_back(nucleus_order(std::stoi(o)));
      options.brute = nuclei_brute;
      options.subset_cap = nuclei_cap;
      const NucleusReport report = compute_nuclei(bundle.table, options);
      std::cout << (nuclei_format == "json" ? nuclei_json(bundle.table, report) : nuclei_text(bundle.table, report));
      return report.consistent() ? kOk : kInternalError;
    }
    if (*verify_cmd) {
      const StructureBundle bundle = load(verify_file);
      const TheoremReport report =
          verify_containment_theorems(bundle.table, verify_brute ? VerifyMode::brute : VerifyMode::fast, verify_cap);
      std::cout << (verify_format == "json" ? theorems_json(bundle.table, report)
                                            : theorems_text(bundle.table, report));
      return report.all_hold() ? kOk : kInternalError;
    }
    if (*construct_cmd) {
      if (construct_group_file.empty() == construct_named.empty()) {
        throw Error(ErrorKind::invalid_argument, "give exactly one of --group or --named");
      }
      const GroupTable group =
          construct_named.empty() ? group_from_bundle(load(construct_group_file)) : named_group(construct_named);
      const SubgroupSpec h = subgroup_from_labels(group, construct_subgroup);
      const StructureBundle out =
          construct_kind == "quotient"
              ? StructureBundle{"quotient", quotient_hypergroup(group, h), std::nullopt, std::nullopt, std::nullopt}
              : double_coset_algebra(group, h);
      std::cout << serialize_structure(out);
      return kOk;
    }
    if (*search_cmd) {
      for (const auto& item : split(search_require, ',')) spec.required.push_back(parse_requirement(item));
      const SearchResult result = search_structures(spec);
      for (const auto& bundle : result.bundles) {
        const std::string text = serialize_structure(bundle);
        if (search_out_dir.empty()) {
          std::cout << text;
        } else {
          std::filesystem::create_directories(search_out_dir);
          write_file((std::filesystem::path(search_out_dir) / (bundle.name + ".json")).string(), text);
        }
      }
      std::cerr << "found " << result.bundles.size() << " of " << spec.count << " after " << result.nodes
                << " nodes" << (result.exhausted ? "; search space exhausted" : "")
                << (result.budget_hit ? "; node budget exhausted" : "") << "\n";
      return kOk;
    }
    if (*format_cmd) {
      std::cout << serialize_structure(load(format_file));
      return kOk;
    }
    if (*random_cmd) {
      const HyperTable t = random_hypergroupoid(random_order, random_density, random_seed);
      std::cout << serialize_structure(StructureBundle{"random", t, std::nullopt, std::nullopt, std::nullopt});
      return kOk;
    }
    if (*fixtures_cmd) {
      if (fixtures_cmd->got_subcommand("list")) {
        for (const auto& f : fixtures()) std::cout << f.id << "\t" << f.provenance << "\n";
        return kOk;
      }
      if (*dump_cmd) {
        const Fixture* f = find_fixture(dump_id);
        if (!f) throw Error(ErrorKind::invalid_argument, "unknown fixture \"" + dump_id + "\"");
        const std::string text = serialize_structure(f->bundle);
        if (dump_out.empty()) {
          std::cout << text;
        } else {
          write_file(dump_out, text);
        }
        return kOk;
      }
      if (*check_cmd) {
        std::size_t failed = 0;
        for (const auto& f : fixtures()) {
          const FixtureOutcome outcome = check_fixture(f, check_cap);
          if (!outcome.passed) ++failed;
          std::cout << fixture_outcome_text(outcome);
        }
        std::cout << (fixtures().size() - failed) << "/" << fixtures().size() << " fixtures pass\n";
        return failed == 0 ? kOk : kInternalError;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_internal() ? kInternalError : kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: not a number: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}
