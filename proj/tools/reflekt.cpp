#include <algorithm>
#include <iomanip>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reflekt/egf.hpp"
#include "reflekt/errors.hpp"
#include "reflekt/factor.hpp"
#include "reflekt/group.hpp"
#include "reflekt/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace reflekt;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Components left after erasing even-labelled edges; one per hyperplane orbit.
std::size_t orbit_count_from_diagram(const Diagram& d) {
  std::vector<std::size_t> parent(d.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& e : d.edges) {
    if (e.label % 2 == 1) parent[find(e.from)] = find(e.to);
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) count += find(i) == i;
  return count;
}

int cmd_list(bool as_json) {
  const fs::path dir = default_group_dir();
  if (!fs::is_directory(dir)) throw DataError("data directory not found: " + dir.string());
  json rows = json::array();
  rows.push_back({{"name", "G(r,1,n)"}, {"kind", "family"}, {"rank", "n"}, {"p", "2 (n >= 2)"}, {"order", "r^n n!"}});
  rows.push_back({{"name", "G(m,m,2)"}, {"kind", "family"}, {"rank", 2}, {"p", "2 (m even)"}, {"order", "2m"}});
  std::vector<std::pair<unsigned, fs::path>> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    try {
      files.emplace_back(parse_group_spec(entry.path().stem().string()).index, entry.path());
    } catch (const Error&) {
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& [index, path] : files) {
    const GroupDefinition def = load_definition(path);
    std::size_t p = 0;
    if (def.diagram) {
      p = orbit_count_from_diagram(*def.diagram);
    } else {
      p = enumerate_group(def).numerology().p();
    }
    rows.push_back({{"name", def.name}, {"kind", "exceptional"}, {"rank", def.rank}, {"p", p}, {"order", def.expected_order}});
  }
  if (as_json) {
    std::cout << rows.dump(2) << "\n";
    return kOk;
  }
  std::cout << "data directory: " << dir.string() << "\n";
  for (const auto& r : rows) {
    auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::cout << std::left << std::setw(10) << r["name"].get<std::string>() << std::setw(13) << r["kind"].get<std::string>()
              << "rank " << std::setw(4) << text(r["rank"]) << "p " << std::setw(12) << text(r["p"]) << "order "
              << text(r["order"]) << "\n";
  }
  return kOk;
}

int cmd_info(const std::string& spec_text) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const ReflectionGroup g = build_group(spec, default_group_dir());
  const auto& num = g.numerology();
  std::cout << "group      " << g.name() << "\n"
            << "rank       " << num.rank << "\n"
            << "order      " << num.order << "\n"
            << "N, N*      " << num.reflections << ", " << num.hyperplanes << "\n"
            << "h          " << num.coxeter_number << "\n"
            << "c order    " << g.element_order(g.coxeter_element()) << "\n"
            << "p          " << num.p() << "\n"
            << "labeling   " << kOrbitLabelingConvention << "\n";
  for (std::size_t i = 0; i < num.p(); ++i) {
    const auto& o = num.orbits[i];
    std::cout << "orbit " << i + 1 << "    N_i = " << o.reflections << ", N_i* = " << o.hyperplanes << ", n_i = ";
    if (o.multiplicity) {
      std::cout << o.multiplicity;
    } else {
      std::cout << "unknown (factorization search over budget)";
    }
    std::cout << "\n";
  }
  if (num.multiplicities_known()) std::cout << "row        " << render_row(row_from_numerology(num)) << "\n";
  return kOk;
}

int cmd_verify(const std::string& spec_text, std::optional<std::size_t> degree, const std::string& chartable,
               bool as_json) {
  const GroupSpec spec = parse_group_spec(spec_text);
  ReflectionGroup g = build_group(spec, default_group_dir());
  VerifyOptions options;
  options.degree = degree;
  if (!chartable.empty()) {
    if (!fs::exists(chartable)) throw ParseError("cannot open character table " + chartable);
    options.chartable = fs::path(chartable);
  }
  options.warnings = &std::cerr;
  const VerificationReport report = verify_group(g, options);
  if (as_json) {
    std::cout << report.to_json() << "\n";
  } else {
    std::cout << report.group << " (degree " << report.degree << ", " << report.convention << ")\n";
    for (const auto& c : report.checks) {
      std::cout << "  " << std::left << std::setw(8) << to_string(c.status) << std::setw(26) << c.name;
      if (!c.detail.empty()) std::cout << c.detail;
      std::cout << "\n";
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << " in " << std::fixed << std::setprecision(2) << report.seconds
              << " s\n";
  }
  return report.passed() ? kOk : kFailed;
}

int cmd_table(bool as_json) {
  const auto lines = reproduce_table(default_group_dir());
  const bool all = std::all_of(lines.begin(), lines.end(), [](const TableLine& l) { return l.match; });
  if (as_json) {
    json rows = json::array();
    for (const auto& l : lines) {
      rows.push_back({{"row", l.family},
                      {"group", l.instance},
                      {"symbolic", l.symbolic},
                      {"expected", l.expected},
                      {"computed", l.computed},
                      {"match", l.match}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::string last;
    for (const auto& l : lines) {
      if (l.family != last) {
        std::cout << l.family << "    " << l.symbolic << "\n";
        last = l.family;
      }
      std::cout << "  " << std::left << std::setw(10) << l.instance << std::setw(6) << (l.match ? "ok" : "DIFF")
                << "computed " << l.computed;
      if (!l.match) std::cout << "   expected " << l.expected;
      std::cout << "\n";
    }
    std::cout << (all ? "all rows match" : "MISMATCH") << "\n";
  }
  return all ? kOk : kFailed;
}

int cmd_recover(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open series file " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto series = TruncatedEGF::from_json(buf.str(), file);
  std::vector<Rational> values;
  try {
    values = recover_multiset(series);
  } catch (const DataError& e) {
    std::cerr << "not recoverable: " << e.what() << "\n";
    return kFailed;
  }
  std::cout << "{";
  for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? ", " : "") << values[i].get_str();
  std::cout << "}\n";
  return kOk;
}

int cmd_hurwitz(const std::string& spec_text) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const ReflectionGroup g = build_group(spec, default_group_dir());
  const HurwitzSummary s = hurwitz_summary(g);
  std::cout << g.name() << ": " << s.factorizations << " shortest factorizations of c\n";
  std::cout << "Hurwitz orbit of the first: " << s.closure_size << (s.transitive ? " (transitive)" : " (not transitive)")
            << "\n";
  std::cout << "n_i = (";
  for (std::size_t i = 0; i < s.multiplicities.size(); ++i) std::cout << (i ? ", " : "") << s.multiplicities[i];
  std::cout << ")" << (s.multiplicities_constant ? ", constant over all factorizations" : ", NOT constant") << "\n";
  return s.transitive && s.multiplicities_constant ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of orbit-refined reflection factorization counts"};
  app.require_subcommand(1, 1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "List built-in families and shipped group definitions");
  list->add_flag("--json", list_json, "JSON output");

  std::string spec;
  auto* info = app.add_subcommand("info", "Numerology and table row of a group");
  info->add_option("spec", spec, "Group, e.g. G26, G(3,1,2), I2(6)")->required();

  std::size_t degree = 0;
  std::string chartable;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run every check on a group");
  verify->add_option("spec", spec, "Group spec")->required();
  auto* degree_opt = verify->add_option("--degree", degree, "Truncation degree (default n + 4)");
  verify->add_option("--chartable", chartable, "Character table JSON for the Frobenius cross-check");
  verify->add_flag("--json", verify_json, "JSON report");

  bool table_json = false;
  auto* table = app.add_subcommand("table", "Recompute every table row");
  table->add_flag("--json", table_json, "JSON output");

  std::string file;
  auto* recover = app.add_subcommand("recover", "Recover {a_i} from a dump of prod (e^{a_i x} - 1)");
  recover->add_option("file", file, "Series JSON file")->required();

  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz action on shortest factorizations");
  hurwitz->add_option("spec", spec, "Group spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (list->parsed()) return cmd_list(list_json);
    if (info->parsed()) return cmd_info(spec);
    if (verify->parsed()) {
      return cmd_verify(spec, degree_opt->count() ? std::optional<std::size_t>(degree) : std::nullopt, chartable,
                        verify_json);
    }
    if (table->parsed()) return cmd_table(table_json);
    if (recover->parsed()) return cmd_recover(file);
    if (hurwitz->parsed()) return cmd_hurwitz(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
