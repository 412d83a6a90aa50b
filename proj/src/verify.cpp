#include "reflekt/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "reflekt/egf.hpp"
#include "reflekt/errors.hpp"
#include "reflekt/factor.hpp"

#ifndef REFLEKT_DEFAULT_DATA_DIR
#define REFLEKT_DEFAULT_DATA_DIR "data"
#endif

namespace reflekt {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Group specs

std::string GroupSpec::canonical() const {
  switch (kind) {
    case Kind::exceptional:
      return "G" + std::to_string(index);
    case Kind::monomial:
      return "G(" + std::to_string(r) + ",1," + std::to_string(n) + ")";
    case Kind::dihedral:
      return "G(" + std::to_string(m) + "," + std::to_string(m) + ",2)";
  }
  return {};
}

namespace {

std::vector<unsigned> parse_arguments(const std::string& text, std::size_t open, const std::string& original) {
  if (text.back() != ')') throw ParseError("group spec \"" + original + "\": missing ')'");
  std::vector<unsigned> values;
  std::stringstream in(text.substr(open + 1, text.size() - open - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        item.size() > 6) {
      throw ParseError("group spec \"" + original + "\": bad argument \"" + item + "\"");
    }
    values.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return values;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  const std::string original(text);
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  GroupSpec spec;
  if (s.size() >= 3 && (s[0] == 'I' || s[0] == 'i') && s[1] == '2' && s[2] == '(') {
    const auto args = parse_arguments(s, 2, original);
    if (args.size() != 1) throw ParseError("group spec \"" + original + "\": I2(m) takes one argument");
    spec.kind = GroupSpec::Kind::dihedral;
    spec.m = args[0];
    if (spec.m < 3) throw DomainError("group spec \"" + original + "\": I2(m) needs m >= 3");
    return spec;
  }
  if (s.empty() || (s[0] != 'G' && s[0] != 'g')) throw ParseError("unrecognized group spec \"" + original + "\"");
  if (s.size() > 1 && s[1] == '(') {
    const auto args = parse_arguments(s, 1, original);
    if (args.size() != 3) throw ParseError("group spec \"" + original + "\": expected G(r,p,n)");
    if (args[1] == 1) {
      spec.kind = GroupSpec::Kind::monomial;
      spec.r = args[0];
      spec.n = args[2];
      if (spec.r < 2 || spec.n < 1) throw DomainError("group spec \"" + original + "\": G(r,1,n) needs r >= 2, n >= 1");
      return spec;
    }
    if (args[0] == args[1] && args[2] == 2) {
      spec.kind = GroupSpec::Kind::dihedral;
      spec.m = args[0];
      if (spec.m < 3) throw DomainError("group spec \"" + original + "\": G(m,m,2) needs m >= 3");
      return spec;
    }
    throw DomainError("group spec \"" + original + "\": only G(r,1,n) and G(m,m,2) are supported");
  }
  const std::string digits = s.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("unrecognized group spec \"" + original + "\"");
  }
  spec.kind = GroupSpec::Kind::exceptional;
  spec.index = static_cast<unsigned>(std::stoul(digits));
  return spec;
}

fs::path default_group_dir() {
  if (const char* env = std::getenv("REFLEKT_DATA_DIR"); env != nullptr && *env != '\0') return fs::path(env);
  return fs::path(REFLEKT_DEFAULT_DATA_DIR) / "groups";
}

fs::path default_chartable_dir() { return fs::path(REFLEKT_DEFAULT_DATA_DIR) / "chartables"; }

GroupDefinition resolve_definition(const GroupSpec& spec, const fs::path& group_dir) {
  switch (spec.kind) {
    case GroupSpec::Kind::monomial:
      return build_monomial(spec.r, spec.n);
    case GroupSpec::Kind::dihedral:
      return build_dihedral(spec.m);
    case GroupSpec::Kind::exceptional:
      break;
  }
  if (!fs::is_directory(group_dir)) throw DataError("data directory not found: " + group_dir.string());
  const fs::path file = group_dir / (spec.canonical() + ".json");
  if (!fs::exists(file)) throw DomainError("unknown group " + spec.canonical() + " (no " + file.string() + ")");
  return load_definition(file);
}

ReflectionGroup build_group(const GroupSpec& spec, const fs::path& group_dir, double budget) {
  ReflectionGroup group = enumerate_group(resolve_definition(spec, group_dir));
  try {
    (void)shortest_factorizations(group, budget);  // budget probe; throws before searching
  } catch (const BudgetExceededError&) {
    return group;
  }
  attach_multiplicities(group);
  return group;
}

// ---------------------------------------------------------------------------
// Table rows

TableRow row_from_numerology(const OrbitNumerology& num) {
  if (!num.multiplicities_known()) throw DomainError("table row needs the orbit multiplicities n_i");
  TableRow row;
  for (const auto& o : num.orbits) {
    const long n = static_cast<long>(o.multiplicity);
    Rational up(static_cast<long>(o.reflections), n);
    Rational down(static_cast<long>(o.hyperplanes), n);
    up.canonicalize();
    down.canonicalize();
    row.push_back({up, down, o.multiplicity});
  }
  return row;
}

namespace {

std::string variable(std::size_t i) {
  if (i == 0) return "x";
  if (i == 1) return "y";
  return "x_" + std::to_string(i + 1);
}

std::string exponent(const Rational& q, const std::string& var) {
  if (q == 1) return var;
  if (q.get_den() == 1) return q.get_str() + var;
  return "(" + q.get_str() + ")" + var;
}

}  // namespace

std::string render_row(const TableRow& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const auto& f = row[i];
    if (f.multiplicity == 0) continue;
    if (!out.empty()) out += " ";
    const std::string v = variable(i);
    out += "(e^{" + exponent(f.up, v) + "} - e^{-" + exponent(f.down, v) + "})";
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

std::optional<TableRow> expected_row(const GroupSpec& spec) {
  auto q = [](long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
  };
  switch (spec.kind) {
    case GroupSpec::Kind::monomial: {
      const long r = spec.r;
      const long n = spec.n;
      TableRow row{{q((r - 1) * n), q(n), 1}};
      if (n > 1) row.push_back({q(n * r, 2), q(n * r, 2), static_cast<std::size_t>(n - 1)});
      return row;
    }
    case GroupSpec::Kind::dihedral: {
      if (spec.m < 4 || spec.m % 2 != 0) return std::nullopt;
      const long h = spec.m / 2;
      return TableRow{{q(h), q(h), 1}, {q(h), q(h), 1}};
    }
    case GroupSpec::Kind::exceptional:
      break;
  }
  // Orbit x first (hyperplane of the first diagram node), then orbit y.
  static const std::map<unsigned, TableRow> rows = {
      {5, {{q(8), q(4), 1}, {q(8), q(4), 1}}},       {6, {{q(6), q(6), 1}, {q(8), q(4), 1}}},
      {9, {{q(12), q(12), 1}, {q(18), q(6), 1}}},    {10, {{q(16), q(8), 1}, {q(18), q(6), 1}}},
      {14, {{q(16), q(8), 1}, {q(12), q(12), 1}}},   {17, {{q(30), q(30), 1}, {q(48), q(12), 1}}},
      {18, {{q(40), q(20), 1}, {q(48), q(12), 1}}},  {21, {{q(30), q(30), 1}, {q(40), q(20), 1}}},
      {26, {{q(12), q(6), 2}, {q(9), q(9), 1}}},     {28, {{q(6), q(6), 2}, {q(6), q(6), 2}}},
  };
  const auto it = rows.find(spec.index);
  if (it == rows.end()) return std::nullopt;
  return it->second;
}

std::vector<TableLine> reproduce_table(const fs::path& group_dir) {
  struct Entry {
    std::string family;
    std::string symbolic;
    std::vector<std::string> instances;
  };
  const std::vector<Entry> entries = {
      {"G(r,1,n)", "(e^{(r-1)n x} - e^{-n x}) (e^{(nr/2)y} - e^{-(nr/2)y})^{n-1}", {"G(2,1,2)", "G(3,1,3)"}},
      {"G(m,m,2)", "(e^{(m/2)x} - e^{-(m/2)x}) (e^{(m/2)y} - e^{-(m/2)y}), m >= 4 even", {"G(4,4,2)", "G(6,6,2)"}},
      {"G5", "", {"G5"}},   {"G6", "", {"G6"}},   {"G9", "", {"G9"}},   {"G10", "", {"G10"}},
      {"G14", "", {"G14"}}, {"G17", "", {"G17"}}, {"G18", "", {"G18"}}, {"G21", "", {"G21"}},
      {"G26", "", {"G26"}}, {"G28", "", {"G28"}},
  };
  std::vector<TableLine> lines;
  for (const auto& e : entries) {
    for (const auto& inst : e.instances) {
      const GroupSpec spec = parse_group_spec(inst);
      TableLine line;
      line.family = e.family;
      line.instance = spec.canonical();
      const TableRow expected = *expected_row(spec);
      line.expected = render_row(expected);
      line.symbolic = e.symbolic.empty() ? line.expected : e.symbolic;
      try {
        const ReflectionGroup group = build_group(spec, group_dir);
        const TableRow computed = row_from_numerology(group.numerology());
        line.computed = render_row(computed);
        line.match = computed == expected;
      } catch (const Error& err) {
        line.computed = std::string("error: ") + err.what();
      }
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

// ---------------------------------------------------------------------------
// Verification

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::string VerificationReport::to_json() const {
  json orbits = json::array();
  for (std::size_t i = 0; i < numerology.orbits.size(); ++i) {
    const auto& o = numerology.orbits[i];
    orbits.push_back({{"label", i + 1},
                      {"reflections", o.reflections},
                      {"hyperplanes", o.hyperplanes},
                      {"multiplicity", o.multiplicity == 0 ? json(nullptr) : json(o.multiplicity)}});
  }
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"seconds", c.seconds}});
  }
  json j = {{"group", group},
            {"orbit_labeling", convention},
            {"degree", degree},
            {"numerology",
             {{"rank", numerology.rank},
              {"order", numerology.order},
              {"reflections", numerology.reflections},
              {"hyperplanes", numerology.hyperplanes},
              {"coxeter_number", numerology.coxeter_number},
              {"orbits", orbits}}},
            {"checks", checks_json},
            {"passed", passed()},
            {"seconds", seconds}};
  return j.dump(2);
}

namespace {

std::string multiset_str(const Multiset& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {CheckStatus::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {CheckStatus::fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {CheckStatus::skipped, std::move(detail)}; }

template <typename F>
void run_check(VerificationReport& report, const std::string& name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const BudgetExceededError& e) {
    out = skip(e.what());
  } catch (const std::exception& e) {
    out = fail(e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.checks.push_back({name, out.status, std::move(out.detail), secs});
}

Integer multinomial(const Multiset& l) {
  Integer total = 1;
  std::size_t acc = 0;
  for (std::size_t part : l) {
    for (std::size_t k = 1; k <= part; ++k) {
      ++acc;
      total *= static_cast<unsigned long>(acc);
      total /= static_cast<unsigned long>(k);
    }
  }
  return total;
}

Outcome check_enumeration(const ReflectionGroup& g) {
  const auto& num = g.numerology();
  const auto& def = g.definition();
  if (g.order() != def.expected_order) {
    return fail("order " + std::to_string(g.order()) + " != expected " + std::to_string(def.expected_order));
  }
  std::size_t from_stabilizers = 0;
  for (const auto& h : g.hyperplanes()) from_stabilizers += h.stabilizer_order - 1;
  if (from_stabilizers != num.reflections) {
    return fail("N = " + std::to_string(num.reflections) + " but sum (e_H - 1) = " + std::to_string(from_stabilizers));
  }
  std::size_t sum_r = 0;
  std::size_t sum_h = 0;
  for (const auto& o : num.orbits) {
    sum_r += o.reflections;
    sum_h += o.hyperplanes;
  }
  if (sum_r != num.reflections || sum_h != num.hyperplanes) return fail("orbit counts do not add up to N, N*");
  if (num.coxeter_number * num.rank != num.reflections + num.hyperplanes) return fail("h n != N + N*");
  // Orbits are closed under conjugation by the generators.
  for (const auto& info : g.reflections()) {
    for (std::size_t k = 0; k < g.generator_count(); ++k) {
      const auto slot = g.reflection_index(g.conjugate(g.generator(k), info.element));
      if (!slot || g.reflections()[*slot].orbit != info.orbit) {
        return fail("conjugate of reflection " + std::to_string(info.element) + " leaves its orbit");
      }
    }
  }
  for (const auto& h : g.hyperplanes()) {
    const auto slot = g.reflection_index(h.distinguished_reflection);
    if (!slot || !(g.reflections()[*slot].determinant == primitive_root(static_cast<unsigned>(h.stabilizer_order), 1))) {
      return fail("distinguished reflection of a hyperplane lacks determinant zeta_{e_H}");
    }
  }
  const std::size_t c = g.coxeter_element();
  if (g.element_order(c) != num.coxeter_number) return fail("Coxeter element order differs from h");
  if (!regular_eigenvector(g, c, g.coxeter_eigenvalue())) return fail("Coxeter element has no regular zeta_h-eigenvector");
  std::ostringstream s;
  s << "#W=" << g.order() << " N=" << num.reflections << " N*=" << num.hyperplanes << " h=" << num.coxeter_number;
  return pass(s.str());
}

}  // namespace

VerificationReport verify_group(ReflectionGroup& g, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.rank();
  std::size_t degree = options.degree.value_or(n + 4);
  if (degree > n + 8) {
    if (options.warnings) {
      *options.warnings << "warning: --degree " << degree << " capped at n + 8 = " << n + 8 << "\n";
    }
    degree = n + 8;
  }

  VerificationReport report;
  report.group = g.name();
  report.convention = std::string(kOrbitLabelingConvention);
  report.degree = degree;

  run_check(report, "enumeration", [&] { return check_enumeration(g); });

  std::vector<Factorization> shortest;
  run_check(report, "shortest-factorizations", [&] {
    shortest = shortest_factorizations(g, options.budget);
    if (!g.numerology().multiplicities_known()) attach_multiplicities(g);
    // n! h^n / #W
    Integer expected = 1;
    for (std::size_t k = 1; k <= n; ++k) expected *= static_cast<unsigned long>(k * g.numerology().coxeter_number);
    Rational q(expected, Integer(static_cast<unsigned long>(g.order())));
    q.canonicalize();
    if (q != Rational(Integer(static_cast<unsigned long>(shortest.size())))) {
      return fail(std::to_string(shortest.size()) + " factorizations, n! h^n / #W = " + q.get_str());
    }
    std::string n_i;
    for (const auto& o : g.numerology().orbits) n_i += (n_i.empty() ? "" : ",") + std::to_string(o.multiplicity);
    return pass(std::to_string(shortest.size()) + " factorizations; n_i = (" + n_i + ")");
  });

  const bool have_n = g.numerology().multiplicities_known();
  report.numerology = g.numerology();
  const auto& num = g.numerology();

  run_check(report, "hurwitz", [&] {
    if (shortest.empty()) return skip("shortest factorizations unavailable");
    if (shortest.size() > options.hurwitz_limit) {
      return skip(std::to_string(shortest.size()) + " factorizations exceed the limit " +
                  std::to_string(options.hurwitz_limit));
    }
    const auto first = orbit_type(shortest.front(), g);
    for (const auto& f : shortest) {
      if (orbit_type(f, g) != first) return fail("orbit type differs across shortest factorizations");
    }
    const auto closure = hurwitz_closure(shortest.front(), g);
    const std::set<Factorization> all(shortest.begin(), shortest.end());
    if (closure != all) {
      return fail("Hurwitz closure has " + std::to_string(closure.size()) + " of " + std::to_string(all.size()));
    }
    return pass("n_i constant; Hurwitz action transitive on " + std::to_string(all.size()));
  });

  run_check(report, "coxeter-number-per-orbit", [&] {
    if (!have_n) return skip("n_i unknown");
    const auto ok = verify_coxeter_number_per_orbit(g);
    for (std::size_t i = 0; i < ok.size(); ++i) {
      if (!ok[i]) {
        const auto& o = num.orbits[i];
        return fail("orbit " + std::to_string(i + 1) + ": (" + std::to_string(o.reflections) + " + " +
                    std::to_string(o.hyperplanes) + ") / " + std::to_string(o.multiplicity) +
                    " != h = " + std::to_string(num.coxeter_number));
      }
    }
    return pass("h = (N_i + N_i*) / n_i for every orbit");
  });

  run_check(report, "factoring-identity", [&] {
    if (!have_n) return skip("n_i unknown");
    const std::size_t d = std::max(degree, 2 * n + 2);
    const Rational h(static_cast<long>(num.coxeter_number));
    const auto one = TruncatedEGF::constant(Rational(1), 1, d);
    const auto power = (exp_linear(h, 0, 1, d) - one).pow(n);
    const auto shifted = exp_linear(Rational(static_cast<long>(num.hyperplanes)), 0, 1, d) *
                         univariate_egf(num.reflections, num.hyperplanes, n, g.order(), d) *
                         Rational(Integer(static_cast<unsigned long>(g.order())));
    if (!(shifted == power)) return fail("e^{N* x} #W univariate != (e^{hx} - 1)^n");
    TruncatedEGF by_orbit = TruncatedEGF::constant(Rational(1), 1, d);
    for (const auto& o : num.orbits) {
      const Rational a(static_cast<long>(o.reflections + o.hyperplanes), static_cast<long>(o.multiplicity));
      by_orbit = by_orbit * (exp_linear(a, 0, 1, d) - one).pow(o.multiplicity);
    }
    if (!(by_orbit == power)) return fail("prod_i (e^{(N_i+N_i*)/n_i x} - 1)^{n_i} != (e^{hx} - 1)^n");
    const auto recovered = recover_multiset(power);
    if (recovered != std::vector<Rational>(n, h)) return fail("recovery of (e^{hx} - 1)^n did not give {h,...,h}");
    return pass();
  });

  std::optional<FactorCountTable> counts;
  std::optional<TruncatedEGF> prod;
  run_check(report, "product-formula", [&] {
    if (!have_n) return skip("n_i unknown");
    counts = count_all_patterns(g, degree);
    prod = product_egf(num, degree);
    std::size_t compared = 0;
    for (const auto& l : multisets_up_to(num.p(), degree)) {
      const Integer dp = counts->at(l);
      const Integer egf = extract_count(*prod, l);
      if (dp != egf) return fail("pattern " + multiset_str(l) + ": dp = " + dp.get_str() + ", egf = " + egf.get_str());
      ++compared;
    }
    return pass(std::to_string(compared) + " patterns up to degree " + std::to_string(degree));
  });

  run_check(report, "specialization", [&] {
    if (!prod || !counts) return skip("product series unavailable");
    const auto uni = univariate_egf(num.reflections, num.hyperplanes, n, g.order(), degree);
    if (!(prod->specialize() == uni)) return fail("specialized series differs from the univariate formula");
    const auto f = count_by_length(g, degree);
    std::vector<Integer> summed(degree + 1, Integer(0));
    for (const auto& [l, value] : counts->entries()) {
      summed[std::accumulate(l.begin(), l.end(), std::size_t{0})] += multinomial(l) * value;
    }
    for (std::size_t k = 0; k <= degree; ++k) {
      const Integer e = extract_count(uni, Multiset{k});
      if (f[k] != e || summed[k] != e) {
        return fail("length " + std::to_string(k) + ": dp = " + f[k].get_str() + ", multinomial sum = " +
                    summed[k].get_str() + ", univariate = " + e.get_str());
      }
    }
    return pass();
  });

  const auto& def = g.definition();
  const GroupSpec spec = [&] {
    try {
      return parse_group_spec(def.name);
    } catch (const Error&) {
      return GroupSpec{};
    }
  }();
  const bool dihedral = spec.kind == GroupSpec::Kind::dihedral && spec.m >= 4 && spec.m % 2 == 0;
  const bool monomial = spec.kind == GroupSpec::Kind::monomial && spec.n >= 2;
  if ((dihedral || monomial) && counts) {
    run_check(report, "closed-form", [&] {
      for (const auto& [l, value] : counts->entries()) {
        const Integer closed = dihedral ? closed_form_dihedral(spec.m, l[0], l[1])
                                        : closed_form_monomial(spec.r, spec.n, l[0], l[1]);
        if (closed != value) {
          return fail("pattern " + multiset_str(l) + ": dp = " + value.get_str() + ", closed form = " + closed.get_str());
        }
      }
      return pass();
    });
  }

  if (def.real_form) {
    run_check(report, "root-action", [&] {
      const auto r = verify_root_action(g);
      std::ostringstream s;
      s << r.roots << " roots, " << r.orbit_count << " orbits of <c>";
      return r.ok ? pass(s.str()) : fail(s.str());
    });
  }

  if (options.chartable) {
    run_check(report, "frobenius", [&] {
      if (!counts) return skip("pattern counts unavailable");
      const BoundCharacterTable table(g, load_character_table(*options.chartable));
      for (const auto& [l, value] : counts->entries()) {
        const Integer fr = frobenius_count(g, FactorPattern::canonical(l), table);
        if (fr != value) {
          return fail("pattern " + multiset_str(l) + ": dp = " + value.get_str() + ", frobenius = " + fr.get_str());
        }
      }
      return pass();
    });
  }

  report.numerology = g.numerology();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

HurwitzSummary hurwitz_summary(const ReflectionGroup& g, double budget) {
  HurwitzSummary s;
  const auto all = shortest_factorizations(g, budget);
  s.factorizations = all.size();
  if (all.empty()) return s;
  s.multiplicities = orbit_type(all.front(), g);
  s.multiplicities_constant =
      std::all_of(all.begin(), all.end(), [&](const Factorization& f) { return orbit_type(f, g) == s.multiplicities; });
  const auto closure = hurwitz_closure(all.front(), g);
  s.closure_size = closure.size();
  s.transitive = closure == std::set<Factorization>(all.begin(), all.end());
  return s;
}

}  // namespace reflekt
