// End-to-end acceptance run: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "reflekt/egf.hpp"
#include "reflekt/errors.hpp"
#include "reflekt/factor.hpp"
#include "reflekt/verify.hpp"

using namespace reflekt;

namespace {

const std::filesystem::path kData(REFLEKT_TEST_DATA_DIR);

const std::vector<std::string> kTableGroups = {"G(2,1,2)", "G(3,1,3)", "G(4,4,2)", "G(6,6,2)", "G5",  "G6",  "G9",
                                               "G10",      "G14",      "G17",      "G18",      "G21", "G26", "G28"};

std::map<std::string, ReflectionGroup>& cache() {
  static std::map<std::string, ReflectionGroup> groups;
  return groups;
}

ReflectionGroup& group(const std::string& spec_text) {
  const GroupSpec spec = parse_group_spec(spec_text);
  auto& groups = cache();
  auto it = groups.find(spec.canonical());
  if (it == groups.end()) it = groups.emplace(spec.canonical(), build_group(spec, kData / "groups")).first;
  return it->second;
}

std::string str(const Multiset& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

Integer multinomial(const Multiset& l) {
  Integer total = 1;
  unsigned long acc = 0;
  for (std::size_t part : l) {
    for (std::size_t k = 1; k <= part; ++k) {
      total *= ++acc;
      total /= static_cast<unsigned long>(k);
    }
  }
  return total;
}

// Returns an empty string on success, else the first witness of failure.
using Criterion = std::function<std::string(std::string& summary)>;

std::string table_reproduction(std::string& summary) {
  const auto lines = reproduce_table(kData / "groups");
  std::set<std::string> rows;
  for (const auto& l : lines) {
    if (!l.match) return l.instance + ": computed " + l.computed + ", expected " + l.expected;
    rows.insert(l.family);
  }
  if (lines.size() != kTableGroups.size()) return "unexpected number of table instances";
  summary = std::to_string(rows.size()) + " rows, " + std::to_string(lines.size()) + " groups";
  return {};
}

std::string product_formula(std::string& summary) {
  std::size_t patterns = 0;
  for (const auto& name : kTableGroups) {
    auto& g = group(name);
    const std::size_t d = g.rank() + 4;
    const auto table = count_all_patterns(g, d);
    const auto egf = product_egf(g.numerology(), d);
    for (const auto& [l, value] : table.entries()) {
      const Integer expected = extract_count(egf, l);
      if (expected != value) {
        return name + " " + str(l) + ": dp " + value.get_str() + " vs egf " + expected.get_str();
      }
      ++patterns;
    }
  }
  summary = std::to_string(patterns) + " patterns";
  return {};
}

std::string specialization(std::string& summary) {
  for (const auto& name : kTableGroups) {
    auto& g = group(name);
    const auto& n = g.numerology();
    const std::size_t d = n.rank + 4;
    const auto uni = univariate_egf(n.reflections, n.hyperplanes, n.rank, n.order, d);
    if (!(product_egf(n, d).specialize() == uni)) return name + ": specialized series differs";
    const auto f = count_by_length(g, d);
    std::vector<Integer> summed(d + 1, Integer(0));
    const auto counts = count_all_patterns(g, d);
    for (const auto& [l, value] : counts.entries()) {
      std::size_t total = 0;
      for (auto x : l) total += x;
      summed[total] += multinomial(l) * value;
    }
    for (std::size_t k = 0; k <= d; ++k) {
      if (f[k] != summed[k] || f[k] != extract_count(uni, {k})) {
        return name + " length " + std::to_string(k) + ": " + f[k].get_str() + " / " + summed[k].get_str();
      }
    }
  }
  summary = std::to_string(kTableGroups.size()) + " groups";
  return {};
}

std::string coxeter_per_orbit(std::string& summary) {
  std::size_t exhaustive = 0;
  for (const auto& name : kTableGroups) {
    auto& g = group(name);
    if (!g.numerology().multiplicities_known()) return name + ": n_i unknown";
    const auto ok = verify_coxeter_number_per_orbit(g);
    if (std::find(ok.begin(), ok.end(), false) != ok.end()) return name + ": h != (N_i + N_i*)/n_i";
    const auto all = shortest_factorizations(g);
    if (all.size() > 5000) continue;
    const auto first = orbit_type(all.front(), g);
    for (const auto& f : all) {
      if (orbit_type(f, g) != first) return name + ": n_i not constant";
    }
    if (hurwitz_closure(all.front(), g) != std::set<Factorization>(all.begin(), all.end())) {
      return name + ": Hurwitz closure is not the full set";
    }
    ++exhaustive;
  }
  summary = std::to_string(exhaustive) + " of " + std::to_string(kTableGroups.size()) + " groups exhaustive";
  return {};
}

std::string closed_forms(std::string& summary) {
  std::size_t compared = 0;
  for (unsigned m : {4u, 6u, 8u}) {
    auto& g = group("I2(" + std::to_string(m) + ")");
    const auto counts = count_all_patterns(g, 8);
    for (const auto& [l, value] : counts.entries()) {
      if (closed_form_dihedral(m, l[0], l[1]) != value) return "I2(" + std::to_string(m) + ") " + str(l);
      ++compared;
    }
  }
  for (auto [r, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}}) {
    const std::string name = "G(" + std::to_string(r) + ",1," + std::to_string(n) + ")";
    auto& g = group(name);
    const auto counts = count_all_patterns(g, n + 4);
    for (const auto& [l, value] : counts.entries()) {
      if (closed_form_monomial(r, n, l[0], l[1]) != value) return name + " " + str(l);
      ++compared;
    }
  }
  summary = std::to_string(compared) + " patterns";
  return {};
}

std::string rank_one(std::string& summary) {
  auto& a1 = group("G(2,1,1)");
  const auto& n = a1.numerology();
  const auto uni = univariate_egf(n.reflections, n.hyperplanes, n.rank, n.order, 3);
  const auto brute = count_by_length(a1, 3);
  const std::vector<Integer> expected = {0, 1, 0, 1};
  for (std::size_t l = 1; l <= 3; ++l) {
    if (extract_count(uni, {l}) != expected[l] || brute[l] != expected[l]) {
      return "f_" + std::to_string(l) + " = " + extract_count(uni, {l}).get_str();
    }
  }
  summary = "f_1 = 1, f_2 = 0, f_3 = 1";
  return {};
}

std::string root_action(std::string& summary) {
  for (const char* name : {"G(2,1,2)", "G(2,1,3)", "I2(4)", "I2(6)", "G28"}) {
    auto& g = group(name);
    const auto r = verify_root_action(g);
    if (!r.ok) return std::string(name) + ": " + std::to_string(r.orbit_count) + " orbits";
    if (r.roots != 2 * g.numerology().reflections) return std::string(name) + ": wrong root count";
  }
  summary = "5 groups";
  return {};
}

std::string recovery(std::string& summary) {
  std::mt19937 rng(1729);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> entry(1, 20);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> a(static_cast<std::size_t>(size(rng)));
    for (auto& x : a) x = entry(rng);
    std::sort(a.begin(), a.end());
    if (recover_multiset(exp_minus_one_product(a, 2 * a.size() + 2)) != a) return "trial " + std::to_string(trial);
  }
  for (const auto& name : kTableGroups) {
    auto& g = group(name);
    const std::size_t n = g.rank();
    const Rational h(static_cast<long>(g.numerology().coxeter_number));
    const std::vector<Rational> hs(n, h);
    const std::size_t d = 2 * n + 2;
    const auto power = (exp_linear(h, 0, 1, d) - TruncatedEGF::constant(Rational(1), 1, d)).pow(n);
    if (recover_multiset(power) != hs) return name + ": (e^{hx} - 1)^n";
  }
  summary = "100 random + " + std::to_string(kTableGroups.size()) + " groups";
  return {};
}

std::string frobenius(std::string& summary) {
  std::size_t compared = 0;
  for (unsigned m : {4u, 6u}) {
    auto& g = group("I2(" + std::to_string(m) + ")");
    const auto path = kData / "chartables" / ("I2_" + std::to_string(m) + ".json");
    const BoundCharacterTable table(g, load_character_table(path));
    const auto counts = count_all_patterns(g, 8);
    for (const auto& [l, value] : counts.entries()) {
      if (frobenius_count(g, FactorPattern::canonical(l), table) != value) return "I2(" + std::to_string(m) + ") " + str(l);
      ++compared;
    }
  }
  summary = std::to_string(compared) + " patterns";
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"table reproduction", table_reproduction},
      {"orbit-refined counts equal the product formula", product_formula},
      {"specialization to the univariate formula", specialization},
      {"Coxeter number from every hyperplane orbit", coxeter_per_orbit},
      {"family closed forms", closed_forms},
      {"rank-one normalization", rank_one},
      {"Coxeter element acts freely on roots", root_action},
      {"multiset recovery", recovery},
      {"character-table cross-check", frobenius},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    std::string summary;
    std::string witness;
    try {
      witness = criteria[k].second(summary);
    } catch (const std::exception& e) {
      witness = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (witness.empty() ? "PASS" : "FAIL") << "  criterion " << k + 1 << ": " << criteria[k].first << " ("
         << (witness.empty() ? summary : witness) << ", " << std::fixed;
    line.precision(2);
    line << secs << " s)";
    std::cout << line.str() << std::endl;
    failures += !witness.empty();
  }
  return failures == 0 ? 0 : 1;
}
