#include "reflekt/factor.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

#include "json_util.hpp"
#include "reflekt/errors.hpp"

namespace reflekt {

FactorPattern FactorPattern::canonical(const Multiset& counts) {
  FactorPattern p;
  for (std::size_t i = 0; i < counts.size(); ++i) p.labels.insert(p.labels.end(), counts[i], i);
  return p;
}

Multiset FactorPattern::multiset(std::size_t p) const {
  Multiset m(p, 0);
  for (std::size_t l : labels) {
    if (l >= p) throw DomainError("pattern label " + std::to_string(l) + " exceeds orbit count");
    ++m[l];
  }
  return m;
}

Integer FactorCountTable::at(const Multiset& l) const {
  auto it = counts_.find(l);
  return it == counts_.end() ? Integer(0) : it->second;
}

std::vector<Multiset> multisets_up_to(std::size_t p, std::size_t max_degree) {
  std::vector<Multiset> out;
  Multiset cur(p, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

namespace {

using CountVector = std::vector<Integer>;

// v'[g t] += v[g] for t in `factors`.
CountVector convolve(const ReflectionGroup& group, const CountVector& v, const std::vector<std::size_t>& factors) {
  CountVector out(v.size(), Integer(0));
  for (std::size_t g = 0; g < v.size(); ++g) {
    if (v[g] == 0) continue;
    for (std::size_t t : factors) out[group.mul(g, t)] += v[g];
  }
  return out;
}

CountVector identity_indicator(const ReflectionGroup& group) {
  CountVector v(group.order(), Integer(0));
  v[0] = 1;
  return v;
}

std::vector<std::size_t> all_reflections(const ReflectionGroup& group) {
  std::vector<std::size_t> out;
  for (const auto& r : group.reflections()) out.push_back(r.element);
  return out;
}

}  // namespace

Integer count_dp(const ReflectionGroup& group, const FactorPattern& pattern, std::size_t target) {
  const std::size_t p = group.numerology().p();
  CountVector v = identity_indicator(group);
  for (std::size_t label : pattern.labels) {
    if (label >= p) throw DomainError("pattern label " + std::to_string(label) + " exceeds orbit count");
    v = convolve(group, v, group.orbit_reflections(label));
  }
  return v[target];
}

Integer count_dp(const ReflectionGroup& group, const FactorPattern& pattern) {
  return count_dp(group, pattern, group.coxeter_element());
}

std::vector<Integer> count_by_length(const ReflectionGroup& group, std::size_t max_length) {
  const auto refl = all_reflections(group);
  const std::size_t c = group.coxeter_element();
  std::vector<Integer> out;
  CountVector v = identity_indicator(group);
  for (std::size_t l = 0; l <= max_length; ++l) {
    out.push_back(v[c]);
    if (l < max_length) v = convolve(group, v, refl);
  }
  return out;
}

FactorCountTable count_all_patterns(const ReflectionGroup& group, std::size_t max_degree) {
  const std::size_t p = group.numerology().p();
  const std::size_t c = group.coxeter_element();
  FactorCountTable table(group.name(), p, max_degree);
  Multiset cur(p, 0);
  // Canonical patterns share prefixes: orbit 0 factors first, then orbit 1, ...
  std::function<void(std::size_t, CountVector, std::size_t)> rec = [&](std::size_t i, CountVector v,
                                                                        std::size_t left) {
    const auto& factors = group.orbit_reflections(i);
    for (std::size_t k = 0; k <= left; ++k) {
      cur[i] = k;
      if (i + 1 == p) {
        table.set(cur, v[c]);
      } else {
        rec(i + 1, v, left - k);
      }
      if (k < left) v = convolve(group, v, factors);
    }
    cur[i] = 0;
  };
  rec(0, identity_indicator(group), max_degree);
  return table;
}

bool pattern_order_invariance_check(const ReflectionGroup& group, const Multiset& counts, std::size_t trials) {
  FactorPattern pattern = FactorPattern::canonical(counts);
  const Integer reference = count_dp(group, pattern);
  std::size_t done = 1;
  while (done < trials && std::next_permutation(pattern.labels.begin(), pattern.labels.end())) {
    if (count_dp(group, pattern) != reference) return false;
    ++done;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

Integer ipow(const Integer& base, std::size_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational qpow(const Rational& base, std::size_t e) {
  Rational r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= base;
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer exact_integer(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) throw DataError(what + " is not an integer: " + q.get_str());
  return q.get_num();
}

}  // namespace

Integer closed_form_dihedral(unsigned m, std::size_t l1, std::size_t l2) {
  if (m < 4 || m % 2 != 0) {
    throw DomainError("closed_form_dihedral requires even m >= 4 (odd m has a single orbit)");
  }
  const Integer two_if_odd1 = l1 % 2 == 1 ? 2 : 0;
  const Integer two_if_odd2 = l2 % 2 == 1 ? 2 : 0;
  const Rational value(ipow(Integer(m / 2), l1 + l2) * two_if_odd1 * two_if_odd2, Integer(2 * m));
  Rational q = value;
  q.canonicalize();
  return exact_integer(q, "dihedral closed form");
}

Integer closed_form_monomial(unsigned r, unsigned n, std::size_t l1, std::size_t l2) {
  if (r < 2 || n < 1) throw DomainError("closed_form_monomial requires r >= 2 and n >= 1");
  const Integer sign1 = l1 % 2 == 0 ? 1 : -1;
  const Integer first = ipow(Integer(n), l1) * (ipow(Integer(r - 1), l1) - sign1);
  Rational second = 0;
  for (unsigned k = 0; k < n; ++k) {
    const Rational base(Integer(static_cast<long>(n) * static_cast<long>(r) *
                                (static_cast<long>(n) - 1 - 2 * static_cast<long>(k))),
                        Integer(2));
    Rational term = Rational(binomial(n - 1, k)) * qpow(base, l2);
    if (k % 2 == 1) term = -term;
    second += term;
  }
  Rational total = Rational(first) * second / Rational(ipow(Integer(r), n) * factorial(n));
  total.canonicalize();
  return exact_integer(total, "monomial closed form");
}

// ---------------------------------------------------------------------------
// Character tables

namespace {

using nlohmann::json;

}  // namespace

CharacterTableData parse_character_table(std::string_view json_text, const std::string& source) {
  json j = detail::parse_json(json_text, source);
  CharacterTableData t;
  try {
    t.group = j.at("group").get<std::string>();
    t.conductor = j.value("conductor", 0u);
    if (t.conductor == 0) throw ParseError(source + ": missing or zero \"conductor\"");
    for (const auto& c : j.at("classes")) {
      t.classes.push_back({c.at("size").get<std::uint64_t>(), c.at("representative").get<std::vector<std::size_t>>()});
    }
    for (const auto& row : j.at("characters")) {
      std::vector<CycNumber> values;
      for (const auto& cell : row) {
        values.push_back(parse_cyc_literal(cell.is_string() ? cell.get<std::string>() : cell.dump(), t.conductor));
      }
      t.characters.push_back(std::move(values));
    }
  } catch (const json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
  return t;
}

CharacterTableData load_character_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open character table " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_character_table(buf.str(), path.string());
}

std::string character_table_to_json(const CharacterTableData& t) {
  json j;
  j["group"] = t.group;
  j["conductor"] = t.conductor;
  json classes = json::array();
  for (const auto& c : t.classes) classes.push_back({{"size", c.size}, {"representative", c.representative}});
  j["classes"] = classes;
  json chars = json::array();
  for (const auto& row : t.characters) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.embed(t.conductor).to_string());
    chars.push_back(r);
  }
  j["characters"] = chars;
  return j.dump(2);
}

CharacterTableData dihedral_character_table(unsigned m) {
  if (m < 4 || m % 2 != 0) throw DomainError("dihedral_character_table requires even m >= 4");
  CharacterTableData t;
  t.group = "G(" + std::to_string(m) + "," + std::to_string(m) + ",2)";
  t.conductor = m;
  const unsigned half = m / 2;
  // Columns: rotations r^k for k = 0..m/2 (r = s1 s2), then the classes of s1 and s2.
  std::vector<unsigned> rotation_power;
  for (unsigned k = 0; k <= half; ++k) {
    std::vector<std::size_t> word;
    for (unsigned i = 0; i < k; ++i) {
      word.push_back(0);
      word.push_back(1);
    }
    t.classes.push_back({k == 0 || k == half ? 1u : 2u, word});
    rotation_power.push_back(k);
  }
  t.classes.push_back({half, {0}});
  t.classes.push_back({half, {1}});

  // Linear characters by their values on (s1, s2).
  const int signs[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  for (const auto& s : signs) {
    std::vector<CycNumber> row;
    for (unsigned k : rotation_power) row.emplace_back(static_cast<long>((k % 2 == 0) ? 1 : s[0] * s[1]));
    row.emplace_back(static_cast<long>(s[0]));
    row.emplace_back(static_cast<long>(s[1]));
    t.characters.push_back(std::move(row));
  }
  for (unsigned j = 1; j < half; ++j) {
    std::vector<CycNumber> row;
    for (unsigned k : rotation_power) {
      row.push_back(primitive_root(m, static_cast<long>(j * k)) + primitive_root(m, -static_cast<long>(j * k)));
    }
    row.emplace_back(0L);
    row.emplace_back(0L);
    t.characters.push_back(std::move(row));
  }
  return t;
}

BoundCharacterTable::BoundCharacterTable(const ReflectionGroup& group, CharacterTableData data)
    : data_(std::move(data)), group_class_(group.class_of()) {
  const std::size_t k = data_.classes.size();
  if (k != group.classes().size()) {
    throw DataError("character table lists " + std::to_string(k) + " classes, group has " +
                    std::to_string(group.classes().size()));
  }
  column_of_class_.assign(k, k);
  for (std::size_t col = 0; col < k; ++col) {
    const std::size_t e = group.element_of_word(data_.classes[col].representative);
    const std::size_t cls = group_class_[e];
    if (column_of_class_[cls] != k) throw DataError("two table columns represent the same class");
    if (group.classes()[cls].size() != data_.classes[col].size) {
      throw DataError("class " + std::to_string(col) + " has size " + std::to_string(group.classes()[cls].size()) +
                      ", table says " + std::to_string(data_.classes[col].size));
    }
    column_of_class_[cls] = col;
  }
  if (data_.characters.size() != k) throw DataError("character table must be square");
  const std::size_t id_col = column_of(0);
  for (const auto& row : data_.characters) {
    if (row.size() != k) throw DataError("character row has wrong length");
    const CycNumber& degree = row[id_col];
    if (!degree.is_rational() || degree.to_rational() <= 0 || degree.to_rational().get_den() != 1) {
      throw DataError("character degree " + degree.to_string() + " is not a positive integer");
    }
  }
  const CycNumber order(static_cast<long>(group.order()));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      CycNumber s;
      for (std::size_t col = 0; col < k; ++col) {
        s += CycNumber(static_cast<long>(data_.classes[col].size)) * data_.characters[a][col] *
             data_.characters[b][col].conj();
      }
      if (s != (a == b ? order : CycNumber(0L))) {
        throw DataError("character orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
}

Integer frobenius_count(const ReflectionGroup& group, const FactorPattern& pattern, const BoundCharacterTable& table) {
  const auto& data = table.data();
  const std::size_t p = group.numerology().p();
  const Multiset counts = pattern.multiset(p);
  const std::size_t length = pattern.length();
  const std::size_t c_inv_col = table.column_of(group.inverse(group.coxeter_element()));
  const std::size_t id_col = table.column_of(0);

  CycNumber total;
  for (const auto& chi : data.characters) {
    CycNumber term = chi[c_inv_col];
    if (term.is_zero()) continue;
    for (std::size_t i = 0; i < p; ++i) {
      CycNumber on_orbit;
      for (std::size_t t : group.orbit_reflections(i)) on_orbit += chi[table.column_of(t)];
      term *= on_orbit.pow(static_cast<long>(counts[i]));
    }
    term *= chi[id_col].pow(1 - static_cast<long>(length));
    total += term;
  }
  total /= CycNumber(static_cast<long>(group.order()));
  if (!total.is_rational()) throw DataError("Frobenius sum is not rational: " + total.to_string());
  const Rational q = total.to_rational();
  if (q.get_den() != 1 || q < 0) throw DataError("Frobenius sum is not a nonnegative integer: " + q.get_str());
  return q.get_num();
}

// ---------------------------------------------------------------------------
// Shortest factorizations and Hurwitz moves

namespace {

// Depth-first search over t_1..t_{n-1}; t_n is forced by the running product.
template <typename Visit>
void search_shortest(const ReflectionGroup& group, Visit&& visit) {
  const std::size_t n = group.rank();
  const std::size_t c = group.coxeter_element();
  const auto refl = all_reflections(group);
  Factorization current(n, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t prefix) {
    if (depth + 1 == n) {
      const std::size_t last = group.mul(group.inverse(prefix), c);
      if (!group.reflection_index(last)) return true;
      current[depth] = last;
      return visit(current);
    }
    for (std::size_t t : refl) {
      current[depth] = t;
      if (!rec(depth + 1, group.mul(prefix, t))) return false;
    }
    return true;
  };
  rec(0, 0);
}

}  // namespace

std::vector<Factorization> shortest_factorizations(const ReflectionGroup& group, double budget) {
  const double cost = std::pow(static_cast<double>(group.reflections().size()), static_cast<double>(group.rank()));
  if (cost > budget) {
    throw BudgetExceededError(group.name() + ": exhaustive search needs N^n = " + std::to_string(cost) +
                              " steps, above budget; use sampling mode");
  }
  std::vector<Factorization> out;
  search_shortest(group, [&](const Factorization& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<std::size_t> orbit_type(const Factorization& f, const ReflectionGroup& group) {
  std::vector<std::size_t> type(group.numerology().p(), 0);
  for (std::size_t t : f) {
    const auto slot = group.reflection_index(t);
    if (!slot) throw DomainError("factor " + std::to_string(t) + " is not a reflection");
    ++type[group.reflections()[*slot].orbit];
  }
  return type;
}

Factorization hurwitz_move(const Factorization& f, std::size_t k, const ReflectionGroup& group) {
  if (k + 1 >= f.size()) throw DomainError("Hurwitz move position out of range");
  Factorization g = f;
  g[k] = group.conjugate(f[k], f[k + 1]);
  g[k + 1] = f[k];
  return g;
}

Factorization hurwitz_move_inverse(const Factorization& f, std::size_t k, const ReflectionGroup& group) {
  if (k + 1 >= f.size()) throw DomainError("Hurwitz move position out of range");
  Factorization g = f;
  g[k] = f[k + 1];
  g[k + 1] = group.conjugate(group.inverse(f[k + 1]), f[k]);
  return g;
}

std::set<Factorization> hurwitz_closure(const Factorization& f, const ReflectionGroup& group) {
  std::set<Factorization> seen{f};
  std::deque<Factorization> queue{f};
  while (!queue.empty()) {
    const Factorization cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      for (auto next : {hurwitz_move(cur, k, group), hurwitz_move_inverse(cur, k, group)}) {
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

std::size_t product_of(const Factorization& f, const ReflectionGroup& group) {
  std::size_t e = 0;
  for (std::size_t t : f) e = group.mul(e, t);
  return e;
}

std::vector<std::size_t> attach_multiplicities(ReflectionGroup& group) {
  std::optional<Factorization> first;
  search_shortest(group, [&](const Factorization& f) {
    first = f;
    return false;
  });
  if (!first) throw DataError(group.name() + ": Coxeter element has no factorization into n reflections");
  auto type = orbit_type(*first, group);
  group.set_multiplicities(type);
  return type;
}

}  // namespace reflekt
