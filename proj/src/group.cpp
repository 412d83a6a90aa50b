#include "reflekt/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json_util.hpp"
#include "reflekt/errors.hpp"

namespace reflekt {

unsigned Diagram::label(std::size_t i, std::size_t j) const {
  for (const auto& e : edges) {
    if ((e.from == i && e.to == j) || (e.from == j && e.to == i)) return e.label;
  }
  return 2;
}

bool OrbitNumerology::multiplicities_known() const {
  return !orbits.empty() &&
         std::all_of(orbits.begin(), orbits.end(), [](const OrbitCounts& o) { return o.multiplicity > 0; });
}

// ---------------------------------------------------------------------------
// Families

GroupDefinition build_monomial(unsigned r, unsigned n) {
  if (r < 2) throw DomainError("G(r,1,n) requires r >= 2");
  if (n < 1) throw DomainError("G(r,1,n) requires n >= 1");
  GroupDefinition def;
  def.name = "G(" + std::to_string(r) + ",1," + std::to_string(n) + ")";
  def.rank = n;
  def.conductor = lcm_conductor(r * n, 2);
  def.real_form = r == 2;
  const unsigned m = def.conductor;

  CycMatrix t = CycMatrix::identity(n, m);
  t.set(0, 0, primitive_root(r, 1));
  def.generators.push_back(t);
  for (unsigned i = 0; i + 1 < n; ++i) {
    CycMatrix s(n, m);
    for (unsigned k = 0; k < n; ++k) {
      const unsigned image = k == i ? i + 1 : (k == i + 1 ? i : k);
      s.set(k, image, CycNumber(1L));
    }
    def.generators.push_back(s);
  }

  std::uint64_t order = 1;
  for (unsigned k = 1; k <= n; ++k) order *= static_cast<std::uint64_t>(r) * k;
  def.expected_order = order;

  Diagram d;
  d.nodes.assign(n, 2);
  d.nodes[0] = r;
  for (unsigned i = 0; i + 1 < n; ++i) d.edges.push_back({i, i + 1, i == 0 ? 4u : 3u});
  def.diagram = d;
  return def;
}

GroupDefinition build_dihedral(unsigned m) {
  if (m < 3) throw DomainError("G(m,m,2) requires m >= 3");
  GroupDefinition def;
  def.name = "G(" + std::to_string(m) + "," + std::to_string(m) + ",2)";
  def.rank = 2;
  def.conductor = lcm_conductor(m, 4);
  def.real_form = true;
  def.expected_order = 2ull * m;

  const unsigned M = def.conductor;
  const CycNumber zeta = primitive_root(m, 1);
  const CycNumber zeta_inv = primitive_root(m, -1);
  const CycNumber i_unit = primitive_root(4, 1);
  const CycNumber half(Rational(1, 2));
  const CycNumber cos2 = half * (zeta + zeta_inv);
  const CycNumber sin2 = -(half * i_unit) * (zeta - zeta_inv);

  CycMatrix s1(2, M);
  s1.set(0, 0, CycNumber(1L));
  s1.set(1, 1, CycNumber(-1L));
  CycMatrix s2(2, M);
  s2.set(0, 0, cos2);
  s2.set(0, 1, sin2);
  s2.set(1, 0, sin2);
  s2.set(1, 1, -cos2);
  def.generators = {s1, s2};

  def.diagram = Diagram{{2, 2}, {{0, 1, m}}};
  return def;
}

GroupDefinition build_family(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::monomial_G_r_1_n:
      return build_monomial(params.r, params.n);
    case Family::dihedral_G_m_m_2:
      return build_dihedral(params.m);
  }
  throw DomainError("unknown family");
}

// ---------------------------------------------------------------------------
// Definition files

std::optional<std::uint64_t> matrix_order(const CycMatrix& m, std::uint64_t cap) {
  CycMatrix power = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

namespace {

using nlohmann::json;

bool braid_relation_holds(const CycMatrix& a, const CycMatrix& b, unsigned length) {
  CycMatrix left = CycMatrix::identity(a.dim(), a.conductor());
  CycMatrix right = left;
  for (unsigned k = 0; k < length; ++k) {
    left = left * (k % 2 == 0 ? a : b);
    right = right * (k % 2 == 0 ? b : a);
  }
  return left == right;
}

template <typename T>
T require(const json& j, const char* key, const std::string& source) {
  if (!j.contains(key)) throw ParseError(source + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(source + ": field \"" + key + "\": " + e.what());
  }
}

void validate_definition(const GroupDefinition& def) {
  for (std::size_t k = 0; k < def.generators.size(); ++k) {
    if (fixed_space_dim(def.generators[k]) + 1 != def.rank) {
      throw NotReflectionError("generator " + std::to_string(k) + " is not a reflection");
    }
  }
  if (!def.diagram) return;
  const Diagram& d = *def.diagram;
  if (d.nodes.size() != def.generators.size()) {
    throw DataError(def.name + ": diagram has " + std::to_string(d.nodes.size()) + " nodes but " +
                    std::to_string(def.generators.size()) + " generators");
  }
  for (std::size_t k = 0; k < d.nodes.size(); ++k) {
    if (def.conductor % d.nodes[k] != 0) {
      throw ConductorMismatchError(def.name + ": node order " + std::to_string(d.nodes[k]) +
                                   " does not divide conductor " + std::to_string(def.conductor));
    }
    const auto order = matrix_order(def.generators[k], def.expected_order);
    if (!order || *order != d.nodes[k]) {
      throw DataError(def.name + ": generator " + std::to_string(k) + " does not have order " +
                      std::to_string(d.nodes[k]));
    }
  }
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < d.nodes.size(); ++j) {
      if (!braid_relation_holds(def.generators[i], def.generators[j], d.label(i, j))) {
        throw DataError(def.name + ": braid relation of length " + std::to_string(d.label(i, j)) +
                        " fails for generators " + std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
}

}  // namespace

GroupDefinition parse_definition(std::string_view json_text, const std::string& source) {
  json j = detail::parse_json(json_text, source);
  if (!j.is_object()) throw ParseError(source + ": top-level value must be an object");

  GroupDefinition def;
  def.name = require<std::string>(j, "name", source);
  def.rank = require<std::size_t>(j, "rank", source);
  def.conductor = require<unsigned>(j, "conductor", source);
  def.expected_order = require<std::uint64_t>(j, "expected_order", source);
  def.real_form = j.value("real_form", false);
  if (def.rank == 0) throw ParseError(source + ": rank must be positive");
  if (def.conductor == 0) throw ParseError(source + ": conductor must be positive");

  const auto gens = require<json>(j, "generators", source);
  if (!gens.is_array() || gens.empty()) throw ParseError(source + ": generators must be a nonempty array");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const json& rows = gens[g];
    if (!rows.is_array() || rows.size() != def.rank) {
      throw ParseError(source + ": generator " + std::to_string(g) + " must have " +
                       std::to_string(def.rank) + " rows");
    }
    CycMatrix m(def.rank, def.conductor);
    for (std::size_t r = 0; r < def.rank; ++r) {
      if (!rows[r].is_array() || rows[r].size() != def.rank) {
        throw ParseError(source + ": generator " + std::to_string(g) + " row " + std::to_string(r) +
                         " must have " + std::to_string(def.rank) + " entries");
      }
      for (std::size_t c = 0; c < def.rank; ++c) {
        const json& cell = rows[r][c];
        std::string literal;
        if (cell.is_string()) {
          literal = cell.get<std::string>();
        } else if (cell.is_number_integer()) {
          literal = std::to_string(cell.get<long>());
        } else {
          throw ParseError(source + ": generator " + std::to_string(g) + " entry (" + std::to_string(r) +
                           "," + std::to_string(c) + ") must be a string literal");
        }
        m.set(r, c, parse_cyc_literal(literal, def.conductor));
      }
    }
    def.generators.push_back(m);
  }

  if (j.contains("diagram") && !j["diagram"].is_null()) {
    const json& dj = j["diagram"];
    Diagram d;
    d.nodes = require<std::vector<unsigned>>(dj, "nodes", source);
    for (const auto& e : dj.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 3) throw ParseError(source + ": diagram edges are [i, j, m_ij]");
      DiagramEdge edge{e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<unsigned>()};
      if (edge.from >= d.nodes.size() || edge.to >= d.nodes.size() || edge.from == edge.to) {
        throw ParseError(source + ": diagram edge refers to an invalid node");
      }
      d.edges.push_back(edge);
    }
    def.diagram = d;
  }

  validate_definition(def);
  return def;
}

GroupDefinition load_definition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group definition " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_definition(buf.str(), path.string());
}

std::string definition_to_json(const GroupDefinition& def) {
  json j;
  j["name"] = def.name;
  j["rank"] = def.rank;
  j["conductor"] = def.conductor;
  j["expected_order"] = def.expected_order;
  j["real_form"] = def.real_form;
  if (def.diagram) {
    json edges = json::array();
    for (const auto& e : def.diagram->edges) edges.push_back({e.from, e.to, e.label});
    j["diagram"] = {{"nodes", def.diagram->nodes}, {"edges", edges}};
  }
  json gens = json::array();
  for (const auto& g : def.generators) {
    json rows = json::array();
    for (std::size_t r = 0; r < g.dim(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g.dim(); ++c) row.push_back(g(r, c).to_string());
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  j["generators"] = gens;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::size_t ReflectionGroup::element_of_word(const std::vector<std::size_t>& word) const {
  std::size_t e = 0;
  for (std::size_t s : word) {
    if (s >= generators_.size()) throw DomainError("word letter " + std::to_string(s) + " out of range");
    e = mul(e, generators_[s]);
  }
  return e;
}

std::optional<std::size_t> ReflectionGroup::index_of(const CycMatrix& m) const {
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    if (elements_[e] == m) return e;
  }
  return std::nullopt;
}

std::size_t ReflectionGroup::element_order(std::size_t e) const {
  std::size_t k = 1;
  for (std::size_t x = e; x != 0; x = mul(x, e)) ++k;
  return k;
}

std::optional<std::size_t> ReflectionGroup::reflection_index(std::size_t e) const {
  if (reflection_slot_[e] == 0) return std::nullopt;
  return reflection_slot_[e] - 1;
}

CycNumber ReflectionGroup::coxeter_eigenvalue() const {
  return primitive_root(numerology_.coxeter_number, 1).embed(def_.conductor);
}

void ReflectionGroup::set_multiplicities(const std::vector<std::size_t>& n) {
  if (n.size() != numerology_.orbits.size()) throw DomainError("multiplicity count does not match p");
  for (std::size_t i = 0; i < n.size(); ++i) numerology_.orbits[i].multiplicity = n[i];
}

ReflectionGroup enumerate_group(GroupDefinition def) {
  if (def.generators.empty()) throw DomainError(def.name + ": no generators");
  ReflectionGroup g;
  const std::size_t ngens = def.generators.size();
  const std::uint64_t expected = def.expected_order;

  // Breadth-first closure under right multiplication by generators.
  std::unordered_map<CycMatrix, std::size_t> index;
  std::vector<std::size_t> right;  // right[e * ngens + s] = e * s
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> last_letter{0};
  g.elements_.push_back(CycMatrix::identity(def.rank, def.conductor));
  g.words_.push_back({});
  index.emplace(g.elements_[0], 0);
  for (std::size_t e = 0; e < g.elements_.size(); ++e) {
    for (std::size_t s = 0; s < ngens; ++s) {
      CycMatrix prod = g.elements_[e] * def.generators[s];
      auto [it, inserted] = index.emplace(std::move(prod), g.elements_.size());
      if (inserted) {
        if (g.elements_.size() >= expected) {
          throw EnumerationError(def.name + ": closure exceeds expected order " + std::to_string(expected));
        }
        g.elements_.push_back(it->first);
        auto w = g.words_[e];
        w.push_back(s);
        g.words_.push_back(std::move(w));
        parent.push_back(e);
        last_letter.push_back(s);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = g.elements_.size();
  if (n != expected) {
    throw EnumerationError(def.name + ": closure has " + std::to_string(n) + " elements, expected " +
                           std::to_string(expected));
  }

  for (std::size_t s = 0; s < ngens; ++s) g.generators_.push_back(right[s]);

  // table[a][b] = table[a][parent(b)] * last_letter(b), filled in BFS order.
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    g.table_[a * n] = a;
    for (std::size_t b = 1; b < n; ++b) {
      g.table_[a * n + b] = right[g.table_[a * n + parent[b]] * ngens + last_letter[b]];
    }
  }
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table_[a * n + b] == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
  }

  // Conjugacy classes via conjugation by generators.
  {
    UnionFind uf(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t s : g.generators_) uf.unite(x, g.conjugate(s, x));
    }
    std::map<std::size_t, std::size_t> class_id;
    g.class_of_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      auto [it, inserted] = class_id.emplace(uf.find(x), g.classes_.size());
      if (inserted) g.classes_.emplace_back();
      g.class_of_[x] = it->second;
      g.classes_[it->second].push_back(x);
    }
  }

  // Reflections and their hyperplanes.
  const CycMatrix id = CycMatrix::identity(def.rank, def.conductor);
  const CycNumber rank_minus_one(static_cast<long>(def.rank - 1));
  std::map<CycVector, std::size_t> hyperplane_of_normal;
  g.reflection_slot_.assign(n, 0);
  for (std::size_t e = 1; e < n; ++e) {
    const CycMatrix diff = g.elements_[e] - id;
    const auto rows = row_space(diff);
    if (rows.size() != 1) continue;
    ReflectionInfo info;
    info.element = e;
    info.determinant = g.elements_[e].trace() - rank_minus_one;
    auto [it, inserted] = hyperplane_of_normal.emplace(rows[0], g.hyperplanes_.size());
    if (inserted) {
      Hyperplane h;
      h.normal = rows[0];
      h.root = column_space(diff).at(0);
      g.hyperplanes_.push_back(std::move(h));
    }
    info.hyperplane = it->second;
    g.hyperplanes_[it->second].reflections.push_back(e);
    g.reflections_.push_back(std::move(info));
    g.reflection_slot_[e] = g.reflections_.size();
  }
  if (g.reflections_.empty()) throw DataError(def.name + ": group contains no reflections");

  for (auto& h : g.hyperplanes_) {
    h.stabilizer_order = h.reflections.size() + 1;
    if (def.conductor % h.stabilizer_order != 0) {
      throw ConductorMismatchError(def.name + ": hyperplane stabilizer order " +
                                   std::to_string(h.stabilizer_order) + " does not divide conductor");
    }
    const CycNumber want = primitive_root(static_cast<unsigned>(h.stabilizer_order), 1);
    bool found = false;
    for (std::size_t e : h.reflections) {
      if (g.reflections_[g.reflection_slot_[e] - 1].determinant == want) {
        h.distinguished_reflection = e;
        found = true;
        break;
      }
    }
    if (!found) throw DataError(def.name + ": hyperplane without a distinguished reflection");
  }

  // Hyperplane orbits: conjugating a reflection by w moves its hyperplane by w.
  UnionFind uf(g.hyperplanes_.size());
  for (const auto& r : g.reflections_) {
    for (std::size_t s : g.generators_) {
      const std::size_t moved = g.conjugate(s, r.element);
      uf.unite(r.hyperplane, g.reflections_[g.reflection_slot_[moved] - 1].hyperplane);
    }
  }
  std::map<std::size_t, std::size_t> orbit_of_root;
  auto assign_orbit = [&](std::size_t hyperplane) {
    orbit_of_root.emplace(uf.find(hyperplane), orbit_of_root.size());
  };
  for (std::size_t s = 0; s < ngens; ++s) {
    if (auto slot = g.reflection_slot_[g.generators_[s]]) assign_orbit(g.reflections_[slot - 1].hyperplane);
  }
  for (std::size_t h = 0; h < g.hyperplanes_.size(); ++h) assign_orbit(h);
  const std::size_t p = orbit_of_root.size();

  OrbitNumerology& num = g.numerology_;
  num.rank = def.rank;
  num.order = n;
  num.orbits.assign(p, {});
  g.orbit_reflections_.assign(p, {});
  for (std::size_t h = 0; h < g.hyperplanes_.size(); ++h) {
    g.hyperplanes_[h].orbit = orbit_of_root.at(uf.find(h));
    ++num.orbits[g.hyperplanes_[h].orbit].hyperplanes;
  }
  for (auto& r : g.reflections_) {
    r.orbit = g.hyperplanes_[r.hyperplane].orbit;
    ++num.orbits[r.orbit].reflections;
    g.orbit_reflections_[r.orbit].push_back(r.element);
  }
  num.reflections = g.reflections_.size();
  num.hyperplanes = g.hyperplanes_.size();
  if ((num.reflections + num.hyperplanes) % def.rank != 0) {
    throw DataError(def.name + ": (N + N*) / n is not an integer");
  }
  num.coxeter_number = (num.reflections + num.hyperplanes) / def.rank;
  if (def.conductor % num.coxeter_number != 0) {
    throw ConductorMismatchError(def.name + ": conductor " + std::to_string(def.conductor) +
                                 " is not a multiple of h = " + std::to_string(num.coxeter_number));
  }

  g.def_ = std::move(def);
  g.coxeter_ = find_coxeter_element(g);
  return g;
}

// ---------------------------------------------------------------------------
// Coxeter elements

std::optional<CycVector> regular_eigenvector(const ReflectionGroup& group, std::size_t element,
                                             const CycNumber& lambda) {
  const auto basis = eigen_kernel(group.matrix(element), lambda);
  if (basis.empty()) return std::nullopt;
  auto avoids_all = [&](const CycVector& v) {
    for (const auto& h : group.hyperplanes()) {
      if (dot(h.normal, v).is_zero()) return false;
    }
    return true;
  };
  if (basis.size() == 1) {
    if (avoids_all(basis[0])) return basis[0];
    return std::nullopt;
  }
  // sum_j k^j v_j for k = 1, 2, ... up to 10 N
  const std::size_t bound = 10 * group.reflections().size();
  for (std::size_t k = 1; k <= bound; ++k) {
    CycVector v(basis[0].size(), CycNumber(Rational(0), group.definition().conductor));
    CycNumber weight(1L);
    for (const auto& b : basis) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += weight * b[i];
      weight *= CycNumber(static_cast<long>(k));
    }
    if (avoids_all(v)) return v;
  }
  return std::nullopt;
}

std::size_t find_coxeter_element(const ReflectionGroup& group) {
  const std::size_t h = group.numerology().coxeter_number;
  const CycNumber zeta_h = group.coxeter_eigenvalue();
  std::size_t product = 0;
  for (std::size_t s = 0; s < group.generator_count(); ++s) product = group.mul(product, group.generator(s));
  auto qualifies = [&](std::size_t e) {
    return group.element_order(e) == h && regular_eigenvector(group, e, zeta_h).has_value();
  };
  if (qualifies(product)) return product;
  for (std::size_t e = 1; e < group.order(); ++e) {
    if (qualifies(e)) return e;
  }
  throw DataError(group.name() + ": no regular element of order h = " + std::to_string(h));
}

std::vector<bool> verify_coxeter_number_per_orbit(const ReflectionGroup& group) {
  const OrbitNumerology& num = group.numerology();
  if (!num.multiplicities_known()) throw DomainError("orbit multiplicities n_i are not yet known");
  std::vector<bool> out;
  for (const auto& o : num.orbits) {
    out.push_back((o.reflections + o.hyperplanes) == num.coxeter_number * o.multiplicity);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Root action

RootActionReport verify_root_action(const ReflectionGroup& group) {
  const GroupDefinition& def = group.definition();
  if (!def.real_form) throw DomainError(group.name() + " is not flagged as a real reflection group");
  const OrbitNumerology& num = group.numerology();
  RootActionReport rep;

  // Phi = W-orbits of +-(root of one generator per hyperplane orbit). Taking
  // every generator would mix root lengths once roots are canonically scaled.
  std::set<std::size_t> orbits_seeded;
  std::map<CycVector, std::size_t> root_index;
  std::vector<CycVector> roots;
  std::vector<CycVector> frontier;
  auto add = [&](CycVector v) {
    if (root_index.emplace(v, roots.size()).second) {
      roots.push_back(v);
      frontier.push_back(std::move(v));
    }
  };
  for (std::size_t s = 0; s < group.generator_count(); ++s) {
    const auto slot = group.reflection_index(group.generator(s));
    if (!slot || !orbits_seeded.insert(group.reflections()[*slot].orbit).second) continue;
    const CycMatrix diff = group.matrix(group.generator(s)) - CycMatrix::identity(def.rank, def.conductor);
    CycVector u = column_space(diff).at(0);
    CycVector neg = u;
    for (auto& x : neg) x = -x;
    add(u);
    add(neg);
  }
  while (!frontier.empty()) {
    CycVector v = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& gen : def.generators) add(gen * v);
  }
  rep.roots = roots.size();

  // Each root lies over the hyperplane whose root line it spans.
  std::map<CycVector, std::size_t> hyperplane_of_line;
  for (std::size_t h = 0; h < group.hyperplanes().size(); ++h) hyperplane_of_line.emplace(group.hyperplanes()[h].root, h);
  std::vector<std::size_t> orbit_of_root(roots.size(), 0);
  bool lines_ok = true;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto it = hyperplane_of_line.find(canonicalize(roots[k]));
    if (it == hyperplane_of_line.end()) {
      lines_ok = false;
      continue;
    }
    orbit_of_root[k] = group.hyperplanes()[it->second].orbit;
  }

  const CycMatrix& c = group.matrix(group.coxeter_element());
  rep.coxeter_order = group.element_order(group.coxeter_element());
  std::vector<std::size_t> image(roots.size(), 0);
  rep.permutes = lines_ok;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto it = root_index.find(c * roots[k]);
    if (it == root_index.end()) {
      rep.permutes = false;
      break;
    }
    image[k] = it->second;
  }
  if (!rep.permutes) return rep;

  rep.free_action = true;
  rep.orbits_per_hyperplane_orbit.assign(num.p(), 0);
  std::vector<bool> seen(roots.size(), false);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (seen[k]) continue;
    std::size_t size = 0;
    for (std::size_t x = k; !seen[x]; x = image[x]) {
      seen[x] = true;
      ++size;
    }
    rep.orbit_sizes.push_back(size);
    ++rep.orbits_per_hyperplane_orbit[orbit_of_root[k]];
    // A nonidentity power fixing a root would make the cycle shorter than ord(c).
    if (size != rep.coxeter_order) rep.free_action = false;
  }
  rep.orbit_count = rep.orbit_sizes.size();

  const std::size_t h = num.coxeter_number;
  for (std::size_t i = 0; i < num.p(); ++i) {
    const auto& o = num.orbits[i];
    const bool formula = 2 * o.reflections == o.multiplicity * h;
    rep.multiplicity_matches.push_back(formula && rep.orbits_per_hyperplane_orbit[i] == o.multiplicity);
  }
  rep.ok = rep.roots == 2 * num.reflections && rep.permutes && rep.free_action && rep.coxeter_order == h &&
           rep.orbit_count == def.rank &&
           std::all_of(rep.orbit_sizes.begin(), rep.orbit_sizes.end(), [h](std::size_t s) { return s == h; }) &&
           std::all_of(rep.multiplicity_matches.begin(), rep.multiplicity_matches.end(), [](bool b) { return b; });
  return rep;
}

}  // namespace reflekt
