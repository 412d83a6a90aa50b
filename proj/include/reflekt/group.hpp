#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflekt/cyclotomic.hpp"
#include "reflekt/linalg.hpp"

namespace reflekt {

struct DiagramEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  unsigned label = 3;
};

/// Coxeter-Shephard diagram: node orders p_i and edge labels m_ij. Node pairs
/// without an edge commute.
struct Diagram {
  std::vector<unsigned> nodes;
  std::vector<DiagramEdge> edges;

  /// m_ij for i != j (2 when no edge is listed).
  unsigned label(std::size_t i, std::size_t j) const;
};

struct GroupDefinition {
  std::string name;
  std::size_t rank = 0;
  unsigned conductor = 1;
  std::vector<CycMatrix> generators;
  std::uint64_t expected_order = 0;
  std::optional<Diagram> diagram;
  bool real_form = false;
};

enum class Family { monomial_G_r_1_n, dihedral_G_m_m_2 };

struct FamilyParams {
  unsigned r = 0;  // G(r,1,n)
  unsigned n = 0;  // G(r,1,n)
  unsigned m = 0;  // G(m,m,2)
};

GroupDefinition build_family(Family family, const FamilyParams& params);
/// diag(zeta_r, 1, ..., 1) followed by the adjacent transpositions.
GroupDefinition build_monomial(unsigned r, unsigned n);
/// Two real reflections whose mirrors meet at angle pi/m.
GroupDefinition build_dihedral(unsigned m);

/// Parses the JSON group-definition schema and validates every generator.
GroupDefinition parse_definition(std::string_view json_text, const std::string& source = "<string>");
GroupDefinition load_definition(const std::filesystem::path& path);
std::string definition_to_json(const GroupDefinition& def);

/// Order of `m` by repeated multiplication, or nullopt above `cap`.
std::optional<std::uint64_t> matrix_order(const CycMatrix& m, std::uint64_t cap);

struct Hyperplane {
  CycVector normal;  // canonical linear form vanishing on H
  CycVector root;    // canonical spanning vector of the image of t - 1
  std::size_t orbit = 0;
  std::size_t stabilizer_order = 0;  // e_H = #W_H
  std::size_t distinguished_reflection = 0;
  std::vector<std::size_t> reflections;
};

struct ReflectionInfo {
  std::size_t element = 0;
  std::size_t hyperplane = 0;
  std::size_t orbit = 0;
  CycNumber determinant;
};

struct OrbitCounts {
  std::size_t reflections = 0;   // N_i = #R_i
  std::size_t hyperplanes = 0;   // N_i* = #R*_i
  std::size_t multiplicity = 0;  // n_i, 0 until known
};

struct OrbitNumerology {
  std::size_t rank = 0;
  std::uint64_t order = 0;
  std::size_t reflections = 0;  // N
  std::size_t hyperplanes = 0;  // N*
  std::size_t coxeter_number = 0;
  std::vector<OrbitCounts> orbits;

  std::size_t p() const { return orbits.size(); }
  bool multiplicities_known() const;
};

/// Orbit labels follow the generator list: orbit 0 holds the hyperplane of the
/// first generator, the next new orbit the next generator's, and so on.
inline constexpr std::string_view kOrbitLabelingConvention =
    "orbits numbered by first generator whose hyperplane lies in them";

/// Fully enumerated finite matrix group. Elements are indexed 0..order-1 with
/// 0 the identity; products are table lookups.
class ReflectionGroup {
 public:
  const GroupDefinition& definition() const { return def_; }
  const std::string& name() const { return def_.name; }
  std::size_t rank() const { return def_.rank; }
  std::size_t order() const { return elements_.size(); }

  const CycMatrix& matrix(std::size_t e) const { return elements_[e]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t conjugate(std::size_t w, std::size_t x) const { return mul(mul(w, x), inverse(w)); }
  std::size_t generator(std::size_t k) const { return generators_[k]; }
  std::size_t generator_count() const { return generators_.size(); }
  /// Generator word (indices into the generator list) multiplying to `e`.
  const std::vector<std::size_t>& word(std::size_t e) const { return words_[e]; }
  std::size_t element_of_word(const std::vector<std::size_t>& word) const;
  std::optional<std::size_t> index_of(const CycMatrix& m) const;
  std::size_t element_order(std::size_t e) const;

  const std::vector<ReflectionInfo>& reflections() const { return reflections_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  /// Index into reflections(), or nullopt for non-reflections.
  std::optional<std::size_t> reflection_index(std::size_t e) const;
  /// Element indices of R_i.
  const std::vector<std::size_t>& orbit_reflections(std::size_t orbit) const { return orbit_reflections_[orbit]; }

  /// Conjugacy class id of every element; classes ordered by first element.
  const std::vector<std::size_t>& class_of() const { return class_of_; }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }

  const OrbitNumerology& numerology() const { return numerology_; }
  std::size_t coxeter_element() const { return coxeter_; }
  /// The value zeta_h at the group conductor.
  CycNumber coxeter_eigenvalue() const;

  void set_coxeter_element(std::size_t c) { coxeter_ = c; }
  /// Records n_i once they are known from a shortest factorization.
  void set_multiplicities(const std::vector<std::size_t>& n);

 private:
  friend ReflectionGroup enumerate_group(GroupDefinition def);
  ReflectionGroup() = default;

  GroupDefinition def_;
  std::vector<CycMatrix> elements_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> reflection_slot_;  // element -> index+1 into reflections_, 0 otherwise
  std::vector<ReflectionInfo> reflections_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::vector<std::size_t>> orbit_reflections_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
  OrbitNumerology numerology_;
  std::size_t coxeter_ = 0;
};

/// Breadth-first closure, classification of reflections and hyperplanes,
/// orbit numerology (without n_i) and the Coxeter element.
ReflectionGroup enumerate_group(GroupDefinition def);

/// An eigenvector of `element` for `lambda` avoiding every reflecting
/// hyperplane, if one is found.
std::optional<CycVector> regular_eigenvector(const ReflectionGroup& group, std::size_t element,
                                             const CycNumber& lambda);

/// Generator product when it is regular of order h, else the lowest-index
/// regular element of order h. Throws DataError when neither exists.
std::size_t find_coxeter_element(const ReflectionGroup& group);

/// h == (N_i + N_i*) / n_i for each orbit. Requires known multiplicities.
std::vector<bool> verify_coxeter_number_per_orbit(const ReflectionGroup& group);

struct RootActionReport {
  std::size_t roots = 0;
  std::size_t coxeter_order = 0;
  bool permutes = false;
  bool free_action = false;
  std::size_t orbit_count = 0;
  std::vector<std::size_t> orbit_sizes;
  /// Number of <c>-orbits of roots lying over each hyperplane orbit.
  std::vector<std::size_t> orbits_per_hyperplane_orbit;
  /// n_i == 2 N_i / h per hyperplane orbit.
  std::vector<bool> multiplicity_matches;
  bool ok = false;
};

/// Action of the Coxeter element on the real root system. DomainError for
/// groups not flagged real.
RootActionReport verify_root_action(const ReflectionGroup& group);

}  // namespace reflekt
