#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "reflekt/cyclotomic.hpp"
#include "reflekt/group.hpp"

namespace reflekt {

/// Orbit-count vector (l_1, ..., l_p).
using Multiset = std::vector<std::size_t>;

/// Ordered sequence of orbit labels (0-based), one per factor position.
struct FactorPattern {
  std::vector<std::size_t> labels;

  /// All orbit-0 labels first, then orbit-1, and so on.
  static FactorPattern canonical(const Multiset& counts);
  Multiset multiset(std::size_t p) const;
  std::size_t length() const { return labels.size(); }
};

class FactorCountTable {
 public:
  FactorCountTable() = default;
  FactorCountTable(std::string group, std::size_t p, std::size_t max_degree)
      : group_(std::move(group)), p_(p), max_degree_(max_degree) {}

  const std::string& group() const { return group_; }
  std::size_t p() const { return p_; }
  std::size_t max_degree() const { return max_degree_; }
  const std::map<Multiset, Integer>& entries() const { return counts_; }
  /// Zero for multisets not present.
  Integer at(const Multiset& l) const;
  void set(const Multiset& l, Integer value) { counts_[l] = std::move(value); }

 private:
  std::string group_;
  std::size_t p_ = 0;
  std::size_t max_degree_ = 0;
  std::map<Multiset, Integer> counts_;
};

/// All multisets over p orbits with total degree <= max_degree, in
/// lexicographic order.
std::vector<Multiset> multisets_up_to(std::size_t p, std::size_t max_degree);

/// Number of (t_1..t_l) with t_k in R_{labels[k]} and t_1...t_l = target.
Integer count_dp(const ReflectionGroup& group, const FactorPattern& pattern);
Integer count_dp(const ReflectionGroup& group, const FactorPattern& pattern, std::size_t target);
/// f_l for l = 0..max_length, drawing every factor from all of R.
std::vector<Integer> count_by_length(const ReflectionGroup& group, std::size_t max_length);
FactorCountTable count_all_patterns(const ReflectionGroup& group, std::size_t max_degree);
/// Compares count_dp over up to `trials` distinct orderings of `counts`.
bool pattern_order_invariance_check(const ReflectionGroup& group, const Multiset& counts, std::size_t trials);

/// f for I2(m), m even: (m/2)^(l1+l2) (1-(-1)^l1)(1-(-1)^l2) / (2m).
Integer closed_form_dihedral(unsigned m, std::size_t l1, std::size_t l2);
/// f for G(r,1,n) from the hook-character evaluation.
Integer closed_form_monomial(unsigned r, unsigned n, std::size_t l1, std::size_t l2);

struct ClassData {
  std::uint64_t size = 0;
  std::vector<std::size_t> representative;  // generator word
};

/// Character table: one row per irreducible character, one column per class.
struct CharacterTableData {
  std::string group;
  unsigned conductor = 1;
  std::vector<ClassData> classes;
  std::vector<std::vector<CycNumber>> characters;
};

CharacterTableData parse_character_table(std::string_view json_text, const std::string& source = "<string>");
CharacterTableData load_character_table(const std::filesystem::path& path);
std::string character_table_to_json(const CharacterTableData& table);
/// Four linear and m/2 - 1 two-dimensional characters of I2(m), m even,
/// with class representatives as words in the two generating reflections.
CharacterTableData dihedral_character_table(unsigned m);

/// Character table checked against a group: classes matched to conjugacy
/// classes, orthogonality verified. Throws DataError on any mismatch.
class BoundCharacterTable {
 public:
  BoundCharacterTable(const ReflectionGroup& group, CharacterTableData data);
  const CharacterTableData& data() const { return data_; }
  /// Column of the table for a group element.
  std::size_t column_of(std::size_t element) const { return column_of_class_[group_class_[element]]; }

 private:
  CharacterTableData data_;
  std::vector<std::size_t> group_class_;
  std::vector<std::size_t> column_of_class_;
};

/// (1/#W) sum_chi chi(c^-1) prod_i chi(R_i)^(l_i) / chi(1)^(l-1).
Integer frobenius_count(const ReflectionGroup& group, const FactorPattern& pattern, const BoundCharacterTable& table);

using Factorization = std::vector<std::size_t>;

/// All length-n reflection factorizations of the Coxeter element. Throws
/// BudgetExceededError when N^n exceeds `budget`.
std::vector<Factorization> shortest_factorizations(const ReflectionGroup& group, double budget = 1e8);
std::vector<std::size_t> orbit_type(const Factorization& f, const ReflectionGroup& group);
/// (.., t_k, t_k+1, ..) -> (.., t_k t_k+1 t_k^-1, t_k, ..)
Factorization hurwitz_move(const Factorization& f, std::size_t k, const ReflectionGroup& group);
/// Inverse of hurwitz_move at the same position.
Factorization hurwitz_move_inverse(const Factorization& f, std::size_t k, const ReflectionGroup& group);
std::set<Factorization> hurwitz_closure(const Factorization& f, const ReflectionGroup& group);
std::size_t product_of(const Factorization& f, const ReflectionGroup& group);

/// Reads n_i from the first shortest factorization and stores them on the group.
std::vector<std::size_t> attach_multiplicities(ReflectionGroup& group);

}  // namespace reflekt
