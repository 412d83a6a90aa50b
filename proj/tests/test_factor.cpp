#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "reflekt/errors.hpp"
#include "reflekt/factor.hpp"
#include "reflekt/group.hpp"

using namespace reflekt;

namespace {

const std::string kGroups = std::string(REFLEKT_TEST_DATA_DIR) + "/groups/";

ReflectionGroup with_multiplicities(GroupDefinition def) {
  ReflectionGroup g = enumerate_group(std::move(def));
  attach_multiplicities(g);
  return g;
}

FactorPattern pattern(std::vector<std::size_t> labels) { return FactorPattern{std::move(labels)}; }

}  // namespace

TEST_CASE("patterns") {
  const auto p = FactorPattern::canonical({2, 1});
  CHECK(p.labels == std::vector<std::size_t>{0, 0, 1});
  CHECK(p.multiset(2) == Multiset{2, 1});
  CHECK(p.length() == 3);
  CHECK_THROWS_AS(pattern({0, 2}).multiset(2), DomainError);
  CHECK(multisets_up_to(2, 2).size() == 6);
  CHECK(multisets_up_to(2, 2).front() == Multiset{0, 0});
}

TEST_CASE("count_dp on small groups") {
  const auto i24 = with_multiplicities(build_dihedral(4));
  CHECK(count_dp(i24, pattern({0, 1})) == 2);
  CHECK(count_dp(i24, pattern({0, 0})) == 0);
  CHECK(count_dp(i24, pattern({})) == 0);
  CHECK(count_dp(i24, pattern({}), 0) == 1);
  const auto b2 = with_multiplicities(build_monomial(2, 2));
  CHECK(count_dp(b2, pattern({0, 1})) == 2);
  CHECK_THROWS_AS(count_dp(b2, pattern({0, 5})), DomainError);
}

TEST_CASE("pattern tables") {
  const auto i24 = with_multiplicities(build_dihedral(4));
  const auto t = count_all_patterns(i24, 4);
  std::map<Multiset, Integer> nonzero;
  for (const auto& [l, v] : t.entries()) {
    if (v != 0) nonzero.emplace(l, v);
  }
  CHECK(nonzero == std::map<Multiset, Integer>{{{1, 1}, 2}, {{1, 3}, 8}, {{3, 1}, 8}});
  CHECK(t.at({0, 0}) == 0);
  CHECK(t.entries().size() == multisets_up_to(2, 4).size());

  const auto g312 = with_multiplicities(build_monomial(3, 2));
  CHECK(count_all_patterns(g312, 2).at({1, 1}) == 2);
}

TEST_CASE("counts do not depend on factor order") {
  const auto i24 = with_multiplicities(build_dihedral(4));
  for (const auto& labels : std::vector<std::vector<std::size_t>>{{1, 1, 1, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}}) {
    CHECK(count_dp(i24, pattern(labels)) == 8);
  }
  CHECK(pattern_order_invariance_check(i24, {1, 3}, 10));
  CHECK(pattern_order_invariance_check(i24, {4, 0}, 10));
  const auto b2 = with_multiplicities(build_monomial(2, 2));
  CHECK(count_dp(b2, pattern({0, 1})) == count_dp(b2, pattern({1, 0})));
  const auto g5 = with_multiplicities(load_definition(kGroups + "G5.json"));
  CHECK(pattern_order_invariance_check(g5, {2, 2}, 6));
  CHECK(pattern_order_invariance_check(g5, {3, 1}, 4));
}

TEST_CASE("vanishing below rank and parity obstruction") {
  for (const auto& def : {build_monomial(2, 3), build_dihedral(6), load_definition(kGroups + "G28.json")}) {
    auto g = with_multiplicities(def);
    const auto t = count_all_patterns(g, g.rank() + 3);
    for (const auto& [l, v] : t.entries()) {
      std::size_t total = 0;
      for (auto x : l) total += x;
      if (total < g.rank()) CHECK(v == 0);
      // -1 determinants: an odd number of sign flips cannot reach det(c) = (-1)^n
      if (total % 2 != g.rank() % 2) CHECK(v == 0);
      CHECK(v >= 0);
    }
  }
}

TEST_CASE("determinant obstruction for a complex group") {
  // det(c) must equal the product of the factors' determinants.
  const auto g = with_multiplicities(build_monomial(3, 2));
  const CycNumber det_c = g.matrix(g.coxeter_element()).determinant();
  const auto t = count_all_patterns(g, 6);
  for (const auto& [l, v] : t.entries()) {
    if (v == 0) continue;
    // Orbit 0 reflections have determinants zeta_3^{+-1}, orbit 1 determinant -1.
    bool reachable = false;
    for (std::size_t plus = 0; plus <= l[0]; ++plus) {
      const long k = static_cast<long>(plus) - static_cast<long>(l[0] - plus);
      CycNumber d = primitive_root(3, k) * CycNumber(l[1] % 2 == 0 ? 1L : -1L);
      if (d == det_c) reachable = true;
    }
    CHECK(reachable);
  }
}

TEST_CASE("univariate counts agree with the pattern table") {
  const auto g = with_multiplicities(load_definition(kGroups + "G6.json"));
  const auto f = count_by_length(g, 6);
  const auto t = count_all_patterns(g, 6);
  for (std::size_t total = 0; total <= 6; ++total) {
    Integer sum = 0;
    for (std::size_t a = 0; a <= total; ++a) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), total, a);
      sum += binom * t.at({a, total - a});
    }
    CHECK(sum == f[total]);
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_dihedral(4, 1, 1) == 2);
  CHECK(closed_form_dihedral(4, 2, 2) == 0);
  CHECK(closed_form_dihedral(6, 1, 1) == 3);
  CHECK_THROWS_AS(closed_form_dihedral(5, 1, 1), DomainError);
  CHECK_THROWS_AS(closed_form_dihedral(2, 1, 1), DomainError);
  CHECK(closed_form_monomial(2, 2, 1, 1) == 2);
  CHECK(closed_form_monomial(3, 2, 1, 1) == 2);
  CHECK(closed_form_monomial(2, 2, 2, 0) == 0);
  CHECK_THROWS_AS(closed_form_monomial(1, 2, 1, 1), DomainError);

  const auto i26 = with_multiplicities(build_dihedral(6));
  CHECK(count_dp(i26, pattern({0, 1})) == 3);
  const auto g33 = with_multiplicities(build_monomial(3, 3));
  const auto t = count_all_patterns(g33, 6);
  for (const auto& [l, v] : t.entries()) CHECK(closed_form_monomial(3, 3, l[0], l[1]) == v);
}

TEST_CASE("Frobenius counts from a character table") {
  const auto i24 = with_multiplicities(build_dihedral(4));
  const BoundCharacterTable table(i24, dihedral_character_table(4));
  CHECK(frobenius_count(i24, pattern({0, 1}), table) == 2);
  CHECK(frobenius_count(i24, pattern({}), table) == 0);
  const auto counts = count_all_patterns(i24, 6);
  for (const auto& [l, v] : counts.entries()) {
    CHECK(frobenius_count(i24, FactorPattern::canonical(l), table) == v);
  }
  // G(2,1,2) has the same presentation, so the dihedral words describe its classes too.
  const auto b2 = with_multiplicities(build_monomial(2, 2));
  const BoundCharacterTable b2_table(b2, dihedral_character_table(4));
  CHECK(frobenius_count(b2, pattern({0, 1}), b2_table) == 2);
}

TEST_CASE("character tables are validated") {
  const auto i24 = with_multiplicities(build_dihedral(4));
  auto broken = dihedral_character_table(4);
  broken.characters[4][1] = CycNumber(1L);
  CHECK_THROWS_AS(BoundCharacterTable(i24, broken), DataError);
  auto short_table = dihedral_character_table(4);
  short_table.classes.pop_back();
  CHECK_THROWS_AS(BoundCharacterTable(i24, short_table), DataError);
  auto bad_size = dihedral_character_table(4);
  bad_size.classes[0].size = 2;
  CHECK_THROWS_AS(BoundCharacterTable(i24, bad_size), DataError);

  const auto round = parse_character_table(character_table_to_json(dihedral_character_table(6)));
  CHECK(round.classes.size() == 6);
  CHECK(round.characters == dihedral_character_table(6).characters);
  CHECK_THROWS_AS(parse_character_table(R"({"group": "x", "classes": [], "characters": []})"), ParseError);
  CHECK_THROWS_AS(dihedral_character_table(5), DomainError);
}

TEST_CASE("shortest factorizations") {
  auto i24 = with_multiplicities(build_dihedral(4));
  const auto all = shortest_factorizations(i24);
  CHECK(all.size() == 4);
  for (const auto& f : all) {
    CHECK(product_of(f, i24) == i24.coxeter_element());
    CHECK(orbit_type(f, i24) == std::vector<std::size_t>{1, 1});
  }
  const std::size_t s1 = i24.generator(0);
  const Factorization f{s1, i24.mul(i24.inverse(s1), i24.coxeter_element())};
  CHECK(orbit_type(f, i24) == std::vector<std::size_t>{1, 1});

  auto a1 = with_multiplicities(build_monomial(2, 1));
  CHECK(shortest_factorizations(a1).size() == 1);

  auto b2 = with_multiplicities(build_monomial(2, 2));
  CHECK(orbit_type({b2.generator(0), b2.generator(1)}, b2) == std::vector<std::size_t>{1, 1});

  auto g28 = with_multiplicities(load_definition(kGroups + "G28.json"));
  const auto g28_all = shortest_factorizations(g28);
  CHECK(g28_all.size() == 432);
  for (const auto& x : g28_all) CHECK(orbit_type(x, g28) == std::vector<std::size_t>{2, 2});

  CHECK_THROWS_AS(shortest_factorizations(g28, 1000), BudgetExceededError);
}

TEST_CASE("shortest factorization count matches the degree-n pattern counts") {
  for (const auto& def : {build_monomial(3, 2), load_definition(kGroups + "G26.json")}) {
    auto g = with_multiplicities(def);
    const auto t = count_all_patterns(g, g.rank());
    Integer total = 0;
    for (const auto& [l, v] : t.entries()) {
      if (l[0] + l[1] != g.rank()) continue;
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), g.rank(), l[0]);
      total += binom * v;
    }
    CHECK(total == static_cast<unsigned long>(shortest_factorizations(g).size()));
  }
}

TEST_CASE("Hurwitz moves") {
  auto g5 = with_multiplicities(load_definition(kGroups + "G5.json"));
  const auto all = shortest_factorizations(g5);
  const std::set<Factorization> expected(all.begin(), all.end());
  CHECK(hurwitz_closure(all.front(), g5) == expected);

  auto i24 = with_multiplicities(build_dihedral(4));
  CHECK(hurwitz_closure(shortest_factorizations(i24).front(), i24).size() == 4);

  auto g26 = with_multiplicities(load_definition(kGroups + "G26.json"));
  for (const auto& f : shortest_factorizations(g26)) {
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
      const auto moved = hurwitz_move(f, k, g26);
      CHECK(product_of(moved, g26) == product_of(f, g26));
      CHECK(orbit_type(moved, g26) == orbit_type(f, g26));
      CHECK(moved[k + 1] == f[k]);
      CHECK(hurwitz_move_inverse(moved, k, g26) == f);
      CHECK(hurwitz_move(hurwitz_move_inverse(f, k, g26), k, g26) == f);
    }
  }
  CHECK_THROWS_AS(hurwitz_move(all.front(), 1, g5), DomainError);
}

TEST_CASE("counts do not depend on the chosen Coxeter element") {
  for (const auto& def : {build_monomial(3, 2), load_definition(kGroups + "G5.json")}) {
    auto g = with_multiplicities(def);
    const std::size_t c = g.coxeter_element();
    const std::size_t h = g.numerology().coxeter_number;
    std::optional<std::size_t> other;
    for (std::size_t e = 1; e < g.order() && !other; ++e) {
      if (e != c && g.element_order(e) == h && regular_eigenvector(g, e, g.coxeter_eigenvalue())) other = e;
    }
    REQUIRE(other);
    const auto before = count_all_patterns(g, g.rank() + 3);
    g.set_coxeter_element(*other);
    const auto after = count_all_patterns(g, g.rank() + 3);
    CHECK(before.entries() == after.entries());
  }
}
