#include <random>

#include "doctest.h"
#include "reflekt/errors.hpp"
#include "reflekt/group.hpp"
#include "reflekt/linalg.hpp"

using namespace reflekt;

namespace {

CycMatrix permutation3() {
  CycMatrix p(3, 1);
  p.set(0, 1, 1L);
  p.set(1, 2, 1L);
  p.set(2, 0, 1L);
  return p;
}

void check_kernel(const CycMatrix& a, const CycNumber& lambda) {
  for (const auto& v : eigen_kernel(a, lambda)) {
    const CycVector av = a * v;
    REQUIRE(av.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(av[i] == lambda * v[i]);
  }
}

}  // namespace

TEST_CASE("eigen kernels") {
  CHECK(eigen_kernel(CycMatrix::identity(2, 1), CycNumber(1L)).size() == 2);

  const CycMatrix d = CycMatrix::diagonal({primitive_root(4, 1), CycNumber(1L)});
  const auto k = eigen_kernel(d, primitive_root(4, 1));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == CycVector{CycNumber(1L), CycNumber()});
  CHECK(eigen_kernel(d, CycNumber(2L)).empty());

  const ReflectionGroup i24 = enumerate_group(build_dihedral(4));
  const CycMatrix rot = i24.matrix(i24.generator(0)) * i24.matrix(i24.generator(1));
  CHECK(eigen_kernel(rot, primitive_root(4, 1)).size() == 1);
  CHECK(eigen_kernel(rot, CycNumber(1L)).empty());
  check_kernel(rot, primitive_root(4, 1));
  check_kernel(rot, primitive_root(4, -1));
}

TEST_CASE("fixed space dimension") {
  CHECK(fixed_space_dim(CycMatrix::identity(3, 1)) == 3);
  CHECK(fixed_space_dim(CycMatrix::diagonal({CycNumber(-1L), CycNumber(1L)})) == 1);
  CHECK(fixed_space_dim(permutation3()) == 1);
}

TEST_CASE("rank-nullity and kernel property on group elements") {
  const ReflectionGroup g = enumerate_group(build_monomial(3, 2));
  const unsigned m = g.definition().conductor;
  for (std::size_t e = 0; e < g.order(); ++e) {
    const CycMatrix& a = g.matrix(e);
    CHECK(fixed_space_dim(a) + rank(a - CycMatrix::identity(2, m)) == 2);
    for (long k = 0; k < 6; ++k) check_kernel(a, primitive_root(6, k));
  }
}

TEST_CASE("determinant and trace") {
  CHECK(permutation3().determinant() == CycNumber(1L));
  CHECK(permutation3().trace().is_zero());
  CycMatrix a(2, 4);
  a.set(0, 0, primitive_root(4, 1));
  a.set(0, 1, 2L);
  a.set(1, 0, 3L);
  a.set(1, 1, primitive_root(4, 1));
  CHECK(a.determinant() == CycNumber(-7L));
  CHECK(a.transpose().determinant() == a.determinant());
}

TEST_CASE("canonical vectors") {
  const CycVector v = canonicalize({CycNumber(), CycNumber(2L), primitive_root(4, 1)});
  CHECK(v[0].is_zero());
  CHECK(v[1].is_one());
  CHECK(v[2] * CycNumber(2L) == primitive_root(4, 1));
}

TEST_CASE("matrix entries must fit the conductor") {
  CycMatrix a(2, 4);
  CHECK_THROWS_AS(a.set(0, 0, primitive_root(3, 1)), ConductorMismatchError);
  a.set(0, 0, primitive_root(2, 1));
  CHECK(a(0, 0).conductor() == 4);
}

TEST_CASE("matrix multiplication is associative") {
  const ReflectionGroup g = enumerate_group(build_monomial(3, 2));
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = g.matrix(pick(rng));
    const auto& b = g.matrix(pick(rng));
    const auto& c = g.matrix(pick(rng));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * CycMatrix::identity(2, a.conductor()) == a);
  }
}
