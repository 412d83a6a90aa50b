#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reflekt {

using Integer = mpz_class;
using Rational = mpq_class;

unsigned euler_phi(unsigned m);
unsigned lcm_conductor(unsigned a, unsigned b);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

class CyclotomicField;

/// Exact element of Q(zeta_M), stored in the power basis {zeta^k : k < phi(M)}
/// as integer numerators over one positive common denominator. The stored
/// form is reduced modulo Phi_M and gcd-normalized, so structural equality at
/// a fixed conductor is value equality.
class CycNumber {
 public:
  CycNumber();
  CycNumber(long value);  // NOLINT(google-explicit-constructor)
  explicit CycNumber(const Rational& value, unsigned conductor = 1);

  /// Value of sum coeffs[k] * zeta_M^k for any length of `coeffs`.
  static CycNumber from_powers(unsigned conductor, std::span<const Rational> coeffs);

  unsigned conductor() const;
  /// Power-basis coefficients, length phi(conductor).
  std::vector<Rational> coefficients() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws DomainError unless the value is rational.
  Rational to_rational() const;

  /// Same value re-expressed at a multiple of the current conductor.
  CycNumber embed(unsigned conductor) const;
  /// Field automorphism zeta -> zeta^k, gcd(k, M) = 1.
  CycNumber galois(long k) const;
  /// Complex conjugate (zeta -> zeta^-1).
  CycNumber conj() const;
  /// Throws DomainError on zero.
  CycNumber inverse() const;
  CycNumber pow(long e) const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  CycNumber operator-() const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  /// Total order at a common conductor; only meaningful for container keys.
  friend bool operator<(const CycNumber& a, const CycNumber& b);

  std::size_t hash() const;
  /// Polynomial literal in `z`, e.g. "1/2 - 1/2*z^3"; parses back exactly.
  std::string to_string() const;

 private:
  CycNumber(const CyclotomicField* field, std::vector<Integer> num, Integer den);
  void normalize();
  void unify(CycNumber& other);

  const CyclotomicField* field_;
  std::vector<Integer> num_;
  Integer den_;
};

/// zeta_M^k at conductor M.
CycNumber primitive_root(unsigned conductor, long k);

/// Parses a polynomial literal in `z` with rational coefficients and evaluates
/// it at zeta_M. Accepts forms like "3", "-z", "1/2 - 1/2*z^3", "2z^5".
CycNumber parse_cyc_literal(std::string_view text, unsigned conductor);

std::ostream& operator<<(std::ostream& os, const CycNumber& x);

}  // namespace reflekt

template <>
struct std::hash<reflekt::CycNumber> {
  std::size_t operator()(const reflekt::CycNumber& x) const noexcept { return x.hash(); }
};
