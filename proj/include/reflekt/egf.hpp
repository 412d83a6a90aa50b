#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reflekt/cyclotomic.hpp"
#include "reflekt/factor.hpp"
#include "reflekt/group.hpp"

namespace reflekt {

/// Multivariate power series truncated at total degree D with exact rational
/// coefficients. The coefficient of x^l is stored directly, so the count it
/// encodes is coefficient * prod l_i!.
class TruncatedEGF {
 public:
  TruncatedEGF() = default;
  TruncatedEGF(std::size_t vars, std::size_t degree);

  static TruncatedEGF constant(const Rational& c, std::size_t vars, std::size_t degree);
  /// The single term c * x^exps.
  static TruncatedEGF monomial(const Multiset& exps, const Rational& c, std::size_t degree);

  std::size_t vars() const { return vars_; }
  std::size_t degree() const { return degree_; }
  const std::map<Multiset, Rational>& terms() const { return terms_; }
  Rational coefficient(const Multiset& exps) const;
  void set_coefficient(const Multiset& exps, const Rational& c);

  TruncatedEGF& operator+=(const TruncatedEGF& o);
  TruncatedEGF& operator-=(const TruncatedEGF& o);
  TruncatedEGF& operator*=(const Rational& c);
  friend TruncatedEGF operator+(TruncatedEGF a, const TruncatedEGF& b) { return a += b; }
  friend TruncatedEGF operator-(TruncatedEGF a, const TruncatedEGF& b) { return a -= b; }
  friend TruncatedEGF operator*(TruncatedEGF a, const Rational& c) { return a *= c; }
  friend TruncatedEGF operator*(const TruncatedEGF& a, const TruncatedEGF& b);
  friend bool operator==(const TruncatedEGF& a, const TruncatedEGF& b);

  TruncatedEGF pow(std::size_t k) const;
  TruncatedEGF truncate(std::size_t degree) const;
  /// Substitutes x_i := x for every variable.
  TruncatedEGF specialize() const;

  std::string to_json() const;
  static TruncatedEGF from_json(std::string_view text, const std::string& source = "<string>");

 private:
  void check_compatible(const TruncatedEGF& o) const;

  std::size_t vars_ = 0;
  std::size_t degree_ = 0;
  std::map<Multiset, Rational> terms_;  // nonzero coefficients only
};

/// e^{a x_i} truncated at degree D in a series with `vars` variables.
TruncatedEGF exp_linear(const Rational& a, std::size_t var, std::size_t vars, std::size_t degree);

/// (1/#W) prod_i (e^{(N_i/n_i) x_i} - e^{-(N_i*/n_i) x_i})^{n_i}
TruncatedEGF product_egf(const OrbitNumerology& num, std::size_t degree);
/// (1/#W) (e^{(N/n) x} - e^{-(N*/n) x})^n
TruncatedEGF univariate_egf(std::size_t reflections, std::size_t hyperplanes, std::size_t rank, std::uint64_t order,
                     std::size_t degree);
/// Coefficient times prod l_i!; DataError when not an integer.
Integer extract_count(const TruncatedEGF& egf, const Multiset& exps);

/// prod_i (e^{a_i x} - 1), univariate.
TruncatedEGF exp_minus_one_product(const std::vector<Rational>& a, std::size_t degree);

/// Recovers the positive rational multiset {a_i} from a truncation of
/// prod_i (e^{a_i x} - 1). Returned in ascending order.
std::vector<Rational> recover_multiset(const TruncatedEGF& series);

/// Coefficients c_0..c_degree of log((e^z - 1)/z).
std::vector<Rational> log_expm1_over_z(std::size_t degree);

}  // namespace reflekt
