#include "reflekt/egf.hpp"

#include <algorithm>
#include <numeric>

#include "json_util.hpp"
#include "reflekt/errors.hpp"

namespace reflekt {

namespace {

std::size_t total_degree(const Multiset& e) { return std::accumulate(e.begin(), e.end(), std::size_t{0}); }

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

using Series = std::vector<Rational>;  // univariate, index = degree

Series series_mul(const Series& a, const Series& b, std::size_t degree) {
  Series out(degree + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_inverse(const Series& a, std::size_t degree) {
  if (a.empty() || a[0] == 0) throw DomainError("series without constant term is not invertible");
  Series inv(degree + 1, Rational(0));
  inv[0] = 1 / a[0];
  for (std::size_t k = 1; k <= degree; ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * inv[k - j];
    inv[k] = -s * inv[0];
  }
  return inv;
}

// log(a) for a[0] == 1, via (log a)' = a'/a.
Series series_log(const Series& a, std::size_t degree) {
  if (a.empty() || a[0] != 1) throw DomainError("series log needs constant term 1");
  Series deriv(degree + 1, Rational(0));
  for (std::size_t k = 1; k < a.size() && k <= degree + 1; ++k) deriv[k - 1] = a[k] * Rational(static_cast<long>(k));
  const Series q = series_mul(deriv, series_inverse(a, degree), degree);
  Series out(degree + 1, Rational(0));
  for (std::size_t k = 1; k <= degree; ++k) out[k] = q[k - 1] / Rational(static_cast<long>(k));
  return out;
}

Series to_univariate(const TruncatedEGF& s) {
  if (s.vars() != 1) throw DomainError("expected a univariate series, got " + std::to_string(s.vars()) + " variables");
  Series out(s.degree() + 1, Rational(0));
  for (const auto& [e, c] : s.terms()) out[e[0]] = c;
  return out;
}

// Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} s_i.
std::vector<Rational> elementary_from_power_sums(const std::vector<Rational>& s, std::size_t p) {
  std::vector<Rational> e(p + 1, Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= p; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational term = e[k - i] * s[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return e;
}

std::vector<Integer> positive_divisors(const Integer& value) {
  Integer v = abs(value);
  if (v == 0) return {};
  if (v > Integer("100000000000000")) throw DataError("rational root search: coefficient too large");
  const unsigned long n = v.get_ui();
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.emplace_back(d);
    if (d != n / d) large.emplace_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Positive rational roots with multiplicity of sum coeffs[k] X^k.
std::vector<Rational> positive_rational_roots(std::vector<Rational> coeffs) {
  std::vector<Rational> roots;
  auto eval = [](const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
  };
  auto deflate = [](const std::vector<Rational>& c, const Rational& x) {
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
      carry = carry * x + c[k];
      q[k - 1] = carry;
    }
    return q;
  };
  while (coeffs.size() > 1) {
    Integer common = 1;
    for (const auto& c : coeffs) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : coeffs) ints.push_back(c.get_num() * (common / c.get_den()));
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    bool found = false;
    for (const auto& u : nums) {
      for (const auto& v : dens) {
        Rational x(u, v);
        x.canonicalize();
        if (x.get_den() != v) continue;  // seen with a smaller denominator
        if (eval(coeffs, x) == 0) {
          roots.push_back(x);
          coeffs = deflate(coeffs, x);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool rational_sqrt(const Rational& q, Rational& out) {
  if (q < 0) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  if (n * n != q.get_num() || d * d != q.get_den()) return false;
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

}  // namespace

TruncatedEGF::TruncatedEGF(std::size_t vars, std::size_t degree) : vars_(vars), degree_(degree) {
  if (vars == 0) throw DomainError("a series needs at least one variable");
}

TruncatedEGF TruncatedEGF::constant(const Rational& c, std::size_t vars, std::size_t degree) {
  TruncatedEGF s(vars, degree);
  s.set_coefficient(Multiset(vars, 0), c);
  return s;
}

TruncatedEGF TruncatedEGF::monomial(const Multiset& exps, const Rational& c, std::size_t degree) {
  TruncatedEGF s(exps.size(), degree);
  s.set_coefficient(exps, c);
  return s;
}

Rational TruncatedEGF::coefficient(const Multiset& exps) const {
  if (exps.size() != vars_) throw DomainError("exponent vector has the wrong number of variables");
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedEGF::set_coefficient(const Multiset& exps, const Rational& c) {
  if (exps.size() != vars_) throw DomainError("exponent vector has the wrong number of variables");
  if (total_degree(exps) > degree_) return;
  if (c == 0) {
    terms_.erase(exps);
  } else {
    terms_[exps] = c;
  }
}

void TruncatedEGF::check_compatible(const TruncatedEGF& o) const {
  if (vars_ != o.vars_) throw DomainError("series have different variable counts");
}

TruncatedEGF& TruncatedEGF::operator+=(const TruncatedEGF& o) {
  check_compatible(o);
  degree_ = std::min(degree_, o.degree_);
  *this = truncate(degree_);
  for (const auto& [e, c] : o.terms_) set_coefficient(e, coefficient(e) + c);
  return *this;
}

TruncatedEGF& TruncatedEGF::operator-=(const TruncatedEGF& o) {
  TruncatedEGF neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

TruncatedEGF& TruncatedEGF::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncatedEGF operator*(const TruncatedEGF& a, const TruncatedEGF& b) {
  a.check_compatible(b);
  TruncatedEGF out(a.vars_, std::min(a.degree_, b.degree_));
  for (const auto& [ea, ca] : a.terms_) {
    const std::size_t da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > out.degree_) continue;
      Multiset e(a.vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool operator==(const TruncatedEGF& a, const TruncatedEGF& b) {
  return a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

TruncatedEGF TruncatedEGF::pow(std::size_t k) const {
  TruncatedEGF result = constant(Rational(1), vars_, degree_);
  for (std::size_t i = 0; i < k; ++i) result = result * *this;
  return result;
}

TruncatedEGF TruncatedEGF::truncate(std::size_t degree) const {
  TruncatedEGF out(vars_, std::min(degree, degree_));
  for (const auto& [e, c] : terms_) out.set_coefficient(e, c);
  return out;
}

TruncatedEGF TruncatedEGF::specialize() const {
  TruncatedEGF out(1, degree_);
  for (const auto& [e, c] : terms_) {
    const Multiset single{total_degree(e)};
    out.set_coefficient(single, out.coefficient(single) + c);
  }
  return out;
}

std::string TruncatedEGF::to_json() const {
  nlohmann::json j;
  j["vars"] = vars_;
  j["degree"] = degree_;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"exps", e}, {"coeff", c.get_str()}});
  j["terms"] = terms;
  return j.dump(2);
}

TruncatedEGF TruncatedEGF::from_json(std::string_view text, const std::string& source) {
  const nlohmann::json j = detail::parse_json(text, source);
  try {
    const auto vars = j.at("vars").get<std::size_t>();
    const auto degree = j.at("degree").get<std::size_t>();
    if (vars == 0) throw ParseError(source + ": \"vars\" must be positive");
    TruncatedEGF s(vars, degree);
    for (const auto& t : j.at("terms")) {
      const auto exps = t.at("exps").get<Multiset>();
      if (exps.size() != vars) throw ParseError(source + ": term exponent length differs from \"vars\"");
      if (total_degree(exps) > degree) throw ParseError(source + ": term exceeds declared degree");
      Rational c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) {
        throw ParseError(source + ": bad rational \"" + t.at("coeff").get<std::string>() + "\"");
      }
      c.canonicalize();
      s.set_coefficient(exps, s.coefficient(exps) + c);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
}

TruncatedEGF exp_linear(const Rational& a, std::size_t var, std::size_t vars, std::size_t degree) {
  if (var >= vars) throw DomainError("variable index out of range");
  TruncatedEGF s(vars, degree);
  Rational term = 1;
  for (std::size_t k = 0; k <= degree; ++k) {
    Multiset e(vars, 0);
    e[var] = k;
    s.set_coefficient(e, term);
    term *= a / Rational(static_cast<long>(k + 1));
  }
  return s;
}

TruncatedEGF product_egf(const OrbitNumerology& num, std::size_t degree) {
  if (!num.multiplicities_known()) throw DomainError("product_egf needs the orbit multiplicities n_i");
  const std::size_t p = num.p();
  TruncatedEGF product = TruncatedEGF::constant(Rational(1, static_cast<unsigned long>(num.order)), p, degree);
  for (std::size_t i = 0; i < p; ++i) {
    const auto& o = num.orbits[i];
    const Rational up(static_cast<long>(o.reflections), static_cast<long>(o.multiplicity));
    const Rational down(static_cast<long>(o.hyperplanes), static_cast<long>(o.multiplicity));
    const TruncatedEGF factor = exp_linear(up, i, p, degree) - exp_linear(-down, i, p, degree);
    product = product * factor.pow(o.multiplicity);
  }
  return product;
}

TruncatedEGF univariate_egf(std::size_t reflections, std::size_t hyperplanes, std::size_t rank, std::uint64_t order,
                     std::size_t degree) {
  if (rank == 0 || order == 0) throw DomainError("univariate_egf needs positive rank and order");
  const Rational up(static_cast<long>(reflections), static_cast<long>(rank));
  const Rational down(static_cast<long>(hyperplanes), static_cast<long>(rank));
  const TruncatedEGF factor = exp_linear(up, 0, 1, degree) - exp_linear(-down, 0, 1, degree);
  return factor.pow(rank) * Rational(1, static_cast<unsigned long>(order));
}

Integer extract_count(const TruncatedEGF& egf, const Multiset& exps) {
  if (total_degree(exps) > egf.degree()) throw DomainError("pattern exceeds series truncation degree");
  Rational value = egf.coefficient(exps);
  for (std::size_t l : exps) value *= Rational(factorial(l));
  value.canonicalize();
  if (value.get_den() != 1) throw DataError("extracted count " + value.get_str() + " is not an integer");
  return value.get_num();
}

TruncatedEGF exp_minus_one_product(const std::vector<Rational>& a, std::size_t degree) {
  TruncatedEGF product = TruncatedEGF::constant(Rational(1), 1, degree);
  const TruncatedEGF one = TruncatedEGF::constant(Rational(1), 1, degree);
  for (const auto& ai : a) product = product * (exp_linear(ai, 0, 1, degree) - one);
  return product;
}

std::vector<Rational> log_expm1_over_z(std::size_t degree) {
  // (e^z - 1)/z = sum z^k / (k+1)!
  Series s(degree + 1, Rational(0));
  for (std::size_t k = 0; k <= degree; ++k) s[k] = Rational(Integer(1), factorial(k + 1));
  return series_log(s, degree);
}

std::vector<Rational> recover_multiset(const TruncatedEGF& series) {
  const Series coeffs = to_univariate(series);
  const std::size_t degree = series.degree();
  std::size_t p = 0;
  while (p <= degree && coeffs[p] == 0) ++p;
  if (p > degree) throw DataError("valuation inconsistent with product form: series is zero");
  if (p == 0) {
    if (coeffs[0] == 1 && series.terms().size() == 1) return {};
    throw DataError("valuation inconsistent with product form: nonzero constant term");
  }
  if (degree < 2 * p) {
    throw DomainError("truncation degree " + std::to_string(degree) + " is below 2p = " + std::to_string(2 * p));
  }
  const std::size_t k_max = degree - p;
  const Rational leading = coeffs[p];  // a_1 ... a_p
  if (leading <= 0) throw DataError("valuation inconsistent with product form: leading coefficient not positive");

  Series normalized(k_max + 1, Rational(0));
  for (std::size_t k = 0; k <= k_max; ++k) normalized[k] = coeffs[p + k] / leading;
  const Series logs = series_log(normalized, k_max);
  const std::vector<Rational> c = log_expm1_over_z(k_max);

  // s_k = log coefficient / c_k wherever c_k != 0; odd k >= 3 have c_k == 0.
  std::vector<Rational> s(k_max + 1, Rational(0));
  std::vector<bool> known(k_max + 1, false);
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (c[k] != 0) {
      s[k] = logs[k] / c[k];
      known[k] = true;
    } else if (logs[k] != 0) {
      throw DataError("valuation inconsistent with product form at degree " + std::to_string(p + k));
    }
  }

  std::vector<std::size_t> missing;
  for (std::size_t k = 1; k <= p; ++k) {
    if (!known[k]) missing.push_back(k);
  }

  std::vector<Rational> roots;
  if (missing.size() <= 1 && (missing.empty() || 2 * missing[0] > p)) {
    if (!missing.empty()) {
      // e_p is affine in a single missing s_j when 2j > p; solve against e_p = leading.
      const std::size_t j = missing[0];
      s[j] = 0;
      const Rational at0 = elementary_from_power_sums(s, p)[p];
      s[j] = 1;
      const Rational slope = elementary_from_power_sums(s, p)[p] - at0;
      if (slope == 0) throw DataError("power sum s_" + std::to_string(j) + " is not determined");
      s[j] = (leading - at0) / slope;
    }
    const auto e = elementary_from_power_sums(s, p);
    // prod (X - a_i) = sum_k (-1)^k e_k X^{p-k}
    std::vector<Rational> poly(p + 1, Rational(0));
    for (std::size_t k = 0; k <= p; ++k) poly[p - k] = (k % 2 == 0) ? e[k] : -e[k];
    roots = positive_rational_roots(poly);
  } else if (k_max >= 2 * p) {
    // Even power sums give power sums of the squares a_i^2.
    std::vector<Rational> sq(p + 1, Rational(0));
    for (std::size_t k = 1; k <= p; ++k) sq[k] = s[2 * k];
    const auto e = elementary_from_power_sums(sq, p);
    std::vector<Rational> poly(p + 1, Rational(0));
    for (std::size_t k = 0; k <= p; ++k) poly[p - k] = (k % 2 == 0) ? e[k] : -e[k];
    for (const auto& b : positive_rational_roots(poly)) {
      Rational a;
      if (!rational_sqrt(b, a)) throw DataError("multiset not rational at this precision");
      roots.push_back(a);
    }
  } else {
    throw DomainError("truncation degree too small to determine the odd power sums for p = " + std::to_string(p));
  }

  if (roots.size() != p) throw DataError("multiset not rational at this precision");
  std::sort(roots.begin(), roots.end());
  if (!(exp_minus_one_product(roots, degree) == series)) {
    throw DataError("recovered multiset does not regenerate the series");
  }
  return roots;
}

}  // namespace reflekt
