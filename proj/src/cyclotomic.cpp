#include "reflekt/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "reflekt/errors.hpp"

namespace reflekt {

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

namespace {

using Poly = std::vector<Integer>;

// Exact quotient of `num` by a monic integer polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  Poly quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

Poly compute_cyclotomic(unsigned m);

std::mutex& poly_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<unsigned, Poly>& poly_cache() {
  static std::map<unsigned, Poly> cache;
  return cache;
}

const Poly& cyclotomic_locked(unsigned m) {
  auto& cache = poly_cache();
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, compute_cyclotomic(m)).first;
  return it->second;
}

Poly compute_cyclotomic(unsigned m) {
  // x^m - 1 = prod_{d | m} Phi_d
  Poly p(m + 1, Integer(0));
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(std::move(p), cyclotomic_locked(d));
  }
  return p;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw DomainError("cyclotomic_polynomial: conductor must be positive");
  std::lock_guard lock(poly_mutex());
  return cyclotomic_locked(m);
}

/// Interned per-conductor data: zeta^k mod Phi_M for every 0 <= k < M.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned m) : m_(m), phi_(euler_phi(m)) {
    const Poly& cyc = cyclotomic_polynomial(m);
    reduction_.assign(m, Poly(phi_, Integer(0)));
    for (unsigned k = 0; k < std::min(m, phi_); ++k) reduction_[k][k] = 1;
    for (unsigned k = phi_; k < m; ++k) {
      const Poly& prev = reduction_[k - 1];
      Poly next(phi_, Integer(0));
      const Integer top = prev[phi_ - 1];
      for (unsigned j = phi_ - 1; j > 0; --j) next[j] = prev[j - 1];
      for (unsigned j = 0; j < phi_; ++j) next[j] -= top * cyc[j];
      reduction_[k] = std::move(next);
    }
    for (unsigned u = 1; u <= m; ++u) {
      if (std::gcd(u, m) == 1) units_.push_back(u % m);
    }
  }

  static const CyclotomicField* get(unsigned m) {
    if (m == 0) throw DomainError("conductor must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard lock(mu);
    auto& slot = fields[m];
    if (!slot) slot = std::make_unique<CyclotomicField>(m);
    return slot.get();
  }

  unsigned conductor() const { return m_; }
  unsigned phi() const { return phi_; }
  const std::vector<unsigned>& units() const { return units_; }

  /// Maps a length-M vector indexed by exponent onto the power basis.
  Poly reduce(const Poly& by_exponent) const {
    Poly out(phi_, Integer(0));
    for (unsigned k = 0; k < m_; ++k) {
      const Integer& c = by_exponent[k];
      if (c == 0) continue;
      if (k < phi_) {
        out[k] += c;
        continue;
      }
      const Poly& r = reduction_[k];
      for (unsigned j = 0; j < phi_; ++j) {
        if (r[j] != 0) out[j] += c * r[j];
      }
    }
    return out;
  }

 private:
  unsigned m_;
  unsigned phi_;
  std::vector<Poly> reduction_;
  std::vector<unsigned> units_;
};

CycNumber::CycNumber() : field_(CyclotomicField::get(1)), num_(1, Integer(0)), den_(1) {}

CycNumber::CycNumber(long value) : field_(CyclotomicField::get(1)), num_(1, Integer(value)), den_(1) {}

CycNumber::CycNumber(const Rational& value, unsigned conductor)
    : field_(CyclotomicField::get(conductor)),
      num_(field_->phi(), Integer(0)),
      den_(value.get_den()) {
  num_[0] = value.get_num();
}

CycNumber::CycNumber(const CyclotomicField* field, std::vector<Integer> num, Integer den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycNumber CycNumber::from_powers(unsigned conductor, std::span<const Rational> coeffs) {
  const CyclotomicField* f = CyclotomicField::get(conductor);
  Integer common = 1;
  for (const auto& c : coeffs) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  Poly by_exp(conductor, Integer(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    by_exp[k % conductor] += coeffs[k].get_num() * (common / coeffs[k].get_den());
  }
  return CycNumber(f, f->reduce(by_exp), common);
}

void CycNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; })) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

unsigned CycNumber::conductor() const { return field_->conductor(); }

std::vector<Rational> CycNumber::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    Rational q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

bool CycNumber::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycNumber::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycNumber::is_one() const { return is_rational() && num_[0] == den_; }

Rational CycNumber::to_rational() const {
  if (!is_rational()) throw DomainError("value " + to_string() + " is not rational");
  Rational q(num_[0], den_);
  q.canonicalize();
  return q;
}

CycNumber CycNumber::embed(unsigned conductor) const {
  const unsigned m = field_->conductor();
  if (conductor == m) return *this;
  if (conductor % m != 0) {
    throw DomainError("cannot embed conductor " + std::to_string(m) + " into " +
                      std::to_string(conductor));
  }
  const CyclotomicField* f = CyclotomicField::get(conductor);
  const unsigned step = conductor / m;
  Poly by_exp(conductor, Integer(0));
  for (std::size_t k = 0; k < num_.size(); ++k) by_exp[k * step] = num_[k];
  return CycNumber(f, f->reduce(by_exp), den_);
}

CycNumber CycNumber::galois(long k) const {
  const long m = field_->conductor();
  const long a = ((k % m) + m) % m;
  if (std::gcd(a == 0 ? m : a, m) != 1 && m > 1) {
    throw DomainError("galois exponent must be coprime to the conductor");
  }
  Poly by_exp(m, Integer(0));
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] != 0) by_exp[(static_cast<long>(j) * a) % m] += num_[j];
  }
  return CycNumber(field_, field_->reduce(by_exp), den_);
}

CycNumber CycNumber::conj() const { return galois(-1); }

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  // x * prod_{sigma != id} sigma(x) is the field norm, a nonzero rational.
  CycNumber cofactor(Rational(1), conductor());
  for (unsigned u : field_->units()) {
    if (u == 1 % field_->conductor()) continue;
    cofactor *= galois(u);
  }
  const Rational norm = (*this * cofactor).to_rational();
  return cofactor * CycNumber(1 / norm, conductor());
}

CycNumber CycNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber result(Rational(1), conductor());
  CycNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

void CycNumber::unify(CycNumber& other) {
  if (field_ == other.field_) return;
  const unsigned l = lcm_conductor(conductor(), other.conductor());
  *this = embed(l);
  other = other.embed(l);
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  CycNumber rhs = o;
  unify(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += rhs.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] = num_[k] * rhs.den_ + rhs.num_[k] * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  CycNumber rhs = o;
  unify(rhs);
  const unsigned m = field_->conductor();
  Poly by_exp(m, Integer(0));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.num_.size(); ++j) {
      if (rhs.num_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= m) k -= m;
      by_exp[k] += num_[i] * rhs.num_[j];
    }
  }
  num_ = field_->reduce(by_exp);
  den_ *= rhs.den_;
  normalize();
  return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& o) { return *this *= o.inverse(); }

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.field_ == b.field_) return a.den_ == b.den_ && a.num_ == b.num_;
  CycNumber x = a;
  CycNumber y = b;
  x.unify(y);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

bool operator<(const CycNumber& a, const CycNumber& b) {
  if (a.field_ != b.field_) return a.conductor() < b.conductor();
  if (a.num_ != b.num_) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

std::size_t CycNumber::hash() const {
  std::size_t h = std::hash<unsigned>{}(conductor());
  auto mix = [&h](const Integer& z) {
    const std::size_t v = static_cast<std::size_t>(mpz_get_si(z.get_mpz_t())) ^
                          (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) << 7);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& c : num_) mix(c);
  mix(den_);
  return h;
}

std::string CycNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    Rational c(num_[k], den_);
    c.canonicalize();
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

CycNumber primitive_root(unsigned conductor, long k) {
  if (conductor == 0) throw DomainError("primitive_root: conductor must be >= 1");
  const long m = conductor;
  const long e = ((k % m) + m) % m;
  std::vector<Rational> coeffs(e + 1, Rational(0));
  coeffs[e] = 1;
  return CycNumber::from_powers(conductor, coeffs);
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, unsigned conductor) : text_(text), m_(conductor) {}

  CycNumber parse() {
    std::vector<Rational> by_exp(m_, Rational(0));
    skip_space();
    if (at_end()) fail("empty literal");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, exponent] = term();
      const long m = m_;
      by_exp[((exponent % m) + m) % m] += sign * coeff;
      skip_space();
    }
    return CycNumber::from_powers(m_, by_exp);
  }

 private:
  std::pair<Rational, long> term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rational(digits());
      have_coeff = true;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        Integer d(digits());
        if (d == 0) fail("zero denominator");
        coeff /= Rational(d);
      }
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'z') fail("expected 'z' after '*'");
      }
    }
    long exponent = 0;
    if (peek() == 'z') {
      ++pos_;
      exponent = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        long s = 1;
        if (peek() == '-') {
          s = -1;
          ++pos_;
        }
        exponent = s * std::stol(digits());
      }
    } else if (!have_coeff) {
      fail("expected a number or 'z'");
    }
    return {coeff, exponent};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cyclotomic literal \"" + std::string(text_) + "\": " + what +
                     " at position " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  unsigned m_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNumber parse_cyc_literal(std::string_view text, unsigned conductor) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  return LiteralParser(text, conductor).parse();
}

std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.to_string(); }

}  // namespace reflekt
