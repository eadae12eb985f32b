#include "qident/qpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dense_ops.hpp"
#include "qident/error.hpp"

namespace qident::exact {

namespace detail {

std::string format_terms(const std::vector<BigInt>& num, const BigInt& den,
                         std::size_t limit) {
  std::ostringstream os;
  bool first = true;
  const std::size_t n = std::min(num.size(), limit);
  for (std::size_t e = 0; e < n; ++e) {
    if (sgn(num[e]) == 0) continue;
    Coeff c(num[e], den);
    c.canonicalize();
    const bool negative = sgn(c) < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || e == 0) os << mag.get_str();
    if (e > 0) {
      if (!unit) os << "*";
      os << "q";
      if (e > 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace detail

QPoly::QPoly(long constant) {
  if (constant != 0) num_.emplace_back(constant);
}

QPoly::QPoly(const Coeff& constant) {
  if (sgn(constant) != 0) {
    num_.push_back(constant.get_num());
    den_ = constant.get_den();
  }
}

QPoly QPoly::from_ints(std::initializer_list<long> coeffs) {
  return from_ints(std::vector<long>(coeffs));
}

QPoly QPoly::from_ints(const std::vector<long>& coeffs) {
  QPoly p;
  p.num_.reserve(coeffs.size());
  for (long c : coeffs) p.num_.emplace_back(c);
  p.normalize();
  return p;
}

QPoly QPoly::from_coeffs(const std::vector<Coeff>& coeffs) {
  QPoly p;
  BigInt den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  p.num_.reserve(coeffs.size());
  for (const auto& c : coeffs) p.num_.push_back(c.get_num() * (den / c.get_den()));
  p.den_ = den;
  p.normalize();
  return p;
}

QPoly QPoly::from_digits(std::vector<BigInt> numerators, BigInt denominator) {
  if (sgn(denominator) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  QPoly p;
  p.num_ = std::move(numerators);
  p.den_ = std::move(denominator);
  p.normalize();
  return p;
}

QPoly QPoly::monomial(std::size_t exponent, const Coeff& c) {
  if (sgn(c) == 0) return {};
  QPoly p;
  p.num_.resize(exponent + 1);
  p.num_[exponent] = c.get_num();
  p.den_ = c.get_den();
  return p;
}

std::optional<std::size_t> QPoly::degree() const noexcept {
  if (num_.empty()) return std::nullopt;
  return num_.size() - 1;
}

std::optional<std::size_t> QPoly::valuation() const noexcept {
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (sgn(num_[e]) != 0) return e;
  }
  return std::nullopt;
}

Coeff QPoly::coeff(std::size_t exponent) const {
  if (exponent >= num_.size()) return Coeff(0);
  Coeff c(num_[exponent], den_);
  c.canonicalize();
  return c;
}

void QPoly::normalize() { detail::normalize(num_, den_); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    if (num_.size() < other.num_.size()) num_.resize(other.num_.size());
    for (std::size_t i = 0; i < other.num_.size(); ++i) num_[i] += other.num_[i];
    if (den_ == 1) {
      detail::trim(num_);
      return *this;
    }
  } else {
    const BigInt self_scale = other.den_;
    const BigInt other_scale = den_;
    for (auto& c : num_) c *= self_scale;
    if (num_.size() < other.num_.size()) num_.resize(other.num_.size());
    for (std::size_t i = 0; i < other.num_.size(); ++i) num_[i] += other.num_[i] * other_scale;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) { return *this += -other; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.num_ = detail::multiply(a.num_, b.num_);
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly QPoly::shifted(std::size_t e) const {
  if (is_zero() || e == 0) return *this;
  QPoly r;
  r.num_.resize(num_.size() + e);
  std::copy(num_.begin(), num_.end(), r.num_.begin() + static_cast<std::ptrdiff_t>(e));
  r.den_ = den_;
  return r;
}

QPoly QPoly::scaled(const Coeff& c) const {
  if (sgn(c) == 0) return {};
  QPoly r = *this;
  for (auto& x : r.num_) x *= c.get_num();
  r.den_ *= c.get_den();
  r.normalize();
  return r;
}

void QPoly::add_shifted(const QPoly& p, std::size_t shift, long factor) {
  if (p.is_zero() || factor == 0) return;
  if (den_ == 1 && p.den_ == 1) {
    detail::add_scaled(num_, p.num_, BigInt(factor), shift);
    detail::trim(num_);
    return;
  }
  *this += p.shifted(shift).scaled(Coeff(factor));
}

void QPoly::mul_binomial(long c, std::size_t e) {
  detail::mul_binomial_factor(num_, c, e);
  normalize();
}

std::string QPoly::to_string() const {
  return detail::format_terms(num_, den_, num_.size());
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};
  const auto& A = a.numerators();
  const auto& B = b.numerators();
  if (A.size() < B.size()) {
    throw Error(ErrorKind::NonzeroRemainder, "divisor degree exceeds dividend degree");
  }
  const std::size_t nb = B.size();
  const BigInt& lead = B.back();
  std::vector<BigInt> rem = A;
  std::vector<BigInt> quot(A.size() - nb + 1);
  BigInt qden = 1;
  BigInt t, g;
  for (std::size_t i = quot.size(); i-- > 0;) {
    t = rem[i + nb - 1];
    if (sgn(t) == 0) continue;
    if (!mpz_divisible_p(t.get_mpz_t(), lead.get_mpz_t())) {
      // Scale everything so the next quotient digit is integral.
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), lead.get_mpz_t());
      BigInt s = lead / g;
      for (auto& c : rem) c *= s;
      for (auto& c : quot) c *= s;
      qden *= s;
      t = rem[i + nb - 1];
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), t.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < nb; ++j) {
      if (sgn(B[j]) == 0) continue;
      mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), B[j].get_mpz_t());
    }
    quot[i] = std::move(c);
  }
  for (const auto& c : rem) {
    if (sgn(c) != 0) throw Error(ErrorKind::NonzeroRemainder, "divisor does not divide dividend");
  }
  // a/b = (A/da) / (B/db) = (A/B) * db/da
  std::vector<BigInt> out = std::move(quot);
  for (auto& c : out) c *= b.denominator();
  return QPoly::from_digits(std::move(out), qden * a.denominator());
}

QPoly substitute_power(const QPoly& a, long k) {
  if (k < 1) throw Error(ErrorKind::InvalidExponent, "substitution exponent must be >= 1");
  if (k == 1 || a.is_zero()) return a;
  const auto& src = a.numerators();
  std::vector<BigInt> out((src.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < src.size(); ++i) out[i * static_cast<std::size_t>(k)] = src[i];
  return QPoly::from_digits(std::move(out), a.denominator());
}

std::optional<std::size_t> first_mismatch(const QPoly& a, const QPoly& b) {
  if (a == b) return std::nullopt;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t e = 0; e < n; ++e) {
    if (a.coeff(e) != b.coeff(e)) return e;
  }
  return std::nullopt;
}

}  // namespace qident::exact
