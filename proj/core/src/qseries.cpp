#include "qident/qseries.hpp"

#include <algorithm>
#include <ostream>

#include "dense_ops.hpp"
#include "qident/error.hpp"

namespace qident::exact {

namespace {

std::size_t width(int order) { return static_cast<std::size_t>(order) + 1; }

}  // namespace

QSeries::QSeries(int order) : order_(std::max(order, 0)) {}

QSeries::QSeries(const QPoly& p, int order) : order_(std::max(order, 0)) {
  const auto& src = p.numerators();
  const std::size_t n = std::min(src.size(), width(order_));
  num_.assign(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(n));
  den_ = p.denominator();
  normalize();
}

QSeries QSeries::from_ints(std::initializer_list<long> coeffs, int order) {
  return QSeries(QPoly::from_ints(coeffs), order);
}

Coeff QSeries::coeff(std::size_t exponent) const {
  if (exponent >= num_.size()) return Coeff(0);
  Coeff c(num_[exponent], den_);
  c.canonicalize();
  return c;
}

std::optional<std::size_t> QSeries::valuation() const noexcept {
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (sgn(num_[e]) != 0) return e;
  }
  return std::nullopt;
}

void QSeries::normalize() {
  if (num_.size() > width(order_)) num_.resize(width(order_));
  detail::normalize(num_, den_);
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  order_ = std::min(order_, other.order_);
  if (num_.size() > width(order_)) num_.resize(width(order_));
  const std::size_t n = std::min(other.num_.size(), width(order_));
  if (den_ == other.den_) {
    if (num_.size() < n) num_.resize(n);
    for (std::size_t i = 0; i < n; ++i) num_[i] += other.num_[i];
  } else {
    const BigInt self_scale = other.den_;
    for (auto& c : num_) c *= self_scale;
    if (num_.size() < n) num_.resize(n);
    for (std::size_t i = 0; i < n; ++i) num_[i] += other.num_[i] * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) { return *this += -other; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order_, b.order_));
  if (a.is_zero() || b.is_zero()) return r;
  r.num_ = detail::multiply(a.num_, b.num_, width(r.order_));
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

QSeries& QSeries::operator*=(const QSeries& other) { return *this = *this * other; }

bool operator==(const QSeries& a, const QSeries& b) { return !first_mismatch(a, b).has_value(); }

QSeries QSeries::truncated(int order) const {
  QSeries r = *this;
  r.order_ = std::min(order_, std::max(order, 0));
  r.normalize();
  return r;
}

QSeries QSeries::shifted(std::size_t e) const {
  QSeries r(order_);
  if (is_zero() || e >= width(order_)) return r;
  r.num_.resize(std::min(num_.size() + e, width(order_)));
  for (std::size_t i = e; i < r.num_.size(); ++i) r.num_[i] = num_[i - e];
  r.den_ = den_;
  r.normalize();
  return r;
}

QSeries QSeries::scaled(const Coeff& c) const {
  QSeries r = *this;
  if (sgn(c) == 0) {
    r.num_.clear();
    r.den_ = 1;
    return r;
  }
  for (auto& x : r.num_) x *= c.get_num();
  r.den_ *= c.get_den();
  r.normalize();
  return r;
}

void QSeries::mul_binomial(long c, std::size_t e) {
  detail::mul_binomial_factor(num_, c, e, width(order_));
  normalize();
}

void QSeries::div_one_minus(std::size_t e) {
  if (e == 0) throw Error(ErrorKind::NonInvertible, "division by 1 - q^0");
  if (num_.empty()) return;
  num_.resize(width(order_));
  for (std::size_t i = e; i < num_.size(); ++i) {
    if (sgn(num_[i - e]) != 0) num_[i] += num_[i - e];
  }
  normalize();
}

QPoly QSeries::to_poly() const { return QPoly::from_digits(num_, den_); }

std::string QSeries::to_string() const {
  return detail::format_terms(num_, den_, num_.size()) + " + O(q^" + std::to_string(order_ + 1) + ")";
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.to_string(); }

std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b) {
  const std::size_t n = width(std::min(a.order(), b.order()));
  const auto& an = a.numerators();
  const auto& bn = b.numerators();
  static const BigInt zero = 0;
  for (std::size_t e = 0; e < n; ++e) {
    const BigInt& x = e < an.size() ? an[e] : zero;
    const BigInt& y = e < bn.size() ? bn[e] : zero;
    // x/da == y/db  <=>  x*db == y*da
    if (a.denominator() == b.denominator()) {
      if (x != y) return e;
    } else if (x * b.denominator() != y * a.denominator()) {
      return e;
    }
  }
  return std::nullopt;
}

QSeries inverse(const QSeries& a) {
  const auto& an = a.numerators();
  if (an.empty() || sgn(an[0]) == 0) {
    throw Error(ErrorKind::NonInvertible, "constant term of the series is zero");
  }
  const std::size_t n = width(a.order());
  // Work on the integer numerators A with a = A/d, so 1/a = d * (1/A).
  // 1/A has denominator a power of A0; keep r[k] = R[k] / A0^(k+1).
  const BigInt& a0 = an[0];
  std::vector<BigInt> r(n);
  if (a0 == 1 || a0 == -1) {
    r[0] = a0;
    BigInt acc;
    for (std::size_t k = 1; k < n; ++k) {
      acc = 0;
      const std::size_t imax = std::min(k, an.size() - 1);
      for (std::size_t i = 1; i <= imax; ++i) {
        if (sgn(an[i]) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), an[i].get_mpz_t(), r[k - i].get_mpz_t());
      }
      r[k] = a0 == 1 ? BigInt(-acc) : acc;
    }
    QSeries out(a.order());
    out.num_ = std::move(r);
    for (auto& c : out.num_) c *= a.den_;
    out.normalize();
    return out;
  }
  // General constant term: exact rational recurrence.
  std::vector<Coeff> rc(n);
  const Coeff c0(a0);
  rc[0] = Coeff(1) / c0;
  for (std::size_t k = 1; k < n; ++k) {
    Coeff acc = 0;
    const std::size_t imax = std::min(k, an.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) {
      if (sgn(an[i]) == 0) continue;
      acc += Coeff(an[i]) * rc[k - i];
    }
    rc[k] = -acc / c0;
  }
  for (auto& c : rc) c *= Coeff(a.den_);
  return QSeries(QPoly::from_coeffs(rc), a.order());
}

QSeries substitute_power(const QSeries& a, long k) {
  if (k < 1) throw Error(ErrorKind::InvalidExponent, "substitution exponent must be >= 1");
  if (k == 1) return a;
  return QSeries(substitute_power(a.to_poly(), k), a.order());
}

}  // namespace qident::exact
