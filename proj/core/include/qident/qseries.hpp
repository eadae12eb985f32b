#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qident/coeff.hpp"
#include "qident/qpoly.hpp"

namespace qident::exact {

inline constexpr int kDefaultOrder = 200;

/// Power series in q known exactly through q^order.
///
/// Binary operations produce a result at the smaller of the two orders, and
/// equality compares coefficients only up to that common order.
class QSeries {
 public:
  /// The zero series at the given order.
  explicit QSeries(int order = 0);
  QSeries(const QPoly& p, int order);

  static QSeries from_ints(std::initializer_list<long> coeffs, int order);
  static QSeries one(int order) { return QSeries(QPoly(1), order); }

  int order() const noexcept { return order_; }
  Coeff coeff(std::size_t exponent) const;
  bool is_integral() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_.empty(); }
  /// Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> valuation() const noexcept;

  const std::vector<BigInt>& numerators() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend QSeries inverse(const QSeries& a);

  QSeries truncated(int order) const;
  /// Multiply by q^e, dropping whatever falls past the order.
  QSeries shifted(std::size_t e) const;
  QSeries scaled(const Coeff& c) const;
  /// this *= (1 + c q^e)
  void mul_binomial(long c, std::size_t e);
  /// this /= (1 - q^e) for e >= 1.
  void div_one_minus(std::size_t e);
  /// Polynomial holding the known coefficients.
  QPoly to_poly() const;

  std::string to_string() const;

 private:
  void normalize();

  int order_ = 0;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QSeries& s);

/// First exponent <= min order where the two series differ.
std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b);

/// Multiplicative inverse to a.order(). Throws NonInvertible when a(0) == 0.
QSeries inverse(const QSeries& a);

/// q -> q^k, keeping the input order. Throws InvalidExponent for k < 1.
QSeries substitute_power(const QSeries& a, long k);

}  // namespace qident::exact
