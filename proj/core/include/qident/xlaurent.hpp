#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qident/qpoly.hpp"

namespace qident::exact {

/// Laurent polynomial in x whose coefficients are polynomials in q.
class XLaurentPoly {
 public:
  XLaurentPoly() = default;
  explicit XLaurentPoly(QPoly constant);
  /// c(q) * x^power
  static XLaurentPoly monomial(long power, QPoly c);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long min_x_power() const noexcept { return min_x_; }
  /// Highest x power; meaningless for zero.
  long max_x_power() const noexcept { return min_x_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<QPoly>& coeffs() const noexcept { return coeffs_; }
  QPoly coeff(long x_power) const;

  XLaurentPoly& operator+=(const XLaurentPoly& other);
  XLaurentPoly& operator-=(const XLaurentPoly& other);
  friend XLaurentPoly operator+(XLaurentPoly a, const XLaurentPoly& b) { return a += b; }
  friend XLaurentPoly operator-(XLaurentPoly a, const XLaurentPoly& b) { return a -= b; }
  friend XLaurentPoly operator*(const XLaurentPoly& a, const XLaurentPoly& b);
  friend XLaurentPoly mul_truncated(const XLaurentPoly& a, const XLaurentPoly& b, int q_order);
  friend bool operator==(const XLaurentPoly& a, const XLaurentPoly& b) = default;

  /// Drops every q power above `order` in every x coefficient.
  XLaurentPoly truncated_q(int order) const;
  /// Specialization x = 1.
  QPoly at_x_one() const;

  std::string to_string() const;

 private:
  void trim();

  long min_x_ = 0;
  std::vector<QPoly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const XLaurentPoly& p);

/// Product truncated in q after multiplying.
XLaurentPoly mul_truncated(const XLaurentPoly& a, const XLaurentPoly& b, int q_order);

struct XMismatch {
  long x_power;
  std::size_t q_exponent;
};
std::optional<XMismatch> first_mismatch(const XLaurentPoly& a, const XLaurentPoly& b);

}  // namespace qident::exact
