#pragma once

#include <optional>
#include <string>

#include "qident/qseries.hpp"

namespace qident::qkit {

using exact::QSeries;

/// e(j) = (A j^2 + B j + C) / D with D > 0.
struct QuadraticExponent {
  long A = 1;
  long B = 0;
  long C = 0;
  long D = 1;

  long numerator(long j) const noexcept { return A * j * j + B * j + C; }
  /// The exponent when it is an integer at j.
  std::optional<long> at(long j) const noexcept;

  friend bool operator==(const QuadraticExponent&, const QuadraticExponent&) = default;
};

std::string to_string(const QuadraticExponent& e);

enum class SignRule {
  None,
  Alternating,         // (-1)^j
  AlternatingShifted,  // (-1)^(j+1)
};

/// weight(j) = scale * ((j + shift)/3) * sign(j); the character factor is
/// absent when legendre_shift is empty.
struct ThetaWeight {
  int scale = 1;
  std::optional<int> legendre_shift;
  SignRule sign = SignRule::None;

  int at(long j) const noexcept;

  friend bool operator==(const ThetaWeight&, const ThetaWeight&) = default;
};

std::string to_string(const ThetaWeight& w);

/// Checks that e(j) is integral wherever the weight is nonzero.
/// Throws NonIntegralExponent otherwise, or InvalidExponent for D < 1.
void check_integral_on_support(const QuadraticExponent& e, const ThetaWeight& w);

/// Bilateral sum of weight(j) q^{e(j)} over all j with e(j) <= order.
/// The exponent needs a positive leading coefficient. Throws
/// NonIntegralExponent for a fractional exponent on the support and
/// NegativeExponent for a negative one.
QSeries theta_sum(const QuadraticExponent& e, const ThetaWeight& w, int order);

}  // namespace qident::qkit
