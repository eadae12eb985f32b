#pragma once

#include <optional>

#include "qident/qpoly.hpp"
#include "qident/qseries.hpp"

namespace qident::qkit {

using exact::QPoly;
using exact::QSeries;

/// (a; q^step)_length with a = sign * q^offset, i.e. the product of the
/// factors (1 - sign * q^(offset + k*step)). An empty length means infinite.
struct PochhammerSpec {
  int sign = +1;
  long offset = 1;
  long step = 1;
  std::optional<long> length;
};

QPoly pochhammer_finite(const PochhammerSpec& spec);

/// Infinite product truncated at q^order. Throws DivergentSpec when a zero
/// factor (1 - q^0) would appear.
QSeries pochhammer_infinite(const PochhammerSpec& spec, int order);

/// (q^base; q^base)_n
QPoly q_factorial(long n, long base = 1);

// Closed factorizations of three Pochhammer quotients; each is an integer
// polynomial.

/// (-1;q^3)_n / (-1;q)_n = prod_{k=1}^{n-1} (1 - q^k + q^{2k})
QPoly ratio_neg_one(long n);
/// (q^3;q^6)_n / (q;q^2)_n = prod_{k=1}^{n} (1 + q^{2k-1} + q^{2(2k-1)})
QPoly ratio_odd(long n);
/// (q^3;q^3)_n / (q;q)_n = prod_{k=1}^{n} (1 + q^k + q^{2k})
QPoly ratio_cube(long n);

}  // namespace qident::qkit
