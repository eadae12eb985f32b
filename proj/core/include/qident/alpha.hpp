#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qident/qpoly.hpp"
#include "qident/theta.hpp"

namespace qident::bailey {

using exact::QPoly;
using qkit::QuadraticExponent;
using qkit::SignRule;
using qkit::ThetaWeight;

/// Closed form of an alpha sequence:
///   alpha_j(q) = weight(j) * q^{e(j)},
/// with e(j) measured in powers of q. base_power says which variable the
/// paired q-binomials live in (q or q^2); a Bailey step bumps e(j) by
/// base_power * (j^2 + a j).
struct AlphaSpec {
  ThetaWeight weight;
  QuadraticExponent exponent;
  long base_power = 1;

  /// Throws NonIntegralExponent / InvalidExponent if the exponent is not an
  /// integer on the support or the base power is not positive.
  void validate() const;

  /// {weight, exponent} at j, or nullopt where the weight vanishes. Throws
  /// NegativeExponent when a supported term would carry q^{negative}.
  std::optional<std::pair<int, long>> term(long j) const;

  /// The same sequence read at -j.
  AlphaSpec reindexed() const;
  /// alpha_j * q^{times * base_power * (j^2 + a j)}
  AlphaSpec bumped(int a, long times = 1) const;

  friend bool operator==(const AlphaSpec&, const AlphaSpec&) = default;
};

std::string to_string(const AlphaSpec& alpha);

/// sum_j alpha_j [2L+a choose L-j]_{q^base}: the right-hand side of the
/// defining relation in the canonical binomial slot.
QPoly alpha_binomial_sum(const AlphaSpec& alpha, int a, long L);

/// Same sum with the binomial read as [2L+a choose L+j].
QPoly alpha_binomial_sum_plus(const AlphaSpec& alpha, int a, long L);

}  // namespace qident::bailey
