#include "qident/alpha.hpp"

#include "qident/error.hpp"
#include "qident/qbinom.hpp"

namespace qident::bailey {

void AlphaSpec::validate() const {
  if (base_power < 1) throw Error(ErrorKind::InvalidExponent, "base power must be >= 1");
  qkit::check_integral_on_support(exponent, weight);
}

std::optional<std::pair<int, long>> AlphaSpec::term(long j) const {
  const int w = weight.at(j);
  if (w == 0) return std::nullopt;
  const auto e = exponent.at(j);
  if (!e) {
    throw Error(ErrorKind::NonIntegralExponent,
                "alpha exponent " + qkit::to_string(exponent) + " fractional at j = " + std::to_string(j));
  }
  if (*e < 0) {
    throw Error(ErrorKind::NegativeExponent,
                "alpha exponent " + qkit::to_string(exponent) + " negative at j = " + std::to_string(j));
  }
  return std::pair{w, *e};
}

AlphaSpec AlphaSpec::reindexed() const {
  AlphaSpec r = *this;
  r.exponent.B = -exponent.B;
  // ((-j + s)/3) = -((j - s)/3); (-1)^{-j} = (-1)^j.
  if (weight.legendre_shift) {
    r.weight.scale = -weight.scale;
    r.weight.legendre_shift = (3 - *weight.legendre_shift % 3) % 3;
  }
  return r;
}

AlphaSpec AlphaSpec::bumped(int a, long times) const {
  AlphaSpec r = *this;
  const long k = times * base_power * exponent.D;
  r.exponent.A += k;
  r.exponent.B += k * a;
  return r;
}

std::string to_string(const AlphaSpec& alpha) {
  return qkit::to_string(alpha.weight) + " * q^" + qkit::to_string(alpha.exponent) +
         " [base q^" + std::to_string(alpha.base_power) + "]";
}

namespace {

QPoly binomial_sum(const AlphaSpec& alpha, int a, long L, int slot_sign) {
  alpha.validate();
  QPoly acc;
  // [2L+a choose L + slot_sign*j] is nonzero for L + slot_sign*j in [0, 2L+a].
  const long lo = slot_sign < 0 ? -L - a : -L;
  const long hi = slot_sign < 0 ? L : L + a;
  for (long j = lo; j <= hi; ++j) {
    const auto t = alpha.term(j);
    if (!t) continue;
    const QPoly& b = qkit::qbinom(2 * L + a, L + slot_sign * j, alpha.base_power);
    acc.add_shifted(b, static_cast<std::size_t>(t->second), t->first);
  }
  return acc;
}

}  // namespace

QPoly alpha_binomial_sum(const AlphaSpec& alpha, int a, long L) { return binomial_sum(alpha, a, L, -1); }

QPoly alpha_binomial_sum_plus(const AlphaSpec& alpha, int a, long L) {
  return binomial_sum(alpha, a, L, +1);
}

}  // namespace qident::bailey
