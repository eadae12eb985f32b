#include "qident/pochhammer.hpp"

#include "qident/error.hpp"

namespace qident::qkit {

QPoly pochhammer_finite(const PochhammerSpec& spec) {
  if (!spec.length) throw Error(ErrorKind::DivergentSpec, "finite product requested with infinite length");
  if (spec.offset < 0 || spec.step < 1) {
    throw Error(ErrorKind::InvalidExponent, "offset must be >= 0 and step >= 1");
  }
  QPoly r(1);
  for (long k = 0; k < *spec.length; ++k) {
    const long e = spec.offset + k * spec.step;
    if (e == 0) {
      // (1 - sign)
      if (spec.sign == 1) return {};
      r = r.scaled(2);
      continue;
    }
    r.mul_binomial(-spec.sign, static_cast<std::size_t>(e));
  }
  return r;
}

QSeries pochhammer_infinite(const PochhammerSpec& spec, int order) {
  if (spec.offset < 0 || spec.step < 1) {
    throw Error(ErrorKind::InvalidExponent, "offset must be >= 0 and step >= 1");
  }
  if (spec.offset == 0 && spec.sign == 1) {
    throw Error(ErrorKind::DivergentSpec, "factor (1 - q^0) vanishes");
  }
  QSeries r = QSeries::one(order);
  for (long k = 0;; ++k) {
    if (spec.length && k >= *spec.length) break;
    const long e = spec.offset + k * spec.step;
    if (e > order) break;
    if (e == 0) {
      r = r.scaled(2);
      continue;
    }
    r.mul_binomial(-spec.sign, static_cast<std::size_t>(e));
  }
  return r;
}

QPoly q_factorial(long n, long base) {
  return pochhammer_finite({.sign = 1, .offset = base, .step = base, .length = n});
}

namespace {

// prod over k of (1 + s q^e + q^{2e})
template <typename ExponentFn>
QPoly cyclotomic_product(long first, long last, long middle_sign, ExponentFn exponent_of) {
  QPoly r(1);
  for (long k = first; k <= last; ++k) {
    const auto e = static_cast<std::size_t>(exponent_of(k));
    std::vector<long> f(2 * e + 1, 0);
    f[0] = 1;
    f[e] = middle_sign;
    f[2 * e] = 1;
    r *= QPoly::from_ints(f);
  }
  return r;
}

}  // namespace

QPoly ratio_neg_one(long n) {
  return cyclotomic_product(1, n - 1, -1, [](long k) { return k; });
}

QPoly ratio_odd(long n) {
  return cyclotomic_product(1, n, 1, [](long k) { return 2 * k - 1; });
}

QPoly ratio_cube(long n) {
  return cyclotomic_product(1, n, 1, [](long k) { return k; });
}

}  // namespace qident::qkit
