#include "qident/products.hpp"

#include <sstream>

#include "dense_ops.hpp"
#include "qident/error.hpp"
#include "qident/qbinom.hpp"

namespace qident::qkit {

using exact::QPoly;

namespace {

// 1 + c x^power q^e
XLaurentPoly linear_factor(long power, std::size_t e) {
  return XLaurentPoly(QPoly(1)) + XLaurentPoly::monomial(power, QPoly::monomial(e));
}

}  // namespace

std::pair<XLaurentPoly, XLaurentPoly> triple_product_poly_sides(long n, long m) {
  XLaurentPoly sum;
  for (long i = -n; i <= m; ++i) {
    const QPoly& b = qbinom(n + m, n + i, 2);
    sum += XLaurentPoly::monomial(i, b.shifted(static_cast<std::size_t>(i * i)));
  }
  XLaurentPoly prod(QPoly(1));
  for (long k = 0; k < n; ++k) prod = prod * linear_factor(-1, static_cast<std::size_t>(2 * k + 1));
  for (long k = 0; k < m; ++k) prod = prod * linear_factor(1, static_cast<std::size_t>(2 * k + 1));
  return {std::move(sum), std::move(prod)};
}

std::pair<XLaurentPoly, XLaurentPoly> qbinomial_theorem_sides(long L) {
  XLaurentPoly sum;
  for (long i = 0; i <= L; ++i) {
    sum += XLaurentPoly::monomial(i, qbinom(L, i, 2).shifted(static_cast<std::size_t>(i * i)));
  }
  XLaurentPoly prod(QPoly(1));
  for (long k = 0; k < L; ++k) prod = prod * linear_factor(1, static_cast<std::size_t>(2 * k + 1));
  return {std::move(sum), std::move(prod)};
}

std::pair<XLaurentPoly, XLaurentPoly> jacobi_triple_product_sides(int order) {
  XLaurentPoly sum;
  for (long i = 0; i * i <= order; ++i) {
    sum += XLaurentPoly::monomial(i, QPoly::monomial(static_cast<std::size_t>(i * i)));
    if (i > 0) sum += XLaurentPoly::monomial(-i, QPoly::monomial(static_cast<std::size_t>(i * i)));
  }
  const QPoly q2 = pochhammer_infinite({.sign = 1, .offset = 2, .step = 2, .length = {}}, order).to_poly();
  XLaurentPoly prod(q2);
  for (long e = 1; e <= order; e += 2) {
    prod = mul_truncated(prod, linear_factor(-1, static_cast<std::size_t>(e)), order);
    prod = mul_truncated(prod, linear_factor(1, static_cast<std::size_t>(e)), order);
  }
  return {std::move(sum), std::move(prod)};
}

std::string to_string(const QuintupleSpec& s) {
  std::ostringstream os;
  os << "Q(q^" << s.A << ", " << (s.z_sign < 0 ? "-" : "") << "q^" << s.B << ")";
  return os.str();
}

std::vector<PochhammerSpec> quintuple_factors(const QuintupleSpec& s) {
  if (s.A < 1 || (s.z_sign != 1 && s.z_sign != -1)) {
    throw Error(ErrorKind::IllSpecialized, "need A >= 1 and z_sign = +-1 in " + to_string(s));
  }
  const int neg_z = -s.z_sign;  // -z = -z_sign q^B
  std::vector<PochhammerSpec> f = {
      {.sign = 1, .offset = s.A, .step = s.A, .length = {}},                // (q^A; q^A)
      {.sign = neg_z, .offset = s.B, .step = s.A, .length = {}},            // (-z; q^A)
      {.sign = neg_z, .offset = s.A - s.B, .step = s.A, .length = {}},      // (-q^A/z; q^A)
      {.sign = 1, .offset = s.A - 2 * s.B, .step = 2 * s.A, .length = {}},  // (q^A/z^2; q^2A)
      {.sign = 1, .offset = s.A + 2 * s.B, .step = 2 * s.A, .length = {}},  // (z^2 q^A; q^2A)
  };
  for (const auto& p : f) {
    if (p.offset < 1) {
      throw Error(ErrorKind::IllSpecialized,
                  to_string(s) + " has a product factor with exponent " + std::to_string(p.offset));
    }
  }
  return f;
}

QSeries quintuple_product(const QuintupleSpec& s, int order) {
  QSeries r = QSeries::one(order);
  for (const auto& f : quintuple_factors(s)) r *= pochhammer_infinite(f, order);
  return r;
}

QSeries quintuple_sum(const QuintupleSpec& s, int order) {
  quintuple_factors(s);
  exact::detail::Digits acc(static_cast<std::size_t>(order) + 1);
  // Both exponent branches are quadratics in k with leading term 3A/2 k^2.
  auto e1 = [&](long k) { return s.A * (3 * k * k - k) / 2 + 3 * s.B * k; };
  auto e2 = [&](long k) { return e1(k) + s.B + s.A * k; };
  auto add = [&](long e, int c) {
    if (e < 0) throw Error(ErrorKind::NegativeExponent, "quintuple sum exponent below zero");
    if (e <= order) acc[static_cast<std::size_t>(e)] += c;
  };
  for (int dir : {1, -1}) {
    for (long k = (dir == 1 ? 0 : -1);; k += dir) {
      const long a = e1(k);
      const long b = e2(k);
      // Past both vertices and beyond the order: nothing further contributes.
      const bool growing = dir == 1 ? (6 * s.A * k - s.A + 6 * s.B >= 0 && 6 * s.A * k + s.A + 6 * s.B >= 0)
                                    : (6 * s.A * k - s.A + 6 * s.B <= 0 && 6 * s.A * k + s.A + 6 * s.B <= 0);
      if (growing && a > order && b > order) break;
      // (-1)^k z_sign^{3k} = (-z_sign)^k ; second term carries one more z_sign.
      const int sign_k = ((k % 2 != 0) ? -1 : 1) * ((s.z_sign < 0 && k % 2 != 0) ? -1 : 1);
      add(a, sign_k);
      add(b, sign_k * s.z_sign);
    }
  }
  return QSeries(QPoly::from_digits(std::move(acc)), order);
}

std::pair<QSeries, QSeries> quintuple_sides(const QuintupleSpec& s, int order) {
  return {quintuple_sum(s, order), quintuple_product(s, order)};
}

}  // namespace qident::qkit
