#include "qident/theta.hpp"

#include <sstream>

#include "dense_ops.hpp"
#include "qident/character.hpp"
#include "qident/error.hpp"

namespace qident::qkit {

std::optional<long> QuadraticExponent::at(long j) const noexcept {
  const long n = numerator(j);
  if (D == 0 || n % D != 0) return std::nullopt;
  return n / D;
}

std::string to_string(const QuadraticExponent& e) {
  std::ostringstream os;
  os << "(" << e.A << "j^2 " << (e.B < 0 ? "- " : "+ ") << (e.B < 0 ? -e.B : e.B) << "j "
     << (e.C < 0 ? "- " : "+ ") << (e.C < 0 ? -e.C : e.C) << ")/" << e.D;
  return os.str();
}

int ThetaWeight::at(long j) const noexcept {
  int w = scale;
  if (legendre_shift) w *= legendre3(j + *legendre_shift);
  const bool odd = (j % 2) != 0;
  switch (sign) {
    case SignRule::None: break;
    case SignRule::Alternating: if (odd) w = -w; break;
    case SignRule::AlternatingShifted: if (!odd) w = -w; break;
  }
  return w;
}

std::string to_string(const ThetaWeight& w) {
  std::ostringstream os;
  os << w.scale;
  if (w.legendre_shift) os << "*((j+" << *w.legendre_shift << ")/3)";
  if (w.sign == SignRule::Alternating) os << "*(-1)^j";
  if (w.sign == SignRule::AlternatingShifted) os << "*(-1)^(j+1)";
  return os.str();
}

void check_integral_on_support(const QuadraticExponent& e, const ThetaWeight& w) {
  if (e.D < 1) throw Error(ErrorKind::InvalidExponent, "exponent denominator must be positive");
  // Both the weight and e(j) mod 1 are periodic with period dividing 6D.
  const long period = 6 * e.D;
  for (long j = 0; j < period; ++j) {
    if (w.at(j) != 0 && !e.at(j)) {
      throw Error(ErrorKind::NonIntegralExponent,
                  "exponent " + to_string(e) + " is fractional at j = " + std::to_string(j));
    }
  }
}

QSeries theta_sum(const QuadraticExponent& e, const ThetaWeight& w, int order) {
  if (e.A <= 0) throw Error(ErrorKind::InvalidExponent, "theta exponent needs a positive j^2 term");
  if (e.D < 1) throw Error(ErrorKind::InvalidExponent, "exponent denominator must be positive");
  exact::detail::Digits acc(static_cast<std::size_t>(order) + 1);
  const long bound = static_cast<long>(order) * e.D;
  auto visit = [&](long j) {
    const int wt = w.at(j);
    if (wt == 0) return;
    const long n = e.numerator(j);
    if (n > bound) return;
    if (n % e.D != 0) {
      throw Error(ErrorKind::NonIntegralExponent,
                  "exponent " + to_string(e) + " is fractional at j = " + std::to_string(j));
    }
    if (n < 0) {
      throw Error(ErrorKind::NegativeExponent,
                  "exponent " + to_string(e) + " is negative at j = " + std::to_string(j));
    }
    acc[static_cast<std::size_t>(n / e.D)] += wt;
  };
  // Walk outward from 0; a direction ends once it is past the vertex
  // -B/(2A) and the exponent exceeds the order, since e only grows from there.
  visit(0);
  for (long j = 1;; ++j) {
    const bool past_vertex = 2 * e.A * j + e.B >= 0;
    if (past_vertex && e.numerator(j) > bound) break;
    visit(j);
  }
  for (long j = -1;; --j) {
    const bool past_vertex = 2 * e.A * j + e.B <= 0;
    if (past_vertex && e.numerator(j) > bound) break;
    visit(j);
  }
  return QSeries(exact::QPoly::from_digits(std::move(acc)), order);
}

}  // namespace qident::qkit
