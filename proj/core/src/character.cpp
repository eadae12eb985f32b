#include "qident/character.hpp"

#include <ostream>

#include "qident/error.hpp"

namespace qident::qkit {

int legendre3(long j) noexcept {
  switch (((j % 3) + 3) % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

EisensteinInt EisensteinInt::pow(long n) const {
  if (n < 0) {
    // Only units are invertible; w and wbar are the cases we need.
    if (norm() != 1) throw Error(ErrorKind::NonzeroRemainder, "negative power of a non-unit");
    return divide_exact({1, 0}, *this).pow(-n);
  }
  EisensteinInt result{1, 0};
  EisensteinInt base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, EisensteinInt z) {
  return os << z.real_part() << (z.omega_part() < 0 ? " - " : " + ")
            << (z.omega_part() < 0 ? -z.omega_part() : z.omega_part()) << "w";
}

EisensteinInt divide_exact(EisensteinInt x, EisensteinInt y) {
  const long n = y.norm();
  if (n == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in Z[w]");
  const EisensteinInt t = x * y.conj();
  if (t.real_part() % n != 0 || t.omega_part() % n != 0) {
    throw Error(ErrorKind::NonzeroRemainder, "Eisenstein division is not exact");
  }
  return {t.real_part() / n, t.omega_part() / n};
}

long eisenstein_chi(long j) {
  const EisensteinInt w = EisensteinInt::omega();
  const EisensteinInt wb = EisensteinInt::omega_bar();
  const EisensteinInt q = divide_exact(w.pow(j) - wb.pow(j), w - wb);
  if (!q.is_integer()) throw Error(ErrorKind::NonzeroRemainder, "character value is not rational");
  return q.real_part();
}

}  // namespace qident::qkit
