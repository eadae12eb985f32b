#pragma once

#include <iosfwd>

namespace qident::qkit {

/// Legendre symbol (j/3): +1 on j = 1 mod 3, -1 on j = 2 mod 3, 0 on multiples of 3.
int legendre3(long j) noexcept;

/// a + b*w with w a primitive cube root of unity (w^2 = -1 - w).
class EisensteinInt {
 public:
  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(long a, long b) : a_(a), b_(b) {}

  static constexpr EisensteinInt omega() { return {0, 1}; }
  static constexpr EisensteinInt omega_bar() { return {-1, -1}; }

  constexpr long real_part() const noexcept { return a_; }
  constexpr long omega_part() const noexcept { return b_; }
  constexpr bool is_integer() const noexcept { return b_ == 0; }

  constexpr EisensteinInt conj() const noexcept { return {a_ - b_, -b_}; }
  /// a^2 - ab + b^2
  constexpr long norm() const noexcept { return a_ * a_ - a_ * b_ + b_ * b_; }

  friend constexpr EisensteinInt operator+(EisensteinInt x, EisensteinInt y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend constexpr EisensteinInt operator-(EisensteinInt x, EisensteinInt y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend constexpr EisensteinInt operator*(EisensteinInt x, EisensteinInt y) {
    return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_ - x.b_ * y.b_};
  }
  friend constexpr bool operator==(EisensteinInt, EisensteinInt) = default;

  /// Non-negative powers; negative exponents go through the inverse unit.
  EisensteinInt pow(long n) const;

 private:
  long a_ = 0;
  long b_ = 0;
};

std::ostream& operator<<(std::ostream& os, EisensteinInt z);

/// x / y in the ring. Throws NonzeroRemainder if y does not divide x.
EisensteinInt divide_exact(EisensteinInt x, EisensteinInt y);

/// (w^j - wbar^j) / (w - wbar), evaluated exactly in Z[w].
long eisenstein_chi(long j);

}  // namespace qident::qkit
