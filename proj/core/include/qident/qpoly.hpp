#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qident/coeff.hpp"

namespace qident::exact {

/// Size (in terms) above which multiplication switches to Karatsuba.
std::size_t karatsuba_threshold() noexcept;
void set_karatsuba_threshold(std::size_t terms) noexcept;

/// Exact polynomial in q with rational coefficients.
///
/// Stored densely as integer numerators over one positive common denominator,
/// kept coprime to the numerator content. Trailing zeros are always trimmed,
/// so structural equality is mathematical equality.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(long constant);
  explicit QPoly(const Coeff& constant);

  static QPoly from_ints(std::initializer_list<long> coeffs);
  static QPoly from_ints(const std::vector<long>& coeffs);
  static QPoly from_coeffs(const std::vector<Coeff>& coeffs);
  static QPoly from_digits(std::vector<BigInt> numerators, BigInt denominator = 1);
  /// c * q^exponent
  static QPoly monomial(std::size_t exponent, const Coeff& c = 1);

  bool is_zero() const noexcept { return num_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> valuation() const noexcept;
  std::size_t size() const noexcept { return num_.size(); }
  Coeff coeff(std::size_t exponent) const;
  bool is_integral() const noexcept { return den_ == 1; }

  const std::vector<BigInt>& numerators() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Multiply by q^e.
  QPoly shifted(std::size_t e) const;
  QPoly scaled(const Coeff& c) const;
  /// this += factor * q^shift * p
  void add_shifted(const QPoly& p, std::size_t shift, long factor = 1);
  /// this *= (1 + c q^e)
  void mul_binomial(long c, std::size_t e);

  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Returns c with b*c == a. Throws NonzeroRemainder or DivisionByZero.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// q -> q^k. Throws InvalidExponent for k < 1.
QPoly substitute_power(const QPoly& a, long k);

/// Lowest exponent where a and b differ.
std::optional<std::size_t> first_mismatch(const QPoly& a, const QPoly& b);

}  // namespace qident::exact
