#include <doctest.h>

#include <random>

#include "qident/error.hpp"
#include "qident/qpoly.hpp"
#include "qident/qseries.hpp"
#include "qident/xlaurent.hpp"

using namespace qident;
using namespace qident::exact;

namespace {

QPoly random_poly(std::mt19937& rng, std::size_t len, long lo, long hi, std::size_t stride = 1) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<long> c(len * stride);
  for (std::size_t i = 0; i < len; ++i) c[i * stride] = d(rng);
  return QPoly::from_ints(c);
}

QSeries partitions(int order) {
  QSeries s = QSeries::one(order);
  for (int k = 1; k <= order; ++k) s.div_one_minus(static_cast<std::size_t>(k));
  return s;
}

struct ThresholdGuard {
  std::size_t saved = karatsuba_threshold();
  ~ThresholdGuard() { set_karatsuba_threshold(saved); }
};

}  // namespace

TEST_CASE("polynomial basics") {
  const QPoly a = QPoly::from_ints({1, 1});
  const QPoly b = QPoly::from_ints({1, -1});
  CHECK(a * b == QPoly::from_ints({1, 0, -1}));
  CHECK((a - a).is_zero());
  CHECK(!(a - a).degree());
  CHECK(QPoly::from_ints({0, 0, 3, 0, 0}).degree() == 2);
  CHECK(QPoly::from_ints({0, 0, 3}).valuation() == 2);
  CHECK(QPoly::monomial(5, Coeff(-2)).coeff(5) == -2);
  CHECK(a.shifted(3) == QPoly::from_ints({0, 0, 0, 1, 1}));
  CHECK(a.to_string() == "1 + q");
  CHECK((-b).to_string() == "-1 + q");
  CHECK(QPoly().to_string() == "0");
}

TEST_CASE("rational coefficients stay normalized") {
  const QPoly half = QPoly::from_coeffs({Coeff(1, 2), Coeff(3, 4)});
  CHECK(!half.is_integral());
  CHECK(half.denominator() == 4);
  CHECK(half.coeff(0) == Coeff(1, 2));
  const QPoly twice = half.scaled(Coeff(4));
  CHECK(twice.is_integral());
  CHECK(twice == QPoly::from_ints({2, 3}));
  CHECK(half + half == QPoly::from_coeffs({Coeff(1), Coeff(3, 2)}));
  CHECK((half - half).is_zero());
}

TEST_CASE("exact division") {
  CHECK(exact_div(QPoly::from_ints({1, 0, 0, -1}), QPoly::from_ints({1, -1})) == QPoly::from_ints({1, 1, 1}));
  CHECK(exact_div(QPoly::from_ints({2, 2}), QPoly(3)) == QPoly::from_coeffs({Coeff(2, 3), Coeff(2, 3)}));
  CHECK(exact_div(QPoly::from_ints({1, 3, 2}), QPoly::from_ints({1, 2})) == QPoly::from_ints({1, 1}));
  CHECK(exact_div(QPoly::from_ints({2, 3, 1}), QPoly::from_ints({2, 1})) == QPoly::from_ints({1, 1}));
  CHECK_THROWS_AS(exact_div(QPoly::from_ints({1, 1}), QPoly::from_ints({1, -1})), Error);
  try {
    exact_div(QPoly(1), QPoly());
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  try {
    exact_div(QPoly::from_ints({1, 0, 1}), QPoly::from_ints({1, 1}));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonzeroRemainder);
  }
}

TEST_CASE("division undoes multiplication") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    QPoly a = random_poly(rng, 1 + rng() % 30, -50, 50);
    QPoly b = random_poly(rng, 1 + rng() % 10, -5, 5);
    if (b.is_zero() || a.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("karatsuba agrees with schoolbook") {
  ThresholdGuard guard;
  std::mt19937 rng(11);
  for (int t = 0; t < 25; ++t) {
    const QPoly a = random_poly(rng, 1 + rng() % 400, -1000000, 1000000);
    const QPoly b = random_poly(rng, 1 + rng() % 400, -1000000, 1000000);
    set_karatsuba_threshold(1u << 30);
    const QPoly slow = a * b;
    for (std::size_t th : {2u, 5u, 16u, 64u}) {
      set_karatsuba_threshold(th);
      CHECK(a * b == slow);
    }
  }
}

TEST_CASE("multiplication is commutative, associative and distributive") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const QPoly a = random_poly(rng, 1 + rng() % 80, -9, 9);
    const QPoly b = random_poly(rng, 1 + rng() % 80, -9, 9);
    const QPoly c = random_poly(rng, 1 + rng() % 80, -9, 9);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("strided operands multiply like their compressed forms") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const QPoly a = random_poly(rng, 2 + rng() % 100, -20, 20);
    const QPoly b = random_poly(rng, 2 + rng() % 100, -20, 20);
    CHECK(substitute_power(a, 2) * substitute_power(b, 2) == substitute_power(a * b, 2));
    // Mixed strides fall back to residue classes of the finer operand.
    const QPoly c = random_poly(rng, 2 + rng() % 60, -20, 20);
    CHECK(substitute_power(a, 3) * c == substitute_power(a, 3) * c.shifted(0));
    CHECK(substitute_power(a, 3) * c.shifted(1) == (substitute_power(a, 3) * c).shifted(1));
  }
  CHECK_THROWS_AS(substitute_power(QPoly(1), 0), Error);
}

TEST_CASE("mul_binomial") {
  QPoly p(1);
  p.mul_binomial(-1, 1);
  p.mul_binomial(-1, 2);
  CHECK(p == QPoly::from_ints({1, -1, -1, 1}));
  p.mul_binomial(3, 0);
  CHECK(p == QPoly::from_ints({4, -4, -4, 4}));
}

TEST_CASE("series arithmetic and inverse") {
  const QSeries one_minus_q(QPoly::from_ints({1, -1}), 10);
  const QSeries geo = inverse(one_minus_q);
  for (std::size_t e = 0; e <= 10; ++e) CHECK(geo.coeff(e) == 1);
  CHECK((geo * one_minus_q) == QSeries::one(10));
  const QSeries two_plus_q(QPoly::from_ints({2, 1}), 12);
  CHECK(inverse(two_plus_q) * two_plus_q == QSeries::one(12));
  CHECK(inverse(two_plus_q).coeff(3) == Coeff(-1, 16));
  CHECK_THROWS_AS(inverse(QSeries(QPoly::from_ints({0, 1}), 5)), Error);
  // Mixed orders meet at the smaller one.
  const QSeries a = QSeries::from_ints({1, 1, 1}, 8);
  const QSeries b = QSeries::from_ints({1}, 3);
  CHECK((a + b).order() == 3);
}

TEST_CASE("partition numbers from 1/(q;q)_inf") {
  const QSeries p = partitions(100);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(10) == 42);
  CHECK(p.coeff(50) == 204226);
  CHECK(p.coeff(100) == 190569292);
}

TEST_CASE("first mismatch and truncation") {
  const QSeries a = QSeries::from_ints({1, 2, 3, 4}, 6);
  const QSeries b = QSeries::from_ints({1, 2, 5, 4}, 6);
  CHECK(first_mismatch(a, b) == 2u);
  CHECK(!first_mismatch(a, a));
  CHECK(a.truncated(1) == b.truncated(1));
  CHECK(a.shifted(2).coeff(2) == 1);
  CHECK(a.shifted(5).coeff(6) == 2);
  CHECK(first_mismatch(QPoly::from_ints({1, 2}), QPoly::from_ints({1, 2, 3})) == 2u);
}

TEST_CASE("series substitution keeps the order") {
  const QSeries a = QSeries::from_ints({1, 1, 1, 1}, 6);
  const QSeries s = substitute_power(a, 2);
  CHECK(s.order() == 6);
  CHECK(s.coeff(2) == 1);
  CHECK(s.coeff(3) == 0);
  CHECK(s.coeff(6) == 1);
}

TEST_CASE("div_one_minus matches multiplication by the inverse") {
  QSeries s = QSeries::from_ints({3, -1, 4, 1, -5, 9}, 20);
  QSeries t = s * inverse(QSeries(QPoly::from_ints({1, 0, 0, -1}), 20));
  s.div_one_minus(3);
  CHECK(s == t);
}

TEST_CASE("Laurent polynomials in x") {
  const XLaurentPoly x = XLaurentPoly::monomial(1, QPoly(1));
  const XLaurentPoly xinv = XLaurentPoly::monomial(-1, QPoly(1));
  const XLaurentPoly s = x + xinv;
  const XLaurentPoly sq = s * s;
  CHECK(sq.min_x_power() == -2);
  CHECK(sq.max_x_power() == 2);
  CHECK(sq.coeff(0) == QPoly(2));
  CHECK(sq.at_x_one() == QPoly(4));
  CHECK((x - x).is_zero());
  const XLaurentPoly qx = XLaurentPoly::monomial(1, QPoly::from_ints({0, 0, 0, 1}));
  CHECK(mul_truncated(qx, qx, 5).is_zero());
  CHECK(!first_mismatch(sq, s * s));
  const auto m = first_mismatch(sq, s);
  REQUIRE(m);
  CHECK(m->x_power == -2);
}

TEST_CASE("error kinds carry their names") {
  const Error e(ErrorKind::IllSpecialized, "bad");
  CHECK(e.kind() == ErrorKind::IllSpecialized);
  CHECK(std::string(e.what()) == "IllSpecialized: bad");
  CHECK(to_string(ErrorKind::ParamsOutOfRange) == "ParamsOutOfRange");
}
