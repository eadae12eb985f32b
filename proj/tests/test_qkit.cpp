#include <doctest.h>

#include <thread>

#include "qident/character.hpp"
#include "qident/error.hpp"
#include "qident/pochhammer.hpp"
#include "qident/products.hpp"
#include "qident/qbinom.hpp"
#include "qident/theta.hpp"

using namespace qident;
using namespace qident::qkit;
using exact::QPoly;
using exact::QSeries;

namespace {

QPoly binomial_by_products(long top, long bottom) {
  return exact::exact_div(q_factorial(top), q_factorial(bottom) * q_factorial(top - bottom));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::NonzeroRemainder;
}

}  // namespace

TEST_CASE("finite Pochhammer symbols") {
  CHECK(pochhammer_finite({1, 1, 1, 2}) == QPoly::from_ints({1, -1, -1, 1}));
  CHECK(pochhammer_finite({1, 1, 1, 0}) == QPoly(1));
  // (-1;q)_2 = 2(1+q)
  CHECK(pochhammer_finite({-1, 0, 1, 2}) == QPoly::from_ints({2, 2}));
  // (1;q)_n vanishes for n >= 1
  CHECK(pochhammer_finite({1, 0, 1, 3}).is_zero());
  CHECK(q_factorial(3, 2) == exact::substitute_power(q_factorial(3), 2));
}

TEST_CASE("Euler's pentagonal series") {
  const QSeries e = pochhammer_infinite({1, 1, 1, std::nullopt}, 40);
  const std::vector<long> pent = {0, 1, 2, 5, 7, 12, 15, 22, 26, 35, 40};
  for (std::size_t n = 0; n <= 40; ++n) {
    long expect = 0;
    for (std::size_t i = 0; i < pent.size(); ++i) {
      if (pent[i] == static_cast<long>(n)) expect = (i == 0 || (i + 1) / 2 % 2 == 0) ? 1 : -1;
    }
    CHECK_MESSAGE(e.coeff(n) == expect, "n = " << n);
  }
  CHECK(kind_of([] { pochhammer_infinite({1, 0, 1, std::nullopt}, 10); }) == ErrorKind::DivergentSpec);
}

TEST_CASE("Pochhammer ratios factor as stated") {
  for (long n = 0; n <= 12; ++n) {
    const QPoly neg3 = pochhammer_finite({-1, 0, 3, n});
    const QPoly neg1 = pochhammer_finite({-1, 0, 1, n});
    CHECK(ratio_neg_one(n) == exact::exact_div(neg3, neg1));
    CHECK(ratio_odd(n) == exact::exact_div(pochhammer_finite({1, 3, 6, n}), pochhammer_finite({1, 1, 2, n})));
    CHECK(ratio_cube(n) == exact::exact_div(q_factorial(n, 3), q_factorial(n)));
  }
}

TEST_CASE("Gaussian binomials") {
  CHECK(qbinom(4, 2) == QPoly::from_ints({1, 1, 2, 1, 1}));
  CHECK(qbinom(5, 0) == QPoly(1));
  CHECK(qbinom(3, 4).is_zero());
  CHECK(qbinom(3, -1).is_zero());
  CHECK(qbinom(4, 2, 3) == exact::substitute_power(qbinom(4, 2), 3));
  for (long t = 0; t <= 20; ++t) {
    for (long m = 0; m <= t; ++m) {
      CHECK(qbinom(t, m) == binomial_by_products(t, m));
      CHECK(qbinom(t, m) == qbinom(t, t - m));
      // Value at q = 1 is the ordinary binomial.
      long ordinary = 1;
      for (long i = 1; i <= m; ++i) ordinary = ordinary * (t - m + i) / i;
      Coeff at_one = 0;
      for (std::size_t e = 0; e < qbinom(t, m).size(); ++e) at_one += qbinom(t, m).coeff(e);
      CHECK(at_one == ordinary);
    }
  }
}

TEST_CASE("binomial table tolerates concurrent readers") {
  QBinomialTable table;
  std::vector<std::thread> pool;
  std::vector<int> ok(4, 0);
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      int good = 0;
      for (long t = 30; t >= 0; --t) {
        for (long m = 0; m <= t; m += 3) good += table.get(t, m, 1 + w % 2) == qbinom(t, m, 1 + w % 2);
      }
      ok[w] = good;
    });
  }
  for (auto& th : pool) th.join();
  for (int w = 0; w < 4; ++w) CHECK(ok[w] == ok[0]);
  CHECK(ok[0] > 100);
}

TEST_CASE("mod 3 characters") {
  CHECK(legendre3(1) == 1);
  CHECK(legendre3(2) == -1);
  CHECK(legendre3(3) == 0);
  CHECK(legendre3(-1) == -1);
  CHECK(legendre3(-2) == 1);
  for (long j = -60; j <= 60; ++j) {
    CHECK(legendre3(j) == eisenstein_chi(j));
    CHECK(legendre3(j) + legendre3(j + 1) + legendre3(j + 2) == 0);
  }
}

TEST_CASE("Eisenstein integers") {
  const EisensteinInt w = EisensteinInt::omega();
  const EisensteinInt wb = EisensteinInt::omega_bar();
  CHECK(w * w * w == EisensteinInt(1, 0));
  CHECK(w * w + w + EisensteinInt(1, 0) == EisensteinInt(0, 0));
  CHECK(w.conj() == wb);
  CHECK(w.norm() == 1);
  CHECK((w - wb).norm() == 3);
  CHECK(w.pow(-1) == wb);
  const EisensteinInt x(5, 3);
  const EisensteinInt y(2, -1);
  CHECK(divide_exact(x * y, y) == x);
  CHECK(kind_of([] { divide_exact(EisensteinInt(1, 0), EisensteinInt(2, 0)); }) == ErrorKind::NonzeroRemainder);
}

TEST_CASE("theta sums") {
  // sum_j q^{j^2} = 1 + 2q + 2q^4 + 2q^9 + ...
  const QSeries t = theta_sum({1, 0, 0, 1}, {1, std::nullopt, SignRule::None}, 20);
  for (std::size_t e = 0; e <= 20; ++e) {
    const long expect = e == 0 ? 1 : (e == 1 || e == 4 || e == 9 || e == 16) ? 2 : 0;
    CHECK(t.coeff(e) == expect);
  }
  // sum (j/3) q^{j^2} vanishes.
  CHECK(theta_sum({1, 0, 0, 1}, {1, 0, SignRule::None}, 50).is_zero());
  CHECK(kind_of([] { theta_sum({1, 0, 0, 2}, {1, std::nullopt, SignRule::None}, 10); }) ==
        ErrorKind::NonIntegralExponent);
  // (j^2 + j)/2 is integral everywhere, and j(j+1)/2 - 1 goes negative.
  CHECK_NOTHROW(theta_sum({1, 1, 0, 2}, {1, 0, SignRule::None}, 10));
  CHECK(kind_of([] { theta_sum({1, 0, -1, 1}, {1, 1, SignRule::None}, 10); }) == ErrorKind::NegativeExponent);
  CHECK(kind_of([] { theta_sum({0, 1, 0, 1}, {1, 1, SignRule::None}, 10); }) == ErrorKind::InvalidExponent);
}

TEST_CASE("polynomial triple product and q-binomial theorem") {
  for (long n = 0; n <= 6; ++n) {
    for (long m = 0; m <= 6; ++m) {
      const auto [sum, prod] = triple_product_poly_sides(n, m);
      CHECK(sum == prod);
    }
  }
  for (long L = 0; L <= 10; ++L) {
    const auto [sum, prod] = qbinomial_theorem_sides(L);
    CHECK(sum == prod);
  }
  const auto [s3, p3] = triple_product_poly_sides(1, 1);
  // (1 + xq)(1 + 1/x)
  CHECK(s3.coeff(1) == QPoly::from_ints({0, 1}));
}

TEST_CASE("Jacobi triple product") {
  const auto [sum, prod] = jacobi_triple_product_sides(40);
  CHECK(sum == prod);
  CHECK(sum.at_x_one() == prod.at_x_one());
}

TEST_CASE("quintuple product") {
  for (const QuintupleSpec& s : {QuintupleSpec{6, -1, 1}, QuintupleSpec{9, 1, 2}, QuintupleSpec{9, 1, 4},
                                 QuintupleSpec{18, 1, 3}, QuintupleSpec{9, -1, 3},
                                 QuintupleSpec{15, -1, 6}}) {
    const auto [sum, prod] = quintuple_sides(s, 120);
    CHECK_MESSAGE(sum == prod, to_string(s));
  }
  CHECK(kind_of([] { quintuple_factors({9, 1, 8}); }) == ErrorKind::IllSpecialized);
  CHECK(kind_of([] { quintuple_factors({9, 1, 0}); }) == ErrorKind::IllSpecialized);
  CHECK(quintuple_factors({6, -1, 1}).size() == 5);
  CHECK(to_string(QuintupleSpec{6, -1, 1}) == "Q(q^6, -q^1)");
}
