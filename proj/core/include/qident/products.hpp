#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qident/pochhammer.hpp"
#include "qident/qseries.hpp"
#include "qident/xlaurent.hpp"

namespace qident::qkit {

using exact::XLaurentPoly;

/// Finite two-parameter Jacobi triple product:
///   sum_{i=-n}^{m} q^{i^2} x^i [n+m choose n+i]_{q^2}
///     = (-q/x; q^2)_n (-q x; q^2)_m.
/// Returns {sum side, product side}.
std::pair<XLaurentPoly, XLaurentPoly> triple_product_poly_sides(long n, long m);

/// sum_{i=0}^{L} q^{i^2} x^i [L choose i]_{q^2} and (-x q; q^2)_L.
std::pair<XLaurentPoly, XLaurentPoly> qbinomial_theorem_sides(long L);

/// sum_i q^{i^2} x^i and (-q/x, -q x, q^2; q^2)_inf, both truncated at q^order.
std::pair<XLaurentPoly, XLaurentPoly> jacobi_triple_product_sides(int order);

/// Q(q^A, z_sign * q^B) where
///   Q(q, z) = (q, -z, -q/z; q)_inf (q/z^2, z^2 q; q^2)_inf.
struct QuintupleSpec {
  long A = 1;
  int z_sign = 1;
  long B = 1;

  friend auto operator<=>(const QuintupleSpec&, const QuintupleSpec&) = default;
};

std::string to_string(const QuintupleSpec& s);

/// The five infinite-product factors of the specialization. Throws
/// IllSpecialized when any factor has a non-positive leading exponent.
std::vector<PochhammerSpec> quintuple_factors(const QuintupleSpec& s);

QSeries quintuple_product(const QuintupleSpec& s, int order);

/// sum_k (-1)^k q^{A(3k^2-k)/2} z^{3k} (1 + z q^{A k}) with z = z_sign q^B.
QSeries quintuple_sum(const QuintupleSpec& s, int order);

/// {sum side, product side}.
std::pair<QSeries, QSeries> quintuple_sides(const QuintupleSpec& s, int order);

}  // namespace qident::qkit
