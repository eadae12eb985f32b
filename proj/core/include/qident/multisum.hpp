#pragma once

#include <cstddef>
#include <functional>

#include "qident/qpoly.hpp"
#include "qident/qseries.hpp"

namespace qident::bailey {

using exact::QPoly;
using exact::QSeries;

/// A v-fold sum over n_1, ..., n_v >= 0 of
///
///   q^{b (sum_i N_i (N_i + c) + lin * n_v)} tail(n_v)
///   ---------------------------------------------------------------
///   (q^b;q^b)_{n_1} ... (q^b;q^b)_{n_{v-1}} (q^b;q^b)_{2 n_v + offset} tail_den(n_v)
///
/// with N_i = n_i + n_{i+1} + ... + n_v. tail and tail_den are polynomials in q;
/// tail_den must have constant term 1 and is optional.
struct MultisumSpec {
  long base = 1;
  int depth = 1;
  long quad_offset = 0;
  long last_linear = 0;
  long final_offset = 0;
  std::function<QPoly(long)> tail;
  std::function<QPoly(long)> tail_denominator;
};

struct MultisumStats {
  std::size_t terms = 0;   // index tuples whose contribution was computed
  std::size_t pruned = 0;  // branches cut by the exponent bound
};

/// The sum through q^order. A prefix n_1..n_k is abandoned once its partial
/// quadratic exponent exceeds order + slack; the extra slack is only useful
/// for testing that the cut is sound.
QSeries multisum_lhs(const MultisumSpec& spec, int order, int slack = 0,
                     MultisumStats* stats = nullptr);

}  // namespace qident::bailey
