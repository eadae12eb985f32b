#include "qident/multisum.hpp"

#include <algorithm>
#include <vector>

#include "qident/error.hpp"

namespace qident::bailey {

namespace {

class Enumerator {
 public:
  Enumerator(const MultisumSpec& spec, int order, int slack, MultisumStats& stats)
      : spec_(spec), order_(order), bound_(static_cast<long>(order) + slack), stats_(stats),
        acc_(order), n_(static_cast<std::size_t>(spec.depth), 0) {}

  QSeries run() {
    descend(0, QSeries::one(order_));
    return acc_;
  }

 private:
  // 1 / (q^b;q^b)_k through q^order_.
  const QSeries& inv_factorial(long k) {
    if (inv_.empty()) inv_.push_back(QSeries::one(order_));
    while (static_cast<long>(inv_.size()) <= k) {
      QSeries next = inv_.back();
      next.div_one_minus(static_cast<std::size_t>(spec_.base * static_cast<long>(inv_.size())));
      inv_.push_back(std::move(next));
    }
    return inv_[static_cast<std::size_t>(k)];
  }

  // b * sum_{i<=k} P_i (P_i + c) where P_i = n_i + ... + n_k.
  long partial_exponent(std::size_t k) const {
    long total = 0;
    long p = 0;
    for (std::size_t i = k + 1; i-- > 0;) {
      p += n_[i];
      total += p * (p + spec_.quad_offset);
    }
    return spec_.base * total;
  }

  // prefix = 1 / ((q^b)_{n_1} ... (q^b)_{n_{k-1}}), truncated to what can still matter.
  void descend(std::size_t k, const QSeries& prefix) {
    const std::size_t last = n_.size() - 1;
    for (long n = 0;; ++n) {
      n_[k] = n;
      const long partial = partial_exponent(k);
      // Partial exponents only grow with n_k, so the first overshoot ends the loop.
      if (n > 0 && partial > bound_) {
        ++stats_.pruned;
        break;
      }
      if (k < last) {
        const int room = static_cast<int>(std::max<long>(0, order_ - partial));
        descend(k + 1, (prefix.truncated(room) * inv_factorial(n).truncated(room)));
      } else {
        leaf(prefix);
      }
    }
    n_[k] = 0;
  }

  void leaf(const QSeries& prefix) {
    const long nv = n_.back();
    const long e = partial_exponent(n_.size() - 1) + spec_.base * spec_.last_linear * nv;
    if (e < 0) throw Error(ErrorKind::NegativeExponent, "multisum term has a negative exponent");
    if (e > order_) return;
    ++stats_.terms;
    const int room = order_ - static_cast<int>(e);
    QSeries t(spec_.tail ? spec_.tail(nv) : QPoly(1), room);
    if (t.is_zero()) return;
    const long last_den = 2 * nv + spec_.final_offset;
    if (last_den < 0) throw Error(ErrorKind::ParamsOutOfRange, "negative Pochhammer length");
    t *= inv_factorial(last_den).truncated(room);
    if (n_.size() > 1) t *= prefix.truncated(room);
    if (spec_.tail_denominator) t *= exact::inverse(QSeries(spec_.tail_denominator(nv), room));
    acc_ += QSeries(t.to_poly().shifted(static_cast<std::size_t>(e)), order_);
  }

  const MultisumSpec& spec_;
  int order_;
  long bound_;
  MultisumStats& stats_;
  QSeries acc_;
  std::vector<long> n_;
  std::vector<QSeries> inv_;
};

}  // namespace

QSeries multisum_lhs(const MultisumSpec& spec, int order, int slack, MultisumStats* stats) {
  if (spec.base < 1) throw Error(ErrorKind::InvalidExponent, "multisum base must be >= 1");
  if (spec.depth < 1) throw Error(ErrorKind::ParamsOutOfRange, "multisum depth must be >= 1");
  if (order < 0 || slack < 0) throw Error(ErrorKind::ParamsOutOfRange, "order and slack must be >= 0");
  if (spec.quad_offset < 0 || spec.last_linear < 0) {
    throw Error(ErrorKind::ParamsOutOfRange, "multisum exponents must be nondecreasing");
  }
  MultisumStats local;
  Enumerator en(spec, order, slack, stats ? *stats : local);
  return en.run();
}

}  // namespace qident::bailey
