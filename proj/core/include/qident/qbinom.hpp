#pragma once

#include <deque>
#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "qident/qpoly.hpp"

namespace qident::qkit {

using exact::QPoly;

/// Memo of Gaussian binomials, built by the Pascal-type recurrence
///   [T choose m] = [T-1 choose m] + q^{T-m} [T-1 choose m-1].
/// Entries are never evicted, so returned references stay valid for the
/// lifetime of the table. Safe for concurrent use.
class QBinomialTable {
 public:
  /// [top choose bottom] in the variable q^base_power; the zero polynomial
  /// whenever bottom < 0 or bottom > top.
  const QPoly& get(long top, long bottom, long base_power = 1);

  /// Number of base-q rows materialized so far.
  std::size_t rows() const;

 private:
  void grow_to(long top);

  mutable std::shared_mutex mutex_;
  std::deque<std::vector<QPoly>> rows_;
  std::map<std::tuple<long, long, long>, std::unique_ptr<QPoly>> scaled_;
};

/// Process-wide table used by qbinom().
QBinomialTable& default_qbinom_table();

inline const QPoly& qbinom(long top, long bottom, long base_power = 1) {
  return default_qbinom_table().get(top, bottom, base_power);
}

}  // namespace qident::qkit
