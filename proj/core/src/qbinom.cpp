#include "qident/qbinom.hpp"

#include <mutex>

#include "qident/error.hpp"

namespace qident::qkit {

namespace {
const QPoly kZero;
}

void QBinomialTable::grow_to(long top) {
  // Caller holds the unique lock.
  while (static_cast<long>(rows_.size()) <= top) {
    const long t = static_cast<long>(rows_.size());
    std::vector<QPoly> row(static_cast<std::size_t>(t) + 1);
    row[0] = QPoly(1);
    row[static_cast<std::size_t>(t)] = QPoly(1);
    if (t >= 2) {
      const auto& prev = rows_.back();
      for (long m = 1; m < t; ++m) {
        QPoly p = prev[static_cast<std::size_t>(m)];
        p.add_shifted(prev[static_cast<std::size_t>(m - 1)], static_cast<std::size_t>(t - m));
        row[static_cast<std::size_t>(m)] = std::move(p);
      }
    }
    rows_.push_back(std::move(row));
  }
}

const QPoly& QBinomialTable::get(long top, long bottom, long base_power) {
  if (base_power < 1) throw Error(ErrorKind::InvalidExponent, "binomial base power must be >= 1");
  if (top < 0 || bottom < 0 || bottom > top) return kZero;
  {
    std::shared_lock lock(mutex_);
    if (static_cast<long>(rows_.size()) > top) {
      const QPoly& base = rows_[static_cast<std::size_t>(top)][static_cast<std::size_t>(bottom)];
      if (base_power == 1) return base;
      auto it = scaled_.find({base_power, top, bottom});
      if (it != scaled_.end()) return *it->second;
    }
  }
  std::unique_lock lock(mutex_);
  grow_to(top);
  const QPoly& base = rows_[static_cast<std::size_t>(top)][static_cast<std::size_t>(bottom)];
  if (base_power == 1) return base;
  auto& slot = scaled_[{base_power, top, bottom}];
  if (!slot) slot = std::make_unique<QPoly>(exact::substitute_power(base, base_power));
  return *slot;
}

std::size_t QBinomialTable::rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

QBinomialTable& default_qbinom_table() {
  static QBinomialTable table;
  return table;
}

}  // namespace qident::qkit
