#include "qident/xlaurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dense_ops.hpp"

namespace qident::exact {

XLaurentPoly::XLaurentPoly(QPoly constant) {
  coeffs_.push_back(std::move(constant));
  trim();
}

XLaurentPoly XLaurentPoly::monomial(long power, QPoly c) {
  XLaurentPoly r;
  r.min_x_ = power;
  r.coeffs_.push_back(std::move(c));
  r.trim();
  return r;
}

QPoly XLaurentPoly::coeff(long x_power) const {
  const long idx = x_power - min_x_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(idx)];
}

void XLaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_x_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) min_x_ = 0;
}

XLaurentPoly& XLaurentPoly::operator+=(const XLaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const long lo = std::min(min_x_, other.min_x_);
  const long hi = std::max(max_x_power(), other.max_x_power());
  std::vector<QPoly> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(min_x_ - lo) + i] = std::move(coeffs_[i]);
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(other.min_x_ - lo) + i] += other.coeffs_[i];
  }
  coeffs_ = std::move(out);
  min_x_ = lo;
  trim();
  return *this;
}

XLaurentPoly& XLaurentPoly::operator-=(const XLaurentPoly& other) {
  XLaurentPoly neg = other;
  for (auto& c : neg.coeffs_) c = -c;
  return *this += neg;
}

XLaurentPoly operator*(const XLaurentPoly& a, const XLaurentPoly& b) {
  return mul_truncated(a, b, -1);
}

XLaurentPoly mul_truncated(const XLaurentPoly& a, const XLaurentPoly& b, int q_order) {
  XLaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.min_x_ = a.min_x_ + b.min_x_;
  r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      QPoly prod = a.coeffs_[i] * b.coeffs_[j];
      if (q_order >= 0) {
        auto digits = prod.numerators();
        if (digits.size() > static_cast<std::size_t>(q_order) + 1) {
          digits.resize(static_cast<std::size_t>(q_order) + 1);
          prod = QPoly::from_digits(std::move(digits), prod.denominator());
        }
      }
      r.coeffs_[i + j] += prod;
    }
  }
  r.trim();
  return r;
}

XLaurentPoly XLaurentPoly::truncated_q(int order) const {
  XLaurentPoly r = *this;
  for (auto& c : r.coeffs_) {
    if (c.size() > static_cast<std::size_t>(order) + 1) {
      auto digits = c.numerators();
      digits.resize(static_cast<std::size_t>(order) + 1);
      c = QPoly::from_digits(std::move(digits), c.denominator());
    }
  }
  r.trim();
  return r;
}

QPoly XLaurentPoly::at_x_one() const {
  QPoly s;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string XLaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].to_string() << ")";
    const long p = min_x_ + static_cast<long>(i);
    if (p != 0) os << "*x^" << p;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const XLaurentPoly& p) { return os << p.to_string(); }

std::optional<XMismatch> first_mismatch(const XLaurentPoly& a, const XLaurentPoly& b) {
  if (a == b) return std::nullopt;
  const long lo = std::min(a.is_zero() ? b.min_x_power() : a.min_x_power(),
                           b.is_zero() ? a.min_x_power() : b.min_x_power());
  const long hi = std::max(a.is_zero() ? b.max_x_power() : a.max_x_power(),
                           b.is_zero() ? a.max_x_power() : b.max_x_power());
  for (long x = lo; x <= hi; ++x) {
    const QPoly ca = a.coeff(x);
    const QPoly cb = b.coeff(x);
    if (ca == cb) continue;
    const std::size_t n = std::max(ca.size(), cb.size());
    for (std::size_t e = 0; e < n; ++e) {
      if (ca.coeff(e) != cb.coeff(e)) return XMismatch{x, e};
    }
  }
  return std::nullopt;
}

}  // namespace qident::exact
