#include "dense_ops.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "qident/qpoly.hpp"

namespace qident::exact {

namespace {
std::atomic<std::size_t> g_karatsuba_threshold{64};
}

std::size_t karatsuba_threshold() noexcept { return g_karatsuba_threshold.load(); }

void set_karatsuba_threshold(std::size_t terms) noexcept {
  g_karatsuba_threshold.store(std::max<std::size_t>(terms, 2));
}

}  // namespace qident::exact

namespace qident::exact::detail {

namespace {

using Span = std::span<const BigInt>;

std::size_t count_nonzero(Span s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](const BigInt& z) { return sgn(z) != 0; }));
}

// out[k] += sum a[i] b[k-i] for k < out.size()
void schoolbook_into(Span a, Span b, BigInt* out, std::size_t out_len) {
  // The sparser operand drives the outer loop so its zeros are skipped.
  if (count_nonzero(a) > count_nonzero(b)) std::swap(a, b);
  for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t jmax = std::min(b.size(), out_len - i);
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
}

void add_into(Digits& dst, Span src) {
  if (dst.size() < src.size()) dst.resize(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
}

// out (length a.size()+b.size()-1, pre-zeroed or accumulating) += a*b
void karatsuba_into(Span a, Span b, BigInt* out, std::size_t threshold) {
  if (a.empty() || b.empty()) return;
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (nb < threshold) {
    schoolbook_into(a, b, out, na + nb - 1);
    return;
  }
  const std::size_t m = (na + 1) / 2;
  if (nb <= m) {
    // Unbalanced: slice the long operand into nb-sized blocks.
    for (std::size_t off = 0; off < na; off += nb) {
      const std::size_t len = std::min(nb, na - off);
      karatsuba_into(a.subspan(off, len), b, out + off, threshold);
    }
    return;
  }
  Span a0 = a.subspan(0, m), a1 = a.subspan(m);
  Span b0 = b.subspan(0, m), b1 = b.subspan(m);

  Digits z0(2 * m - 1);
  karatsuba_into(a0, b0, z0.data(), threshold);
  Digits z2(a1.size() + b1.size() - 1);
  karatsuba_into(a1, b1, z2.data(), threshold);

  Digits sa(a0.begin(), a0.end());
  add_into(sa, a1);
  Digits sb(b0.begin(), b0.end());
  add_into(sb, b1);
  Digits z1(sa.size() + sb.size() - 1);
  karatsuba_into(sa, sb, z1.data(), threshold);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + m] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * m] += z2[i];
}

// Largest s such that every nonzero coefficient sits at a multiple of s.
std::size_t support_stride(Span s) {
  std::size_t g = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (sgn(s[i]) != 0) {
      g = std::gcd(g, i);
      if (g == 1) return 1;
    }
  }
  return g == 0 ? 1 : g;
}

Digits multiply_dense(Span a, Span b, std::size_t limit) {
  const std::size_t full = a.size() + b.size() - 1;
  const std::size_t n = std::min(full, limit);
  if (n == 0) return {};
  a = a.first(std::min(a.size(), n));
  b = b.first(std::min(b.size(), n));
  const std::size_t threshold = karatsuba_threshold();
  Digits out;
  if (std::min(a.size(), b.size()) < threshold) {
    out.resize(n);
    schoolbook_into(a, b, out.data(), n);
  } else {
    out.resize(a.size() + b.size() - 1);
    karatsuba_into(a, b, out.data(), threshold);
    out.resize(n);
  }
  return out;
}

}  // namespace

void trim(Digits& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

Digits multiply(Span a, Span b, std::size_t limit) {
  if (a.empty() || b.empty() || limit == 0) return {};
  // Polynomials in q^s (e.g. anything in base q^2) are multiplied in compressed
  // form, one residue class of the other operand at a time.
  std::size_t sa = support_stride(a);
  std::size_t sb = support_stride(b);
  if (sb > sa) {
    std::swap(a, b);
    std::swap(sa, sb);
  }
  const std::size_t s = sa;
  if (s < 2 || a.size() < 2 * s) return multiply_dense(a, b, limit);

  Digits ac;
  for (std::size_t i = 0; i < a.size(); i += s) ac.push_back(a[i]);
  const std::size_t full = a.size() + b.size() - 1;
  Digits out(std::min(full, limit));
  for (std::size_t r = 0; r < s && r < b.size(); ++r) {
    Digits br;
    for (std::size_t i = r; i < b.size(); i += s) br.push_back(b[i]);
    bool any = std::any_of(br.begin(), br.end(), [](const BigInt& z) { return sgn(z) != 0; });
    if (!any) continue;
    std::size_t sub_limit = kNoLimit;
    if (limit != kNoLimit) sub_limit = limit > r ? (limit - r + s - 1) / s : 0;
    Digits pr = multiply_dense(ac, br, sub_limit);
    for (std::size_t k = 0; k < pr.size(); ++k) {
      const std::size_t e = r + k * s;
      if (e < out.size()) out[e] = std::move(pr[k]);
    }
  }
  return out;
}

Digits multiply_schoolbook(Span a, Span b, std::size_t limit) {
  if (a.empty() || b.empty() || limit == 0) return {};
  const std::size_t n = std::min(a.size() + b.size() - 1, limit);
  Digits out(n);
  schoolbook_into(a, b, out.data(), n);
  return out;
}

void normalize(Digits& num, BigInt& den) {
  trim(num);
  if (sgn(den) < 0) {
    den = -den;
    for (auto& c : num) c = -c;
  }
  if (num.empty()) {
    den = 1;
    return;
  }
  if (den == 1) return;
  BigInt g = den;
  for (const auto& c : num) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
}

void add_scaled(Digits& out, Span src, const BigInt& factor, std::size_t offset) {
  if (out.size() < src.size() + offset) out.resize(src.size() + offset);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (sgn(src[i]) == 0) continue;
    mpz_addmul(out[i + offset].get_mpz_t(), src[i].get_mpz_t(), factor.get_mpz_t());
  }
}

void mul_binomial_factor(Digits& v, long c, std::size_t e, std::size_t limit) {
  if (c == 0) return;
  if (e == 0) {
    for (auto& x : v) x *= (1 + c);
    return;
  }
  std::size_t n = v.size() + e;
  if (limit != kNoLimit) n = std::min(n, limit);
  const std::size_t old = v.size();
  v.resize(n);
  // Walk downward so each source coefficient is read before it is overwritten.
  for (std::size_t i = n; i-- > e;) {
    const std::size_t src = i - e;
    if (src < old && sgn(v[src]) != 0) {
      if (c == 1) {
        v[i] += v[src];
      } else if (c == -1) {
        v[i] -= v[src];
      } else {
        v[i] += c * v[src];
      }
    }
  }
}

}  // namespace qident::exact::detail
