#pragma once

// Kernels over dense integer coefficient vectors shared by QPoly and QSeries.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qident/coeff.hpp"

namespace qident::exact::detail {

using Digits = std::vector<BigInt>;

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

void trim(Digits& v);

/// Product of a and b keeping only the first `limit` coefficients.
Digits multiply(std::span<const BigInt> a, std::span<const BigInt> b,
                std::size_t limit = kNoLimit);

/// Same product, forced down the schoolbook path (benchmark baseline and oracle).
Digits multiply_schoolbook(std::span<const BigInt> a, std::span<const BigInt> b,
                           std::size_t limit = kNoLimit);

/// Divides num and den by gcd(content(num), den) and makes den positive.
void normalize(Digits& num, BigInt& den);

/// out[i] += factor * src[i] over the common prefix, growing out as needed.
void add_scaled(Digits& out, std::span<const BigInt> src, const BigInt& factor,
                std::size_t offset = 0);

/// In-place multiply by (1 + c*q^e), truncating at `limit` coefficients.
void mul_binomial_factor(Digits& v, long c, std::size_t e,
                         std::size_t limit = kNoLimit);

/// Human-readable "1 - 2*q + q^3" rendering of the first `limit` terms.
std::string format_terms(const Digits& num, const BigInt& den, std::size_t limit);

}  // namespace qident::exact::detail
