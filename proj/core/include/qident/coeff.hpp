#pragma once

#include <gmpxx.h>

#include <string>

namespace qident {

/// Exact rational coefficient. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Coeff = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Coeff& c) { return c.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace qident
