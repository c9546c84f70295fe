#pragma once

#include <gmpxx.h>

#include <string>

namespace clusterkit {

// Arbitrary-precision integer. Rank-2 walks outside finite type grow
// coefficients past 64 bits within a handful of mutations, so everything
// coefficient-valued goes through this alias.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

} // namespace clusterkit
