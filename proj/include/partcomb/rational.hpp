#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace partcomb {

// All counting and series arithmetic is exact: arbitrary-size integers and
// rationals throughout, no floating point.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not reduce the fraction by itself.
inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }
inline std::string int_str(const Int& z) { return z.get_str(); }

}  // namespace partcomb
