#pragma once

#include <gmpxx.h>

#include <string>

namespace g2w {

// Exact rationals backed by GMP; mpq_class keeps lowest terms with q > 0.
using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace g2w
