#ifndef TORRIG_RATIONAL_HPP
#define TORRIG_RATIONAL_HPP

/*
 * Exact arithmetic primitives.
 *
 * Everything rank-deciding in torrig runs over GMP rationals; this header
 * fixes the basic aliases (integer, rational, vectors thereof) and the small
 * set of numeric helpers the rest of the library shares: floor, text
 * conversion (including exact decimal-to-rational), and integer vector
 * arithmetic for gains.
 */

#include <gmpxx.h>

#include <string>
#include <vector>

#include "torrig/errors.hpp"

namespace torrig {

using Int = mpz_class;  // arbitrary-precision integer (gains, lattice shifts)
using Rat = mpq_class;  // exact rational (coordinates, matrix entries)

using IVec = std::vector<Int>;  // integer vector, length d (a gain)
using QVec = std::vector<Rat>;  // rational vector, length d (a position)

// ---- integer (gain) vector arithmetic ----

inline IVec ivec_zero(int d) { return IVec(static_cast<std::size_t>(d), Int(0)); }

inline IVec operator+(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec operator-(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec operator-(const IVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero(const IVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

// ---- rational helpers ----

// Largest integer <= q (floor for rationals; GMP's fdiv rounds toward -inf).
inline Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

// Fractional part in [0, 1): q - floor(q).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parse "n", "-n/d", or (when allow_decimal) "-12.375" — the decimal form is
// converted exactly (12.375 = 12375/1000 canonicalized), never through a float.
Rat parse_rational(const std::string& text, bool allow_decimal = false);

}  // namespace torrig

#endif  // TORRIG_RATIONAL_HPP
