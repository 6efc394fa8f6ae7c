#ifndef QAP_RATIONAL_HPP
#define QAP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "qap/errors.hpp"

namespace qap {

using Int = mpz_class;
using Rat = mpq_class;  // kept canonical (reduced, positive denominator) by construction

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// q^e for integer e; e < 0 requires q != 0.
inline Rat pow_rat(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0 && e < 0) throw domain_error("zero raised to negative power");
    Rat base = q;
    if (e < 0) {
        base = Rat(q.get_den(), q.get_num());
        base.canonicalize();
        e = -e;
    }
    Rat acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Parses "p", "p/q", or a decimal-free integer string; throws on malformed input.
Rat parse_rat(const std::string& text);

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace qap

#endif
