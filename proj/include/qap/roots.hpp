#ifndef QAP_ROOTS_HPP
#define QAP_ROOTS_HPP

#include <vector>

#include "qap/int_poly.hpp"
#include "qap/interval.hpp"

namespace qap {

// Certified isolating disk for one root of a squarefree integer polynomial.
// Center and radius are dyadic rationals; real roots carry im == 0 exactly and
// real_root == true, non-real roots satisfy |im| > radius (strictly off-axis).
struct RootDisk {
    Rat re, im, radius;
    bool real_root = false;

    // Enclosing rectangle; exact [0,0] imaginary part for real roots.
    ComplexIv box(mpfr_prec_t prec) const;
};

struct Signature {
    int r1 = 0;  // real roots
    int r2 = 0;  // conjugate pairs
};

// All deg(P) roots as pairwise-disjoint certified disks of radius <= tol,
// ordered lexicographically by (Re, Im) ascending.  Requires P squarefree;
// rejects otherwise with the repeated-factor gcd in the message.
std::vector<RootDisk> isolate_roots(const IntPoly& p, const Rat& tol);

// Certified sub-disk of radius <= tol around the same root.  Inconsistent
// input (disk not isolating a root of p) raises inconsistency_error.
RootDisk refine_disk(const RootDisk& disk, const IntPoly& p, const Rat& tol);

// Exact (r1, r2) of a squarefree polynomial via Sturm counting.
Signature signature(const IntPoly& p);

// Interval Horner evaluation.
ComplexIv eval_box(const IntPoly& p, const ComplexIv& z);
RealIv eval_box(const IntPoly& p, const RealIv& x);

namespace detail {
// Exact value of |P(z)|^2 at a complex dyadic/rational point.
Rat eval_abs2_exact(const IntPoly& p, const Rat& zr, const Rat& zi);
// Dyadic upper bound on sqrt(q).
Rat sqrt_upper(const Rat& q);
}  // namespace detail

}  // namespace qap

#endif
