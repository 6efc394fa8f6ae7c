#ifndef QAP_INTERVAL_HPP
#define QAP_INTERVAL_HPP

#include <mpfr.h>

#include <string>

#include "qap/rational.hpp"

namespace qap {

// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
// Operations that cannot produce a finite certified enclosure at the current
// precision throw detail::retry_precision, which precision ladders catch.
class RealIv {
  public:
    explicit RealIv(mpfr_prec_t prec = 64);
    RealIv(const RealIv& o);
    RealIv(RealIv&& o) noexcept;
    RealIv& operator=(const RealIv& o);
    RealIv& operator=(RealIv&& o) noexcept;
    ~RealIv();

    static RealIv from_q(const Rat& q, mpfr_prec_t prec);
    static RealIv from_z(const Int& z, mpfr_prec_t prec);
    static RealIv from_long(long v, mpfr_prec_t prec);
    static RealIv from_endpoints_q(const Rat& lo, const Rat& hi, mpfr_prec_t prec);
    static RealIv pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    mpfr_t& lo_mut() { return lo_; }  // internal: callers must keep lo <= hi
    mpfr_t& hi_mut() { return hi_; }

    bool contains_zero() const;
    bool is_positive() const;        // lo > 0
    bool is_negative() const;        // hi < 0
    bool is_point() const;           // lo == hi
    bool contains_q(const Rat& q) const;

    Rat lo_q() const;  // exact endpoint (MPFR values are dyadic)
    Rat hi_q() const;
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const;
    double wid_d() const;  // upper bound on hi - lo

    std::string str(int digits = 8) const;

  private:
    mpfr_t lo_, hi_;
};

RealIv add(const RealIv& a, const RealIv& b);
RealIv sub(const RealIv& a, const RealIv& b);
RealIv mul(const RealIv& a, const RealIv& b);
RealIv div(const RealIv& a, const RealIv& b);  // b must exclude 0
RealIv neg(const RealIv& a);
RealIv abs_iv(const RealIv& a);
RealIv square(const RealIv& a);
RealIv sqrt_iv(const RealIv& a);  // a.hi must be >= 0; lo clamped at 0
RealIv log_iv(const RealIv& a);   // requires a.lo > 0
RealIv exp_iv(const RealIv& a);
RealIv sin_iv(const RealIv& a);
RealIv cos_iv(const RealIv& a);
RealIv atan2_iv(const RealIv& y, const RealIv& x);  // enclosure of principal arg
RealIv max_iv(const RealIv& a, const RealIv& b);
RealIv min_iv(const RealIv& a, const RealIv& b);
RealIv max_with_q(const RealIv& a, const Rat& q);
RealIv hull(const RealIv& a, const RealIv& b);
RealIv pow_iv(const RealIv& a, long e);  // integer exponent; e<0 needs 0 excluded
RealIv widen(const RealIv& a, mpfr_prec_t prec);

bool certainly_lt(const RealIv& a, const RealIv& b);   // sup a < inf b
bool certainly_le(const RealIv& a, const RealIv& b);   // sup a <= inf b
bool certainly_lt_q(const RealIv& a, const Rat& q);
bool certainly_gt_q(const RealIv& a, const Rat& q);
bool certainly_ge_q(const RealIv& a, const Rat& q);
bool overlaps(const RealIv& a, const RealIv& b);

// Largest dyadic rational <= lo (exact) — for rounding certified lower bounds
// down to machine-checkable rationals.
Rat round_down_to_rat(const RealIv& a);

// Decimal string of one endpoint with directed rounding (sound decimal output).
std::string decimal_lo(const RealIv& a, int digits);
std::string decimal_hi(const RealIv& a, int digits);

// Rectangular complex interval.
struct ComplexIv {
    RealIv re, im;

    ComplexIv() = default;
    ComplexIv(RealIv r, RealIv i) : re(std::move(r)), im(std::move(i)) {}
    static ComplexIv from_q(const Rat& r, const Rat& i, mpfr_prec_t prec) {
        return {RealIv::from_q(r, prec), RealIv::from_q(i, prec)};
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    std::string str(int digits = 8) const;
};

ComplexIv add(const ComplexIv& a, const ComplexIv& b);
ComplexIv sub(const ComplexIv& a, const ComplexIv& b);
ComplexIv mul(const ComplexIv& a, const ComplexIv& b);
ComplexIv div(const ComplexIv& a, const ComplexIv& b);  // |b|^2 must exclude 0
ComplexIv neg(const ComplexIv& a);
ComplexIv conj(const ComplexIv& a);
ComplexIv scale(const ComplexIv& a, const RealIv& k);
RealIv norm2(const ComplexIv& a);  // re^2 + im^2
RealIv abs_iv(const ComplexIv& a);
bool disjoint(const ComplexIv& a, const ComplexIv& b);
bool contains(const ComplexIv& outer, const ComplexIv& inner);

}  // namespace qap

#endif
