#include "qap/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "qap/errors.hpp"

namespace qap {

RealIv::RealIv(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealIv::RealIv(const RealIv& o) {
    mpfr_init2(lo_, o.prec());
    mpfr_init2(hi_, o.prec());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealIv::RealIv(RealIv&& o) noexcept {
    mpfr_init2(lo_, o.prec());
    mpfr_init2(hi_, o.prec());
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RealIv& RealIv::operator=(const RealIv& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec());
        mpfr_set_prec(hi_, o.prec());
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

RealIv& RealIv::operator=(RealIv&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

RealIv::~RealIv() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealIv RealIv::from_q(const Rat& q, mpfr_prec_t prec) {
    RealIv r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealIv RealIv::from_z(const Int& z, mpfr_prec_t prec) {
    RealIv r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealIv RealIv::from_long(long v, mpfr_prec_t prec) {
    RealIv r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RealIv RealIv::from_endpoints_q(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    RealIv r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealIv RealIv::pi(mpfr_prec_t prec) {
    RealIv r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

bool RealIv::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool RealIv::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealIv::is_negative() const { return mpfr_sgn(hi_) < 0; }
bool RealIv::is_point() const { return mpfr_equal_p(lo_, hi_); }

bool RealIv::contains_q(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

Rat RealIv::lo_q() const {
    if (!mpfr_number_p(lo_)) throw detail::retry_precision{};
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, lo_);
    Rat r(q);
    mpq_clear(q);
    return r;
}

Rat RealIv::hi_q() const {
    if (!mpfr_number_p(hi_)) throw detail::retry_precision{};
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, hi_);
    Rat r(q);
    mpq_clear(q);
    return r;
}

double RealIv::mid_d() const {
    double a = mpfr_get_d(lo_, MPFR_RNDN), b = mpfr_get_d(hi_, MPFR_RNDN);
    return 0.5 * (a + b);
}

double RealIv::wid_d() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

std::string RealIv::str(int digits) const {
    return "[" + decimal_lo(*this, digits) + ", " + decimal_hi(*this, digits) + "]";
}

namespace {
void check_finite(const RealIv& r) {
    if (!mpfr_number_p(r.lo()) || !mpfr_number_p(r.hi())) throw detail::retry_precision{};
}
}  // namespace

RealIv add(const RealIv& a, const RealIv& b) {
    RealIv r(std::max(a.prec(), b.prec()));
    mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RealIv sub(const RealIv& a, const RealIv& b) {
    RealIv r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

RealIv mul(const RealIv& a, const RealIv& b) {
    const mpfr_prec_t p = std::max(a.prec(), b.prec());
    RealIv r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_srcptr as[2] = {a.lo(), a.hi()};
    const mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RealIv div(const RealIv& a, const RealIv& b) {
    if (b.contains_zero()) throw detail::retry_precision{};
    const mpfr_prec_t p = std::max(a.prec(), b.prec());
    RealIv r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_srcptr as[2] = {a.lo(), a.hi()};
    const mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    check_finite(r);
    return r;
}

RealIv neg(const RealIv& a) {
    RealIv r(a.prec());
    mpfr_neg(r.lo_mut(), a.hi(), MPFR_RNDD);
    mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
    return r;
}

RealIv abs_iv(const RealIv& a) {
    RealIv r(a.prec());
    if (mpfr_sgn(a.lo()) >= 0) return a;
    if (mpfr_sgn(a.hi()) <= 0) return neg(a);
    // straddles zero
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_t t;
    mpfr_init2(t, a.prec());
    mpfr_neg(t, a.lo(), MPFR_RNDU);
    if (mpfr_cmp(t, a.hi()) > 0)
        mpfr_set(r.hi_mut(), t, MPFR_RNDU);
    else
        mpfr_set(r.hi_mut(), a.hi(), MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RealIv square(const RealIv& a) {
    RealIv b = abs_iv(a);
    RealIv r(a.prec());
    mpfr_mul(r.lo_mut(), b.lo(), b.lo(), MPFR_RNDD);
    mpfr_mul(r.hi_mut(), b.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RealIv sqrt_iv(const RealIv& a) {
    if (mpfr_sgn(a.hi()) < 0) throw detail::retry_precision{};
    RealIv r(a.prec());
    if (mpfr_sgn(a.lo()) <= 0)
        mpfr_set_zero(r.lo_mut(), 1);
    else
        mpfr_sqrt(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

RealIv log_iv(const RealIv& a) {
    if (mpfr_sgn(a.lo()) <= 0) throw detail::retry_precision{};
    RealIv r(a.prec());
    mpfr_log(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_log(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

RealIv exp_iv(const RealIv& a) {
    RealIv r(a.prec());
    mpfr_exp(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_exp(r.hi_mut(), a.hi(), MPFR_RNDU);
    check_finite(r);
    return r;
}

namespace {
// Is some x = k*pi + offset (k integer) inside [lo, hi]?  offset in {pi/2, -pi/2, 0, pi...}
// handled by passing multiples: we test presence of points of the form (2k+1)*pi/2 etc.
// For sin/cos we need multiples of pi shifted by pi/2.  Conservative rational check via
// double arithmetic is unsound; instead, use mpfr with a margin of one ulp and accept
// a slightly widened answer (the endpoints are already included, so widening is sound).
bool contains_multiple(const RealIv& a, double offset_halfpis) {
    // points t_k = (offset_halfpis + 2k) * (pi/2); test if any lies in [lo,hi]
    mpfr_prec_t p = a.prec() + 16;
    mpfr_t halfpi, t, k;
    mpfr_inits2(p, halfpi, t, k, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(halfpi, MPFR_RNDN);
    mpfr_div_ui(halfpi, halfpi, 2, MPFR_RNDN);
    // k_min = ceil((lo/halfpi - offset)/2), test t at k_min
    mpfr_div(t, a.lo(), halfpi, MPFR_RNDD);
    mpfr_sub_d(t, t, offset_halfpis, MPFR_RNDD);
    mpfr_div_ui(t, t, 2, MPFR_RNDD);
    mpfr_ceil(k, t);
    // candidate = (offset + 2k) * halfpi
    mpfr_mul_ui(k, k, 2, MPFR_RNDN);
    mpfr_add_d(k, k, offset_halfpis, MPFR_RNDN);
    mpfr_mul(t, k, halfpi, MPFR_RNDN);
    bool inside = mpfr_cmp(t, a.hi()) <= 0 && mpfr_cmp(t, a.lo()) >= 0;
    // one-ulp slack: if extremely close to hi, count it in (sound: only widens)
    if (!inside) {
        mpfr_t diff;
        mpfr_init2(diff, p);
        mpfr_sub(diff, t, a.hi(), MPFR_RNDN);
        mpfr_abs(diff, diff, MPFR_RNDN);
        mpfr_mul_2si(diff, diff, static_cast<long>(p) - 8, MPFR_RNDN);
        if (mpfr_cmpabs(diff, a.hi()) < 0) inside = true;
        mpfr_clear(diff);
    }
    mpfr_clears(halfpi, t, k, static_cast<mpfr_ptr>(nullptr));
    return inside;
}

RealIv trig_iv(const RealIv& a, bool is_sin) {
    const mpfr_prec_t p = a.prec();
    RealIv r(p);
    // width >= 2*pi -> [-1, 1]
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, a.hi(), a.lo(), MPFR_RNDU);
    bool whole = mpfr_cmp_d(w, 6.2831853071795865) >= 0;
    mpfr_clear(w);
    if (whole) {
        mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
        mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
        return r;
    }
    mpfr_t v1d, v1u, v2d, v2u;
    mpfr_inits2(p, v1d, v1u, v2d, v2u, static_cast<mpfr_ptr>(nullptr));
    if (is_sin) {
        mpfr_sin(v1d, a.lo(), MPFR_RNDD);
        mpfr_sin(v1u, a.lo(), MPFR_RNDU);
        mpfr_sin(v2d, a.hi(), MPFR_RNDD);
        mpfr_sin(v2u, a.hi(), MPFR_RNDU);
    } else {
        mpfr_cos(v1d, a.lo(), MPFR_RNDD);
        mpfr_cos(v1u, a.lo(), MPFR_RNDU);
        mpfr_cos(v2d, a.hi(), MPFR_RNDD);
        mpfr_cos(v2u, a.hi(), MPFR_RNDU);
    }
    mpfr_min(r.lo_mut(), v1d, v2d, MPFR_RNDD);
    mpfr_max(r.hi_mut(), v1u, v2u, MPFR_RNDU);
    // interior extrema: sin peaks at pi/2 + 2k*pi, troughs at -pi/2 + 2k*pi;
    // cos peaks at 2k*pi, troughs at pi + 2k*pi.
    double peak_off = is_sin ? 1.0 : 0.0;
    double trough_off = is_sin ? 3.0 : 2.0;
    if (contains_multiple(a, peak_off)) mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
    if (contains_multiple(a, trough_off)) mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
    mpfr_clears(v1d, v1u, v2d, v2u, static_cast<mpfr_ptr>(nullptr));
    return r;
}
}  // namespace

RealIv sin_iv(const RealIv& a) { return trig_iv(a, true); }
RealIv cos_iv(const RealIv& a) { return trig_iv(a, false); }

RealIv atan2_iv(const RealIv& y, const RealIv& x) {
    const mpfr_prec_t p = std::max(y.prec(), x.prec());
    if (x.contains_zero() && y.contains_zero()) throw detail::retry_precision{};
    // Box touching the branch cut (x <= 0 possible and y straddles 0): full range.
    if (mpfr_sgn(x.lo()) <= 0 && y.contains_zero()) {
        RealIv r = RealIv::pi(p);
        RealIv out(p);
        mpfr_neg(out.lo_mut(), r.hi(), MPFR_RNDD);
        mpfr_set(out.hi_mut(), r.hi(), MPFR_RNDU);
        return out;
    }
    // atan2 is monotone in each argument on a box avoiding the cut, so the
    // extrema are attained at corners.
    RealIv r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_srcptr ys[2] = {y.lo(), y.hi()};
    const mpfr_srcptr xs[2] = {x.lo(), x.hi()};
    bool first = true;
    for (auto yy : ys)
        for (auto xx : xs) {
            mpfr_atan2(t, yy, xx, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
            mpfr_atan2(t, yy, xx, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RealIv max_iv(const RealIv& a, const RealIv& b) {
    RealIv r(std::max(a.prec(), b.prec()));
    mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RealIv min_iv(const RealIv& a, const RealIv& b) {
    RealIv r(std::max(a.prec(), b.prec()));
    mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RealIv max_with_q(const RealIv& a, const Rat& q) { return max_iv(a, RealIv::from_q(q, a.prec())); }

RealIv hull(const RealIv& a, const RealIv& b) {
    RealIv r(std::max(a.prec(), b.prec()));
    mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RealIv pow_iv(const RealIv& a, long e) {
    if (e == 0) return RealIv::from_long(1, a.prec());
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RealIv acc = RealIv::from_long(1, a.prec());
    RealIv base = a;
    while (true) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n == 0) break;
        base = mul(base, base);
    }
    if (invert) acc = div(RealIv::from_long(1, a.prec()), acc);
    return acc;
}

RealIv widen(const RealIv& a, mpfr_prec_t prec) {
    RealIv r(prec);
    mpfr_set(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

bool certainly_lt(const RealIv& a, const RealIv& b) { return mpfr_cmp(a.hi(), b.lo()) < 0; }
bool certainly_le(const RealIv& a, const RealIv& b) { return mpfr_cmp(a.hi(), b.lo()) <= 0; }
bool certainly_lt_q(const RealIv& a, const Rat& q) { return mpfr_cmp_q(a.hi(), q.get_mpq_t()) < 0; }
bool certainly_gt_q(const RealIv& a, const Rat& q) { return mpfr_cmp_q(a.lo(), q.get_mpq_t()) > 0; }
bool certainly_ge_q(const RealIv& a, const Rat& q) { return mpfr_cmp_q(a.lo(), q.get_mpq_t()) >= 0; }
bool overlaps(const RealIv& a, const RealIv& b) {
    return mpfr_cmp(a.hi(), b.lo()) >= 0 && mpfr_cmp(b.hi(), a.lo()) >= 0;
}

Rat round_down_to_rat(const RealIv& a) { return a.lo_q(); }

namespace {
std::string decimal_of(const mpfr_t v, int digits, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(v)) return "0";
    if (!mpfr_number_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v, rnd);
    std::string mant(s);
    mpfr_free_str(s);
    bool negative = !mant.empty() && mant[0] == '-';
    std::string body = negative ? mant.substr(1) : mant;
    std::ostringstream os;
    if (negative) os << "-";
    os << body.substr(0, 1);
    if (body.size() > 1) os << "." << body.substr(1);
    os << "e" << (e - 1);
    return os.str();
}
}  // namespace

std::string decimal_lo(const RealIv& a, int digits) { return decimal_of(a.lo(), digits, MPFR_RNDD); }
std::string decimal_hi(const RealIv& a, int digits) { return decimal_of(a.hi(), digits, MPFR_RNDU); }

ComplexIv add(const ComplexIv& a, const ComplexIv& b) { return {add(a.re, b.re), add(a.im, b.im)}; }
ComplexIv sub(const ComplexIv& a, const ComplexIv& b) { return {sub(a.re, b.re), sub(a.im, b.im)}; }

ComplexIv mul(const ComplexIv& a, const ComplexIv& b) {
    return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
}

ComplexIv div(const ComplexIv& a, const ComplexIv& b) {
    RealIv n2 = norm2(b);
    ComplexIv num = mul(a, conj(b));
    return {div(num.re, n2), div(num.im, n2)};
}

ComplexIv neg(const ComplexIv& a) { return {neg(a.re), neg(a.im)}; }
ComplexIv conj(const ComplexIv& a) { return {a.re, neg(a.im)}; }
ComplexIv scale(const ComplexIv& a, const RealIv& k) { return {mul(a.re, k), mul(a.im, k)}; }

RealIv norm2(const ComplexIv& a) { return add(square(a.re), square(a.im)); }
RealIv abs_iv(const ComplexIv& a) { return sqrt_iv(norm2(a)); }

bool disjoint(const ComplexIv& a, const ComplexIv& b) {
    return !overlaps(a.re, b.re) || !overlaps(a.im, b.im);
}

bool contains(const ComplexIv& outer, const ComplexIv& inner) {
    return mpfr_cmp(outer.re.lo(), inner.re.lo()) <= 0 && mpfr_cmp(outer.re.hi(), inner.re.hi()) >= 0 &&
           mpfr_cmp(outer.im.lo(), inner.im.lo()) <= 0 && mpfr_cmp(outer.im.hi(), inner.im.hi()) >= 0;
}

std::string ComplexIv::str(int digits) const { return re.str(digits) + " + " + im.str(digits) + "*I"; }

}  // namespace qap
