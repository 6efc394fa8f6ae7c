#include "qap/roots.hpp"

#include <algorithm>
#include <complex>
#include <cstdlib>

#include "qap/errors.hpp"

namespace qap {

namespace {

constexpr mpfr_prec_t kPrecStart = 128;
constexpr mpfr_prec_t kPrecCap = 8192;

// Midpoint complex arithmetic on MPFR, round-to-nearest; approximation only,
// every certified statement goes through exact rational arithmetic below.
class CplxF {
  public:
    explicit CplxF(mpfr_prec_t p) {
        mpfr_init2(re_, p);
        mpfr_init2(im_, p);
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
    }
    CplxF(const CplxF& o) {
        mpfr_init2(re_, mpfr_get_prec(o.re_));
        mpfr_init2(im_, mpfr_get_prec(o.im_));
        mpfr_set(re_, o.re_, MPFR_RNDN);
        mpfr_set(im_, o.im_, MPFR_RNDN);
    }
    CplxF& operator=(const CplxF& o) {
        if (this != &o) {
            mpfr_set_prec(re_, mpfr_get_prec(o.re_));
            mpfr_set_prec(im_, mpfr_get_prec(o.im_));
            mpfr_set(re_, o.re_, MPFR_RNDN);
            mpfr_set(im_, o.im_, MPFR_RNDN);
        }
        return *this;
    }
    ~CplxF() {
        mpfr_clear(re_);
        mpfr_clear(im_);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(re_); }
    mpfr_ptr re() { return re_; }
    mpfr_ptr im() { return im_; }
    mpfr_srcptr re() const { return re_; }
    mpfr_srcptr im() const { return im_; }

    void set_q(const Rat& r, const Rat& i) {
        mpfr_set_q(re_, r.get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(im_, i.get_mpq_t(), MPFR_RNDN);
    }
    void set_d(double r, double i) {
        mpfr_set_d(re_, r, MPFR_RNDN);
        mpfr_set_d(im_, i, MPFR_RNDN);
    }
    Rat re_q() const {
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, re_);
        Rat r(q);
        mpq_clear(q);
        return r;
    }
    Rat im_q() const {
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, im_);
        Rat r(q);
        mpq_clear(q);
        return r;
    }
    double abs_d() const {
        mpfr_t t, u;
        mpfr_init2(t, 64);
        mpfr_init2(u, 64);
        mpfr_hypot(t, re_, im_, MPFR_RNDN);
        double d = mpfr_get_d(t, MPFR_RNDN);
        mpfr_clear(t);
        mpfr_clear(u);
        return d;
    }

  private:
    mpfr_t re_, im_;
};

void cadd(CplxF& r, const CplxF& a, const CplxF& b) {
    mpfr_add(r.re(), a.re(), b.re(), MPFR_RNDN);
    mpfr_add(r.im(), a.im(), b.im(), MPFR_RNDN);
}
void csub(CplxF& r, const CplxF& a, const CplxF& b) {
    mpfr_sub(r.re(), a.re(), b.re(), MPFR_RNDN);
    mpfr_sub(r.im(), a.im(), b.im(), MPFR_RNDN);
}
void cmul(CplxF& r, const CplxF& a, const CplxF& b) {
    mpfr_t t1, t2;
    mpfr_inits2(r.prec(), t1, t2, static_cast<mpfr_ptr>(nullptr));
    mpfr_mul(t1, a.re(), b.re(), MPFR_RNDN);
    mpfr_mul(t2, a.im(), b.im(), MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_mul(t2, a.re(), b.im(), MPFR_RNDN);
    mpfr_set(r.im(), t2, MPFR_RNDN);
    mpfr_mul(t2, a.im(), b.re(), MPFR_RNDN);
    mpfr_add(r.im(), r.im(), t2, MPFR_RNDN);
    mpfr_set(r.re(), t1, MPFR_RNDN);
    mpfr_clears(t1, t2, static_cast<mpfr_ptr>(nullptr));
}
void cdiv(CplxF& r, const CplxF& a, const CplxF& b) {
    mpfr_t n, t1, t2, rr, ri;
    mpfr_inits2(r.prec(), n, t1, t2, rr, ri, static_cast<mpfr_ptr>(nullptr));
    mpfr_mul(t1, b.re(), b.re(), MPFR_RNDN);
    mpfr_mul(t2, b.im(), b.im(), MPFR_RNDN);
    mpfr_add(n, t1, t2, MPFR_RNDN);
    mpfr_mul(t1, a.re(), b.re(), MPFR_RNDN);
    mpfr_mul(t2, a.im(), b.im(), MPFR_RNDN);
    mpfr_add(rr, t1, t2, MPFR_RNDN);
    mpfr_div(rr, rr, n, MPFR_RNDN);
    mpfr_mul(t1, a.im(), b.re(), MPFR_RNDN);
    mpfr_mul(t2, a.re(), b.im(), MPFR_RNDN);
    mpfr_sub(ri, t1, t2, MPFR_RNDN);
    mpfr_div(ri, ri, n, MPFR_RNDN);
    mpfr_set(r.re(), rr, MPFR_RNDN);
    mpfr_set(r.im(), ri, MPFR_RNDN);
    mpfr_clears(n, t1, t2, rr, ri, static_cast<mpfr_ptr>(nullptr));
}

// P(z), P'(z) by Horner at midpoint precision.
void eval_with_deriv(const IntPoly& p, const CplxF& z, CplxF& val, CplxF& der) {
    const mpfr_prec_t pr = z.prec();
    CplxF v(pr), d(pr), c(pr), t(pr);
    for (int i = p.degree(); i >= 0; --i) {
        cmul(t, d, z);
        cadd(d, t, v);
        cmul(t, v, z);
        c.set_q(Rat(p.coeff(i)), Rat(0));
        cadd(v, t, c);
    }
    val = v;
    der = d;
}

// Newton iteration at precision pr from a midpoint start; leaves z in place.
void newton_polish(const IntPoly& p, CplxF& z, int iters) {
    CplxF v(z.prec()), d(z.prec()), step(z.prec());
    for (int k = 0; k < iters; ++k) {
        eval_with_deriv(p, z, v, d);
        if (mpfr_zero_p(d.re()) && mpfr_zero_p(d.im())) return;
        cdiv(step, v, d);
        csub(z, z, step);
    }
}

// Durand-Kerner on doubles; returns false if it failed to settle.
bool durand_kerner_double(const IntPoly& p, std::vector<std::complex<double>>& out) {
    const int d = p.degree();
    std::vector<std::complex<double>> a(static_cast<size_t>(d) + 1);
    const double lead = p.lc().get_d();
    for (int i = 0; i <= d; ++i) a[static_cast<size_t>(i)] = p.coeff(i).get_d() / lead;
    double hmax = 0;
    for (int i = 0; i < d; ++i) hmax = std::max(hmax, std::abs(a[static_cast<size_t>(i)]));
    const double radius = 1.0 + hmax;
    std::vector<std::complex<double>> z(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
        z[static_cast<size_t>(k)] =
            radius * std::polar(1.0, 2.0 * 3.14159265358979323846 * k / d + 0.4);
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int i = d; i >= 0; --i) acc = acc * x + a[static_cast<size_t>(i)];
        return acc;
    };
    for (int it = 0; it < 1000; ++it) {
        double worst = 0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> denom = 1;
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
            if (denom == std::complex<double>(0)) {
                z[static_cast<size_t>(k)] += std::complex<double>(1e-7, 1e-7);
                denom = 1e-14;
            }
            std::complex<double> delta = eval(z[static_cast<size_t>(k)]) / denom;
            z[static_cast<size_t>(k)] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[static_cast<size_t>(k)])));
        }
        if (worst < 1e-13) {
            out = z;
            return true;
        }
    }
    out = z;
    return false;
}

// Durand-Kerner at MPFR precision; used when double approximations cannot
// separate the roots.
void durand_kerner_mpfr(const IntPoly& p, mpfr_prec_t prec, std::vector<CplxF>& out) {
    const int d = p.degree();
    std::vector<std::complex<double>> seed;
    durand_kerner_double(p, seed);
    out.assign(static_cast<size_t>(d), CplxF(prec));
    for (int k = 0; k < d; ++k)
        out[static_cast<size_t>(k)].set_d(seed[static_cast<size_t>(k)].real(),
                                          seed[static_cast<size_t>(k)].imag() + 1e-3 * (k + 1));
    CplxF val(prec), der(prec), denom(prec), t(prec), delta(prec), lead(prec);
    lead.set_q(Rat(p.lc()), Rat(0));
    const int iters = 80 + static_cast<int>(prec / 2);
    for (int it = 0; it < iters; ++it) {
        for (int k = 0; k < d; ++k) {
            eval_with_deriv(p, out[static_cast<size_t>(k)], val, der);
            cdiv(val, val, lead);
            denom.set_q(Rat(1), Rat(0));
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                csub(t, out[static_cast<size_t>(k)], out[static_cast<size_t>(j)]);
                cmul(denom, denom, t);
            }
            if (mpfr_zero_p(denom.re()) && mpfr_zero_p(denom.im())) continue;
            cdiv(delta, val, denom);
            csub(out[static_cast<size_t>(k)], out[static_cast<size_t>(k)], delta);
        }
    }
}

struct CandidateDisk {
    Rat re, im, radius;
    bool real_root;
};

// Exact Kantorovich-style inclusion radius: some root of p lies within
// deg(p) * |p(z)/p'(z)| of z.  Everything below is exact rational arithmetic
// on the dyadic point z; the final square root is rounded up.
bool cert_radius(const IntPoly& p, const Rat& zr, const Rat& zi, Rat& rho_out) {
    const Rat np = detail::eval_abs2_exact(p, zr, zi);
    const Rat nd = detail::eval_abs2_exact(p.derivative(), zr, zi);
    if (np == 0) {
        rho_out = 0;
        return true;
    }
    if (nd == 0) return false;
    const long d = p.degree();
    Rat rho2 = Rat(d * d) * np / nd;
    rho2.canonicalize();
    rho_out = detail::sqrt_upper(rho2);
    return true;
}

int sign_rat(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Isolating bracket (a, b) with exact opposite signs, or an exact dyadic root.
struct RealBracket {
    Rat a, b;
    bool exact = false;
    Rat root;
};

// Shrink a sign-change bracket until its radius is <= target.  Bisection with
// periodic Newton leaps; endpoints stay dyadic.
RealBracket tighten_bracket(const IntPoly& p, RealBracket br, const Rat& target) {
    if (br.exact) return br;
    int sa = sign_rat(p.eval(br.a));
    int steps = 0;
    while ((br.b - br.a) > Rat(2) * target) {
        ++steps;
        if (steps % 8 == 1) {
            // Newton leap from the midpoint at matching precision.
            Rat width = br.b - br.a;
            long bits = 64;
            {
                Rat t = target;
                while (t < 1 && bits < kPrecCap) {
                    t *= 2;
                    bits += 1;
                }
            }
            bits += 64;
            CplxF z(static_cast<mpfr_prec_t>(std::min<long>(bits, kPrecCap)));
            z.set_q((br.a + br.b) / 2, Rat(0));
            newton_polish(p, z, 2 + static_cast<int>(bits / 16));
            Rat c = z.re_q();
            Rat eps = target / 2;
            Rat l = c - eps, r = c + eps;
            if (l > br.a && r < br.b) {
                int sl = sign_rat(p.eval(l));
                int sr = sign_rat(p.eval(r));
                if (sl == 0) return {l, l, true, l};
                if (sr == 0) return {r, r, true, r};
                if (sl != sr) {
                    br.a = l;
                    br.b = r;
                    return br;
                }
            }
            (void)width;
        }
        Rat m = (br.a + br.b) / 2;
        int sm = sign_rat(p.eval(m));
        if (sm == 0) return {m, m, true, m};
        if (sm == sa)
            br.a = m;
        else
            br.b = m;
    }
    return br;
}

// Disjoint sign-change brackets for all real roots (Sturm-counted bisection).
// Invariant: segment endpoints are never roots, so a count-1 segment always
// carries a sign change (simple roots).
std::vector<RealBracket> isolate_real(const IntPoly& p, int expected) {
    std::vector<RealBracket> done;
    if (expected == 0) return done;
    Int bound_num = poly_height(p);
    Int lc_abs = abs(p.lc());
    Rat bound = Rat(1) + Rat(bound_num, lc_abs);
    Int b_int = bound.get_num() / bound.get_den() + 2;  // strictly beyond every root
    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> work;
    Rat lo = Rat(-b_int), hi = Rat(b_int);
    work.push_back({lo, hi, count_real_roots_in(p, lo, hi)});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            done.push_back({s.a, s.b, false, Rat(0)});
            continue;
        }
        // split point avoiding roots: walk the dyadic fractions of (a, b)
        Rat m = (s.a + s.b) / 2;
        for (long den = 4; sign_rat(p.eval(m)) == 0; den *= 2)
            m = s.a + (s.b - s.a) * Rat(1, den);
        int left = count_real_roots_in(p, s.a, m);
        if (left > 0) work.push_back({s.a, m, left});
        if (s.count - left > 0) work.push_back({m, s.b, s.count - left});
    }
    if (static_cast<int>(done.size()) != expected)
        throw inconsistency_error("real-root isolation miscounted");
    return done;
}

Rat pow2_at_most(const Rat& v) {
    // largest power of two <= v (v > 0); keeps radii dyadic
    Rat p(1);
    if (v >= 1) {
        while (p * 2 <= v) p *= 2;
    } else {
        while (p > v) p /= 2;
    }
    return p;
}

struct BuildResult {
    std::vector<CandidateDisk> disks;
    bool ok = false;
};

// One certification attempt at a given working precision / target radius.
BuildResult try_build(const IntPoly& p, const Rat& tol, mpfr_prec_t prec, const Rat& target_in,
                      const std::vector<RealBracket>& real_brackets) {
    BuildResult out;
    const int d = p.degree();
    const int r1 = static_cast<int>(real_brackets.size());
    const int pairs = (d - r1) / 2;
    Rat target = pow2_at_most(std::min(tol, target_in));

    std::vector<CandidateDisk> disks;
    for (const auto& br0 : real_brackets) {
        RealBracket br = tighten_bracket(p, br0, target / 2);
        if (br.exact)
            disks.push_back({br.root, Rat(0), Rat(0), true});
        else
            disks.push_back({(br.a + br.b) / 2, Rat(0), (br.b - br.a) / 2, true});
    }

    if (pairs > 0) {
        std::vector<std::pair<double, std::complex<double>>> approx;  // (|Im|, z)
        if (prec <= 256) {
            std::vector<std::complex<double>> zs;
            durand_kerner_double(p, zs);
            for (auto& z : zs) approx.emplace_back(std::abs(z.imag()), z);
        } else {
            std::vector<CplxF> zs;
            durand_kerner_mpfr(p, prec, zs);
            for (auto& z : zs) {
                double zr = mpfr_get_d(z.re(), MPFR_RNDN);
                double zi = mpfr_get_d(z.im(), MPFR_RNDN);
                approx.emplace_back(std::abs(zi), std::complex<double>(zr, zi));
            }
        }
        std::sort(approx.begin(), approx.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::complex<double>> upper;
        for (size_t i = static_cast<size_t>(r1); i < approx.size(); ++i)
            if (approx[i].second.imag() > 0) upper.push_back(approx[i].second);
        if (static_cast<int>(upper.size()) != pairs) return out;

        for (const auto& z0 : upper) {
            CplxF z(prec);
            z.set_d(z0.real(), z0.imag());
            newton_polish(p, z, 4 + static_cast<int>(prec / 8));
            Rat zr = z.re_q(), zi = z.im_q();
            Rat rho;
            if (!cert_radius(p, zr, zi, rho)) return out;
            if (rho > target) return out;
            if (!(abs(zi) > rho)) return out;  // must be strictly off-axis
            disks.push_back({zr, zi, rho, false});
            disks.push_back({zr, -zi, rho, false});
        }
    }

    // pairwise disjoint (exact): |ci - cj|^2 > (ri + rj)^2
    for (size_t i = 0; i < disks.size(); ++i)
        for (size_t j = i + 1; j < disks.size(); ++j) {
            Rat dr = disks[i].re - disks[j].re;
            Rat di = disks[i].im - disks[j].im;
            Rat rr = disks[i].radius + disks[j].radius;
            if (!(dr * dr + di * di > rr * rr)) return out;
        }
    out.disks = std::move(disks);
    out.ok = true;
    return out;
}

// Insertion sort that reports failure instead of invoking an undecidable
// comparator inside std::sort.
bool lex_orderable(const CandidateDisk& a, const CandidateDisk& b, bool* a_first);

bool sort_disks(std::vector<CandidateDisk>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        for (size_t j = i; j > 0; --j) {
            bool a_first;
            if (!lex_orderable(v[j - 1], v[j], &a_first)) return false;
            if (a_first) break;
            std::swap(v[j - 1], v[j]);
        }
    return true;
}

bool lex_orderable(const CandidateDisk& a, const CandidateDisk& b, bool* a_first) {
    // true (Re, Im) order decidable from enclosures / exact mirror structure
    Rat a_re_lo = a.re - a.radius, a_re_hi = a.re + a.radius;
    Rat b_re_lo = b.re - b.radius, b_re_hi = b.re + b.radius;
    if (a_re_hi < b_re_lo) {
        *a_first = true;
        return true;
    }
    if (b_re_hi < a_re_lo) {
        *a_first = false;
        return true;
    }
    // overlapping Re ranges: mirror pair of one conjugate pair shares re exactly
    if (a.re == b.re && a.radius == b.radius && a.im == -b.im && a.im != 0) {
        *a_first = a.im < b.im;
        return true;
    }
    return false;
}

}  // namespace

ComplexIv RootDisk::box(mpfr_prec_t prec) const {
    RealIv re_iv = RealIv::from_endpoints_q(re - radius, re + radius, prec);
    RealIv im_iv = real_root ? RealIv::from_q(Rat(0), prec)
                             : RealIv::from_endpoints_q(im - radius, im + radius, prec);
    return {std::move(re_iv), std::move(im_iv)};
}

ComplexIv eval_box(const IntPoly& p, const ComplexIv& z) {
    const mpfr_prec_t pr = std::max(z.re.prec(), z.im.prec());
    ComplexIv acc{RealIv(pr), RealIv(pr)};
    if (p.is_zero()) return acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = mul(acc, z);
        acc.re = add(acc.re, RealIv::from_z(p.coeff(i), pr));
    }
    return acc;
}

RealIv eval_box(const IntPoly& p, const RealIv& x) {
    RealIv acc(x.prec());
    if (p.is_zero()) return acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = mul(acc, x);
        acc = add(acc, RealIv::from_z(p.coeff(i), x.prec()));
    }
    return acc;
}

namespace detail {

Rat eval_abs2_exact(const IntPoly& p, const Rat& zr, const Rat& zi) {
    Rat vr(0), vi(0);
    for (int i = p.degree(); i >= 0; --i) {
        // (vr + vi I)(zr + zi I) + c
        Rat nr = vr * zr - vi * zi + Rat(p.coeff(i));
        Rat ni = vr * zi + vi * zr;
        vr = nr;
        vi = ni;
    }
    return vr * vr + vi * vi;
}

Rat sqrt_upper(const Rat& q) {
    if (q < 0) throw domain_error("sqrt of negative rational");
    if (q == 0) return Rat(0);
    mpfr_t t;
    mpfr_init2(t, 192);
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(t, t, MPFR_RNDU);
    mpfr_nextabove(t);
    mpq_t out;
    mpq_init(out);
    mpfr_get_q(out, t);
    Rat r(out);
    mpq_clear(out);
    mpfr_clear(t);
    return r;
}

}  // namespace detail

std::vector<RootDisk> isolate_roots(const IntPoly& p, const Rat& tol) {
    if (p.is_zero() || p.degree() < 1) throw domain_error("isolate_roots needs degree >= 1");
    if (tol <= 0) throw domain_error("tolerance must be positive");
    IntPoly g = gcd_primitive(p, p.derivative());
    if (g.degree() >= 1)
        throw domain_error("polynomial is not squarefree; repeated-factor gcd: " + g.str());

    const int d = p.degree();
    const int r1 = count_real_roots(p);
    auto brackets = isolate_real(p, r1);

    Rat target = tol;
    for (mpfr_prec_t prec = kPrecStart; prec <= kPrecCap; prec *= 2) {
        BuildResult built = try_build(p, tol, prec, target, brackets);
        if (!built.ok) {
            target = target / 1024;
            continue;
        }
        // ordering pass: shrink until (Re, Im)-lex order is certified
        std::vector<CandidateDisk> disks = std::move(built.disks);
        bool sorted_ok = sort_disks(disks);
        for (int attempt = 0; !sorted_ok && attempt < 6; ++attempt) {
            target = target / 1024;
            BuildResult again = try_build(p, tol, prec, target, brackets);
            if (!again.ok) break;
            disks = std::move(again.disks);
            sorted_ok = sort_disks(disks);
        }
        if (!sorted_ok) continue;
        std::vector<RootDisk> out;
        out.reserve(static_cast<size_t>(d));
        for (auto& c : disks) out.push_back({c.re, c.im, c.radius, c.real_root});
        return out;
    }
    throw undecided_error("root isolation exceeded the precision cap");
}

RootDisk refine_disk(const RootDisk& disk, const IntPoly& p, const Rat& tol) {
    if (tol <= 0) throw domain_error("tolerance must be positive");
    if (disk.radius <= tol) return disk;  // idempotent fast path

    if (disk.real_root) {
        Rat a = disk.re - disk.radius, b = disk.re + disk.radius;
        if (sign_rat(p.eval(disk.re)) == 0) return {disk.re, Rat(0), Rat(0), true};
        int sa = sign_rat(p.eval(a)), sb = sign_rat(p.eval(b));
        if (sa == 0) return {a, Rat(0), Rat(0), true};
        if (sb == 0) return {b, Rat(0), Rat(0), true};
        if (sa == sb) throw inconsistency_error("disk does not isolate a real root");
        RealBracket br{a, b, false, Rat(0)};
        br = tighten_bracket(p, br, pow2_at_most(tol) / 2);
        if (br.exact) return {br.root, Rat(0), Rat(0), true};
        return {(br.a + br.b) / 2, Rat(0), (br.b - br.a) / 2, true};
    }

    Rat target = pow2_at_most(tol);
    long bits = 64;
    {
        Rat t = target;
        while (t < 1 && bits < kPrecCap) {
            t *= 2;
            bits += 1;
        }
    }
    for (mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::min<long>(bits + 64, kPrecCap));
         prec <= kPrecCap; prec *= 2) {
        CplxF z(prec);
        z.set_q(disk.re, disk.im);
        newton_polish(p, z, 6 + static_cast<int>(prec / 8));
        Rat zr = z.re_q(), zi = z.im_q();
        Rat rho;
        if (!cert_radius(p, zr, zi, rho)) continue;
        if (rho > target) continue;
        // must stay inside the input disk (same root), and off-axis
        Rat dr = zr - disk.re, di = zi - disk.im;
        Rat lhs = detail::sqrt_upper(dr * dr + di * di) + rho;
        if (lhs > disk.radius) throw inconsistency_error("refined disk escaped its input disk");
        if (!(abs(zi) > rho)) continue;
        return {zr, zi, rho, false};
    }
    throw undecided_error("refine_disk exceeded the precision cap");
}

Signature signature(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) throw domain_error("signature needs degree >= 1");
    if (!is_squarefree(p)) {
        IntPoly g = gcd_primitive(p, p.derivative());
        throw domain_error("polynomial is not squarefree; repeated-factor gcd: " + g.str());
    }
    int r1 = count_real_roots(p);
    return {r1, (p.degree() - r1) / 2};
}

}  // namespace qap
