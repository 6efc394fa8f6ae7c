#include "qap/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qap/errors.hpp"
#include "qap/poly_text.hpp"

namespace qap {

namespace {
const Rat kDefaultDiskTol = Rat(1, pow_int(Int(2), 80));
constexpr mpfr_prec_t kAlgPrecCap = 1 << 15;
}  // namespace

AlgebraicNumber AlgebraicNumber::make(const IntPoly& p, int root_index) {
    if (p.is_zero() || p.degree() < 1) throw domain_error("algebraic number needs degree >= 1");
    IntPoly prim = content_and_primitive(p).second;
    if (auto factor = find_factor(prim))
        throw domain_error("polynomial is reducible; factor: " + factor->str());
    auto core = std::make_shared<Core>();
    core->minpoly = prim;
    core->conj = isolate_roots(core->minpoly, kDefaultDiskTol);
    if (root_index < 0 || root_index >= static_cast<int>(core->conj.size()))
        throw domain_error("root index " + std::to_string(root_index) + " out of range 0.." +
                           std::to_string(core->conj.size() - 1));
    core->index = root_index;
    return AlgebraicNumber(std::move(core));
}

AlgebraicNumber AlgebraicNumber::make_prevalidated(IntPoly p, int root_index) {
    auto core = std::make_shared<Core>();
    core->minpoly = std::move(p);
    core->conj = isolate_roots(core->minpoly, kDefaultDiskTol);
    if (root_index < 0 || root_index >= static_cast<int>(core->conj.size()))
        throw domain_error("root index out of range");
    core->index = root_index;
    return AlgebraicNumber(std::move(core));
}

AlgebraicNumber AlgebraicNumber::from_rat(const Rat& q) {
    IntPoly p{std::vector<Int>{-q.get_num(), q.get_den()}};
    return make_prevalidated(std::move(p), 0);
}

AlgebraicNumber AlgebraicNumber::refined(const Rat& tol) const {
    bool already = true;
    for (const auto& d : core_->conj)
        if (d.radius > tol) {
            already = false;
            break;
        }
    if (already) return *this;
    auto core = std::make_shared<Core>();
    core->minpoly = core_->minpoly;
    core->index = core_->index;
    core->conj.reserve(core_->conj.size());
    // refine the positive-imaginary representative of each pair once and mirror
    for (size_t i = 0; i < core_->conj.size(); ++i) {
        const RootDisk& d = core_->conj[i];
        if (!d.real_root && d.im < 0) {
            // locate mirror (same re, opposite im); it may appear before or after
            RootDisk up{d.re, -d.im, d.radius, false};
            RootDisk r = refine_disk(up, core_->minpoly, tol);
            core->conj.push_back({r.re, -r.im, r.radius, false});
        } else {
            core->conj.push_back(refine_disk(d, core_->minpoly, tol));
        }
    }
    return AlgebraicNumber(std::move(core));
}

std::string AlgebraicNumber::str() const {
    std::ostringstream os;
    os << minpoly().str() << "@" << root_index();
    return os.str();
}

FieldElement::FieldElement(AlgebraicNumber base, QPoly rep) : base_(std::move(base)) {
    rep_ = divmod(rep, QPoly(base_.minpoly())).second;
}

FieldElement FieldElement::from_rat(const AlgebraicNumber& base, const Rat& q) {
    return FieldElement(base, QPoly::constant(q));
}

FieldElement FieldElement::generator(const AlgebraicNumber& base) {
    return FieldElement(base, QPoly::x());
}

bool FieldElement::is_one() const {
    return !rep_.is_zero() && rep_.degree() == 0 && rep_.coeff(0) == 1;
}

bool FieldElement::is_integral_rep() const {
    for (const auto& c : rep_.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

void FieldElement::check_same_base(const FieldElement& o) const {
    if (!base_.same_number(o.base_))
        throw domain_error("field elements live over different generators");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_base(o);
    return FieldElement(base_, rep_ + o.rep_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_base(o);
    return FieldElement(base_, rep_ - o.rep_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_base(o);
    return FieldElement(base_, rep_ * o.rep_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw domain_error("inversion of zero field element");
    auto res = xgcd(rep_, QPoly(base_.minpoly()));
    if (res.g.is_zero() || res.g.degree() != 0)
        throw inconsistency_error("minimal polynomial not coprime to nonzero element");
    return FieldElement(base_, res.s);
}

FieldElement FieldElement::pow(long e) const {
    if (e == 0) return from_rat(base_, Rat(1));
    FieldElement b = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElement acc = from_rat(base_, Rat(1));
    while (true) {
        if (n & 1) acc = acc * b;
        n >>= 1;
        if (n == 0) break;
        b = b * b;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return base_.same_number(o.base_) && rep_ == o.rep_;
}

ComplexIv FieldElement::embed(int conj_index, mpfr_prec_t prec) const {
    const RootDisk& d = base_.conjugates()[static_cast<size_t>(conj_index)];
    ComplexIv z = d.box(prec);
    ComplexIv acc{RealIv(prec), RealIv(prec)};
    if (rep_.is_zero()) return acc;
    for (int i = rep_.degree(); i >= 0; --i) {
        acc = mul(acc, z);
        acc.re = add(acc.re, RealIv::from_q(rep_.coeff(i), prec));
    }
    return acc;
}

std::string FieldElement::str() const { return rep_.str(); }

RealIv weil_height(const AlgebraicNumber& a, const Rat& tol) {
    if (tol <= 0) throw domain_error("tolerance must be positive");
    const int d = a.degree();
    Rat disk_tol = Rat(1, pow_int(Int(2), 64));
    for (mpfr_prec_t prec = 128; prec <= kAlgPrecCap; prec *= 2) {
        AlgebraicNumber ref = a.refined(disk_tol);
        try {
            RealIv acc = log_iv(abs_iv(RealIv::from_z(ref.minpoly().lc(), prec)));
            RealIv one = RealIv::from_long(1, prec);
            for (const auto& disk : ref.conjugates()) {
                RealIv mod = abs_iv(disk.box(prec));
                acc = add(acc, log_iv(max_iv(mod, one)));
            }
            acc = div(acc, RealIv::from_long(d, prec));
            double w = acc.wid_d();
            if (std::isfinite(w) && Rat(w) <= tol) return acc;
        } catch (const detail::retry_precision&) {
        }
        disk_tol = disk_tol * Rat(1, pow_int(Int(2), 64));
    }
    throw undecided_error("weil_height exceeded the precision cap");
}

HeightReport height_report(const AlgebraicNumber& a, const Rat& tol) {
    RealIv h = weil_height(a, tol);
    RealIv star = max_iv(h, RealIv::from_long(1, h.prec()));
    return {poly_height(a.minpoly()), h, star};
}

RealIv weil_height(const FieldElement& u, const Rat& tol) {
    return weil_height(to_algebraic(u), tol);
}

namespace {

// Multiplication-by-u matrix on the power basis of Q[X]/(f); column j holds
// the coordinates of u * x^j.
std::vector<std::vector<Rat>> mult_matrix(const FieldElement& u) {
    const IntPoly& f = u.base().minpoly();
    const int d = f.degree();
    QPoly fq(f);
    std::vector<std::vector<Rat>> m(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d), Rat(0)));
    QPoly cur = u.rep();
    for (int j = 0; j < d; ++j) {
        if (!cur.is_zero())
            for (int i = 0; i <= cur.degree(); ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = cur.coeff(i);
        cur = divmod(cur * QPoly::x(), fq).second;
    }
    return m;
}

// Faddeev-LeVerrier characteristic polynomial (exact over Q), monic degree d.
QPoly char_poly(const std::vector<std::vector<Rat>>& m) {
    const int d = static_cast<int>(m.size());
    std::vector<Rat> coeff(static_cast<size_t>(d) + 1, Rat(0));
    coeff[static_cast<size_t>(d)] = 1;
    std::vector<std::vector<Rat>> n(m);  // N_1 = M
    for (int k = 1; k <= d; ++k) {
        Rat tr(0);
        for (int i = 0; i < d; ++i) tr += n[static_cast<size_t>(i)][static_cast<size_t>(i)];
        Rat c = -tr / Rat(k);
        coeff[static_cast<size_t>(d - k)] = c;
        if (k == d) break;
        // N_{k+1} = M (N_k + c I)
        for (int i = 0; i < d; ++i) n[static_cast<size_t>(i)][static_cast<size_t>(i)] += c;
        std::vector<std::vector<Rat>> nn(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d), Rat(0)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rat s(0);
                for (int t = 0; t < d; ++t)
                    s += m[static_cast<size_t>(i)][static_cast<size_t>(t)] * n[static_cast<size_t>(t)][static_cast<size_t>(j)];
                nn[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
            }
        n = std::move(nn);
    }
    return QPoly(std::move(coeff));
}

}  // namespace

IntPoly minpoly_of_element(const FieldElement& u) {
    if (u.is_zero()) return IntPoly::x();
    QPoly cp = char_poly(mult_matrix(u));
    // cp = minpoly^(d/m): the squarefree part IS the minimal polynomial
    QPoly g = gcd_monic(cp, cp.derivative());
    QPoly mp = divmod(cp, g).first;
    return mp.to_int_primitive();
}

AlgebraicNumber to_algebraic(const FieldElement& u) {
    IntPoly mp = minpoly_of_element(u);
    if (mp.degree() == 1) {
        Rat v(-mp.coeff(0), mp.coeff(1));
        v.canonicalize();
        return AlgebraicNumber::from_rat(v);
    }
    std::vector<RootDisk> disks = isolate_roots(mp, kDefaultDiskTol);
    // locate the root disk containing the value (u is exactly a root of mp)
    Rat base_tol = kDefaultDiskTol;
    AlgebraicNumber base = u.base();
    for (mpfr_prec_t prec = 128; prec <= kAlgPrecCap; prec *= 2) {
        FieldElement uref(base.refined(base_tol), u.rep());
        ComplexIv val = uref.embed(base.root_index(), prec);
        int hit = -1, hits = 0;
        for (size_t k = 0; k < disks.size(); ++k) {
            ComplexIv box = disks[k].box(prec);
            if (!disjoint(val, box)) {
                hit = static_cast<int>(k);
                ++hits;
            }
        }
        if (hits == 1) return AlgebraicNumber::make_prevalidated(std::move(mp), hit);
        base_tol = base_tol * Rat(1, pow_int(Int(2), 64));
        for (auto& disk : disks) disk = refine_disk(disk, mp, base_tol);
    }
    throw undecided_error("to_algebraic: root identification exceeded the precision cap");
}

RealIv distance_between(const AlgebraicNumber& xi, const AlgebraicNumber& alpha, const Rat& tol) {
    if (tol <= 0) throw domain_error("tolerance must be positive");
    if (xi.same_number(alpha)) return RealIv::from_long(0, 64);
    // distinct canonical minimal polynomials, or distinct root indices of the
    // same polynomial, certify distinct numbers (gcd of two distinct canonical
    // irreducibles is 1); the distance is then a positive interval
    Rat disk_tol = std::min(kDefaultDiskTol, tol / 8);
    for (mpfr_prec_t prec = 128; prec <= kAlgPrecCap; prec *= 2) {
        AlgebraicNumber a = xi.refined(disk_tol), b = alpha.refined(disk_tol);
        ComplexIv za = a.disk().box(prec), zb = b.disk().box(prec);
        try {
            RealIv dist = abs_iv(sub(za, zb));
            double w = dist.wid_d();
            if (std::isfinite(w) && Rat(w) <= tol) return dist;
        } catch (const detail::retry_precision&) {
        }
        disk_tol = disk_tol * Rat(1, pow_int(Int(2), 64));
    }
    throw undecided_error("distance exceeded the precision cap");
}

namespace {

// --- conjugation-in-field machinery -------------------------------------
//
// After monicizing (theta = lc * xi), any theta-bar in Q(theta) has power-basis
// coordinates in (1/|disc f_theta|) Z (disc * O_K lies in Z[theta]).  The
// conjugation automorphism induces a fixed-point-free involution m on the root
// indices with sigma_i o sigma = sigma_{m(i)}; m commutes with the
// conjugate-pairing involution c and sends the distinguished index to its
// pair.  Enumerating all such m, solving the interval Vandermonde system for
// each, recognizing coordinates on the discriminant grid, and certifying the
// survivors exactly (f(r(X)) = 0 mod f plus disk containment) decides
// membership both ways.

struct ConjSetup {
    IntPoly f_theta;
    std::vector<RootDisk> disks;  // theta's conjugates (scaled from xi's)
    int i0 = -1;
    std::vector<int> pairing;  // c
    Int grid;                  // |disc(f_theta)|
};

int mirror_index(const std::vector<RootDisk>& disks, size_t i) {
    const RootDisk& d = disks[i];
    if (d.real_root) return static_cast<int>(i);
    for (size_t j = 0; j < disks.size(); ++j)
        if (j != i && disks[j].re == d.re && disks[j].im == -d.im && disks[j].radius == d.radius)
            return static_cast<int>(j);
    throw inconsistency_error("conjugate mirror disk not found");
}

void involutions_rec(const std::vector<int>& c, std::vector<int>& m, size_t next,
                     std::vector<std::vector<int>>& out) {
    const size_t d = c.size();
    while (next < d && m[next] != -1) ++next;
    if (next == d) {
        out.push_back(m);
        return;
    }
    for (size_t j = next + 1; j < d; ++j) {
        if (m[j] != -1) continue;
        // try m(next) = j, m(j) = next; enforce commutation with c where determined
        m[next] = static_cast<int>(j);
        m[static_cast<size_t>(j)] = static_cast<int>(next);
        bool ok = true;
        for (size_t t = 0; t < d && ok; ++t) {
            if (m[t] == -1) continue;
            int ct = c[t];
            int want = c[static_cast<size_t>(m[t])];  // m(c(t)) must equal c(m(t))
            if (m[static_cast<size_t>(ct)] != -1 && m[static_cast<size_t>(ct)] != want) ok = false;
        }
        if (ok) involutions_rec(c, m, next + 1, out);
        m[next] = -1;
        m[static_cast<size_t>(j)] = -1;
    }
}

std::vector<std::vector<int>> conj_matchings(const ConjSetup& s) {
    const size_t d = s.disks.size();
    std::vector<int> m(d, -1);
    int ibar = s.pairing[static_cast<size_t>(s.i0)];
    m[static_cast<size_t>(s.i0)] = ibar;
    m[static_cast<size_t>(ibar)] = s.i0;
    std::vector<std::vector<int>> out;
    involutions_rec(s.pairing, m, 0, out);
    return out;
}

// Interval Gaussian elimination for V a = b, V_{ij} = theta_i^j.  Fails (by
// retry_precision) when a pivot's modulus cannot be bounded away from zero.
std::vector<ComplexIv> solve_vandermonde(const std::vector<ComplexIv>& nodes,
                                         std::vector<ComplexIv> b, mpfr_prec_t prec) {
    const size_t d = nodes.size();
    std::vector<std::vector<ComplexIv>> a(d);
    for (size_t i = 0; i < d; ++i) {
        a[i].reserve(d);
        ComplexIv pw{RealIv::from_long(1, prec), RealIv(prec)};
        for (size_t j = 0; j < d; ++j) {
            a[i].push_back(pw);
            if (j + 1 < d) pw = mul(pw, nodes[i]);
        }
    }
    auto low_abs = [](const RealIv& r) {
        if (r.contains_zero()) return Rat(0);
        Rat lo = r.lo_q(), hi = r.hi_q();
        return lo > 0 ? lo : -hi;
    };
    auto mig2 = [&](const ComplexIv& z) {
        Rat lr = low_abs(z.re), li = low_abs(z.im);
        return lr * lr + li * li;  // lower bound of |z|^2
    };
    for (size_t col = 0; col < d; ++col) {
        size_t best = col;
        Rat best_m = mig2(a[col][col]);
        for (size_t r = col + 1; r < d; ++r) {
            Rat mr = mig2(a[r][col]);
            if (mr > best_m) {
                best = r;
                best_m = mr;
            }
        }
        if (best_m == 0) throw detail::retry_precision{};
        std::swap(a[col], a[best]);
        std::swap(b[col], b[best]);
        for (size_t r = 0; r < d; ++r) {
            if (r == col) continue;
            ComplexIv factor = div(a[r][col], a[col][col]);
            for (size_t j = col; j < d; ++j) a[r][j] = sub(a[r][j], mul(factor, a[col][j]));
            b[r] = sub(b[r], mul(factor, b[col]));
        }
    }
    std::vector<ComplexIv> x;
    x.reserve(d);
    for (size_t i = 0; i < d; ++i) x.push_back(div(b[i], a[i][i]));
    return x;
}

// f(r(X)) mod f(X) == 0, exactly.
bool composes_to_root(const IntPoly& f, const QPoly& r) {
    QPoly fq(f);
    QPoly acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = divmod(acc * r, fq).second + QPoly::constant(Rat(f.coeff(i)));
    }
    acc = divmod(acc, fq).second;
    return acc.is_zero();
}

}  // namespace

std::optional<QPoly> conj_in_field(const AlgebraicNumber& xi) {
    if (xi.is_real()) throw domain_error("conj_in_field needs a non-real number");
    const int d = xi.degree();
    if (d % 2 == 1) return std::nullopt;  // an order-2 automorphism needs even degree

    const Int lead = xi.minpoly().lc();
    ConjSetup s;
    {
        std::vector<Int> qc(static_cast<size_t>(d) + 1);
        Int pw(1);
        for (int i = d; i >= 0; --i) {
            qc[static_cast<size_t>(i)] = xi.minpoly().coeff(i) * pw;
            if (i > 0) pw *= lead;
        }
        s.f_theta = IntPoly{std::move(qc)};
    }
    s.grid = abs(discriminant(s.f_theta));
    s.i0 = xi.root_index();

    Rat disk_tol = Rat(1, pow_int(Int(2), 96));
    AlgebraicNumber cur = xi;
    std::vector<char> eliminated;
    std::vector<std::vector<int>> matchings;

    for (mpfr_prec_t prec = 256; prec <= kAlgPrecCap; prec *= 2) {
        cur = cur.refined(disk_tol);
        // theta disks: scale xi's by lc (> 0 by canonical form), order preserved
        s.disks.clear();
        for (const auto& dk : cur.conjugates())
            s.disks.push_back({dk.re * Rat(lead), dk.im * Rat(lead), dk.radius * Rat(lead), dk.real_root});
        if (matchings.empty()) {
            s.pairing.clear();
            for (size_t i = 0; i < s.disks.size(); ++i) s.pairing.push_back(mirror_index(s.disks, i));
            matchings = conj_matchings(s);
            eliminated.assign(matchings.size(), 0);
            if (matchings.empty()) return std::nullopt;
        }

        bool want_more_precision = false;
        try {
            std::vector<ComplexIv> nodes;
            for (const auto& dk : s.disks) nodes.push_back(dk.box(prec));
            size_t alive = 0;
            for (size_t mi = 0; mi < matchings.size(); ++mi) {
                if (eliminated[mi]) continue;
                ++alive;
                std::vector<ComplexIv> rhs;
                for (size_t i = 0; i < s.disks.size(); ++i)
                    rhs.push_back(nodes[static_cast<size_t>(matchings[mi][i])]);
                std::vector<ComplexIv> sol = solve_vandermonde(nodes, std::move(rhs), prec);

                std::vector<Rat> coeffs(static_cast<size_t>(d));
                bool candidate = true;
                for (int j = 0; j < d && candidate; ++j) {
                    const ComplexIv& aj = sol[static_cast<size_t>(j)];
                    if (!aj.im.contains_zero()) {
                        eliminated[mi] = 1;  // true solution of this matching is non-real
                        candidate = false;
                        break;
                    }
                    Rat lo = aj.re.lo_q(), hi = aj.re.hi_q();
                    if ((hi - lo) * Rat(2) * Rat(s.grid) >= 1) {
                        want_more_precision = true;
                        candidate = false;
                        break;
                    }
                    // unique grid point n/grid in the interval, if any
                    Rat mid = (lo + hi) / 2 * Rat(s.grid);
                    Int n = mid.get_num() * 2 + mid.get_den();  // floor(mid + 1/2)
                    mpz_fdiv_q(n.get_mpz_t(), n.get_mpz_t(), Int(mid.get_den() * 2).get_mpz_t());
                    Rat q = make_rat(n, s.grid);
                    if (q < lo || q > hi) {
                        eliminated[mi] = 1;
                        candidate = false;
                        break;
                    }
                    coeffs[static_cast<size_t>(j)] = q;
                }
                if (!candidate) continue;

                QPoly r{std::vector<Rat>(coeffs)};
                if (!composes_to_root(s.f_theta, r)) {
                    eliminated[mi] = 1;
                    continue;
                }
                // r(theta) is exactly a root; identify it by disk containment
                ComplexIv theta_box = s.disks[static_cast<size_t>(s.i0)].box(prec);
                ComplexIv val{RealIv(prec), RealIv(prec)};
                if (!r.is_zero())
                    for (int i = r.degree(); i >= 0; --i) {
                        val = mul(val, theta_box);
                        val.re = add(val.re, RealIv::from_q(r.coeff(i), prec));
                    }
                int hit = -1, hits = 0;
                for (size_t k = 0; k < s.disks.size(); ++k)
                    if (!disjoint(val, s.disks[k].box(prec))) {
                        hit = static_cast<int>(k);
                        ++hits;
                    }
                if (hits != 1) {
                    want_more_precision = true;
                    continue;
                }
                if (hit != s.pairing[static_cast<size_t>(s.i0)]) {
                    eliminated[mi] = 1;  // a root automorphism, but not conjugation
                    continue;
                }
                // success: convert theta-coordinates back to xi-coordinates
                std::vector<Rat> rx(coeffs.size());
                Rat pw(1, lead);
                for (size_t j = 0; j < coeffs.size(); ++j) {
                    rx[j] = coeffs[j] * pw;
                    pw *= Rat(lead);
                }
                return QPoly{std::move(rx)};
            }
            if (alive == 0 || std::all_of(eliminated.begin(), eliminated.end(), [](char e) { return e != 0; }))
                return std::nullopt;
        } catch (const detail::retry_precision&) {
            want_more_precision = true;
        }
        (void)want_more_precision;
        disk_tol = disk_tol * Rat(1, pow_int(Int(2), 128));
    }
    throw undecided_error("conj_in_field undecided at the precision cap");
}

}  // namespace qap
