#include <algorithm>

#include "qap/errors.hpp"
#include "qap/int_poly.hpp"
#include "qap/roots.hpp"

namespace qap {

namespace {

// Mignotte-type bound on the sup-norm of any monic degree-k integer factor:
// 2^k * ||Q||_2 (Landau: the Mahler measure of a factor is at most ||Q||_2).
Rat mignotte_bound(const IntPoly& q, int k) {
    Rat s(0);
    for (const auto& c : q.coeffs()) s += Rat(c) * Rat(c);
    Rat root = detail::sqrt_upper(s);
    Rat out = root;
    for (int i = 0; i < k; ++i) out *= 2;
    return out;
}

// Product over the cluster of (X - theta) as a real-interval polynomial.
// Real roots contribute linear factors, conjugate pairs contribute
// X^2 - 2 Re(theta) X + |theta|^2.
std::vector<RealIv> cluster_poly(const std::vector<RootDisk>& disks,
                                 const std::vector<int>& real_idx,
                                 const std::vector<int>& pair_idx, mpfr_prec_t prec) {
    std::vector<RealIv> poly{RealIv::from_long(1, prec)};
    auto mul_by = [&](const std::vector<RealIv>& factor) {
        std::vector<RealIv> out(poly.size() + factor.size() - 1, RealIv(prec));
        for (size_t i = 0; i < poly.size(); ++i)
            for (size_t j = 0; j < factor.size(); ++j)
                out[i + j] = add(out[i + j], mul(poly[i], factor[j]));
        poly = std::move(out);
    };
    for (int i : real_idx) {
        RealIv r = RealIv::from_endpoints_q(disks[static_cast<size_t>(i)].re - disks[static_cast<size_t>(i)].radius,
                                            disks[static_cast<size_t>(i)].re + disks[static_cast<size_t>(i)].radius, prec);
        mul_by({neg(r), RealIv::from_long(1, prec)});
    }
    for (int i : pair_idx) {
        ComplexIv box = disks[static_cast<size_t>(i)].box(prec);
        RealIv tr = mul(RealIv::from_long(2, prec), box.re);
        RealIv nm = norm2(box);
        mul_by({nm, neg(tr), RealIv::from_long(1, prec)});
    }
    return poly;
}

// Unique integer in a width < 1 interval, if any.
bool integer_in(const RealIv& iv, Int& out) {
    Rat lo = iv.lo_q(), hi = iv.hi_q();
    Int candidate;
    mpz_cdiv_q(candidate.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());  // ceil(lo)
    if (Rat(candidate) > hi) return false;
    out = candidate;
    return true;
}

struct ClusterItems {
    std::vector<int> reals;       // indices of real disks
    std::vector<int> pair_leads;  // index of the positive-imaginary disk of each pair
};

ClusterItems split_items(const std::vector<RootDisk>& disks) {
    ClusterItems items;
    for (size_t i = 0; i < disks.size(); ++i) {
        if (disks[i].real_root)
            items.reals.push_back(static_cast<int>(i));
        else if (disks[i].im > 0)
            items.pair_leads.push_back(static_cast<int>(i));
    }
    return items;
}

}  // namespace

std::optional<IntPoly> find_factor(const IntPoly& p_in) {
    if (p_in.is_zero()) throw domain_error("irreducibility of zero polynomial");
    const int d = p_in.degree();
    if (d < 1) throw domain_error("irreducibility needs degree >= 1");
    if (d > 8) throw unsupported_error("irreducibility supported up to degree 8");
    auto [content, p] = content_and_primitive(p_in);
    if (content != 1) throw domain_error("irreducibility requires a primitive polynomial");
    if (d == 1) return std::nullopt;

    {
        IntPoly g = gcd_primitive(p, p.derivative());
        if (g.degree() >= 1) return g;  // repeated factor
    }

    // Monicize: Q(X) = lc^{d-1} P(X/lc) is monic with integer coefficients and
    // the same factorization structure over Q.
    const Int lead = p.lc();
    std::vector<Int> qc(static_cast<size_t>(d) + 1);
    {
        Int pw(1);
        for (int i = d; i >= 0; --i) {
            qc[static_cast<size_t>(i)] = p.coeff(i) * pw;
            if (i > 0) pw *= lead;
        }
    }
    IntPoly q{std::move(qc)};

    Rat tol = Rat(1, pow_int(Int(2), 64));
    std::vector<RootDisk> disks = isolate_roots(q, tol);
    ClusterItems items = split_items(disks);

    for (int attempt = 0; attempt < 8; ++attempt) {
        const mpfr_prec_t prec = 128 + 64 * attempt;
        bool too_wide = false;
        const size_t n_items = items.reals.size() + items.pair_leads.size();
        for (int k = 1; !too_wide && k <= d / 2; ++k) {
            const Rat bound = mignotte_bound(q, k);
            for (size_t mask = 1; mask < (size_t{1} << n_items); ++mask) {
                std::vector<int> real_sel, pair_sel;
                int weight = 0;
                for (size_t b = 0; b < n_items; ++b) {
                    if (!(mask & (size_t{1} << b))) continue;
                    if (b < items.reals.size()) {
                        real_sel.push_back(items.reals[b]);
                        weight += 1;
                    } else {
                        pair_sel.push_back(items.pair_leads[b - items.reals.size()]);
                        weight += 2;
                    }
                }
                if (weight != k) continue;
                auto coeffs = cluster_poly(disks, real_sel, pair_sel, prec);
                std::vector<Int> g(static_cast<size_t>(k) + 1);
                g[static_cast<size_t>(k)] = 1;
                bool viable = true;
                for (int j = 0; j < k && viable; ++j) {
                    if (coeffs[static_cast<size_t>(j)].wid_d() >= 0.5) {
                        too_wide = true;
                        viable = false;
                        break;
                    }
                    Int n;
                    if (!integer_in(coeffs[static_cast<size_t>(j)], n) || abs(n) > bound)
                        viable = false;
                    else
                        g[static_cast<size_t>(j)] = n;
                }
                if (too_wide || !viable) continue;
                IntPoly cand{std::vector<Int>(g)};
                if (divide_exact(q, cand)) {
                    // map the factor of Q back to a factor of P
                    IntPoly h = cand.scale_var(lead);
                    IntPoly hp = content_and_primitive(h).second;
                    if (!divide_exact(p, hp))
                        throw inconsistency_error("certified factor failed exact division");
                    return hp;
                }
            }
        }
        if (!too_wide) return std::nullopt;  // complete search, nothing divides
        tol = tol / pow_int(Int(2), 64);
        for (auto& disk : disks) disk = refine_disk(disk, q, tol);
    }
    throw undecided_error("factor search exceeded the refinement cap");
}

bool is_irreducible(const IntPoly& p) { return !find_factor(p).has_value(); }

}  // namespace qap
