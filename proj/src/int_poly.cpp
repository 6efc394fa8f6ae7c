#include "qap/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace qap {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::degree() const {
    if (c_.empty()) throw domain_error("degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const Int& IntPoly::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
    IntPoly r = *this;
    for (auto& v : r.c_) v *= k;
    r.normalize();
    return r;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shift(const Int& a) const {
    // Horner: P(X+a) built from the top coefficient down.
    IntPoly r;
    IntPoly xa({0, 1});
    xa = xa + IntPoly::constant(a);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * xa + IntPoly::constant(*it);
    return r;
}

IntPoly IntPoly::reverse() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::negate_var() const {
    IntPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

IntPoly IntPoly::scale_var(const Int& k) const {
    IntPoly r = *this;
    Int f(1);
    for (size_t i = 1; i < r.c_.size(); ++i) {
        f *= k;
        r.c_[i] *= f;
    }
    r.normalize();
    return r;
}

namespace {
std::string term_str(const Int& c, int i, bool first) {
    std::ostringstream os;
    Int a = c;
    if (first) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) {
        os << "X";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}
}  // namespace

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        s += term_str(c_[static_cast<size_t>(i)], i, first);
        first = false;
    }
    return s;
}

Int poly_height(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("height of zero polynomial");
    Int h(0);
    for (const auto& c : p.coeffs()) {
        Int a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

std::pair<Int, IntPoly> content_and_primitive(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("content of zero polynomial");
    Int g(0);
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    std::vector<Int> q;
    q.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) q.push_back(c / g);
    IntPoly prim{std::move(q)};
    if (prim.lc() < 0) prim = -prim;
    return {g, prim};
}

namespace {
// Bareiss fraction-free determinant; exact over Z.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return Int(1);
    Int sign(1), prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}
}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw domain_error("resultant of zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0) return pow_int(f.lc(), static_cast<unsigned long>(n));
    if (n == 0) return pow_int(g.lc(), static_cast<unsigned long>(m));
    const size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
    // n rows of f's coefficients, then m rows of g's (descending order).
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = f.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = g.coeff(n - j);
    return bareiss_det(std::move(s));
}

Int discriminant(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) throw domain_error("discriminant needs degree >= 1");
    const int d = p.degree();
    if (d == 1) return Int(1);
    Int r = resultant(p, p.derivative());
    Int q = r / p.lc();  // exact
    return ((static_cast<long>(d) * (d - 1) / 2) % 2 == 0) ? q : -q;
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& g) {
    if (g.is_zero()) throw domain_error("division by zero polynomial");
    if (p.is_zero()) return IntPoly();
    if (p.degree() < g.degree()) return std::nullopt;
    std::vector<Int> rem(p.coeffs());
    std::vector<Int> quot(static_cast<size_t>(p.degree() - g.degree()) + 1, Int(0));
    const int dg = g.degree();
    for (int i = p.degree(); i >= dg; --i) {
        Int& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), g.lc().get_mpz_t())) return std::nullopt;
        Int q = top / g.lc();
        quot[static_cast<size_t>(i - dg)] = q;
        for (int j = 0; j <= dg; ++j) rem[static_cast<size_t>(i - dg + j)] -= q * g.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

QPoly::QPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
    normalize();
}

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPoly::degree() const {
    if (c_.empty()) throw domain_error("degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const Rat& QPoly::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

const Rat& QPoly::lc() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (c_.empty() || o.c_.empty()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& k) const {
    QPoly r = *this;
    for (auto& v : r.c_) v *= k;
    r.normalize();
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(r));
}

IntPoly QPoly::to_int_primitive(bool normalize_sign) const {
    if (c_.empty()) return IntPoly();
    Int den(1);
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Int> z;
    z.reserve(c_.size());
    for (const auto& v : c_) {
        Rat s = v * Rat(den);
        z.emplace_back(s.get_num());
    }
    IntPoly p{std::move(z)};
    auto [cont, prim] = content_and_primitive(p);
    (void)cont;
    if (!normalize_sign && p.lc() < 0) return -prim;
    return prim;
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Rat& v = c_[static_cast<size_t>(i)];
        if (v == 0) continue;
        Rat a = v;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            os << "X";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw domain_error("division by zero polynomial");
    QPoly q, r = a;
    const int db = b.degree();
    const Rat inv_lc = Rat(1) / b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        const int k = r.degree() - db;
        Rat c = r.lc() * inv_lc;
        std::vector<Rat> mono(static_cast<size_t>(k) + 1, Rat(0));
        mono.back() = c;
        QPoly m{std::move(mono)};
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

QPoly gcd_monic(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x * (Rat(1) / x.lc());
}

XgcdResult xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(Rat(1)), s1;
    QPoly t0, t1 = QPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = s0 - q * s1;
        QPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat inv = Rat(1) / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return content_and_primitive(b).second;
    if (b.is_zero()) return content_and_primitive(a).second;
    QPoly g = gcd_monic(QPoly(a), QPoly(b));
    if (g.is_zero() || g.degree() == 0) return IntPoly({1});
    return g.to_int_primitive();
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    IntPoly g = gcd_primitive(p, p.derivative());
    return g.degree() == 0;
}

namespace {
int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sturm chain of a squarefree polynomial.
std::vector<QPoly> sturm_chain(const IntPoly& p) {
    std::vector<QPoly> chain;
    chain.emplace_back(p);
    chain.emplace_back(p.derivative());
    while (!chain.back().is_zero()) {
        auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
        (void)q;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int sign_variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    int prev = 0, var = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sign_of(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sign_variations_at_inf(const std::vector<QPoly>& chain, int dir) {
    int prev = 0, var = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sign_of(q.lc());
        if (dir < 0 && q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}
}  // namespace

int count_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("root count of zero polynomial");
    if (p.degree() == 0) return 0;
    if (!is_squarefree(p)) throw domain_error("root count requires a squarefree polynomial");
    auto chain = sturm_chain(p);
    return sign_variations_at_inf(chain, -1) - sign_variations_at_inf(chain, +1);
}

int count_real_roots_in(const IntPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw domain_error("root count of zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

}  // namespace qap
