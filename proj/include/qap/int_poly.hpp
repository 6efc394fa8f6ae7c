#ifndef QAP_INT_POLY_HPP
#define QAP_INT_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qap/rational.hpp"

namespace qap {

// Dense integer polynomial, ascending coefficients, no stored trailing zeros.
// The zero polynomial is the empty coefficient vector (degree undefined).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPoly x() { return IntPoly({0, 1}); }
    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of a nonzero polynomial; throws on the zero polynomial.
    int degree() const;
    const Int& coeff(int i) const;  // 0 outside range
    const Int& lc() const;          // leading coefficient, nonzero polynomial only
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;

    Rat eval(const Rat& x) const;
    Int eval(const Int& x) const;
    IntPoly derivative() const;
    // P(X + a)
    IntPoly shift(const Int& a) const;
    // X^deg * P(1/X)
    IntPoly reverse() const;
    // P(-X)
    IntPoly negate_var() const;
    // P(kX)
    IntPoly scale_var(const Int& k) const;

    std::string str() const;  // human-readable, e.g. "X^4 - X - 1"

  private:
    void normalize();
    std::vector<Int> c_;
};

// max_i |c_i|; domain error for the zero polynomial.
Int poly_height(const IntPoly& p);

// (content, primitive part with positive leading coefficient); domain error on zero.
std::pair<Int, IntPoly> content_and_primitive(const IntPoly& p);

// Sylvester-determinant resultant: Res(f,g) = lc(f)^{deg g} * prod_{f(b)=0} g(b).
Int resultant(const IntPoly& f, const IntPoly& g);

// (-1)^{d(d-1)/2} * Res(P, P') / lc(P); domain error for constants.
Int discriminant(const IntPoly& p);

// True division test: returns quotient iff g divides p exactly over Z[X].
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& g);

// Primitive gcd over Z[X] (positive leading coefficient; content dropped).
IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b);

bool is_squarefree(const IntPoly& p);

// Number of real roots of a squarefree polynomial (Sturm).
int count_real_roots(const IntPoly& p);
// Real roots in the half-open interval (a, b].
int count_real_roots_in(const IntPoly& p, const Rat& a, const Rat& b);

// Irreducibility over Q for primitive polynomials of degree 1..8.
// Rational-root test, then candidate factors assembled from certified root
// clusters (conjugation-closed subsets), Mignotte-bounded, verified by exact
// division.  Throws unsupported_error above degree 8, domain_error otherwise.
bool is_irreducible(const IntPoly& p);
// Same decision, but also reports a nontrivial factor when reducible.
std::optional<IntPoly> find_factor(const IntPoly& p);

// Dense rational polynomial; used for K = Q[X]/(f) arithmetic.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit QPoly(const IntPoly& p);
    static QPoly constant(Rat v) {
        QPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static QPoly x() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const;
    const Rat& coeff(int i) const;
    const Rat& lc() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& k) const;

    Rat eval(const Rat& x) const;
    QPoly derivative() const;

    // Clears denominators and primitivizes; sign preserved unless normalize_sign.
    IntPoly to_int_primitive(bool normalize_sign = true) const;

    std::string str() const;

  private:
    void normalize();
    std::vector<Rat> c_;
};

// Quotient/remainder over Q[X]; divisor nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd_monic(const QPoly& a, const QPoly& b);
// g = gcd(a,b) monic plus s,t with s*a + t*b = g.
struct XgcdResult {
    QPoly g, s, t;
};
XgcdResult xgcd(const QPoly& a, const QPoly& b);

}  // namespace qap

#endif
