#ifndef QAP_ALGEBRAIC_HPP
#define QAP_ALGEBRAIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qap/int_poly.hpp"
#include "qap/roots.hpp"

namespace qap {

// An algebraic number: canonical primitive irreducible minimal polynomial plus
// the index of one root in the (Re, Im)-lex ordering.  Immutable; refinement
// returns a new value with the same root indices.
class AlgebraicNumber {
  public:
    // Canonicalizes (primitive part, positive leading coefficient), enforces
    // irreducibility (the error names a factor when one exists), isolates all
    // roots, and selects root_index.
    static AlgebraicNumber make(const IntPoly& p, int root_index);
    static AlgebraicNumber from_rat(const Rat& q);
    // For minimal polynomials already certified irreducible (skips the gate).
    static AlgebraicNumber make_prevalidated(IntPoly p, int root_index);

    const IntPoly& minpoly() const { return core_->minpoly; }
    int degree() const { return core_->minpoly.degree(); }
    int root_index() const { return core_->index; }
    const RootDisk& disk() const { return core_->conj[static_cast<size_t>(core_->index)]; }
    const std::vector<RootDisk>& conjugates() const { return core_->conj; }
    bool is_real() const { return disk().real_root; }
    bool is_rational() const { return degree() == 1; }

    // All conjugate disks refined to radius <= tol (same indices).
    AlgebraicNumber refined(const Rat& tol) const;

    bool same_number(const AlgebraicNumber& o) const {
        return core_->minpoly == o.core_->minpoly && core_->index == o.core_->index;
    }
    bool same_field_presentation(const AlgebraicNumber& o) const { return same_number(o); }

    std::string str() const;  // "<poly>@<k>"

  private:
    struct Core {
        IntPoly minpoly;
        std::vector<RootDisk> conj;
        int index = 0;
    };
    explicit AlgebraicNumber(std::shared_ptr<const Core> core) : core_(std::move(core)) {}
    std::shared_ptr<const Core> core_;
};

// Element of K = Q[X]/(f) as a reduced rational-coefficient representative.
class FieldElement {
  public:
    FieldElement(AlgebraicNumber base, QPoly rep);
    static FieldElement from_rat(const AlgebraicNumber& base, const Rat& q);
    static FieldElement generator(const AlgebraicNumber& base);

    const AlgebraicNumber& base() const { return base_; }
    const QPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const;
    bool is_integral_rep() const;  // integer coefficients

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;  // binary exponentiation; e < 0 inverts
    bool operator==(const FieldElement& o) const;

    // Certified value under the embedding sending the generator to conjugate k.
    ComplexIv embed(int conj_index, mpfr_prec_t prec) const;

    std::string str() const;

  private:
    void check_same_base(const FieldElement& o) const;
    AlgebraicNumber base_;
    QPoly rep_;
};

struct HeightReport {
    Int naive_height;
    RealIv weil;
    RealIv weil_star;
};

// Logarithmic Weil height h(a) = (1/d)(log|lc| + sum_i log max(1, |a_i|)) as a
// certified interval of width <= tol.
RealIv weil_height(const AlgebraicNumber& a, const Rat& tol);
HeightReport height_report(const AlgebraicNumber& a, const Rat& tol);
RealIv weil_height(const FieldElement& u, const Rat& tol);

// Exact primitive minimal polynomial over Q (characteristic polynomial of the
// multiplication matrix; its squarefree part is the minimal polynomial since
// the characteristic polynomial is a power of one irreducible).
IntPoly minpoly_of_element(const FieldElement& u);

// The element as an AlgebraicNumber (root index certified numerically).
AlgebraicNumber to_algebraic(const FieldElement& u);

// r with r(xi) = conj(xi) if the complex conjugate lies in Q(xi), else nullopt
// (certified in both directions for degree <= 8); see implementation notes.
std::optional<QPoly> conj_in_field(const AlgebraicNumber& xi);

// |xi - alpha| as a certified interval of width <= tol; exact zero when the
// numbers coincide (decided structurally, never numerically alone).
RealIv distance_between(const AlgebraicNumber& xi, const AlgebraicNumber& alpha, const Rat& tol);

}  // namespace qap

#endif
