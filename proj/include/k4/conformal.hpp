#ifndef K4_CONFORMAL_HPP
#define K4_CONFORMAL_HPP

#include "k4/contact.hpp"
#include "k4/scalars.hpp"

#include <map>
#include <vector>

namespace k4 {

// Monomial d^p xi_I of the conformal superalgebra K4 = C[d] (x) Lambda(4),
// where d denotes the translation generator (written as a partial derivative
// in the usual notation).
struct ConfMono {
    int d = 0;
    unsigned mask = 0;
    auto operator<=>(const ConfMono&) const = default;
};

class ConfElt {
public:
    ConfElt() = default;
    static ConfElt mono(int d, unsigned mask, const GRat& c = GRat(1));

    const std::map<ConfMono, GRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ConfElt operator+(const ConfElt& o) const;
    ConfElt operator*(const GRat& s) const;
    ConfElt operator-(const ConfElt& o) const { return *this + o * GRat(-1); }
    ConfElt& operator+=(const ConfElt& o) { *this = *this + o; return *this; }
    bool operator==(const ConfElt& o) const { return terms_ == o.terms_; }

    void add_term(const ConfMono& mono, const GRat& c);

    // Applies the translation generator: multiplies every monomial by d.
    ConfElt apply_d() const;

private:
    std::map<ConfMono, GRat> terms_;
};

// Polynomial in lambda with ConfElt coefficients; index = power of lambda.
using LambdaPoly = std::vector<ConfElt>;

// Lambda-bracket of K4, extended by sesquilinearity from the formula on the
// generators xi_I.
LambdaPoly lambda_bracket(const ConfElt& a, const ConfElt& b);

// n-th product a_(n) b = n! times the lambda^n coefficient.
ConfElt nth_product(const ConfElt& a, const ConfElt& b, int n);

// The bracket [a_{-lambda-d} b], the right hand side of skew-symmetry.
LambdaPoly lambda_bracket_shifted(const ConfElt& a, const ConfElt& b);

// Parity of a homogeneous element; throws on mixed parity.
int conf_parity(const ConfElt& a);

// Polynomial in (lambda, mu) with ConfElt coefficients.
using LambdaMuPoly = std::map<std::pair<int, int>, ConfElt>;

// [a_lambda [b_mu c]] - (-1)^{p(a)p(b)} [b_mu [a_lambda c]]
// - [[a_lambda b]_{lambda+mu} c]; the zero polynomial iff Jacobi holds.
LambdaMuPoly jacobi_defect(const ConfElt& a, const ConfElt& b, const ConfElt& c);

// Element of the annihilation algebra: span of xi_I y^m modulo the relations
// d(c) y^q = -q c y^{q-1} and d(c) y^0 = 0.
struct AnnMono {
    unsigned mask = 0;
    int ypow = 0;
    auto operator<=>(const AnnMono&) const = default;
};

class AnnElt {
public:
    AnnElt() = default;
    static AnnElt mono(unsigned mask, int ypow, const GRat& c = GRat(1));

    const std::map<AnnMono, GRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AnnElt operator+(const AnnElt& o) const;
    AnnElt operator*(const GRat& s) const;
    AnnElt operator-(const AnnElt& o) const { return *this + o * GRat(-1); }
    bool operator==(const AnnElt& o) const { return terms_ == o.terms_; }

    void add_term(const AnnMono& mono, const GRat& c);

private:
    std::map<AnnMono, GRat> terms_;
};

// Bracket of the annihilation algebra.
AnnElt annihilation_bracket(const AnnElt& a, const AnnElt& b);

// The identification xi_I y^m |-> t^m xi_I with the non-central part of the
// contact algebra.
ContactElt ann_to_contact(const AnnElt& a);

} // namespace k4

#endif
