#ifndef K4_CONTACT_HPP
#define K4_CONTACT_HPP

#include "k4/scalars.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace k4 {

// Monomial t^m xi_I of the contact superalgebra on Lambda(1,4)_+.
// I is stored as a 4-bit mask, bit i-1 for xi_i.
struct CMono {
    int m = 0;
    unsigned mask = 0;

    auto operator<=>(const CMono&) const = default;

    int xi_count() const;
    // Z-grading: deg(t^m xi_I) = 2m + |I| - 2.
    int degree() const { return 2 * m + xi_count() - 2; }
    // Parity: |I| mod 2 (0 even, 1 odd).
    int parity() const { return xi_count() % 2; }

    std::string str() const;
    static CMono parse(const std::string& s);
};

// Element of the annihilation superalgebra A(K'4): a linear combination of
// monomials t^m xi_I plus a multiple of the central element C.
class ContactElt {
public:
    ContactElt() = default;

    static ContactElt mono(int m, unsigned mask, const GRat& c = GRat(1));
    static ContactElt central(const GRat& c = GRat(1));

    const std::map<CMono, GRat>& terms() const { return terms_; }
    const GRat& c_part() const { return c_; }

    bool is_zero() const { return terms_.empty() && c_.is_zero(); }

    ContactElt operator+(const ContactElt& o) const;
    ContactElt operator-(const ContactElt& o) const;
    ContactElt operator*(const GRat& s) const;
    ContactElt operator-() const { return *this * GRat(-1); }
    ContactElt& operator+=(const ContactElt& o) { *this = *this + o; return *this; }
    bool operator==(const ContactElt& o) const {
        return terms_ == o.terms_ && c_ == o.c_;
    }

    void add_term(const CMono& mono, const GRat& c);
    void set_c(const GRat& c) { c_ = c; }

    // True if every monomial has the given Z-degree (C has degree 0).
    bool homogeneous_of_degree(int d) const;
    // True if every monomial has the given parity (C is even).
    bool homogeneous_of_parity(int p) const;

    std::string str() const;
    static ContactElt parse(const std::string& s);

private:
    std::map<CMono, GRat> terms_;
    GRat c_;
};

// Bracket of A(K'4): the contact bracket of K4 plus the 2-cocycle psi
// contributing multiples of C.
ContactElt contact_bracket(const ContactElt& a, const ContactElt& b);

// The cocycle value psi(f,g) for basis monomials.
GRat psi_cocycle(const CMono& f, const CMono& g);

// Sign of the Grassmann product xi_A xi_B; 0 if the masks intersect.
int grassmann_sign(unsigned a, unsigned b);

// Left partial derivative d/dxi_i (i in 1..4) on a mask; returns the sign
// and writes the reduced mask, or returns 0 if xi_i does not occur.
int xi_derivative(unsigned mask, int i, unsigned& out);

// Named elements of the paper's distinguished basis.
namespace elems {
ContactElt hx();
ContactElt hy();
ContactElt ex();
ContactElt ey();
ContactElt fx();
ContactElt fy();
ContactElt e1();
ContactElt e2();
ContactElt theta();   // -1/2 times the monomial 1, spans g_{-2}
ContactElt t();       // the grading element t
ContactElt C();       // central element
ContactElt xi(int i); // xi_i
ContactElt g1_lowest_even(); // t(xi1 + i xi2)
ContactElt g1_lowest_odd();  // (xi1 + i xi2) xi3 xi4
// Basis of g_1: t xi_1..t xi_4 followed by the four |I| = 3 monomials.
std::vector<ContactElt> g1_basis();
// Basis of g_0: the six xi_ij monomials, t and C.
std::vector<ContactElt> g0_basis();
// Basis of g_{-1}: xi_1..xi_4.
std::vector<ContactElt> gm1_basis();
} // namespace elems

// Decomposition of a degree 0 element as
// a*t + b*C + c0*hx + c1*hy + c2*ex + c3*ey + c4*fx + c5*fy.
struct G0Decomp {
    GRat t, c;
    std::array<GRat, 6> named; // order hx, hy, ex, ey, fx, fy
};
G0Decomp decompose_g0(const ContactElt& g);

} // namespace k4

#endif
