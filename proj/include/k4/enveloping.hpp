#ifndef K4_ENVELOPING_HPP
#define K4_ENVELOPING_HPP

#include "k4/contact.hpp"
#include "k4/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace k4 {

// PBW monomial Th^k w11^{e0} w21^{e1} w12^{e2} w22^{e3} in U(g_-), with the
// w letters in the fixed order w11 < w21 < w12 < w22 and exponents in {0,1}.
// The mask stores bit 0 = w11, bit 1 = w21, bit 2 = w12, bit 3 = w22.
struct PBWMono {
    int theta = 0;
    unsigned mask = 0;

    auto operator<=>(const PBWMono&) const = default;

    // Z_{>=0}-grading: each w letter has degree 1, Theta has degree 2.
    int degree() const;
    int parity() const;

    std::string str() const;
    static PBWMono parse(const std::string& s);
};

class UElt {
public:
    UElt() = default;
    static UElt one() { return mono(0, 0); }
    static UElt mono(int theta, unsigned mask, const GRat& c = GRat(1));

    const std::map<PBWMono, GRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UElt operator+(const UElt& o) const;
    UElt operator*(const GRat& s) const;
    UElt operator-(const UElt& o) const { return *this + o * GRat(-1); }
    UElt& operator+=(const UElt& o) { *this = *this + o; return *this; }
    bool operator==(const UElt& o) const { return terms_ == o.terms_; }

    void add_term(const PBWMono& mono, const GRat& c);

    std::string str() const;

private:
    std::map<PBWMono, GRat> terms_;
};

// Product in U(g_-), straightened into PBW form using the Clifford relations
// {w11,w22} = 4 Theta, {w12,w21} = -4 Theta, w_ij^2 = 0, other pairs
// anticommute, Theta central. With gr = true the anticommutator terms are
// dropped, giving the associated graded (exterior) product.
UElt pbw_multiply(const UElt& a, const UElt& b, bool gr = false);

// Single w letter as an element (0 = w11, 1 = w21, 2 = w12, 3 = w22).
UElt w_letter(int idx);

// Image of the degree -1 generator xi_i in U, expressed in the w letters.
UElt eta(int i);

// Image of a g_{<0} element (span of the monomial 1 and the xi_i) in U.
// The monomial 1 maps to -2 Theta.
UElt negative_to_u(const ContactElt& g);

// Basis of PBW monomials of the given degree, ordered by theta power then
// mask. Degrees above 4 always have exactly 8 monomials.
std::vector<PBWMono> pbw_basis(int degree);

// Names of the letters in PBW order.
extern const char* const kWNames[4];

} // namespace k4

#endif
