#ifndef K4_WEIGHTMOD_HPP
#define K4_WEIGHTMOD_HPP

#include "k4/contact.hpp"
#include "k4/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace k4 {

// Monomial in the finite g_0-module V_X^{m,n}. The four exponents refer to
// the x-type pair and the y-type pair of variables; whether a pair means
// honest variables or dual variables (derivatives) depends on the quadrant.
struct WMono {
    int a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    auto operator<=>(const WMono&) const = default;
};

class VElt {
public:
    VElt() = default;
    static VElt mono(const WMono& m, const GRat& c = GRat(1));

    const std::map<WMono, GRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    VElt operator+(const VElt& o) const;
    VElt operator*(const GRat& s) const;
    VElt operator-(const VElt& o) const { return *this + o * GRat(-1); }
    VElt& operator+=(const VElt& o) { *this = *this + o; return *this; }
    bool operator==(const VElt& o) const { return terms_ == o.terms_; }

    void add_term(const WMono& m, const GRat& c);

private:
    std::map<WMono, GRat> terms_;
};

// A node of the quadrant diagram: V_X^{m,n} with signed bidegree (m,n).
// Quadrant A has m,n >= 0; B has m <= 0, n >= 0; C has m,n <= 0; D has
// m >= 0, n <= 0. The x variables are dual (derivatives) in B and C, the y
// variables are dual in C and D.
struct Module {
    char q = 'A';
    int m = 0, n = 0;

    auto operator<=>(const Module&) const = default;

    int mx() const { return m < 0 ? -m : m; }
    int ny() const { return n < 0 ? -n : n; }
    bool x_dual() const { return q == 'B' || q == 'C'; }
    bool y_dual() const { return q == 'C' || q == 'D'; }
    int dim() const { return (mx() + 1) * (ny() + 1); }

    // Highest weight data of the underlying F(m,n,mu_t,mu_c).
    GRat mu_t() const;
    GRat mu_c() const;
    WMono hw() const;

    // All monomials, highest weight vector first.
    std::vector<WMono> basis() const;

    std::string str() const;               // e.g. "A:1,1" or "C:-1,-1"
    static Module parse(const std::string& s);

    std::string mono_str(const WMono& w) const;
};

// Action of x_i d/dx_j (resp. y_i d/dy_j) on the x (resp. y) pair, honoring
// the quadrant's variable kinds.
VElt xop(int i, int j, const VElt& v, const Module& mod);
VElt yop(int i, int j, const VElt& v, const Module& mod);

// Action of a degree 0 element of the contact algebra, via the decomposition
// into t, C and the sl2 x sl2 named basis.
VElt g0_action(const ContactElt& g, const VElt& v, const Module& mod);

} // namespace k4

#endif
