#ifndef K4_VERMA_HPP
#define K4_VERMA_HPP

#include "k4/contact.hpp"
#include "k4/enveloping.hpp"
#include "k4/linalg.hpp"
#include "k4/weightmod.hpp"

#include <map>
#include <string>
#include <vector>

namespace k4 {

// Basis element u (x) f of the finite Verma module M_X^{m,n}.
struct VermaMono {
    PBWMono u;
    WMono f;
    auto operator<=>(const VermaMono&) const = default;
};

class MElt {
public:
    MElt() = default;
    static MElt mono(const PBWMono& u, const WMono& f, const GRat& c = GRat(1));
    static MElt base(const VElt& f); // 1 (x) f

    const std::map<VermaMono, GRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MElt operator+(const MElt& o) const;
    MElt operator*(const GRat& s) const;
    MElt operator-(const MElt& o) const { return *this + o * GRat(-1); }
    MElt& operator+=(const MElt& o) { *this = *this + o; return *this; }
    bool operator==(const MElt& o) const { return terms_ == o.terms_; }

    void add_term(const VermaMono& m, const GRat& c);

    // Left multiplication of the u component by an element of U(g_-).
    MElt umul(const UElt& u) const;

    std::string str(const Module& mod) const;

private:
    std::map<VermaMono, GRat> terms_;
};

// Action of an element of the annihilation superalgebra on the Verma module.
MElt act(const ContactElt& g, const MElt& v, const Module& mod);

// Basis of the degree d component: PBW monomials of degree d paired with the
// weight monomials of V_X, PBW part outermost.
std::vector<VermaMono> graded_basis(const Module& mod, int d);

// Coefficient vector of v in the given basis; throws if v has terms outside.
std::vector<GRat> coords(const MElt& v, const std::vector<VermaMono>& basis);

// (hx, hy) weight of a basis monomial; both act diagonally on u (x) f.
std::pair<GRat, GRat> hxy_weight(const VermaMono& m, const Module& mod);

// True if v is killed by the raising operators. In hw mode these are e1, e2
// and the two lowest weight vectors of g_1; in full mode additionally the
// whole g_1 basis.
bool is_singular(const MElt& v, const Module& mod, bool full = false);

// Basis of the space of singular vectors of degree d, each normalized so its
// first nonzero coordinate in the graded basis is 1. The search runs per
// (hx, hy) weight block. With hw the vectors are additionally required to be
// highest weight (killed by e1, e2).
std::vector<MElt> singular_space(const Module& mod, int d, bool hw = true);

// The singular vectors of Theorems sing1, sing2 and sing3, with the module
// they live in. Preconditions on (m,n) follow the theorems.
MElt sing_m1a(int m, int n, Module& mod);
MElt sing_m1b(int m, int n, Module& mod);
MElt sing_m1c(int m, int n, Module& mod);
MElt sing_m1d(int m, int n, Module& mod);
MElt sing_m2a(int n, Module& mod);
MElt sing_m2b(int m, Module& mod);
MElt sing_m2c(int m, Module& mod);
MElt sing_m2d(int n, Module& mod);
MElt sing_m3a(Module& mod);
MElt sing_m3b(Module& mod);

} // namespace k4

#endif
