#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k4/enveloping.hpp"

using namespace k4;

TEST_CASE("degrees and parities") {
    CHECK(PBWMono{0, 0}.degree() == 0);
    CHECK(PBWMono{1, 0}.degree() == 2);
    CHECK(PBWMono{0, 0xF}.degree() == 4);
    CHECK(PBWMono{2, 0x5}.degree() == 6);
    CHECK(PBWMono{0, 0x7}.parity() == 1);
    CHECK(PBWMono{3, 0x3}.parity() == 0);
}

TEST_CASE("Clifford relations") {
    UElt w11 = w_letter(0), w21 = w_letter(1), w12 = w_letter(2), w22 = w_letter(3);
    CHECK(pbw_multiply(w11, w22) + pbw_multiply(w22, w11) == UElt::mono(1, 0, GRat(4)));
    CHECK(pbw_multiply(w12, w21) + pbw_multiply(w21, w12) == UElt::mono(1, 0, GRat(-4)));
    for (int j = 0; j < 4; ++j) CHECK(pbw_multiply(w_letter(j), w_letter(j)).is_zero());
    // The remaining pairs anticommute on the nose.
    int pairs[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    for (auto [i, j] : pairs)
        CHECK((pbw_multiply(w_letter(i), w_letter(j)) +
               pbw_multiply(w_letter(j), w_letter(i)))
                  .is_zero());
    // Theta is central.
    UElt th = UElt::mono(1, 0);
    for (int j = 0; j < 4; ++j)
        CHECK(pbw_multiply(th, w_letter(j)) == pbw_multiply(w_letter(j), th));
}

TEST_CASE("straightening") {
    // w22 w11 = -w11 w22 + 4 Theta.
    CHECK(pbw_multiply(w_letter(3), w_letter(0)) ==
          UElt::mono(0, 0x9, GRat(-1)) + UElt::mono(1, 0, GRat(4)));
    // w21 w11 = -w11 w21.
    CHECK(pbw_multiply(w_letter(1), w_letter(0)) == UElt::mono(0, 0x3, GRat(-1)));
}

TEST_CASE("associativity on low degree basis") {
    std::vector<PBWMono> basis;
    for (int d = 0; d <= 4; ++d)
        for (const PBWMono& m : pbw_basis(d)) basis.push_back(m);
    for (const PBWMono& a : basis)
        for (const PBWMono& b : basis)
            for (const PBWMono& c : basis) {
                if (a.degree() + b.degree() + c.degree() > 6) continue;
                UElt ua = UElt::mono(a.theta, a.mask);
                UElt ub = UElt::mono(b.theta, b.mask);
                UElt uc = UElt::mono(c.theta, c.mask);
                CHECK(pbw_multiply(pbw_multiply(ua, ub), uc) ==
                      pbw_multiply(ua, pbw_multiply(ub, uc)));
            }
}

TEST_CASE("associated graded product") {
    // With gr set the anticommutator terms are dropped: exterior algebra.
    CHECK(pbw_multiply(w_letter(3), w_letter(0), true) == UElt::mono(0, 0x9, GRat(-1)));
    CHECK(pbw_multiply(w_letter(2), w_letter(1), true) == UElt::mono(0, 0x6, GRat(-1)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK((pbw_multiply(w_letter(i), w_letter(j), true) +
                   pbw_multiply(w_letter(j), w_letter(i), true))
                      .is_zero());
}

TEST_CASE("eta images satisfy the xi relations") {
    // {eta_i, eta_j} must equal the image of [xi_i, xi_j] = -delta_ij,
    // which negative_to_u sends to 2 delta_ij Theta.
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            UElt anti = pbw_multiply(eta(i), eta(j)) + pbw_multiply(eta(j), eta(i));
            if (i == j)
                CHECK(anti == UElt::mono(1, 0, GRat(2)));
            else
                CHECK(anti.is_zero());
        }
}

TEST_CASE("eta and w letters are inverse changes of basis") {
    CHECK(eta(2) + eta(1) * GRat::i() == w_letter(0));
    CHECK(eta(4) + eta(3) * GRat::i() == w_letter(1));
    CHECK(eta(3) * GRat::i() - eta(4) == w_letter(2));
    CHECK(eta(2) - eta(1) * GRat::i() == w_letter(3));
    for (int i = 1; i <= 4; ++i)
        CHECK(negative_to_u(elems::xi(i)) == eta(i));
    CHECK(negative_to_u(ContactElt::mono(0, 0)) == UElt::mono(1, 0, GRat(-2)));
}

TEST_CASE("graded basis sizes") {
    size_t want[] = {1, 4, 7, 8, 8, 8, 8};
    for (int d = 0; d <= 6; ++d) CHECK(pbw_basis(d).size() == want[d]);
}

TEST_CASE("string round trips") {
    UElt u = UElt::mono(2, 0x5, GRat(mpq_class(1, 3), mpq_class(2))) + UElt::mono(0, 0xF);
    CHECK(PBWMono::parse(PBWMono{2, 0x5}.str()) == PBWMono{2, 0x5});
    CHECK(PBWMono::parse(PBWMono{0, 0}.str()) == PBWMono{0, 0});
    CHECK(u.str() == UElt(u).str());
}
