#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k4/weightmod.hpp"

using namespace k4;

TEST_CASE("module parse and str") {
    Module a = Module::parse("A:1,1");
    CHECK(a.q == 'A');
    CHECK(a.m == 1);
    CHECK(a.n == 1);
    CHECK(a.str() == "A:1,1");
    Module c = Module::parse("C:-1,-1");
    CHECK(c.str() == "C:-1,-1");
    CHECK(c.x_dual());
    CHECK(c.y_dual());
    CHECK_THROWS(Module::parse("A:-1,0"));
    CHECK_THROWS(Module::parse("C:1,0"));
    CHECK_THROWS(Module::parse("E:0,0"));
}

TEST_CASE("highest weight data") {
    // mu_t and mu_C by quadrant, from the identification of the V_X.
    CHECK(Module{'A', 1, 1}.mu_t() == GRat(-1));
    CHECK(Module{'A', 1, 1}.mu_c() == GRat(0));
    CHECK(Module{'A', 0, 0}.mu_t() == GRat(0));
    CHECK(Module{'C', 0, 0}.mu_t() == GRat(2));
    CHECK(Module{'C', 0, 0}.mu_c() == GRat(0));
    CHECK(Module{'C', -1, -1}.mu_t() == GRat(3));
    CHECK(Module{'C', -1, -1}.mu_c() == GRat(0));
    CHECK(Module{'B', 0, 0}.mu_t() == GRat(1));
    CHECK(Module{'B', 0, 0}.mu_c() == GRat(-1));
    CHECK(Module{'D', 0, 0}.mu_t() == GRat(1));
    CHECK(Module{'D', 0, 0}.mu_c() == GRat(1));
    CHECK(Module{'B', -2, 1}.mu_t() == GRat(mpq_class(3, 2)));
    CHECK(Module{'B', -2, 1}.mu_c() == GRat(mpq_class(-5, 2)));
}

TEST_CASE("dimension and basis") {
    Module m{'A', 2, 1};
    CHECK(m.dim() == 6);
    CHECK(m.basis().size() == 6);
    CHECK(m.basis().front() == m.hw());
    Module c{'C', -1, -2};
    CHECK(c.dim() == 6);
    CHECK(c.basis().front() == c.hw());
}

TEST_CASE("hw vector weights") {
    // The highest weight vector is an (hx, hy) weight vector of weight (m, n)
    // in quadrant A.
    Module mod{'A', 2, 3};
    VElt hw = VElt::mono(mod.hw());
    CHECK(g0_action(elems::hx(), hw, mod) == hw * GRat(2));
    CHECK(g0_action(elems::hy(), hw, mod) == hw * GRat(3));
    CHECK(g0_action(elems::ex(), hw, mod).is_zero());
    CHECK(g0_action(elems::ey(), hw, mod).is_zero());
}

TEST_CASE("xop and yop") {
    Module mod{'A', 1, 0};
    // x_2 d/dx_1 sends x_1 to x_2.
    VElt v = VElt::mono(WMono{1, 0, 0, 0});
    CHECK(xop(2, 1, v, mod) == VElt::mono(WMono{0, 1, 0, 0}));
    CHECK(xop(1, 2, v, mod).is_zero());
    CHECK(xop(1, 1, v, mod) == v);
    // In the dual quadrant the roles are transposed with a sign.
    Module dual{'B', -1, 0};
    VElt w = VElt::mono(WMono{1, 0, 0, 0});
    CHECK(xop(2, 1, w, dual).is_zero());
    CHECK(xop(1, 2, w, dual) == VElt::mono(WMono{0, 1, 0, 0}, GRat(-1)));
    CHECK(xop(1, 1, w, dual) == w * GRat(-1));
}

TEST_CASE("g0 action is a Lie action") {
    std::vector<ContactElt> g0 = {elems::hx(), elems::hy(), elems::ex(),
                                  elems::ey(), elems::fx(), elems::fy(),
                                  elems::t()};
    std::vector<Module> mods = {Module{'A', 1, 1}, Module{'B', -2, 1},
                                Module{'C', -1, -1}, Module{'D', 1, -2}};
    for (const Module& mod : mods)
        for (const ContactElt& g : g0)
            for (const ContactElt& h : g0)
                for (const WMono& f : mod.basis()) {
                    VElt v = VElt::mono(f);
                    VElt lhs = g0_action(contact_bracket(g, h), v, mod);
                    VElt rhs = g0_action(g, g0_action(h, v, mod), mod) -
                               g0_action(h, g0_action(g, v, mod), mod);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("central element acts by mu_c") {
    std::vector<Module> mods = {Module{'A', 1, 2}, Module{'B', -1, 1},
                                Module{'C', -2, -1}, Module{'D', 2, -1}};
    for (const Module& mod : mods) {
        VElt v = VElt::mono(mod.hw());
        CHECK(g0_action(elems::C(), v, mod) == v * mod.mu_c());
        CHECK(g0_action(elems::t(), v, mod) == v * mod.mu_t());
    }
}

TEST_CASE("mono str") {
    Module a{'A', 1, 1};
    CHECK(a.mono_str(WMono{1, 0, 1, 0}) == "x1 y1");
    Module c{'C', -1, -1};
    CHECK(c.mono_str(WMono{0, 1, 0, 1}) == "dx2 dy2");
    CHECK(a.mono_str(WMono{0, 0, 0, 0}) == "1");
}
