#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k4/gr.hpp"

#include <algorithm>

using namespace k4;

namespace {

// dim Lambda^k of a two dimensional space.
int lam2(int k) { return (k == 0 || k == 2) ? 1 : (k == 1 ? 2 : 0); }

// Closed-form homology of the modified complexes, by quadrant and family.
int expected_circ(const GrFamily& fam, int m, int n) {
    int a = fam.a, b = fam.b;
    if (fam.q == 'A') {
        if (a < 0 || b < 0) return 0;
        if (a > 2 || b > 2) {
            int k = std::max(a, b);
            return (m == 0 && n >= k) ? lam2(a + b - n) : 0;
        }
        if (m == 0 && n >= std::max(a, b)) return lam2(a + b - n);
        if (m == 1 && n >= 0 && n <= std::min(a, b)) return lam2(a + b - n + 1);
        return 0;
    }
    if (fam.q == 'D') {
        if (a > 2 || b > 2) return 0;
        if (a < 0 || b < 0) {
            int k = std::min(a, b);
            return (m == 0 && n <= k) ? lam2(a + b - n) : 0;
        }
        return (m == 0 && n <= 0) ? lam2(a + b - n) : 0;
    }
    if (fam.q == 'C') {
        if (a > 2 || b > 2) return 0;
        if (a < 0 || b < 0) {
            int k = std::min(a, b);
            return (m == 0 && n <= k - 2) ? lam2(a + b - n - 2) : 0;
        }
        if (m == 0 && n <= std::min(a, b) - 2) return lam2(a + b - n - 2);
        if (m == -1 && n >= std::max(a, b) - 2 && n <= 0) return lam2(a + b - n - 3);
        return 0;
    }
    return -1;
}

} // namespace

TEST_CASE("basis dimensions are finite and consistent") {
    GrFamily fam{'A', 1, 1};
    CHECK(!gr_basis(fam, 1, 1).empty());
    CHECK(gr_basis(fam, -1, 0).empty());
    // Lambda exponents never exceed 2 per pair.
    for (const GrMono& g : gr_basis(fam, 2, 2)) {
        CHECK(g.x1 >= 0);
        CHECK(g.y1 >= 0);
    }
}

TEST_CASE("differential identities") {
    std::vector<GrFamily> fams = {GrFamily{'A', 1, 1}, GrFamily{'A', 2, 0},
                                  GrFamily{'C', 1, 1}, GrFamily{'D', 0, 1}};
    for (const GrFamily& fam : fams)
        for (int m = 0; m <= 3; ++m)
            for (int n = -2; n <= 3; ++n) {
                int sm = fam.q == 'C' ? -m : m;
                Matrix dp1 = gr_diff_matrix(fam, sm, n, GrDiff::DPrime);
                Matrix dp2 = gr_diff_matrix(fam, sm - 1, n - 1, GrDiff::DPrime);
                Matrix dq1 = gr_diff_matrix(fam, sm, n, GrDiff::DDoublePrime);
                Matrix dq2 = gr_diff_matrix(fam, sm - 1, n - 1, GrDiff::DDoublePrime);
                CHECK(is_zero_matrix(matmul(dp2, dp1)));
                CHECK(is_zero_matrix(matmul(dq2, dq1)));
                Matrix anti = matmul(dp2, dq1);
                Matrix anti2 = matmul(dq2, dp1);
                for (int r = 0; r < anti.rows(); ++r)
                    for (int c = 0; c < anti.cols(); ++c)
                        CHECK((anti.at(r, c) + anti2.at(r, c)).is_zero());
                // nabla = d' + d''.
                Matrix nab = gr_diff_matrix(fam, sm, n, GrDiff::Nabla);
                for (int r = 0; r < nab.rows(); ++r)
                    for (int c = 0; c < nab.cols(); ++c)
                        CHECK(nab.at(r, c) == dp1.at(r, c) + dq1.at(r, c));
            }
}

TEST_CASE("modified homology matches the closed forms") {
    for (char q : {'A', 'C', 'D'})
        for (int a = -1; a <= 3; ++a)
            for (int b = -1; b <= 3; ++b) {
                GrFamily fam{q, a, b};
                int mlo = (q == 'C') ? -2 : 0;
                int mhi = (q == 'C') ? 0 : 2;
                int nlo = (q == 'A') ? 0 : -4;
                int nhi = (q == 'A') ? 4 : 0;
                for (int m = mlo; m <= mhi; ++m)
                    for (int n = nlo; n <= nhi; ++n)
                        CHECK(gr_homology(fam, m, n, true) == expected_circ(fam, m, n));
            }
}

TEST_CASE("plain and modified complexes agree off the axis") {
    std::vector<GrFamily> fams = {GrFamily{'A', 1, 1}, GrFamily{'A', 2, 2},
                                  GrFamily{'C', 1, 1}, GrFamily{'D', 1, 0}};
    for (const GrFamily& fam : fams) {
        int nlo = fam.q == 'A' ? 1 : -3;
        int nhi = fam.q == 'A' ? 3 : -1;
        int mlo = fam.q == 'C' ? -2 : 0;
        int mhi = fam.q == 'C' ? 0 : 2;
        for (int m = mlo; m <= mhi; ++m)
            for (int n = nlo; n <= nhi; ++n) {
                if (n == 0) continue;
                CHECK(gr_homology(fam, m, n, false) == gr_homology(fam, m, n, true));
            }
    }
}

TEST_CASE("ladder homology") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (auto [k, d] : ladder_s_homology(a, b)) CHECK(d == lam2(k + 1 + b));
    for (int a = -1; a <= 2; ++a) {
        for (auto [k, d] : ladder_t_homology(a, 0)) CHECK(d == 0);
        for (auto [k, d] : ladder_t_homology(a, 1)) CHECK(d == lam2(k - 2));
    }
    // The one nonzero class of T(-1,1) sits at the top position.
    auto t = ladder_t_homology(-1, 1);
    CHECK(t.at(2) == 1);
}
