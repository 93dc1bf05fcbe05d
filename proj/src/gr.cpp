#include "k4/gr.hpp"
#include "k4/contact.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace k4 {

namespace {

bool x_dual(char q) { return q == 'B' || q == 'C'; }
bool y_dual(char q) { return q == 'C' || q == 'D'; }

bool valid_pos(char q, int m, int n) {
    switch (q) {
    case 'A': return m >= 0 && n >= 0;
    case 'B': return m <= 0 && n >= 0;
    case 'C': return m <= 0 && n <= 0;
    case 'D': return m >= 0 && n <= 0;
    }
    return false;
}

int plus_count(unsigned mask) { return std::popcount(mask & 0x3u); }
int minus_count(unsigned mask) { return std::popcount(mask & 0xCu); }

} // namespace

std::vector<GrMono> gr_basis(const GrFamily& fam, int m, int n) {
    std::vector<GrMono> out;
    if (!valid_pos(fam.q, m, n)) return out;
    int mm = m < 0 ? -m : m, nn = n < 0 ? -n : n;
    for (int e1 = nn; e1 >= 0; --e1) {
        int e2 = nn - e1;
        int p = y_dual(fam.q) ? -e1 : e1;
        int qq = y_dual(fam.q) ? -e2 : e2;
        int kp = fam.a - p, km = fam.b - qq;
        if (kp < 0 || kp > 2 || km < 0 || km > 2) continue;
        for (int x1 = mm; x1 >= 0; --x1) {
            for (unsigned mask = 0; mask < 16; ++mask) {
                if (plus_count(mask) != kp || minus_count(mask) != km) continue;
                out.push_back(GrMono{mask, x1, mm - x1, e1, e2});
            }
        }
    }
    return out;
}

namespace {

struct DiffTerm {
    int bit; // lambda letter index
    int xj;  // 0 none, else 1 or 2
    int yj;  // 0 none, else 1 or 2
};

// Applies one differential term to a monomial; returns false if it vanishes.
bool apply_term(const DiffTerm& t, char q, GrMono& w, GRat& coeff) {
    unsigned bit = 1u << t.bit;
    if (w.lmask & bit) return false;
    int sgn = grassmann_sign(w.lmask, bit);
    coeff *= GRat(sgn);
    w.lmask |= bit;
    if (t.xj != 0) {
        int& e = (t.xj == 1) ? w.x1 : w.x2;
        if (x_dual(q)) {
            ++e;
        } else {
            if (e == 0) return false;
            coeff *= GRat(e);
            --e;
        }
    }
    if (t.yj != 0) {
        int& e = (t.yj == 1) ? w.y1 : w.y2;
        if (y_dual(q)) {
            ++e;
        } else {
            if (e == 0) return false;
            coeff *= GRat(e);
            --e;
        }
    }
    return true;
}

Matrix term_matrix(const std::vector<DiffTerm>& terms, char q,
                   const std::vector<GrMono>& src, const std::vector<GrMono>& dst) {
    std::map<GrMono, int> index;
    for (size_t k = 0; k < dst.size(); ++k) index[dst[k]] = static_cast<int>(k);
    Matrix mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t col = 0; col < src.size(); ++col) {
        for (const DiffTerm& t : terms) {
            GrMono w = src[col];
            GRat c(1);
            if (!apply_term(t, q, w, c)) continue;
            auto it = index.find(w);
            if (it == index.end()) throw std::logic_error("term_matrix: image outside target basis");
            mat.at(it->second, static_cast<int>(col)) += c;
        }
    }
    return mat;
}

} // namespace

Matrix gr_diff_matrix(const GrFamily& fam, int m, int n, GrDiff which) {
    std::vector<DiffTerm> terms;
    switch (which) {
    case GrDiff::Nabla:
        terms = {{0, 1, 1}, {1, 2, 1}, {2, 1, 2}, {3, 2, 2}};
        break;
    case GrDiff::DPrime:
        terms = {{0, 1, 1}, {1, 2, 1}};
        break;
    case GrDiff::DDoublePrime:
        terms = {{2, 1, 2}, {3, 2, 2}};
        break;
    }
    return term_matrix(terms, fam.q, gr_basis(fam, m, n), gr_basis(fam, m - 1, n - 1));
}

Matrix gr_n2_matrix(const GrFamily& fam, int m) {
    GrFamily mid{fam.q, fam.a + 1, fam.b};
    GrFamily dst{fam.q, fam.a + 1, fam.b + 1};
    std::vector<DiffTerm> dplus = {{0, 1, 0}, {1, 2, 0}};
    std::vector<DiffTerm> dminus = {{2, 1, 0}, {3, 2, 0}};
    Matrix up = term_matrix(dplus, fam.q, gr_basis(fam, m, 0), gr_basis(mid, m - 1, 0));
    Matrix dn = term_matrix(dminus, fam.q, gr_basis(mid, m - 1, 0), gr_basis(dst, m - 2, 0));
    return matmul(dn, up);
}

int gr_homology(const GrFamily& fam, int m, int n, bool circ) {
    if (!valid_pos(fam.q, m, n)) return 0;
    int cols = static_cast<int>(gr_basis(fam, m, n).size());
    if (cols == 0) return 0;

    std::optional<Matrix> omat, imat;
    if (valid_pos(fam.q, m - 1, n - 1)) omat = gr_diff_matrix(fam, m, n);
    if (valid_pos(fam.q, m + 1, n + 1)) imat = gr_diff_matrix(fam, m + 1, n + 1);

    bool sub = circ && n == 0 && (fam.q == 'A' || fam.q == 'B');
    bool quo = circ && n == 0 && (fam.q == 'C' || fam.q == 'D');

    if (sub) {
        Matrix n2 = gr_n2_matrix(fam, m);
        int kdim = cols - n2.rank();
        int rin = 0;
        if (imat) {
            if (!is_zero_matrix(matmul(n2, *imat)))
                throw std::logic_error("gr_homology: image not inside the kernel space");
            rin = imat->rank();
        }
        return kdim - rin;
    }
    if (quo) {
        GrFamily src{fam.q, fam.a - 1, fam.b - 1};
        Matrix w = gr_n2_matrix(src, m + 2);
        if (omat) {
            if (!is_zero_matrix(matmul(*omat, w)))
                throw std::logic_error("gr_homology: quotient space is not nabla closed");
        }
        int ker = cols - (omat ? omat->rank() : 0);
        return ker - w.rank();
    }
    int ker = cols - (omat ? omat->rank() : 0);
    int rin = imat ? imat->rank() : 0;
    if (omat && imat && !is_zero_matrix(matmul(*omat, *imat)))
        throw std::logic_error("gr_homology: nabla squared is nonzero");
    return ker - rin;
}

namespace {

// Basis of Lambda_+^p Lambda_-^q [x]_d: lambda mask and x1 exponent.
std::vector<std::pair<unsigned, int>> lam_basis(int p, int q, int d) {
    std::vector<std::pair<unsigned, int>> out;
    if (p < 0 || p > 2 || q < 0 || q > 2 || d < 0) return out;
    for (int x1 = d; x1 >= 0; --x1)
        for (unsigned mask = 0; mask < 16; ++mask)
            if (plus_count(mask) == static_cast<int>(p) && minus_count(mask) == q)
                out.push_back({mask, x1});
    return out;
}

// Matrix of Delta+ (plus = true) or Delta- on Lambda_.^p Lambda_.^q [x]_d.
// Polynomial variables differentiate, dual variables multiply.
Matrix lam_delta(bool plus, int p, int q, int d, bool dual) {
    auto src = lam_basis(p, q, d);
    auto dst = lam_basis(p + (plus ? 1 : 0), q + (plus ? 0 : 1), d + (dual ? 1 : -1));
    std::map<std::pair<unsigned, int>, int> index;
    for (size_t k = 0; k < dst.size(); ++k) index[dst[k]] = static_cast<int>(k);
    int bits[2] = {plus ? 0 : 2, plus ? 1 : 3}; // letters paired with x1, x2
    Matrix mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t col = 0; col < src.size(); ++col) {
        auto [mask, x1] = src[col];
        int exps[2] = {x1, d - x1};
        for (int j = 0; j < 2; ++j) {
            unsigned bit = 1u << bits[j];
            if (mask & bit) continue;
            GRat c(grassmann_sign(mask, bit));
            int nx1 = x1;
            if (dual) {
                nx1 += (j == 0) ? 1 : 0;
            } else {
                if (exps[j] == 0) continue;
                c *= GRat(exps[j]);
                nx1 -= (j == 0) ? 1 : 0;
            }
            auto it = index.find({mask | bit, nx1});
            if (it == index.end()) throw std::logic_error("lam_delta: image outside target");
            mat.at(it->second, static_cast<int>(col)) += c;
        }
    }
    return mat;
}

int nullity(const Matrix& m) { return m.cols() - m.rank(); }

} // namespace

std::map<int, int> ladder_s_homology(int a, int b) {
    std::map<int, int> h;
    for (int k = 0; k <= a; ++k) h[k] = 0;
    int smax = a + b + 10;
    for (int s = 0; s <= smax; ++s) {
        bool tail_zero = true;
        for (int k = 0; k <= a; ++k) {
            int e = s - k; // ambient x-degree at position k
            if (e < 0) continue;
            // B_k at ambient degree e: Delta- from (k, b, e+1)
            Matrix bk = lam_delta(false, k, b, e + 1, false);
            Matrix ck = matmul(lam_delta(true, k, b + 1, e, false), bk);
            int dim = nullity(ck) - nullity(bk);
            if (k > 0) {
                Matrix bk1 = lam_delta(false, k - 1, b, e + 2, false);
                Matrix ck1 = matmul(lam_delta(true, k - 1, b + 1, e + 1, false), bk1);
                dim -= ck1.rank();
            }
            if (dim != 0) tail_zero = false;
            h[k] += dim;
        }
        if (s > smax - 3 && !tail_zero)
            throw std::logic_error("ladder_s_homology: slices did not stabilize");
    }
    return h;
}

std::map<int, int> ladder_t_homology(int a, int b) {
    std::map<int, int> h;
    for (int k = a; k <= 2; ++k) h[k] = 0;
    int smax = 10;
    for (int s = -2; s <= smax; ++s) {
        bool tail_zero = true;
        for (int k = a; k <= 2; ++k) {
            int e = s + k; // source dual degree at position k
            if (e < 0) continue;
            Matrix bk = lam_delta(false, k, b - 1, e, true);
            Matrix ck = matmul(lam_delta(true, k, b, e + 1, true), bk);
            int dim = nullity(ck) - nullity(bk);
            if (e >= 1) {
                Matrix bk1 = lam_delta(false, k - 1, b - 1, e - 1, true);
                Matrix ck1 = matmul(lam_delta(true, k - 1, b, e, true), bk1);
                dim -= ck1.rank();
            }
            if (dim != 0) tail_zero = false;
            h[k] += dim;
        }
        if (s > smax - 3 && !tail_zero)
            throw std::logic_error("ladder_t_homology: slices did not stabilize");
    }
    return h;
}

} // namespace k4
