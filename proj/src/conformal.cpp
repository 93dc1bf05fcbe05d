#include "k4/conformal.hpp"

#include <bit>

namespace k4 {

ConfElt ConfElt::mono(int d, unsigned mask, const GRat& c) {
    ConfElt e;
    e.add_term(ConfMono{d, mask}, c);
    return e;
}

void ConfElt::add_term(const ConfMono& mono, const GRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ConfElt ConfElt::operator+(const ConfElt& o) const {
    ConfElt r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

ConfElt ConfElt::operator*(const GRat& s) const {
    ConfElt r;
    if (s.is_zero()) return r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, c * s);
    return r;
}

ConfElt ConfElt::apply_d() const {
    ConfElt r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(ConfMono{mono.d + 1, mono.mask}, c);
    return r;
}

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

void add_to(LambdaPoly& p, int lpow, const ConfElt& e) {
    if (static_cast<int>(p.size()) <= lpow) p.resize(lpow + 1);
    p[lpow] += e;
}

// Bracket of two generators xi_I, xi_J (no d powers).
LambdaPoly bracket_gen(unsigned maskA, unsigned maskB) {
    LambdaPoly out;
    int kA = std::popcount(maskA), kB = std::popcount(maskB);
    int sgn = grassmann_sign(maskA, maskB);
    if (sgn != 0) {
        // (|I| - 2) d(xi_{IJ})
        add_to(out, 0, ConfElt::mono(1, maskA | maskB, GRat((kA - 2) * sgn)));
        // lambda (|I| + |J| - 4) xi_{IJ}
        add_to(out, 1, ConfElt::mono(0, maskA | maskB, GRat((kA + kB - 4) * sgn)));
    }
    // (-1)^{|I|} sum_i (d_i xi_I)(d_i xi_J)
    int pf = (kA % 2 == 0) ? 1 : -1;
    for (int i = 1; i <= 4; ++i) {
        unsigned am, bm;
        int sa = xi_derivative(maskA, i, am);
        if (sa == 0) continue;
        int sb = xi_derivative(maskB, i, bm);
        if (sb == 0) continue;
        int sw = grassmann_sign(am, bm);
        if (sw == 0) continue;
        add_to(out, 0, ConfElt::mono(0, am | bm, GRat(pf * sa * sb * sw)));
    }
    return out;
}

} // namespace

LambdaPoly lambda_bracket(const ConfElt& a, const ConfElt& b) {
    LambdaPoly out;
    for (const auto& [am, ac] : a.terms()) {
        for (const auto& [bm, bc] : b.terms()) {
            LambdaPoly base = bracket_gen(am.mask, bm.mask);
            GRat coeff = ac * bc;
            // [d^p f lambda d^q g] = (-lambda)^p (lambda + d)^q [f lambda g]
            if (am.d % 2 == 1) coeff = -coeff;
            for (int n = 0; n < static_cast<int>(base.size()); ++n) {
                if (base[n].is_zero()) continue;
                for (int j = 0; j <= bm.d; ++j) {
                    // lambda^j d^{q-j} with binomial coefficient
                    ConfElt term = base[n] * (coeff * GRat(binom(bm.d, j)));
                    for (int k = 0; k < bm.d - j; ++k) term = term.apply_d();
                    add_to(out, n + am.d + j, term);
                }
            }
        }
    }
    return out;
}

ConfElt nth_product(const ConfElt& a, const ConfElt& b, int n) {
    LambdaPoly p = lambda_bracket(a, b);
    if (n < 0 || n >= static_cast<int>(p.size())) return ConfElt();
    GRat fact(1);
    for (int j = 2; j <= n; ++j) fact *= GRat(j);
    return p[n] * fact;
}

AnnElt AnnElt::mono(unsigned mask, int ypow, const GRat& c) {
    AnnElt e;
    e.add_term(AnnMono{mask, ypow}, c);
    return e;
}

void AnnElt::add_term(const AnnMono& mono, const GRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AnnElt AnnElt::operator+(const AnnElt& o) const {
    AnnElt r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

AnnElt AnnElt::operator*(const GRat& s) const {
    AnnElt r;
    if (s.is_zero()) return r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, c * s);
    return r;
}

namespace {

// Reduces a conformal element times y^q into the annihilation algebra using
// d(c) y^q = -q c y^{q-1} repeatedly; d(c) y^0 = 0.
AnnElt reduce(const ConfElt& e, int q, const GRat& scale) {
    AnnElt out;
    for (const auto& [mono, c] : e.terms()) {
        if (mono.d > q) continue;
        GRat coeff = c * scale;
        int yq = q;
        for (int j = 0; j < mono.d; ++j) {
            coeff *= GRat(-yq);
            --yq;
        }
        out = out + AnnElt::mono(mono.mask, yq, coeff);
    }
    return out;
}

} // namespace

AnnElt annihilation_bracket(const AnnElt& a, const AnnElt& b) {
    AnnElt out;
    for (const auto& [am, ac] : a.terms()) {
        for (const auto& [bm, bc] : b.terms()) {
            for (int j = 0; j <= am.ypow; ++j) {
                ConfElt prod = nth_product(ConfElt::mono(0, am.mask), ConfElt::mono(0, bm.mask), j);
                if (prod.is_zero()) continue;
                GRat coeff = ac * bc * GRat(binom(am.ypow, j));
                out = out + reduce(prod, am.ypow - j + bm.ypow, coeff);
            }
        }
    }
    return out;
}

ContactElt ann_to_contact(const AnnElt& a) {
    ContactElt out;
    for (const auto& [mono, c] : a.terms())
        out.add_term(CMono{mono.ypow, mono.mask}, c);
    return out;
}

LambdaPoly lambda_bracket_shifted(const ConfElt& a, const ConfElt& b) {
    // Substitute lambda -> -lambda - d in [a_lambda b], the translation
    // generator acting on the coefficients.
    LambdaPoly p = lambda_bracket(a, b);
    LambdaPoly out;
    for (int k = 0; k < static_cast<int>(p.size()); ++k) {
        // (-lambda - d)^k = sum_j binom(k,j) (-1)^k lambda^{k-j} d^j.
        ConfElt dj = p[k];
        for (int j = 0; j <= k; ++j) {
            int deg = k - j;
            if (static_cast<int>(out.size()) <= deg) out.resize(deg + 1);
            GRat c = GRat(binom(k, j)) * GRat((k % 2) ? -1 : 1);
            out[deg] += dj * c;
            dj = dj.apply_d();
        }
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

int conf_parity(const ConfElt& a) {
    int p = -1;
    for (const auto& [m, c] : a.terms()) {
        int q = std::popcount(m.mask) % 2;
        if (p < 0) p = q;
        if (p != q) throw std::invalid_argument("conf_parity: mixed parity");
    }
    return p < 0 ? 0 : p;
}

namespace {

void add_poly(LambdaMuPoly& acc, const LambdaMuPoly& p, const GRat& s) {
    for (const auto& [key, c] : p) {
        acc[key] += c * s;
        if (acc[key].is_zero()) acc.erase(key);
    }
}

// [a_lambda P] for a two-variable polynomial P, bracketing each coefficient.
LambdaMuPoly bracket_left(const ConfElt& a, const LambdaMuPoly& p) {
    LambdaMuPoly out;
    for (const auto& [key, c] : p) {
        LambdaPoly q = lambda_bracket(a, c);
        for (int k = 0; k < static_cast<int>(q.size()); ++k) {
            if (q[k].is_zero()) continue;
            auto nk = std::make_pair(key.first + k, key.second);
            out[nk] += q[k];
            if (out[nk].is_zero()) out.erase(nk);
        }
    }
    return out;
}

} // namespace

LambdaMuPoly jacobi_defect(const ConfElt& a, const ConfElt& b, const ConfElt& c) {
    LambdaMuPoly defect;

    LambdaMuPoly bc;
    {
        LambdaPoly q = lambda_bracket(b, c);
        for (int k = 0; k < static_cast<int>(q.size()); ++k)
            if (!q[k].is_zero()) bc[{0, k}] = q[k];
    }
    add_poly(defect, bracket_left(a, bc), GRat(1));

    LambdaMuPoly ac;
    {
        LambdaPoly q = lambda_bracket(a, c);
        for (int k = 0; k < static_cast<int>(q.size()); ++k)
            if (!q[k].is_zero()) ac[{k, 0}] = q[k];
    }
    // [b_mu .] adds powers of mu, so swap the roles of the indices.
    LambdaMuPoly bac_swapped;
    {
        LambdaMuPoly ac_swapped;
        for (const auto& [key, v] : ac) ac_swapped[{key.second, key.first}] = v;
        LambdaMuPoly t = bracket_left(b, ac_swapped);
        for (const auto& [key, v] : t) bac_swapped[{key.second, key.first}] = v;
    }
    int sgn = (conf_parity(a) * conf_parity(b)) % 2 ? 1 : -1;
    add_poly(defect, bac_swapped, GRat(sgn));

    // [[a_lambda b]_{lambda+mu} c], expanding (lambda+mu)^j binomially.
    LambdaPoly ab = lambda_bracket(a, b);
    for (int k = 0; k < static_cast<int>(ab.size()); ++k) {
        if (ab[k].is_zero()) continue;
        LambdaPoly q = lambda_bracket(ab[k], c);
        for (int j = 0; j < static_cast<int>(q.size()); ++j) {
            if (q[j].is_zero()) continue;
            for (int i = 0; i <= j; ++i) {
                auto key = std::make_pair(k + i, j - i);
                defect[key] += q[j] * GRat(-binom(j, i));
                if (defect[key].is_zero()) defect.erase(key);
            }
        }
    }
    return defect;
}

} // namespace k4
