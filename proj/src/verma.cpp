#include "k4/verma.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace k4 {

MElt MElt::mono(const PBWMono& u, const WMono& f, const GRat& c) {
    MElt e;
    e.add_term(VermaMono{u, f}, c);
    return e;
}

MElt MElt::base(const VElt& f) {
    MElt e;
    for (const auto& [w, c] : f.terms()) e.add_term(VermaMono{PBWMono{}, w}, c);
    return e;
}

void MElt::add_term(const VermaMono& m, const GRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MElt MElt::operator+(const MElt& o) const {
    MElt r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MElt MElt::operator*(const GRat& s) const {
    MElt r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

MElt MElt::umul(const UElt& u) const {
    MElt r;
    for (const auto& [m, c] : terms_) {
        UElt prod = pbw_multiply(u, UElt::mono(m.u.theta, m.u.mask));
        for (const auto& [pm, pc] : prod.terms()) r.add_term(VermaMono{pm, m.f}, c * pc);
    }
    return r;
}

std::string MElt::str(const Module& mod) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << m.u.str() << " (x) " << mod.mono_str(m.f);
        first = false;
    }
    return os.str();
}

namespace {

// Factor of a PBW monomial: -1 for Theta, 0..3 for a w letter.
std::vector<int> factor_list(const PBWMono& u) {
    std::vector<int> out;
    for (int k = 0; k < u.theta; ++k) out.push_back(-1);
    for (int l = 0; l < 4; ++l)
        if (u.mask & (1u << l)) out.push_back(l);
    return out;
}

ContactElt factor_contact(int fac) {
    if (fac == -1) return elems::theta();
    // w11 = xi2 + i xi1, w22 = xi2 - i xi1, w12 = -xi4 + i xi3, w21 = xi4 + i xi3
    GRat i = GRat::i();
    switch (fac) {
    case 0: return elems::xi(2) + elems::xi(1) * i;
    case 1: return elems::xi(4) + elems::xi(3) * i;
    case 2: return elems::xi(4) * GRat(-1) + elems::xi(3) * i;
    case 3: return elems::xi(2) + elems::xi(1) * (-i);
    }
    throw std::invalid_argument("factor_contact: bad factor");
}

UElt factor_u(int fac) {
    if (fac == -1) return UElt::mono(1, 0);
    return w_letter(fac);
}

int factor_parity(int fac) {
    return fac == -1 ? 0 : 1;
}

// One term of a contact element, with its parity tracked explicitly.
struct Atom {
    bool central = false;
    CMono mono;
    int parity() const { return central ? 0 : mono.parity(); }
};

MElt act_atom(const Atom& g, const std::vector<int>& facs, size_t idx,
              const VElt& f, const Module& mod);

MElt act_elt(const ContactElt& g, const std::vector<int>& facs, size_t idx,
             const VElt& f, const Module& mod) {
    MElt out;
    for (const auto& [mono, c] : g.terms())
        out += act_atom(Atom{false, mono}, facs, idx, f, mod) * c;
    if (!g.c_part().is_zero())
        out += act_atom(Atom{true, {}}, facs, idx, f, mod) * g.c_part();
    return out;
}

MElt act_base(const Atom& g, const VElt& f, const Module& mod) {
    if (g.central) return MElt::base(f * mod.mu_c());
    int d = g.mono.degree();
    if (d > 0) return MElt();
    if (d == 0) {
        ContactElt e;
        e.add_term(g.mono, GRat(1));
        return MElt::base(g0_action(e, f, mod));
    }
    ContactElt e;
    e.add_term(g.mono, GRat(1));
    return MElt::base(f).umul(negative_to_u(e));
}

MElt act_atom(const Atom& g, const std::vector<int>& facs, size_t idx,
              const VElt& f, const Module& mod) {
    if (idx == facs.size()) return act_base(g, f, mod);
    int fac = facs[idx];
    MElt out;
    if (!g.central) {
        ContactElt ge;
        ge.add_term(g.mono, GRat(1));
        ContactElt br = contact_bracket(ge, factor_contact(fac));
        out += act_elt(br, facs, idx + 1, f, mod);
    }
    int sign = (g.parity() * factor_parity(fac)) % 2 == 1 ? -1 : 1;
    out += act_atom(g, facs, idx + 1, f, mod).umul(factor_u(fac)) * GRat(sign);
    return out;
}

} // namespace

MElt act(const ContactElt& g, const MElt& v, const Module& mod) {
    MElt out;
    for (const auto& [m, c] : v.terms()) {
        std::vector<int> facs = factor_list(m.u);
        out += act_elt(g, facs, 0, VElt::mono(m.f), mod) * c;
    }
    return out;
}

std::vector<VermaMono> graded_basis(const Module& mod, int d) {
    std::vector<VermaMono> out;
    for (const PBWMono& u : pbw_basis(d))
        for (const WMono& f : mod.basis()) out.push_back(VermaMono{u, f});
    return out;
}

std::vector<GRat> coords(const MElt& v, const std::vector<VermaMono>& basis) {
    std::vector<GRat> out(basis.size());
    std::map<VermaMono, size_t> index;
    for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    for (const auto& [m, c] : v.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::invalid_argument("coords: term outside basis");
        out[it->second] = c;
    }
    return out;
}

std::pair<GRat, GRat> hxy_weight(const VermaMono& m, const Module& mod) {
    MElt v = MElt::mono(m.u, m.f);
    auto diag = [&](const ContactElt& h) {
        MElt hv = act(h, v, mod);
        GRat lambda(0);
        for (const auto& [mm, cc] : hv.terms()) {
            if (mm == VermaMono{m.u, m.f}) {
                lambda = cc;
            } else {
                throw std::runtime_error("hxy_weight: basis monomial is not a weight vector");
            }
        }
        return lambda;
    };
    return {diag(elems::hx()), diag(elems::hy())};
}

namespace {

std::vector<ContactElt> killers(bool full) {
    std::vector<ContactElt> out = {elems::e1(), elems::e2(), elems::g1_lowest_even(),
                                   elems::g1_lowest_odd()};
    if (full) {
        for (const ContactElt& g : elems::g1_basis()) out.push_back(g);
    }
    return out;
}

} // namespace

bool is_singular(const MElt& v, const Module& mod, bool full) {
    if (v.is_zero()) return false;
    for (const ContactElt& k : killers(full))
        if (!act(k, v, mod).is_zero()) return false;
    return true;
}

std::vector<MElt> singular_space(const Module& mod, int d, bool hw) {
    std::vector<VermaMono> basis = graded_basis(mod, d);
    std::vector<VermaMono> below = (d > 0) ? graded_basis(mod, d - 1) : std::vector<VermaMono>{};
    // Group basis indices by (hx, hy) weight.
    std::vector<std::pair<std::pair<GRat, GRat>, std::vector<size_t>>> blocks;
    for (size_t k = 0; k < basis.size(); ++k) {
        auto wt = hxy_weight(basis[k], mod);
        bool placed = false;
        for (auto& [bw, idxs] : blocks) {
            if (bw.first == wt.first && bw.second == wt.second) {
                idxs.push_back(k);
                placed = true;
                break;
            }
        }
        if (!placed) blocks.push_back({wt, {k}});
    }

    // Without the hw requirement use the whole g_1 basis (it generates g_{>0})
    // and skip e1, e2.
    std::vector<ContactElt> ks = hw ? killers(false) : elems::g1_basis();
    size_t preserving = hw ? 2 : 0;
    std::vector<MElt> out;
    for (const auto& [wt, idxs] : blocks) {
        // Columns: block members. Rows: coordinates of each killer's image.
        std::vector<std::vector<GRat>> images;
        size_t nrows = 0;
        for (size_t col = 0; col < idxs.size(); ++col) {
            const VermaMono& m = basis[idxs[col]];
            std::vector<GRat> stacked;
            for (size_t ki = 0; ki < ks.size(); ++ki) {
                MElt img = act(ks[ki], MElt::mono(m.u, m.f), mod);
                // e1, e2 preserve the degree; the g_1 elements lower it.
                const std::vector<VermaMono>& tgt = (ki < preserving) ? basis : below;
                std::vector<GRat> v = coords(img, tgt);
                stacked.insert(stacked.end(), v.begin(), v.end());
            }
            nrows = stacked.size();
            images.push_back(std::move(stacked));
        }
        Matrix mat(static_cast<int>(nrows), static_cast<int>(idxs.size()));
        for (size_t col = 0; col < idxs.size(); ++col)
            for (size_t row = 0; row < nrows; ++row)
                mat.at(static_cast<int>(row), static_cast<int>(col)) = images[col][row];
        for (const std::vector<GRat>& nv : mat.nullspace()) {
            MElt s;
            for (size_t col = 0; col < idxs.size(); ++col)
                s.add_term(basis[idxs[col]], nv[col]);
            out.push_back(s);
        }
    }
    return out;
}

namespace {

WMono wexp(int a1, int a2, int b1, int b2) {
    return WMono{a1, a2, b1, b2};
}

} // namespace

MElt sing_m1a(int m, int n, Module& mod) {
    mod = Module{'A', m, n};
    return MElt::mono(PBWMono{0, 0x1}, wexp(m, 0, n, 0));
}

MElt sing_m1b(int m, int n, Module& mod) {
    mod = Module{'B', -m, n};
    return MElt::mono(PBWMono{0, 0x2}, wexp(0, m, n, 0)) +
           MElt::mono(PBWMono{0, 0x1}, wexp(1, m - 1, n, 0));
}

MElt sing_m1c(int m, int n, Module& mod) {
    mod = Module{'C', -m, -n};
    return MElt::mono(PBWMono{0, 0x8}, wexp(0, m, 0, n)) +
           MElt::mono(PBWMono{0, 0x4}, wexp(1, m - 1, 0, n)) +
           MElt::mono(PBWMono{0, 0x2}, wexp(0, m, 1, n - 1)) +
           MElt::mono(PBWMono{0, 0x1}, wexp(1, m - 1, 1, n - 1));
}

MElt sing_m1d(int m, int n, Module& mod) {
    mod = Module{'D', m, -n};
    return MElt::mono(PBWMono{0, 0x4}, wexp(m, 0, 0, n)) +
           MElt::mono(PBWMono{0, 0x1}, wexp(m, 0, 1, n - 1));
}

MElt sing_m2a(int n, Module& mod) {
    mod = Module{'B', 0, n};
    return MElt::mono(PBWMono{0, 0x3}, wexp(0, 0, n, 0));
}

MElt sing_m2b(int m, Module& mod) {
    mod = Module{'D', m, 0};
    return MElt::mono(PBWMono{0, 0x5}, wexp(m, 0, 0, 0));
}

namespace {

MElt from_u(const UElt& u, const WMono& f) {
    MElt out;
    for (const auto& [m, c] : u.terms()) out.add_term(VermaMono{m, f}, c);
    return out;
}

} // namespace

MElt sing_m2c(int m, Module& mod) {
    mod = Module{'C', -m, 0};
    UElt mid = pbw_multiply(w_letter(0), w_letter(3)) + pbw_multiply(w_letter(1), w_letter(2));
    return from_u(pbw_multiply(w_letter(1), w_letter(3)), wexp(0, m, 0, 0)) +
           from_u(mid, wexp(1, m - 1, 0, 0)) +
           from_u(pbw_multiply(w_letter(0), w_letter(2)), wexp(2, m - 2, 0, 0));
}

MElt sing_m2d(int n, Module& mod) {
    mod = Module{'C', 0, -n};
    UElt mid = pbw_multiply(w_letter(0), w_letter(3)) + pbw_multiply(w_letter(2), w_letter(1));
    return from_u(pbw_multiply(w_letter(2), w_letter(3)), wexp(0, 0, 0, n)) +
           from_u(mid, wexp(0, 0, 1, n - 1)) +
           from_u(pbw_multiply(w_letter(0), w_letter(1)), wexp(0, 0, 2, n - 2));
}

MElt sing_m3a(Module& mod) {
    mod = Module{'C', -1, 0};
    UElt u1 = pbw_multiply(pbw_multiply(w_letter(0), w_letter(3)), w_letter(1));
    UElt u2 = pbw_multiply(pbw_multiply(w_letter(1), w_letter(2)), w_letter(0));
    return from_u(u1, wexp(0, 1, 0, 0)) + from_u(u2 * GRat(-1), wexp(1, 0, 0, 0));
}

MElt sing_m3b(Module& mod) {
    mod = Module{'C', 0, -1};
    UElt u1 = pbw_multiply(pbw_multiply(w_letter(0), w_letter(3)), w_letter(2));
    UElt u2 = pbw_multiply(pbw_multiply(w_letter(2), w_letter(1)), w_letter(0));
    return from_u(u1, wexp(0, 0, 0, 1)) + from_u(u2 * GRat(-1), wexp(0, 0, 1, 0));
}

} // namespace k4
