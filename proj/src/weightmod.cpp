#include "k4/weightmod.hpp"

#include <sstream>
#include <stdexcept>

namespace k4 {

VElt VElt::mono(const WMono& m, const GRat& c) {
    VElt e;
    e.add_term(m, c);
    return e;
}

void VElt::add_term(const WMono& m, const GRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VElt VElt::operator+(const VElt& o) const {
    VElt r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

VElt VElt::operator*(const GRat& s) const {
    VElt r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

GRat Module::mu_t() const {
    int mm = mx(), nn = ny();
    switch (q) {
    case 'A': return GRat(-(mm + nn), 2);
    case 'B': return GRat(1) + GRat(mm - nn, 2);
    case 'C': return GRat(mm + nn, 2) + GRat(2);
    case 'D': return GRat(1) + GRat(nn - mm, 2);
    }
    throw std::invalid_argument("Module: bad quadrant");
}

GRat Module::mu_c() const {
    int mm = mx(), nn = ny();
    switch (q) {
    case 'A': return GRat(mm - nn, 2);
    case 'B': return GRat(-(mm + nn), 2) - GRat(1);
    case 'C': return GRat(nn - mm, 2);
    case 'D': return GRat(mm + nn, 2) + GRat(1);
    }
    throw std::invalid_argument("Module: bad quadrant");
}

WMono Module::hw() const {
    WMono w;
    if (x_dual()) w.a2 = mx(); else w.a1 = mx();
    if (y_dual()) w.b2 = ny(); else w.b1 = ny();
    return w;
}

std::vector<WMono> Module::basis() const {
    std::vector<WMono> out;
    int mm = mx(), nn = ny();
    // Leading exponent (the one appearing in the highest weight vector)
    // decreases, so the highest weight monomial comes first.
    for (int p = mm; p >= 0; --p) {
        for (int r = nn; r >= 0; --r) {
            WMono w;
            if (x_dual()) { w.a2 = p; w.a1 = mm - p; }
            else          { w.a1 = p; w.a2 = mm - p; }
            if (y_dual()) { w.b2 = r; w.b1 = nn - r; }
            else          { w.b1 = r; w.b2 = nn - r; }
            out.push_back(w);
        }
    }
    return out;
}

std::string Module::str() const {
    std::ostringstream os;
    os << q << ":" << m << "," << n;
    return os.str();
}

Module Module::parse(const std::string& s) {
    Module mod;
    size_t colon = s.find(':');
    size_t comma = s.find(',');
    if (s.empty() || colon != 1 || comma == std::string::npos || comma < colon)
        throw std::invalid_argument("Module: expected X:m,n");
    mod.q = s[0];
    if (mod.q != 'A' && mod.q != 'B' && mod.q != 'C' && mod.q != 'D')
        throw std::invalid_argument("Module: bad quadrant");
    mod.m = std::stoi(s.substr(2, comma - 2));
    mod.n = std::stoi(s.substr(comma + 1));
    bool ok = true;
    if (mod.q == 'A') ok = mod.m >= 0 && mod.n >= 0;
    if (mod.q == 'B') ok = mod.m <= 0 && mod.n >= 0;
    if (mod.q == 'C') ok = mod.m <= 0 && mod.n <= 0;
    if (mod.q == 'D') ok = mod.m >= 0 && mod.n <= 0;
    if (!ok) throw std::invalid_argument("Module: signs do not match quadrant");
    return mod;
}

std::string Module::mono_str(const WMono& w) const {
    std::string out;
    auto emit = [&out](const std::string& name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += " ";
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    };
    const char* xn1 = x_dual() ? "dx1" : "x1";
    const char* xn2 = x_dual() ? "dx2" : "x2";
    const char* yn1 = y_dual() ? "dy1" : "y1";
    const char* yn2 = y_dual() ? "dy2" : "y2";
    emit(xn1, w.a1);
    emit(xn2, w.a2);
    emit(yn1, w.b1);
    emit(yn2, w.b2);
    if (out.empty()) out = "1";
    return out;
}

namespace {

int get_exp(const WMono& w, bool xside, int idx) {
    if (xside) return idx == 1 ? w.a1 : w.a2;
    return idx == 1 ? w.b1 : w.b2;
}

WMono shift(WMono w, bool xside, int from, int to) {
    auto& f = xside ? (from == 1 ? w.a1 : w.a2) : (from == 1 ? w.b1 : w.b2);
    --f;
    auto& t = xside ? (to == 1 ? w.a1 : w.a2) : (to == 1 ? w.b1 : w.b2);
    ++t;
    return w;
}

// x_i d/dx_j on polynomial variables: picks up the exponent of x_j and moves
// one unit from j to i. On dual variables x_i d/dx_j . d_k = -delta_{ik} d_j,
// extended as a derivation: picks up minus the exponent of d_i and moves one
// unit from i to j.
VElt pair_op(bool xside, int i, int j, const VElt& v, bool dual) {
    VElt out;
    for (const auto& [w, c] : v.terms()) {
        if (!dual) {
            int e = get_exp(w, xside, j);
            if (i == j) {
                out.add_term(w, c * GRat(e));
            } else if (e > 0) {
                out.add_term(shift(w, xside, j, i), c * GRat(e));
            }
        } else {
            int e = get_exp(w, xside, i);
            if (i == j) {
                out.add_term(w, c * GRat(-e));
            } else if (e > 0) {
                out.add_term(shift(w, xside, i, j), c * GRat(-e));
            }
        }
    }
    return out;
}

} // namespace

VElt xop(int i, int j, const VElt& v, const Module& mod) {
    return pair_op(true, i, j, v, mod.x_dual());
}

VElt yop(int i, int j, const VElt& v, const Module& mod) {
    return pair_op(false, i, j, v, mod.y_dual());
}

VElt g0_action(const ContactElt& g, const VElt& v, const Module& mod) {
    G0Decomp d = decompose_g0(g);
    VElt out = v * (d.t * mod.mu_t() + d.c * mod.mu_c());
    // named order: hx, hy, ex, ey, fx, fy
    if (!d.named[0].is_zero())
        out += (xop(1, 1, v, mod) - xop(2, 2, v, mod)) * d.named[0];
    if (!d.named[1].is_zero())
        out += (yop(1, 1, v, mod) - yop(2, 2, v, mod)) * d.named[1];
    if (!d.named[2].is_zero()) out += xop(1, 2, v, mod) * d.named[2];
    if (!d.named[3].is_zero()) out += yop(1, 2, v, mod) * d.named[3];
    if (!d.named[4].is_zero()) out += xop(2, 1, v, mod) * d.named[4];
    if (!d.named[5].is_zero()) out += yop(2, 1, v, mod) * d.named[5];
    return out;
}

} // namespace k4
