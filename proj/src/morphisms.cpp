#include "k4/morphisms.hpp"

#include <stdexcept>

namespace k4 {

namespace {

UElt w2(int a, int b) { return pbw_multiply(w_letter(a), w_letter(b)); }

// Applies the formal operator dx_j to a single monomial of the source module:
// a derivative when the x variables are honest polynomials, multiplication by
// the dual variable otherwise.
bool apply_dx(int j, WMono& w, GRat& coeff, const Module& src) {
    int& e = (j == 1) ? w.a1 : w.a2;
    if (src.x_dual()) { ++e; return true; }
    if (e == 0) return false;
    coeff *= GRat(e);
    --e;
    return true;
}

bool apply_dy(int j, WMono& w, GRat& coeff, const Module& src) {
    int& e = (j == 1) ? w.b1 : w.b2;
    if (src.y_dual()) { ++e; return true; }
    if (e == 0) return false;
    coeff *= GRat(e);
    --e;
    return true;
}

MElt rmul(const VermaMono& m, const UElt& u, const WMono& f, const GRat& c) {
    MElt out;
    UElt prod = pbw_multiply(UElt::mono(m.u.theta, m.u.mask), u);
    for (const auto& [pm, pc] : prod.terms()) out.add_term(VermaMono{pm, f}, c * pc);
    return out;
}

} // namespace

Module map_target(MapKind k, const Module& src) {
    switch (k) {
    case MapKind::Nabla: return Module{src.q, src.m - 1, src.n - 1};
    case MapKind::Nabla2:
        if (src.q == 'A') return Module{'D', src.m - 2, 0};
        return Module{'C', src.m - 2, 0};
    case MapKind::TildeNabla2:
        if (src.q == 'A') return Module{'B', 0, src.n - 2};
        return Module{'C', 0, src.n - 2};
    case MapKind::Nabla3: return Module{'C', -1, 0};
    case MapKind::TildeNabla3: return Module{'C', 0, -1};
    }
    throw std::invalid_argument("map_target: bad kind");
}

int map_degree_shift(MapKind k) {
    switch (k) {
    case MapKind::Nabla: return 1;
    case MapKind::Nabla2:
    case MapKind::TildeNabla2: return 2;
    case MapKind::Nabla3:
    case MapKind::TildeNabla3: return 3;
    }
    throw std::invalid_argument("map_degree_shift: bad kind");
}

std::string map_name(MapKind k) {
    switch (k) {
    case MapKind::Nabla: return "nabla";
    case MapKind::Nabla2: return "nabla2";
    case MapKind::TildeNabla2: return "tilde-nabla2";
    case MapKind::Nabla3: return "nabla3";
    case MapKind::TildeNabla3: return "tilde-nabla3";
    }
    throw std::invalid_argument("map_name: bad kind");
}

bool map_defined(MapKind k, const Module& src) {
    switch (k) {
    case MapKind::Nabla:
        switch (src.q) {
        case 'A': return src.m >= 1 && src.n >= 1;
        case 'B': return src.n >= 1;
        case 'C': return true;
        case 'D': return src.m >= 1;
        }
        return false;
    case MapKind::Nabla2:
        return (src.q == 'A' && src.n == 0 && src.m >= 2) || (src.q == 'B' && src.n == 0);
    case MapKind::TildeNabla2:
        return (src.q == 'A' && src.m == 0 && src.n >= 2) || (src.q == 'D' && src.m == 0);
    case MapKind::Nabla3:
        return src.q == 'A' && src.m == 0 && src.n == 1;
    case MapKind::TildeNabla3:
        return src.q == 'A' && src.m == 1 && src.n == 0;
    }
    return false;
}

MElt apply_map(MapKind k, const MElt& v, const Module& src) {
    if (!map_defined(k, src))
        throw std::invalid_argument("apply_map: map not defined at this module");
    struct Term {
        UElt u;
        std::vector<std::pair<char, int>> ops;
    };
    std::vector<Term> terms;
    switch (k) {
    case MapKind::Nabla:
        terms = {{w_letter(0), {{'x', 1}, {'y', 1}}},
                 {w_letter(1), {{'x', 2}, {'y', 1}}},
                 {w_letter(2), {{'x', 1}, {'y', 2}}},
                 {w_letter(3), {{'x', 2}, {'y', 2}}}};
        break;
    case MapKind::Nabla2:
        terms = {{w2(0, 2), {{'x', 1}, {'x', 1}}},
                 {w2(0, 3) + w2(1, 2), {{'x', 1}, {'x', 2}}},
                 {w2(1, 3), {{'x', 2}, {'x', 2}}}};
        break;
    case MapKind::TildeNabla2:
        terms = {{w2(0, 1), {{'y', 1}, {'y', 1}}},
                 {w2(2, 1) + w2(0, 3), {{'y', 1}, {'y', 2}}},
                 {w2(2, 3), {{'y', 2}, {'y', 2}}}};
        break;
    case MapKind::Nabla3:
    case MapKind::TildeNabla3:
        break;
    }

    Module dst = map_target(k, src);
    MElt out;
    if (k == MapKind::Nabla3) {
        UElt lead = pbw_multiply(w2(0, 1), w_letter(2)), lead2 = pbw_multiply(w2(0, 1), w_letter(3));
        UElt mid = w2(2, 1) + w2(0, 3);
        for (const auto& [m, c] : v.terms()) {
            if (m.f.b1 == 1) {
                out += rmul(m, lead, WMono{1, 0, 0, 0}, c);
                out += rmul(m, lead2, WMono{0, 1, 0, 0}, c);
            } else { // b2 == 1
                out += rmul(m, pbw_multiply(mid, w_letter(2)), WMono{1, 0, 0, 0}, c);
                out += rmul(m, pbw_multiply(mid, w_letter(3)), WMono{0, 1, 0, 0}, c);
            }
        }
        return out;
    }
    if (k == MapKind::TildeNabla3) {
        UElt lead = pbw_multiply(w2(0, 2), w_letter(1)), lead2 = pbw_multiply(w2(0, 2), w_letter(3));
        UElt mid = w2(1, 2) + w2(0, 3);
        for (const auto& [m, c] : v.terms()) {
            if (m.f.a1 == 1) {
                out += rmul(m, lead, WMono{0, 0, 1, 0}, c);
                out += rmul(m, lead2, WMono{0, 0, 0, 1}, c);
            } else { // a2 == 1
                out += rmul(m, pbw_multiply(mid, w_letter(1)), WMono{0, 0, 1, 0}, c);
                out += rmul(m, pbw_multiply(mid, w_letter(3)), WMono{0, 0, 0, 1}, c);
            }
        }
        return out;
    }

    for (const auto& [m, c] : v.terms()) {
        for (const Term& t : terms) {
            WMono f = m.f;
            GRat coeff = c;
            bool ok = true;
            for (auto [kind, j] : t.ops) {
                if (kind == 'x')
                    ok = apply_dx(j, f, coeff, src);
                else
                    ok = apply_dy(j, f, coeff, src);
                if (!ok) break;
            }
            if (!ok) continue;
            out += rmul(m, t.u, f, coeff);
        }
    }
    (void)dst;
    return out;
}

Matrix map_matrix(MapKind k, const Module& src, int d) {
    Module dst = map_target(k, src);
    std::vector<VermaMono> sb = graded_basis(src, d);
    std::vector<VermaMono> tb = graded_basis(dst, d + map_degree_shift(k));
    Matrix mat(static_cast<int>(tb.size()), static_cast<int>(sb.size()));
    for (size_t col = 0; col < sb.size(); ++col) {
        MElt img = apply_map(k, MElt::mono(sb[col].u, sb[col].f), src);
        std::vector<GRat> v = coords(img, tb);
        for (size_t row = 0; row < tb.size(); ++row)
            mat.at(static_cast<int>(row), static_cast<int>(col)) = v[row];
    }
    return mat;
}

MElt vector_z() {
    GRat i = GRat::i();
    UElt mid = w2(2, 1) + w2(0, 3);
    MElt out;
    auto add = [&out, &i](const UElt& u, const WMono& f) {
        for (const auto& [m, c] : u.terms()) out.add_term(VermaMono{m, f}, c * i);
    };
    add(pbw_multiply(w2(0, 1), w_letter(2)), WMono{1, 0, 1, 0});
    add(pbw_multiply(w2(0, 1), w_letter(3)), WMono{0, 1, 1, 0});
    add(pbw_multiply(mid, w_letter(2)), WMono{1, 0, 0, 1});
    add(pbw_multiply(mid, w_letter(3)), WMono{0, 1, 0, 1});
    return out;
}

MElt vector_k() {
    GRat i = GRat::i();
    UElt u = pbw_multiply(pbw_multiply(w2(0, 1), w_letter(2)), w_letter(3)) * (i * GRat(1, 2)) +
             pbw_multiply(UElt::mono(1, 0), w2(2, 1)) * i +
             pbw_multiply(UElt::mono(1, 0), w2(0, 3)) * i;
    MElt out;
    for (const auto& [m, c] : u.terms()) out.add_term(VermaMono{m, WMono{}}, c);
    return out;
}

MElt vector_s() {
    return MElt::mono(PBWMono{0, 0x1}, WMono{0, 1, 0, 1}) +
           MElt::mono(PBWMono{0, 0x2}, WMono{1, 0, 0, 1}) * GRat(-1) +
           MElt::mono(PBWMono{0, 0x4}, WMono{0, 1, 1, 0}) * GRat(-1) +
           MElt::mono(PBWMono{0, 0x8}, WMono{1, 0, 1, 0});
}

} // namespace k4
