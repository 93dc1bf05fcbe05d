#include "k4/characters.hpp"
#include "k4/enveloping.hpp"
#include "k4/homology.hpp"

#include <stdexcept>

namespace k4 {

CharacterSeries verma_character(const Module& node, int max_deg) {
    CharacterSeries ch;
    ch.leading_exponent = -node.mu_t();
    long dim_f = static_cast<long>(node.basis().size());
    for (int d = 0; d <= max_deg; ++d)
        ch.coeffs.push_back(dim_f * static_cast<long>(pbw_basis(d).size()));
    return ch;
}

CharacterSeries quotient_character(const Module& node, int max_deg) {
    CharacterSeries ch = verma_character(node, max_deg);
    std::optional<Edge> in = incoming_edge(node);
    if (!in) return ch;
    int shift = map_degree_shift(in->kind);
    for (int d = shift; d <= max_deg; ++d)
        ch.coeffs[d] -= map_matrix(in->kind, in->src, d - shift).rank();
    return ch;
}

std::vector<long> type_a_character(int m, int n, int max_deg) {
    if (m == 0 && n == 0)
        throw std::invalid_argument("type_a_character: (0,0) is excluded");
    // Numerator 2(1+s) + (m+n-1)(1+s)^2 + mn(1+s)^3, then divide by 1 - s^2.
    std::vector<long> num(4, 0);
    num[0] += 2; num[1] += 2;
    long c2 = m + n - 1;
    num[0] += c2; num[1] += 2 * c2; num[2] += c2;
    long c3 = static_cast<long>(m) * n;
    num[0] += c3; num[1] += 3 * c3; num[2] += 3 * c3; num[3] += c3;
    std::vector<long> out(max_deg + 1, 0);
    for (int d = 0; d <= max_deg; ++d) {
        out[d] = (d < 4) ? num[d] : 0;
        if (d >= 2) out[d] += out[d - 2];
    }
    return out;
}

long size_formula(char quadrant, int m, int n) {
    long mn = static_cast<long>(m) * n;
    switch (quadrant) {
    case 'A': return 2 * mn + m + n;
    case 'B': return 2 * mn + m + 3 * n + 2;
    case 'C': return 2 * mn + 3 * m + 3 * n + 4;
    case 'D': return 2 * mn + n + 3 * m + 2;
    }
    throw std::invalid_argument("size_formula: bad quadrant");
}

SizeReport size_from_series(const CharacterSeries& ch) {
    SizeReport rep;
    int dmax = static_cast<int>(ch.coeffs.size()) - 1;
    long stab[2];
    int deg[2] = {-1, -1};
    for (int p = 0; p < 2; ++p) {
        for (int d = p; d <= dmax; d += 2) {
            if (d - 4 < 0) continue;
            if (ch.coeffs[d] == ch.coeffs[d - 2] && ch.coeffs[d] == ch.coeffs[d - 4])
                deg[p] = d;
        }
        int last = dmax - ((dmax - p) % 2 + 2) % 2;
        if (deg[p] != last) return rep;
        stab[p] = ch.coeffs[deg[p]];
    }
    rep.stabilized = true;
    rep.size = GRat(stab[0] + stab[1]) / GRat(4);
    rep.even_degree = deg[0];
    rep.odd_degree = deg[1];
    return rep;
}

} // namespace k4
