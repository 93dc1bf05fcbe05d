#ifndef K4_CHARACTERS_HPP
#define K4_CHARACTERS_HPP

#include "k4/weightmod.hpp"

#include <vector>

namespace k4 {

// Truncated character ch V = tr s^{-t}. The series starts at s^{-mu_t};
// coeffs[d] is the dimension of the t-eigenspace of eigenvalue mu_t - d.
struct CharacterSeries {
    GRat leading_exponent;
    std::vector<long> coeffs;
};

CharacterSeries verma_character(const Module& node, int max_deg);

// Character of the quotient of the Verma module at node by the image of its
// incoming morphism (the module itself when no morphism comes in).
CharacterSeries quotient_character(const Module& node, int max_deg);

// Closed-form coefficients of the type A irreducible quotient character,
// valid for (m, n) != (0, 0).
std::vector<long> type_a_character(int m, int n, int max_deg);

// Closed-form size of the irreducible quotient, by quadrant, with m, n >= 0.
long size_formula(char quadrant, int m, int n);

// Size extracted from a truncated character: (1 - s^2) ch telescopes to the
// sum of the two stabilized parity coefficients, and size is a quarter of
// that. Stabilization requires three consecutive equal coefficients in each
// parity class; otherwise the result is marked inconclusive.
struct SizeReport {
    bool stabilized = false;
    GRat size;
    int even_degree = -1;
    int odd_degree = -1;
};

SizeReport size_from_series(const CharacterSeries& ch);

} // namespace k4

#endif
