#ifndef K4_GR_HPP
#define K4_GR_HPP

#include "k4/linalg.hpp"
#include "k4/weightmod.hpp"

#include <map>
#include <vector>

namespace k4 {

// Monomial of G_X = Lambda(g_-1) (x) V_X. The lmask bits follow the PBW
// letter order: bit 0 = w11, bit 1 = w21 (the Lambda_+ pair), bit 2 = w12,
// bit 3 = w22 (the Lambda_- pair). Exponents are nonnegative; duality of the
// variables follows the quadrant as in Module.
struct GrMono {
    unsigned lmask = 0;
    int x1 = 0, x2 = 0, y1 = 0, y2 = 0;
    auto operator<=>(const GrMono&) const = default;
};

// The summand G_X(a,b): the eigenspace where the Lambda_+ count equals a - p
// and the Lambda_- count equals b - q, with [p,q] the signed y-bidegree.
struct GrFamily {
    char q = 'A';
    int a = 0, b = 0;
};

// Basis of G_X(a,b)^{m,n} with signed position (m,n) in quadrant q.
std::vector<GrMono> gr_basis(const GrFamily& fam, int m, int n);

enum class GrDiff { Nabla, DPrime, DDoublePrime };

// Matrix of the differential from position (m,n) to (m-1,n-1) of the same
// family. DPrime is Delta+ d_y1 and DDoublePrime is Delta- d_y2.
Matrix gr_diff_matrix(const GrFamily& fam, int m, int n, GrDiff which = GrDiff::Nabla);

// Matrix of Delta- Delta+ (acting on the x variables only) from family (a,b)
// position (m,0) into family (a+1,b+1) position (m-2,0).
Matrix gr_n2_matrix(const GrFamily& fam, int m);

// dim H^{m,n} of the complex G_X(a,b) (circ = false) or of the modified
// complex G_X^o(a,b) (circ = true).
int gr_homology(const GrFamily& fam, int m, int n, bool circ);

// Homology dims of the ladder S(a,b) (positions k = 0..a) and T(a,b)
// (positions k = a..2), summed over enough degree slices to stabilize.
std::map<int, int> ladder_s_homology(int a, int b);
std::map<int, int> ladder_t_homology(int a, int b);

} // namespace k4

#endif
