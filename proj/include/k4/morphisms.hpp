#ifndef K4_MORPHISMS_HPP
#define K4_MORPHISMS_HPP

#include "k4/verma.hpp"

#include <string>

namespace k4 {

// The five morphisms between finite Verma modules. Each maps M_src to the
// module returned by map_target and raises the PBW degree by map_degree_shift.
enum class MapKind { Nabla, Nabla2, TildeNabla2, Nabla3, TildeNabla3 };

// Signed bidegree shift and quadrant of the target node.
Module map_target(MapKind k, const Module& src);
int map_degree_shift(MapKind k);
std::string map_name(MapKind k);

// Whether the map is defined with the given source (domain restrictions of
// the defining remarks).
bool map_defined(MapKind k, const Module& src);

MElt apply_map(MapKind k, const MElt& v, const Module& src);

// Matrix of the map from the degree d component of src to the degree
// d + shift component of the target, in the graded bases.
Matrix map_matrix(MapKind k, const Module& src, int d);

// Distinguished elements of Section 5.
MElt vector_z();   // in M_C^{-1,-1} = M(1,1,3,0)
MElt vector_k();   // in M_C^{0,0} = M(0,0,2,0)
MElt vector_s();   // in M_A^{1,1} = M(1,1,-1,0)

} // namespace k4

#endif
