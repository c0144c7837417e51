#pragma once

#include "torkit/cone.hpp"

namespace torkit {

// Minimal generating set of C ∩ L for a pointed cone C whose span lies in
// span(L), sorted lexicographically.
IMat hilbert_basis(const Cone& c, const Lattice& l);

// Pulling triangulation of cone(pts) for full-dimensional pts in Q^d.
// Each simplex lists d point indices.
std::vector<std::vector<size_t>> triangulate(const IMat& pts, size_t d);

// Integer points of the half-open parallelepiped sum [0,1) v_i, for the
// rows v_i of a nonsingular d x d integer matrix. Includes the origin.
IMat parallelepiped_points(const IMat& v);

}  // namespace torkit
