#pragma once

#include "torkit/cone.hpp"

namespace torkit {

using Face = std::vector<size_t>;  // sorted vertex indices

// Convex hull of finitely many rational points. Faces are computed once at
// construction, so a Polytope is immutable and safe to share.
class Polytope {
public:
    Polytope() = default;
    static Polytope hull(size_t n, const QMat& points);
    static Polytope empty(size_t n);

    size_t ambient() const { return n_; }
    int dim() const { return dim_; }
    const QMat& vertices() const { return verts_; }
    // Affine facet inequalities (a, b) meaning a·x + b >= 0, stored as length n+1.
    const IMat& facet_inequalities() const { return ineqs_; }
    const std::vector<Face>& facets() const { return facet_sets_; }
    // faces_by_dim()[k + 1] lists the k-dimensional faces, k = -1..dim.
    const std::vector<std::vector<Face>>& faces_by_dim() const { return faces_; }
    std::vector<size_t> f_vector() const;
    const Cone& homogenization() const { return cone_; }

    Position locate(const QVec& x) const;
    bool contains(const QVec& x) const { return locate(x) != Position::outside; }
    bool in_relint(const QVec& x) const { return locate(x) == Position::interior; }
    bool contains(const Polytope& other) const;
    QVec centroid() const;
    QMat face_vertices(const Face& f) const;
    // Affine dimension of a set of points (-1 for the empty set).
    static int affine_dim(const QMat& pts, size_t n);

    bool operator==(const Polytope& o) const { return n_ == o.n_ && verts_ == o.verts_; }

private:
    size_t n_ = 0;
    int dim_ = -1;
    QMat verts_;
    IMat ineqs_;
    std::vector<Face> facet_sets_;
    std::vector<std::vector<Face>> faces_;
    Cone cone_;
};

IVec homogenize(const QVec& x);

// Canonical cross-section {x in C : grading(x) = 1}.
Polytope cross_section(const Cone& c);

// Intersection of the line through pole and x with {y : a·y = b}.
QVec polar_project(const QVec& x, const QVec& pole, const QVec& a, const Rat& b);

}  // namespace torkit
