#pragma once

#include "torkit/lattice.hpp"

namespace torkit {

enum class Position { outside, boundary, interior };
const char* to_string(Position p);

// Rational polyhedral cone in Q^r. Facet normals live in span(C) and are
// primitive; together with the annihilator equations they form the H-rep.
class Cone {
public:
    Cone() = default;
    static Cone zero(size_t r);
    static Cone from_generators(size_t r, const IMat& gens);
    static Cone from_generators(size_t r, const QMat& gens);
    // {x : a x >= 0 for rows a of ineqs, e x = 0 for rows e of eqs}
    static Cone from_inequalities(size_t r, const IMat& ineqs, const IMat& eqs = {});

    size_t ambient() const { return r_; }
    size_t dim() const { return dim_; }
    bool pointed() const { return lineality_.empty(); }
    // Extreme rays when pointed; otherwise rays of the pointed part plus ± a lineality basis.
    const IMat& rays() const { return rays_; }
    const IMat& facets() const { return facets_; }
    const IMat& equations() const { return eqs_; }
    const IMat& lineality() const { return lineality_; }
    // Rational basis of span(C) in reduced echelon form.
    const QMat& span_basis() const { return span_; }

    Position locate(const QVec& x) const;
    Position locate(const IVec& x) const { return locate(to_q(x)); }
    bool contains(const QVec& x) const { return locate(x) != Position::outside; }
    bool contains(const IVec& x) const { return locate(x) != Position::outside; }
    bool in_interior(const QVec& x) const { return locate(x) == Position::interior; }
    bool in_interior(const IVec& x) const { return locate(x) == Position::interior; }
    bool contains(const Cone& other) const;
    bool in_span(const QVec& x) const;

    // Indices of facets vanishing at x.
    std::vector<size_t> tight_facets(const QVec& x) const;
    // Face cut out by the given facets (pointed cones).
    Cone face(const std::vector<size_t>& facet_idx) const;

    // Facet normals plus ± equations as generators in the full dual space.
    Cone dual() const;
    // Sum of the facet normals; positive on C \ {0} when pointed.
    IVec grading() const;

    bool operator==(const Cone& o) const {
        return r_ == o.r_ && eqs_ == o.eqs_ && facets_ == o.facets_;
    }

private:
    size_t r_ = 0;
    size_t dim_ = 0;
    IMat rays_, facets_, eqs_, lineality_;
    QMat span_;
};

// Extreme rays of {y : Y y >= 0} in Q^d, assuming rank Y = d.
IMat extreme_rays(const IMat& y, size_t d);

}  // namespace torkit
