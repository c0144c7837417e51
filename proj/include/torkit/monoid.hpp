#pragma once

#include <functional>
#include <memory>

#include "torkit/hilbert.hpp"
#include "torkit/polytope.hpp"

namespace torkit {

// Finitely generated submonoid of Z^r. Normal monoids may carry units
// (e.g. Z_+(-t) + M); membership is then decided by cone and lattice alone.
class AffineMonoid {
public:
    AffineMonoid() = default;
    AffineMonoid(size_t r, const IMat& gens);
    // The normal monoid C ∩ L (C must lie in span L).
    static AffineMonoid normal(const Cone& c, const Lattice& l);

    size_t ambient() const { return r_; }
    size_t rank() const { return gp_.rank(); }
    // Minimal generators when U(M) = 0, otherwise the given generators.
    const IMat& generators() const { return gens_; }
    const Lattice& gp() const { return gp_; }
    const Cone& cone() const { return cone_; }
    bool has_trivial_units() const { return cone_.pointed(); }

    bool contains(const IVec& x) const;
    bool is_normal() const;
    // Hilbert basis of n(M) = C(M) ∩ gp(M).
    const IMat& normal_hilbert_basis() const;
    Int degree(const IVec& x) const { return dot(grading_, x); }
    const IVec& grading() const { return grading_; }
    Polytope cross_section() const { return torkit::cross_section(cone_); }

    bool operator==(const AffineMonoid& o) const;

private:
    struct Cache;
    size_t r_ = 0;
    IMat gens_;
    Lattice gp_;
    Cone cone_;
    IVec grading_;
    std::shared_ptr<Cache> cache_;
    void require_pointed(const char* what) const;
    const IVec* conductor() const;
};

AffineMonoid normalization(const AffineMonoid& m);

// Membership in sn(M): x ∈ gp(M ∩ F) for the face F whose relative interior holds x.
bool in_seminormalization(const AffineMonoid& m, const IVec& x);

struct Seminormalization {
    AffineMonoid result;
    std::vector<IMat> steps;  // elements adjoined by each application of the one-step operator
};
Seminormalization seminormalization(const AffineMonoid& m);
bool is_seminormal(const AffineMonoid& m);

// Points of n(M) of degree <= bound, sorted by (degree, lex).
IMat normal_points_up_to(const AffineMonoid& m, const Int& bound);

// Irreducible elements of a submonoid S (given by a membership predicate) of
// n(M), restricted to degree <= bound.
IMat irreducibles(const AffineMonoid& m, const std::function<bool(const IVec&)>& in_s, const Int& bound);

// M_* = (int C(M) ∩ M) ∪ {0}. Not finitely generated in general, so it is
// described by membership and degree-truncated irreducibles.
class InteriorMonoid {
public:
    explicit InteriorMonoid(AffineMonoid base);
    const AffineMonoid& base() const { return base_; }
    bool contains(const IVec& x) const;
    bool in_ideal(const IVec& x) const;  // x ∈ int(M)
    IMat irreducibles(const Int& max_degree) const;
    // Lexicographically least element of int(M) of minimal degree.
    IVec least_interior_element() const;

private:
    AffineMonoid base_;
};

// M(W) = R_+W ∩ M for a normal M and W given by points of Φ(M).
AffineMonoid region_submonoid(const AffineMonoid& m, const QMat& w);

struct ExtremalInversion {
    IVec t;
    QMat projection;  // r x (k-1): x ↦ x * projection realizes gp(M) → gp(M)/Zt ≅ Z^{k-1}
    QMat lift;        // (k-1) x r: a section of the projection into gp(M)
    AffineMonoid n;   // in Z^{k-1}
    IVec project(const IVec& x) const;
    IVec lift_point(const IVec& y) const;
};
ExtremalInversion invert_extremal(const AffineMonoid& m, const IVec& t);
// x ∈ Z_+(-t) + M for a normal M.
bool in_localization(const AffineMonoid& m, const IVec& t, const IVec& x);

struct FreeBasis {
    IMat basis;      // m, m_2 + c m, ..., m_k + c m
    Int c;
    QMat simplex;    // ray intersections with Φ(M)
};
FreeBasis free_basis_in_region(const AffineMonoid& m, const QMat& w, const Int& cap = Int(1) << 40);

struct FreeEmbedding {
    QMat matrix;  // r x k; x ↦ x * matrix maps gp(M) isomorphically onto Z^k
    IMat dual_basis;  // the free basis F* of the dual lattice, in gp coordinates
    IVec image(const IVec& x) const;
    Int degree(const IVec& x) const;
};
FreeEmbedding embed_in_free(const AffineMonoid& m);

}  // namespace torkit
