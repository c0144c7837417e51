#pragma once

#include <string>

#include "torkit/dilation.hpp"

namespace torkit {

// One checked condition of a construction or verification.
struct Clause {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Report {
    std::vector<Clause> clauses;
    bool ok() const;
    // Detail of the first failing clause, empty when all pass.
    std::string failure() const;
    void add(std::string name, bool pass, std::string detail = {});
};

struct PyramidalExtension {
    AffineMonoid m, n;
    IMat delta;      // ray generators of the pyramid δ: the base facet rays and the apex
    IVec apex;
    IVec base_normal;  // inner normal of C(M) along the base facet
};

struct PyramidalCheck {
    Report report;
    std::optional<PyramidalExtension> extension;
};
// Throws if M is not contained in N.
PyramidalCheck is_pyramidal_extension(const AffineMonoid& m, const AffineMonoid& n);

// (t, Γ, N). Γ is stored by ray generators; scale records that N lives in
// scale·(the original coordinates) when it comes from a dilation stage.
struct PolarizedMonoid {
    IVec t;
    QMat gamma;
    AffineMonoid n;
    Int scale = 1;
};

struct PolarizedOptions {
    // Hilbert-basis comparisons on facet cones larger than this
    // (normalized volume) are skipped; the lattice splitting still decides.
    Int hb_budget = 20000;
};

Report verify_polarized(const IVec& t, const QMat& gamma, const AffineMonoid& n, const PolarizedOptions& opt = {});
inline Report verify_polarized(const PolarizedMonoid& p, const PolarizedOptions& opt = {}) {
    return verify_polarized(p.t, p.gamma, p.n, opt);
}

// Inner facet normals of cone(Γ), in the order used by facet_sign.
IMat gamma_facets(const QMat& gamma, size_t r);

enum class FacetSign { positive, negative };
const char* to_string(FacetSign s);
// Positive when t lies on the side of the facet hyperplane that holds Γ.
FacetSign facet_sign(const PolarizedMonoid& p, size_t facet);

// (−t, Γ, Z_+(−t) + N(Γ)).
PolarizedMonoid antipode(const PolarizedMonoid& p);

struct SchemeFan {
    Cone plus, minus;  // C(N)^∨ and C(N^-)^∨
    Report report;
};
SchemeFan scheme_fan(const PolarizedMonoid& p);

struct FreeApprox {
    QMat basis;  // free generators, rational points of the dilation stage
    size_t stage = 0;
    Report report;
};
// Free F with S ⊆ F ⊆ L^c_* at some stage >= j, and gp(L)/(c_1...c_j) ⊆ gp(F)
// when with_group is set. L must be simplicial.
FreeApprox approxA_free(const AffineMonoid& l, const CSeq& c, const QMat& s, size_t j, bool with_group = true,
                        size_t cap_stage = 24);

struct ApproxCaps {
    size_t k = 32;        // refinement depth of the pole
    size_t offset = 64;   // halvings of the shrinking parameters
    size_t stage = 24;
};

struct ApproxB {
    std::vector<PolarizedMonoid> triples;
    size_t stage = 0;  // all N_l live in gp(N)/(c_1...c_stage)
    Report report;
};
// s nested polarized monoids for a pyramidal extension M ⊆ N. W and W' are
// rays in int C(N) and int C(M).
ApproxB approxB_construct(const PyramidalExtension& ext, const CSeq& c, size_t s, size_t j, const QMat& w,
                          const QMat& wprime, const ApproxCaps& caps = {});

// The point of the ray l lying on −t + span(base), for base rays spanning a hyperplane.
QVec omega_point(const QVec& l, const QMat& base, const QVec& t);

struct BipyramidalApprox {
    QMat c1, c2;   // ray generators; C = C1 ∪ C2
    QMat shared;   // rays of C1 ∩ C2
    QVec omega;
    size_t stage = 0;  // omega ∈ gp(N)/(c_1...c_stage)
    Report report;
};
// C(N) = C' ∪ C'' must be a pyramidal split along a shared facet; t ∈ C'' \ C'.
BipyramidalApprox bipyramidal_approx(const AffineMonoid& n, const Cone& cprime, const Cone& cdprime, const QVec& t,
                                     const QMat& gamma, const QMat& l_points, const CSeq& c, size_t cap_stage = 24);

}  // namespace torkit
