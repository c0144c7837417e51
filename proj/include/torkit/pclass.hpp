#pragma once

#include "torkit/monoid.hpp"
#include "torkit/polytope.hpp"

namespace torkit {

struct PyramidCert {
    size_t apex;       // vertex index
    Face base;         // the facet missing only the apex
};
// Least apex index among all pyramid structures.
std::optional<PyramidCert> is_pyramid(const Polytope& p);

struct BipyramidCert {
    size_t v, w;       // vertex indices, v < w
    Face equator;      // remaining vertices
    QVec crossing;     // (v, w) ∩ relint(equator)
};
// Every bipyramid structure in lexicographic order of (v, w).
std::vector<BipyramidCert> bipyramid_structures(const Polytope& p);
std::optional<BipyramidCert> is_bipyramid(const Polytope& p);

struct SigmaStep {
    int dim;
    bool bipyramid;
    QMat fired;  // apex, or the pair v, w
};
struct SigmaResult {
    std::optional<std::string> sigma;  // bit string, empty for points and segments
    std::vector<SigmaStep> trace;
    std::string reason;  // why the polytope is not in the class
};
SigmaResult classify_sigma(const Polytope& p);

struct TypeWitness {
    std::string sigma;
    Polytope polytope;
};
// All 2^{r-1} types in lexicographic order, each with an iterated
// pyramid/bipyramid over a segment in Q^r.
std::vector<TypeWitness> enumerate_types(size_t r);
Polytope type_witness(const std::string& sigma);

struct Corner {
    AffineMonoid monoid;  // N_v, in the degree-0 part of gp(N)
    IVec vertex;          // primitive ray of C(N) through v
    Int lambda;           // least λ with λv ∈ gp(N)
    Polytope figure;      // Φ(N_v)
};
// N_v for the vertex of Φ(N) on the ray through v. Φ(N) is the cross-section
// by the canonical grading of C(N).
Corner corner_cone(const AffineMonoid& n, const IVec& v);

}  // namespace torkit
