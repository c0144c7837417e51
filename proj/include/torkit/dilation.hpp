#pragma once

#include "torkit/monoid.hpp"

namespace torkit {

// c = (c_1, c_2, ...) given by a finite prefix and a constant tail.
struct CSeq {
    std::vector<Int> prefix;
    Int tail = 2;

    CSeq() = default;
    CSeq(std::vector<Int> p, Int t);
    Int at(size_t j) const;        // c_j for j >= 1
    Int product(size_t j) const;   // c_1 ... c_j, with product(0) = 1
};

// The stage M / (c_1 ... c_j) of the dilation tower, as points x with D x ∈ M.
class DilationStage {
public:
    DilationStage(AffineMonoid base, CSeq c, size_t j);
    const AffineMonoid& base() const { return base_; }
    size_t index() const { return j_; }
    const Int& denominator() const { return d_; }
    bool contains(const QVec& x) const;
    bool in_interior(const QVec& x) const;  // x ∈ int(stage)
    bool in_group(const QVec& x) const;     // x ∈ gp(M) / D
    QMat generators() const;

private:
    AffineMonoid base_;
    CSeq c_;
    size_t j_;
    Int d_;
    std::optional<IVec> scaled(const QVec& x) const;
};

DilationStage stage(const AffineMonoid& m, const CSeq& c, size_t j);

// Least j' in {j, j+1} with m in stage j', given 2m, 3m in stage j.
size_t seminormal_limit_witness(const AffineMonoid& m, const CSeq& c, const QVec& x, size_t j);

struct ExcisionWitness {
    QMat b;
    QVec u, v;
    size_t stage = 0;  // all parts lie in the interior of this stage
    IVec m;            // the fixed interior element of M
};
ExcisionWitness excision_witness(const AffineMonoid& m, const CSeq& c, const QMat& a, size_t j,
                                 size_t cap_stage = 24);

// N_c = (⊕ Z(b_i - c t)) ∩ (Z_+(-t) + M) together with the filtered-union
// member Z_+ t + N_c.
struct PyrappStage {
    IVec t;
    Int c;
    IMat lattice_basis;  // the b_i - c t
    AffineMonoid n_c;
    bool contains(const IVec& x) const;  // x ∈ Z_+ t + N_c
};
PyrappStage pyrapp_stage(const AffineMonoid& m, const IVec& t, const Int& c);

}  // namespace torkit
