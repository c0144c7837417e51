#pragma once

#include "torkit/linalg.hpp"

namespace torkit {

// A subgroup of Z^r, stored by its row Hermite basis (canonical).
class Lattice {
public:
    Lattice() = default;
    Lattice(size_t ambient, const IMat& generators);
    static Lattice full(size_t r);

    size_t ambient() const { return r_; }
    size_t rank() const { return basis_.size(); }
    const IMat& basis() const { return basis_; }

    // Coordinates w.r.t. basis() of a point of the rational span.
    std::optional<QVec> coords(const QVec& x) const;
    std::optional<IVec> int_coords(const IVec& x) const;
    bool contains(const IVec& x) const;
    bool contains(const QVec& x) const;
    bool in_span(const QVec& x) const { return coords(x).has_value(); }
    IVec from_coords(const IVec& c) const { return row_times(c, basis_, r_); }
    QVec from_coords(const QVec& c) const { return row_times(c, to_q(basis_), r_); }

    // r x rank matrix G with coords(x) = x * G for x in the span.
    QMat coord_matrix() const;

    bool contains(const Lattice& other) const;
    // Index [this : other] for a full-rank sublattice other; 0 if infinite.
    Int index_of(const Lattice& other) const;
    // this ∩ span(V) for a rational subspace given by spanning rows.
    Lattice intersect_span(const QMat& span_rows) const;

    bool operator==(const Lattice& o) const { return r_ == o.r_ && basis_ == o.basis_; }

private:
    size_t r_ = 0;
    IMat basis_;
    std::vector<size_t> piv_;
    QMat pinv_;
};

}  // namespace torkit
