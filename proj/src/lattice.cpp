#include "torkit/lattice.hpp"

namespace torkit {

Lattice::Lattice(size_t ambient, const IMat& generators) : r_(ambient) {
    for (auto& g : generators)
        if (g.size() != ambient) throw InputError("generator " + str(g) + " has wrong length");
    basis_ = hnf(generators, ambient);
    for (auto& row : basis_) {
        size_t j = 0;
        while (row[j] == 0) ++j;
        piv_.push_back(j);
    }
    QMat sq(basis_.size(), QVec(basis_.size()));
    for (size_t i = 0; i < basis_.size(); ++i)
        for (size_t j = 0; j < piv_.size(); ++j) sq[i][j] = basis_[i][piv_[j]];
    pinv_ = basis_.empty() ? QMat{} : *inverse(sq);
}

Lattice Lattice::full(size_t r) { return Lattice(r, identity(r)); }

std::optional<QVec> Lattice::coords(const QVec& x) const {
    QVec xp(piv_.size());
    for (size_t j = 0; j < piv_.size(); ++j) xp[j] = x[piv_[j]];
    QVec c = row_times(xp, pinv_, basis_.size());
    QVec back = from_coords(c);
    if (back != x) return std::nullopt;
    return c;
}

std::optional<IVec> Lattice::int_coords(const IVec& x) const {
    auto c = coords(to_q(x));
    if (!c || !is_integral(*c)) return std::nullopt;
    return to_int(*c);
}

bool Lattice::contains(const IVec& x) const { return int_coords(x).has_value(); }

bool Lattice::contains(const QVec& x) const {
    auto c = coords(x);
    return c && is_integral(*c);
}

QMat Lattice::coord_matrix() const {
    QMat g(r_, QVec(basis_.size(), Rat(0)));
    for (size_t j = 0; j < piv_.size(); ++j) g[piv_[j]] = pinv_[j];
    return g;
}

bool Lattice::contains(const Lattice& other) const {
    for (auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Int Lattice::index_of(const Lattice& other) const {
    if (other.rank() != rank() || !contains(other)) return 0;
    IMat m;
    for (auto& b : other.basis_) m.push_back(*int_coords(b));
    return abs(det(m));
}

Lattice Lattice::intersect_span(const QMat& span_rows) const {
    QMat ann = nullspace(span_rows, r_);
    if (ann.empty()) return *this;
    IMat a;
    for (auto& v : ann) a.push_back(primitive(v));
    // c * basis * a^T = 0
    IMat m(a.size(), IVec(basis_.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < basis_.size(); ++k) m[i][k] = dot(a[i], basis_[k]);
    IMat ker = integer_nullspace(m, basis_.size());
    IMat gens;
    for (auto& c : ker) gens.push_back(from_coords(c));
    return Lattice(r_, gens);
}

}  // namespace torkit
