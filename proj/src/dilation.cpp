#include "torkit/dilation.hpp"

namespace torkit {

CSeq::CSeq(std::vector<Int> p, Int t) : prefix(std::move(p)), tail(std::move(t)) {
    for (auto& x : prefix)
        if (x < 2) throw InputError("dilation sequence entries must be >= 2");
    if (tail < 2) throw InputError("dilation sequence tail must be >= 2");
}

Int CSeq::at(size_t j) const {
    if (j == 0) throw InputError("dilation sequence is indexed from 1");
    return j <= prefix.size() ? prefix[j - 1] : tail;
}

Int CSeq::product(size_t j) const {
    Int p = 1;
    for (size_t i = 1; i <= j; ++i) p *= at(i);
    return p;
}

DilationStage::DilationStage(AffineMonoid base, CSeq c, size_t j)
    : base_(std::move(base)), c_(std::move(c)), j_(j), d_(c_.product(j)) {}

std::optional<IVec> DilationStage::scaled(const QVec& x) const {
    if (x.size() != base_.ambient()) throw InputError("point " + str(x) + " has wrong length");
    QVec y = scale(x, Rat(d_));
    if (!is_integral(y)) return std::nullopt;
    return to_int(y);
}

bool DilationStage::contains(const QVec& x) const {
    auto y = scaled(x);
    return y && base_.contains(*y);
}

bool DilationStage::in_interior(const QVec& x) const {
    auto y = scaled(x);
    return y && !is_zero(*y) && base_.cone().in_interior(*y) && base_.contains(*y);
}

bool DilationStage::in_group(const QVec& x) const {
    auto y = scaled(x);
    return y && base_.gp().contains(*y);
}

QMat DilationStage::generators() const {
    QMat out;
    for (auto& g : base_.generators()) out.push_back(scale(to_q(g), Rat(1) / Rat(d_)));
    return out;
}

DilationStage stage(const AffineMonoid& m, const CSeq& c, size_t j) { return DilationStage(m, c, j); }

size_t seminormal_limit_witness(const AffineMonoid& m, const CSeq& c, const QVec& x, size_t j) {
    DilationStage sj(m, c, j);
    if (!sj.contains(scale(x, 2)) || !sj.contains(scale(x, 3))) throw Error("2m or 3m not in stage");
    if (sj.contains(x)) return j;
    // c_{j+1} is a nonnegative combination of 2 and 3, so c_{j+1} m lies in stage j
    if (DilationStage(m, c, j + 1).contains(x)) return j + 1;
    throw Error("seminormal limit witness failed at stage " + std::to_string(j + 1));
}

ExcisionWitness excision_witness(const AffineMonoid& m, const CSeq& c, const QMat& a, size_t j, size_t cap_stage) {
    DilationStage sj(m, c, j);
    for (auto& ai : a)
        if (!sj.in_interior(ai)) throw Error("monomial " + str(ai) + " is not interior at stage " + std::to_string(j));
    ExcisionWitness w;
    w.m = InteriorMonoid(m).least_interior_element();
    for (size_t jp = j; jp <= cap_stage; ++jp) {
        DilationStage s(m, c, jp);
        Rat dj(c.product(jp));
        QVec mj = scale(to_q(w.m), 1 / dj);
        QMat b;
        bool ok = true;
        for (auto& ai : a) {
            QVec bi = sub(ai, mj);
            if (!s.in_interior(bi)) {
                ok = false;
                break;
            }
            b.push_back(bi);
        }
        if (!ok) continue;
        Rat next = Rat(c.at(jp + 1));
        w.b = b;
        w.u = scale(mj, 1 / next);
        w.v = scale(w.u, next - 1);
        w.stage = jp + 1;
        DilationStage fin(m, c, w.stage);
        for (size_t i = 0; i < a.size(); ++i) {
            if (add(add(w.b[i], w.u), w.v) != a[i]) throw Error("excision witness failed to recombine");
            if (!fin.in_interior(w.b[i])) throw Error("excision witness b is not interior");
        }
        if (!fin.in_interior(w.u) || !fin.in_interior(w.v)) throw Error("excision witness u or v is not interior");
        return w;
    }
    throw Error("excision depth exceeded");
}

bool PyrappStage::contains(const IVec& x) const {
    QMat rows{to_q(t)};
    for (auto& l : lattice_basis) rows.push_back(to_q(l));
    auto coef = solve_left(rows, to_q(x), t.size());
    if (!coef || !is_integral(*coef)) return false;
    if ((*coef)[0] < 0) return false;
    IVec h = sub(x, scale(t, (*coef)[0].get_num()));
    return n_c.contains(h);
}

PyrappStage pyrapp_stage(const AffineMonoid& m, const IVec& t, const Int& c) {
    if (c < 1) throw Error("c must be >= 1");
    ExtremalInversion inv = invert_extremal(m, t);
    size_t k1 = inv.n.rank();
    FreeEmbedding e = embed_in_free(inv.n);
    // b_i: preimages of the unit vectors under the free embedding of N
    QMat mat(k1, QVec(k1));
    for (size_t i = 0; i < k1; ++i)
        for (size_t j = 0; j < k1; ++j) mat[i][j] = e.matrix[i][j];
    QMat binv = k1 ? *inverse(mat) : QMat{};
    PyrappStage p;
    p.t = t;
    p.c = c;
    for (size_t i = 0; i < k1; ++i) {
        IVec b = to_int(binv[i]);
        p.lattice_basis.push_back(sub(inv.lift_point(b), scale(t, c)));
    }
    Lattice lc(m.ambient(), p.lattice_basis);
    IMat g = m.generators();
    g.push_back(neg(t));
    Cone q = Cone::from_generators(m.ambient(), g);
    QMat span = to_q(p.lattice_basis);
    IMat ann;
    for (auto& v : nullspace(span, m.ambient())) ann.push_back(primitive(v));
    IMat eqs = q.equations();
    eqs.insert(eqs.end(), ann.begin(), ann.end());
    Cone kc = Cone::from_inequalities(m.ambient(), q.facets(), eqs);
    p.n_c = AffineMonoid::normal(kc, lc);
    return p;
}

}  // namespace torkit
