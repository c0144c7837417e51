#include "torkit/cone.hpp"

#include <algorithm>
#include <set>

namespace torkit {

const char* to_string(Position p) {
    switch (p) {
        case Position::outside: return "outside";
        case Position::boundary: return "boundary";
        case Position::interior: return "interior";
    }
    return "?";
}

namespace {

struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(size_t i) { w[i / 64] |= uint64_t(1) << (i % 64); }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.w.resize(w.size());
        for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    size_t count() const {
        size_t c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
};

IMat sorted_unique(IMat m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

}  // namespace

IMat extreme_rays(const IMat& y, size_t d) {
    if (d == 0) return {};
    size_t n = y.size();
    // greedy choice of d independent rows
    std::vector<size_t> base;
    QMat acc;
    for (size_t i = 0; i < n && base.size() < d; ++i) {
        QMat trial = acc;
        trial.push_back(to_q(y[i]));
        if (rank(trial, d) > acc.size()) {
            acc.push_back(to_q(y[i]));
            base.push_back(i);
        }
    }
    if (base.size() < d) throw Error("extreme_rays: constraint matrix is not of full rank");
    QMat y0;
    for (auto i : base) y0.push_back(to_q(y[i]));
    QMat inv = *inverse(y0);
    struct Ray {
        IVec v;
        Bits tight;
    };
    std::vector<Ray> rays;
    for (size_t k = 0; k < d; ++k) {
        QVec col(d);
        for (size_t i = 0; i < d; ++i) col[i] = inv[i][k];
        Ray r{primitive(col), Bits(n)};
        for (size_t j = 0; j < d; ++j)
            if (j != k) r.tight.set(base[j]);
        rays.push_back(std::move(r));
    }
    std::vector<bool> in_base(n, false);
    for (auto i : base) in_base[i] = true;
    for (size_t i = 0; i < n; ++i) {
        if (in_base[i]) continue;
        std::vector<Int> s(rays.size());
        std::vector<size_t> pos, negs;
        for (size_t k = 0; k < rays.size(); ++k) {
            s[k] = dot(y[i], rays[k].v);
            if (s[k] > 0) pos.push_back(k);
            else if (s[k] < 0) negs.push_back(k);
            else rays[k].tight.set(i);
        }
        if (negs.empty()) continue;
        std::vector<Ray> next;
        for (size_t k = 0; k < rays.size(); ++k)
            if (s[k] >= 0) next.push_back(rays[k]);
        for (auto p : pos)
            for (auto q : negs) {
                Bits common = rays[p].tight & rays[q].tight;
                if (d >= 2 && common.count() < d - 2) continue;
                bool adjacent = true;
                for (size_t k = 0; k < rays.size() && adjacent; ++k)
                    if (k != p && k != q && common.subset_of(rays[k].tight)) adjacent = false;
                if (!adjacent) continue;
                IVec v(d);
                Int a = s[p], b = -s[q];
                for (size_t j = 0; j < d; ++j) v[j] = a * rays[q].v[j] + b * rays[p].v[j];
                Ray r{primitive(v), common};
                r.tight.set(i);
                next.push_back(std::move(r));
            }
        rays = std::move(next);
    }
    IMat out;
    for (auto& r : rays) out.push_back(r.v);
    return sorted_unique(out);
}

Cone Cone::zero(size_t r) {
    Cone c;
    c.r_ = r;
    c.dim_ = 0;
    c.eqs_ = identity(r);
    return c;
}

Cone Cone::from_generators(size_t r, const QMat& gens) {
    IMat g;
    for (auto& v : gens) g.push_back(primitive(v));
    return from_generators(r, g);
}

Cone Cone::from_generators(size_t r, const IMat& gens_in) {
    IMat gens;
    for (auto& g : gens_in) {
        if (g.size() != r) throw InputError("generator " + str(g) + " has wrong length");
        if (!is_zero(g)) gens.push_back(primitive(g));
    }
    gens = sorted_unique(gens);
    if (gens.empty()) return zero(r);
    Cone c;
    c.r_ = r;
    c.span_ = to_q(gens);
    auto piv = rref(c.span_, r);
    size_t d = piv.size();
    c.dim_ = d;
    c.eqs_ = integer_nullspace(gens, r);
    IMat ycoords;
    for (auto& g : gens) {
        IVec y(d);
        for (size_t i = 0; i < d; ++i) y[i] = g[piv[i]];
        ycoords.push_back(y);
    }
    IMat etas = extreme_rays(ycoords, d);
    // Lift each span functional to the unique representative inside span(C).
    QMat gram(d, QVec(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) gram[i][j] = dot(c.span_[i], c.span_[j]);
    QMat ginv = *inverse(gram);
    for (auto& eta : etas) {
        QVec coef = row_times(to_q(eta), ginv, d);
        c.facets_.push_back(primitive(row_times(coef, c.span_, r)));
    }
    c.facets_ = sorted_unique(c.facets_);
    // lineality: span points where every facet vanishes
    QMat fy;
    for (auto& eta : etas) fy.push_back(to_q(eta));
    QMat lin_y = etas.empty() ? qidentity(d) : nullspace(fy, d);
    for (auto& ly : lin_y) c.lineality_.push_back(primitive(row_times(ly, c.span_, r)));
    c.lineality_ = hnf(c.lineality_, r);
    if (c.pointed()) {
        for (auto& g : gens) {
            QMat tight;
            for (auto& f : c.facets_)
                if (dot(f, g) == 0) tight.push_back(to_q(f));
            if (rank(tight, r) + 1 == d) c.rays_.push_back(g);
        }
    } else {
        IMat eq = c.eqs_;
        for (auto& l : c.lineality_) eq.push_back(l);
        Cone part = from_inequalities(r, c.facets_, eq);
        c.rays_ = part.rays_;
        for (auto& l : c.lineality_) {
            c.rays_.push_back(primitive(l));
            c.rays_.push_back(primitive(neg(l)));
        }
    }
    c.rays_ = sorted_unique(c.rays_);
    return c;
}

Cone Cone::from_inequalities(size_t r, const IMat& ineqs, const IMat& eqs) {
    for (auto& a : ineqs)
        if (a.size() != r) throw InputError("inequality " + str(a) + " has wrong length");
    for (auto& e : eqs)
        if (e.size() != r) throw InputError("equation " + str(e) + " has wrong length");
    // x = z K with K a basis of the solution space of eqs
    IMat k;
    if (eqs.empty()) k = identity(r);
    else
        for (auto& v : nullspace(to_q(eqs), r)) k.push_back(primitive(v));
    size_t kd = k.size();
    if (kd == 0) return zero(r);
    IMat b;
    for (auto& a : ineqs) {
        IVec row(kd);
        for (size_t j = 0; j < kd; ++j) row[j] = dot(a, k[j]);
        b.push_back(row);
    }
    QMat lin = b.empty() ? qidentity(kd) : nullspace(to_q(b), kd);
    // restrict to the orthogonal complement of the lineality space
    IMat k2;
    if (lin.empty()) k2 = identity(kd);
    else
        for (auto& v : nullspace(lin, kd)) k2.push_back(primitive(v));
    IMat gens;
    if (!k2.empty()) {
        IMat b2;
        for (auto& row : b) {
            IVec rr(k2.size());
            for (size_t j = 0; j < k2.size(); ++j) rr[j] = dot(row, k2[j]);
            b2.push_back(rr);
        }
        for (auto& w : extreme_rays(b2, k2.size())) {
            IVec z = row_times(w, k2, kd);
            gens.push_back(row_times(z, k, r));
        }
    }
    for (auto& lz : lin) {
        IVec z = primitive(lz);
        IVec x = row_times(z, k, r);
        gens.push_back(x);
        gens.push_back(neg(x));
    }
    return from_generators(r, gens);
}

Position Cone::locate(const QVec& x) const {
    if (x.size() != r_) throw InputError("point " + str(x) + " has wrong length");
    for (auto& e : eqs_)
        if (dot(e, x) != 0) return Position::outside;
    bool boundary = false;
    for (auto& f : facets_) {
        int s = sgn(dot(f, x));
        if (s < 0) return Position::outside;
        if (s == 0) boundary = true;
    }
    return boundary ? Position::boundary : Position::interior;
}

bool Cone::in_span(const QVec& x) const {
    for (auto& e : eqs_)
        if (dot(e, x) != 0) return false;
    return true;
}

bool Cone::contains(const Cone& other) const {
    for (auto& g : other.rays_)
        if (!contains(g)) return false;
    return true;
}

std::vector<size_t> Cone::tight_facets(const QVec& x) const {
    std::vector<size_t> t;
    for (size_t i = 0; i < facets_.size(); ++i)
        if (dot(facets_[i], x) == 0) t.push_back(i);
    return t;
}

Cone Cone::face(const std::vector<size_t>& idx) const {
    IMat g;
    for (auto& v : rays_) {
        bool ok = true;
        for (auto i : idx)
            if (dot(facets_[i], v) != 0) ok = false;
        if (ok) g.push_back(v);
    }
    return from_generators(r_, g);
}

Cone Cone::dual() const {
    IMat g = facets_;
    for (auto& e : eqs_) {
        g.push_back(e);
        g.push_back(neg(e));
    }
    return from_generators(r_, g);
}

IVec Cone::grading() const {
    IVec s(r_, Int(0));
    for (auto& f : facets_) s = add(s, f);
    return s;
}

}  // namespace torkit
