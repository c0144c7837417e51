#include "torkit/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torkit {

IVec homogenize(const QVec& x) {
    QVec h = x;
    h.push_back(1);
    return primitive(h);
}

static QVec dehomogenize(const IVec& h) {
    QVec x(h.size() - 1);
    for (size_t i = 0; i + 1 < h.size(); ++i) x[i] = Rat(h[i], h.back());
    for (auto& v : x) v.canonicalize();
    return x;
}

static QVec with_one(const QVec& x) {
    QVec h = x;
    h.push_back(1);
    return h;
}

int Polytope::affine_dim(const QMat& pts, size_t n) {
    if (pts.empty()) return -1;
    QMat h;
    for (auto& p : pts) h.push_back(with_one(p));
    return static_cast<int>(rank(h, n + 1)) - 1;
}

Polytope Polytope::empty(size_t n) {
    Polytope p;
    p.n_ = n;
    p.dim_ = -1;
    p.cone_ = Cone::zero(n + 1);
    p.faces_ = {{Face{}}};
    return p;
}

Polytope Polytope::hull(size_t n, const QMat& points) {
    if (points.empty()) return empty(n);
    IMat h;
    for (auto& x : points) {
        if (x.size() != n) throw InputError("point " + str(x) + " has wrong length");
        h.push_back(homogenize(x));
    }
    Polytope p;
    p.n_ = n;
    p.cone_ = Cone::from_generators(n + 1, h);
    p.dim_ = static_cast<int>(p.cone_.dim()) - 1;
    for (auto& r : p.cone_.rays()) p.verts_.push_back(dehomogenize(r));
    std::sort(p.verts_.begin(), p.verts_.end());
    std::vector<IVec> hv;
    for (auto& v : p.verts_) hv.push_back(homogenize(v));
    p.ineqs_ = p.cone_.facets();
    for (auto& f : p.ineqs_) {
        Face s;
        for (size_t i = 0; i < hv.size(); ++i)
            if (dot(f, hv[i]) == 0) s.push_back(i);
        p.facet_sets_.push_back(s);
    }
    // all intersections of facets
    Face all(p.verts_.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::set<Face> seen{all};
    std::vector<Face> queue{all};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Face cur = queue[qi];
        for (auto& fs : p.facet_sets_) {
            Face inter;
            std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(), std::back_inserter(inter));
            if (seen.insert(inter).second) queue.push_back(inter);
        }
    }
    p.faces_.assign(p.dim_ + 2, {});
    for (auto& f : seen) {
        int d = affine_dim(p.face_vertices(f), n);
        p.faces_[d + 1].push_back(f);
    }
    return p;
}

std::vector<size_t> Polytope::f_vector() const {
    std::vector<size_t> f;
    for (size_t k = 1; k < faces_.size(); ++k) f.push_back(faces_[k].size());
    return f;
}

QMat Polytope::face_vertices(const Face& f) const {
    QMat out;
    for (auto i : f) out.push_back(verts_[i]);
    return out;
}

Position Polytope::locate(const QVec& x) const {
    if (x.size() != n_) throw InputError("point " + str(x) + " has wrong length");
    if (dim_ < 0) return Position::outside;
    return cone_.locate(with_one(x));
}

bool Polytope::contains(const Polytope& other) const {
    for (auto& v : other.verts_)
        if (!contains(v)) return false;
    return true;
}

QVec Polytope::centroid() const {
    QVec c(n_, Rat(0));
    for (auto& v : verts_) c = add(c, v);
    return verts_.empty() ? c : scale(c, Rat(1, static_cast<long>(verts_.size())));
}

Polytope cross_section(const Cone& c) {
    if (!c.pointed()) throw Error("cone has nontrivial lineality");
    if (c.dim() == 0) return Polytope::empty(c.ambient());
    IVec xi = c.grading();
    QMat pts;
    for (auto& r : c.rays()) pts.push_back(scale(to_q(r), 1 / Rat(dot(xi, r))));
    return Polytope::hull(c.ambient(), pts);
}

QVec polar_project(const QVec& x, const QVec& pole, const QVec& a, const Rat& b) {
    QVec dir = sub(x, pole);
    Rat den = dot(a, dir);
    if (den == 0) throw Error("line through pole and point is parallel to the target hyperplane");
    Rat s = (b - dot(a, pole)) / den;
    return add(pole, scale(dir, s));
}

}  // namespace torkit
