#include "torkit/pclass.hpp"

#include <algorithm>

namespace torkit {

std::optional<PyramidCert> is_pyramid(const Polytope& p) {
    if (p.dim() < 1) return std::nullopt;
    size_t nv = p.vertices().size();
    std::optional<PyramidCert> best;
    for (auto& f : p.facets()) {
        if (f.size() + 1 != nv) continue;
        size_t apex = 0;
        while (apex < f.size() && f[apex] == apex) ++apex;
        if (!best || apex < best->apex) best = PyramidCert{apex, f};
    }
    return best;
}

std::vector<BipyramidCert> bipyramid_structures(const Polytope& p) {
    std::vector<BipyramidCert> out;
    int d = p.dim();
    if (d < 2) return out;
    const QMat& vs = p.vertices();
    size_t nv = vs.size(), n = p.ambient();
    for (size_t v = 0; v < nv; ++v)
        for (size_t w = v + 1; w < nv; ++w) {
            Face rest;
            QMat pts;
            for (size_t i = 0; i < nv; ++i)
                if (i != v && i != w) {
                    rest.push_back(i);
                    pts.push_back(vs[i]);
                }
            if (Polytope::affine_dim(pts, n) != d - 1) continue;
            // v + s (w - v) = p0 + sum λ_i (p_i - p0) with a unique s in (0, 1)
            QMat rows{sub(vs[w], vs[v])};
            for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
            QMat dirs(rows.begin() + 1, rows.end());
            if (rank(rows, n) != rank(dirs, n) + 1) continue;
            auto c = solve_left(rows, sub(pts[0], vs[v]), n);
            if (!c) continue;
            Rat s = (*c)[0];
            if (s <= 0 || s >= 1) continue;
            QVec x = add(vs[v], scale(sub(vs[w], vs[v]), s));
            if (!Polytope::hull(n, pts).in_relint(x)) continue;
            out.push_back({v, w, rest, x});
        }
    return out;
}

std::optional<BipyramidCert> is_bipyramid(const Polytope& p) {
    auto all = bipyramid_structures(p);
    if (all.empty()) return std::nullopt;
    return all.front();
}

SigmaResult classify_sigma(const Polytope& p) {
    SigmaResult res;
    if (p.dim() < 0) {
        res.reason = "empty polytope";
        return res;
    }
    if (p.dim() <= 1) {
        res.sigma = "";
        return res;
    }
    const QMat& vs = p.vertices();
    auto pyr = is_pyramid(p);
    auto bips = bipyramid_structures(p);
    if (pyr && !bips.empty()) throw Error("polytope is both a pyramid and a bipyramid");
    if (pyr) {
        auto sub = classify_sigma(Polytope::hull(p.ambient(), p.face_vertices(pyr->base)));
        res.trace.push_back({p.dim(), false, {vs[pyr->apex]}});
        if (!sub.sigma) {
            res.reason = sub.reason;
            res.trace.insert(res.trace.end(), sub.trace.begin(), sub.trace.end());
            return res;
        }
        res.sigma = "0" + *sub.sigma;
        res.trace.insert(res.trace.end(), sub.trace.begin(), sub.trace.end());
        return res;
    }
    // the first equator that classifies; all of them do for members of the class
    std::string last_reason;
    for (auto& b : bips) {
        auto sub = classify_sigma(Polytope::hull(p.ambient(), p.face_vertices(b.equator)));
        if (!sub.sigma) {
            last_reason = sub.reason;
            continue;
        }
        res.sigma = "1" + *sub.sigma;
        res.trace.push_back({p.dim(), true, {vs[b.v], vs[b.w]}});
        res.trace.insert(res.trace.end(), sub.trace.begin(), sub.trace.end());
        return res;
    }
    res.reason = bips.empty() ? "neither a pyramid nor a bipyramid in dimension " + std::to_string(p.dim())
                              : last_reason;
    return res;
}

Polytope type_witness(const std::string& sigma) {
    size_t d = sigma.size() + 1;
    for (char c : sigma)
        if (c != '0' && c != '1') throw InputError("sigma must be a bit string");
    QMat pts(2, QVec(d));
    pts[1][0] = 1;
    // level k is built over level k-1 and carries bit sigma[d-k]
    for (size_t k = 2; k <= d; ++k) {
        QVec c(d);
        for (auto& x : pts) c = add(c, x);
        c = scale(c, Rat(1, static_cast<long>(pts.size())));
        QVec up = c, down = c;
        up[k - 1] = 1;
        down[k - 1] = -1;
        pts.push_back(up);
        if (sigma[d - k] == '1') pts.push_back(down);
    }
    return Polytope::hull(d, pts);
}

std::vector<TypeWitness> enumerate_types(size_t r) {
    if (r < 1) throw InputError("dimension must be >= 1");
    if (r > 20) throw InputError("dimension too large to enumerate");
    std::vector<TypeWitness> out;
    size_t len = r - 1;
    for (unsigned long bits = 0; bits < (1ul << len); ++bits) {
        std::string s(len, '0');
        for (size_t i = 0; i < len; ++i)
            if (bits >> (len - 1 - i) & 1) s[i] = '1';
        out.push_back({s, type_witness(s)});
    }
    return out;
}

Corner corner_cone(const AffineMonoid& n, const IVec& v) {
    size_t r = n.ambient();
    if (v.size() != r) throw InputError("vertex has wrong length");
    const Cone& c = n.cone();
    if (!c.pointed()) throw Error("C(N) is not pointed");
    IVec ray = primitive(v);
    if (std::find(c.rays().begin(), c.rays().end(), ray) == c.rays().end())
        throw Error("v is not a vertex of the cross-section");
    IVec xi = c.grading();
    Int deg = dot(xi, ray);
    QVec vq = scale(to_q(ray), 1 / Rat(deg));
    IMat dirs;
    for (auto& u : c.rays()) {
        if (u == ray) continue;
        dirs.push_back(primitive(sub(scale(to_q(u), 1 / Rat(dot(xi, u))), vq)));
    }
    Cone tv = Cone::from_generators(r, dirs);
    Lattice l = n.gp().intersect_span(tv.span_basis());
    Corner out;
    out.vertex = ray;
    Int k = 1;
    while (!n.gp().contains(scale(ray, k))) ++k;
    out.lambda = deg * k;
    out.monoid = AffineMonoid::normal(tv, l);
    out.figure = cross_section(tv);
    return out;
}

}  // namespace torkit
