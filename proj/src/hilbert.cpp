#include "torkit/hilbert.hpp"

#include <algorithm>
#include <set>

namespace torkit {

namespace {

void pull(const IMat& pts, const std::vector<size_t>& s, size_t d, size_t r,
          std::vector<std::vector<size_t>>& out) {
    if (s.size() == d) {
        out.push_back(s);
        return;
    }
    IMat g;
    for (auto i : s) g.push_back(pts[i]);
    Cone k = Cone::from_generators(r, g);
    size_t r0 = s[0];
    for (auto& f : k.facets()) {
        if (dot(f, pts[r0]) == 0) continue;
        std::vector<size_t> sf;
        for (auto i : s)
            if (dot(f, pts[i]) == 0) sf.push_back(i);
        std::vector<std::vector<size_t>> sub;
        pull(pts, sf, d - 1, r, sub);
        for (auto& t : sub) {
            t.push_back(r0);
            out.push_back(t);
        }
    }
}

}  // namespace

std::vector<std::vector<size_t>> triangulate(const IMat& pts, size_t d) {
    std::vector<size_t> all;
    for (size_t i = 0; i < pts.size(); ++i)
        if (!is_zero(pts[i])) all.push_back(i);
    std::vector<std::vector<size_t>> out;
    if (d == 0) return out;
    pull(pts, all, d, d, out);
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

IMat parallelepiped_points(const IMat& v) {
    size_t d = v.size();
    Smith s = smith(v, d);
    QMat vinv = *inverse(to_q(v));
    QMat rinv = *inverse(to_q(s.right));
    IMat out;
    std::vector<Int> a(d, Int(0));
    while (true) {
        // y = a * right^{-1}, reduced into the parallelepiped
        QVec y = row_times(to_q(IVec(a.begin(), a.end())), rinv, d);
        QVec lam = row_times(y, vinv, d);
        for (auto& x : lam) {
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
            x -= fl;
        }
        out.push_back(to_int(row_times(lam, to_q(v), d)));
        size_t i = 0;
        while (i < d) {
            a[i] += 1;
            if (a[i] < s.diag[i]) break;
            a[i] = 0;
            ++i;
        }
        if (i == d) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

IMat hilbert_basis(const Cone& c, const Lattice& l) {
    if (!c.pointed()) throw Error("cone has nontrivial lineality; its minimal generating set is not unique");
    size_t r = c.ambient();
    if (l.ambient() != r) throw InputError("lattice and cone have different ambient ranks");
    if (c.dim() == 0) return {};
    for (auto& g : c.rays())
        if (!l.in_span(to_q(g))) throw Error("cone is not contained in the span of the lattice");
    Lattice sl = l.intersect_span(c.span_basis());
    size_t d = sl.rank();
    IMat rays;
    for (auto& g : c.rays()) rays.push_back(primitive(*sl.coords(to_q(g))));
    Cone k = Cone::from_generators(d, rays);
    IVec xi = k.grading();
    auto simplices = triangulate(k.rays(), d);
    std::set<std::pair<Int, IVec>> cand;
    for (auto& s : simplices) {
        IMat v;
        for (auto i : s) v.push_back(k.rays()[i]);
        for (auto& x : v) cand.insert({dot(xi, x), x});
        for (auto& x : parallelepiped_points(v))
            if (!is_zero(x)) cand.insert({dot(xi, x), x});
    }
    IMat irr;
    for (auto& [deg, x] : cand) {
        bool reducible = false;
        for (auto& h : irr) {
            IVec diff = sub(x, h);
            if (!is_zero(diff) && k.contains(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irr.push_back(x);
    }
    IMat out;
    for (auto& x : irr) out.push_back(sl.from_coords(x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace torkit
