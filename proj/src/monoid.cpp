#include "torkit/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>

namespace torkit {

struct AffineMonoid::Cache {
    std::once_flag hb_once, normal_once, conductor_once;
    IMat hb;
    bool normal = false;
    bool normal_known = false;
    std::optional<IVec> conductor;
    // membership answers are intrinsic, so one memo serves every query
    std::mutex member_mu;
    std::map<IVec, bool> member_memo;
};

namespace {

// x ∈ monoid generated by gens, searching downward inside cone c.
bool dfs_member(const IVec& x0, const IMat& gens, const Cone& c, const IVec* conductor, std::map<IVec, bool>& memo) {
    std::function<bool(const IVec&)> rec = [&](const IVec& x) -> bool {
        if (is_zero(x)) return true;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        bool ok = false;
        if (conductor && c.contains(sub(x, *conductor))) ok = true;
        for (size_t i = 0; i < gens.size() && !ok; ++i) {
            IVec y = sub(x, gens[i]);
            if (c.contains(y) && rec(y)) ok = true;
        }
        memo[x] = ok;
        return ok;
    };
    return rec(x0);
}

}  // namespace

AffineMonoid::AffineMonoid(size_t r, const IMat& gens_in) : r_(r), cache_(std::make_shared<Cache>()) {
    IMat gens;
    for (auto& g : gens_in) {
        if (g.size() != r) throw InputError("generator " + str(g) + " has wrong length");
        if (!is_zero(g)) gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    gp_ = Lattice(r, gens);
    cone_ = Cone::from_generators(r, gens);
    grading_ = cone_.pointed() ? cone_.grading() : IVec(r, Int(0));
    if (!cone_.pointed()) {
        gens_ = gens;
        return;
    }
    std::vector<std::pair<Int, IVec>> by_deg;
    for (auto& g : gens) by_deg.push_back({dot(grading_, g), g});
    std::sort(by_deg.begin(), by_deg.end());
    for (auto& [d, g] : by_deg) {
        std::map<IVec, bool> memo;
        if (!dfs_member(g, gens_, cone_, nullptr, memo)) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end());
}

AffineMonoid AffineMonoid::normal(const Cone& c, const Lattice& l) {
    if (!c.pointed()) return AffineMonoid(c.ambient(), hilbert_basis(c, l));
    // A Hilbert basis is already minimal, so skip the reduction pass.
    AffineMonoid m;
    m.r_ = c.ambient();
    m.cache_ = std::make_shared<Cache>();
    m.gens_ = hilbert_basis(c, l);
    m.gp_ = Lattice(m.r_, m.gens_);
    m.cone_ = Cone::from_generators(m.r_, m.gens_);
    m.grading_ = m.cone_.grading();
    m.cache_->normal = true;
    m.cache_->normal_known = true;
    return m;
}

void AffineMonoid::require_pointed(const char* what) const {
    if (!cone_.pointed()) throw Error(std::string(what) + " requires a monoid without nontrivial units");
}

const IMat& AffineMonoid::normal_hilbert_basis() const {
    std::call_once(cache_->hb_once, [&] { cache_->hb = hilbert_basis(cone_, gp_); });
    return cache_->hb;
}

bool AffineMonoid::is_normal() const {
    if (cache_->normal_known) return cache_->normal;
    std::call_once(cache_->normal_once, [&] {
        require_pointed("normality test");
        bool ok = true;
        std::map<IVec, bool> memo;
        for (auto& h : normal_hilbert_basis())
            if (!dfs_member(h, gens_, cone_, nullptr, memo)) {
                ok = false;
                break;
            }
        cache_->normal = ok;
    });
    return cache_->normal;
}

const IVec* AffineMonoid::conductor() const {
    std::call_once(cache_->conductor_once, [&] {
        size_t k = gp_.rank();
        IMat pts;
        for (auto& g : gens_) pts.push_back(*gp_.int_coords(g));
        std::set<IVec> q;
        for (auto& s : triangulate(pts, k)) {
            IMat v;
            for (auto i : s) v.push_back(pts[i]);
            for (auto& p : parallelepiped_points(v)) q.insert(gp_.from_coords(p));
        }
        IVec sum(r_, Int(0));
        for (auto& g : gens_) sum = add(sum, g);
        std::map<IVec, bool> memo;
        for (Int f = 1; f <= 64; f *= 2) {
            IVec c = scale(sum, f);
            bool ok = true;
            for (auto& p : q)
                if (!dfs_member(add(c, p), gens_, cone_, nullptr, memo)) {
                    ok = false;
                    break;
                }
            if (ok) {
                cache_->conductor = c;
                break;
            }
        }
    });
    return cache_->conductor ? &*cache_->conductor : nullptr;
}

bool AffineMonoid::contains(const IVec& x) const {
    if (x.size() != r_) throw InputError("point " + str(x) + " has wrong length");
    if (!gp_.contains(x) || !cone_.contains(x)) return false;
    if (cache_->normal_known && cache_->normal) return true;
    require_pointed("membership test");
    if (is_normal()) return true;
    const IVec* c = conductor();
    std::lock_guard<std::mutex> lock(cache_->member_mu);
    return dfs_member(x, gens_, cone_, c, cache_->member_memo);
}

bool AffineMonoid::operator==(const AffineMonoid& o) const {
    if (r_ != o.r_ || !(gp_ == o.gp_) || !(cone_ == o.cone_)) return false;
    for (auto& g : gens_)
        if (!o.contains(g)) return false;
    for (auto& g : o.gens_)
        if (!contains(g)) return false;
    return true;
}

AffineMonoid normalization(const AffineMonoid& m) { return AffineMonoid::normal(m.cone(), m.gp()); }

bool in_seminormalization(const AffineMonoid& m, const IVec& x) {
    if (is_zero(x)) return true;
    if (!m.gp().contains(x) || !m.cone().contains(x)) return false;
    auto tight = m.cone().tight_facets(to_q(x));
    IMat face_gens;
    for (auto& g : m.generators()) {
        bool in = true;
        for (auto i : tight)
            if (dot(m.cone().facets()[i], g) != 0) in = false;
        if (in) face_gens.push_back(g);
    }
    return Lattice(m.ambient(), face_gens).contains(x);
}

IMat normal_points_up_to(const AffineMonoid& m, const Int& bound) {
    const IMat& hb = m.normal_hilbert_basis();
    std::set<std::pair<Int, IVec>> seen;
    std::vector<IVec> frontier{IVec(m.ambient(), Int(0))};
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (auto& p : frontier)
            for (auto& h : hb) {
                IVec q = add(p, h);
                Int d = m.degree(q);
                if (d > bound) continue;
                if (seen.insert({d, q}).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    IMat out;
    for (auto& [d, p] : seen) out.push_back(p);
    return out;
}

IMat irreducibles(const AffineMonoid& m, const std::function<bool(const IVec&)>& in_s, const Int& bound) {
    IMat acc;
    for (auto& x : normal_points_up_to(m, bound)) {
        if (!in_s(x)) continue;
        bool red = false;
        for (auto& h : acc) {
            IVec d = sub(x, h);
            if (!is_zero(d) && m.cone().contains(d) && in_s(d)) {
                red = true;
                break;
            }
        }
        if (!red) acc.push_back(x);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

static Int generator_degree_sum(const AffineMonoid& m) {
    Int d = 0;
    for (auto& g : m.generators()) d += m.degree(g);
    return d;
}

Seminormalization seminormalization(const AffineMonoid& m) {
    if (!m.has_trivial_units()) throw Error("seminormalization requires a monoid without nontrivial units");
    Int bound = generator_degree_sum(m);
    auto in_sn = [&](const IVec& x) { return in_seminormalization(m, x); };
    auto by_degree = [&](const IVec& a, const IVec& b) {
        Int da = m.degree(a), db = m.degree(b);
        return da != db ? da < db : a < b;
    };
    IMat cand;
    for (auto& x : normal_points_up_to(m, bound))
        if (in_sn(x) && !m.contains(x)) cand.push_back(x);
    // Adjoining x may first need 2x or 3x. When a candidate is left over, its
    // double and triple join the candidates and the iteration restarts, so
    // every step stays one application of the operator. Large multiples of an
    // sn point lie in M, so this ends.
    Seminormalization out;
    AffineMonoid cur = m;
    for (;;) {
        std::sort(cand.begin(), cand.end(), by_degree);
        out.steps.clear();
        cur = m;
        while (true) {
            IMat added;
            for (auto& x : cand)
                if (!cur.contains(x) && cur.contains(scale(x, 2)) && cur.contains(scale(x, 3))) added.push_back(x);
            if (added.empty()) break;
            out.steps.push_back(added);
            IMat g = cur.generators();
            g.insert(g.end(), added.begin(), added.end());
            cur = AffineMonoid(m.ambient(), g);
        }
        std::set<IVec> known(cand.begin(), cand.end());
        IMat more;
        for (auto& x : cand) {
            if (cur.contains(x)) continue;
            for (long k : {2, 3}) {
                IVec y = scale(x, Int(k));
                if (!m.contains(y) && known.insert(y).second) more.push_back(y);
            }
        }
        if (more.empty()) break;
        cand.insert(cand.end(), more.begin(), more.end());
    }
    for (auto& h : irreducibles(m, in_sn, bound))
        if (!cur.contains(h)) throw Error("seminormalization iteration stalled before reaching sn(M)");
    out.result = cur;
    return out;
}

bool is_seminormal(const AffineMonoid& m) {
    if (!m.has_trivial_units()) throw Error("seminormality test requires a monoid without nontrivial units");
    auto in_sn = [&](const IVec& x) { return in_seminormalization(m, x); };
    for (auto& h : irreducibles(m, in_sn, generator_degree_sum(m)))
        if (!m.contains(h)) return false;
    return true;
}

InteriorMonoid::InteriorMonoid(AffineMonoid base) : base_(std::move(base)) {
    if (!base_.has_trivial_units()) throw Error("interior submonoid requires a pointed cone");
}

bool InteriorMonoid::in_ideal(const IVec& x) const {
    return !is_zero(x) && base_.cone().in_interior(x) && base_.contains(x);
}

bool InteriorMonoid::contains(const IVec& x) const { return is_zero(x) || in_ideal(x); }

IMat InteriorMonoid::irreducibles(const Int& max_degree) const {
    return torkit::irreducibles(base_, [&](const IVec& x) { return contains(x); }, max_degree);
}

IVec InteriorMonoid::least_interior_element() const {
    Int bound = std::max(generator_degree_sum(base_), Int(1));
    for (int round = 0; round < 16; ++round, bound *= 2) {
        for (auto& x : normal_points_up_to(base_, bound))
            if (in_ideal(x)) return x;  // sorted by (degree, lex)
    }
    throw Error("no interior element found");
}

AffineMonoid region_submonoid(const AffineMonoid& m, const QMat& w) {
    if (!m.is_normal()) throw Error("region submonoid requires a normal monoid");
    IMat g;
    for (auto& p : w) {
        if (p.size() != m.ambient()) throw InputError("point " + str(p) + " has wrong length");
        if (is_zero(p) || !m.cone().contains(p)) throw Error("W not inside Phi(M): " + str(p));
        g.push_back(primitive(p));
    }
    return AffineMonoid::normal(Cone::from_generators(m.ambient(), g), m.gp());
}

IVec ExtremalInversion::project(const IVec& x) const { return to_int(row_times(to_q(x), projection, n.ambient())); }

IVec ExtremalInversion::lift_point(const IVec& y) const {
    return to_int(row_times(to_q(y), lift, t.size()));
}

ExtremalInversion invert_extremal(const AffineMonoid& m, const IVec& t) {
    if (t.size() != m.ambient()) throw InputError("t has wrong length");
    if (!m.has_trivial_units()) throw Error("invert_extremal requires U(M)=0");
    if (!m.is_normal()) throw Error("invert_extremal requires a normal monoid");
    if (!m.contains(t)) throw Error("t is not an element of M");
    const IMat& rays = m.cone().rays();
    if (is_zero(t) || std::find(rays.begin(), rays.end(), primitive(t)) == rays.end())
        throw Error("t is not extremal");
    IVec tau = *m.gp().int_coords(t);
    if (gcd_all(tau) != 1) throw Error("t is not the minimal generator of its edge");
    size_t k = m.rank();
    IMat p = complete_to_basis(tau);
    QMat pinv = *inverse(to_q(p));
    QMat g = mat_mul(m.gp().coord_matrix(), pinv, k);
    ExtremalInversion inv;
    inv.t = t;
    inv.projection.assign(m.ambient(), QVec(k - 1));
    for (size_t i = 0; i < m.ambient(); ++i)
        for (size_t j = 1; j < k; ++j) inv.projection[i][j - 1] = g[i][j];
    IMat rows(p.begin() + 1, p.end());
    inv.lift = to_q(mat_mul(rows, m.gp().basis(), m.ambient()));
    IMat img;
    for (auto& x : m.generators()) img.push_back(to_int(row_times(to_q(x), inv.projection, k - 1)));
    inv.n = AffineMonoid::normal(Cone::from_generators(k - 1, img), Lattice::full(k - 1));
    return inv;
}

bool in_localization(const AffineMonoid& m, const IVec& t, const IVec& x) {
    if (!m.gp().contains(x)) return false;
    IMat g = m.generators();
    g.push_back(neg(t));
    if (!m.is_normal()) throw Error("localization membership requires a normal monoid");
    return Cone::from_generators(m.ambient(), g).contains(x);
}

FreeBasis free_basis_in_region(const AffineMonoid& m, const QMat& w, const Int& cap) {
    if (!m.is_normal()) throw Error("free_basis_in_region requires a normal monoid");
    if (!m.has_trivial_units()) throw Error("free_basis_in_region requires U(M)=0");
    QMat pts;
    for (auto& p : w) {
        if (p.size() != m.ambient() || !m.cone().contains(p) || is_zero(p))
            throw Error("W not inside Phi(M): " + str(p));
        pts.push_back(scale(p, 1 / Rat(dot(m.grading(), p))));
    }
    Polytope wp = Polytope::hull(m.ambient(), pts);
    size_t k = m.rank();
    if (wp.dim() != static_cast<int>(k) - 1) throw Error("W must have the dimension of Phi(M)");
    QVec center = wp.centroid();
    IVec tau = primitive(*m.gp().coords(center));
    IMat p = complete_to_basis(tau);
    FreeBasis fb;
    IVec m0 = m.gp().from_coords(tau);
    auto normalized = [&](const IVec& v) { return scale(to_q(v), 1 / Rat(dot(m.grading(), v))); };
    if (k == 1) {
        fb.basis = {m0};
        fb.c = 0;
        fb.simplex = {normalized(m0)};
        return fb;
    }
    for (Int c = 1; c <= cap; c *= 2) {
        IMat basis{m0};
        QMat simplex{normalized(m0)};
        bool ok = true;
        for (size_t i = 1; i < k && ok; ++i) {
            IVec v = m.gp().from_coords(add(p[i], scale(tau, c)));
            if (!m.cone().contains(v) || m.degree(v) <= 0) {
                ok = false;
                break;
            }
            QVec s = normalized(v);
            if (!wp.in_relint(s)) ok = false;
            basis.push_back(v);
            simplex.push_back(s);
        }
        if (ok) {
            fb.basis = basis;
            fb.c = c;
            fb.simplex = simplex;
            return fb;
        }
    }
    throw Error("free basis search exceeded the cap");
}

IVec FreeEmbedding::image(const IVec& x) const { return to_int(row_times(to_q(x), matrix, dual_basis.size())); }

Int FreeEmbedding::degree(const IVec& x) const {
    Int s = 0;
    for (auto& v : image(x)) s += v;
    return s;
}

FreeEmbedding embed_in_free(const AffineMonoid& m) {
    if (!m.has_trivial_units()) throw Error("embed_in_free requires U(M)=0");
    size_t k = m.rank();
    IMat g;
    for (auto& x : m.generators()) g.push_back(*m.gp().int_coords(x));
    Cone kc = Cone::from_generators(k, g);
    Cone dual = kc.dual();
    IMat fstar = hilbert_basis(dual, Lattice::full(k));
    if (fstar.size() != k || abs(det(fstar)) != 1) {
        AffineMonoid dm = AffineMonoid::normal(dual, Lattice::full(k));
        fstar = free_basis_in_region(dm, dm.cross_section().vertices()).basis;
    }
    std::sort(fstar.rbegin(), fstar.rend());
    FreeEmbedding e;
    e.dual_basis = fstar;
    e.matrix = mat_mul(m.gp().coord_matrix(), transpose(to_q(fstar), k), k);
    return e;
}

}  // namespace torkit
