#include "torkit/pyramidal.hpp"

#include <algorithm>

namespace torkit {

namespace {

Int round_rat(const Rat& q) {
    Int num = 2 * q.get_num() + q.get_den(), den = 2 * q.get_den(), out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

IMat int_rays(const QMat& pts) {
    IMat out;
    for (auto& p : pts) out.push_back(primitive(p));
    return out;
}

std::string join(const IMat& m) {
    std::string s;
    for (auto& v : m) s += (s.empty() ? "" : " ") + str(v);
    return s;
}

bool all_interior(const Cone& c, const QMat& pts) {
    for (auto& p : pts)
        if (is_zero(p) || !c.in_interior(p)) return false;
    return true;
}

bool all_interior(const Cone& c, const IMat& pts) { return all_interior(c, to_q(pts)); }

// Some u with m·u = gcd(m) >= 0.
IVec bezout(const IVec& m) {
    IVec u(m.size(), Int(0));
    Int g = 0;
    for (size_t j = 0; j < m.size(); ++j) {
        Int g2, a, b;
        mpz_gcdext(g2.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(), m[j].get_mpz_t());
        for (auto& x : u) x *= a;
        u[j] += b;
        g = g2;
    }
    return u;
}

// Normalized volume of a pointed cone with respect to a lattice whose span holds it.
Int lattice_volume(const Cone& c, const Lattice& l) {
    Lattice sl = l.intersect_span(c.span_basis());
    size_t d = sl.rank();
    IMat rays;
    for (auto& g : c.rays()) rays.push_back(primitive(*sl.coords(to_q(g))));
    Int vol = 0;
    for (auto& s : triangulate(rays, d)) {
        IMat v;
        for (auto i : s) v.push_back(rays[i]);
        vol += abs(det(v));
    }
    return vol;
}

QVec normalized(const QVec& x, const IVec& xi) { return scale(x, Rat(1) / dot(xi, x)); }

QVec centroid_of(const QMat& pts) {
    QVec c(pts[0].size(), Rat(0));
    for (auto& p : pts) c = add(c, p);
    return scale(c, Rat(1, pts.size()));
}

}  // namespace

bool Report::ok() const {
    for (auto& c : clauses)
        if (!c.pass) return false;
    return true;
}

std::string Report::failure() const {
    for (auto& c : clauses)
        if (!c.pass) return c.detail.empty() ? c.name : c.detail;
    return {};
}

void Report::add(std::string name, bool pass, std::string detail) {
    clauses.push_back({std::move(name), pass, pass ? std::string() : std::move(detail)});
}

PyramidalCheck is_pyramidal_extension(const AffineMonoid& m, const AffineMonoid& n) {
    if (m.ambient() != n.ambient()) throw InputError("monoids have different ambient ranks");
    for (auto& g : m.generators())
        if (!n.contains(g)) throw Error("M is not contained in N");
    PyramidalCheck out;
    Report& rep = out.report;
    bool units = m.has_trivial_units() && n.has_trivial_units();
    rep.add("trivial units", units, "a monoid has nontrivial units");
    if (!units) return out;
    bool normal = m.is_normal() && n.is_normal();
    rep.add("normal", normal, "a monoid is not normal");
    if (!normal) return out;
    bool gp = m.gp() == n.gp();
    rep.add("same group", gp, "gp mismatch");
    if (!gp) return out;
    IMat outside;
    for (auto& ray : n.cone().rays())
        if (!m.cone().contains(ray)) outside.push_back(ray);
    rep.add("one vertex outside Phi(M)", outside.size() == 1,
            outside.empty() ? "Phi(M) = Phi(N), the pyramid is empty" : "several vertices of Phi(N) lie outside Phi(M)");
    if (outside.size() != 1) return out;
    const IVec& v = outside[0];
    const IMat& f = m.cone().facets();
    std::vector<size_t> visible;
    for (size_t i = 0; i < f.size(); ++i)
        if (dot(f[i], v) < 0) visible.push_back(i);
    rep.add("apex beyond one facet", visible.size() == 1,
            "apex lies beyond " + std::to_string(visible.size()) + " facets of Phi(M)");
    if (visible.size() != 1) return out;
    PyramidalExtension e{m, n, {}, v, f[visible[0]]};
    for (auto& ray : m.cone().rays())
        if (dot(e.base_normal, ray) == 0) e.delta.push_back(ray);
    e.delta.push_back(v);
    out.extension = e;
    return out;
}

IMat gamma_facets(const QMat& gamma, size_t r) { return Cone::from_generators(r, int_rays(gamma)).facets(); }

Report verify_polarized(const IVec& t, const QMat& gamma, const AffineMonoid& n, const PolarizedOptions& opt) {
    size_t r = n.ambient();
    if (t.size() != r) throw InputError("pole " + str(t) + " has wrong length");
    for (auto& g : gamma)
        if (g.size() != r) throw InputError("point " + str(g) + " of Gamma has wrong length");
    Report rep;
    bool units = n.has_trivial_units();
    rep.add("trivial units", units, "N has nontrivial units");
    if (!units) return rep;
    bool normal = n.is_normal();
    rep.add("normal", normal, "N is not normal");
    if (!normal) return rep;
    bool tin = !is_zero(t) && n.contains(t);
    rep.add("pole in N", tin, "pole not in N");
    if (!tin) return rep;
    bool inside = !gamma.empty();
    for (auto& g : gamma)
        if (is_zero(g) || !n.cone().contains(g)) inside = false;
    rep.add("Gamma inside Phi(N)", inside, "Gamma not inside Phi(N)");
    if (!inside) return rep;
    IMat g = int_rays(gamma);
    Cone cg = Cone::from_generators(r, g);
    bool full = cg.dim() == n.rank();
    rep.add("Gamma full-dimensional", full, "Gamma is not full-dimensional in Phi(N)");
    if (!full) return rep;

    IVec tp = primitive(t);
    bool edge = std::find(n.cone().rays().begin(), n.cone().rays().end(), tp) != n.cone().rays().end();
    edge = edge && gcd_all(*n.gp().int_coords(t)) == 1;
    rep.add("pole edge generator", edge, "pole not edge generator");
    if (!edge) return rep;
    IMat tg = g;
    tg.push_back(t);
    bool ident = Cone::from_generators(r, tg) == n.cone();
    rep.add("cone identity", ident, "C(N) differs from R_+ t + R_+ Gamma");
    if (!ident) return rep;

    const IMat& fac = cg.facets();
    for (size_t i = 0; i < fac.size(); ++i) {
        IMat frays;
        for (auto& ray : cg.rays())
            if (dot(fac[i], ray) == 0) frays.push_back(ray);
        std::string label = "facet " + join(frays);
        Int ht = dot(fac[i], t);
        if (ht == 0) {
            rep.add(label + " pole off hyperplane", false, "pole lies on the hyperplane of " + label);
            continue;
        }
        bool split = true;
        for (auto& b : n.gp().basis())
            if (dot(fac[i], b) % ht != 0) split = false;
        rep.add(label + " splitting", split, "Z t does not split off at " + label);
        IMat ft = frays;
        ft.push_back(t);
        Cone ct = Cone::from_generators(r, ft);
        Int vol = lattice_volume(ct, n.gp());
        if (vol > opt.hb_budget) {
            rep.clauses.push_back({label + " hilbert basis", true, "skipped, volume " + str(vol)});
            continue;
        }
        IMat lhs = hilbert_basis(ct, n.gp());
        IMat rhs = hilbert_basis(Cone::from_generators(r, frays), n.gp());
        rhs.push_back(t);
        std::sort(rhs.begin(), rhs.end());
        rep.add(label + " hilbert basis", lhs == rhs, "Hilbert basis at " + label + " is not {t} + basis of N(F)");
    }
    return rep;
}

const char* to_string(FacetSign s) { return s == FacetSign::positive ? "positive" : "negative"; }

FacetSign facet_sign(const PolarizedMonoid& p, size_t facet) {
    IMat f = gamma_facets(p.gamma, p.n.ambient());
    if (facet >= f.size()) throw InputError("facet index out of range");
    int s = sgn(dot(f[facet], p.t));
    if (s == 0) throw Error("not polarized: pole lies on a facet hyperplane");
    return s > 0 ? FacetSign::positive : FacetSign::negative;
}

PolarizedMonoid antipode(const PolarizedMonoid& p) {
    IMat g = int_rays(p.gamma);
    g.push_back(neg(p.t));
    Cone c = Cone::from_generators(p.n.ambient(), g);
    return {neg(p.t), p.gamma, AffineMonoid::normal(c, p.n.gp()), p.scale};
}

SchemeFan scheme_fan(const PolarizedMonoid& p) {
    size_t r = p.n.ambient();
    PolarizedMonoid a = antipode(p);
    SchemeFan f{p.n.cone().dual(), a.n.cone().dual(), {}};
    IMat g = int_rays(p.gamma);
    IMat gp = g, gm = g;
    gp.push_back(p.t);
    gm.push_back(neg(p.t));
    Cone hp = Cone::from_inequalities(r, gp), hm = Cone::from_inequalities(r, gm);
    f.report.add("C(N) dual is the t-positive half of C(N(Gamma)) dual", f.plus == hp,
                 "C(N) dual differs from the t-positive half");
    f.report.add("C(N-) dual is the t-negative half of C(N(Gamma)) dual", f.minus == hm,
                 "C(N-) dual differs from the t-negative half");
    f.report.add("maximal cones full-dimensional", f.plus.dim() == r && f.minus.dim() == r,
                 "a dual cone is not full-dimensional");
    Cone common = Cone::from_inequalities(r, g, {p.t});
    bool shared = common.dim() + 1 == r && f.plus.contains(common) && f.minus.contains(common);
    f.report.add("shared facet", shared, "the dual cones do not meet in a common facet");
    Cone dg = Cone::from_generators(r, g).dual();
    bool covered = dg.contains(f.plus) && dg.contains(f.minus);
    for (auto& ray : dg.rays())
        if (!f.plus.contains(ray) && !f.minus.contains(ray)) covered = false;
    f.report.add("union is C(N(Gamma)) dual", covered && f.plus == hp && f.minus == hm,
                 "union differs from the dual of C(N(Gamma))");
    return f;
}

FreeApprox approxA_free(const AffineMonoid& l, const CSeq& c, const QMat& s, size_t j, bool with_group,
                        size_t cap_stage) {
    size_t r = l.ambient(), k = l.rank();
    if (!l.has_trivial_units()) throw Error("L has nontrivial units");
    if (l.cone().rays().size() != k) throw Error("not simplicial");
    DilationStage sj(l, c, j);
    for (auto& x : s)
        if (!sj.in_interior(x)) throw Error("S element " + str(x) + " is not interior at stage " + std::to_string(j));
    const Lattice& gp = l.gp();
    Rat dj(c.product(j));
    // y-coordinates: x = y·B / D_j
    auto ycoords = [&](const QVec& x) { return *gp.coords(scale(x, dj)); };
    QMat bq = to_q(gp.basis());
    IMat rays;
    for (auto& ray : l.cone().rays()) rays.push_back(primitive(ycoords(to_q(ray))));
    Cone cl = Cone::from_generators(k, rays);
    IVec xi = cl.grading();
    QMat sy;
    for (auto& x : s) sy.push_back(ycoords(x));
    QMat vh;
    for (auto& v : cl.rays()) vh.push_back(normalized(to_q(v), xi));
    QVec wh = centroid_of(vh);

    QMat d;
    for (Rat eps(1, 2); eps > Rat(Int(1), Int(1) << 64); eps /= 2) {
        d.clear();
        for (auto& v : vh) d.push_back(add(scale(v, 1 - eps), scale(wh, eps)));
        Cone cd = Cone::from_generators(k, d);
        if (all_interior(cd, sy)) break;
    }

    auto to_point = [&](const QVec& y, const Int& dJ) { return scale(row_times(y, bq, r), Rat(1) / Rat(dJ)); };
    auto check = [&](const IMat& p, size_t stage, FreeApprox& out) {
        Int dJ = c.product(stage);
        Rat ratio = Rat(dJ) / dj;
        DilationStage st(l, c, stage);
        out = FreeApprox{};
        out.stage = stage;
        for (auto& row : p) out.basis.push_back(to_point(to_q(row), dJ));
        bool interior = true;
        for (auto& f : out.basis)
            if (!st.in_interior(f)) interior = false;
        out.report.add("generators interior at stage " + std::to_string(stage), interior, "generator not interior");
        QMat pq = to_q(p);
        bool contains_s = true;
        for (auto& y : sy) {
            auto co = solve_left(pq, scale(y, ratio), k);
            if (!co || !is_integral(*co)) {
                contains_s = false;
                continue;
            }
            for (auto& x : *co)
                if (x < 0) contains_s = false;
        }
        out.report.add("S inside F", contains_s, "S not inside F");
        if (with_group) {
            bool group = true;
            for (size_t i = 0; i < k; ++i) {
                QVec e(k, Rat(0));
                e[i] = ratio;
                auto co = solve_left(pq, e, k);
                if (!co || !is_integral(*co)) group = false;
            }
            out.report.add("group contained in gp(F)", group, "gp(L)/D_j not inside gp(F)");
        }
        out.report.add("free", det(p) != 0, "generators are linearly dependent");
        return out.report.ok();
    };

    FreeApprox out;
    for (size_t stage = j; stage <= cap_stage; ++stage) {
        Int ratio = c.product(stage) / c.product(j);
        if (ratio == 1) {
            // Small unimodular interior bases in y-coordinates.
            std::vector<std::pair<Int, IVec>> cand;
            IVec y(k, Int(0));
            std::function<void(size_t)> box = [&](size_t i) {
                if (i == k) {
                    if (cl.in_interior(y) && sj.in_interior(to_point(to_q(y), c.product(j)))) cand.push_back({dot(xi, y), y});
                    return;
                }
                for (long a = -3; a <= 3; ++a) {
                    y[i] = a;
                    box(i + 1);
                }
            };
            box(0);
            std::sort(cand.begin(), cand.end());
            if (cand.size() > 24) cand.resize(24);
            std::vector<size_t> idx(k);
            std::function<bool(size_t, size_t)> pick = [&](size_t pos, size_t from) -> bool {
                if (pos == k) {
                    IMat p;
                    for (auto i : idx) p.push_back(cand[i].second);
                    if (abs(det(p)) != 1) return false;
                    return check(p, stage, out);
                }
                for (size_t i = from; i < cand.size(); ++i) {
                    idx[pos] = i;
                    if (pick(pos + 1, i + 1)) return true;
                }
                return false;
            };
            if (k > 0 && cand.size() >= k && pick(0, 0)) return out;
            continue;
        }
        Int kk;
        mpz_root(kk.get_mpz_t(), ratio.get_mpz_t(), k + 1);
        if (kk < 1) kk = 1;
        for (int attempt = 0; attempt < 40; ++attempt) {
            IMat p;
            for (size_t i = 0; i + 1 < k; ++i) {
                Rat mx = 0;
                for (auto& x : d[i]) mx = std::max(mx, Rat(abs(x)));
                IVec row(k);
                for (size_t a = 0; a < k; ++a) row[a] = round_rat(d[i][a] / mx * Rat(kk));
                if (attempt > 0) row[(attempt + i) % k] += (attempt + 1) / 2 * ((attempt % 2) ? 1 : -1);
                p.push_back(row);
            }
            IVec m(k);
            for (size_t a = 0; a < k; ++a) {
                IMat sq = p;
                IVec e(k, Int(0));
                e[a] = 1;
                sq.push_back(e);
                m[a] = det(sq);
            }
            Int g = gcd_all(m);
            if (g == 0 || ratio % g != 0) continue;
            Rat md = dot(m, d[k - 1]);
            if (md == 0) continue;
            Int target = md > 0 ? ratio : Int(-ratio);
            IVec x0 = scale(bezout(m), target / g);
            QVec tgt = scale(d[k - 1], Rat(target) / md);
            IVec x = x0;
            if (k > 1) {
                auto co = solve_left(to_q(p), sub(tgt, to_q(x0)), k);
                if (!co) continue;
                for (size_t i = 0; i + 1 < k; ++i) x = add(x, scale(p[i], round_rat((*co)[i])));
            }
            p.push_back(x);
            if (abs(det(p)) != ratio) continue;
            if (check(p, stage, out)) return out;
        }
    }
    throw Error("approximation depth exceeded");
}

namespace {

// min over nonzero lattice points u of cone c of h·u is at least 2.
bool shift_condition(const Cone& c, const IVec& h, std::string& why) {
    size_t k = c.ambient();
    QMat verts{QVec(k, Rat(0))};
    for (auto& ray : c.rays()) {
        Int v = dot(h, ray);
        if (v <= 0) {
            why = "functional not positive on the smaller cone";
            return false;
        }
        verts.push_back(scale(to_q(ray), Rat(1) / Rat(v)));
    }
    std::vector<Int> lo(k), hi(k);
    Rat volume = 1;
    for (size_t i = 0; i < k; ++i) {
        Rat mn = verts[0][i], mx = verts[0][i];
        for (auto& v : verts) mn = std::min(mn, v[i]), mx = std::max(mx, v[i]);
        mpz_fdiv_q(lo[i].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_cdiv_q(hi[i].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
        volume *= Rat(hi[i] - lo[i] + 1);
    }
    if (volume > 2000000) {
        why = "shift check enumeration too large";
        return false;
    }
    IVec u(k);
    bool ok = true;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (!ok) return;
        if (i == k) {
            if (!is_zero(u) && dot(h, u) <= 1 && c.contains(u)) {
                ok = false;
                why = "shift condition fails at " + str(u);
            }
            return;
        }
        for (Int a = lo[i]; a <= hi[i]; ++a) {
            u[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
    return ok;
}

}  // namespace

ApproxB approxB_construct(const PyramidalExtension& ext, const CSeq& c, size_t s, size_t j, const QMat& w,
                          const QMat& wprime, const ApproxCaps& caps) {
    if (s == 0) throw InputError("s must be positive");
    const AffineMonoid& n = ext.n;
    const AffineMonoid& m = ext.m;
    size_t r = n.ambient(), k = n.rank();
    for (auto& x : w)
        if (x.size() != r || is_zero(x) || !n.cone().in_interior(x)) throw Error("W not interior");
    for (auto& x : wprime)
        if (x.size() != r || is_zero(x) || !m.cone().in_interior(x)) throw Error("W' not interior");
    const Lattice& gp = n.gp();
    QMat bn = to_q(gp.basis());
    auto yc = [&](const QVec& x) { return *gp.coords(x); };
    IMat nrays, mrays;
    for (auto& ray : n.cone().rays()) nrays.push_back(primitive(yc(to_q(ray))));
    for (auto& ray : m.cone().rays()) mrays.push_back(primitive(yc(to_q(ray))));
    Cone cn = Cone::from_generators(k, nrays), cm = Cone::from_generators(k, mrays);
    IVec xi = cn.grading();
    QVec v = normalized(yc(to_q(ext.apex)), xi);
    QMat nh, mh;
    for (auto& ray : cn.rays()) nh.push_back(normalized(to_q(ray), xi));
    for (auto& ray : cm.rays()) mh.push_back(normalized(to_q(ray), xi));
    QVec cnc = centroid_of(nh), cmc = centroid_of(mh);
    const IMat& ff = cm.facets();
    size_t base = ff.size();
    for (size_t i = 0; i < ff.size(); ++i)
        if (dot(ff[i], v) < 0) base = i;
    if (base == ff.size()) throw Error("apex is not beyond a facet of Phi(M)");
    QMat wy, wpy;
    for (auto& x : w) wy.push_back(yc(x));
    for (auto& x : wprime) wpy.push_back(yc(x));
    Int dj = c.product(j);

    std::string last = "no candidate passed the ideal checks";
    for (size_t round = 0; round < caps.offset; ++round) {
        Rat eps(Int(1), Int(1) << (round + 2));
        QVec vp = add(scale(v, 1 - eps), scale(cnc, eps));
        bool generic = true;
        for (size_t i = 0; i < ff.size(); ++i) {
            int sg = sgn(dot(ff[i], vp));
            if (i == base ? sg >= 0 : sg <= 0) generic = false;
        }
        if (!generic) continue;
        // Shrunk facet functionals f_F - eps_l a_F xi, one set per level.
        std::vector<QMat> fl(s);
        for (size_t l = 0; l < s; ++l) {
            Rat el = eps * Rat(s - l, s);
            for (auto& f : ff) {
                Rat af = dot(f, cmc);
                QVec g = to_q(f);
                for (size_t a = 0; a < k; ++a) g[a] -= el * af * Rat(xi[a]);
                fl[l].push_back(g);
            }
        }
        IMat ideal;
        for (auto& g : fl[0]) ideal.push_back(primitive(g));
        Cone t1 = Cone::from_inequalities(k, ideal);
        QMat pyr = to_q(t1.rays());
        pyr.push_back(vp);
        if (!all_interior(t1, wpy) || !all_interior(Cone::from_generators(k, pyr), wy)) continue;

        IVec tz = primitive(vp);
        IMat u = complete_to_basis(tz);
        for (size_t kk = 1; kk <= caps.k && j + kk <= caps.stage; ++kk) {
            size_t stage = j + kk;
            Int big = c.product(stage) / dj;
            QMat bk(k);
            bk[0] = scale(to_q(tz), Rat(1) / Rat(big * dj));
            for (size_t i = 1; i < k; ++i) bk[i] = scale(to_q(u[i]), Rat(1) / Rat(dj));
            QMat bkinv = *inverse(bk);
            auto uc = [&](const QVec& y) { return row_times(y, bkinv, k); };
            std::vector<IMat> h(s);
            bool valid = true;
            for (size_t l = 0; l < s && valid; ++l)
                for (auto& g : fl[l]) {
                    Rat at = dot(g, bk[0]);
                    if (at == 0) {
                        valid = false;
                        break;
                    }
                    IVec row(k);
                    row[0] = at > 0 ? 1 : -1;
                    for (size_t i = 1; i < k; ++i) row[i] = round_rat(dot(g, bk[i]) / abs(at));
                    h[l].push_back(row);
                }
            if (!valid) continue;
            QMat mu;
            for (auto& ray : cm.rays()) mu.push_back(uc(to_q(ray)));
            QMat nu;
            for (auto& ray : cn.rays()) nu.push_back(uc(to_q(ray)));
            Cone cmu = Cone::from_generators(k, mu), cnu = Cone::from_generators(k, nu);
            std::vector<Cone> gam;
            std::string why;
            for (size_t l = 0; l < s && why.empty(); ++l) {
                Cone gc = Cone::from_inequalities(k, h[l]);
                if (!gc.pointed() || gc.dim() != k || gc.facets().size() != ff.size())
                    why = "Gamma facets degenerate";
                else if (!all_interior(cmu, gc.rays()))
                    why = "Gamma not inside int Phi(M)";
                gam.push_back(gc);
            }
            for (size_t l = 0; l + 1 < s && why.empty(); ++l)
                for (auto& ray : gam[l].rays())
                    for (auto& hh : h[l + 1])
                        if (dot(hh, ray) <= 0) why = "Gamma levels not nested";
            IVec te(k, Int(0));
            te[0] = 1;
            if (why.empty()) {
                QMat wpu, wu;
                for (auto& x : wpy) wpu.push_back(uc(x));
                for (auto& x : wy) wu.push_back(uc(x));
                IMat pr = gam[0].rays();
                pr.push_back(te);
                Cone p1 = Cone::from_generators(k, pr);
                for (auto& x : wpu)
                    if (!gam[0].contains(x)) why = "W' not inside Gamma_1";
                for (auto& x : wu)
                    if (!p1.contains(x)) why = "W not inside Phi(N_1)";
                if (!cnu.in_interior(te)) why = "pole not interior";
            }
            for (size_t l = 0; l + 1 < s && why.empty(); ++l)
                for (auto& hh : h[l + 1])
                    if (!shift_condition(gam[l], hh, why)) break;
            if (!why.empty()) {
                last = why;
                continue;
            }

            // Integer model: the stage lattice scaled by D = c_1...c_stage.
            Int dd = c.product(stage);
            IMat lat(k);
            for (size_t i = 0; i < k; ++i) lat[i] = to_int(row_times(scale(bk[i], Rat(dd)), bn, r));
            QMat latq = to_q(lat);
            Lattice gl(r, lat);
            ApproxB out;
            out.stage = stage;
            IVec t = lat[0];
            for (size_t l = 0; l < s; ++l) {
                QMat g;
                IMat gens;
                for (auto& ray : gam[l].rays()) {
                    IVec x = primitive(row_times(to_q(ray), latq, r));
                    g.push_back(to_q(x));
                    gens.push_back(x);
                }
                gens.push_back(t);
                out.triples.push_back({t, g, AffineMonoid::normal(Cone::from_generators(r, gens), gl), dd});
            }
            Report& rep = out.report;
            DilationStage st(n, c, stage);
            for (size_t l = 0; l < s; ++l) {
                std::string tag = "N_" + std::to_string(l + 1);
                Report pr = verify_polarized(out.triples[l]);
                rep.add(tag + " polarized", pr.ok(), tag + ": " + pr.failure());
                bool inside = true;
                for (auto& g : out.triples[l].n.generators())
                    if (!st.in_interior(scale(to_q(g), Rat(1) / Rat(dd)))) inside = false;
                rep.add(tag + " inside N^c_* at stage " + std::to_string(stage), inside, tag + " leaves N^c_*");
                rep.add("Gamma_" + std::to_string(l + 1) + " inside int Phi(M)", all_interior(m.cone(), out.triples[l].gamma),
                        "Gamma leaves int Phi(M)");
            }
            for (size_t l = 0; l + 1 < s; ++l) {
                std::string tag = std::to_string(l + 1) + "," + std::to_string(l + 2);
                bool nest = true;
                for (auto& g : out.triples[l].n.generators())
                    if (!out.triples[l + 1].n.contains(g)) nest = false;
                Cone next = Cone::from_generators(r, int_rays(out.triples[l + 1].gamma));
                rep.add("nesting (a) " + tag, nest && all_interior(next, out.triples[l].gamma), "nesting fails at " + tag);
                bool shift = true;
                std::string why2;
                for (auto& hh : h[l + 1])
                    if (!shift_condition(gam[l], hh, why2)) shift = false;
                rep.add("shift condition (b) " + tag, shift, why2);
            }
            Cone g1 = Cone::from_generators(r, int_rays(out.triples[0].gamma));
            bool wpin = true, win = true;
            for (auto& x : wprime)
                if (!g1.contains(x)) wpin = false;
            for (auto& x : w)
                if (!out.triples[0].n.cone().contains(x)) win = false;
            rep.add("W' inside Gamma_1", wpin, "W' not inside Gamma_1");
            rep.add("W inside Phi(N_1)", win, "W not inside Phi(N_1)");
            bool group = true;
            Int ratio = dd / dj;
            for (auto& b : gp.basis())
                if (!out.triples[0].n.gp().contains(scale(b, ratio))) group = false;
            rep.add("gp(N)/D_j inside gp(N_1)", group, "gp(N)/D_j not inside gp(N_1)");
            if (rep.ok()) return out;
            last = rep.failure();
        }
    }
    throw Error("approximation failed: " + last);
}

QVec omega_point(const QVec& l, const QMat& base, const QVec& t) {
    size_t r = l.size();
    QMat ns = nullspace(base, r);
    if (ns.size() != 1) throw Error("base rays do not span a hyperplane");
    Rat nl = dot(ns[0], l);
    if (nl == 0) throw Error("ray l lies in the base hyperplane");
    return scale(l, -dot(ns[0], t) / nl);
}

BipyramidalApprox bipyramidal_approx(const AffineMonoid& n, const Cone& cp, const Cone& cdp, const QVec& t,
                                     const QMat& gamma, const QMat& l_points, const CSeq& c, size_t cap_stage) {
    size_t r = n.ambient();
    const Cone& cn = n.cone();
    IMat all = cp.rays();
    all.insert(all.end(), cdp.rays().begin(), cdp.rays().end());
    if (!(Cone::from_generators(r, all) == cn) || !cn.contains(cp) || !cn.contains(cdp))
        throw Error("C' and C'' do not cover C(N)");
    IVec g;
    for (auto& f : cp.facets())
        if (std::find(cdp.facets().begin(), cdp.facets().end(), neg(f)) != cdp.facets().end()) g = f;
    if (g.empty()) throw Error("C' and C'' do not share a facet");
    IMat base, lp, ldp;
    for (auto& ray : cp.rays()) (dot(g, ray) == 0 ? base : lp).push_back(ray);
    for (auto& ray : cdp.rays())
        if (dot(g, ray) != 0) ldp.push_back(ray);
    if (lp.size() != 1 || ldp.size() != 1) throw Error("not a pyramidal split");
    if (!cdp.contains(t) || cp.contains(t)) throw Error("t must lie in C'' \\ C'");
    if (!all_interior(cp, gamma)) throw Error("Gamma not inside int C'");
    if (!all_interior(cn, l_points)) throw Error("L not inside int C(N)");

    IVec xi = cn.grading();
    QMat ph;
    for (auto& ray : cp.rays()) ph.push_back(normalized(to_q(ray), xi));
    QVec wh = centroid_of(ph);
    const Lattice& gp = n.gp();
    QMat bn = to_q(gp.basis());
    size_t k = gp.rank();
    std::string last = "no candidate passed the ideal checks";
    for (size_t e = 1; e <= 64; ++e) {
        Rat eps(Int(1), Int(1) << e);
        auto shrink = [&](const IVec& x) { return add(scale(normalized(to_q(x), xi), 1 - eps), scale(wh, eps)); };
        QMat fa;
        for (auto& b : base) fa.push_back(shrink(b));
        QVec le = shrink(lp[0]);
        QMat c1 = fa;
        c1.push_back(le);
        Cone ca = Cone::from_generators(r, c1);
        IVec ga;
        size_t beyond = 0;
        for (auto& f : ca.facets()) {
            bool on = true;
            for (auto& x : fa)
                if (dot(f, x) != 0) on = false;
            if (on) ga = f;
            if (dot(f, t) < 0) ++beyond;
            else if (dot(f, t) == 0) beyond = 99;
        }
        if (ga.empty() || beyond != 1 || dot(ga, t) >= 0 || !all_interior(ca, gamma)) continue;
        Rat gt = dot(ga, t);
        QVec omega0 = scale(le, -gt / dot(ga, le));
        IVec mv(k);
        for (size_t i = 0; i < k; ++i) mv[i] = dot(ga, gp.basis()[i]);
        Int gm = gcd_all(mv);
        IMat ker = integer_nullspace(IMat{mv}, k);
        for (size_t stage = 0; stage <= cap_stage; ++stage) {
            Int dd = c.product(stage);
            Rat rhs = -gt * Rat(dd);
            if (rhs.get_den() != 1 || rhs.get_num() % gm != 0) continue;
            IVec y = scale(bezout(mv), rhs.get_num() / gm);
            QVec ystar = scale(*gp.coords(omega0), Rat(dd));
            if (!ker.empty()) {
                auto co = solve_left(to_q(ker), sub(ystar, to_q(y)), k);
                if (!co) continue;
                for (size_t i = 0; i < ker.size(); ++i) y = add(y, scale(ker[i], round_rat((*co)[i])));
            }
            QVec omega = scale(row_times(to_q(y), bn, r), Rat(1) / Rat(dd));
            BipyramidalApprox out;
            out.shared = fa;
            out.c1 = fa;
            out.c1.push_back(omega);
            out.c2 = fa;
            out.c2.push_back(t);
            out.omega = omega;
            out.stage = stage;
            Report& rep = out.report;
            QMat call = out.c1;
            call.push_back(t);
            Cone cc = Cone::from_generators(r, call);
            Cone c1c = Cone::from_generators(r, out.c1), c2c = Cone::from_generators(r, out.c2);
            Cone sc = Cone::from_generators(r, fa);
            rep.add("C minus origin inside int C(N)", all_interior(cn, call), "C leaves int C(N)");
            rep.add("Gamma inside int C1", all_interior(c1c, gamma), "Gamma not inside int C1");
            rep.add("C1 minus origin inside int C'", all_interior(cp, out.c1), "C1 leaves int C'");
            bool lin = true;
            for (auto& x : l_points)
                if (!cc.contains(x)) lin = false;
            rep.add("L inside C", lin, "L not inside C");
            IMat ineq = c1c.facets();
            ineq.insert(ineq.end(), c2c.facets().begin(), c2c.facets().end());
            IMat eqs = c1c.equations();
            eqs.insert(eqs.end(), c2c.equations().begin(), c2c.equations().end());
            Cone meet = Cone::from_inequalities(r, ineq, eqs);
            IMat tm = meet.rays();
            tm.push_back(primitive(t));
            rep.add("C2 = R_+ t + (C1 meet C2)", meet == sc && Cone::from_generators(r, tm) == c2c,
                    "C2 is not the pyramid over C1 meet C2");
            size_t vis = 0;
            for (auto& f : c1c.facets())
                if (dot(f, t) < 0) ++vis;
            rep.add("C = C1 union C2", vis == 1, "t sees more than one facet of C1");
            QVec ot = add(omega, t);
            rep.add("segment pierces C1 meet C2", sc.in_interior(ot), "omega + t not in the relative interior of C1 meet C2");
            rep.add("omega on l meet (-t + C1 meet C2)", dot(ga, ot) == 0, "omega misses the shifted facet");
            rep.add("omega in stage " + std::to_string(stage), gp.contains(scale(omega, Rat(dd))), "omega not in the stage");
            if (rep.ok()) return out;
            last = rep.failure();
        }
    }
    throw Error("approximation depth exceeded: " + last);
}

}  // namespace torkit
