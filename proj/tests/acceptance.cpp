// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include "laurent_fixtures.hpp"
#include "oracles.hpp"
#include "torkit/dilation.hpp"
#include "torkit/pclass.hpp"
#include "torkit/pyramidal.hpp"
#include "witt_fixtures.hpp"

using namespace torkit;
using namespace th;
using oracle::LMat;
using oracle::LVec;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Keeps the first failure only.
struct Check {
    std::string failure;
    bool operator()(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
        return ok;
    }
    bool ok() const { return failure.empty(); }
};

std::string str(const IMat& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + torkit::str(m[i]);
    return s + "]";
}

LVec ll(const IVec& v) {
    LVec out;
    for (auto& x : v) out.push_back(x.get_si());
    return out;
}

LVec times(long long k, const LVec& x) {
    LVec y = x;
    for (auto& c : y) c *= k;
    return y;
}

AffineMonoid random_monoid(std::mt19937& rng, size_t r, int maxc, int ngens) {
    std::uniform_int_distribution<int> d(0, maxc);
    for (;;) {
        IMat g;
        for (int k = 0; k < ngens; ++k) {
            IVec v(r);
            for (auto& x : v) x = d(rng);
            g.push_back(v);
        }
        AffineMonoid m(r, g);
        if (m.rank() >= 1 && m.has_trivial_units()) return m;
    }
}

// Membership in the monoid generated by gens, memoized across queries.
struct MonoidOracle {
    LMat gens;
    int r;
    oracle::SmallCone cone;
    std::map<LVec, bool> memo;

    MonoidOracle(const IMat& g, int r_) : r(r_) {
        for (auto& v : oracle::to_ll(g))
            if (!oracle::is_zero(v)) gens.push_back(v);
        cone = oracle::small_cone(gens, r);
    }
    bool contains(const LVec& y) {
        if (oracle::is_zero(y)) return true;
        if (!cone.contains(y)) return false;
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (auto& g : gens) {
            LVec z(r);
            for (int i = 0; i < r; ++i) z[i] = y[i] - g[i];
            if (contains(z)) {
                ok = true;
                break;
            }
        }
        return memo[y] = ok;
    }
    bool relint(const LVec& y) const {
        if (oracle::is_zero(y) || !cone.contains(y)) return false;
        if (cone.dim == 1) return true;
        for (auto& f : cone.facets)
            if (oracle::dotl(f, y) <= 0) return false;
        return true;
    }
    bool in_interior_part(const LVec& y) { return oracle::is_zero(y) || (relint(y) && contains(y)); }
};

// ---------------------------------------------------------------------------

void hilbert_oracle(Check& c) {
    auto start = Clock::now();
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> d(-6, 6), ng(2, 5);
    int done = 0;
    while (done < 200) {
        size_t r = 1 + done % 3;
        IMat g;
        for (int k = ng(rng); k > 0; --k) {
            IVec v(r);
            for (auto& x : v) x = d(rng);
            g.push_back(v);
        }
        Cone cone = Cone::from_generators(r, g);
        if (!cone.pointed()) continue;
        auto hb = hilbert_basis(cone, Lattice::full(r));
        if (!c(oracle::to_ll(hb) == oracle::hilbert_bruteforce(oracle::to_ll(g), int(r)), "cone " + str(g))) return;
        ++done;
    }
    c(since(start) < 60.0, "took " + std::to_string(since(start)) + " s");
}

std::string bits(std::initializer_list<bool> bs) {
    std::string s;
    for (bool b : bs) s += b ? '1' : '0';
    return s;
}

// On a box window, membership in sn(M_*), sn(M)_*, n(M_*), n(M)_* from the
// oracle agrees with the library's n(M)_* and sn(M)_*, and so do the
// irreducibles. {k : kx ∈ M} is a submonoid of Z_+, so kx ∈ M for all large k
// iff the gcd of its elements is 1; the oracle takes the gcd over k < L.
// Normalization stays inside gp(M), found by a bounded search.
void interior_identity(Check& c) {
    std::mt19937 rng(202);
    const long long L = 64, box = 5;
    int holes = 0;  // interior points of n(M) missing from M, so the check has teeth
    for (int trial = 0; trial < 50; ++trial) {
        size_t r = 1 + trial % 3;
        AffineMonoid m = random_monoid(rng, r, 3, 2 + trial % 3);
        MonoidOracle o(m.generators(), int(r));
        std::string tag = "monoid " + str(m.generators());
        std::optional<InteriorMonoid> n_star, sn_star;
        try {
            n_star.emplace(normalization(m));
            sn_star.emplace(seminormalization(m).result);
        } catch (const std::exception& e) {
            c(false, tag + ": " + e.what());
            return;
        }

        // gp(M) ∩ [-G, G]^r by search from 0 along ± generators
        const long long G = 24;
        std::set<LVec> group{LVec(r, 0)};
        std::vector<LVec> todo{LVec(r, 0)};
        while (!todo.empty()) {
            LVec p = todo.back();
            todo.pop_back();
            for (auto& gen : o.gens)
                for (int sgn : {1, -1}) {
                    LVec q = p;
                    bool inside = true;
                    for (size_t i = 0; i < r; ++i) {
                        q[i] += sgn * gen[i];
                        inside = inside && std::llabs(q[i]) <= G;
                    }
                    if (inside && group.insert(q).second) todo.push_back(q);
                }
        }

        std::set<LVec> s;
        Int bound = 0;
        LVec x(r);
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i < r) {
                for (x[i] = 0; x[i] <= box; ++x[i]) rec(i + 1);
                return;
            }
            if (!o.cone.contains(x)) return;
            IVec xi = oracle::to_iv(x);
            bool zero = oracle::is_zero(x), inner = o.relint(x);
            // Off gp(M) nothing can hold: x = (k+1)x - kx once two consecutive
            // multiples lie in M. Boundary points never meet M_*.
            bool in_gp = zero || group.count(x);
            long long g = 0, g_star = 0;
            for (long long k = 1; k < L && in_gp && inner && (g != 1 || g_star != 1); ++k) {
                LVec kx = times(k, x);
                if (o.contains(kx)) g = std::gcd(g, k);
                if (o.in_interior_part(kx)) g_star = std::gcd(g_star, k);
            }
            bool some = in_gp && g > 0, tail = g == 1;
            bool some_star = in_gp && g_star > 0, tail_star = g_star == 1;
            bool o_n_of_star = zero || some_star;
            bool o_sn_of_star = zero || tail_star;
            bool o_star_of_n = zero || (inner && some);
            bool o_star_of_sn = zero || (inner && tail);
            bool lib_n = n_star->contains(xi), lib_sn = sn_star->contains(xi);
            bool lib_pointwise = zero || (inner && in_seminormalization(m, xi));
            bool all = o_n_of_star;
            if (!c(o_sn_of_star == all && o_star_of_n == all && o_star_of_sn == all && lib_n == all && lib_sn == all &&
                       lib_pointwise == all,
                   tag + " disagrees at " + torkit::str(xi) + ": " + bits({o_n_of_star, o_sn_of_star, o_star_of_n,
                                                                           o_star_of_sn, lib_n, lib_sn, lib_pointwise})))
                return;
            if (all) s.insert(x);
            if (all && !zero && !o.contains(x)) ++holes;
            bound = std::max(bound, normalization(m).degree(xi));
        };
        rec(0);
        if (!c.ok()) return;

        std::set<LVec> irr;
        for (auto& p : s) {
            if (oracle::is_zero(p)) continue;
            bool red = false;
            for (auto& q : s) {
                if (oracle::is_zero(q) || q == p) continue;
                LVec diff(r);
                for (size_t i = 0; i < r; ++i) diff[i] = p[i] - q[i];
                if (s.count(diff)) red = true;
            }
            if (!red) irr.insert(p);
        }
        for (auto* lib : {&*n_star, &*sn_star}) {
            std::set<LVec> got;
            for (auto& g : lib->irreducibles(bound)) {
                LVec p = ll(g);
                bool inside = true;
                for (auto v : p) inside = inside && v <= box;
                if (inside) got.insert(p);
            }
            if (!c(got == irr, tag + ": irreducibles differ")) return;
        }
    }
    c(holes >= 10, "only " + std::to_string(holes) + " interior holes seen");
}

// Numerical semigroup membership on [0, limit].
std::vector<bool> numerical(const std::vector<int>& gens, int limit) {
    std::vector<bool> in(limit + 1, false);
    in[0] = true;
    for (int x = 1; x <= limit; ++x)
        for (int g : gens)
            if (x >= g && in[x - g]) in[x] = true;
    return in;
}

// Steps of x ↦ {x : 2x, 3x ∈ M} on a numerical semigroup until nothing is added.
std::vector<IMat> sn_steps_oracle(std::vector<int> gens) {
    const int limit = 200;
    std::vector<IMat> steps;
    for (;;) {
        auto in = numerical(gens, limit);
        IMat added;
        for (int x = 1; 3 * x <= limit; ++x)
            if (!in[x] && in[2 * x] && in[3 * x]) added.push_back(IVec{Int(x)});
        if (added.empty()) return steps;
        steps.push_back(added);
        for (auto& a : added) gens.push_back(a[0].get_si());
    }
}

void seminormal_anchors(Check& c) {
    for (auto gens : {std::vector<int>{2, 3}, std::vector<int>{3, 4, 5}}) {
        IMat g;
        for (int x : gens) g.push_back(IVec{Int(x)});
        AffineMonoid m(1, g);
        auto s = seminormalization(m);
        auto want = sn_steps_oracle(gens);
        std::string tag = str(g);
        c(s.result.generators() == th::im({{1}}), tag + ": closure is not Z_+");
        c(s.steps == want, tag + ": steps differ from the oracle");
        c(!is_seminormal(m), tag + " reported seminormal");
    }
    c(sn_steps_oracle({3, 4, 5}).size() == 2, "<3,4,5> oracle needs two steps");

    IMat pg = th::im({{2, 0}, {0, 1}, {1, 1}});
    AffineMonoid parity(2, pg);
    MonoidOracle o(pg, 2);
    c(is_seminormal(parity), "parity monoid not seminormal");
    c(!parity.is_normal(), "parity monoid reported normal");
    // (1,0) = (1,1) - (0,1) lies in gp and in the cone but not in M
    c(!o.contains({1, 0}) && o.cone.contains({1, 0}), "oracle: (1,0) should be a hole");
    // gp is Z^2, so seminormality is 2x, 3x ∈ M ⇒ x ∈ M
    for (long long a = 0; a <= 12; ++a)
        for (long long b = 0; b <= 12; ++b) {
            LVec x{a, b};
            if (o.contains(times(2, x)) && o.contains(times(3, x)))
                c(o.contains(x), "oracle: parity monoid not seminormal at " + std::to_string(a) + "," + std::to_string(b));
        }
}

// A functional in [-8, 8]^k positive on every nonzero generator certifies U(N) = 0.
bool pointed_oracle(const LMat& gens, size_t k) {
    LVec f(k);
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == k) {
            for (auto& g : gens)
                if (!oracle::is_zero(g) && oracle::dotl(f, g) <= 0) return false;
            return true;
        }
        for (f[i] = -8; f[i] <= 8; ++f[i])
            if (rec(i + 1)) return true;
        return false;
    };
    return rec(0);
}

void extremal_inversion(Check& c) {
    std::mt19937 rng(404);
    int cases = 0;
    while (cases < 100) {
        size_t r = 2 + cases % 2;
        AffineMonoid m = normalization(random_monoid(rng, r, 3, 3));
        int rank = oracle::rank_ll(oracle::to_ll(m.generators()));
        for (auto& ray : m.cone().rays()) {
            if (cases == 100) break;
            auto coords = *m.gp().coords(to_q(ray));
            IVec t = m.gp().from_coords(primitive(coords));
            auto inv = invert_extremal(m, t);
            LMat ng = oracle::to_ll(inv.n.generators());
            std::string tag = str(m.generators()) + " at " + torkit::str(t);
            if (!c(oracle::rank_ll(ng) == rank - 1 && int(inv.n.rank()) == rank - 1, tag + ": rank")) return;
            if (!c(inv.n.has_trivial_units() && pointed_oracle(ng, inv.n.ambient()), tag + ": units")) return;
            ++cases;
        }
    }
}

PolarizedMonoid quadrant_instance() {
    return {th::iv({0, 1}), {qv({"1", "0"}), qv({"1", "1"})}, AffineMonoid(2, th::im({{1, 0}, {0, 1}}))};
}

PolarizedMonoid orthant_instance() {
    return {th::iv({0, 0, 1}), {qv({"1", "0", "0"}), qv({"0", "1", "0"}), qv({"1", "1", "1"})},
            AffineMonoid(3, th::im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))};
}

LMat rays_ll(const QMat& q) {
    LMat out;
    for (auto& p : q) out.push_back(ll(primitive(p)));
    return out;
}

// Hilbert basis of cone(t, F) is {t} plus that of cone(F), by brute force.
bool splits_bruteforce(const IVec& t, const LMat& frays, int r) {
    LMat with_t = frays;
    with_t.push_back(ll(t));
    LMat lhs = oracle::hilbert_bruteforce(with_t, r);
    LMat rhs = oracle::hilbert_bruteforce(frays, r);
    rhs.push_back(ll(t));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

// ξ ≥ 0 on Γ iff ξ lies in C(N)^∨ ∪ C(N^-)^∨, over a box of functionals.
bool fan_oracle(const PolarizedMonoid& p, const SchemeFan& f) {
    size_t r = p.n.ambient();
    LMat gr = rays_ll(p.gamma);
    LVec xi(r);
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == r) {
            bool on_gamma = true;
            for (auto& g : gr) on_gamma = on_gamma && oracle::dotl(xi, g) >= 0;
            IVec x = oracle::to_iv(xi);
            return on_gamma == (f.plus.contains(x) || f.minus.contains(x));
        }
        for (xi[i] = -3; xi[i] <= 3; ++xi[i])
            if (!rec(i + 1)) return false;
        return true;
    };
    return rec(0);
}

void polarized_suite(Check& c) {
    auto q = quadrant_instance(), o = orthant_instance();
    c(verify_polarized(q).ok(), "quadrant: " + verify_polarized(q).failure());
    c(verify_polarized(o).ok(), "orthant: " + verify_polarized(o).failure());
    for (auto& f : {LMat{{1, 0}}, LMat{{1, 1}}}) c(splits_bruteforce(q.t, f, 2), "quadrant facet does not split");
    for (auto& f : {LMat{{1, 0, 0}, {0, 1, 0}}, LMat{{1, 0, 0}, {1, 1, 1}}, LMat{{0, 1, 0}, {1, 1, 1}}})
        c(splits_bruteforce(o.t, f, 3), "orthant facet does not split");

    Report bad = verify_polarized(th::iv({0, 1}), {qv({"1", "0"}), qv({"2", "1"})}, AffineMonoid(2, th::im({{1, 0}, {0, 1}})));
    c(!bad.ok(), "(2,1) instance passes");
    c(bad.failure().find("(2,1)") != std::string::npos, "failure does not name (2,1): " + bad.failure());
    c(!splits_bruteforce(th::iv({0, 1}), {{2, 1}}, 2), "oracle: (2,1) facet splits");

    for (auto& p : {q, o}) {
        PolarizedMonoid a = antipode(p), b = antipode(a);
        c(verify_polarized(a).ok(), "antipode not polarized: " + verify_polarized(a).failure());
        c(b.t == p.t && b.gamma == p.gamma && b.n == p.n, "antipode is not an involution");
        for (auto& x : {p, a}) {
            SchemeFan f = scheme_fan(x);
            c(f.report.ok(), "scheme fan: " + f.report.failure());
            c(fan_oracle(x, f), "scheme fan duals do not cover the dual of Γ");
        }
    }
}

void approx_b(Check& c) {
    auto start = Clock::now();
    AffineMonoid tri(3, th::im({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    AffineMonoid sq(3, th::im({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    PyramidalExtension ext = *is_pyramidal_extension(tri, sq).extension;
    QMat w{qv({"1/2", "1/2", "1"}), qv({"2/3", "2/3", "1"})};
    QMat wp{qv({"1/4", "1/4", "1"})};
    ApproxB b = approxB_construct(ext, CSeq({}, 2), 2, 1, w, wp);
    double secs = since(start);
    if (!c(b.report.ok(), "report: " + b.report.failure())) return;
    if (!c(b.triples.size() == 2, "expected two triples")) return;
    for (auto& p : b.triples) c(verify_polarized(p).ok(), "triple not polarized");
    const PolarizedMonoid& p1 = b.triples[0];
    const PolarizedMonoid& p2 = b.triples[1];
    // nesting: N_1 ⊆ N_2 and Γ_1 inside int cone(Γ_2)
    for (auto& g : p1.n.generators()) c(p2.n.contains(g), "N_1 generator outside N_2: " + torkit::str(g));
    oracle::SmallCone g2o = oracle::small_cone(rays_ll(p2.gamma), 3);
    for (auto& g : rays_ll(p1.gamma)) {
        bool inner = g2o.contains(g);
        for (auto& f : g2o.facets) inner = inner && oracle::dotl(f, g) > 0;
        c(inner, "Γ_1 not interior to cone(Γ_2)");
    }
    // shift: h ± t ∈ int C(Γ_2) ∩ gp(N_2) on the generators of N_1 in cone(Γ_1) and their pairwise sums
    Cone g1 = Cone::from_generators(3, p1.gamma), g2 = Cone::from_generators(3, p2.gamma);
    IMat base;
    for (auto& g : p1.n.generators())
        if (g1.contains(g)) base.push_back(g);
    IMat sample = base;
    for (auto& x : base)
        for (auto& y : base) sample.push_back(add(x, y));
    c(!sample.empty(), "no shift sample");
    for (auto& h : sample)
        for (int sgn : {1, -1}) {
            IVec x = add(h, scale(p1.t, Int(sgn)));
            c(g2.in_interior(x) && p2.n.gp().contains(x), "shift fails at " + torkit::str(x));
        }
    c(secs < 120.0, "took " + std::to_string(secs) + " s");
}

void birkhoff(Check& c) {
    auto b = birkhoff_factorize(LaurentMatrix::diag_t({2, -1}));
    c(b.u == std::vector<Exp>{2, -1}, "diag(t^2, t^-1)");
    LaurentMatrix theta = lm({{T, ONE}, {ZERO, TI}});
    c(birkhoff_factorize(theta).u == std::vector<Exp>{0, 0} && type_oracle(theta) == std::vector<Exp>{0, 0},
      "[[t,1],[0,t^-1]]");

    std::mt19937 rng(707);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 1 + trial % 4;
        LaurentMatrix m = random_invertible(rng, n, 4);
        auto f = birkhoff_factorize(m);
        std::string tag = str(m);
        c(f.sigma.in_tinv() && f.tau.in_t(), tag + ": factor rings");
        c(f.sigma * m * f.tau == LaurentMatrix::diag_t(f.u), tag + ": not diagonal");
        c(std::accumulate(f.u.begin(), f.u.end(), Exp(0)) == m.det().degree(), tag + ": sum u != deg det");
        if (trial < 25) c(type_oracle(m) == f.u, tag + ": type differs from the section oracle");
        for (int k = 0; k < 100; ++k) {
            LaurentMatrix left = random_unimodular(rng, n, false), right = random_unimodular(rng, n, true);
            if (!c(birkhoff_factorize(left * m * right).u == f.u, tag + ": type changed under perturbation")) return;
        }
        if (!c.ok()) return;
    }
}

WittVector from_coeffs(size_t m, std::map<size_t, Rat> terms) {
    QVec a(m);
    for (auto& [n, x] : terms)
        if (n <= m) a[n - 1] = x;
    return WittVector(m, a);
}

void witt(Check& c) {
    std::mt19937 rng(808);
    const size_t m = 12;
    for (int i = 0; i < 50; ++i) {
        auto f = random_witt(rng, m), g = random_witt(rng, m);
        QVec gf = ghost_oracle(f), gg = ghost_oracle(g);
        c(ghost(f) == gf, "ghost differs from -T f'/f");
        c(from_ghost(gf) == f, "ghost is not invertible");
        QVec sum = ghost_oracle(witt_add(f, g)), prod = ghost_oracle(witt_star(f, g));
        for (size_t n = 0; n < m; ++n) {
            c(sum[n] == gf[n] + gg[n], "ghost not additive");
            c(prod[n] == gf[n] * gg[n], "ghost not multiplicative");
        }
    }
    for (long r = -3; r <= 3; ++r)
        for (long s = -3; s <= 3; ++s) {
            Rat rs(r * s);
            auto lin = witt_star(from_coeffs(m, {{1, Rat(-r)}}), from_coeffs(m, {{1, Rat(-s)}}));
            c(lin == from_coeffs(m, {{1, -rs}}), "(1-rT)*(1-sT) at r=" + std::to_string(r) + " s=" + std::to_string(s));
            auto quad = witt_star(from_coeffs(m, {{2, Rat(-r)}}), from_coeffs(m, {{2, Rat(-s)}}));
            c(quad == from_coeffs(m, {{2, -2 * rs}, {4, rs * rs}}),
              "(1-rT^2)*(1-sT^2) at r=" + std::to_string(r) + " s=" + std::to_string(s));
        }
    auto p = witt_star(from_coeffs(m, {{4, -1}}), from_coeffs(m, {{6, -1}}));
    c(filtration_degree(p) == 12, "filtration degree of (1-T^4)*(1-T^6) is " + std::to_string(filtration_degree(p)));
    c(p == from_coeffs(m, {{12, -2}}), "(1-T^4)*(1-T^6) != 1-2T^12");
}

void lambda_rings(Check& c) {
    std::mt19937 rng(909);
    for (auto ring : {quadrant_lambda(false), quadrant_lambda(true), plane_tc()}) {
        bool prime = ring.variant == RingVariant::lambda_prime;
        for (int trial = 0; trial < 100; ++trial) {
            MonoMatrix a = random_member(rng, prime), b = random_member(rng, prime);
            c(lambda_membership(a, ring) && lambda_membership(b, ring), "sample not a member");
            c(lambda_membership(mono_mul(a, b), ring), std::string(to_string(ring.variant)) + ": product leaves the ring");
        }
    }
    auto ring = plane_tc();
    std::uniform_int_distribution<long> cd(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Int k = cd(rng);
        MonoMatrix a = random_member(rng, false), b = random_member(rng, false);
        auto ta = tilde_c_apply(a, k, ring), tb = tilde_c_apply(b, k, ring);
        c(tilde_c_apply(mono_add(a, b), k, ring) == mono_add(ta, tb), "c~ not additive");
        c(tilde_c_apply(mono_mul(a, b), k, ring) == mono_mul(ta, tb), "c~ not multiplicative");
        c(tilde_c_apply(mono_identity(2), k, ring) == mono_identity(2), "c~ not unital");
    }
    c(ring.omega && *ring.omega == th::iv({1, 0}), "omega != (1,0)");
    auto e = minimal_endo_exponent(ring, Cone::from_generators(2, th::im({{1, 0}, {0, 1}})));
    c(e.c0 == 2, "minimal exponent " + torkit::str(e.c0));
}

Polytope poly(std::initializer_list<std::initializer_list<long>> pts) {
    IMat m = th::im(pts);
    return Polytope::hull(m[0].size(), to_q(m));
}

void pclass(Check& c) {
    for (size_t d = 1; d <= 5; ++d) {
        QMat pts(1, QVec(d));
        for (size_t i = 0; i < d; ++i) {
            QVec e(d);
            e[i] = 1;
            pts.push_back(e);
        }
        c(classify_sigma(Polytope::hull(d, pts)).sigma == std::string(d - 1, '0'), "simplex " + std::to_string(d));
    }
    c(classify_sigma(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).sigma == std::string("1"), "square");
    c(classify_sigma(poly({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}})).sigma == std::string("01"),
      "square pyramid");
    Polytope oct = poly({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    c(classify_sigma(oct).sigma == std::string("11"), "octahedron");
    auto cube = classify_sigma(
        poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    c(!cube.sigma && !cube.reason.empty(), "cube accepted");

    for (size_t r = 1; r <= 5; ++r) {
        auto types = enumerate_types(r);
        std::set<std::string> seen;
        c(types.size() == size_t(1) << (r - 1), "count at r=" + std::to_string(r));
        for (auto& t : types) {
            c(t.polytope.dim() == int(r) && t.sigma.size() == r - 1, "witness shape " + t.sigma);
            c(classify_sigma(t.polytope).sigma == t.sigma, "witness " + t.sigma + " does not round-trip");
            c(classify_sigma(type_witness(t.sigma)).sigma == t.sigma, "type_witness " + t.sigma);
            seen.insert(t.sigma);
        }
        c(seen.size() == types.size(), "duplicate types");
    }

    IMat rays;
    for (auto& v : oct.vertices()) rays.push_back(homogenize(v));
    AffineMonoid n = AffineMonoid::normal(Cone::from_generators(4, rays), Lattice::full(4));
    for (auto& ray : n.cone().rays()) {
        auto corner = corner_cone(n, ray);
        c(classify_sigma(corner.figure).sigma == std::string("1"), "octahedron corner at " + torkit::str(ray));
        // a square has 4 vertices and 4 edges
        QMat verts = corner.figure.vertices();
        Int den = 1;
        for (auto& v : verts)
            for (auto& x : v) den = lcm(den, Int(x.get_den()));
        for (auto& v : verts) v = scale(v, Rat(den));
        auto counts = oracle::support_face_counts(oracle::to_ll_points(verts), int(corner.figure.ambient()));
        c(counts[0] == 4 && counts[1] == 4, "corner figure is not a quadrilateral");
    }
}

void excision(Check& c) {
    std::mt19937 rng(1111);
    std::uniform_int_distribution<int> d(0, 3);
    int checked = 0, tries = 0;
    while (checked < 100 && tries++ < 2000) {
        LMat lg;
        IMat g;
        for (int k = 0; k < 3; ++k) {
            LVec v{d(rng), 1 + d(rng)};
            lg.push_back(v);
            g.push_back(oracle::to_iv(v));
        }
        AffineMonoid m(2, g);
        if (m.rank() < 2) continue;
        MonoidOracle o(g, 2);
        CSeq cs({}, 2 + d(rng) % 2);
        size_t j = d(rng) % 2;
        long den = stage(m, cs, j).denominator().get_si();
        size_t want = 1 + d(rng);
        QMat a;
        for (int x = 0; x <= 8 && a.size() < want; ++x)
            for (int y = 0; y <= 8 && a.size() < want; ++y) {
                LVec p{x, y};
                if (o.relint(p) && o.contains(p)) a.push_back(QVec{Rat(x, den), Rat(y, den)});
            }
        for (auto& q : a) q[0].canonicalize(), q[1].canonicalize();
        if (a.empty()) continue;
        ExcisionWitness w = excision_witness(m, cs, a, j);
        long dw = stage(m, cs, w.stage).denominator().get_si();
        auto interior_at = [&](const QVec& q) {
            Rat x = q[0] * dw, y = q[1] * dw;
            if (x.get_den() != 1 || y.get_den() != 1) return false;
            LVec p{x.get_num().get_si(), y.get_num().get_si()};
            return o.relint(p) && o.contains(p);
        };
        std::string tag = str(g);
        c(w.stage >= j, tag + ": stage below j");
        c(interior_at(w.u) && interior_at(w.v), tag + ": u or v not interior");
        for (size_t i = 0; i < a.size(); ++i) {
            c(add(add(w.b[i], w.u), w.v) == a[i], tag + ": a_i != b_i + u + v");
            c(interior_at(w.b[i]), tag + ": b_i not interior");
        }
        if (!c.ok()) return;
        ++checked;
    }
    c(checked == 100, "only " + std::to_string(checked) + " batches");
}

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return q + "'";
}

std::pair<int, std::string> capture(const std::string& cmd) {
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    for (size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cli_determinism(Check& c) {
    std::string jobs = std::string(CLI_DATA) + "/jobs.json";
    auto batch = [&](int threads) {
        return capture(quote(TORKIT_BIN) + " batch --input " + quote(jobs) + " --threads " + std::to_string(threads) +
                       " 2>/dev/null");
    };
    auto a = batch(1), b = batch(1), e = batch(8);
    c(!a.second.empty() && a.second.find("\"reports\"") != std::string::npos, "no batch output");
    c(a == b, "two runs with one thread differ");
    c(a == e, "one thread and eight threads differ");
}

struct Criterion {
    int id;
    const char* name;
    void (*run)(Check&);
};

}  // namespace

int main() {
    const Criterion all[] = {
        {1, "Hilbert basis equals brute-force oracle on 200 cones", hilbert_oracle},
        {2, "interior identity sn(M_*) = sn(M)_* = n(M_*) = n(M)_* on 50 monoids", interior_identity},
        {3, "seminormalization anchors", seminormal_anchors},
        {4, "extremal inversion drops rank by one with trivial units (100 cases)", extremal_inversion},
        {5, "polarized suite, antipode and scheme fan", polarized_suite},
        {6, "approxB on triangle in square", approx_b},
        {7, "Birkhoff factorization and type invariance", birkhoff},
        {8, "Witt ghost isomorphism, closed forms and filtration", witt},
        {9, "Lambda ring closure, c~ endomorphism and minimal exponent", lambda_rings},
        {10, "pyramid/bipyramid classification", pclass},
        {11, "excision witness on 100 batches", excision},
        {12, "CLI batch output is deterministic", cli_determinism},
    };
    int failed = 0;
    for (auto& cr : all) {
        Check c;
        auto start = Clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c(false, std::string("exception: ") + e.what());
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.1f s", since(start));
        std::cout << "criterion " << cr.id << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << cr.name << " (" << secs
                  << ")";
        if (!c.ok()) std::cout << "\n    " << c.failure;
        std::cout << std::endl;
        failed += !c.ok();
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
