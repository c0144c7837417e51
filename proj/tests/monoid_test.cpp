#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "torkit/monoid.hpp"

using namespace torkit;

namespace {

IMat im(std::initializer_list<std::initializer_list<long>> rows) {
    IMat m;
    for (auto& r : rows) {
        IVec v;
        for (long x : r) v.push_back(Int(x));
        m.push_back(v);
    }
    return m;
}

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

// Membership in the monoid generated by gens, by dynamic programming over
// nonnegative integers up to limit (rank 1 only).
std::vector<bool> numerical_semigroup(const std::vector<int>& gens, int limit) {
    std::vector<bool> in(limit + 1, false);
    in[0] = true;
    for (int x = 1; x <= limit; ++x)
        for (int g : gens)
            if (x >= g && in[x - g]) in[x] = true;
    return in;
}

AffineMonoid random_monoid(std::mt19937& rng, size_t r, int maxc, int ngens) {
    std::uniform_int_distribution<int> d(0, maxc);
    while (true) {
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

}  // namespace

TEST(HilbertBasis, Examples) {
    EXPECT_EQ(hilbert_basis(Cone::from_generators(2, im({{1, 0}, {0, 1}})), Lattice::full(2)), im({{0, 1}, {1, 0}}));
    EXPECT_EQ(hilbert_basis(Cone::from_generators(2, im({{1, 0}, {1, 3}})), Lattice::full(2)),
              im({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    IMat segre = im({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    EXPECT_EQ(hilbert_basis(Cone::from_generators(3, segre), Lattice::full(3)),
              im({{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}));
    Cone half = Cone::from_generators(2, im({{1, 0}, {-1, 0}, {0, 1}}));
    EXPECT_THROW(hilbert_basis(half, Lattice::full(2)), Error);
    // sublattice: even-sum lattice in the quadrant
    Lattice even(2, im({{1, 1}, {2, 0}}));
    EXPECT_EQ(hilbert_basis(Cone::from_generators(2, im({{1, 0}, {0, 1}})), even), im({{0, 2}, {1, 1}, {2, 0}}));
}

TEST(HilbertBasis, ParallelepipedCountIsDeterminant) {
    IMat v = im({{1, 0, 0}, {1, 3, 0}, {2, 1, 5}});
    EXPECT_EQ(parallelepiped_points(v).size(), 15u);
}

TEST(HilbertBasis, RandomAgainstBruteForce) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> d(-6, 6);
    int done = 0;
    while (done < 60) {
        size_t r = 1 + done % 3;
        IMat g;
        for (int k = 0; k < 4; ++k) {
            IVec v(r);
            for (auto& x : v) x = d(rng);
            g.push_back(v);
        }
        Cone c = Cone::from_generators(r, g);
        if (!c.pointed()) continue;
        auto hb = hilbert_basis(c, Lattice::full(r));
        auto ref = oracle::hilbert_bruteforce(oracle::to_ll(g), static_cast<int>(r));
        EXPECT_EQ(oracle::to_ll(hb), ref) << "case " << done;
        ++done;
    }
}

TEST(AffineMonoid, NormalityExamples) {
    AffineMonoid m23(1, im({{2}, {3}}));
    EXPECT_FALSE(m23.is_normal());
    EXPECT_EQ(normalization(m23).generators(), im({{1}}));
    AffineMonoid ver(2, im({{2, 0}, {1, 1}, {0, 2}}));
    EXPECT_TRUE(ver.is_normal());
    EXPECT_EQ(ver.normal_hilbert_basis(), ver.generators());
    EXPECT_TRUE(AffineMonoid(2, im({{1, 0}, {0, 1}})).is_normal());
    EXPECT_EQ(normalization(normalization(m23)).generators(), normalization(m23).generators());
}

TEST(AffineMonoid, NumericalSemigroupMembershipMatchesDP) {
    std::vector<std::vector<int>> sets = {{2, 3}, {3, 4, 5}, {5, 7}, {4, 6, 9}, {6, 10, 15}};
    for (auto& s : sets) {
        IMat g;
        for (int x : s) g.push_back(iv({x}));
        AffineMonoid m(1, g);
        auto ref = numerical_semigroup(s, 80);
        for (int x = 0; x <= 80; ++x) EXPECT_EQ(m.contains(iv({x})), ref[x]) << x;
    }
}

TEST(AffineMonoid, SeminormalizationExamples) {
    auto s23 = seminormalization(AffineMonoid(1, im({{2}, {3}})));
    EXPECT_FALSE(is_seminormal(AffineMonoid(1, im({{2}, {3}}))));
    EXPECT_EQ(s23.result.generators(), im({{1}}));
    EXPECT_EQ(s23.steps.size(), 1u);
    auto s345 = seminormalization(AffineMonoid(1, im({{3}, {4}, {5}})));
    EXPECT_EQ(s345.result.generators(), im({{1}}));
    ASSERT_EQ(s345.steps.size(), 2u);
    EXPECT_EQ(s345.steps[0], im({{2}}));
    EXPECT_EQ(s345.steps[1], im({{1}}));
    AffineMonoid parity(2, im({{2, 0}, {0, 1}, {1, 1}}));
    EXPECT_TRUE(is_seminormal(parity));
    EXPECT_FALSE(parity.is_normal());
    EXPECT_FALSE(parity.contains(iv({1, 0})));
    EXPECT_TRUE(parity.contains(iv({1, 3})));
}

// Here (1,1,1) is only reached after multiples of higher degree are adjoined.
TEST(AffineMonoid, SeminormalizationThroughMultiples) {
    AffineMonoid m(3, im({{1, 3, 0}, {2, 1, 3}, {3, 0, 0}, {3, 1, 2}}));
    Seminormalization s = seminormalization(m);
    EXPECT_FALSE(m.contains(iv({1, 1, 1})));
    EXPECT_TRUE(s.result.contains(iv({1, 1, 1})));
    EXPECT_GT(s.steps.size(), 1u);
    // each step is one application of x ↦ {x : 2x, 3x ∈ current}
    IMat g = m.generators();
    for (auto& step : s.steps) {
        AffineMonoid cur(3, g);
        for (auto& x : step) {
            EXPECT_FALSE(cur.contains(x));
            EXPECT_TRUE(cur.contains(scale(x, 2)) && cur.contains(scale(x, 3))) << str(x);
        }
        g.insert(g.end(), step.begin(), step.end());
    }
}

TEST(AffineMonoid, ClosuresAreIdempotentExtensiveMonotone) {
    std::mt19937 rng(9);
    for (int it = 0; it < 15; ++it) {
        size_t r = 1 + it % 3;
        AffineMonoid m = random_monoid(rng, r, 4, 3);
        AffineMonoid n = normalization(m);
        AffineMonoid s = seminormalization(m).result;
        for (auto& g : m.generators()) {
            EXPECT_TRUE(n.contains(g));
            EXPECT_TRUE(s.contains(g));
        }
        for (auto& g : s.generators()) EXPECT_TRUE(n.contains(g));
        EXPECT_TRUE(is_seminormal(s));
        EXPECT_EQ(seminormalization(s).steps.size(), 0u);
        EXPECT_TRUE(normalization(n) == n);
        // monotone: adding a generator of n(M) keeps sn inside sn of the bigger monoid
        IMat bigger = m.generators();
        bigger.push_back(n.generators().front());
        AffineMonoid s2 = seminormalization(AffineMonoid(r, bigger)).result;
        for (auto& g : s.generators()) EXPECT_TRUE(s2.contains(g));
    }
}

TEST(AffineMonoid, InteriorExamples) {
    InteriorMonoid q(AffineMonoid(2, im({{1, 0}, {0, 1}})));
    EXPECT_TRUE(q.contains(iv({0, 0})));
    EXPECT_FALSE(q.contains(iv({2, 0})));
    EXPECT_EQ(q.irreducibles(3), im({{1, 1}, {1, 2}, {2, 1}}));
    InteriorMonoid z(AffineMonoid(1, im({{1}})));
    for (long x = 1; x < 10; ++x) EXPECT_TRUE(z.in_ideal(iv({x})));
    InteriorMonoid v(AffineMonoid(2, im({{2, 0}, {1, 1}, {0, 2}})));
    EXPECT_EQ(v.least_interior_element(), iv({1, 1}));
    EXPECT_FALSE(v.contains(iv({2, 1})));
    EXPECT_TRUE(v.contains(iv({3, 1})));
}

TEST(AffineMonoid, InteriorIsAnIdeal) {
    std::mt19937 rng(13);
    for (int it = 0; it < 10; ++it) {
        AffineMonoid m = random_monoid(rng, 2 + it % 2, 4, 3);
        InteriorMonoid in(m);
        auto pts = normal_points_up_to(normalization(m), 2 * m.degree(m.generators().back()));
        for (auto& a : pts) {
            if (!in.in_ideal(a)) continue;
            for (auto& g : m.generators()) EXPECT_TRUE(in.in_ideal(add(a, g)));
        }
    }
}

TEST(AffineMonoid, RegionExamples) {
    AffineMonoid q(2, im({{1, 0}, {0, 1}}));
    EXPECT_TRUE(region_submonoid(q, {QVec{1, 0}, QVec{0, 1}}) == q);
    EXPECT_EQ(region_submonoid(q, {QVec{Rat(1, 2), Rat(1, 2)}}).generators(), im({{1, 1}}));
    EXPECT_EQ(region_submonoid(q, {QVec{1, 0}, QVec{Rat(1, 2), Rat(1, 2)}}).generators(), im({{1, 0}, {1, 1}}));
    EXPECT_THROW(region_submonoid(q, {QVec{-1, 1}}), Error);
    // full-dimensional W keeps the group
    AffineMonoid v(2, im({{2, 0}, {1, 1}, {0, 2}}));
    auto mw = region_submonoid(v, {QVec{Rat(1, 4), Rat(3, 4)}, QVec{Rat(1, 2), Rat(1, 2)}});
    EXPECT_TRUE(mw.gp() == v.gp());
}

TEST(AffineMonoid, InvertExtremalExamples) {
    AffineMonoid q(2, im({{1, 0}, {0, 1}}));
    auto a = invert_extremal(q, iv({1, 0}));
    EXPECT_EQ(a.n.rank(), 1u);
    EXPECT_EQ(a.n.generators().size(), 1u);
    AffineMonoid segre(3, im({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    auto b = invert_extremal(segre, iv({0, 0, 1}));
    EXPECT_EQ(b.n.rank(), 2u);
    EXPECT_EQ(b.n.generators().size(), 2u);
    EXPECT_TRUE(b.n.has_trivial_units());
    AffineMonoid m4(2, im({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    auto c = invert_extremal(m4, iv({1, 0}));
    EXPECT_EQ(c.n.rank(), 1u);
    EXPECT_TRUE(c.n.has_trivial_units());
    EXPECT_THROW(invert_extremal(m4, iv({1, 1})), Error);
    EXPECT_THROW(invert_extremal(m4, iv({2, 0})), Error);
    EXPECT_THROW(invert_extremal(AffineMonoid(1, im({{2}, {3}})), iv({2})), Error);
}

TEST(AffineMonoid, InvertExtremalRecombines) {
    AffineMonoid segre(3, im({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    IVec t = iv({1, 1, 1});
    auto inv = invert_extremal(segre, t);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                IVec x = iv({a, b, c});
                bool lhs = in_localization(segre, t, x);
                bool rhs = inv.n.contains(inv.project(x));
                EXPECT_EQ(lhs, rhs) << str(x);
                // x = (coefficient of t) t + lift(project(x))
                IVec rest = sub(x, inv.lift_point(inv.project(x)));
                EXPECT_EQ(primitive(rest) == primitive(t) || primitive(rest) == primitive(neg(t)) || is_zero(rest), true);
            }
}

TEST(AffineMonoid, FreeBasisExamples) {
    AffineMonoid q(2, im({{1, 0}, {0, 1}}));
    auto fb = free_basis_in_region(q, {QVec{1, 0}, QVec{0, 1}});
    EXPECT_EQ(abs(det(fb.basis)), 1);
    auto small = free_basis_in_region(q, {QVec{Rat(9, 20), Rat(11, 20)}, QVec{Rat(11, 20), Rat(9, 20)}});
    EXPECT_EQ(small.basis[0], iv({1, 1}));
    EXPECT_EQ(abs(det(small.basis)), 1);
    Polytope w = Polytope::hull(2, {QVec{Rat(9, 20), Rat(11, 20)}, QVec{Rat(11, 20), Rat(9, 20)}});
    for (auto& s : small.simplex) EXPECT_TRUE(w.contains(s));
    AffineMonoid v(2, im({{2, 0}, {1, 1}, {0, 2}}));
    auto fv = free_basis_in_region(v, {QVec{1, 0}, QVec{0, 1}});
    IMat coords;
    for (auto& b : fv.basis) coords.push_back(*v.gp().int_coords(b));
    EXPECT_EQ(abs(det(coords)), 1);
    EXPECT_EQ(abs(det(fv.basis)), 2);
}

TEST(AffineMonoid, EmbedInFree) {
    auto e = embed_in_free(AffineMonoid(2, im({{1, 0}, {0, 1}})));
    EXPECT_EQ(e.image(iv({3, 4})), iv({3, 4}));
    EXPECT_EQ(e.degree(iv({3, 4})), 7);
    auto e23 = embed_in_free(AffineMonoid(1, im({{2}, {3}})));
    EXPECT_EQ(e23.image(iv({5})), iv({5}));
    AffineMonoid v(2, im({{2, 0}, {1, 1}, {0, 2}}));
    auto ev = embed_in_free(v);
    IMat imgs;
    for (auto& g : v.generators()) {
        IVec y = ev.image(g);
        for (auto& c : y) EXPECT_GE(c, 0);
        EXPECT_GT(ev.degree(g), 0);
        imgs.push_back(y);
    }
    // gp(M) maps onto Z^2
    EXPECT_TRUE(Lattice(2, imgs) == Lattice::full(2));
}

TEST(AffineMonoid, RandomStructuralProperties) {
    std::mt19937 rng(21);
    for (int it = 0; it < 25; ++it) {
        size_t r = 2 + it % 2;
        AffineMonoid m = normalization(random_monoid(rng, r, 3, 3));
        for (auto& t : m.cone().rays()) {
            IVec tt = t;
            // minimal generator on this ray inside gp
            auto c = *m.gp().coords(to_q(tt));
            tt = m.gp().from_coords(primitive(c));
            auto inv = invert_extremal(m, tt);
            EXPECT_EQ(inv.n.rank() + 1, m.rank());
            EXPECT_TRUE(inv.n.has_trivial_units());
        }
        QMat w = m.cross_section().vertices();
        auto fb = free_basis_in_region(m, w);
        IMat coords;
        for (auto& b : fb.basis) coords.push_back(*m.gp().int_coords(b));
        EXPECT_EQ(abs(det(coords)), 1);
        auto e = embed_in_free(m);
        for (auto& g : m.generators()) EXPECT_GT(e.degree(g), 0);
    }
}
