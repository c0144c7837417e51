#include "torkit/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "torkit/linalg.hpp"

namespace torkit {

LaurentPoly::LaurentPoly(const Rat& c, Exp e) {
    if (c != 0) terms_[e] = c;
}

Rat LaurentPoly::coef(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::set(Exp e, const Rat& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

Exp LaurentPoly::degree() const {
    if (terms_.empty()) throw Error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

Exp LaurentPoly::low() const {
    if (terms_.empty()) throw Error("low degree of the zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly LaurentPoly::shift(Exp e) const {
    LaurentPoly out;
    for (auto& [k, c] : terms_) out.terms_[k + e] = c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [k, c] : o.terms_) set(k, coef(k) + c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    std::map<Exp, Rat> acc;
    for (auto& [a, x] : terms_)
        for (auto& [b, y] : o.terms_) acc[a + b] += x * y;
    LaurentPoly out;
    for (auto& [k, c] : acc)
        if (c != 0) out.terms_[k] = c;
    return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial");
    if (a.is_zero()) return {};
    LaurentPoly rem = a.shift(-a.low());
    LaurentPoly div = b.shift(-b.low());
    Exp db = div.degree();
    Rat lead = div.coef(db);
    LaurentPoly q;
    while (!rem.is_zero() && rem.degree() >= db) {
        Exp e = rem.degree() - db;
        LaurentPoly step(rem.coef(rem.degree()) / lead, e);
        q += step;
        rem = rem - step * div;
    }
    if (!rem.is_zero()) throw Error("polynomial division is not exact");
    return q.shift(a.low() - b.low());
}

std::string str(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [e, c] = *it;
        Rat a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (e == 0) {
            s += str(a);
            continue;
        }
        if (a != 1) s += str(a) + "*";
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

LaurentMatrix::LaurentMatrix(size_t rows, size_t cols) : e_(rows, std::vector<LaurentPoly>(cols)) {}

LaurentMatrix::LaurentMatrix(std::vector<std::vector<LaurentPoly>> e) : e_(std::move(e)) {
    for (auto& row : e_)
        if (row.size() != e_[0].size()) throw InputError("ragged Laurent matrix");
}

LaurentMatrix LaurentMatrix::identity(size_t n) {
    LaurentMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
    return m;
}

LaurentMatrix LaurentMatrix::diag(const std::vector<LaurentPoly>& d) {
    LaurentMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

LaurentMatrix LaurentMatrix::diag_t(const std::vector<Exp>& u) {
    std::vector<LaurentPoly> d;
    for (Exp e : u) d.push_back(LaurentPoly::t(e));
    return diag(d);
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (cols() != o.rows()) throw InputError("Laurent matrix shapes do not match");
    LaurentMatrix out(rows(), o.cols());
    for (size_t i = 0; i < rows(); ++i)
        for (size_t k = 0; k < cols(); ++k) {
            if (e_[i][k].is_zero()) continue;
            for (size_t j = 0; j < o.cols(); ++j) out.e_[i][j] += e_[i][k] * o.e_[k][j];
        }
    return out;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
    if (rows() != o.rows() || cols() != o.cols()) throw InputError("Laurent matrix shapes do not match");
    LaurentMatrix out = *this;
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < cols(); ++j) out.e_[i][j] += o.e_[i][j];
    return out;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& p) const {
    LaurentMatrix out = *this;
    for (auto& row : out.e_)
        for (auto& x : row) x = x * p;
    return out;
}

// Fraction-free elimination with exact Laurent division.
LaurentPoly LaurentMatrix::det() const {
    size_t n = rows();
    if (cols() != n) throw InputError("determinant of a non-square matrix");
    if (n == 0) return LaurentPoly(1);
    auto m = e_;
    LaurentPoly prev(1);
    bool flip = false;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return {};
        if (p != k) {
            std::swap(m[p], m[k]);
            flip = !flip;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    return flip ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

bool LaurentMatrix::invertible() const {
    if (cols() != rows()) return false;
    return det().is_monomial();
}

LaurentMatrix LaurentMatrix::inverse() const {
    LaurentPoly d = det();
    if (!d.is_monomial()) throw Error("matrix is not invertible over Laurent polynomials");
    LaurentPoly dinv(1 / d.coef(d.low()), -d.low());
    size_t n = rows();
    LaurentMatrix out(n, n);
    if (n == 1) {
        out(0, 0) = dinv;
        return out;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            LaurentMatrix minor(n - 1, n - 1);
            for (size_t a = 0, ra = 0; a < n; ++a) {
                if (a == i) continue;
                for (size_t b = 0, cb = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor(ra, cb++) = e_[a][b];
                }
                ++ra;
            }
            LaurentPoly cof = minor.det() * dinv;
            out(j, i) = (i + j) % 2 ? -cof : cof;
        }
    return out;
}

bool LaurentMatrix::in_t() const {
    for (auto& row : e_)
        for (auto& x : row)
            if (!x.in_t()) return false;
    return true;
}

bool LaurentMatrix::in_tinv() const {
    for (auto& row : e_)
        for (auto& x : row)
            if (!x.in_tinv()) return false;
    return true;
}

bool LaurentMatrix::is_monomial_diagonal() const {
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < cols(); ++j) {
            auto& x = e_[i][j];
            if (i == j ? !(x.is_monomial() && x.coef(x.low()) == 1) : !x.is_zero()) return false;
        }
    return true;
}

std::string str(const LaurentMatrix& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + str(m(i, j));
        s += "]";
    }
    return s + "]";
}

LaurentMatrix block_diag(const LaurentMatrix& a, const LaurentMatrix& b) {
    LaurentMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

// Column reduction over Q[t]: once the leading coefficient matrix of
// t^N theta U is invertible, t^N theta U diag(t^-d) is a unit over Q[t^-1].
Birkhoff birkhoff_factorize(const LaurentMatrix& theta) {
    size_t n = theta.rows();
    if (theta.cols() != n) throw InputError("Birkhoff factorization needs a square matrix");
    if (!theta.invertible()) throw Error("matrix is not invertible over Laurent polynomials");
    Exp shift = 0;
    bool first = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!theta(i, j).is_zero()) {
                shift = first ? -theta(i, j).low() : std::max(shift, -theta(i, j).low());
                first = false;
            }
    LaurentMatrix p = theta.scaled(LaurentPoly::t(shift));
    LaurentMatrix u = LaurentMatrix::identity(n);
    std::vector<Exp> d(n);
    for (;;) {
        for (size_t j = 0; j < n; ++j) {
            bool seen = false;
            for (size_t i = 0; i < n; ++i)
                if (!p(i, j).is_zero()) {
                    d[j] = seen ? std::max(d[j], p(i, j).degree()) : p(i, j).degree();
                    seen = true;
                }
        }
        QMat lead(n, QVec(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) lead[i][j] = p(i, j).coef(d[j]);
        QMat ker = nullspace(lead, n);
        if (ker.empty()) break;
        const QVec& a = ker[0];
        size_t j = n;
        for (size_t i = 0; i < n; ++i)
            if (a[i] != 0 && (j == n || d[i] > d[j])) j = i;
        for (size_t i = 0; i < n; ++i) {
            if (i == j || a[i] == 0) continue;
            LaurentPoly f(a[i] / a[j], d[j] - d[i]);
            for (size_t row = 0; row < n; ++row) {
                p(row, j) += f * p(row, i);
                u(row, j) += f * u(row, i);
            }
        }
    }
    std::vector<Exp> neg_d;
    for (Exp x : d) neg_d.push_back(-x);
    LaurentMatrix q = p * LaurentMatrix::diag_t(neg_d);
    LaurentMatrix sigma = q.inverse();

    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return d[a] > d[b]; });
    Birkhoff out;
    out.sigma = LaurentMatrix(n, n);
    out.tau = LaurentMatrix(n, n);
    for (size_t k = 0; k < n; ++k) {
        out.u.push_back(d[perm[k]] - shift);
        for (size_t i = 0; i < n; ++i) {
            out.sigma(k, i) = sigma(perm[k], i);
            out.tau(i, k) = u(i, perm[k]);
        }
    }
    if (!out.sigma.in_tinv() || !out.tau.in_t() || !(out.sigma * theta * out.tau == LaurentMatrix::diag_t(out.u)))
        throw Error("Birkhoff factorization failed its residual check");
    return out;
}

std::pair<Exp, Exp> polarization_interval(const LaurentMatrix& theta) {
    if (theta.rows() == 0) throw InputError("empty bundle triple");
    auto u = birkhoff_factorize(theta).u;
    return {u.back(), u.front()};
}

LaurentMatrix koszul_twist(const LaurentMatrix& theta, KoszulMode mode) {
    if (mode == KoszulMode::f2) return theta.scaled(LaurentPoly::t(2));
    LaurentMatrix tt = theta.scaled(LaurentPoly::t(1));
    return block_diag(tt, tt);
}

KoszulDiagram koszul_diagram(const LaurentMatrix& theta) {
    size_t n = theta.rows();
    if (theta.cols() != n) throw InputError("Koszul twist needs a square matrix");
    KoszulDiagram k;
    k.theta = theta;
    k.f1 = koszul_twist(theta, KoszulMode::f1);
    k.f2 = koszul_twist(theta, KoszulMode::f2);
    k.top_in = LaurentMatrix(2 * n, n);
    k.bottom_in = LaurentMatrix(2 * n, n);
    k.top_out = LaurentMatrix(n, 2 * n);
    k.bottom_out = LaurentMatrix(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        k.top_in(i, i) = LaurentPoly::t(1);
        k.top_in(n + i, i) = LaurentPoly(-1);
        k.bottom_in(i, i) = LaurentPoly(1);
        k.bottom_in(n + i, i) = LaurentPoly(-1, -1);
        k.top_out(i, i) = LaurentPoly(1);
        k.top_out(i, n + i) = LaurentPoly::t(1);
        k.bottom_out(i, i) = LaurentPoly::t(-1);
        k.bottom_out(i, n + i) = LaurentPoly(1);
    }
    LaurentMatrix zero(n, n);
    k.report.add("left square commutes", k.f1 * k.top_in == k.bottom_in * k.f2);
    k.report.add("right square commutes", theta * k.top_out == k.bottom_out * k.f1);
    k.report.add("top row is a complex", k.top_out * k.top_in == zero);
    k.report.add("bottom row is a complex", k.bottom_out * k.bottom_in == zero);
    return k;
}

Equivalence equivalent_triples(const LaurentMatrix& theta1, const LaurentMatrix& theta2) {
    if (theta1.rows() != theta2.rows()) throw InputError("matrices have different sizes");
    auto b1 = birkhoff_factorize(theta1);
    auto b2 = birkhoff_factorize(theta2);
    Equivalence e;
    auto show = [](const std::vector<Exp>& u) {
        std::string s = "(";
        for (size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
        return s + ")";
    };
    if (b1.u != b2.u) {
        e.reason = "splitting types " + show(b1.u) + " and " + show(b2.u) + " differ";
        return e;
    }
    e.left = b2.sigma.inverse() * b1.sigma;
    e.right = b1.tau * b2.tau.inverse();
    if (!e.left->in_tinv() || !e.right->in_t() || !(*e.left * theta1 * *e.right == theta2))
        throw Error("equivalence witness failed its check");
    e.equivalent = true;
    e.reason = "common splitting type " + show(b1.u);
    return e;
}

MonoPoly mono_add(const MonoPoly& a, const MonoPoly& b) {
    MonoPoly out = a;
    for (auto& [m, c] : b) {
        Rat s = out[m] + c;
        if (s == 0)
            out.erase(m);
        else
            out[m] = s;
    }
    return out;
}

MonoPoly mono_mul(const MonoPoly& a, const MonoPoly& b) {
    MonoPoly acc;
    for (auto& [m, x] : a)
        for (auto& [n, y] : b) acc[add(m, n)] += x * y;
    std::erase_if(acc, [](auto& kv) { return kv.second == 0; });
    return acc;
}

MonoMatrix mono_add(const MonoMatrix& a, const MonoMatrix& b) {
    MonoMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = mono_add(a[i][j], b[i][j]);
    return out;
}

MonoMatrix mono_mul(const MonoMatrix& a, const MonoMatrix& b) {
    MonoMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = mono_add(mono_mul(a[i][0], b[0][j]), mono_mul(a[i][1], b[1][j]));
    return out;
}

MonoMatrix mono_identity(size_t r) {
    MonoMatrix out;
    out[0][0][IVec(r, 0)] = 1;
    out[1][1][IVec(r, 0)] = 1;
    return out;
}

const char* to_string(RingVariant v) {
    switch (v) {
        case RingVariant::lambda: return "lambda";
        case RingVariant::lambda_prime: return "lambda-prime";
        case RingVariant::lambda_tc: return "lambda-tc";
    }
    return "?";
}

bool MonomialRing::in_base(const IVec& m) const {
    if (m.size() != r) throw InputError("monomial " + str(m) + " has wrong length");
    if (!support.contains(m)) return false;
    return !lattice || lattice->contains(m);
}

MonomialRing lambda_ring(const PolarizedMonoid& p, bool prime) {
    MonomialRing ring;
    ring.variant = prime ? RingVariant::lambda_prime : RingVariant::lambda;
    ring.r = p.n.ambient();
    ring.t = p.t;
    ring.support = Cone::from_generators(ring.r, p.gamma);
    ring.lattice = p.n;
    if (ring.support.contains(p.t)) throw Error("pole lies in cone(Gamma)");
    return ring;
}

MonomialRing lambda_tc_ring(const IVec& t, const Cone& c1, const Cone& c2) {
    size_t r = t.size();
    if (c1.ambient() != r || c2.ambient() != r) throw InputError("cones and pole have different ambient ranks");
    if (c1.dim() != r || c2.dim() != r || !c1.pointed() || !c2.pointed())
        throw Error("C1 and C2 must be full-dimensional pointed cones");
    IVec g;
    for (auto& f : c1.facets())
        if (std::find(c2.facets().begin(), c2.facets().end(), neg(f)) != c2.facets().end()) g = f;
    if (g.empty()) throw Error("C1 and C2 do not share a facet");
    IMat base, apex1, apex2;
    for (auto& ray : c1.rays()) (dot(g, ray) == 0 ? base : apex1).push_back(ray);
    for (auto& ray : c2.rays())
        if (dot(g, ray) != 0) apex2.push_back(ray);
    if (apex1.size() != 1 || apex2.size() != 1) throw Error("C1 and C2 are not pyramids over the shared facet");
    if (primitive(t) != apex2[0]) throw Error("t is not on the apex ray of C2");
    MonomialRing ring;
    ring.variant = RingVariant::lambda_tc;
    ring.r = r;
    ring.t = t;
    ring.support = c1;
    ring.c1 = c1;
    ring.c2 = c2;
    QVec w = omega_point(to_q(apex1[0]), to_q(base), to_q(t));
    if (is_integral(w)) ring.omega = to_int(w);
    return ring;
}

namespace {

void check_entries(const MonoMatrix& phi, size_t r) {
    for (auto& row : phi)
        for (auto& entry : row)
            for (auto& [m, c] : entry) {
                if (m.size() != r) throw InputError("monomial " + str(m) + " has wrong length");
                if (c == 0) throw InputError("monomial " + str(m) + " has a zero coefficient");
            }
}

bool on_pole_ray(const IVec& m, const IVec& t) {
    if (is_zero(m)) return false;
    auto c = solve_left(QMat{to_q(t)}, to_q(m), t.size());
    return c && (*c)[0] > 0;
}

}  // namespace

bool lambda_membership(const MonoMatrix& phi, const MonomialRing& ring) {
    check_entries(phi, ring.r);
    for (int d = 0; d < 2; ++d)
        for (auto& [m, c] : phi[d][d])
            if (!ring.in_base(m)) return false;
    for (auto& [m, c] : phi[0][1])
        if (!ring.in_base(m) || !ring.in_base(add(m, ring.t))) return false;
    for (auto& [m, c] : phi[1][0]) {
        if (!ring.in_base(m) && !ring.in_base(sub(m, ring.t))) return false;
        if (ring.variant == RingVariant::lambda_prime && on_pole_ray(m, ring.t)) return false;
    }
    return true;
}

MonoMatrix tilde_c_apply(const MonoMatrix& phi, const Int& c, const MonomialRing& ring) {
    if (ring.variant != RingVariant::lambda_tc) throw InputError("c-tilde acts on the bipyramidal ring only");
    if (!ring.omega) throw Error("omega is not a lattice point");
    if (c < 1) throw InputError("c must be >= 1");
    if (!lambda_membership(phi, ring)) throw Error("matrix is not in the ring");
    IVec shift = scale(*ring.omega, c - 1);
    auto push = [&](const MonoPoly& p, int dir) {
        MonoPoly out;
        for (auto& [m, x] : p) {
            IVec img = scale(m, c);
            if (dir > 0) img = add(img, shift);
            if (dir < 0) img = sub(img, shift);
            out[img] = x;
        }
        return out;
    };
    MonoMatrix out;
    out[0][0] = push(phi[0][0], 0);
    out[1][1] = push(phi[1][1], 0);
    out[0][1] = push(phi[0][1], -1);
    out[1][0] = push(phi[1][0], 1);
    if (!lambda_membership(out, ring)) throw Error("c-tilde image left the ring");
    return out;
}

EndoExponent minimal_endo_exponent(const MonomialRing& ring, const Cone& cprime, const Int& cap) {
    if (ring.variant != RingVariant::lambda_tc) throw InputError("endo exponent needs the bipyramidal ring");
    if (!ring.omega) throw Error("omega is not a lattice point");
    if (cprime.ambient() != ring.r) throw InputError("C' has the wrong ambient rank");
    EndoExponent out;
    for (auto& ray : ring.c1.rays())
        if (!cprime.in_interior(ray)) out.precondition = false;
    const IVec& w = *ring.omega;
    IVec tw = add(ring.t, w);
    // v(c) = c (t + ω) - ω
    for (auto& e : cprime.equations())
        if (dot(e, tw) != 0 || dot(e, w) != 0) throw Error("t + omega leaves the span of C'");
    Int c0 = 1;
    for (auto& f : cprime.facets()) {
        Int a = dot(f, tw), b = dot(f, w);
        if (a < 0 || (a == 0 && b >= 0)) throw Error("(c-1)omega + c t never enters int C'");
        if (a == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
        c0 = std::max(c0, Int(q + 1));
    }
    if (c0 > cap) throw Error("endo exponent exceeds the cap");
    IVec v = sub(scale(tw, c0), w);
    if (!cprime.in_interior(v)) throw Error("endo exponent failed its check");
    out.c0 = c0;
    return out;
}

}  // namespace torkit
