#pragma once

#include <array>
#include <map>
#include <optional>

#include "torkit/cone.hpp"
#include "torkit/pyramidal.hpp"

namespace torkit {

using Exp = long;

// Element of Q[t, t^-1]. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rat& c, Exp e = 0);  // c t^e
    static LaurentPoly t(Exp e = 1) { return LaurentPoly(Rat(1), e); }

    const std::map<Exp, Rat>& terms() const { return terms_; }
    Rat coef(Exp e) const;
    void set(Exp e, const Rat& c);
    bool is_zero() const { return terms_.empty(); }
    // Highest and lowest exponent; the polynomial must be nonzero.
    Exp degree() const;
    Exp low() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool in_t() const { return is_zero() || low() >= 0; }      // in Q[t]
    bool in_tinv() const { return is_zero() || degree() <= 0; }  // in Q[t^-1]
    LaurentPoly shift(Exp e) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

private:
    std::map<Exp, Rat> terms_;
};

// Quotient a / b; throws if b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);
std::string str(const LaurentPoly& p);

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(size_t rows, size_t cols);
    explicit LaurentMatrix(std::vector<std::vector<LaurentPoly>> e);
    static LaurentMatrix identity(size_t n);
    static LaurentMatrix diag(const std::vector<LaurentPoly>& d);
    static LaurentMatrix diag_t(const std::vector<Exp>& u);

    size_t rows() const { return e_.size(); }
    size_t cols() const { return e_.empty() ? 0 : e_[0].size(); }
    LaurentPoly& operator()(size_t i, size_t j) { return e_[i][j]; }
    const LaurentPoly& operator()(size_t i, size_t j) const { return e_[i][j]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix operator+(const LaurentMatrix& o) const;
    LaurentMatrix scaled(const LaurentPoly& p) const;
    bool operator==(const LaurentMatrix& o) const { return e_ == o.e_; }

    LaurentPoly det() const;
    // det = c t^d with c != 0
    bool invertible() const;
    LaurentMatrix inverse() const;  // throws if not invertible
    bool in_t() const;
    bool in_tinv() const;
    // Entries are pure t-powers on the diagonal and zero elsewhere.
    bool is_monomial_diagonal() const;

private:
    std::vector<std::vector<LaurentPoly>> e_;
};

std::string str(const LaurentMatrix& m);
LaurentMatrix block_diag(const LaurentMatrix& a, const LaurentMatrix& b);

// sigma * theta * tau = diag(t^u) with sigma over Q[t^-1] and tau over Q[t];
// u is sorted descending.
struct Birkhoff {
    LaurentMatrix sigma, tau;
    std::vector<Exp> u;
};
Birkhoff birkhoff_factorize(const LaurentMatrix& theta);

// A bundle triple on X through its restriction theta to Q[t, t^-1]. The K1
// condition on theta(0)^-1 theta has no finite certificate and is not checked.
struct BundleTriple {
    LaurentMatrix theta;
};

std::pair<Exp, Exp> polarization_interval(const LaurentMatrix& theta);
inline std::pair<Exp, Exp> polarization_interval(const BundleTriple& b) { return polarization_interval(b.theta); }

enum class KoszulMode { f1, f2 };
LaurentMatrix koszul_twist(const LaurentMatrix& theta, KoszulMode mode);

// The maps of the Koszul diagram and the checks that it commutes and both
// rows are complexes.
struct KoszulDiagram {
    LaurentMatrix f2, f1, theta;
    LaurentMatrix top_in, top_out;  // (t, -1) and (1, t)
    LaurentMatrix bottom_in, bottom_out;  // (1, -t^-1) and (t^-1, 1)
    Report report;
};
KoszulDiagram koszul_diagram(const LaurentMatrix& theta);

// Decides theta2 = left * theta1 * right with left over Q[t^-1] and right
// over Q[t] (the factorization orientation). Equal splitting types are
// necessary and sufficient.
struct Equivalence {
    bool equivalent = false;
    std::optional<LaurentMatrix> left, right;
    std::string reason;
};
Equivalence equivalent_triples(const LaurentMatrix& theta1, const LaurentMatrix& theta2);

// Finite Q-combination of monomials x^m, m in Z^r.
using MonoPoly = std::map<IVec, Rat>;
using MonoMatrix = std::array<std::array<MonoPoly, 2>, 2>;

MonoPoly mono_add(const MonoPoly& a, const MonoPoly& b);
MonoPoly mono_mul(const MonoPoly& a, const MonoPoly& b);
MonoMatrix mono_add(const MonoMatrix& a, const MonoMatrix& b);
MonoMatrix mono_mul(const MonoMatrix& a, const MonoMatrix& b);
MonoMatrix mono_identity(size_t r);

enum class RingVariant { lambda, lambda_prime, lambda_tc };
const char* to_string(RingVariant v);

// Support data of one of the 2x2 monomial matrix rings. The base set S is
// L(Γ) = L ∩ cone(Γ) for Λ and Λ', and C1 ∩ Z^r for Λ_{t,C}.
struct MonomialRing {
    RingVariant variant = RingVariant::lambda;
    size_t r = 0;
    IVec t;
    Cone support;
    std::optional<AffineMonoid> lattice;  // L for Λ and Λ'
    std::optional<IVec> omega;            // Λ_{t,C} only
    Cone c1, c2;                          // Λ_{t,C} only

    bool in_base(const IVec& m) const;
};

MonomialRing lambda_ring(const PolarizedMonoid& p, bool prime);
// C = C1 ∪ C2 with t on the extremal ray of C2 off the shared facet.
MonomialRing lambda_tc_ring(const IVec& t, const Cone& c1, const Cone& c2);

bool lambda_membership(const MonoMatrix& phi, const MonomialRing& ring);

MonoMatrix tilde_c_apply(const MonoMatrix& phi, const Int& c, const MonomialRing& ring);

struct EndoExponent {
    Int c0;
    bool precondition = true;  // C1 \ {0} inside int C'
};
// Least c0 with (c-1)ω + c t in int C' for all c >= c0.
EndoExponent minimal_endo_exponent(const MonomialRing& ring, const Cone& cprime, const Int& cap = Int(1) << 40);

}  // namespace torkit
