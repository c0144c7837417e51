#pragma once

#include <map>
#include <optional>

#include "torkit/numeric.hpp"

namespace torkit {

// 1 + a_1 T + ... + a_m T^m, an element of W(Q) truncated at T^m.
class WittVector {
public:
    WittVector() = default;
    explicit WittVector(size_t m);  // the additive identity 1
    WittVector(size_t m, QVec coeffs);
    // Parses "1-2T+3/2T^3"; terms beyond T^m are rejected.
    static WittVector parse(const std::string& s, size_t m);
    // 1 - r T^n
    static WittVector elementary(size_t m, const Rat& r, size_t n);

    size_t truncation() const { return m_; }
    // Coefficient of T^n; 1 for n = 0.
    Rat coeff(size_t n) const { return n == 0 ? Rat(1) : a_.at(n - 1); }
    const QVec& coeffs() const { return a_; }
    bool is_one() const;
    bool operator==(const WittVector& o) const { return m_ == o.m_ && a_ == o.a_; }

private:
    size_t m_ = 0;
    QVec a_;
};

std::string str(const WittVector& f);

// Addition in W is multiplication of power series.
WittVector witt_add(const WittVector& f, const WittVector& g);
WittVector witt_neg(const WittVector& f);
// gh_n with -T f'/f = sum gh_n T^n.
QVec ghost(const WittVector& f);
WittVector from_ghost(const QVec& v);
WittVector witt_star(const WittVector& f, const WittVector& g);
// The star product from the closed formula on elementary factors, without
// ghost coordinates.
WittVector witt_star_expansion(const WittVector& f, const WittVector& g);
// r_1..r_m with f = prod (1 - r_n T^n) mod T^{m+1}.
QVec factor_expansion(const WittVector& f);
// Largest m0 with f in I_{m0} = 1 + T^{m0} Q[[T]]; truncation + 1 for f = 1.
size_t filtration_degree(const WittVector& f);

// f(T) -> f(T^n), same truncation.
WittVector verschiebung(const WittVector& f, size_t n);
// Norm along T -> T^n: ghost components gh_{nk}; truncation drops to m / n.
WittVector frobenius(const WittVector& f, size_t n);

// Element of a graded monoid algebra. Each monomial carries its degree; the
// zero monomial is the only one of degree 0.
class GradedElement {
public:
    struct Term {
        Rat coef;
        long degree = 0;
    };
    GradedElement() = default;
    void add(const IVec& mono, const Rat& coef, std::optional<long> degree);
    const std::map<IVec, Term>& terms() const { return terms_; }
    bool operator==(const GradedElement& o) const;

private:
    std::map<IVec, Term> terms_;
};

GradedElement graded_add(const GradedElement& a, const GradedElement& b);
GradedElement graded_mul(const GradedElement& a, const GradedElement& b);

// Polynomial in T with graded coefficients: exponent -> coefficient.
using WeibelImage = std::map<long, GradedElement>;
// sum a_j -> sum a_j T^j
WeibelImage weibel_map(const GradedElement& x);
WeibelImage weibel_mul(const WeibelImage& a, const WeibelImage& b);
// T -> 1
GradedElement weibel_at_one(const WeibelImage& w);

}  // namespace torkit
