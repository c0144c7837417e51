#include "torkit/witt.hpp"

#include <cctype>
#include <numeric>

namespace torkit {

WittVector::WittVector(size_t m) : m_(m), a_(m) {}

WittVector::WittVector(size_t m, QVec coeffs) : m_(m), a_(std::move(coeffs)) {
    if (a_.size() != m_) throw InputError("Witt vector needs exactly m coefficients");
}

WittVector WittVector::parse(const std::string& raw, size_t m) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InputError("empty Witt vector literal");
    QVec full(m + 1);
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i + 1;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term = term.substr(1);
        }
        auto tpos = term.find('T');
        std::string coef = term.substr(0, tpos);
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        size_t exp = 0;
        if (tpos != std::string::npos) {
            std::string rest = term.substr(tpos + 1);
            exp = 1;
            if (!rest.empty()) {
                if (rest[0] != '^' || rest.size() == 1) throw InputError("bad Witt term '" + term + "'");
                for (size_t k = 1; k < rest.size(); ++k)
                    if (!std::isdigit(static_cast<unsigned char>(rest[k])))
                        throw InputError("bad Witt term '" + term + "'");
                exp = std::stoul(rest.substr(1));
            }
        } else if (coef.empty()) {
            throw InputError("bad Witt term in '" + raw + "'");
        }
        Rat c = coef.empty() ? Rat(1) : parse_rat(coef);
        if (negative) c = -c;
        if (exp > m) {
            if (c != 0) throw InputError("term of degree " + std::to_string(exp) + " beyond truncation " + std::to_string(m));
            continue;
        }
        full[exp] += c;
    }
    if (full[0] != 1) throw InputError("Witt vector must have constant term 1");
    return WittVector(m, QVec(full.begin() + 1, full.end()));
}

WittVector WittVector::elementary(size_t m, const Rat& r, size_t n) {
    if (n == 0) throw InputError("elementary factor needs n >= 1");
    WittVector f(m);
    if (n <= m) f.a_[n - 1] = -r;
    return f;
}

bool WittVector::is_one() const {
    for (auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::string str(const WittVector& f) {
    std::string s = "1";
    for (size_t n = 1; n <= f.truncation(); ++n) {
        Rat c = f.coeff(n);
        if (c == 0) continue;
        s += c < 0 ? "-" : "+";
        Rat a = abs(c);
        if (a != 1) s += str(a);
        s += "T";
        if (n > 1) s += "^" + std::to_string(n);
    }
    return s;
}

namespace {

void same_truncation(const WittVector& f, const WittVector& g) {
    if (f.truncation() != g.truncation()) throw InputError("Witt vectors have different truncations");
}

// Full coefficient vector including the constant term.
QVec series(const WittVector& f) {
    QVec s{Rat(1)};
    s.insert(s.end(), f.coeffs().begin(), f.coeffs().end());
    return s;
}

QVec series_mul(const QVec& a, const QVec& b, size_t m) {
    QVec out(m + 1);
    for (size_t i = 0; i <= m && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j <= m && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

WittVector from_series(const QVec& s) { return WittVector(s.size() - 1, QVec(s.begin() + 1, s.end())); }

}  // namespace

WittVector witt_add(const WittVector& f, const WittVector& g) {
    same_truncation(f, g);
    return from_series(series_mul(series(f), series(g), f.truncation()));
}

WittVector witt_neg(const WittVector& f) {
    // inverse power series: b_n = -sum_{k=1}^n a_k b_{n-k}
    size_t m = f.truncation();
    QVec b(m + 1);
    b[0] = 1;
    for (size_t n = 1; n <= m; ++n)
        for (size_t k = 1; k <= n; ++k) b[n] -= f.coeff(k) * b[n - k];
    return from_series(b);
}

// log f = sum L_n T^n with n a_n = sum_{k=1}^n k L_k a_{n-k}; gh_n = -n L_n.
QVec ghost(const WittVector& f) {
    size_t m = f.truncation();
    QVec l(m + 1), gh(m);
    for (size_t n = 1; n <= m; ++n) {
        Rat acc = n * f.coeff(n);
        for (size_t k = 1; k < n; ++k) acc -= k * l[k] * f.coeff(n - k);
        l[n] = acc / n;
        gh[n - 1] = -Rat(n) * l[n];
    }
    return gh;
}

WittVector from_ghost(const QVec& v) {
    size_t m = v.size();
    QVec a(m + 1);
    a[0] = 1;
    for (size_t n = 1; n <= m; ++n) {
        // n a_n = sum_{k=1}^n k L_k a_{n-k} with k L_k = -gh_k
        Rat acc = 0;
        for (size_t k = 1; k <= n; ++k) acc -= v[k - 1] * a[n - k];
        a[n] = acc / n;
    }
    return from_series(a);
}

WittVector witt_star(const WittVector& f, const WittVector& g) {
    same_truncation(f, g);
    QVec a = ghost(f), b = ghost(g);
    for (size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return from_ghost(a);
}

namespace {

Rat rat_pow(const Rat& x, size_t e) {
    Rat out(1);
    for (size_t i = 0; i < e; ++i) out *= x;
    return out;
}

}  // namespace

WittVector witt_star_expansion(const WittVector& f, const WittVector& g) {
    same_truncation(f, g);
    size_t m = f.truncation();
    QVec r = factor_expansion(f), s = factor_expansion(g);
    QVec acc(m + 1);
    acc[0] = 1;
    for (size_t i = 1; i <= m; ++i) {
        if (r[i - 1] == 0) continue;
        for (size_t j = 1; j <= m; ++j) {
            if (s[j - 1] == 0) continue;
            size_t d = std::gcd(i, j), l = i / d * j;
            if (l > m) continue;
            // (1 - r^{j/d} s^{i/d} T^{ij/d})^d
            Rat c = rat_pow(r[i - 1], j / d) * rat_pow(s[j - 1], i / d);
            QVec factor(m + 1);
            factor[0] = 1;
            factor[l] = -c;
            for (size_t k = 0; k < d; ++k) acc = series_mul(acc, factor, m);
        }
    }
    return from_series(acc);
}

QVec factor_expansion(const WittVector& f) {
    size_t m = f.truncation();
    QVec cur = series(f), r(m);
    for (size_t n = 1; n <= m; ++n) {
        r[n - 1] = -cur[n];
        if (r[n - 1] == 0) continue;
        // divide by 1 - r T^n
        QVec q(m + 1);
        for (size_t k = 0; k <= m; ++k) q[k] = cur[k] + (k >= n ? r[n - 1] * q[k - n] : Rat(0));
        cur = q;
    }
    return r;
}

size_t filtration_degree(const WittVector& f) {
    for (size_t n = 1; n <= f.truncation(); ++n)
        if (f.coeff(n) != 0) return n;
    return f.truncation() + 1;
}

WittVector verschiebung(const WittVector& f, size_t n) {
    if (n == 0) throw InputError("verschiebung needs n >= 1");
    QVec a(f.truncation());
    for (size_t k = 1; k * n <= f.truncation(); ++k) a[k * n - 1] = f.coeff(k);
    return WittVector(f.truncation(), a);
}

WittVector frobenius(const WittVector& f, size_t n) {
    if (n == 0) throw InputError("frobenius needs n >= 1");
    QVec gh = ghost(f), out;
    for (size_t k = 1; k * n <= f.truncation(); ++k) out.push_back(gh[k * n - 1]);
    return from_ghost(out);
}

void GradedElement::add(const IVec& mono, const Rat& coef, std::optional<long> degree) {
    if (!degree) throw InputError("monomial " + str(mono) + " has no declared degree");
    if (*degree < 0) throw InputError("negative degree");
    if ((*degree == 0) != is_zero(mono)) throw InputError("only the constant term has degree 0");
    auto it = terms_.find(mono);
    if (it != terms_.end()) {
        if (it->second.degree != *degree) throw InputError("monomial " + str(mono) + " has two degrees");
        it->second.coef += coef;
        if (it->second.coef == 0) terms_.erase(it);
        return;
    }
    if (coef != 0) terms_[mono] = {coef, *degree};
}

bool GradedElement::operator==(const GradedElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (auto& [m, t] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || it->second.coef != t.coef || it->second.degree != t.degree) return false;
    }
    return true;
}

GradedElement graded_add(const GradedElement& a, const GradedElement& b) {
    GradedElement out = a;
    for (auto& [m, t] : b.terms()) out.add(m, t.coef, t.degree);
    return out;
}

GradedElement graded_mul(const GradedElement& a, const GradedElement& b) {
    GradedElement out;
    for (auto& [m, x] : a.terms())
        for (auto& [n, y] : b.terms()) out.add(add(m, n), x.coef * y.coef, x.degree + y.degree);
    return out;
}

WeibelImage weibel_map(const GradedElement& x) {
    WeibelImage w;
    for (auto& [m, t] : x.terms()) w[t.degree].add(m, t.coef, t.degree);
    return w;
}

WeibelImage weibel_mul(const WeibelImage& a, const WeibelImage& b) {
    WeibelImage out;
    for (auto& [i, x] : a)
        for (auto& [j, y] : b) out[i + j] = graded_add(out[i + j], graded_mul(x, y));
    std::erase_if(out, [](auto& kv) { return kv.second.terms().empty(); });
    return out;
}

GradedElement weibel_at_one(const WeibelImage& w) {
    GradedElement out;
    for (auto& [e, x] : w) out = graded_add(out, x);
    return out;
}

}  // namespace torkit
