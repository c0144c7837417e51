#include "torkit/numeric.hpp"

#include <cctype>

namespace torkit {

Rat parse_rat(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InputError("empty rational literal");
    auto check_int = [&](const std::string& part) {
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i >= part.size()) throw InputError("bad rational literal '" + raw + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw InputError("bad rational literal '" + raw + "'");
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    if (num.empty()) throw InputError("bad rational literal '" + raw + "'");
    check_int(num);
    if (num[0] == '+') num = num.substr(1);
    Rat q;
    if (slash == std::string::npos) {
        q = Rat(Int(num));
    } else {
        std::string den = s.substr(slash + 1);
        if (den.empty() || den[0] == '-' || den[0] == '+') throw InputError("bad rational literal '" + raw + "'");
        check_int(den);
        Int d(den);
        if (d == 0) throw InputError("zero denominator in '" + raw + "'");
        q = Rat(Int(num), d);
        q.canonicalize();
    }
    return q;
}

std::string str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string str(const Int& z) { return z.get_str(); }

std::string str(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

std::string str(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + str(v[i]);
    return s + ")";
}

QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

QMat to_q(const IMat& m) {
    QMat r;
    r.reserve(m.size());
    for (auto& row : m) r.push_back(to_q(row));
    return r;
}

Int gcd_all(const IVec& v) {
    Int g = 0;
    for (auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IVec primitive(const IVec& v) {
    Int g = gcd_all(v);
    if (g == 0 || g == 1) return v;
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

Int denominator_lcm(const QVec& v) {
    Int l = 1;
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

IVec primitive(const QVec& v) {
    Int l = denominator_lcm(v);
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * l;
        r[i] = s.get_num();
    }
    return primitive(r);
}

bool is_integral(const QVec& v) {
    for (auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

IVec to_int(const QVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw Error("vector " + str(v) + " is not integral");
        r[i] = v[i].get_num();
    }
    return r;
}

bool is_zero(const IVec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const QVec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * b[i];
    return s;
}

IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec scale(const IVec& a, const Int& c) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

IVec neg(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec scale(const QVec& a, const Rat& c) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

int sgn(const Rat& q) { return ::sgn(q); }
int sgn(const Int& z) { return ::sgn(z); }

IVec row_times(const IVec& x, const IMat& m, size_t cols) {
    IVec r(cols, Int(0));
    for (size_t i = 0; i < m.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < cols; ++j) mpz_addmul(r[j].get_mpz_t(), x[i].get_mpz_t(), m[i][j].get_mpz_t());
    }
    return r;
}

QVec row_times(const QVec& x, const QMat& m, size_t cols) {
    QVec r(cols, Rat(0));
    for (size_t i = 0; i < m.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < cols; ++j) r[j] += x[i] * m[i][j];
    }
    return r;
}

IMat transpose(const IMat& m, size_t cols) {
    IMat t(cols, IVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

QMat transpose(const QMat& m, size_t cols) {
    QMat t(cols, QVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace torkit
