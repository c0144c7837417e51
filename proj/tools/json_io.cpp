#include "json_io.hpp"

#include <algorithm>
#include <cctype>

namespace cli {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!j.is_object()) throw InputError(what + " must be a JSON object");
    for (auto& [k, v] : j.items()) {
        bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; });
        if (!ok) throw InputError("unknown key '" + k + "' in " + what);
    }
}

const json& field(const json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(what + " is missing '" + key + "'");
    return j.at(key);
}

Int to_int(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        size_t i = !s.empty() && (s[0] == '-' || s[0] == '+');
        bool digits = i < s.size();
        for (size_t k = i; k < s.size(); ++k) digits = digits && std::isdigit(static_cast<unsigned char>(s[k]));
        if (digits) return Int(s[0] == '+' ? s.substr(1) : s);
    }
    throw InputError(what + " must be an integer");
}

long to_long(const json& j, const std::string& what, long lo, long hi) {
    Int z = to_int(j, what);
    if (z < lo || z > hi)
        throw InputError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return z.get_si();
}

Rat to_rat(const json& j, const std::string& what) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rat(to_int(j, what));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const InputError&) {
        }
    }
    throw InputError(what + " must be an integer or a rational string like \"3/4\"");
}

namespace {

const json& array(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be an array");
    return j;
}

void check_len(size_t got, size_t want, const std::string& what) {
    if (want && got != want)
        throw InputError(what + " has length " + std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace

IVec to_ivec(const json& j, const std::string& what, size_t len) {
    IVec v;
    for (auto& x : array(j, what)) v.push_back(to_int(x, what));
    check_len(v.size(), len, what);
    if (v.empty()) throw InputError(what + " is empty");
    return v;
}

QVec to_qvec(const json& j, const std::string& what, size_t len) {
    QVec v;
    for (auto& x : array(j, what)) v.push_back(to_rat(x, what));
    check_len(v.size(), len, what);
    if (v.empty()) throw InputError(what + " is empty");
    return v;
}

IMat to_imat(const json& j, const std::string& what, size_t& len) {
    IMat m;
    for (auto& row : array(j, what)) {
        m.push_back(to_ivec(row, what + " row", len));
        len = m.back().size();
    }
    return m;
}

QMat to_qmat(const json& j, const std::string& what, size_t& len) {
    QMat m;
    for (auto& row : array(j, what)) {
        m.push_back(to_qvec(row, what + " row", len));
        len = m.back().size();
    }
    return m;
}

AffineMonoid to_monoid(const json& j, const std::string& what) {
    check_keys(j, {"generators", "rays", "lattice"}, what);
    size_t r = 0;
    if (j.contains("generators")) {
        if (j.contains("rays") || j.contains("lattice"))
            throw InputError(what + " takes either generators or rays, not both");
        IMat g = to_imat(j.at("generators"), what + ".generators", r);
        if (g.empty()) throw InputError(what + ".generators is empty");
        return AffineMonoid(r, g);
    }
    IMat rays = to_imat(field(j, "rays", what), what + ".rays", r);
    if (rays.empty()) throw InputError(what + ".rays is empty");
    Lattice l = Lattice::full(r);
    if (j.contains("lattice")) l = Lattice(r, to_imat(j.at("lattice"), what + ".lattice", r));
    Cone c = Cone::from_generators(r, rays);
    for (auto& b : c.span_basis())
        if (!l.in_span(b)) throw InputError(what + ": the cone is not inside the span of the lattice");
    return AffineMonoid::normal(c, l);
}

CSeq to_cseq(const json& j, const std::string& what) {
    if (!j.is_object()) return CSeq({}, to_int(j, what));
    check_keys(j, {"prefix", "tail"}, what);
    std::vector<Int> prefix;
    if (j.contains("prefix"))
        for (auto& x : array(j.at("prefix"), what + ".prefix")) prefix.push_back(to_int(x, what + ".prefix"));
    Int tail = j.contains("tail") ? to_int(j.at("tail"), what + ".tail") : Int(2);
    return CSeq(prefix, tail);
}

LaurentMatrix to_laurent(const json& j, const std::string& what) {
    check_keys(j, {"n", "entries"}, what);
    size_t n = to_long(field(j, "n", what), what + ".n", 1, 64);
    const json& rows = array(field(j, "entries", what), what + ".entries");
    check_len(rows.size(), n, what + ".entries");
    LaurentMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        check_len(array(rows[i], what + ".entries row").size(), n, what + ".entries row");
        for (size_t k = 0; k < n; ++k)
            for (auto& term : array(rows[i][k], what + ".entries entry")) {
                std::string tw = what + ".entries term";
                check_keys(term, {"exp", "coef"}, tw);
                long e = to_long(field(term, "exp", tw), tw + ".exp", -1000000, 1000000);
                m(i, k) += LaurentPoly(to_rat(field(term, "coef", tw), tw + ".coef"), e);
            }
    }
    return m;
}

MonoMatrix to_mono_matrix(const json& j, size_t r, const std::string& what) {
    const json& rows = array(j, what);
    check_len(rows.size(), 2, what);
    MonoMatrix m;
    for (size_t i = 0; i < 2; ++i) {
        check_len(array(rows[i], what + " row").size(), 2, what + " row");
        for (size_t k = 0; k < 2; ++k)
            for (auto& term : array(rows[i][k], what + " entry")) {
                std::string tw = what + " term";
                check_keys(term, {"mono", "coef"}, tw);
                MonoPoly p{{to_ivec(field(term, "mono", tw), tw + ".mono", r), to_rat(field(term, "coef", tw), tw + ".coef")}};
                m[i][k] = mono_add(m[i][k], p);
            }
    }
    return m;
}

WittVector to_witt(const json& j, size_t m, const std::string& what) {
    if (j.is_string()) return WittVector::parse(j.get<std::string>(), m);
    check_keys(j, {"m", "coeffs"}, what);
    size_t jm = to_long(field(j, "m", what), what + ".m", 1, 1000);
    if (jm != m) throw InputError(what + " has truncation " + std::to_string(jm) + ", expected " + std::to_string(m));
    QVec a;
    for (auto& x : array(field(j, "coeffs", what), what + ".coeffs")) a.push_back(to_rat(x, what + ".coeffs"));
    check_len(a.size(), m, what + ".coeffs");
    return WittVector(m, a);
}

json out(const Int& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json out(const Rat& q) { return str(q); }

json out(const IVec& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(out(x));
    return a;
}

json out(const QVec& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(out(x));
    return a;
}

json out(const IMat& m) {
    json a = json::array();
    for (auto& r : m) a.push_back(out(r));
    return a;
}

json out(const QMat& m) {
    json a = json::array();
    for (auto& r : m) a.push_back(out(r));
    return a;
}

json out(const LaurentMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t k = 0; k < m.cols(); ++k) {
            json terms = json::array();
            for (auto& [e, c] : m(i, k).terms()) terms.push_back({{"exp", e}, {"coef", out(c)}});
            row.push_back(terms);
        }
        rows.push_back(row);
    }
    return {{"n", m.rows()}, {"entries", rows}};
}

json out(const MonoMatrix& m) {
    json rows = json::array();
    for (auto& r : m) {
        json row = json::array();
        for (auto& p : r) {
            json terms = json::array();
            for (auto& [mono, c] : p) terms.push_back({{"mono", out(mono)}, {"coef", out(c)}});
            row.push_back(terms);
        }
        rows.push_back(row);
    }
    return rows;
}

json out(const WittVector& f) { return {{"m", f.truncation()}, {"coeffs", out(f.coeffs())}, {"text", str(f)}}; }

json out(const Report& r) {
    json a = json::array();
    for (auto& c : r.clauses) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return a;
}

json out_monoid(const AffineMonoid& m) {
    return {{"ambient", m.ambient()}, {"rank", m.rank()}, {"generators", out(m.generators())}};
}

}  // namespace cli
