#include "torkit/linalg.hpp"

#include <algorithm>
#include <utility>

namespace torkit {

std::vector<size_t> rref(QMat& a, size_t cols) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < a.size(); ++c) {
        size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rat inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    a.resize(r);
    return piv;
}

size_t rank(const QMat& a, size_t cols) {
    QMat b = a;
    return rref(b, cols).size();
}

size_t rank(const IMat& a, size_t cols) { return rank(to_q(a), cols); }

QMat nullspace(const QMat& a, size_t cols) {
    QMat b = a;
    auto piv = rref(b, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    QMat out;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec x(cols, Rat(0));
        x[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -b[i][f];
        out.push_back(x);
    }
    return out;
}

namespace {

// Row operations on a (and optionally t) to bring a into Hermite form.
void hnf_inplace(IMat& a, size_t cols, IMat* t) {
    size_t r = 0;
    for (size_t c = 0; c < cols && r < a.size(); ++c) {
        while (true) {
            size_t best = a.size();
            for (size_t i = r; i < a.size(); ++i)
                if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == a.size()) break;
            std::swap(a[best], a[r]);
            if (t) std::swap((*t)[best], (*t)[r]);
            bool done = true;
            for (size_t i = r + 1; i < a.size(); ++i) {
                if (a[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                for (size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (t)
                    for (size_t j = 0; j < (*t)[i].size(); ++j) (*t)[i][j] -= q * (*t)[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0) {
            for (size_t j = c; j < cols; ++j) a[r][j] = -a[r][j];
            if (t)
                for (auto& x : (*t)[r]) x = -x;
        }
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            if (q == 0) continue;
            for (size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
            if (t)
                for (size_t j = 0; j < (*t)[i].size(); ++j) (*t)[i][j] -= q * (*t)[r][j];
        }
        ++r;
    }
}

}  // namespace

IMat identity(size_t n) {
    IMat m(n, IVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat qidentity(size_t n) {
    QMat m(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat hnf(const IMat& a, size_t cols, IMat* transform) {
    IMat b = a;
    if (transform) *transform = identity(a.size());
    hnf_inplace(b, cols, transform);
    IMat out;
    for (auto& row : b)
        if (!is_zero(row)) out.push_back(row);
    return out;
}

IMat integer_nullspace(const IMat& a, size_t cols) {
    // Column operations on a, tracked: rows of a^T with identity alongside.
    IMat at = transpose(a, cols);
    size_t m = a.size();
    IMat t;
    IMat h = at;
    t = identity(cols);
    hnf_inplace(h, m, &t);
    IMat out;
    for (size_t i = 0; i < cols; ++i)
        if (is_zero(h[i])) out.push_back(t[i]);
    return hnf(out, cols);
}

std::optional<QVec> solve_left(const QMat& b, const QVec& x, size_t cols) {
    // c*b = x  <=>  b^T c^T = x^T. Build augmented system.
    size_t k = b.size();
    QMat sys(cols, QVec(k + 1));
    for (size_t j = 0; j < cols; ++j) {
        for (size_t i = 0; i < k; ++i) sys[j][i] = b[i][j];
        sys[j][k] = x[j];
    }
    auto piv = rref(sys, k + 1);
    if (!piv.empty() && piv.back() == k) return std::nullopt;
    QVec c(k, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) c[piv[i]] = sys[i][k];
    return c;
}

Rat det(const QMat& a) {
    size_t n = a.size();
    QMat b = a;
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && b[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(b[p], b[c]);
            d = -d;
        }
        d *= b[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (b[i][c] == 0) continue;
            Rat f = b[i][c] / b[c][c];
            for (size_t j = c; j < n; ++j) b[i][j] -= f * b[c][j];
        }
    }
    return d;
}

Int det(const IMat& a) {
    // Bareiss fraction-free elimination.
    size_t n = a.size();
    if (n == 0) return 1;
    IMat b = a;
    int sign = 1;
    Int prev = 1;
    for (size_t c = 0; c + 1 < n; ++c) {
        size_t p = c;
        while (p < n && b[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(b[p], b[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j) {
                Int v = b[i][j] * b[c][c] - b[i][c] * b[c][j];
                mpz_divexact(b[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            b[i][c] = 0;
        }
        prev = b[c][c];
    }
    return sign * b[n - 1][n - 1];
}

std::optional<QMat> inverse(const QMat& a) {
    size_t n = a.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug, 2 * n);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

IMat mat_mul(const IMat& a, const IMat& b, size_t bcols) {
    IMat r;
    r.reserve(a.size());
    for (auto& row : a) r.push_back(row_times(row, b, bcols));
    return r;
}

QMat mat_mul(const QMat& a, const QMat& b, size_t bcols) {
    QMat r;
    r.reserve(a.size());
    for (auto& row : a) r.push_back(row_times(row, b, bcols));
    return r;
}

Smith smith(const IMat& a0, size_t n) {
    size_t m = a0.size();
    IMat a = a0;
    Smith s;
    s.left = identity(m);
    s.right = identity(n);
    auto row_op = [&](size_t dst, size_t src, const Int& q) {  // row dst -= q*row src
        for (size_t j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
        for (size_t j = 0; j < m; ++j) s.left[dst][j] -= q * s.left[src][j];
    };
    auto col_op = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
        for (size_t i = 0; i < n; ++i) s.right[i][dst] -= q * s.right[i][src];
    };
    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(s.left[i], s.left[j]);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : s.right) std::swap(row[i], row[j]);
    };
    size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        while (true) {
            size_t bi = m, bj = n;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) goto done;
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_op(i, t, q);
                if (a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_op(j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block
            bool divides = true;
            for (size_t i = t + 1; i < m && divides; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_op(t, i, Int(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (size_t j = 0; j < n; ++j) a[t][j] = -a[t][j];
            for (size_t j = 0; j < m; ++j) s.left[t][j] = -s.left[t][j];
        }
        s.diag.push_back(a[t][t]);
    }
done:
    return s;
}

IMat complete_to_basis(const IVec& v) {
    size_t k = v.size();
    IMat col(k, IVec(1));
    for (size_t i = 0; i < k; ++i) col[i][0] = v[i];
    IMat u;
    IMat h = hnf(col, 1, &u);
    if (h.size() != 1 || h[0][0] != 1) throw Error("vector " + str(v) + " is not primitive");
    auto inv = inverse(to_q(u));
    IMat out(k, IVec(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) out[i][j] = (*inv)[j][i].get_num();
    return out;
}

}  // namespace torkit
