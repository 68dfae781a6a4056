#include "weylzeta/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "weylzeta/errors.hpp"

namespace weylzeta {

QMat qmat_identity(int n) {
    QMat m(n, QVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

QMat qmat_from_int(const IMat& a) {
    QMat m(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (long x : a[i]) m[i].push_back(Rational(x));
    return m;
}

QVec qmat_mul_vec(const QMat& m, const QVec& v) {
    QVec r(m.size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    const size_t n = a.size(), k = b.size(), m = b[0].size();
    QMat r(n, QVec(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

Rational qmat_det(QMat m) {
    const size_t n = m.size();
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n)
            return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero())
                continue;
            Rational f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

QMat qmat_inverse(const QMat& a) {
    const size_t n = a.size();
    QMat m = a;
    QMat inv = qmat_identity(static_cast<int>(n));
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n)
            throw computation_error("singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational d = m[c][c];
        for (size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero())
                continue;
            Rational f = m[i][c];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

QVec qmat_solve(QMat a, QVec b) {
    const size_t rows = a.size(), cols = a[0].size();
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        std::swap(b[p], b[rank]);
        Rational d = a[rank][c];
        for (size_t j = c; j < cols; ++j) a[rank][j] /= d;
        b[rank] /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c].is_zero())
                continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++rank;
    }
    if (rank < cols)
        throw computation_error("underdetermined linear system");
    for (size_t i = rank; i < rows; ++i)
        if (!b[i].is_zero())
            throw computation_error("inconsistent linear system");
    QVec x(cols, Rational(0));
    for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

IMat imat_identity(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    const size_t n = a.size(), k = b.size(), m = b[0].size();
    IMat r(n, IVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

IVec imat_mul_vec(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

long imat_det(const IMat& m) {
    const size_t n = m.size();
    if (n == 1)
        return m[0][0];
    if (n == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n == 3)
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    throw computation_error("imat_det supports n <= 3");
}

IMat imat_adjugate(const IMat& m) {
    const size_t n = m.size();
    if (n == 1)
        return {{1}};
    if (n == 2)
        return {{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}};
    if (n == 3) {
        IMat a(3, IVec(3, 0));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
                const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                // adj = transpose of cofactor matrix
                a[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            }
        }
        return a;
    }
    throw computation_error("imat_adjugate supports n <= 3");
}

IMat imat_unimodular_inverse(const IMat& m) {
    const long det = imat_det(m);
    if (det != 1 && det != -1)
        throw computation_error("matrix is not unimodular");
    IMat adj = imat_adjugate(m);
    if (det == -1)
        for (auto& row : adj)
            for (auto& x : row) x = -x;
    return adj;
}

IMat imat_transpose(const IMat& m) {
    const size_t n = m.size(), k = m[0].size();
    IMat t(k, IVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) t[j][i] = m[i][j];
    return t;
}

SmithForm smith_normal_form(IMat a) {
    const int n = static_cast<int>(a.size());
    IMat u = imat_identity(n), v = imat_identity(n);

    auto swap_rows = [&](int i, int j) { std::swap(a[i], a[j]); std::swap(u[i], u[j]); };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    };
    auto addmul_row = [&](int dst, int src, long f) {
        for (int c = 0; c < n; ++c) a[dst][c] += f * a[src][c];
        for (int c = 0; c < n; ++c) u[dst][c] += f * u[src][c];
    };
    auto addmul_col = [&](int dst, int src, long f) {
        for (int r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
        for (int r = 0; r < n; ++r) v[r][dst] += f * v[r][src];
    };

    for (int t = 0; t < n; ++t) {
        // move a smallest nonzero entry of the trailing block to (t,t)
        while (true) {
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (a[i][j] != 0 &&
                        (pi < 0 || std::abs(a[i][j]) < std::abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0)
                break; // trailing block is zero
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            bool clean = true;
            for (int i = t + 1; i < n; ++i)
                if (a[i][t] != 0) {
                    addmul_row(i, t, -(a[i][t] / a[t][t]));
                    if (a[i][t] != 0)
                        clean = false;
                }
            for (int j = t + 1; j < n; ++j)
                if (a[t][j] != 0) {
                    addmul_col(j, t, -(a[t][j] / a[t][t]));
                    if (a[t][j] != 0)
                        clean = false;
                }
            if (!clean)
                continue;
            // enforce divisibility of the trailing block by a[t][t]
            bool divides_all = true;
            for (int i = t + 1; i < n && divides_all; ++i)
                for (int j = t + 1; j < n && divides_all; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        addmul_row(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all)
                break;
        }
    }
    for (int t = 0; t < n; ++t)
        if (a[t][t] < 0) {
            for (int c = 0; c < n; ++c) a[t][c] = -a[t][c];
            for (int c = 0; c < n; ++c) u[t][c] = -u[t][c];
        }
    return {u, a, v};
}

IMat hermite_row_basis(IMat rows, int r) {
    // Euclidean row reduction to an upper-triangular basis.
    const int m = static_cast<int>(rows.size());
    int top = 0;
    for (int c = 0; c < r && top < m; ++c) {
        while (true) {
            int p = -1;
            for (int i = top; i < m; ++i)
                if (rows[i][c] != 0 && (p < 0 || std::abs(rows[i][c]) < std::abs(rows[p][c])))
                    p = i;
            if (p < 0)
                break;
            std::swap(rows[p], rows[top]);
            bool reduced = true;
            for (int i = top + 1; i < m; ++i) {
                if (rows[i][c] == 0)
                    continue;
                const long f = rows[i][c] / rows[top][c];
                for (int j = 0; j < r; ++j) rows[i][j] -= f * rows[top][j];
                if (rows[i][c] != 0)
                    reduced = false;
            }
            if (reduced)
                break;
        }
        if (rows[top][c] != 0)
            ++top;
    }
    if (top != r)
        throw computation_error("generating set does not span a full-rank lattice");
    rows.resize(r);
    for (int i = 0; i < r; ++i)
        if (rows[i][i] < 0)
            for (int j = 0; j < r; ++j) rows[i][j] = -rows[i][j];
    return rows;
}

} // namespace weylzeta
