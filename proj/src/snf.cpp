#include "qpw/snf.hpp"

#include <algorithm>

namespace qpw {

namespace {

using Dense = std::vector<std::vector<Int>>;

Dense to_dense(const SparseMat& m) {
    Dense d(m.rows(), std::vector<Int>(m.cols(), Int(0)));
    for (const Triplet& t : m.entries()) d[t.row][t.col] = t.val;
    return d;
}

SparseMat from_dense(const Dense& d, int rows, int cols) {
    std::vector<Triplet> ent;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (d[i][j] != 0) ent.push_back({i, j, d[i][j]});
    return SparseMat(rows, cols, std::move(ent));
}

void row_op(Dense& a, Dense& u, int i, int j, const Int& q) {  // R_i -= q R_j
    for (size_t k = 0; k < a[i].size(); ++k) a[i][k] -= q * a[j][k];
    for (size_t k = 0; k < u[i].size(); ++k) u[i][k] -= q * u[j][k];
}

void col_op(Dense& a, Dense& v, int i, int j, const Int& q) {  // C_i -= q C_j
    for (auto& row : a) row[i] -= q * row[j];
    for (auto& row : v) row[i] -= q * row[j];
}

void row_swap(Dense& a, Dense& u, int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
}

void col_swap(Dense& a, Dense& v, int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
}

}  // namespace

Snf smith_normal_form(const SparseMat& a) {
    const int m = a.rows(), n = a.cols();
    Dense s = to_dense(a);
    Dense u(m, std::vector<Int>(m, Int(0))), v(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < m; ++i) u[i][i] = 1;
    for (int j = 0; j < n; ++j) v[j][j] = 1;

    int t = 0;
    while (t < m && t < n) {
        // find pivot of least absolute value in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (s[i][j] != 0 && (pi < 0 || cmpabs(s[i][j].get_mpz_t(), s[pi][pj].get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(s, u, t, pi);
        col_swap(s, v, t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (s[i][t] == 0) continue;
                Int q = s[i][t] / s[t][t];
                row_op(s, u, i, t, q);
                if (s[i][t] != 0) {  // remainder smaller than pivot: swap up, restart
                    row_swap(s, u, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (s[t][j] == 0) continue;
                Int q = s[t][j] / s[t][t];
                col_op(s, v, j, t, q);
                if (s[t][j] != 0) {
                    col_swap(s, v, t, j);
                    clean = false;
                }
            }
        }
        // divisibility fix-up: pivot must divide everything below-right
        bool again = false;
        for (int i = t + 1; i < m && !again; ++i)
            for (int j = t + 1; j < n && !again; ++j)
                if (s[i][j] % s[t][t] != 0) {
                    // add row i to row t and redo this pivot
                    for (int k = 0; k < n; ++k) s[t][k] += s[i][k];
                    for (int k = 0; k < m; ++k) u[t][k] += u[i][k];
                    again = true;
                }
        if (again) continue;
        if (s[t][t] < 0) {
            for (int k = 0; k < n; ++k) s[t][k] = -s[t][k];
            for (int k = 0; k < m; ++k) u[t][k] = -u[t][k];
        }
        ++t;
    }

    Snf f;
    f.u = from_dense(u, m, m);
    f.v = from_dense(v, n, n);
    f.s = from_dense(s, m, n);
    f.rank = t;
    for (int i = 0; i < t; ++i) f.diag.push_back(s[i][i]);
    return f;
}

std::optional<SparseMat> solve(const Snf& f, int acols, const SparseMat& b) {
    // A x = b  with  U A V = S  =>  x = V y, S y = U b.
    SparseMat ub = mul(f.u, b);
    const int n = acols;
    SparseMat y(n, b.cols());
    for (const Triplet& t : ub.entries()) {
        if (t.row >= f.rank) return std::nullopt;  // inconsistent
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.val.get_mpz_t(), f.diag[t.row].get_mpz_t());
        if (r != 0) return std::nullopt;  // no integral solution
        y.set(t.row, t.col, q);
    }
    return mul(f.v, y);
}

std::optional<SparseMat> solve(const SparseMat& a, const SparseMat& b) {
    if (a.rows() != b.rows()) throw argument_error("solve: shape mismatch");
    Snf f = smith_normal_form(a);
    return solve(f, a.cols(), b);
}

Int abs_det(const SparseMat& a) {
    if (a.rows() != a.cols()) throw argument_error("abs_det: square matrix required");
    Snf f = smith_normal_form(a);
    if (f.rank < a.rows()) return Int(0);
    Int d(1);
    for (const Int& x : f.diag) d *= x;
    return d;
}

std::optional<SparseMat> inverse(const SparseMat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    return solve(a, SparseMat::identity(a.rows()));
}

}  // namespace qpw
