#include "qpw/sparse.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpw {

SparseMat::SparseMat(int rows, int cols, std::vector<Triplet> entries)
    : rows_(rows), cols_(cols), ent_(std::move(entries)) {
    canonicalize();
}

void SparseMat::canonicalize() {
    for (const Triplet& t : ent_) {
        if (t.row < 0 || t.row >= rows_ || t.col < 0 || t.col >= cols_)
            throw argument_error("sparse entry out of range");
    }
    std::sort(ent_.begin(), ent_.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Triplet> out;
    out.reserve(ent_.size());
    for (Triplet& t : ent_) {
        if (!out.empty() && out.back().row == t.row && out.back().col == t.col)
            out.back().val += t.val;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Triplet& t) { return t.val == 0; });
    ent_ = std::move(out);
}

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    m.ent_.reserve(n);
    for (int i = 0; i < n; ++i) m.ent_.push_back({i, i, Int(1)});
    return m;
}

Int SparseMat::at(int r, int c) const {
    auto it = std::lower_bound(ent_.begin(), ent_.end(), std::pair<int, int>(r, c),
                               [](const Triplet& t, const std::pair<int, int>& k) {
                                   return t.row != k.first ? t.row < k.first : t.col < k.second;
                               });
    if (it != ent_.end() && it->row == r && it->col == c) return it->val;
    return Int(0);
}

void SparseMat::set(int r, int c, const Int& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw argument_error("sparse set out of range");
    auto it = std::lower_bound(ent_.begin(), ent_.end(), std::pair<int, int>(r, c),
                               [](const Triplet& t, const std::pair<int, int>& k) {
                                   return t.row != k.first ? t.row < k.first : t.col < k.second;
                               });
    if (it != ent_.end() && it->row == r && it->col == c) {
        if (v == 0)
            ent_.erase(it);
        else
            it->val = v;
    } else if (v != 0) {
        ent_.insert(it, {r, c, v});
    }
}

SparseMat SparseMat::transpose() const {
    SparseMat m(cols_, rows_);
    m.ent_.reserve(ent_.size());
    for (const Triplet& t : ent_) m.ent_.push_back({t.col, t.row, t.val});
    m.canonicalize();
    return m;
}

SparseMat SparseMat::negated() const {
    SparseMat m = *this;
    for (Triplet& t : m.ent_) t.val = -t.val;
    return m;
}

SparseMat SparseMat::scaled(const Int& k) const {
    SparseMat m = *this;
    if (k == 0) return SparseMat(rows_, cols_);
    for (Triplet& t : m.ent_) t.val *= k;
    return m;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw argument_error("sparse add: shape mismatch");
    SparseMat m(a.rows_, a.cols_);
    m.ent_ = a.ent_;
    m.ent_.insert(m.ent_.end(), b.ent_.begin(), b.ent_.end());
    m.canonicalize();
    return m;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + b.negated(); }

bool operator==(const SparseMat& a, const SparseMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    if (a.ent_.size() != b.ent_.size()) return false;
    for (size_t i = 0; i < a.ent_.size(); ++i) {
        if (a.ent_[i].row != b.ent_[i].row || a.ent_[i].col != b.ent_[i].col ||
            a.ent_[i].val != b.ent_[i].val)
            return false;
    }
    return true;
}

SparseMat SparseMat::select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    std::vector<int> rmap(rows_, -1), cmap(cols_, -1);
    for (size_t i = 0; i < row_idx.size(); ++i) rmap[row_idx[i]] = static_cast<int>(i);
    for (size_t j = 0; j < col_idx.size(); ++j) cmap[col_idx[j]] = static_cast<int>(j);
    SparseMat m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (const Triplet& t : ent_) {
        if (rmap[t.row] >= 0 && cmap[t.col] >= 0) m.ent_.push_back({rmap[t.row], cmap[t.col], t.val});
    }
    m.canonicalize();
    return m;
}

void SparseMat::place(const SparseMat& block, int row_off, int col_off, int sign) {
    for (const Triplet& t : block.entries()) {
        int r = t.row + row_off, c = t.col + col_off;
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw argument_error("place out of range");
        ent_.push_back({r, c, sign < 0 ? Int(-t.val) : t.val});
    }
    canonicalize();
}

bool SparseMat::is_signed_bijection_on(const std::vector<bool>& rset,
                                       const std::vector<bool>& cset) const {
    std::vector<int> row_hits(rows_, 0), col_hits(cols_, 0);
    for (const Triplet& t : ent_) {
        bool rin = rset[t.row], cin = cset[t.col];
        if (!rin && !cin) continue;
        // any entry touching the region must be a +-1 pairing two region elements
        if (!rin || !cin) return false;
        if (t.val != 1 && t.val != -1) return false;
        row_hits[t.row]++;
        col_hits[t.col]++;
    }
    for (int i = 0; i < rows_; ++i)
        if (rset[i] && row_hits[i] != 1) return false;
    for (int j = 0; j < cols_; ++j)
        if (cset[j] && col_hits[j] != 1) return false;
    return true;
}

namespace {

// Row-major CSR view for the multiply kernels.
struct Csr {
    std::vector<int> start;
    const std::vector<Triplet>* ent;
};

Csr make_csr(const SparseMat& m) {
    Csr c;
    c.ent = &m.entries();
    c.start.assign(m.rows() + 1, 0);
    for (const Triplet& t : m.entries()) c.start[t.row + 1]++;
    for (int i = 0; i < m.rows(); ++i) c.start[i + 1] += c.start[i];
    return c;
}

// One output row of a*b, canonical column order.
void product_row(const Csr& ca, const SparseMat& b, const Csr& cb, int i,
                 std::vector<Triplet>& out) {
    std::map<int, Int> acc;
    const auto& ea = *ca.ent;
    const auto& eb = *cb.ent;
    for (int p = ca.start[i]; p < ca.start[i + 1]; ++p) {
        int k = ea[p].col;
        for (int q = cb.start[k]; q < cb.start[k + 1]; ++q) {
            acc[eb[q].col] += ea[p].val * eb[q].val;
        }
    }
    for (auto& [j, v] : acc)
        if (v != 0) out.push_back({i, j, std::move(v)});
}

}  // namespace

SparseMat mul_serial(const SparseMat& a, const SparseMat& b) {
    if (a.cols() != b.rows()) throw argument_error("sparse mul: shape mismatch");
    Csr ca = make_csr(a), cb = make_csr(b);
    std::vector<Triplet> out;
    for (int i = 0; i < a.rows(); ++i) product_row(ca, b, cb, i, out);
    return SparseMat(a.rows(), b.cols(), std::move(out));
}

SparseMat mul_parallel(const SparseMat& a, const SparseMat& b) {
    if (a.cols() != b.rows()) throw argument_error("sparse mul: shape mismatch");
    Csr ca = make_csr(a), cb = make_csr(b);
    std::vector<std::vector<Triplet>> rows(a.rows());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int i = 0; i < a.rows(); ++i) product_row(ca, b, cb, i, rows[i]);
    std::vector<Triplet> out;
    for (auto& r : rows) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return SparseMat(a.rows(), b.cols(), std::move(out));
}

SparseMat mul(const SparseMat& a, const SparseMat& b) {
    // Row results are independent and assembled in row order, so both kernels
    // return identical canonical triplets.
    if (static_cast<long>(a.entries().size()) + static_cast<long>(b.entries().size()) > 4096)
        return mul_parallel(a, b);
    return mul_serial(a, b);
}

}  // namespace qpw
