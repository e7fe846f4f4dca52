#pragma once

#include <cstdint>
#include <vector>

#include "qpw/numeric.hpp"

namespace qpw {

// One nonzero entry of a sparse integer matrix.
struct Triplet {
    int row = 0;
    int col = 0;
    Int val;
};

// Sparse matrix over Z with canonically ordered triplet storage
// (row-major, i.e. target-major for morphisms). No explicit zeros.
class SparseMat {
  public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {}
    SparseMat(int rows, int cols, std::vector<Triplet> entries);

    static SparseMat identity(int n);
    static SparseMat zero(int rows, int cols) { return SparseMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Triplet>& entries() const { return ent_; }
    bool is_zero() const { return ent_.empty(); }

    Int at(int r, int c) const;  // 0 when absent
    void set(int r, int c, const Int& v);

    SparseMat transpose() const;
    SparseMat negated() const;
    SparseMat scaled(const Int& k) const;

    friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
    friend bool operator==(const SparseMat& a, const SparseMat& b);

    // Sub-matrix on the given row/column index sets (order preserved).
    SparseMat select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    // Writes `block` at the given offset; entries must land inside this matrix.
    void place(const SparseMat& block, int row_off, int col_off, int sign = 1);

    // True iff, restricted to rows in `rset` and cols in `cset`, the matrix is a
    // bijection with entries +-1 and there are no other nonzeros in those rows/cols.
    bool is_signed_bijection_on(const std::vector<bool>& rset, const std::vector<bool>& cset) const;

    void canonicalize();  // sort triplets, drop zeros, merge duplicates

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Triplet> ent_;
};

// Matrix product over Z. `mul_serial` is the reference kernel; `mul` dispatches
// to the OpenMP row-partitioned kernel above a size threshold and must agree
// with the reference bit for bit.
SparseMat mul_serial(const SparseMat& a, const SparseMat& b);
SparseMat mul_parallel(const SparseMat& a, const SparseMat& b);
SparseMat mul(const SparseMat& a, const SparseMat& b);

}  // namespace qpw
