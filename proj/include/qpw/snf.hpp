#pragma once

#include <optional>

#include "qpw/sparse.hpp"

namespace qpw {

// Smith normal form U*A*V = S with U, V unimodular and S diagonal,
// S(0,0) | S(1,1) | ... Dense working copies; intended for the small
// per-degree matrices of this library.
struct Snf {
    SparseMat u, v, s;
    int rank = 0;
    std::vector<Int> diag;  // the nonzero diagonal of S
};

Snf smith_normal_form(const SparseMat& a);

// One solution x of A x = b over Z, if any.
std::optional<SparseMat> solve(const SparseMat& a, const SparseMat& b);
std::optional<SparseMat> solve(const Snf& f, int acols, const SparseMat& b);

// |det A| via SNF; argument must be square.
Int abs_det(const SparseMat& a);

// Exact integer inverse when A is square unimodular.
std::optional<SparseMat> inverse(const SparseMat& a);

}  // namespace qpw
