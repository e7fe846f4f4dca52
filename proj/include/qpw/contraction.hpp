#pragma once

#include "qpw/chain.hpp"

namespace qpw {

struct ContractionFailure {
    int degree = 0;
    int location = -1;  // point index where the search stalled, -1 if global
    std::string detail;
};

struct ContractionResult {
    std::optional<ChainHomotopy> s;
    ContractionFailure failure;  // meaningful when !s
    bool ok() const { return s.has_value(); }
};

// Searches for s with radius(s) <= budget and every nonzero entry of
// 1 - (d s + s d) involving a basis element located outside
// inner_neighborhood(r, budget). Degreewise back-substitution, one Smith
// solve per (degree, source location); sound but not complete.
ContractionResult find_contraction_over(const ChainComplex& c, const Region& r, const Rat& budget);

// Exact check of the contract above for an arbitrary candidate.
bool verify_contraction_over(const ChainComplex& c, const Region& r, const Rat& budget,
                             const ChainHomotopy& s, std::string* why = nullptr);

// Defect 1 - (d s + s d) at the given degree.
SparseMat contraction_defect(const ChainComplex& c, const ChainHomotopy& s, int degree);

// Equivalence certificate between source and target of f extracted from a
// contraction of cone(f) (blocks g = s21, homotopies -s11 and s22).
EquivalenceCert cert_from_cone_contraction(const ChainMap& f, const ConeResult& cone,
                                           const ChainHomotopy& s);

}  // namespace qpw
