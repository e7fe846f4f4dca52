#pragma once

#include "qpw/contraction.hpp"

namespace qpw {

// Degree-indexed family phi[r] : X^{m-r} -> X_r on a fixed complex (rows ~
// basis of X_r, cols ~ basis of X_{m-r}). m is the "dual dimension".
struct Collection {
    int m = 0;
    std::map<int, SparseMat> comp;

    SparseMat at(const ChainComplex& x, int r) const;
    bool is_zero() const;
};

Collection zero_collection(int m);
Collection add(const ChainComplex& x, const Collection& a, const Collection& b);
Collection negate(const Collection& a);
// (T phi)[r] = (-1)^{r(m-r)} phi[m-r]^T
Collection transpose_dual(const ChainComplex& x, const Collection& a);
// (delta phi)[r] = d_{r+1} phi[r+1] + (-1)^r phi[r] d_{m-r}^T ; an (m-1)-collection
Collection delta(const ChainComplex& x, const Collection& a);
// (g_% phi)[r] = g_r phi[r] g_{m-r}^T for a chain map g : X -> Y
Collection pushforward(const ChainMap& g, const Collection& a);
Rat radius(const ChainComplex& x, const Collection& a);

// Quadratic structure: psi[s] is an (n-s)-collection; the stored family must
// close, i.e. delta psi_s = psi_{s+1} + (-1)^{s+1} T psi_{s+1} with psi
// vanishing beyond the stored length.
struct QuadraticComplex {
    int n = 0;
    ChainComplex c;
    std::vector<Collection> psi;

    Collection psi_at(size_t s) const;
    Rat radius() const;
};

Diagnostics verify_quadratic(const QuadraticComplex& q);

QuadraticComplex negate(const QuadraticComplex& q);
QuadraticComplex direct_sum(const QuadraticComplex& a, const QuadraticComplex& b,
                            const std::string& lp = "l.", const std::string& rp = "r.");
// transport along a chain map keeping dimension (chain-level pushforward)
std::vector<Collection> pushforward_structure(const ChainMap& g,
                                              const std::vector<Collection>& psi);

// (1+T) psi_0 : C^{n-*} -> C as a chain map.
ChainMap duality_map(const QuadraticComplex& q);

// Attempts to certify the duality map as a controlled equivalence; the
// search budget bounds the contraction radius.
struct PoincareWitness {
    bool ok = false;
    EquivalenceCert cert;
    ContractionFailure failure;
};
PoincareWitness is_poincare(const QuadraticComplex& q, const Rat& budget);

// The (n-1)-dimensional boundary: desuspended cone of the duality map with
// the induced structure; Poincare for every input.
QuadraticComplex algebraic_boundary(const QuadraticComplex& q);

// Quadratic pair of dimension n: boundary structure psi (dim n-1) on C and
// relative collections delta_psi (dim n) on the ambient A, tied by
//   delta(dpsi_s) + (-1)^{s+1} f psi_s f^T = dpsi_{s+1} + (-1)^{s+1} T dpsi_{s+1}.
struct QuadraticPair {
    int n = 0;
    ChainMap f;  // boundary complex -> ambient complex
    std::vector<Collection> delta_psi;
    std::vector<Collection> psi;

    const ChainComplex& boundary() const { return f.source; }
    const ChainComplex& ambient() const { return f.target; }
    QuadraticComplex boundary_complex() const { return {n - 1, f.source, psi}; }
    Rat radius() const;
};

Diagnostics verify_pair(const QuadraticPair& p);

// Thom construction: the quotient quadratic complex on cone(f).
QuadraticComplex thom_complex(const QuadraticPair& p);

// Thickening: the canonical Poincare pair (boundary(q) -> q^{n-*}, (0, dpsi)).
QuadraticPair thickening_pair(const QuadraticComplex& q);

// A quadratic complex regarded as a pair with empty boundary.
QuadraticPair pair_with_empty_boundary(const QuadraticComplex& q);

// Union along the common boundary. P1 carries the boundary structure, P2 must
// carry its negation; mismatch raises argument_error naming the component.
QuadraticComplex glue_union(const QuadraticPair& p1, const QuadraticPair& p2);

struct BordismCert {
    QuadraticComplex left, right;
    QuadraticPair pair;  // boundary = left (+) -right, prefixes "l." / "r."
};

Diagnostics verify_bordism(const BordismCert& cert, const Rat& eps);

BordismCert product_bordism(const QuadraticComplex& q);

// Bordism between q and its exact pushforward along cert.forward.
BordismCert bordism_along(const QuadraticComplex& q, const EquivalenceCert& cert);

// Masked search for relative collections making (f, ?, psi) a valid pair.
std::optional<std::vector<Collection>> solve_relative_structure(const ChainMap& f,
                                                                const std::vector<Collection>& psi,
                                                                int pair_dim,
                                                                const Rat& entry_budget,
                                                                bool masked);

struct SurgeryResult {
    QuadraticComplex result;
    BordismCert bordism;
    bool connected = false;  // zero modules below the middle degree
    Rat achieved;            // bordism radius achieved
};

// Killsdegrees below ceil(n/2) by unimodular eliminations; bordism by exact
// pushforward. Reports the best achieved bound when eps cannot be met.
SurgeryResult surger_below_middle(const QuadraticComplex& q, const Rat& eps);

// --- forms ---

struct QuadraticForm {
    SpacePtr space;
    int location = 0;
    SparseMat matrix;  // k x k integer matrix, no symmetry assumed

    int rank() const { return matrix.rows(); }
    SparseMat symmetrization() const { return matrix + matrix.transpose(); }
    bool is_poincare() const;
    QuadraticComplex as_complex(const std::string& prefix = "e") const;  // n = 0 model
};

QuadraticForm hyperbolic_form(SpacePtr space, int location);
QuadraticForm e8_form(SpacePtr space, int location);
QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b);

// Signature of the symmetrized matrix over Q; argument error when degenerate.
int signature(const QuadraticForm& f);
// Democratic invariant of the mod-2 quadratic refinement v -> v^T M v;
// majority value over all vectors, ties resolved to 0.
int arf(const QuadraticForm& f);

}  // namespace qpw
