#include "qpw/contraction.hpp"

#include <algorithm>
#include <map>

#include "qpw/snf.hpp"

namespace qpw {

SparseMat contraction_defect(const ChainComplex& c, const ChainHomotopy& s, int degree) {
    SparseMat ds = mul(c.differential_at(degree + 1).mat, s.cmat(degree));
    SparseMat sd = mul(s.cmat(degree - 1), c.differential_at(degree).mat);
    return SparseMat::identity(c.rank_at(degree)) - (ds + sd);
}

bool verify_contraction_over(const ChainComplex& c, const Region& r, const Rat& budget,
                             const ChainHomotopy& s, std::string* why) {
    if (radius(s) > budget) {
        if (why) *why = "contraction radius exceeds budget";
        return false;
    }
    Region protected_region = inner_neighborhood(r, budget);
    for (int q = c.lo(); q <= c.hi(); ++q) {
        SparseMat defect = contraction_defect(c, s, q);
        const GeomModule& m = c.module_at(q);
        for (const Triplet& t : defect.entries()) {
            if (protected_region.contains(m.location(t.row)) &&
                protected_region.contains(m.location(t.col))) {
                if (why)
                    *why = "defect entry inside protected region at degree " + std::to_string(q);
                return false;
            }
        }
    }
    return true;
}

namespace {

struct MaskedSolveSpec {
    bool use_masks = false;
    Rat budget;
};

// Sequential bottom-up solve of d s + s d = 1 with defects allowed only on
// basis pairs not both inside `enforce`. Returns failure degree/location.
ContractionResult solve_contraction(const ChainComplex& c, const Region& enforce,
                                    const MaskedSolveSpec& spec) {
    const ControlSpace& space = *c.space();
    ChainHomotopy s{c, {}};
    for (int q = c.lo(); q < c.hi(); ++q) {
        const GeomModule& src = c.module_at(q);
        const GeomModule& up = c.module_at(q + 1);
        if (src.rank() == 0 || up.rank() == 0) continue;
        SparseMat d_up = c.differential_at(q + 1).mat;
        // residual targets: e_j - s_{q-1} d_q e_j
        SparseMat resid = SparseMat::identity(src.rank()) -
                          mul(s.cmat(q - 1), c.differential_at(q).mat);
        // enforced rows at this degree
        std::vector<int> rows;
        for (int i = 0; i < src.rank(); ++i)
            if (enforce.contains(src.location(i))) rows.push_back(i);
        // group solved columns by source location
        std::map<int, std::vector<int>> by_loc;
        for (int j = 0; j < src.rank(); ++j)
            if (enforce.contains(src.location(j))) by_loc[src.location(j)].push_back(j);
        SparseMat smat(up.rank(), src.rank());
        for (const auto& [loc, cols] : by_loc) {
            std::vector<int> allowed;
            for (int k = 0; k < up.rank(); ++k) {
                if (!spec.use_masks || space.dist(up.location(k), loc) <= spec.budget)
                    allowed.push_back(k);
            }
            SparseMat a = d_up.select(rows, allowed);
            SparseMat b = resid.select(rows, cols);
            auto x = solve(a, b);
            if (!x) {
                ContractionResult fail;
                fail.failure = {q, loc, "no integral solution at degree " + std::to_string(q)};
                return fail;
            }
            for (const Triplet& t : x->entries()) smat.set(allowed[t.row], cols[t.col], t.val);
        }
        if (!smat.is_zero()) s.comps[q] = std::move(smat);
    }
    ContractionResult out;
    out.s = std::move(s);
    return out;
}

}  // namespace

ContractionResult find_contraction_over(const ChainComplex& c, const Region& r,
                                        const Rat& budget) {
    if (budget < 0) throw argument_error("find_contraction_over: budget must be >= 0");
    if (c.is_zero_complex()) {
        ContractionResult out;
        out.s = ChainHomotopy{c, {}};
        return out;
    }
    Region protected_region = inner_neighborhood(r, budget);
    // enforce defect vanishing on a slightly fattened region so the unsolved
    // top-degree identity cannot leak defects back into the protected region
    Region enforce = outer_neighborhood(protected_region, c.radius());

    std::string why;
    // pass 1: unmasked entries (cheap when it already lands within budget)
    ContractionResult free_try = solve_contraction(c, enforce, {false, budget});
    if (free_try.ok() && verify_contraction_over(c, r, budget, *free_try.s, &why)) return free_try;
    // pass 2: entries masked to the budget ball
    ContractionResult masked = solve_contraction(c, enforce, {true, budget});
    if (masked.ok()) {
        if (verify_contraction_over(c, r, budget, *masked.s, &why)) return masked;
        ContractionResult fail;
        fail.failure = {c.hi(), -1, "solution found but rejected: " + why};
        return fail;
    }
    return masked;
}

EquivalenceCert cert_from_cone_contraction(const ChainMap& f, const ConeResult& cone,
                                           const ChainHomotopy& s) {
    const ChainComplex& src = f.source;
    const ChainComplex& tgt = f.target;
    // cone_r = tgt_r + src_{r-1}; s_r : cone_r -> cone_{r+1} in blocks
    //   [ s11 : tgt_r -> tgt_{r+1}    s12 : src_{r-1} -> tgt_{r+1} ]
    //   [ s21 : tgt_r -> src_r        s22 : src_{r-1} -> src_r     ]
    ChainMap back{tgt, src, {}};
    ChainHomotopy h_t{tgt, {}};
    ChainHomotopy h_s{src, {}};
    int lo = cone.cone.lo() - 1, hi = cone.cone.hi() + 1;
    for (int r = lo; r <= hi; ++r) {
        SparseMat sm = s.cmat(r);
        if (sm.is_zero()) continue;
        std::vector<int> tgt_rows(tgt.rank_at(r + 1)), src_rows(src.rank_at(r));
        for (int i = 0; i < tgt.rank_at(r + 1); ++i) tgt_rows[i] = i;
        for (int i = 0; i < src.rank_at(r); ++i) src_rows[i] = tgt.rank_at(r + 1) + i;
        std::vector<int> tgt_cols(tgt.rank_at(r)), src_cols(src.rank_at(r - 1));
        for (int j = 0; j < tgt.rank_at(r); ++j) tgt_cols[j] = j;
        for (int j = 0; j < src.rank_at(r - 1); ++j) src_cols[j] = tgt.rank_at(r) + j;
        SparseMat s11 = sm.select(tgt_rows, tgt_cols);
        SparseMat s21 = sm.select(src_rows, tgt_cols);
        SparseMat s22 = sm.select(src_rows, src_cols);
        if (!s21.is_zero()) back.comps[r] = std::move(s21);
        SparseMat ht = s11.negated();
        if (!ht.is_zero()) h_t.comps[r] = std::move(ht);
        if (!s22.is_zero()) h_s.comps[r - 1] = std::move(s22);
    }
    EquivalenceCert cert;
    cert.forward = f;
    cert.backward = std::move(back);
    cert.h_target = std::move(h_t);
    cert.h_source = std::move(h_s);
    cert.bound = std::max({radius(cert.forward), radius(cert.backward), radius(cert.h_target),
                           radius(cert.h_source)});
    return cert;
}

}  // namespace qpw
