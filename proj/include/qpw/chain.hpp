#pragma once

#include <map>
#include <optional>

#include "qpw/geom.hpp"

namespace qpw {

// Bounded chain complex of geometric modules; differential drops degree by 1
// and satisfies d*d = 0 exactly.
class ChainComplex {
  public:
    ChainComplex() = default;
    ChainComplex(SpacePtr space, std::map<int, GeomModule> modules,
                 std::map<int, SparseMat> differentials);

    const SpacePtr& space() const { return space_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool is_zero_complex() const;

    const GeomModule& module_at(int r) const;       // zero module outside [lo, hi]
    GeomMorphism differential_at(int r) const;      // d_r : C_r -> C_{r-1}
    const SparseMat& dmat(int r) const;

    int rank_at(int r) const { return module_at(r).rank(); }
    int total_rank() const;
    int degree_count() const;  // number of degrees with nonzero module

    Rat radius() const;
    bool supported_in(const Region& r) const;
    Region support() const;

    void check_d_squared() const;  // throws argument_error on failure

    static ChainComplex zero(SpacePtr space);

  private:
    SpacePtr space_;
    int lo_ = 0, hi_ = -1;  // empty when hi < lo
    std::map<int, GeomModule> modules_;
    std::map<int, SparseMat> diff_;  // d_r for lo < r <= hi
    mutable std::map<int, GeomModule> zero_cache_;
};

struct ChainMap {
    ChainComplex source, target;
    std::map<int, SparseMat> comps;  // f_r : source_r -> target_r, zero if absent

    GeomMorphism component_at(int r) const;
    SparseMat cmat(int r) const;

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(ChainComplex src, ChainComplex tgt);
    ChainMap negated() const;
};

Rat radius(const ChainMap& f);
bool verify_chain_map(const ChainMap& f, std::string* why = nullptr);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
bool equal_maps(const ChainMap& f, const ChainMap& g);

// Degree-raising collection s_r : C_r -> D_{r+1} between complexes on the
// same modules pattern; used both for homotopies and contractions.
struct ChainHomotopy {
    ChainComplex on;                 // the complex the homotopy lives on
    std::map<int, SparseMat> comps;  // s_r : on_r -> on_{r+1}

    SparseMat cmat(int r) const;
    GeomMorphism component_at(int r) const;
};

Rat radius(const ChainHomotopy& s);

// d s + s d = f - g, all on the same complex pair.
bool verify_homotopy(const ChainHomotopy& s, const ChainMap& f, const ChainMap& g,
                     std::string* why = nullptr);

// Controlled chain equivalence witness: forward/backward maps and homotopies
//   d h_t + h_t d = forward.backward - 1   (on target)
//   d h_s + h_s d = backward.forward - 1   (on source)
struct EquivalenceCert {
    ChainMap forward;   // X -> Y
    ChainMap backward;  // Y -> X
    ChainHomotopy h_target;  // on Y
    ChainHomotopy h_source;  // on X
    Rat bound;               // recorded radius bound

    const ChainComplex& src() const { return forward.source; }
    const ChainComplex& tgt() const { return forward.target; }
};

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> messages;
    void fail(const std::string& m) {
        ok = false;
        messages.push_back(m);
    }
};

Diagnostics verify_equivalence(const EquivalenceCert& cert);

EquivalenceCert identity_cert(const ChainComplex& c);
EquivalenceCert compose_certs(const EquivalenceCert& second, const EquivalenceCert& first);
EquivalenceCert invert_cert(const EquivalenceCert& cert);
EquivalenceCert iso_cert(const ChainMap& f, const ChainMap& f_inv);

// --- constructions ---

// cone(f)_r = target_r + source_{r-1}, d = [[d_T, f],[0, -d_S]].
struct ConeResult {
    ChainComplex cone;
    // offsets of the two summands inside each cone degree
    std::map<int, int> target_off, source_off;
};
ConeResult mapping_cone(const ChainMap& f);

// C^{n-*}: degree r module is C_{n-r} (same basis, dual labels),
// differential (-1)^r d_{n-r+1}^T.
ChainComplex dual_complex(const ChainComplex& c, int n);

// Canonical iso C -> (C^{n-*})^{n-*} (signs (-1)^{(n+1)r}).
ChainMap double_dual_iso(const ChainComplex& c, int n);

// Maximal based subcomplex spanned by basis whose d-closure stays in R,
// with based quotient; inclusion and projection are radius-0 chain maps.
struct SubQuotient {
    ChainComplex sub, quot;
    ChainMap inclusion, projection;
    // per degree: indices of sub/quot basis inside the original module
    std::map<int, std::vector<int>> sub_indices, quot_indices;
};
SubQuotient max_subcomplex_and_quotient(const ChainComplex& c, const Region& r);

// One Gaussian elimination step: the differential block from the given
// source basis indices (degree r0) to the target indices (degree r0-1) must
// be unimodular; returns the smaller complex and the equivalence.
struct Elimination {
    ChainComplex reduced;
    EquivalenceCert cert;  // reduced <-> original; forward: original -> reduced
    std::map<int, std::vector<int>> kept;  // per degree, original indices kept
};
std::optional<Elimination> eliminate_block(const ChainComplex& c, int r0,
                                           const std::vector<int>& src_idx,
                                           const std::vector<int>& tgt_idx,
                                           std::string* why = nullptr);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b, const std::string& lp,
                        const std::string& rp);

// The complex C with every module label prefixed (fresh copy, same geometry).
ChainComplex relabel(const ChainComplex& c, const std::string& prefix);

}  // namespace qpw
