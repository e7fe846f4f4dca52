#include "qpw/chain.hpp"

#include <algorithm>

namespace qpw {

ChainComplex::ChainComplex(SpacePtr space, std::map<int, GeomModule> modules,
                           std::map<int, SparseMat> differentials)
    : space_(std::move(space)), modules_(std::move(modules)), diff_(std::move(differentials)) {
    // trim zero-rank fringe degrees
    for (auto it = modules_.begin(); it != modules_.end();) {
        if (it->second.rank() == 0)
            it = modules_.erase(it);
        else
            ++it;
    }
    if (modules_.empty()) {
        lo_ = 0;
        hi_ = -1;
        diff_.clear();
        return;
    }
    lo_ = modules_.begin()->first;
    hi_ = modules_.rbegin()->first;
    for (int r = lo_; r <= hi_; ++r) {
        if (!modules_.count(r)) modules_.emplace(r, GeomModule::zero(space_));
        if (!same_space(modules_.at(r).space(), space_))
            throw argument_error("chain module on wrong space");
    }
    for (auto it = diff_.begin(); it != diff_.end();) {
        int r = it->first;
        const GeomModule& src = module_at(r);
        const GeomModule& tgt = module_at(r - 1);
        if (it->second.rows() != tgt.rank() || it->second.cols() != src.rank())
            throw argument_error("differential shape mismatch at degree " + std::to_string(r));
        if (it->second.is_zero())
            it = diff_.erase(it);
        else
            ++it;
    }
    check_d_squared();
}

ChainComplex ChainComplex::zero(SpacePtr space) { return ChainComplex(std::move(space), {}, {}); }

bool ChainComplex::is_zero_complex() const { return hi_ < lo_; }

const GeomModule& ChainComplex::module_at(int r) const {
    auto it = modules_.find(r);
    if (it != modules_.end()) return it->second;
    auto z = zero_cache_.find(r);
    if (z == zero_cache_.end()) z = zero_cache_.emplace(r, GeomModule::zero(space_)).first;
    return z->second;
}

const SparseMat& ChainComplex::dmat(int r) const {
    static const SparseMat empty;
    auto it = diff_.find(r);
    if (it != diff_.end()) return it->second;
    // shape-correct zero is materialized by differential_at; raw access returns empty
    return empty;
}

GeomMorphism ChainComplex::differential_at(int r) const {
    const GeomModule& src = module_at(r);
    const GeomModule& tgt = module_at(r - 1);
    auto it = diff_.find(r);
    if (it != diff_.end()) return {src, tgt, it->second};
    return GeomMorphism::zero(src, tgt);
}

int ChainComplex::total_rank() const {
    int n = 0;
    for (const auto& [r, m] : modules_) n += m.rank();
    return n;
}

int ChainComplex::degree_count() const {
    int n = 0;
    for (const auto& [r, m] : modules_)
        if (m.rank() > 0) ++n;
    return n;
}

Rat ChainComplex::radius() const {
    Rat out(0);
    for (const auto& [r, d] : diff_) {
        Rat rd = qpw::radius(differential_at(r));
        if (rd > out) out = rd;
    }
    return out;
}

bool ChainComplex::supported_in(const Region& r) const {
    for (const auto& [deg, m] : modules_)
        if (!m.supported_in(r)) return false;
    return true;
}

Region ChainComplex::support() const {
    std::vector<int> pts;
    for (const auto& [deg, m] : modules_)
        for (const BasisElement& b : m.basis()) pts.push_back(b.location);
    return Region(space_, std::move(pts));
}

void ChainComplex::check_d_squared() const {
    for (int r = lo_ + 2; r <= hi_ + 1; ++r) {
        auto hi_it = diff_.find(r);
        auto lo_it = diff_.find(r - 1);
        if (hi_it == diff_.end() || lo_it == diff_.end()) continue;
        if (!mul(lo_it->second, hi_it->second).is_zero())
            throw argument_error("d^2 != 0 at degree " + std::to_string(r));
    }
}

// --- chain maps ---

GeomMorphism ChainMap::component_at(int r) const {
    auto it = comps.find(r);
    if (it != comps.end()) return {source.module_at(r), target.module_at(r), it->second};
    return GeomMorphism::zero(source.module_at(r), target.module_at(r));
}

SparseMat ChainMap::cmat(int r) const {
    auto it = comps.find(r);
    if (it != comps.end()) return it->second;
    return SparseMat(target.rank_at(r), source.rank_at(r));
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    ChainMap f{c, c, {}};
    for (int r = c.lo(); r <= c.hi(); ++r)
        if (c.rank_at(r) > 0) f.comps[r] = SparseMat::identity(c.rank_at(r));
    return f;
}

ChainMap ChainMap::zero(ChainComplex src, ChainComplex tgt) {
    return {std::move(src), std::move(tgt), {}};
}

ChainMap ChainMap::negated() const {
    ChainMap f{source, target, {}};
    for (const auto& [r, m] : comps) f.comps[r] = m.negated();
    return f;
}

Rat radius(const ChainMap& f) {
    Rat out(0);
    for (const auto& [r, m] : f.comps) {
        Rat rr = radius(f.component_at(r));
        if (rr > out) out = rr;
    }
    return out;
}

bool verify_chain_map(const ChainMap& f, std::string* why) {
    if (!same_space(f.source.space(), f.target.space())) {
        if (why) *why = "source/target space mismatch";
        return false;
    }
    for (const auto& [r, m] : f.comps) {
        if (m.rows() != f.target.rank_at(r) || m.cols() != f.source.rank_at(r)) {
            if (why) *why = "component shape mismatch at degree " + std::to_string(r);
            return false;
        }
    }
    int lo = std::min(f.source.lo(), f.target.lo());
    int hi = std::max(f.source.hi(), f.target.hi());
    for (int r = lo; r <= hi + 1; ++r) {
        SparseMat lhs = mul(f.target.differential_at(r).mat, f.cmat(r));
        SparseMat rhs = mul(f.cmat(r - 1), f.source.differential_at(r).mat);
        if (!(lhs == rhs)) {
            if (why) *why = "does not commute with d at degree " + std::to_string(r);
            return false;
        }
    }
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap out{f.source, g.target, {}};
    int lo = std::min(f.source.lo(), g.target.lo());
    int hi = std::max(f.source.hi(), g.target.hi());
    for (int r = lo; r <= hi; ++r) {
        SparseMat m = mul(g.cmat(r), f.cmat(r));
        if (!m.is_zero()) out.comps[r] = std::move(m);
    }
    return out;
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
    ChainMap out{f.source, f.target, {}};
    int lo = std::min(f.source.lo(), f.target.lo());
    int hi = std::max(f.source.hi(), f.target.hi());
    for (int r = lo; r <= hi; ++r) {
        SparseMat m = f.cmat(r) + g.cmat(r);
        if (!m.is_zero()) out.comps[r] = std::move(m);
    }
    return out;
}

bool equal_maps(const ChainMap& f, const ChainMap& g) {
    int lo = std::min({f.source.lo(), f.target.lo(), g.source.lo(), g.target.lo()});
    int hi = std::max({f.source.hi(), f.target.hi(), g.source.hi(), g.target.hi()});
    for (int r = lo; r <= hi; ++r)
        if (!(f.cmat(r) == g.cmat(r))) return false;
    return true;
}

SparseMat ChainHomotopy::cmat(int r) const {
    auto it = comps.find(r);
    if (it != comps.end()) return it->second;
    return SparseMat(on.rank_at(r + 1), on.rank_at(r));
}

GeomMorphism ChainHomotopy::component_at(int r) const {
    return {on.module_at(r), on.module_at(r + 1), cmat(r)};
}

Rat radius(const ChainHomotopy& s) {
    Rat out(0);
    for (const auto& [r, m] : s.comps) {
        Rat rr = radius(s.component_at(r));
        if (rr > out) out = rr;
    }
    return out;
}

bool verify_homotopy(const ChainHomotopy& s, const ChainMap& f, const ChainMap& g,
                     std::string* why) {
    const ChainComplex& c = s.on;
    for (const auto& [r, m] : s.comps) {
        if (m.rows() != c.rank_at(r + 1) || m.cols() != c.rank_at(r)) {
            if (why) *why = "homotopy shape mismatch at degree " + std::to_string(r);
            return false;
        }
    }
    for (int r = c.lo() - 1; r <= c.hi() + 1; ++r) {
        SparseMat lhs = mul(c.differential_at(r + 1).mat, s.cmat(r)) +
                        mul(s.cmat(r - 1), c.differential_at(r).mat);
        SparseMat rhs = f.cmat(r) - g.cmat(r);
        if (!(lhs == rhs)) {
            if (why) *why = "d s + s d != f - g at degree " + std::to_string(r);
            return false;
        }
    }
    return true;
}

Diagnostics verify_equivalence(const EquivalenceCert& cert) {
    Diagnostics diag;
    std::string why;
    if (!verify_chain_map(cert.forward, &why)) diag.fail("forward: " + why);
    if (!verify_chain_map(cert.backward, &why)) diag.fail("backward: " + why);
    if (!same_space(cert.src().space(), cert.tgt().space())) diag.fail("space mismatch");
    ChainMap fg = compose(cert.forward, cert.backward);
    ChainMap gf = compose(cert.backward, cert.forward);
    if (!verify_homotopy(cert.h_target, fg, ChainMap::identity(cert.tgt()), &why))
        diag.fail("target homotopy: " + why);
    if (!verify_homotopy(cert.h_source, gf, ChainMap::identity(cert.src()), &why))
        diag.fail("source homotopy: " + why);
    Rat r = radius(cert.forward);
    r = std::max(r, radius(cert.backward));
    r = std::max(r, radius(cert.h_target));
    r = std::max(r, radius(cert.h_source));
    if (r > cert.bound) diag.fail("recorded bound " + rat_str(cert.bound) +
                                  " is below actual radius " + rat_str(r));
    return diag;
}

EquivalenceCert identity_cert(const ChainComplex& c) {
    EquivalenceCert cert;
    cert.forward = ChainMap::identity(c);
    cert.backward = ChainMap::identity(c);
    cert.h_target = {c, {}};
    cert.h_source = {c, {}};
    cert.bound = Rat(0);
    return cert;
}

EquivalenceCert compose_certs(const EquivalenceCert& second, const EquivalenceCert& first) {
    EquivalenceCert out;
    out.forward = compose(second.forward, first.forward);
    out.backward = compose(first.backward, second.backward);
    // h_Z = f2 h_Y g2 + h_Z2 ; h_X = g1 h_Y' f1 + h_X1
    out.h_target = {second.tgt(), {}};
    out.h_source = {first.src(), {}};
    const ChainComplex& z = second.tgt();
    for (int r = z.lo() - 1; r <= z.hi(); ++r) {
        SparseMat m = mul(second.forward.cmat(r + 1), mul(first.h_target.cmat(r), second.backward.cmat(r))) +
                      second.h_target.cmat(r);
        if (!m.is_zero()) out.h_target.comps[r] = std::move(m);
    }
    const ChainComplex& x = first.src();
    for (int r = x.lo() - 1; r <= x.hi(); ++r) {
        SparseMat m = mul(first.backward.cmat(r + 1), mul(second.h_source.cmat(r), first.forward.cmat(r))) +
                      first.h_source.cmat(r);
        if (!m.is_zero()) out.h_source.comps[r] = std::move(m);
    }
    out.bound = std::max(first.bound + second.bound,
                         std::max(radius(out.h_target), radius(out.h_source)));
    out.bound = std::max(out.bound, std::max(radius(out.forward), radius(out.backward)));
    return out;
}

EquivalenceCert invert_cert(const EquivalenceCert& cert) {
    EquivalenceCert out;
    out.forward = cert.backward;
    out.backward = cert.forward;
    out.h_target = cert.h_source;
    out.h_source = cert.h_target;
    out.bound = cert.bound;
    return out;
}

EquivalenceCert iso_cert(const ChainMap& f, const ChainMap& f_inv) {
    EquivalenceCert cert;
    cert.forward = f;
    cert.backward = f_inv;
    cert.h_target = {f.target, {}};
    cert.h_source = {f.source, {}};
    cert.bound = std::max(radius(f), radius(f_inv));
    return cert;
}

// --- constructions ---

ConeResult mapping_cone(const ChainMap& f) {
    const ChainComplex& src = f.source;
    const ChainComplex& tgt = f.target;
    SpacePtr space = tgt.space();
    std::map<int, GeomModule> modules;
    std::map<int, SparseMat> diffs;
    ConeResult out;
    int lo = std::min(tgt.lo(), src.lo() + 1);
    int hi = std::max(tgt.hi(), src.hi() + 1);
    for (int r = lo; r <= hi; ++r) {
        GeomModule m = tgt.module_at(r).sum(src.module_at(r - 1), "t.", "s.");
        out.target_off[r] = 0;
        out.source_off[r] = tgt.rank_at(r);
        modules.emplace(r, std::move(m));
    }
    for (int r = lo + 1; r <= hi; ++r) {
        int rows = tgt.rank_at(r - 1) + src.rank_at(r - 2);
        int cols = tgt.rank_at(r) + src.rank_at(r - 1);
        SparseMat d(rows, cols);
        d.place(tgt.differential_at(r).mat, 0, 0);
        d.place(f.cmat(r - 1), 0, tgt.rank_at(r));
        d.place(src.differential_at(r - 1).mat, tgt.rank_at(r - 1), tgt.rank_at(r), -1);
        if (!d.is_zero()) diffs[r] = std::move(d);
    }
    out.cone = ChainComplex(space, std::move(modules), std::move(diffs));
    return out;
}

ChainComplex dual_complex(const ChainComplex& c, int n) {
    std::map<int, GeomModule> modules;
    std::map<int, SparseMat> diffs;
    for (int r = n - c.hi(); r <= n - c.lo(); ++r)
        modules.emplace(r, c.module_at(n - r).dual());
    for (int r = n - c.hi() + 1; r <= n - c.lo(); ++r) {
        SparseMat d = c.differential_at(n - r + 1).mat.transpose();
        if (r % 2 != 0) d = d.negated();
        if (!d.is_zero()) diffs[r] = std::move(d);
    }
    return ChainComplex(c.space(), std::move(modules), std::move(diffs));
}

ChainMap double_dual_iso(const ChainComplex& c, int n) {
    ChainComplex dd = dual_complex(dual_complex(c, n), n);
    ChainMap f{c, dd, {}};
    for (int r = c.lo(); r <= c.hi(); ++r) {
        if (c.rank_at(r) == 0) continue;
        SparseMat m = SparseMat::identity(c.rank_at(r));
        if (((n + 1) * r) % 2 != 0) m = m.negated();
        f.comps[r] = std::move(m);
    }
    return f;
}

SubQuotient max_subcomplex_and_quotient(const ChainComplex& c, const Region& reg) {
    // keep basis elements whose d-closure stays located in reg
    std::map<int, std::vector<bool>> keep;
    for (int r = c.lo(); r <= c.hi(); ++r) {
        keep[r] = std::vector<bool>(c.rank_at(r), false);
        const GeomModule& m = c.module_at(r);
        for (int i = 0; i < m.rank(); ++i) keep[r][i] = reg.contains(m.location(i));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = c.lo() + 1; r <= c.hi(); ++r) {
            const SparseMat& d = c.dmat(r);
            for (const Triplet& t : d.entries()) {
                if (keep[r][t.col] && !keep[r - 1][t.row]) {
                    keep[r][t.col] = false;
                    changed = true;
                }
            }
        }
    }
    SubQuotient out;
    std::map<int, GeomModule> sub_mods, quot_mods;
    for (int r = c.lo(); r <= c.hi(); ++r) {
        std::vector<BasisElement> sb, qb;
        const GeomModule& m = c.module_at(r);
        for (int i = 0; i < m.rank(); ++i) {
            if (keep[r][i]) {
                out.sub_indices[r].push_back(i);
                sb.push_back(m.basis()[i]);
            } else {
                out.quot_indices[r].push_back(i);
                qb.push_back(m.basis()[i]);
            }
        }
        sub_mods.emplace(r, GeomModule(c.space(), std::move(sb)));
        quot_mods.emplace(r, GeomModule(c.space(), std::move(qb)));
    }
    std::map<int, SparseMat> sub_d, quot_d;
    for (int r = c.lo() + 1; r <= c.hi(); ++r) {
        SparseMat full = c.differential_at(r).mat;
        SparseMat ds = full.select(out.sub_indices[r - 1], out.sub_indices[r]);
        SparseMat dq = full.select(out.quot_indices[r - 1], out.quot_indices[r]);
        if (!ds.is_zero()) sub_d[r] = std::move(ds);
        if (!dq.is_zero()) quot_d[r] = std::move(dq);
    }
    out.sub = ChainComplex(c.space(), std::move(sub_mods), std::move(sub_d));
    out.quot = ChainComplex(c.space(), std::move(quot_mods), std::move(quot_d));
    out.inclusion = ChainMap{out.sub, c, {}};
    out.projection = ChainMap{c, out.quot, {}};
    for (int r = c.lo(); r <= c.hi(); ++r) {
        SparseMat inc(c.rank_at(r), out.sub.rank_at(r));
        for (size_t k = 0; k < out.sub_indices[r].size(); ++k)
            inc.set(out.sub_indices[r][k], static_cast<int>(k), Int(1));
        if (!inc.is_zero()) out.inclusion.comps[r] = std::move(inc);
        SparseMat prj(out.quot.rank_at(r), c.rank_at(r));
        for (size_t k = 0; k < out.quot_indices[r].size(); ++k)
            prj.set(static_cast<int>(k), out.quot_indices[r][k], Int(1));
        if (!prj.is_zero()) out.projection.comps[r] = std::move(prj);
    }
    return out;
}

std::optional<Elimination> eliminate_block(const ChainComplex& c, int r0,
                                           const std::vector<int>& src_idx,
                                           const std::vector<int>& tgt_idx, std::string* why) {
    if (src_idx.size() != tgt_idx.size()) {
        if (why) *why = "pivot block not square";
        return std::nullopt;
    }
    SparseMat full = c.differential_at(r0).mat;
    SparseMat alpha = full.select(tgt_idx, src_idx);
    auto q = inverse(alpha);
    if (!q || abs_det(alpha) != 1) {
        if (why) *why = "pivot block not unimodular";
        return std::nullopt;
    }
    std::vector<int> src_rest, tgt_rest;
    {
        std::vector<bool> in_src(c.rank_at(r0), false), in_tgt(c.rank_at(r0 - 1), false);
        for (int i : src_idx) in_src[i] = true;
        for (int i : tgt_idx) in_tgt[i] = true;
        for (int i = 0; i < c.rank_at(r0); ++i)
            if (!in_src[i]) src_rest.push_back(i);
        for (int i = 0; i < c.rank_at(r0 - 1); ++i)
            if (!in_tgt[i]) tgt_rest.push_back(i);
    }
    SparseMat beta = full.select(tgt_idx, src_rest);        // rest_{r0} -> V
    SparseMat gamma = full.select(tgt_rest, src_idx);       // U -> rest_{r0-1}
    SparseMat delta = full.select(tgt_rest, src_rest);
    SparseMat schur = delta - mul(gamma, mul(*q, beta));

    Elimination out;
    std::map<int, GeomModule> modules;
    std::map<int, SparseMat> diffs;
    for (int r = c.lo(); r <= c.hi(); ++r) {
        if (r == r0) {
            std::vector<BasisElement> b;
            for (int i : src_rest) b.push_back(c.module_at(r).basis()[i]);
            modules.emplace(r, GeomModule(c.space(), std::move(b)));
            out.kept[r] = src_rest;
        } else if (r == r0 - 1) {
            std::vector<BasisElement> b;
            for (int i : tgt_rest) b.push_back(c.module_at(r).basis()[i]);
            modules.emplace(r, GeomModule(c.space(), std::move(b)));
            out.kept[r] = tgt_rest;
        } else {
            modules.emplace(r, c.module_at(r));
            std::vector<int> all(c.rank_at(r));
            for (int i = 0; i < c.rank_at(r); ++i) all[i] = i;
            out.kept[r] = std::move(all);
        }
    }
    for (int r = c.lo() + 1; r <= c.hi(); ++r) {
        SparseMat d = c.differential_at(r).mat;
        SparseMat nd;
        if (r == r0)
            nd = schur;
        else if (r == r0 + 1) {
            std::vector<int> all_cols(c.rank_at(r));
            for (int i = 0; i < c.rank_at(r); ++i) all_cols[i] = i;
            nd = d.select(src_rest, all_cols);  // drop rows landing in U
        } else if (r == r0 - 1) {
            std::vector<int> all_rows(c.rank_at(r - 1));
            for (int i = 0; i < c.rank_at(r - 1); ++i) all_rows[i] = i;
            nd = d.select(all_rows, tgt_rest);  // drop V columns
        } else
            nd = d;
        if (!nd.is_zero()) diffs[r] = std::move(nd);
    }
    out.reduced = ChainComplex(c.space(), std::move(modules), std::move(diffs));

    // forward p: original -> reduced, backward i: reduced -> original,
    // homotopy k_{r0-1} = -q on the V summand; p i = 1 exactly.
    ChainMap p{c, out.reduced, {}};
    ChainMap i{out.reduced, c, {}};
    for (int r = c.lo(); r <= c.hi(); ++r) {
        if (out.reduced.rank_at(r) == 0 && c.rank_at(r) == 0) continue;
        SparseMat pm(out.reduced.rank_at(r), c.rank_at(r));
        SparseMat im(c.rank_at(r), out.reduced.rank_at(r));
        const std::vector<int>& kept = out.kept[r];
        for (size_t k = 0; k < kept.size(); ++k) {
            pm.set(static_cast<int>(k), kept[k], Int(1));
            im.set(kept[k], static_cast<int>(k), Int(1));
        }
        if (r == r0) {
            // i on degree r0 gains the correction -q*beta into U
            SparseMat corr = mul(*q, beta).negated();
            for (const Triplet& t : corr.entries()) im.set(src_idx[t.row], t.col, t.val);
        }
        if (r == r0 - 1) {
            // p on degree r0-1 gains the correction -gamma*q from V
            SparseMat corr = mul(gamma, *q).negated();
            for (const Triplet& t : corr.entries()) pm.set(t.row, tgt_idx[t.col], t.val);
        }
        if (!pm.is_zero()) p.comps[r] = std::move(pm);
        if (!im.is_zero()) i.comps[r] = std::move(im);
    }
    ChainHomotopy k{c, {}};
    {
        SparseMat km(c.rank_at(r0), c.rank_at(r0 - 1));
        SparseMat qneg = q->negated();
        for (const Triplet& t : qneg.entries()) km.set(src_idx[t.row], tgt_idx[t.col], t.val);
        if (!km.is_zero()) k.comps[r0 - 1] = std::move(km);
    }
    EquivalenceCert cert;
    cert.forward = std::move(p);
    cert.backward = std::move(i);
    cert.h_target = {out.reduced, {}};  // p i = 1 on the nose
    cert.h_source = std::move(k);       // d k + k d = i p - 1
    cert.bound = std::max({radius(cert.forward), radius(cert.backward), radius(cert.h_source)});
    out.cert = std::move(cert);
    return out;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b, const std::string& lp,
                        const std::string& rp) {
    std::map<int, GeomModule> modules;
    std::map<int, SparseMat> diffs;
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    if (a.is_zero_complex() && b.is_zero_complex()) return ChainComplex::zero(a.space());
    if (a.is_zero_complex()) return relabel(b, rp);
    if (b.is_zero_complex()) return relabel(a, lp);
    for (int r = lo; r <= hi; ++r) modules.emplace(r, a.module_at(r).sum(b.module_at(r), lp, rp));
    for (int r = lo + 1; r <= hi; ++r) {
        SparseMat d(a.rank_at(r - 1) + b.rank_at(r - 1), a.rank_at(r) + b.rank_at(r));
        d.place(a.differential_at(r).mat, 0, 0);
        d.place(b.differential_at(r).mat, a.rank_at(r - 1), a.rank_at(r));
        if (!d.is_zero()) diffs[r] = std::move(d);
    }
    return ChainComplex(a.space(), std::move(modules), std::move(diffs));
}

ChainComplex relabel(const ChainComplex& c, const std::string& prefix) {
    std::map<int, GeomModule> modules;
    std::map<int, SparseMat> diffs;
    for (int r = c.lo(); r <= c.hi(); ++r) {
        std::vector<BasisElement> b;
        for (const BasisElement& e : c.module_at(r).basis())
            b.push_back({prefix + e.label, e.location});
        modules.emplace(r, GeomModule(c.space(), std::move(b)));
    }
    for (int r = c.lo() + 1; r <= c.hi(); ++r) {
        SparseMat d = c.differential_at(r).mat;
        if (!d.is_zero()) diffs[r] = std::move(d);
    }
    return ChainComplex(c.space(), std::move(modules), std::move(diffs));
}

}  // namespace qpw
