#include "qpw/geom.hpp"

#include <set>

namespace qpw {

GeomModule::GeomModule(SpacePtr space, std::vector<BasisElement> basis)
    : space_(std::move(space)), basis_(std::move(basis)) {
    std::set<std::string> seen;
    for (const BasisElement& b : basis_) {
        if (b.location < 0 || b.location >= space_->size())
            throw argument_error("basis location out of range");
        if (!seen.insert(b.label).second) throw argument_error("duplicate basis label " + b.label);
    }
}

GeomModule GeomModule::free_at(SpacePtr space, int point, int rank, const std::string& prefix) {
    std::vector<BasisElement> basis;
    for (int i = 0; i < rank; ++i) basis.push_back({prefix + std::to_string(i), point});
    return GeomModule(std::move(space), std::move(basis));
}

GeomModule GeomModule::sum(const GeomModule& other, const std::string& lp,
                           const std::string& rp) const {
    std::vector<BasisElement> basis;
    basis.reserve(basis_.size() + other.basis_.size());
    for (const BasisElement& b : basis_) basis.push_back({lp + b.label, b.location});
    for (const BasisElement& b : other.basis_) basis.push_back({rp + b.label, b.location});
    return GeomModule(space_, std::move(basis));
}

GeomModule GeomModule::dual(const std::string& marker) const {
    std::vector<BasisElement> basis;
    basis.reserve(basis_.size());
    for (const BasisElement& b : basis_) basis.push_back({b.label + marker, b.location});
    return GeomModule(space_, std::move(basis));
}

std::vector<int> GeomModule::indices_in(const Region& r) const {
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i)
        if (r.contains(basis_[i].location)) out.push_back(i);
    return out;
}

bool GeomModule::supported_in(const Region& r) const {
    for (const BasisElement& b : basis_)
        if (!r.contains(b.location)) return false;
    return true;
}

bool same_module(const GeomModule& a, const GeomModule& b) {
    if (!same_space(a.space(), b.space()) || a.rank() != b.rank()) return false;
    for (int i = 0; i < a.rank(); ++i)
        if (a.basis()[i].label != b.basis()[i].label ||
            a.basis()[i].location != b.basis()[i].location)
            return false;
    return true;
}

GeomMorphism::GeomMorphism(GeomModule src, GeomModule tgt, SparseMat m)
    : source(std::move(src)), target(std::move(tgt)), mat(std::move(m)) {
    if (!same_space(source.space(), target.space()))
        throw argument_error("morphism endpoints live on different spaces");
    if (mat.rows() != target.rank() || mat.cols() != source.rank())
        throw argument_error("morphism matrix shape mismatch");
}

GeomMorphism GeomMorphism::zero(GeomModule src, GeomModule tgt) {
    SparseMat m(tgt.rank(), src.rank());
    return {std::move(src), std::move(tgt), std::move(m)};
}

GeomMorphism GeomMorphism::identity(const GeomModule& m) {
    return {m, m, SparseMat::identity(m.rank())};
}

Rat radius(const GeomMorphism& f) {
    Rat r(0);
    const ControlSpace& s = *f.source.space();
    for (const Triplet& t : f.mat.entries()) {
        const Rat& d = s.dist(f.target.location(t.row), f.source.location(t.col));
        if (d > r) r = d;
    }
    return r;
}

GeomMorphism compose(const GeomMorphism& g, const GeomMorphism& f) {
    if (!same_module(g.source, f.target)) throw argument_error("compose: module mismatch");
    return {f.source, g.target, mul(g.mat, f.mat)};
}

GeomMorphism add(const GeomMorphism& f, const GeomMorphism& g) {
    if (!same_module(f.source, g.source) || !same_module(f.target, g.target))
        throw argument_error("add: module mismatch");
    return {f.source, f.target, f.mat + g.mat};
}

bool operator==(const GeomMorphism& f, const GeomMorphism& g) {
    return same_module(f.source, g.source) && same_module(f.target, g.target) && f.mat == g.mat;
}

ModuleSplit split_by_region(const GeomModule& m, const Region& r) {
    if (!same_space(m.space(), r.space())) throw argument_error("split_by_region: space mismatch");
    ModuleSplit out;
    std::vector<BasisElement> sub, quot;
    for (int i = 0; i < m.rank(); ++i) {
        if (r.contains(m.location(i))) {
            out.sub_indices.push_back(i);
            sub.push_back(m.basis()[i]);
        } else {
            out.quot_indices.push_back(i);
            quot.push_back(m.basis()[i]);
        }
    }
    out.sub = GeomModule(m.space(), std::move(sub));
    out.quot = GeomModule(m.space(), std::move(quot));
    SparseMat inc(m.rank(), out.sub.rank());
    for (int k = 0; k < out.sub.rank(); ++k) inc.set(out.sub_indices[k], k, Int(1));
    SparseMat prj(out.quot.rank(), m.rank());
    for (int k = 0; k < out.quot.rank(); ++k) prj.set(k, out.quot_indices[k], Int(1));
    out.inclusion = {out.sub, m, std::move(inc)};
    out.projection = {m, out.quot, std::move(prj)};
    return out;
}

bool is_basis_bijection_over(const GeomMorphism& f, const Region& r) {
    std::vector<bool> rows(f.target.rank(), false), cols(f.source.rank(), false);
    for (int i = 0; i < f.target.rank(); ++i) rows[i] = r.contains(f.target.location(i));
    for (int j = 0; j < f.source.rank(); ++j) cols[j] = r.contains(f.source.location(j));
    return f.mat.is_signed_bijection_on(rows, cols);
}

bool verify_local_inverse(const GeomMorphism& d, const LocalInverse& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!same_module(w.e.source, d.target) || !same_module(w.e.target, d.source))
        return fail("inverse endpoints do not match");
    if (radius(w.e) > w.delta) return fail("inverse radius exceeds delta");
    Region allowed = outer_neighborhood(w.v, w.delta);
    auto check_defect = [&](const GeomMorphism& defect) {
        for (const Triplet& t : defect.mat.entries()) {
            int lt = defect.target.location(t.row), ls = defect.source.location(t.col);
            if (!allowed.contains(lt) && !allowed.contains(ls)) return false;
        }
        return true;
    };
    GeomMorphism de = compose(d, w.e);
    GeomMorphism ed = compose(w.e, d);
    if (!check_defect({de.source, de.target, de.mat - SparseMat::identity(de.mat.rows())}))
        return fail("d*e - 1 has a defect entry away from V^delta");
    if (!check_defect({ed.source, ed.target, ed.mat - SparseMat::identity(ed.mat.rows())}))
        return fail("e*d - 1 has a defect entry away from V^delta");
    return true;
}

}  // namespace qpw
