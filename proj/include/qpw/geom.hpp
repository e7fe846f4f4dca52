#pragma once

#include "qpw/control_space.hpp"
#include "qpw/sparse.hpp"

namespace qpw {

struct BasisElement {
    std::string label;
    int location = 0;  // point index in the control space
};

// Based free Z-module with basis elements located at points of B.
class GeomModule {
  public:
    GeomModule() = default;
    GeomModule(SpacePtr space, std::vector<BasisElement> basis);

    const SpacePtr& space() const { return space_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    int location(int i) const { return basis_[i].location; }

    static GeomModule zero(SpacePtr space) { return GeomModule(std::move(space), {}); }
    // rank generators at one point, labels prefix0..prefixN-1
    static GeomModule free_at(SpacePtr space, int point, int rank, const std::string& prefix);

    GeomModule sum(const GeomModule& other, const std::string& lp, const std::string& rp) const;
    // same basis elements, labels marked as dual
    GeomModule dual(const std::string& marker = "*") const;

    std::vector<int> indices_in(const Region& r) const;
    bool supported_in(const Region& r) const;

  private:
    SpacePtr space_;
    std::vector<BasisElement> basis_;
};

bool same_module(const GeomModule& a, const GeomModule& b);  // basis-for-basis equality

// Sparse integer matrix between geometric modules; rows ~ target basis,
// cols ~ source basis (target-major storage).
struct GeomMorphism {
    GeomModule source;
    GeomModule target;
    SparseMat mat;

    GeomMorphism() = default;
    GeomMorphism(GeomModule src, GeomModule tgt, SparseMat m);

    static GeomMorphism zero(GeomModule src, GeomModule tgt);
    static GeomMorphism identity(const GeomModule& m);

    GeomMorphism negated() const { return {source, target, mat.negated()}; }
    GeomMorphism transpose() const { return {target, source, mat.transpose()}; }
};

// max over nonzero entries of dist(target location, source location)
Rat radius(const GeomMorphism& f);

GeomMorphism compose(const GeomMorphism& g, const GeomMorphism& f);  // g after f
GeomMorphism add(const GeomMorphism& f, const GeomMorphism& g);
bool operator==(const GeomMorphism& f, const GeomMorphism& g);

struct ModuleSplit {
    GeomModule sub, quot;
    GeomMorphism inclusion;   // sub -> M
    GeomMorphism projection;  // M -> quot
    std::vector<int> sub_indices, quot_indices;
};

// Basis split along a region: sub carries the basis located in R.
ModuleSplit split_by_region(const GeomModule& m, const Region& r);

// True iff f restricted to basis located in R is a bijection with entries
// +-1 and R-rows/columns meet no other entries.
bool is_basis_bijection_over(const GeomMorphism& f, const Region& r);

// Witness that d is a delta-isomorphism over B - V: an approximate inverse e
// of radius <= delta whose defects d*e - 1 and e*d - 1 are supported on
// outer_neighborhood(V, delta).
struct LocalInverse {
    GeomMorphism e;
    Region v;
    Rat delta;
};

bool verify_local_inverse(const GeomMorphism& d, const LocalInverse& w,
                          std::string* why = nullptr);

}  // namespace qpw
