#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qpw/numeric.hpp"

namespace qpw {

// Finite metric control space B. All sizes in the library are distances
// between points of some ControlSpace, compared exactly as rationals.
class ControlSpace {
  public:
    ControlSpace(std::vector<std::string> points, std::vector<std::vector<Rat>> dist);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    const Rat& dist(int a, int b) const { return dist_[a][b]; }
    const std::vector<std::vector<Rat>>& dist_matrix() const { return dist_; }

    // n evenly spaced points on a segment of the given length
    static std::shared_ptr<const ControlSpace> line(int n, const Rat& length);
    // n evenly spaced points on a circle of the given circumference
    static std::shared_ptr<const ControlSpace> circle(int n, const Rat& circumference);
    static std::shared_ptr<const ControlSpace> point();

  private:
    std::vector<std::string> points_;
    std::vector<std::vector<Rat>> dist_;
};

using SpacePtr = std::shared_ptr<const ControlSpace>;

bool same_space(const SpacePtr& a, const SpacePtr& b);

struct MetricViolation {
    std::string kind;  // "diagonal" | "symmetry" | "triangle" | "negative"
    int a = 0, b = 0, c = 0;
    std::string detail;
};

// Reports every violated metric axiom instance; empty iff the axioms hold.
std::vector<MetricViolation> verify_metric(const ControlSpace& space);

// Subset of the points of a control space.
class Region {
  public:
    Region() = default;
    Region(SpacePtr space, std::vector<int> members);

    const SpacePtr& space() const { return space_; }
    const std::vector<int>& members() const { return members_; }  // sorted
    bool contains(int p) const;
    bool empty() const { return members_.empty(); }
    int size() const { return static_cast<int>(members_.size()); }

    Region complement() const;
    Region intersect(const Region& other) const;
    Region unite(const Region& other) const;
    bool subset_of(const Region& other) const;

    static Region whole(SpacePtr space);
    static Region none(SpacePtr space);

  private:
    SpacePtr space_;
    std::vector<int> members_;
};

bool operator==(const Region& a, const Region& b);

// { b : dist(b, W) <= eps }
Region outer_neighborhood(const Region& w, const Rat& eps);
// B - outer(B - W, eps): points farther than eps from the complement
Region inner_neighborhood(const Region& w, const Rat& eps);

}  // namespace qpw
