#include "qpw/control_space.hpp"

#include <algorithm>

namespace qpw {

ControlSpace::ControlSpace(std::vector<std::string> points, std::vector<std::vector<Rat>> dist)
    : points_(std::move(points)), dist_(std::move(dist)) {
    const size_t n = points_.size();
    if (dist_.size() != n) throw argument_error("distance matrix size mismatch");
    for (const auto& row : dist_)
        if (row.size() != n) throw argument_error("distance matrix not square");
}

std::shared_ptr<const ControlSpace> ControlSpace::line(int n, const Rat& length) {
    if (n <= 0) throw argument_error("line: need at least one point");
    std::vector<std::string> pts;
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    Rat step = n > 1 ? Rat(length / (n - 1)) : Rat(0);
    for (int i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = step * abs(i - j);
    return std::make_shared<ControlSpace>(std::move(pts), std::move(d));
}

std::shared_ptr<const ControlSpace> ControlSpace::circle(int n, const Rat& circumference) {
    if (n <= 0) throw argument_error("circle: need at least one point");
    std::vector<std::string> pts;
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    Rat step = circumference / n;
    for (int i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = std::abs(i - j);
            d[i][j] = step * std::min(k, n - k);
        }
    return std::make_shared<ControlSpace>(std::move(pts), std::move(d));
}

std::shared_ptr<const ControlSpace> ControlSpace::point() { return line(1, Rat(0)); }

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->points() == b->points() && a->dist_matrix() == b->dist_matrix();
}

std::vector<MetricViolation> verify_metric(const ControlSpace& s) {
    std::vector<MetricViolation> out;
    const int n = s.size();
    for (int a = 0; a < n; ++a) {
        if (s.dist(a, a) != 0) out.push_back({"diagonal", a, a, 0, "dist(x,x) != 0"});
        for (int b = 0; b < n; ++b) {
            if (s.dist(a, b) < 0) out.push_back({"negative", a, b, 0, "dist < 0"});
            if (a < b && s.dist(a, b) != s.dist(b, a))
                out.push_back({"symmetry", a, b, 0, "dist(x,y) != dist(y,x)"});
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (s.dist(a, c) > s.dist(a, b) + s.dist(b, c))
                    out.push_back({"triangle", a, b, c, "dist(a,c) > dist(a,b)+dist(b,c)"});
    return out;
}

Region::Region(SpacePtr space, std::vector<int> members)
    : space_(std::move(space)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= space_->size()))
        throw argument_error("region member out of range");
}

bool Region::contains(int p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
}

Region Region::complement() const {
    std::vector<int> out;
    for (int i = 0; i < space_->size(); ++i)
        if (!contains(i)) out.push_back(i);
    return Region(space_, std::move(out));
}

Region Region::intersect(const Region& other) const {
    std::vector<int> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out));
    return Region(space_, std::move(out));
}

Region Region::unite(const Region& other) const {
    std::vector<int> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    return Region(space_, std::move(out));
}

bool Region::subset_of(const Region& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

Region Region::whole(SpacePtr space) {
    std::vector<int> all(space->size());
    for (int i = 0; i < space->size(); ++i) all[i] = i;
    return Region(std::move(space), std::move(all));
}

Region Region::none(SpacePtr space) { return Region(std::move(space), {}); }

bool operator==(const Region& a, const Region& b) {
    return same_space(a.space(), b.space()) && a.members() == b.members();
}

Region outer_neighborhood(const Region& w, const Rat& eps) {
    if (eps < 0) throw argument_error("outer_neighborhood: eps must be >= 0");
    const ControlSpace& s = *w.space();
    std::vector<int> out;
    for (int b = 0; b < s.size(); ++b) {
        for (int m : w.members()) {
            if (s.dist(b, m) <= eps) {
                out.push_back(b);
                break;
            }
        }
    }
    return Region(w.space(), std::move(out));
}

Region inner_neighborhood(const Region& w, const Rat& eps) {
    if (eps < 0) throw argument_error("inner_neighborhood: eps must be >= 0");
    return outer_neighborhood(w.complement(), eps).complement();
}

}  // namespace qpw
