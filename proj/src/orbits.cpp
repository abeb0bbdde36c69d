#include "garnier/orbits.hpp"

namespace garnier {

const std::vector<PointMap<Point>>& p4_generators() {
    static const std::vector<PointMap<Point>> gens = [] {
        std::vector<PointMap<Point>> g;
        for (const auto& w : pure_generators()) g.push_back([w](const Point& p) { return apply_word(w, p); });
        return g;
    }();
    return gens;
}

OrbitResult<Point> p4_orbit(const Point& p, size_t cap) {
    return enumerate_orbit(p, p4_generators(), cap, [](const Point& q) { return point_key(q); });
}

}  // namespace garnier
