#pragma once
// Shared fixtures: exact rational SL2 tuples and member points from Table 2.

#include <random>
#include <vector>

#include "garnier/charvariety.hpp"
#include "garnier/orbits.hpp"
#include "garnier/table2.hpp"

namespace testing_support {

using namespace garnier;

struct QM {
    Number a, b, c, d;
    QM operator*(const QM& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    QM inv() const { return {d, -b, -c, a}; }  // det 1
    Number tr() const { return a + d; }
    QM neg() const { return {-a, -b, -c, -d}; }
};

inline QM random_sl2(std::mt19937& rng, const Field* f = rationals()) {
    std::uniform_int_distribution<int> dist(-5, 5);
    int a = 0;
    while (a == 0) a = dist(rng);
    Number na(f, a), nb(f, dist(rng)), nc(f, dist(rng));
    Number nd = (Number(f, 1) + nb * nc) / na;
    return {na, nb, nc, nd};
}

// Coordinates of (M1, M2, M3, M4).
inline Point point_of(const std::vector<QM>& m) {
    const QM &m1 = m[0], &m2 = m[1], &m3 = m[2], &m4 = m[3];
    return {m1.tr(),        m2.tr(),        m3.tr(),        m4.tr(),        (m4 * m3 * m2 * m1).tr(),
            (m2 * m1).tr(), (m3 * m1).tr(), (m3 * m2).tr(), (m4 * m1).tr(), (m4 * m2).tr(),
            (m4 * m3).tr(), (m3 * m2 * m1).tr(), (m4 * m3 * m2).tr(), (m4 * m3 * m1).tr(), (m4 * m2 * m1).tr()};
}

inline std::vector<QM> random_tuple(std::mt19937& rng) {
    return {random_sl2(rng), random_sl2(rng), random_sl2(rng), random_sl2(rng)};
}

// At least n member points taken from Table 2 orbits.
inline std::vector<Point> sample_member_points(size_t n, unsigned seed = 1) {
    std::vector<Point> out;
    std::mt19937 rng(seed);
    for (const auto& row : table2_rows()) {
        if (row.orbit_size > 300) continue;
        auto comps = table2_completions(row);
        if (comps.empty()) continue;
        auto orb = p4_orbit(comps[0]);
        std::uniform_int_distribution<size_t> pick(0, orb.size() - 1);
        for (int k = 0; k < 4; ++k) out.push_back(orb.points[pick(rng)]);
        if (out.size() >= n) break;
    }
    return out;
}

}  // namespace testing_support
