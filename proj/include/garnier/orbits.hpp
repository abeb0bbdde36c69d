#pragma once
// Orbit enumeration by forward closure, finite-subset extraction, partition.

#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "garnier/braid.hpp"

namespace garnier {

template <class P>
using PointMap = std::function<P(const P&)>;

enum class OrbitStatus { finite, cap_exceeded };

template <class P>
struct OrbitResult {
    P seed;
    std::vector<P> points;  // BFS order
    std::vector<std::string> keys;
    OrbitStatus status = OrbitStatus::finite;
    size_t size() const { return points.size(); }
    bool finite() const { return status == OrbitStatus::finite; }
};

// Deterministic set of points keyed by canonical key (iteration sorted).
template <class P>
class PointSet {
public:
    bool insert(const std::string& key, const P& p) { return items_.emplace(key, p).second; }
    bool contains(const std::string& key) const { return items_.count(key) != 0; }
    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    void erase(const std::string& key) { items_.erase(key); }
    const P& at(const std::string& key) const { return items_.at(key); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    bool operator==(const PointSet& o) const {
        if (items_.size() != o.items_.size()) return false;
        for (auto a = items_.begin(), b = o.items_.begin(); a != items_.end(); ++a, ++b)
            if (a->first != b->first) return false;
        return true;
    }

private:
    std::map<std::string, P> items_;
};

template <class P, class KeyFn>
OrbitResult<P> enumerate_orbit(const P& seed, const std::vector<PointMap<P>>& gens, size_t cap, KeyFn key) {
    OrbitResult<P> r;
    r.seed = seed;
    std::unordered_map<std::string, size_t> seen;
    std::string k0 = key(seed);
    seen.emplace(k0, 0);
    r.points.push_back(seed);
    r.keys.push_back(k0);
    for (size_t head = 0; head < r.points.size(); ++head) {
        for (const auto& g : gens) {
            P q = g(r.points[head]);
            std::string k = key(q);
            if (seen.emplace(k, r.points.size()).second) {
                r.points.push_back(std::move(q));
                r.keys.push_back(std::move(k));
                if (r.points.size() > cap) {
                    r.status = OrbitStatus::cap_exceeded;
                    return r;
                }
            }
        }
    }
    return r;
}

// Repeatedly delete points having a generator image outside the set.
template <class P, class KeyFn>
PointSet<P> extract_finite(const PointSet<P>& c, const std::vector<PointMap<P>>& gens, KeyFn key) {
    std::unordered_map<std::string, std::vector<std::string>> preds;
    std::deque<std::string> doomed;
    std::unordered_map<std::string, bool> alive;
    for (const auto& [k, p] : c) alive[k] = true;
    for (const auto& [k, p] : c) {
        bool escapes = false;
        for (const auto& g : gens) {
            std::string ik = key(g(p));
            if (!c.contains(ik)) {
                escapes = true;
            } else {
                preds[ik].push_back(k);
            }
        }
        if (escapes) doomed.push_back(k);
    }
    while (!doomed.empty()) {
        std::string k = doomed.front();
        doomed.pop_front();
        if (!alive[k]) continue;
        alive[k] = false;
        for (const auto& pk : preds[k])
            if (alive[pk]) doomed.push_back(pk);
    }
    PointSet<P> out;
    for (const auto& [k, p] : c)
        if (alive[k]) out.insert(k, p);
    return out;
}

// Split a set whose orbits stay inside it into full orbits.
template <class P, class KeyFn>
std::vector<OrbitResult<P>> orbit_partition(const PointSet<P>& c0, const std::vector<PointMap<P>>& gens, KeyFn key) {
    std::vector<OrbitResult<P>> out;
    std::unordered_map<std::string, bool> done;
    for (const auto& [k, p] : c0) {
        if (done[k]) continue;
        auto orb = enumerate_orbit(p, gens, c0.size(), key);
        for (const auto& ok : orb.keys) {
            if (!c0.contains(ok)) throw std::runtime_error("orbit_partition: generator image escapes the set");
            done[ok] = true;
        }
        out.push_back(std::move(orb));
    }
    return out;
}

// P4 acting on 15-tuples through the six pure generators.
const std::vector<PointMap<Point>>& p4_generators();
OrbitResult<Point> p4_orbit(const Point& p, size_t cap = 12288);

inline std::string key_of(const Point& p) { return point_key(p); }

}  // namespace garnier
