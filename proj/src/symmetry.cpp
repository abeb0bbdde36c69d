#include "garnier/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace garnier {

namespace {

const BraidWord kP13 = {2, -1, -2};
const BraidWord kP23 = {2, -1, -2, -1, 2, -1, -2};
const BraidWord kP34 = {3, 2, -1, -2, -3, 2, -1, -2, 3, 2, -1};

SignedPerm make_signs(const std::array<int, kCoords>& s) {
    SignedPerm r = SignedPerm::identity();
    r.sign = s;
    return r;
}

SignedPerm make_perm(const std::array<int, kCoords>& src) {
    SignedPerm r = SignedPerm::identity();
    r.src = src;
    return r;
}

Point p1inf(const Point& q) {
    const Number &p1 = q[P1], &p2 = q[P2], &p3 = q[P3], &p4 = q[P4], &pi = q[PINF];
    const Number &p21 = q[P21], &p31 = q[P31], &p32 = q[P32], &p41 = q[P41], &p42 = q[P42], &p43 = q[P43];
    const Number &p321 = q[P321], &p432 = q[P432], &p431 = q[P431], &p421 = q[P421];
    // (M1, M2, M3, M4) -> (-M_inf, M2, M3, M4): every coordinate carrying index 1 changes sign
    return {-pi,
            p2,
            p3,
            p4,
            -p1,
            -(p2 * pi - p432 * p21 + p43 * p1 - p431),
            -(p3 * pi - p43 * p321 + p4 * p21 - p421),
            p32,
            -p321,
            p42,
            p43,
            -(p32 * pi - p432 * p321 + p4 * p1 - p41),
            p432,
            -p21,
            -(p2 * p321 - p32 * p21 + p3 * p1 - p31)};
}

}  // namespace

const std::vector<Sym>& all_symmetries() {
    static const std::vector<Sym> v = {Sym::P13,   Sym::P23,   Sym::P34,   Sym::P1inf,      Sym::sign1,
                                       Sym::sign2, Sym::sign3, Sym::sign4, Sym::perm_12_34, Sym::perm_1234};
    return v;
}

std::string sym_name(Sym s) {
    switch (s) {
        case Sym::P13: return "P13";
        case Sym::P23: return "P23";
        case Sym::P34: return "P34";
        case Sym::P1inf: return "P1inf";
        case Sym::sign1: return "sign1";
        case Sym::sign2: return "sign2";
        case Sym::sign3: return "sign3";
        case Sym::sign4: return "sign4";
        case Sym::perm_12_34: return "perm_12_34";
        case Sym::perm_1234: return "perm_1234";
    }
    return "?";
}

Sym sym_from_name(const std::string& name) {
    for (Sym s : all_symmetries())
        if (sym_name(s) == name) return s;
    throw std::invalid_argument("unknown symmetry: " + name);
}

const BraidWord& sym_braid_word(Sym s) {
    switch (s) {
        case Sym::P13: return kP13;
        case Sym::P23: return kP23;
        case Sym::P34: return kP34;
        default: throw std::invalid_argument("symmetry has no braid word: " + sym_name(s));
    }
}

SignedPerm SignedPerm::identity() {
    SignedPerm r;
    for (int i = 0; i < kCoords; ++i) {
        r.src[i] = i;
        r.sign[i] = 1;
    }
    return r;
}

Point SignedPerm::apply(const Point& p) const {
    Point q;
    for (int i = 0; i < kCoords; ++i) q[i] = sign[i] > 0 ? p[src[i]] : -p[src[i]];
    return q;
}

SignedPerm SignedPerm::then(const SignedPerm& next) const {
    // (next o this)(p)[i] = next.sign[i] * this(p)[next.src[i]]
    SignedPerm r;
    for (int i = 0; i < kCoords; ++i) {
        r.src[i] = src[next.src[i]];
        r.sign[i] = next.sign[i] * sign[next.src[i]];
    }
    return r;
}

std::string SignedPerm::key() const {
    std::string k;
    for (int i = 0; i < kCoords; ++i) {
        k += std::to_string(sign[i] * (src[i] + 1));
        k.push_back(',');
    }
    return k;
}

SignedPerm signed_perm_of(Sym s) {
    switch (s) {
        case Sym::sign1: return make_signs({-1, 1, 1, 1, -1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1});
        case Sym::sign2: return make_signs({1, -1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1});
        case Sym::sign3: return make_signs({1, 1, -1, 1, -1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1});
        case Sym::sign4: return make_signs({1, 1, 1, -1, -1, 1, 1, 1, -1, -1, -1, 1, -1, -1, -1});
        case Sym::perm_12_34:
            return make_perm({P2, P1, P4, P3, PINF, P21, P42, P41, P32, P31, P43, P421, P431, P432, P321});
        case Sym::perm_1234:
            return make_perm({P4, P1, P2, P3, PINF, P41, P42, P21, P43, P31, P32, P421, P321, P432, P431});
        default: throw std::invalid_argument("not a signed permutation: " + sym_name(s));
    }
}

const std::vector<SignedPerm>& sign_perm_group() {
    static const std::vector<SignedPerm> group = [] {
        std::vector<SignedPerm> gens;
        for (Sym s : {Sym::sign1, Sym::sign2, Sym::sign3, Sym::sign4, Sym::perm_12_34, Sym::perm_1234})
            gens.push_back(signed_perm_of(s));
        std::vector<SignedPerm> elems{SignedPerm::identity()};
        std::set<std::string> seen{elems[0].key()};
        for (size_t i = 0; i < elems.size(); ++i)
            for (const auto& g : gens) {
                SignedPerm e = elems[i].then(g);
                if (seen.insert(e.key()).second) elems.push_back(e);
            }
        return elems;
    }();
    return group;
}

Point apply_symmetry(Sym s, const Point& p) {
    switch (s) {
        case Sym::P13:
        case Sym::P23:
        case Sym::P34: return apply_word(sym_braid_word(s), p);
        case Sym::P1inf: return p1inf(p);
        default: return signed_perm_of(s).apply(p);
    }
}

SymmetryTable SymmetryTable::standard() {
    SymmetryTable t;
    const Sym signs[4] = {Sym::sign1, Sym::sign2, Sym::sign3, Sym::sign4};
    for (int i = 0; i < 4; ++i) {
        SignedPerm sp = signed_perm_of(signs[i]);
        t.sign[i] = [sp](const Point& p) { return sp.apply(p); };
    }
    SignedPerm a = signed_perm_of(Sym::perm_12_34), b = signed_perm_of(Sym::perm_1234);
    t.perm_12_34 = [a](const Point& p) { return a.apply(p); };
    t.perm_1234 = [b](const Point& p) { return b.apply(p); };
    return t;
}

std::vector<AuditItem> commutation_audit(const std::vector<Point>& pts, const SymmetryTable& t) {
    auto sig = [](int i) { return PointFn([i](const Point& p) { return apply_sigma(i, p); }); };
    auto sinv = [](int i) { return PointFn([i](const Point& p) { return apply_sigma_inverse(i, p); }); };
    // compose(f, g, ...) applies the rightmost first
    auto compose = [](std::vector<PointFn> fs) {
        return PointFn([fs](const Point& p) {
            Point q = p;
            for (auto it = fs.rbegin(); it != fs.rend(); ++it) q = (*it)(q);
            return q;
        });
    };
    struct Rel {
        std::string name;
        PointFn lhs, rhs;
    };
    std::vector<Rel> rels;
    // sigma_i sign_a = sign_b sigma_i
    const int sign_rel[3][4] = {{2, 1, 3, 4}, {1, 3, 2, 4}, {1, 2, 4, 3}};
    for (int i = 1; i <= 3; ++i)
        for (int a = 1; a <= 4; ++a) {
            const int b = sign_rel[i - 1][a - 1];
            rels.push_back({"sigma" + std::to_string(i) + " sign" + std::to_string(a) + " = sign" + std::to_string(b) +
                                " sigma" + std::to_string(i),
                            compose({sig(i), t.sign[a - 1]}), compose({t.sign[b - 1], sig(i)})});
        }
    const PointFn& c = t.perm_1234;
    const PointFn& d = t.perm_12_34;
    rels.push_back({"sigma2 pi1234 = pi1234 sigma1", compose({sig(2), c}), compose({c, sig(1)})});
    rels.push_back({"sigma3 pi1234 = pi1234 sigma2", compose({sig(3), c}), compose({c, sig(2)})});
    rels.push_back({"sigma1 pi1234 = pi1234 pi1234 sigma2^-1 sigma1^-1", compose({sig(1), c}),
                    compose({c, c, sinv(2), sinv(1)})});
    rels.push_back({"sigma1 pi(12)(34) = pi(12)(34) sigma1^-1", compose({sig(1), d}), compose({d, sinv(1)})});
    rels.push_back({"sigma3 pi(12)(34) = pi(12)(34) sigma3^-1", compose({sig(3), d}), compose({d, sinv(3)})});
    rels.push_back({"sigma2 pi(12)(34) = pi(12)(34) pi1234^3 sigma2 sigma3", compose({sig(2), d}),
                    compose({d, c, c, c, sig(2), sig(3)})});
    std::vector<AuditItem> out;
    for (const auto& r : rels) {
        AuditItem item{r.name, true, ""};
        for (const auto& p : pts) {
            if (point_key(r.lhs(p)) != point_key(r.rhs(p))) {
                item.pass = false;
                item.witness = point_key(p);
                break;
            }
        }
        out.push_back(item);
    }
    return out;
}

// ---------------------------------------------------------------- quotient

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::string five_key(const Point& p) {
    std::string k;
    for (int i : {P1, P2, P3, P4, PINF}) k += p[i].key() + ";";
    return k;
}

}  // namespace

std::string bucket_key(const Point& p, size_t orbit_size) {
    std::vector<std::string> vals;
    for (int i : {P1, P2, P3, P4, PINF}) vals.push_back(std::min(p[i].key(), (-p[i]).key()));
    std::sort(vals.begin(), vals.end());
    std::string k = std::to_string(orbit_size);
    for (const auto& v : vals) k += "|" + v;
    return k;
}

std::vector<size_t> quotient_by_finite_subgroup(const std::vector<OrbitResult<Point>>& orbits) {
    std::unordered_map<std::string, size_t> owner;
    for (size_t i = 0; i < orbits.size(); ++i)
        for (const auto& k : orbits[i].keys) owner.emplace(k, i);
    UnionFind uf(orbits.size());
    for (size_t i = 0; i < orbits.size(); ++i) {
        for (const auto& g : sign_perm_group()) {
            auto it = owner.find(point_key(g.apply(orbits[i].seed)));
            if (it != owner.end()) uf.unite(i, it->second);
        }
    }
    std::vector<size_t> reps;
    for (size_t i = 0; i < orbits.size(); ++i)
        if (uf.find(i) == i) reps.push_back(i);
    return reps;
}

namespace {

// Images of p under signs, permutations, P1inf and P13/P23/P34 whose
// (p1..p4, p_inf) equals the target; one point per distinct path state.
std::vector<Point> normalize_to(const Point& p, const std::string& target_five, size_t cap) {
    std::vector<Point> frontier{p};
    std::unordered_set<std::string> seen{point_key(p)};
    std::vector<Point> hits;
    std::unordered_set<std::string> five_seen{five_key(p)};
    for (size_t head = 0; head < frontier.size() && frontier.size() < cap; ++head) {
        const Point cur = frontier[head];
        if (five_key(cur) == target_five) hits.push_back(cur);
        for (Sym s : all_symmetries()) {
            Point q = apply_symmetry(s, cur);
            std::string k = point_key(q);
            if (!seen.insert(k).second) continue;
            // breadth over distinct parameter tuples keeps the search small
            if (!five_seen.insert(five_key(q)).second && five_key(q) != target_five) continue;
            frontier.push_back(q);
        }
    }
    return hits;
}

bool linked(const Point& candidate, const std::unordered_set<std::string>& target_orbit, size_t cap) {
    std::vector<PointMap<Point>> gens;
    for (Sym s : {Sym::P13, Sym::P23, Sym::P34})
        gens.push_back([s](const Point& q) { return apply_symmetry(s, q); });
    auto orb = enumerate_orbit(candidate, gens, cap, [](const Point& q) { return point_key(q); });
    for (const auto& k : orb.keys)
        if (target_orbit.count(k)) return true;
    return false;
}

}  // namespace

QuotientResult quotient(const std::vector<OrbitResult<Point>>& orbits) {
    QuotientResult res;
    res.after_finite_subgroup = quotient_by_finite_subgroup(orbits);
    std::map<std::string, std::vector<size_t>> buckets;
    for (size_t idx : res.after_finite_subgroup)
        buckets[bucket_key(orbits[idx].seed, orbits[idx].size())].push_back(idx);
    for (auto& [key, members] : buckets) {
        res.buckets.push_back(members);
        // classes inside the bucket
        std::vector<size_t> classes;
        for (size_t idx : members) {
            bool merged = false;
            for (size_t rep : classes) {
                const Point& p = orbits[rep].seed;
                std::unordered_set<std::string> target(orbits[rep].keys.begin(), orbits[rep].keys.end());
                const size_t cap = 24 * orbits[rep].size() + 1;
                for (const auto& cand : normalize_to(orbits[idx].seed, five_key(p), 4096)) {
                    if (target.count(point_key(cand)) || linked(cand, target, cap)) {
                        merged = true;
                        break;
                    }
                }
                if (merged) break;
            }
            if (!merged) classes.push_back(idx);
        }
        res.representatives.insert(res.representatives.end(), classes.begin(), classes.end());
    }
    std::sort(res.representatives.begin(), res.representatives.end());
    return res;
}

}  // namespace garnier
