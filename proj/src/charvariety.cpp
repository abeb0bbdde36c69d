#include "garnier/charvariety.hpp"

#include <algorithm>
#include <set>

namespace garnier {

const std::array<const char*, kCoords> kCoordNames = {"p1",  "p2",  "p3",  "p4",   "pinf", "p21",  "p31", "p32",
                                                       "p41", "p42", "p43", "p321", "p432", "p431", "p421"};

Point constant_point(const Field* f, long v) {
    Point p;
    for (auto& x : p) x = Number(f, v);
    return p;
}

std::string point_key(const Point& p) {
    std::string k;
    for (int i = 0; i < kCoords; ++i) {
        if (i) k.push_back(';');
        k += p[i].key();
    }
    return k;
}

const Field* point_field(const Point& p) { return p[0].field(); }

std::array<Number, kCoords> eval_ideal(const Point& q) {
    const Number &p1 = q[P1], &p2 = q[P2], &p3 = q[P3], &p4 = q[P4], &pi = q[PINF];
    const Number &p21 = q[P21], &p31 = q[P31], &p32 = q[P32], &p41 = q[P41], &p42 = q[P42], &p43 = q[P43];
    const Number &p321 = q[P321], &p432 = q[P432], &p431 = q[P431], &p421 = q[P421];
    std::array<Number, kCoords> f;
    // p12, p13, p23 of the printed formulas are p21, p31, p32
    f[0] = p32 * p31 * p21 + p32 * p32 + p31 * p31 + p21 * p21 - (p1 * p321 + p2 * p3) * p32 -
           (p2 * p321 + p1 * p3) * p31 - (p3 * p321 + p1 * p2) * p21 + p3 * p3 + p2 * p2 + p1 * p1 + p321 * p321 +
           p3 * p2 * p1 * p321 - 4;
    f[1] = p42 * p41 * p21 + p42 * p42 + p41 * p41 + p21 * p21 - (p1 * p421 + p2 * p4) * p42 -
           (p2 * p421 + p1 * p4) * p41 - (p4 * p421 + p1 * p2) * p21 + p4 * p4 + p2 * p2 + p1 * p1 + p421 * p421 +
           p4 * p2 * p1 * p421 - 4;
    f[2] = p43 * p41 * p31 + p43 * p43 + p41 * p41 + p31 * p31 - (p1 * p431 + p3 * p4) * p43 -
           (p3 * p431 + p1 * p4) * p41 - (p4 * p431 + p1 * p3) * p31 + p4 * p4 + p3 * p3 + p1 * p1 + p431 * p431 +
           p4 * p3 * p1 * p431 - 4;
    f[3] = p43 * p42 * p32 + p43 * p43 + p42 * p42 + p32 * p32 - (p2 * p432 + p3 * p4) * p43 -
           (p3 * p432 + p2 * p4) * p42 - (p4 * p432 + p2 * p3) * p32 + p4 * p4 + p3 * p3 + p2 * p2 + p432 * p432 +
           p4 * p3 * p2 * p432 - 4;
    f[4] = -2 * pi + p1 * p2 * p3 * p4 + p1 * p432 + p2 * p431 + p3 * p421 + p321 * p4 + p21 * p43 + p32 * p41 -
           p1 * p2 * p43 - p1 * p4 * p32 - p2 * p3 * p41 - p3 * p4 * p21 - p42 * p31;
    f[5] = p2 * p3 * p4 - p32 * p4 - p21 * p3 * p41 + p321 * p41 - p3 * p42 + p1 * p3 * p421 - p31 * p421 -
           p2 * p43 + p21 * p431 + 2 * p432 - p1 * pi;
    f[6] = -(p1 * p4) + 2 * p41 + p21 * p42 - p2 * p421 + p31 * p43 + p21 * p32 * p43 - p2 * p321 * p43 -
           p3 * p431 - p21 * p3 * p432 + p321 * p432 + p2 * p3 * pi - p32 * pi;
    f[7] = -(p1 * p2 * p3) + p21 * p3 + p2 * p31 + p1 * p32 - 2 * p321 + p2 * p41 * p43 - p421 * p43 -
           p2 * p4 * p431 + p42 * p431 - p41 * p432 + p4 * pi;
    f[8] = -(p1 * p2) + 2 * p21 + p31 * p32 - p3 * p321 + p41 * p42 - p4 * p421 + p32 * p41 * p43 -
           p32 * p4 * p431 - p3 * p41 * p432 + p431 * p432 + p3 * p4 * pi - p43 * pi;
    f[9] = -(p1 * p2 * p4) + p21 * p4 + p2 * p41 + p1 * p42 - 2 * p421 + p1 * p32 * p43 - p321 * p43 -
           p32 * p431 - p1 * p3 * p432 + p31 * p432 + p3 * pi;
    f[10] = p1 * p3 * p4 - p31 * p4 - p21 * p32 * p4 + p2 * p321 * p4 - p3 * p41 - p321 * p42 + p32 * p421 -
            p1 * p43 + 2 * p431 + p21 * p432 - p2 * pi;
    f[11] = -(p2 * p4) + p21 * p41 + 2 * p42 - p1 * p421 + p32 * p43 - p321 * p431 - p3 * p432 + p31 * pi;
    f[12] = p1 * p3 - 2 * p31 - p21 * p32 + p2 * p321 - p41 * p43 + p4 * p431 + p421 * p432 - p42 * pi;
    f[13] = p2 * p3 - p21 * p31 - 2 * p32 + p1 * p321 - p21 * p41 * p43 - p42 * p43 + p1 * p421 * p43 +
            p21 * p4 * p431 - p421 * p431 + p4 * p432 - p1 * p4 * pi + p41 * pi;
    f[14] = -(p3 * p4) + p31 * p41 + p21 * p32 * p41 - p2 * p321 * p41 + p32 * p42 - p1 * p32 * p421 +
            p321 * p421 + 2 * p43 - p1 * p431 - p2 * p432 + p1 * p2 * pi - p21 * pi;
    return f;
}

bool is_member(const Point& p) {
    for (const auto& v : eval_ideal(p))
        if (!v.is_zero()) return false;
    return true;
}

std::vector<int> nonzero_generators(const Point& p) {
    std::vector<int> out;
    auto f = eval_ideal(p);
    for (int i = 0; i < kCoords; ++i)
        if (!f[i].is_zero()) out.push_back(i + 1);
    return out;
}

PartialPoint partial_of(const Point& p) {
    PartialPoint r;
    for (int i = 0; i < 11; ++i) r[i] = p[i];
    return r;
}

std::vector<Number> solve_quadratic(const Number& a, const Number& b, const Number& c) {
    if (a.is_zero()) {
        if (b.is_zero()) {
            if (c.is_zero()) throw UnderdeterminedError("underdetermined completion");
            return {};
        }
        return {-c / b};
    }
    Number disc = b * b - 4 * a * c;
    auto r = exact_sqrt(disc);
    if (!r) return {};
    Number inv = (2 * a).inverse();
    if (r->is_zero()) return {-b * inv};
    return {(-b + *r) * inv, (-b - *r) * inv};
}

std::vector<Point> complete_point(const PartialPoint& partial) {
    const Field* f = partial[0].field();
    for (const auto& x : partial)
        if (x.field() != f && x.field() != rationals()) f = x.field();
    Point base;
    for (int i = 0; i < 11; ++i) base[i] = partial[i].field() == f ? partial[i] : partial[i].lift_to(f);
    for (int i = 11; i < kCoords; ++i) base[i] = Number(f, 0);
    // f1..f4 involve exactly one triple trace each
    const int unknown[4] = {P321, P421, P431, P432};
    std::vector<std::vector<Number>> roots(4);
    for (int g = 0; g < 4; ++g) {
        auto value_at = [&](long x) {
            Point q = base;
            q[unknown[g]] = Number(f, x);
            return eval_ideal(q)[g];
        };
        Number f0 = value_at(0), fp = value_at(1), fm = value_at(-1);
        Number a = (fp + fm) * Number(f, mpq_class(1, 2)) - f0;
        Number b = (fp - fm) * Number(f, mpq_class(1, 2));
        roots[g] = solve_quadratic(a, b, f0);
        if (roots[g].empty()) return {};
    }
    std::vector<Point> out;
    std::set<std::string> seen;
    for (const auto& r321 : roots[0])
        for (const auto& r421 : roots[1])
            for (const auto& r431 : roots[2])
                for (const auto& r432 : roots[3]) {
                    Point q = base;
                    q[P321] = r321;
                    q[P421] = r421;
                    q[P431] = r431;
                    q[P432] = r432;
                    if (!is_member(q)) continue;
                    if (seen.insert(point_key(q)).second) out.push_back(q);
                }
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return point_key(a) < point_key(b); });
    return out;
}

// ---------------------------------------------------------------- traces

Number TraceEvaluator::pair(int i, int j) { return trace({i, j}); }

Number TraceEvaluator::lookup(const std::vector<int>& w) {
    const Field* f = p_[0].field();
    switch (w.size()) {
        case 0:
            return Number(f, 2);
        case 1:
            return p_[P1 + w[0] - 1];
        case 2: {
            static const int idx[5][5] = {{}, {}, {0, P21}, {0, P31, P32}, {0, P41, P42, P43}};
            return p_[idx[w[0]][w[1]]];
        }
        case 3: {
            const int code = w[0] * 100 + w[1] * 10 + w[2];
            switch (code) {
                case 321: return p_[P321];
                case 421: return p_[P421];
                case 431: return p_[P431];
                case 432: return p_[P432];
            }
            break;
        }
        case 4:
            return p_[PINF];
    }
    throw std::logic_error("trace lookup: unexpected word");
}

Number TraceEvaluator::trace(const std::vector<int>& w0) {
    std::vector<int> w = w0;
    // free and cyclic reduction
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == -w[i + 1]) {
                w.erase(w.begin() + i, w.begin() + i + 2);
                changed = true;
                break;
            }
        }
        if (!changed && w.size() >= 2 && w.front() == -w.back()) {
            w.pop_back();
            w.erase(w.begin());
            changed = true;
        }
    }
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Number result;
    const size_t n = w.size();
    auto without = [&](size_t i) {
        std::vector<int> r = w;
        r.erase(r.begin() + i);
        return r;
    };
    size_t inv = n;
    for (size_t i = 0; i < n; ++i)
        if (w[i] < 0) {
            inv = i;
            break;
        }
    size_t rep = n;
    for (size_t i = 0; i + 1 < n; ++i)
        if (w[i] == w[i + 1]) {
            rep = i;
            break;
        }
    size_t asc = n;
    for (size_t i = 0; i + 1 < n; ++i)
        if (w[i] < w[i + 1]) {
            asc = i;
            break;
        }
    if (inv < n) {
        // X^-1 = Tr(X) I - X
        std::vector<int> pos = w;
        pos[inv] = -pos[inv];
        result = trace({-w[inv]}) * trace(without(inv)) - trace(pos);
    } else if (rep < n) {
        // XX = Tr(X) X - I
        std::vector<int> shorter = without(rep);
        std::vector<int> shortest = shorter;
        shortest.erase(shortest.begin() + rep);
        result = trace({w[rep]}) * trace(shorter) - trace(shortest);
    } else if (n >= 2 && w.front() == w.back()) {
        std::vector<int> rot(w.begin() + 1, w.end());
        rot.push_back(w.front());
        result = trace(rot);
    } else if (asc < n) {
        // AB + BA = Tr(A) B + Tr(B) A + (Tr(AB) - Tr(A)Tr(B)) I
        const int a = w[asc], b = w[asc + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[asc], swapped[asc + 1]);
        std::vector<int> only_a = without(asc + 1);
        std::vector<int> only_b = without(asc);
        std::vector<int> neither = only_a;
        neither.erase(neither.begin() + asc);
        Number ta = trace({a}), tb = trace({b});
        result = -trace(swapped) + tb * trace(only_a) + ta * trace(only_b) +
                 (trace({b, a}) - ta * tb) * trace(neither);
    } else {
        result = lookup(w);
    }
    memo_.emplace(w, result);
    return result;
}

}  // namespace garnier
