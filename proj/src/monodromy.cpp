#include "garnier/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace garnier {

namespace {

using X = ExtNumber;

Number gfun(const Number& x, const Number& y, const Number& z) {
    return x * x + y * y + z * z - x * y * z - 4;
}

// Shared state of one reconstruction attempt.
struct Ctx {
    const Point& p;
    const Field* f;
    TraceEvaluator ev;
    TowerPtr tw;

    explicit Ctx(const Point& pt) : p(pt), f(point_field(pt)), ev(pt), tw(RadicalTower::create(point_field(pt))) {}

    Number t(std::initializer_list<int> w) { return ev.trace(std::vector<int>(w)); }
    Number t(const std::vector<int>& w) { return ev.trace(w); }
    X e(const Number& x) { return tw->embed(x); }
    X e(long v) { return tw->embed(Number(f, v)); }
};

using Quad = std::array<Mat2, 4>;

MonodromyTuple build_tuple(Ctx& c, const std::map<int, Mat2>& by_index, const std::string& chart) {
    MonodromyTuple t;
    t.tower = c.tw;
    for (int s = 1; s <= 4; ++s) t.m[s - 1] = by_index.at(s);
    t.chart = chart;
    return t;
}

std::string order_label(const char* name, int i, int j, int k, int l) {
    return std::string(name) + "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k) +
           ",l=" + std::to_string(l) + ")";
}

// Attempts recorded by the current reconstruction (null when not audited).
thread_local std::vector<ChartAttempt>* g_attempts = nullptr;

bool accept(const MonodromyTuple& t, const Point& p) {
    bool ok = true;
    for (const auto& m : t.m)
        if (m.det() != t.tower->one()) ok = false;
    ok = ok && verify_traces(t, p);
    if (g_attempts) g_attempts->push_back({t.chart, ok});
    return ok;
}

// Theorem charts U0, U1, U2 for the ordering (i, j, k, l).
std::optional<MonodromyTuple> theorem_chart(const Point& p, int chart, int i, int j, int k, int l) {
    Ctx c(p);
    Number pi = p[i - 1], pj = p[j - 1], pk = p[k - 1], pl = p[l - 1];
    Number pjk = c.t({j, k});
    Number r2 = pjk * pjk - 4;
    if (r2.is_zero()) return std::nullopt;
    Number pjkl = c.t({j, k, l}), pijk = c.t({i, j, k}), pijkl = c.t({i, j, k, l});
    Number g;
    if (chart == 0) g = gfun(pjk, pl, pjkl);
    else if (chart == 1) g = gfun(pjk, pj, pk);
    else g = gfun(pjk, pi, pijk);
    if (g.is_zero()) return std::nullopt;

    Number pkl = c.t({k, l}), pjl = c.t({j, l}), pik = c.t({i, k}), pij = c.t({i, j}), pil = c.t({i, l});
    Number ykl = 2 * pkl + pjk * pjl - pj * pjkl - pk * pl;
    Number yjl = 2 * pjl + pjk * pkl - pk * pjkl - pj * pl;
    Number yik = 2 * pik + pij * pjk - pj * pijk - pi * pk;
    Number yij = 2 * pij + pik * pjk - pk * pijk - pi * pj;
    Number yil = 2 * pil + pijk * pjkl - pjk * pijkl - pi * pl;
    Number yijkl = 2 * pijkl - pil * pjk - pi * pjkl - pijk * pl + pi * pjk * pl;

    X r = c.tw->sqrt(r2);
    X half = c.e(Number(c.f, mpq_class(1, 2)));
    X lp = (c.e(pjk) + r) * half, lm = (c.e(pjk) - r) * half;
    X ri = r.inverse();
    X r2i = c.e(r2.inverse());
    X gi = c.e(g.inverse());
    auto E = [&](const Number& x) { return c.e(x); };

    Mat2 Ml, Mk, Mj, Mi;
    X ul11 = (E(pjkl) - lm * pl) * ri, ul22 = -((E(pjkl) - lp * pl) * ri);
    X vk11 = -((E(pj) - lp * pk) * ri), vk22 = (E(pj) - lm * pk) * ri;
    X wj11 = -((E(pk) - lp * pj) * ri), wj22 = (E(pk) - lm * pj) * ri;
    X ti11 = (E(pijk) - lm * pi) * ri, ti22 = -((E(pijk) - lp * pi) * ri);
    if (chart == 0) {
        Ml = {ul11, -(E(g) * r2i), c.e(1), ul22};
        Mk = {vk11, -((E(ykl) - lm * yjl) * r2i), (E(ykl) - lp * yjl) * gi, vk22};
        Mj = {wj11, -((E(yjl) - lp * ykl) * r2i), (E(yjl) - lm * ykl) * gi, wj22};
        Mi = {ti11, -((E(yil) + lp * yijkl) * r2i), (E(yil) + lm * yijkl) * gi, ti22};
    } else if (chart == 1) {
        Ml = {ul11, -((E(ykl) - lp * yjl) * r2i), (E(ykl) - lm * yjl) * gi, ul22};
        Mk = {vk11, -(E(g) * r2i), c.e(1), vk22};
        Mj = {wj11, lp * g * r2i, -lm, wj22};
        Mi = {ti11, -((E(yik) - lp * yij) * r2i), (E(yik) - lm * yij) * gi, ti22};
    } else {
        Ml = {ul11, -((E(yil) + lm * yijkl) * r2i), (E(yil) + lp * yijkl) * gi, ul22};
        Mk = {vk11, -((E(yik) - lm * yij) * r2i), (E(yik) - lp * yij) * gi, vk22};
        Mj = {wj11, -((E(yij) - lp * yik) * r2i), (E(yij) - lm * yik) * gi, wj22};
        Mi = {ti11, -(E(g) * r2i), c.e(1), ti22};
    }
    static const char* names[] = {"U0", "U1", "U2"};
    auto t = build_tuple(c, {{i, Mi}, {j, Mj}, {k, Mk}, {l, Ml}}, order_label(names[chart], i, j, k, l));
    if (!accept(t, p)) return std::nullopt;
    return t;
}

std::vector<std::array<int, 4>> orderings() {
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> a{1, 2, 3, 4};
    do out.push_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return out;
}

// Triangular chart when every Theorem chart degenerates but some p_jk != +-2.
std::vector<MonodromyTuple> lemma_chart(const Point& p, bool first_only) {
    std::vector<MonodromyTuple> out;
    for (const auto& o : orderings()) {
        const int k = o[0], j = o[1], l = o[2], i = o[3];
        for (unsigned signs = 0; signs < 16; ++signs) {
            Ctx c(p);
            std::array<X, 5> lam;
            for (int s = 1; s <= 4; ++s) {
                X rs = c.tw->sqrt(p[s - 1] * p[s - 1] - 4);
                X half = c.e(Number(c.f, mpq_class(1, 2)));
                lam[s] = (c.e(p[s - 1]) + ((signs >> (s - 1)) & 1 ? -rs : rs)) * half;
            }
            X lk = lam[k], lj = lam[j], ll = lam[l], li = lam[i];
            X off_lk = c.e(c.t({l, k})) - ll * lk - (ll * lk).inverse();
            if (off_lk.is_zero()) continue;
            X zero = c.tw->zero();
            Mat2 Mk{lk, c.e(1), zero, lk.inverse()};
            Mat2 Mj{lj, -(lj * lk), zero, lj.inverse()};
            Mat2 Ml{ll, zero, off_lk, ll.inverse()};
            X off_il = c.e(c.t({i, l})) - li * ll - (li * ll).inverse();
            Mat2 Mi;
            if (off_il.is_zero())
                Mi = {li, zero, c.e(c.t({i, k})) - li * lk - (li * lk).inverse(), li.inverse()};
            else
                Mi = {li, off_il * off_lk.inverse(), zero, li.inverse()};
            auto t = build_tuple(c, {{i, Mi}, {j, Mj}, {k, Mk}, {l, Ml}}, order_label("L", i, j, k, l));
            if (accept(t, p)) {
                out.push_back(t);
                if (first_only) return out;
            }
        }
    }
    return out;
}

// Non-diagonalizable branch: every p_s and p_st equals +-2.
std::vector<MonodromyTuple> nondiag_chart(const Point& p, bool first_only) {
    std::vector<MonodromyTuple> out;
    for (const auto& o : orderings()) {
        const int i = o[0], j = o[1], k = o[2], l = o[3];
        Ctx c(p);
        auto eps = [&](int s) { return p[s - 1] * Number(c.f, mpq_class(1, 2)); };
        auto eps2 = [&](int a, int b) { return c.t({a, b}) * Number(c.f, mpq_class(1, 2)); };
        Number ei = eps(i), ej = eps(j), eij = eps2(i, j);
        if (eij.is_zero()) continue;
        auto third = [&](int s) {
            Number es = eps(s), eis = eps2(i, s), ejs = eps2(j, s), pijs = c.t({i, j, s});
            Number d4 = (4 * eij).inverse();
            Number a = (pijs - 2 * eis * ej - 2 * ejs * ei + 2 * ei * ej * es) * d4;
            Number b = (ejs - ej * es) * (2 * eij).inverse();
            Number cc = 2 * (eis - ei * es);
            Number d = (2 * eis * ej + 2 * ejs * ei + 8 * eij * es - 2 * ei * ej * es - pijs) * d4;
            return Mat2::from_base(c.tw, a, b, cc, d);
        };
        Mat2 Mi = Mat2::from_base(c.tw, ei, Number(c.f, 1), Number(c.f, 0), ei);
        Mat2 Mj = Mat2::from_base(c.tw, ej, Number(c.f, 0), 4 * eij, ej);
        auto t = build_tuple(c, {{i, Mi}, {j, Mj}, {k, third(k)}, {l, third(l)}}, order_label("ND", i, j, k, l));
        if (accept(t, p)) {
            out.push_back(t);
            if (first_only) return out;
        }
    }
    return out;
}

// Solve the 4x4 linear system Tr(X W) = rhs(W) over the words W. Returns a
// particular solution and, when the rank is 3, one kernel direction.
struct LinearSolve {
    bool ok = false;
    int rank = 0;
    Mat2 x0, x1;
};

LinearSolve solve_traces(Ctx& c, const std::vector<std::pair<Mat2, Number>>& rows) {
    // Tr(X W) = x11 W11 + x12 W21 + x21 W12 + x22 W22
    std::vector<std::array<X, 5>> m;
    for (const auto& [w, v] : rows) m.push_back({w.a, w.c, w.b, w.d, c.e(v)});
    std::vector<int> pivcol;
    size_t row = 0;
    for (int col = 0; col < 4 && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        X inv = m[row][col].inverse();
        for (auto& v : m[row]) v = v * inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            X fct = m[r][col];
            for (int q = 0; q < 5; ++q) m[r][q] = m[r][q] - fct * m[row][q];
        }
        pivcol.push_back(col);
        ++row;
    }
    for (size_t r = row; r < m.size(); ++r)
        if (!m[r][4].is_zero()) return {};
    LinearSolve s;
    s.rank = static_cast<int>(pivcol.size());
    if (s.rank < 3) return s;
    std::array<X, 4> v0, v1;
    for (auto& z : v0) z = c.tw->zero();
    for (auto& z : v1) z = c.tw->zero();
    int free_col = -1;
    for (int col = 0; col < 4; ++col)
        if (std::find(pivcol.begin(), pivcol.end(), col) == pivcol.end()) free_col = col;
    if (free_col >= 0) v1[free_col] = c.e(1);
    for (size_t r = 0; r < pivcol.size(); ++r) {
        v0[pivcol[r]] = m[r][4];
        if (free_col >= 0) v1[pivcol[r]] = -m[r][free_col];
    }
    s.ok = true;
    s.x0 = {v0[0], v0[1], v0[2], v0[3]};
    s.x1 = {v1[0], v1[1], v1[2], v1[3]};
    return s;
}

// Words of length <= 3 over the built letters, as (letters, matrix).
std::vector<std::pair<std::vector<int>, Mat2>> short_words(Ctx& c, const std::map<int, Mat2>& built) {
    std::vector<std::pair<std::vector<int>, Mat2>> out{{{}, Mat2::identity(c.tw)}};
    size_t start = 0;
    for (int len = 1; len <= 3; ++len) {
        size_t end = out.size();
        for (size_t q = start; q < end; ++q)
            for (const auto& [s, m] : built) {
                auto w = out[q].first;
                w.push_back(s);
                out.push_back({w, out[q].second * m});
            }
        start = end;
    }
    return out;
}

// Fill the unbuilt matrices one at a time from trace conditions against
// the already built ones; the determinant fixes a one-dimensional remainder.
void fill_generic(Ctx& c, std::map<int, Mat2> built, std::vector<std::map<int, Mat2>>& results) {
    if (built.size() == 4) {
        results.push_back(built);
        return;
    }
    auto words = short_words(c, built);
    int best = -1;
    LinearSolve best_sol;
    for (int s = 1; s <= 4; ++s) {
        if (built.count(s)) continue;
        std::vector<std::pair<Mat2, Number>> rows;
        for (const auto& [w, m] : words) {
            std::vector<int> full{s};
            full.insert(full.end(), w.begin(), w.end());
            rows.push_back({m, c.t(full)});
        }
        LinearSolve sol = solve_traces(c, rows);
        if (!sol.ok) continue;
        if (best < 0 || sol.rank > best_sol.rank) {
            best = s;
            best_sol = sol;
        }
    }
    if (best < 0) return;
    if (best_sol.rank == 4) {
        built[best] = best_sol.x0;
        fill_generic(c, built, results);
        return;
    }
    // det(x0 + t x1) = 1, quadratic a t^2 + b t + (det x0 - 1).
    const Mat2& u = best_sol.x0;
    const Mat2& v = best_sol.x1;
    X qa = v.det();
    X qb = u.a * v.d + v.a * u.d - u.b * v.c - v.b * u.c;
    X qc = u.det() - c.e(1);
    std::vector<X> roots;
    if (qa.is_zero()) {
        if (qb.is_zero()) return;
        roots.push_back(-(qc * qb.inverse()));
    } else {
        X disc = qb * qb - c.e(4) * qa * qc;
        if (!disc.is_base()) return;
        X sq = c.tw->sqrt(disc.base_value());
        X den = (c.e(2) * qa).inverse();
        roots.push_back((-qb + sq) * den);
        roots.push_back((-qb - sq) * den);
    }
    for (const auto& t : roots) {
        auto next = built;
        next[best] = {u.a + t * v.a, u.b + t * v.b, u.c + t * v.c, u.d + t * v.d};
        fill_generic(c, next, results);
    }
}

// Diagonalizable branch: M_i diagonal, M_k normalized with unit 21 entry,
// the other two solved from trace conditions.
std::vector<MonodromyTuple> diag_chart(const Point& p, bool first_only) {
    std::vector<MonodromyTuple> out;
    for (int i = 1; i <= 4; ++i) {
        Number pi = p[i - 1];
        if ((pi * pi - 4).is_zero()) continue;
        for (int branch = 0; branch < 2; ++branch) {
            for (int k = 1; k <= 4; ++k) {
                if (k == i) continue;
                Ctx c(p);
                X r = c.tw->sqrt(pi * pi - 4);
                X lam = (c.e(pi) + (branch ? -r : r)) * c.e(Number(c.f, mpq_class(1, 2)));
                X D = lam * lam - c.e(1);
                X Di = D.inverse();
                X eki = c.e(c.t({k, i}) * Number(c.f, mpq_class(1, 2)));
                X pk = c.e(p[k - 1]);
                X zero = c.tw->zero();
                Mat2 Mi{lam, zero, zero, lam.inverse()};
                X q = pk * lam - eki * (lam * lam + c.e(1));
                Mat2 Mk{-((pk - c.e(2) * eki * lam) * Di), -(q * q * Di * Di), c.e(1),
                        lam * (pk * lam - c.e(2) * eki) * Di};
                std::vector<std::map<int, Mat2>> filled;
                fill_generic(c, {{i, Mi}, {k, Mk}}, filled);
                for (auto& b : filled) {
                    int j = 0, l = 0;
                    for (int s = 1; s <= 4; ++s)
                        if (s != i && s != k) (j ? l : j) = s;
                    auto t = build_tuple(c, b, order_label("D", i, j, k, l));
                    if (accept(t, p)) {
                        out.push_back(t);
                        if (first_only) return out;
                    }
                }
            }
        }
    }
    return out;
}

std::vector<MonodromyTuple> reconstruct_impl(const Point& p, bool first_only) {
    std::vector<MonodromyTuple> out;
    bool any_theorem = false, some_pjk = false, all_pjk_2 = true;
    TraceEvaluator ev(p);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            if (a == b) continue;
            Number x = ev.trace({a, b});
            if (!(x * x - 4).is_zero()) {
                some_pjk = true;
                all_pjk_2 = false;
            }
        }
    for (const auto& o : orderings())
        for (int chart = 0; chart < 3; ++chart) {
            auto t = theorem_chart(p, chart, o[0], o[1], o[2], o[3]);
            if (!t) continue;
            any_theorem = true;
            out.push_back(*t);
            if (first_only) return out;
        }
    if (!any_theorem && some_pjk) {
        auto l = lemma_chart(p, first_only);
        out.insert(out.end(), l.begin(), l.end());
    }
    if (all_pjk_2) {
        bool all_p2 = true;
        for (int s = 0; s < 4; ++s)
            if (!(p[s] * p[s] - 4).is_zero()) all_p2 = false;
        auto d = all_p2 ? nondiag_chart(p, first_only) : diag_chart(p, first_only);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

}  // namespace

Mat2 MonodromyTuple::product() const { return m[3] * m[2] * m[1] * m[0]; }

std::vector<MonodromyTuple> reconstruct_all(const Point& p) { return reconstruct_impl(p, false); }

std::vector<ChartAttempt> chart_attempts(const Point& p) {
    std::vector<ChartAttempt> log;
    g_attempts = &log;
    try {
        reconstruct_impl(p, false);
    } catch (...) {
        g_attempts = nullptr;
        throw;
    }
    g_attempts = nullptr;
    return log;
}

MonodromyTuple reconstruct(const Point& p) {
    auto v = reconstruct_impl(p, true);
    if (v.empty()) throw ChartError("no relevant chart");
    return v.front();
}

std::array<ExtNumber, kCoords> tuple_traces(const MonodromyTuple& t) {
    const auto& m = t.m;
    std::array<ExtNumber, kCoords> r;
    for (int s = 0; s < 4; ++s) r[s] = m[s].trace();
    Mat2 m21 = m[1] * m[0], m32 = m[2] * m[1];
    r[PINF] = t.product().trace();
    r[P21] = m21.trace();
    r[P31] = (m[2] * m[0]).trace();
    r[P32] = m32.trace();
    r[P41] = (m[3] * m[0]).trace();
    r[P42] = (m[3] * m[1]).trace();
    r[P43] = (m[3] * m[2]).trace();
    r[P321] = (m[2] * m21).trace();
    r[P432] = (m[3] * m32).trace();
    r[P431] = (m[3] * m[2] * m[0]).trace();
    r[P421] = (m[3] * m21).trace();
    return r;
}

bool verify_traces(const MonodromyTuple& t, const Point& p) {
    auto tr = tuple_traces(t);
    for (int s = 0; s < kCoords; ++s)
        if (tr[s] != t.tower->embed(p[s])) return false;
    return true;
}

bool skein_audit(const MonodromyTuple& t) {
    std::vector<Mat2> set(t.m.begin(), t.m.end());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) set.push_back(t.m[a] * t.m[b]);
    for (const auto& A : set)
        for (const auto& B : set)
            if ((A * B).trace() + (A.inverse() * B).trace() != A.trace() * B.trace()) return false;
    return true;
}

int rank_of(std::vector<std::array<X, 4>> m) {
    int row = 0;
    for (int col = 0; col < 4 && row < static_cast<int>(m.size()); ++col) {
        int piv = row;
        while (piv < static_cast<int>(m.size()) && m[piv][col].is_zero()) ++piv;
        if (piv == static_cast<int>(m.size())) continue;
        std::swap(m[row], m[piv]);
        X inv = m[row][col].inverse();
        for (size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col].is_zero()) continue;
            X f = m[r][col] * inv;
            for (int q = 0; q < 4; ++q) m[r][q] = m[r][q] - f * m[row][q];
        }
        ++row;
    }
    return row;
}

bool is_reducible(const MonodromyTuple& t) {
    // Burnside: irreducible iff the generated algebra is all of M2.
    std::vector<std::array<X, 4>> basis;
    auto add = [&](const Mat2& m) {
        basis.push_back({m.a, m.b, m.c, m.d});
        if (rank_of(basis) == static_cast<int>(basis.size())) return true;
        basis.pop_back();
        return false;
    };
    std::vector<Mat2> frontier{Mat2::identity(t.tower)};
    add(frontier[0]);
    while (!frontier.empty() && basis.size() < 4) {
        std::vector<Mat2> next;
        for (const auto& w : frontier)
            for (const auto& g : t.m) {
                Mat2 m = w * g;
                if (add(m)) next.push_back(m);
            }
        frontier = std::move(next);
    }
    return basis.size() < 4;
}

GroupOrder group_order(const MonodromyTuple& t, long cap) {
    GroupOrder g;
    for (int s = 0; s < 4; ++s) {
        const Mat2& m = t.m[s];
        bool parabolic = (m.trace() * m.trace() - t.tower->embed(Number(t.tower->base(), 4))).is_zero();
        if (parabolic && !m.is_scalar(1) && !m.is_scalar(-1)) {
            g.status = OrderStatus::infinite;
            g.reason = "M" + std::to_string(s + 1) + " is not diagonalizable";
            return g;
        }
    }
    std::set<std::string> seen;
    std::deque<Mat2> queue;
    Mat2 id = Mat2::identity(t.tower);
    seen.insert(id.key());
    queue.push_back(id);
    while (!queue.empty()) {
        Mat2 w = queue.front();
        queue.pop_front();
        for (const auto& m : t.m) {
            Mat2 x = w * m;
            if (seen.insert(x.key()).second) {
                if (static_cast<long>(seen.size()) >= cap) {
                    g.status = OrderStatus::exceeded;
                    g.sl2_count = static_cast<long>(seen.size());
                    g.reason = "closure reached the cap";
                    return g;
                }
                queue.push_back(x);
            }
        }
    }
    g.status = OrderStatus::finite;
    g.sl2_count = static_cast<long>(seen.size());
    g.contains_minus_identity = seen.count((-id).key()) > 0;
    g.projective_count = g.contains_minus_identity ? g.sl2_count / 2 : g.sl2_count;
    return g;
}

std::string format_order(const GroupOrder& g) {
    switch (g.status) {
        case OrderStatus::infinite: return "infinite";
        case OrderStatus::exceeded: return "exceeded";
        default: return std::to_string(g.projective_count);
    }
}

std::string dump_tuple(const MonodromyTuple& t) {
    std::string s = "# field " + field_declaration(t.tower->base()) + "\n";
    s += "# tower " + t.tower->declaration() + "\n";
    s += "# chart " + t.chart + "\n";
    for (int q = 0; q < 4; ++q) {
        const Mat2& m = t.m[q];
        s += "M" + std::to_string(q + 1) + " " + m.a.encode() + " " + m.b.encode() + " " + m.c.encode() + " " +
             m.d.encode() + "\n";
    }
    return s;
}

}  // namespace garnier
