#include "garnier/audit.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <unordered_set>

#include "garnier/braid.hpp"
#include "garnier/pvi.hpp"
#include "garnier/symmetry.hpp"

namespace garnier {

namespace {

bool same(const Point& a, const Point& b) { return point_key(a) == point_key(b); }

std::string trace_signature(const MonodromyTuple& t) {
    std::string s;
    for (const auto& x : tuple_traces(t)) s += (x.is_base() ? x.base_value().key() : "ext:" + x.key()) + ";";
    return s;
}

BraidWord b(int i, int j) { return pure_generator(i, j); }
BraidWord inv(const BraidWord& w) { return inverse_word(w); }
BraidWord cat(std::initializer_list<BraidWord> ws) {
    BraidWord out;
    for (const auto& w : ws) out.insert(out.end(), w.begin(), w.end());
    return out;
}

void fail(PropertyResult& r, const std::string& witness) {
    if (r.pass) r.witness = witness;
    r.pass = false;
}

}  // namespace

std::string expected_order_text(const Table2Row& row) {
    return row.group_order < 0 ? "infinite" : std::to_string(row.group_order);
}

RowCheck check_table2_row(const Table2Row& row, size_t cap, bool with_order) {
    RowCheck r;
    r.row = row.index;
    auto comps = table2_completions(row);
    if (comps.empty()) {
        r.error = "no in-field completion";
        return r;
    }
    r.completed = true;
    auto orb = p4_orbit(comps[0], cap);
    r.size = orb.size();
    r.status = orb.status;
    r.size_ok = orb.finite() && r.size == static_cast<size_t>(row.orbit_size);
    if (with_order) {
        try {
            auto t = reconstruct(comps[0]);
            r.chart = t.chart;
            r.order = format_order(group_order(t));
            r.order_ok = r.order == expected_order_text(row);
        } catch (const ChartError& e) {
            r.error = e.what();
        }
    }
    return r;
}

RoundTripCheck round_trip_row(const Table2Row& row) {
    RoundTripCheck r;
    r.row = row.index;
    auto comps = table2_completions(row);
    if (comps.empty()) {
        r.detail = "no in-field completion";
        return r;
    }
    const Point& p = comps[0];
    for (const auto& a : chart_attempts(p))
        if (!a.verified && a.chart.rfind("U", 0) == 0) r.detail += "unverified " + a.chart + ";";
    auto all = reconstruct_all(p);
    r.charts = all.size();
    r.verified = !all.empty() && r.detail.empty();
    for (const auto& t : all)
        if (!verify_traces(t, p)) {
            r.verified = false;
            r.detail += "trace mismatch " + t.chart + ";";
        }
    r.agree = !all.empty();
    if (r.agree) {
        std::string sig = trace_signature(all.front());
        std::string ord = format_order(group_order(all.front()));
        for (size_t i = 1; i < all.size(); ++i)
            if (trace_signature(all[i]) != sig || format_order(group_order(all[i])) != ord) {
                r.agree = false;
                r.detail += "disagree " + all.front().chart + " vs " + all[i].chart + ";";
            }
    }
    return r;
}

Row25Check check_row25() {
    using C = std::complex<long double>;
    Row25Check r;
    auto comps = table2_completions(table2_row(25));
    if (comps.empty()) return r;
    const long double s5 = std::sqrt(5.0L);
    const C I(0, 1);
    const long double A = std::sqrt(2 * (5 + s5)), B = std::sqrt(10 * (5 + s5));
    const long double e = std::sqrt(2 / (5 + s5));
    using M = std::array<C, 4>;
    // printed in the basis where M3 M2 is diagonal
    const std::array<M, 4> printed = {
        M{1.0L - I * e, C((5 - s5) / 10), C(1), 1.0L + I * e},
        M{1.0L - I * (3 + s5) / A, (2 + 2 * s5 - I * A + I * B) / (4 * (s5 - 5)),
          I * (4.0L * I * (2 + s5) + A + B) / 8.0L, 1.0L + I * (3 + s5) / A},
        M{I * (3 + s5 + I * A) / A, (-1 + s5 - I * A) / (2 * (s5 - 5)),
          -I * (-2.0L * I * (1 + s5) + 3 * A + B) / 8.0L, -1.0L - I * (3 + s5) / A},
        M{-1.0L - I * (s5 - 3) / A, (-1 + s5 + 2.0L * I * A - I * B) / (2 * (5 + s5)),
          (-1 + s5 - 2.0L * I * A + I * B) / 4.0L, I * (-3 + s5 + I * A) / A}};
    auto mul = [](const M& x, const M& y) {
        return M{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                 x[2] * y[1] + x[3] * y[3]};
    };
    auto tr = [](const M& x) { return x[0] + x[3]; };
    const auto &m1 = printed[0], &m2 = printed[1], &m3 = printed[2], &m4 = printed[3];
    const std::array<C, kCoords> t = {
        tr(m1), tr(m2), tr(m3), tr(m4), tr(mul(m4, mul(m3, mul(m2, m1)))), tr(mul(m2, m1)), tr(mul(m3, m1)),
        tr(mul(m3, m2)), tr(mul(m4, m1)), tr(mul(m4, m2)), tr(mul(m4, m3)), tr(mul(m3, mul(m2, m1))),
        tr(mul(m4, mul(m3, m2))), tr(mul(m4, mul(m3, m1))), tr(mul(m4, mul(m2, m1)))};
    // the printed tuple matches one of the completions
    double best = 1e9;
    const Point* match = nullptr;
    for (const auto& p : comps) {
        double err = 0;
        for (int i = 0; i < kCoords; ++i) err = std::max(err, static_cast<double>(std::abs(t[i] - C(p[i].approx()))));
        if (err < best) {
            best = err;
            match = &p;
        }
    }
    r.printed_error = best;
    r.printed = best < 1e-12;
    try {
        auto mt = reconstruct(*match);
        r.chart = mt.chart;
        r.exact = verify_traces(mt, *match);
    } catch (const ChartError&) {
        r.exact = false;
    }
    return r;
}

std::vector<Point> table2_sample_points(size_t n, unsigned seed) {
    std::vector<Point> out;
    std::mt19937 rng(seed);
    while (out.size() < n) {
        size_t before = out.size();
        for (const auto& row : table2_rows()) {
            if (row.orbit_size > 300) continue;
            auto comps = table2_completions(row);
            if (comps.empty()) continue;
            auto orb = p4_orbit(comps[0]);
            std::uniform_int_distribution<size_t> pick(0, orb.size() - 1);
            for (int k = 0; k < 4; ++k) out.push_back(orb.points[pick(rng)]);
            if (out.size() >= n) break;
        }
        if (out.size() == before) break;
    }
    return out;
}

std::vector<OrbitResult<Point>> table2_orbits(size_t max_size) {
    std::vector<OrbitResult<Point>> out;
    for (const auto& row : table2_rows()) {
        if (static_cast<size_t>(row.orbit_size) > max_size) continue;
        auto comps = table2_completions(row);
        if (!comps.empty()) out.push_back(p4_orbit(comps[0]));
    }
    return out;
}

PropertyResult audit_artin(const std::vector<Point>& pts) {
    PropertyResult r;
    r.name = "artin relations";
    const std::vector<std::pair<BraidWord, BraidWord>> rels = {
        {{1, 2, 1}, {2, 1, 2}}, {{2, 3, 2}, {3, 2, 3}}, {{1, 3}, {3, 1}}};
    for (const auto& p : pts)
        for (const auto& [l, rt] : rels) {
            ++r.checked;
            if (!same(apply_word(l, p), apply_word(rt, p))) fail(r, format_word(l) + " at " + point_key(p));
        }
    return r;
}

PropertyResult audit_pure_relations(const std::vector<Point>& pts) {
    PropertyResult r;
    r.name = "pure braid relations";
    // b_rs b_ij b_rs^-1 against the five cases
    for (int i = 2; i <= 4; ++i)
        for (int j = 1; j < i; ++j)
            for (int rr = 2; rr <= 4; ++rr)
                for (int s = 1; s < rr; ++s) {
                    BraidWord rhs;
                    if ((j < s && s < rr && rr < i) || (s < rr && rr < j && j < i)) {
                        rhs = b(i, j);
                    } else if (s < j && j == rr && rr < i) {
                        rhs = cat({inv(b(i, s)), b(i, j), b(i, s)});
                    } else if (j == s && s < rr && rr < i) {
                        rhs = cat({inv(b(i, j)), inv(b(i, rr)), b(i, j), b(i, rr), b(i, j)});
                    } else if (s < j && j < rr && rr < i) {
                        rhs = cat({inv(b(rr, j)), inv(b(j, s)), b(rr, j), b(j, s), b(i, j), inv(b(j, s)),
                                   inv(b(rr, j)), b(j, s), b(rr, j)});
                    } else {
                        continue;
                    }
                    BraidWord lhs = cat({b(rr, s), b(i, j), inv(b(rr, s))});
                    for (const auto& p : pts) {
                        ++r.checked;
                        if (!same(apply_word(lhs, p), apply_word(rhs, p)))
                            fail(r, "b" + std::to_string(rr) + std::to_string(s) + " b" + std::to_string(i) +
                                        std::to_string(j) + " at " + point_key(p));
                    }
                }
    return r;
}

PropertyResult audit_ideal_invariance(const std::vector<OrbitResult<Point>>& orbits) {
    PropertyResult r;
    r.name = "ideal invariance";
    for (const auto& orb : orbits)
        for (const auto& p : orb.points) {
            for (const auto& g : p4_generators()) {
                ++r.checked;
                if (!is_member(g(p))) fail(r, point_key(p));
            }
            for (int l : {1, 2, 3, -1, -2, -3}) {
                ++r.checked;
                if (!is_member(apply_letter(l, p))) fail(r, "letter " + std::to_string(l) + " at " + point_key(p));
            }
        }
    return r;
}

PropertyResult audit_symmetries(const std::vector<Point>& pts, const std::vector<int>& rows) {
    PropertyResult r;
    r.name = "symmetries preserve membership and orbit sizes";
    for (const auto& p : pts)
        for (Sym s : all_symmetries()) {
            ++r.checked;
            if (!is_member(apply_symmetry(s, p))) fail(r, sym_name(s) + " at " + point_key(p));
        }
    for (int idx : rows) {
        auto comps = table2_completions(table2_row(idx));
        if (comps.empty()) continue;
        size_t base = p4_orbit(comps[0]).size();
        for (Sym s : all_symmetries()) {
            ++r.checked;
            auto orb = p4_orbit(apply_symmetry(s, comps[0]));
            if (!orb.finite() || orb.size() != base) fail(r, sym_name(s) + " on row " + std::to_string(idx));
        }
    }
    return r;
}

PropertyResult audit_intertwining(const std::vector<Point>& pts) {
    PropertyResult r;
    r.name = "intertwining identities";
    for (const auto& item : commutation_audit(pts)) {
        ++r.checked;
        if (!item.pass) fail(r, item.name + " at " + item.witness);
    }
    return r;
}

PropertyResult audit_skein(const std::vector<int>& rows, unsigned seed, int pairs_per_row) {
    PropertyResult r;
    r.name = "skein identity";
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(1, 4), letter(1, 4), sign(0, 1);
    for (int idx : rows) {
        auto comps = table2_completions(table2_row(idx));
        if (comps.empty()) continue;
        MonodromyTuple t;
        try {
            t = reconstruct(comps[0]);
        } catch (const ChartError&) {
            fail(r, "no chart for row " + std::to_string(idx));
            continue;
        }
        auto word = [&] {
            Mat2 m = Mat2::identity(t.tower);
            int n = len(rng);
            for (int k = 0; k < n; ++k) {
                const Mat2& g = t.m[letter(rng) - 1];
                m = m * (sign(rng) ? g : g.inverse());
            }
            return m;
        };
        for (int k = 0; k < pairs_per_row; ++k) {
            Mat2 A = word(), B = word();
            ++r.checked;
            if ((A * B).trace() + (A.inverse() * B).trace() != A.trace() * B.trace())
                fail(r, "row " + std::to_string(idx));
        }
        ++r.checked;
        if (!skein_audit(t)) fail(r, "generator pairs of row " + std::to_string(idx));
    }
    return r;
}

PropertyResult audit_projections(const std::vector<OrbitResult<Point>>& orbits, size_t cap) {
    PropertyResult r;
    r.name = "projections have finite P3 orbits";
    std::unordered_set<std::string> done;
    for (const auto& orb : orbits)
        for (const auto& p : orb.points)
            for (Proj w : all_projections()) {
                ++r.checked;
                PviPoint q = project(p, w);
                std::string k = pvi_key(q);
                if (done.count(k)) continue;
                auto o = p3_orbit(q, cap);
                if (!o.finite()) {
                    fail(r, std::string(proj_name(w)) + " of " + point_key(p));
                    continue;
                }
                done.insert(o.keys.begin(), o.keys.end());
            }
    return r;
}

std::vector<PropertyResult> run_property_audit(const AuditOptions& opt) {
    auto pts = table2_sample_points(opt.sample, opt.seed);
    auto orbits = table2_orbits();
    std::vector<int> rows;
    for (const auto& row : table2_rows())
        if (opt.all_rows || row.orbit_size <= 200) rows.push_back(row.index);
    std::vector<int> all;
    for (const auto& row : table2_rows()) all.push_back(row.index);
    return {audit_artin(pts),
            audit_pure_relations(pts),
            audit_ideal_invariance(orbits),
            audit_symmetries(pts, rows),
            audit_intertwining(pts),
            audit_skein(all, opt.seed),
            audit_projections(orbits)};
}

}  // namespace garnier
