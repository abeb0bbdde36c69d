#include "doctest.h"
#include "garnier/matching.hpp"
#include "garnier/monodromy.hpp"
#include "helpers.hpp"

using namespace garnier;
using namespace testing_support;

namespace {

const Field* Q = rationals();
Number n(long v) { return Number(Q, v); }

Point completed_row(int idx) {
    auto c = table2_completions(table2_row(idx));
    REQUIRE(!c.empty());
    return c[0];
}

// The P3 closure of every projection of every point of a P4 orbit.
PviSet projections_of_orbit(const Point& seed) {
    PviSet e;
    auto orb = p4_orbit(seed);
    for (const auto& p : orb.points)
        for (Proj w : all_projections()) {
            auto o = p3_orbit(project(p, w));
            for (size_t i = 0; i < o.size(); ++i) e.insert(o.keys[i], o.points[i]);
        }
    return e;
}

PviSet single(std::initializer_list<PviPoint> qs) {
    PviSet e;
    for (const auto& q : qs) e.insert(pvi_key(q), q);
    return e;
}

bool has_origin(const CandidateSet& c, const Point& p, const std::string& tag) {
    auto it = c.provenance.find(point_key(p));
    return it != c.provenance.end() && it->second.find(tag) != std::string::npos;
}

QM scalar(long e) { return {n(e), n(0), n(0), n(e)}; }

}  // namespace

TEST_CASE("pi_1234 relabels the matrices") {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto m = random_tuple(rng);
        Point p = point_of(m);
        CHECK(point_key(pi_1234(p)) == point_key(point_of({m[3], m[0], m[1], m[2]})));
        Point q = p;
        for (int i = 0; i < 4; ++i) q = pi_1234(q);
        CHECK(point_key(q) == point_key(p));
        Point r = pi_1234(p);
        CHECK(pvi_key(project(r, Proj::hat)) == pvi_key(project(p, Proj::tilde)));
        CHECK(pvi_key(project(r, Proj::bar)) == pvi_key(pi_123(project(p, Proj::hat))));
        CHECK(pvi_key(project(r, Proj::tilde)) == pvi_key(pi_123(project(p, Proj::check))));
    }
}

TEST_CASE("lifting three projections recovers the point") {
    for (const auto& p : sample_member_points(16)) {
        auto lifts = lift_projections(project(p, Proj::hat), project(p, Proj::check), project(p, Proj::bar));
        bool found = false;
        for (const auto& q : lifts) {
            CHECK(is_member(q));
            found = found || point_key(q) == point_key(p);
        }
        CHECK(found);
    }
    // disagreeing shared columns give nothing
    Point p = completed_row(3);
    PviPoint bad = project(p, Proj::bar);
    bad[Q1] = bad[Q1] + 1;
    CHECK(lift_projections(project(p, Proj::hat), project(p, Proj::check), bad).empty());
}

TEST_CASE("three E45 projections") {
    PviPoint twos;
    twos.fill(n(2));
    auto c0 = match_three_e45(single({twos}));
    CHECK(c0.size() == 1);
    CHECK(c0.points.contains(point_key(constant_point(Q, 2))));
    CHECK(match_three_e45(PviSet{}).size() == 0);

    Point seed = completed_row(1);
    PviSet e = projections_of_orbit(seed);
    auto c = match_three_e45(e);
    auto orb = p4_orbit(seed);
    for (const auto& p : orb.points) CHECK(c.points.contains(point_key(p)));
    for (const auto& [k, p] : c.points) {
        CHECK(is_member(p));
        for (Proj w : all_projections()) CHECK(p3_orbit(project(p, w), 20000).finite());
    }
    // closed under the relabelling
    size_t base = 0;
    for (const auto& [k, p] : c.points) {
        CHECK(c.points.contains(point_key(pi_1234(p))));
        if (c.provenance.at(k).find(":pi0") != std::string::npos) ++base;
    }
    CHECK(base > 0);
}

TEST_CASE("O_RED and O_ID completions") {
    // bar triple (M1, M3, M4) upper triangular, M2 generic
    std::mt19937 rng(8);
    auto tri = [&](long l, long x) { return QM{n(l), n(x), n(0), Number(Q, mpq_class(1, l))}; };
    for (int t = 0; t < 5; ++t) {
        std::vector<QM> m = {tri(2, 1), random_sl2(rng), tri(3, -1), tri(-2, 2 + t)};
        Point p = point_of(m);
        PviPoint bar = project(p, Proj::bar);
        CHECK(okred_predicate(bar));
        PviPoint masked = bar;
        masked[Q21] = n(0);
        masked[QINF] = n(0);
        bool found = false;
        for (const auto& q : ored_completions(masked)) found = found || pvi_key(q) == pvi_key(bar);
        CHECK(found);

        auto c = match_e45_e45_ored(single({project(p, Proj::hat), project(p, Proj::check)}));
        CHECK(c.points.contains(point_key(p)));
        CHECK(has_origin(c, p, "E45xE45xORED/bar:pi0"));
    }
    // bar triple with M4 M3 M1 = eps I
    for (long eps : {1L, -1L}) {
        QM a = random_sl2(rng), b = random_sl2(rng), c3 = random_sl2(rng);
        QM d = scalar(eps) * (c3 * a).inv();
        Point p = point_of({a, b, c3, d});
        PviPoint bar = project(p, Proj::bar);
        CHECK(okid_predicate(bar) == eps);
        auto c = match_e45_e45_oid(single({project(p, Proj::hat), project(p, Proj::check)}));
        CHECK(c.points.contains(point_key(p)));
        for (const auto& [k, q] : c.points) CHECK(is_member(q));
    }
    CHECK(match_e45_e45_ored(PviSet{}).size() == 0);
    CHECK(match_e45_e45_oid(PviSet{}).size() == 0);
}

TEST_CASE("E45 with two O_ID projections") {
    std::mt19937 rng(21);
    for (long eh : {1L, -1L})
        for (long ec : {1L, -1L}) {
            // M4 M3 M2 = eh I and M4 M2 M1 = ec I
            QM m2 = random_sl2(rng), m4 = random_sl2(rng);
            QM m3 = scalar(eh) * (m4.inv() * m2.inv());
            QM m1 = scalar(ec) * (m2.inv() * m4.inv());
            Point p = point_of({m1, m2, m3, m4});
            auto c = match_e45_oid_oid(single({project(p, Proj::bar)}));
            CHECK(c.points.contains(point_key(p)));
            CHECK(has_origin(c, p, "A2.1:pi0"));
            for (const auto& [k, prov] : c.provenance)
                if (prov.find("A2.1:pi0") != std::string::npos) {
                    const Point& q = c.points.at(k);
                    CHECK((q[P432].is_integer_value(2) || q[P432].is_integer_value(-2)));
                    CHECK((q[P421].is_integer_value(2) || q[P421].is_integer_value(-2)));
                }
        }
    // a bar projection violating the sign precondition for every choice
    PviPoint q{n(1), n(3), n(0), n(1), n(0), n(2), n(5)};
    CHECK(match_e45_oid_oid(single({q})).size() == 0);
}

TEST_CASE("E45 with two O_RED projections") {
    CHECK(check_e45_ored_ored(PviSet{}).empty());
    PviPoint twos;
    twos.fill(n(2));
    CHECK(check_e45_ored_ored(single({twos})).passing == 1);
    PviPoint generic{n(1), n(0), n(3), n(1), n(5), n(1), n(1)};
    CHECK(check_e45_ored_ored(single({generic})).empty());
}

TEST_CASE("assembly drops scalar M_inf") {
    CandidateSet a, b;
    a.label = "a";
    b.label = "b";
    a.add(constant_point(Q, 2), "a");
    Point p = completed_row(7);
    a.add(p, "a");
    b.add(p, "b");
    AssembleStats st;
    auto u = assemble_candidates({&a, &b}, &st);
    CHECK(st.union_size == 2);
    CHECK(st.removed == 1);
    CHECK(u.size() == 1);
    CHECK(u.provenance.at(point_key(p)) == "a,b");
    auto again = assemble_candidates({&u});
    CHECK(again.points == u.points);

    // M4 M3 M2 M1 = -I from explicit matrices
    std::mt19937 rng(6);
    QM m1 = random_sl2(rng), m2 = random_sl2(rng), m3 = random_sl2(rng);
    QM m4 = scalar(-1) * (m3 * m2 * m1).inv();
    CHECK(minf_is_scalar(point_of({m1, m2, m3, m4})));
    CHECK_FALSE(minf_is_scalar(p));
}

TEST_CASE("relevance") {
    CHECK_FALSE(relevance_check(constant_point(Q, 2)).relevant);
    CHECK(relevance_check(completed_row(7)).relevant);
    // three O_ID projections: (M1, e M1^-2, e M1, e M1) is reducible
    QM m1{n(2), n(1), n(3), n(2)};
    QM inv2 = (m1 * m1).inv();
    for (long e : {1L, -1L}) {
        auto r = relevance_check(point_of({m1, scalar(e) * inv2, scalar(e) * m1, scalar(e) * m1}));
        CHECK_FALSE(r.relevant);
    }
    std::mt19937 rng(9);
    auto m = random_tuple(rng);
    m[2] = scalar(-1);
    auto r = relevance_check(point_of(m));
    CHECK_FALSE(r.relevant);
    CHECK(r.reason == "M3 = +-I");
}
