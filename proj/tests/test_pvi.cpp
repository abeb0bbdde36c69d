#include <cmath>
#include <set>

#include "doctest.h"
#include "garnier/braid.hpp"
#include "garnier/pvi.hpp"
#include "helpers.hpp"

using namespace garnier;
using namespace testing_support;

namespace {

const Field* Q = rationals();
Number n(long v) { return Number(Q, v); }

PviPoint const_point(long v) {
    PviPoint q;
    q.fill(n(v));
    return q;
}

PviPoint q_of(const QM& a, const QM& b, const QM& c) {
    return {a.tr(), b.tr(), c.tr(), (c * b * a).tr(), (b * a).tr(), (c * a).tr(), (c * b).tr()};
}

bool same(const PviPoint& a, const PviPoint& b) { return pvi_key(a) == pvi_key(b); }

Point completed_row(int idx) {
    auto c = table2_completions(table2_row(idx));
    REQUIRE(!c.empty());
    return c[0];
}

}  // namespace

TEST_CASE("projections extract the printed slots") {
    Point twos;
    twos.fill(n(2));
    CHECK(same(project(twos, Proj::tilde), const_point(2)));

    Point p = completed_row(1);
    PviPoint h = project(p, Proj::hat);
    Number s2 = Number::generator(field_sqrt2());
    CHECK(h[Q1].is_zero());
    CHECK(h[Q2] == p[P3]);
    CHECK(h[QINF] == p[P432]);
    CHECK(h[Q21] == p[P32]);
    CHECK(h[Q32] == p[P43]);
    CHECK(h[Q1].approx() == doctest::Approx(0.0));
    CHECK(h[Q2].approx() == doctest::Approx(s2.approx()));
    CHECK(h[Q21].approx() == doctest::Approx(-s2.approx()));
    CHECK(h[Q31].approx() == doctest::Approx(s2.approx()));
    CHECK(h[Q32].is_integer_value(1));

    // overlaps shared between projections
    for (const auto& m : sample_member_points(20)) {
        CHECK(project(m, Proj::tilde)[Q21] == project(m, Proj::check)[Q21]);
        CHECK(project(m, Proj::tilde)[Q31] == project(m, Proj::bar)[Q21]);
        CHECK(project(m, Proj::tilde)[Q32] == project(m, Proj::hat)[Q21]);
        CHECK(project(m, Proj::hat)[Q32] == project(m, Proj::bar)[Q32]);
        CHECK(project(m, Proj::check)[Q31] == project(m, Proj::bar)[Q31]);
        CHECK(project(m, Proj::hat)[Q31] == project(m, Proj::check)[Q32]);
    }
    for (Proj w : all_projections()) CHECK(proj_from_name(proj_name(w)) == w);
    CHECK_THROWS(proj_from_name("wide"));
}

TEST_CASE("sigma action agrees with the matrix action") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        QM a = random_sl2(rng), b = random_sl2(rng), c = random_sl2(rng);
        PviPoint q = q_of(a, b, c);
        CHECK(same(pvi_sigma(1, q), q_of(b, b * a * b.inv(), c)));
        CHECK(same(pvi_sigma(2, q), q_of(a, c, c * b * c.inv())));
        CHECK(same(pvi_sigma(-1, pvi_sigma(1, q)), q));
        CHECK(same(pvi_sigma(-2, pvi_sigma(2, q)), q));
        CHECK(pvi_sigma(1, q)[QINF] == q[QINF]);
        CHECK(same(pvi_braid({1, 2, 1}, q), pvi_braid({2, 1, 2}, q)));
    }
    CHECK(same(pvi_sigma(1, const_point(2)), const_point(2)));
    CHECK_THROWS(pvi_sigma(3, const_point(2)));
}

TEST_CASE("projection is natural for each pure subgroup") {
    const auto& pg = pure_generators();
    for (const auto& p : sample_member_points(24)) {
        for (Proj w : all_projections()) {
            const auto& sub = proj_subgroup(w);
            PviPoint q = project(p, w);
            for (int k = 0; k < 3; ++k) {
                PviPoint lhs = project(apply_word(pg[sub[k]], p), w);
                CHECK_MESSAGE(same(lhs, p3_generators()[k](q)), proj_name(w), " generator ", k);
            }
        }
        // the full-braid identification on the tilde and hat slots
        CHECK(same(project(apply_sigma(1, p), Proj::tilde), pvi_sigma(1, project(p, Proj::tilde))));
        CHECK(same(project(apply_sigma(2, p), Proj::hat), pvi_sigma(1, project(p, Proj::hat))));
    }
}

TEST_CASE("P3 orbits") {
    CHECK(p3_orbit(const_point(2)).size() == 1);
    for (const auto& row : table2_rows()) {
        for (const auto& p : table2_completions(row)) {
            for (Proj w : all_projections()) {
                auto orb = p3_orbit(project(p, w), 10000);
                CHECK_MESSAGE(orb.finite(), "row ", row.index, " ", proj_name(w));
            }
        }
    }
    PviPoint wild{n(3), n(-1), n(2), n(5), n(1), n(-2), n(4)};
    CHECK_FALSE(p3_orbit(wild, 100000).finite());
}

TEST_CASE("omega quantities and Okamoto generators") {
    OmegaPoint w = omega_from_q(const_point(2));
    CHECK(w[0].is_integer_value(8));
    CHECK(w[1].is_integer_value(8));
    CHECK(w[2].is_integer_value(8));
    CHECK(w[3].is_integer_value(32));
    CHECK(w[4].is_integer_value(2));
    PviPoint z{n(0), n(0), n(0), n(0), n(1), n(1), n(1)};
    for (int i = 0; i < 4; ++i) CHECK(omega_from_q(z)[i].is_zero());

    OmegaPoint ones;
    ones.fill(n(1));
    OmegaPoint r = okamoto_generator(Okamoto::r1, ones);
    const long expect[7] = {1, -1, -1, 1, -1, -1, 1};
    for (int i = 0; i < 7; ++i) CHECK(r[i].is_integer_value(expect[i]));
    for (Okamoto s : {Okamoto::s1, Okamoto::s2, Okamoto::s3, Okamoto::sinf, Okamoto::sdelta})
        CHECK(okamoto_generator(s, ones) == ones);
    CHECK(okamoto_from_name("P13") == Okamoto::P13);
    CHECK_THROWS(okamoto_from_name("r9"));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 100; ++t) {
        OmegaPoint x;
        for (auto& v : x) v = n(d(rng));
        CHECK(okamoto_generator(Okamoto::P13, okamoto_generator(Okamoto::P13, x)) == x);
        for (Okamoto g : {Okamoto::r1, Okamoto::r2, Okamoto::r3}) CHECK(okamoto_generator(g, x)[3] == x[3]);
    }
    // lifts to 7-tuples commute with omega_from_q
    for (int t = 0; t < 50; ++t) {
        PviPoint q;
        for (auto& v : q) v = n(d(rng));
        for (Okamoto g : {Okamoto::r1, Okamoto::r2, Okamoto::r3, Okamoto::P13, Okamoto::P23})
            CHECK(omega_from_q(okamoto_on_q(g, q)) == okamoto_generator(g, omega_from_q(q)));
    }
    CHECK(okamoto_omega_group_order() == 24);
}

TEST_CASE("theta maps") {
    ThetaTuple th{mpq_class(1, 3), mpq_class(2, 5), mpq_class(-1, 2), mpq_class(7, 4)};
    ThetaTuple s = theta_transform(ThetaGen::s1, th);
    CHECK(s[0] == -th[0]);
    for (int i = 1; i < 4; ++i) CHECK(s[i] == th[i]);
    ThetaTuple ones{1, 1, 1, 1};
    ThetaTuple sd = theta_transform(ThetaGen::sdelta, ones);
    for (auto& v : sd) CHECK(v == -1);
    ThetaTuple aa = theta_transform(ThetaGen::alpha, theta_transform(ThetaGen::alpha, th));
    for (int i = 0; i < 4; ++i) CHECK(aa[i] == th[i] + 2);
    CHECK(q_from_theta(aa, 60) == q_from_theta(th, 60));
    CHECK(theta_composites().size() == 24);
    CHECK(theta_composites()[0].name == "id");
    std::set<std::string> names;
    for (const auto& c : theta_composites()) names.insert(c.name);
    CHECK(names.size() == 24);
}

TEST_CASE("q from theta") {
    ThetaTuple half{mpq_class(1, 2), 0, 1, mpq_class(1, 3)};
    auto q = q_from_theta(half, 6);
    CHECK(q[0].is_zero());
    CHECK(q[1].is_integer_value(2));
    CHECK(q[2].is_integer_value(-2));
    CHECK(q[3].is_integer_value(1));

    auto r = q_from_theta({mpq_class(1, 4), 0, 0, 0}, 4);
    CHECK((r[0] * r[0]).is_integer_value(2));
    CHECK(r[0].approx() > 0);

    auto g = q_from_theta({mpq_class(2, 5), 0, 0, 0}, 5);
    CHECK((g[0] * g[0] + g[0] - 1).is_zero());
    CHECK(g[0].approx() == doctest::Approx((std::sqrt(5.0) - 1) / 2));

    CHECK_THROWS(q_from_theta({mpq_class(1, 7), 0, 0, 0}, 5));
}

TEST_CASE("O_ID and O_RED predicates") {
    CHECK(okid_predicate(const_point(2)) == 1);
    PviPoint z{n(0), n(0), n(0), n(2), n(0), n(0), n(0)};
    CHECK(okid_predicate(z).has_value());
    PviPoint m{n(1), n(3), n(-1), n(-2), n(1), n(-3), n(-1)};
    CHECK(okid_predicate(m) == -1);
    CHECK_FALSE(okid_predicate(project(completed_row(1), Proj::hat)).has_value());

    CHECK(okred_predicate(const_point(2)));
    // upper-triangular triple with theta = (1/3, 1/3, 0): q_ij = 2cos(pi(t_i + t_j))
    auto base = q_from_theta({mpq_class(1, 3), mpq_class(1, 3), 0, mpq_class(2, 3)}, 3);
    auto pairs = q_from_theta({mpq_class(2, 3), mpq_class(1, 3), mpq_class(1, 3), 0}, 3);
    PviPoint tri{base[0], base[1], base[2], base[3], pairs[0], pairs[1], pairs[2]};
    CHECK(okred_predicate(tri));
    PviPoint bad = tri;
    bad[Q21] = n(0);
    CHECK_FALSE(okred_predicate(bad));
    PviPoint badinf = tri;
    badinf[QINF] = n(1);
    CHECK_FALSE(okred_predicate(badinf));

    // exact upper-triangular rational matrices
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 40; ++t) {
        auto tri_m = [&]() {
            int l = 0;
            while (l == 0) l = d(rng);
            return QM{n(l), n(d(rng)), n(0), Number(Q, mpq_class(1, l))};
        };
        QM a = tri_m(), b = tri_m(), c = tri_m();
        CHECK(okred_predicate(q_of(a, b, c)));
    }
}

TEST_CASE("seed files and expansion") {
    CHECK(expand_seeds(SeedFile{3, {}}).size() == 0);
    CHECK_THROWS(parse_seed_file("1 1 1 1 8 8 8 32 2 2 2\n"));
    CHECK_THROWS(parse_seed_file("level 1\n0 0 0 0 8 8 8 31 2 2 2\n"));
    CHECK_THROWS(parse_seed_file("level 2\n1/3 0 0 0 8 8 8 32 2 2 2\n"));

    SeedFile f = parse_seed_file("# trivial orbit\nlevel 1\n0 0 0 0 8 8 8 32 2 2 2\n");
    REQUIRE(f.seeds.size() == 1);
    CHECK(parse_seed_file(format_seed_file(f)).seeds.size() == 1);

    ExpandStats st;
    auto e = expand_seeds(f, &st);
    CHECK(st.omega_group_order == 24);
    CHECK(e.contains(pvi_key(const_point(2))));
    // the stabilizer of the all-twos point under r1 r2 r3 is trivial, and every
    // sign pattern with an even number of -2 among (q1, q2, q3) arises
    CHECK(st.braid_closure == 4);
    CHECK(e.size() == st.theta_images);
    for (const auto& [k, q] : e) {
        for (const auto& g : p3_generators()) CHECK(e.contains(pvi_key(g(q))));
        CHECK(okid_predicate(q).has_value());
    }
    CHECK(expand_seeds(f).size() == e.size());
}
