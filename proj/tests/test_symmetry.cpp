#include "doctest.h"
#include "garnier/symmetry.hpp"
#include "helpers.hpp"

using namespace garnier;
using namespace testing_support;

namespace {
bool same(const Point& a, const Point& b) { return point_key(a) == point_key(b); }
}  // namespace

TEST_CASE("finite order relations") {
    auto pts = sample_member_points(30);
    for (const auto& p : pts) {
        Point q = p;
        for (int i = 0; i < 4; ++i) q = apply_symmetry(Sym::perm_1234, q);
        CHECK(same(q, p));
        for (Sym s : {Sym::sign1, Sym::sign2, Sym::sign3, Sym::sign4, Sym::perm_12_34})
            CHECK(same(apply_symmetry(s, apply_symmetry(s, p)), p));
    }
    CHECK(sign_perm_group().size() == 128);
}

TEST_CASE("P1inf is the matrix map (M1..M4) -> (-M_inf, M2, M3, M4)") {
    std::mt19937 rng(4);
    for (int t = 0; t < 20; ++t) {
        auto m = random_tuple(rng);
        QM minf = (m[3] * m[2] * m[1] * m[0]).inv();
        std::vector<QM> img = {minf.neg(), m[1], m[2], m[3]};
        CHECK(same(apply_symmetry(Sym::P1inf, point_of(m)), point_of(img)));
    }
    auto c = table2_completions(table2_row(25));
    REQUIRE(!c.empty());
    Point q = apply_symmetry(Sym::P1inf, c[0]);
    CHECK(q[P1].is_integer_value(2));
    CHECK(q[P1] == -c[0][PINF]);
    CHECK(is_member(q));
}

TEST_CASE("symmetries preserve membership and orbit sizes") {
    auto pts = sample_member_points(60);
    for (const auto& p : pts)
        for (Sym s : all_symmetries()) CHECK(is_member(apply_symmetry(s, p)));
    for (int row : {1, 2, 3, 8, 11}) {
        auto c = table2_completions(table2_row(row));
        REQUIRE(!c.empty());
        for (Sym s : all_symmetries()) {
            auto orb = p4_orbit(apply_symmetry(s, c[0]));
            CHECK_MESSAGE(orb.size() == static_cast<size_t>(table2_row(row).orbit_size), sym_name(s), " row ", row);
        }
    }
}

TEST_CASE("intertwining relations") {
    auto pts = sample_member_points(100);
    for (const auto& item : commutation_audit(pts)) CHECK_MESSAGE(item.pass, item.name);
    SymmetryTable bad = SymmetryTable::standard();
    // the sign map printed with p421 unchanged
    bad.sign[3] = [](const Point& p) {
        Point q = signed_perm_of(Sym::sign4).apply(p);
        q[P421] = -q[P421];
        return q;
    };
    bool caught = false;
    for (const auto& item : commutation_audit(pts, bad))
        if (!item.pass) {
            caught = true;
            CHECK(!item.witness.empty());
        }
    CHECK(caught);
}

TEST_CASE("quotient") {
    auto c1 = table2_completions(table2_row(1));
    auto c2 = table2_completions(table2_row(2));
    auto o1 = p4_orbit(c1[0]);
    auto o1s = p4_orbit(apply_symmetry(Sym::sign1, c1[0]));
    auto o2 = p4_orbit(c2[0]);
    auto reps = quotient_by_finite_subgroup({o1, o1s, o2});
    CHECK(reps == std::vector<size_t>{0, 2});
    // a P1inf image lands in the same bucket and is linked through the finite group G
    auto o1p = p4_orbit(apply_symmetry(Sym::P1inf, c1[0]));
    CHECK(bucket_key(o1.seed, o1.size()) == bucket_key(o1p.seed, o1p.size()));
    auto q = quotient({o1, o1p, o2});
    CHECK(q.representatives.size() == 2);
    // single representative passes unchanged
    auto q1 = quotient({o2});
    CHECK(q1.representatives == std::vector<size_t>{0});
}
