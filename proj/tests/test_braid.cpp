#include "doctest.h"
#include "garnier/braid.hpp"
#include "helpers.hpp"

using namespace garnier;
using namespace testing_support;

namespace {
bool same(const Point& a, const Point& b) { return point_key(a) == point_key(b); }

std::vector<QM> sigma_matrices(int i, std::vector<QM> m, bool inverse) {
    QM a = m[i - 1], b = m[i];
    if (!inverse) {
        m[i - 1] = b;
        m[i] = b * a * b.inv();
    } else {
        m[i - 1] = a.inv() * b * a;
        m[i] = a;
    }
    return m;
}

BraidWord b(int i, int j) { return pure_generator(i, j); }
BraidWord inv(const BraidWord& w) { return inverse_word(w); }
BraidWord cat(std::initializer_list<BraidWord> ws) {
    BraidWord r;
    for (const auto& w : ws) r.insert(r.end(), w.begin(), w.end());
    return r;
}
}  // namespace

TEST_CASE("sigma maps agree with the matrix action") {
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        auto m = random_tuple(rng);
        Point p = point_of(m);
        for (int i = 1; i <= 3; ++i) {
            CHECK(same(apply_sigma(i, p), point_of(sigma_matrices(i, m, false))));
            CHECK(same(apply_sigma_inverse(i, p), point_of(sigma_matrices(i, m, true))));
        }
    }
}

TEST_CASE("identity point is fixed") {
    Point twos = constant_point(field_sqrt2_sqrt5(), 2);
    for (int i = 1; i <= 3; ++i) {
        CHECK(same(apply_sigma(i, twos), twos));
        CHECK(same(apply_sigma_inverse(i, twos), twos));
    }
}

TEST_CASE("inverse round trip, p_inf invariance and permutation of p1..p4") {
    auto pts = sample_member_points(100);
    REQUIRE(pts.size() >= 100);
    for (const auto& p : pts) {
        for (int i = 1; i <= 3; ++i) {
            Point s = apply_sigma(i, p);
            CHECK(same(apply_sigma_inverse(i, s), p));
            CHECK(same(apply_sigma(i, apply_sigma_inverse(i, p)), p));
            CHECK(s[PINF] == p[PINF]);
            CHECK(s[i - 1] == p[i]);
            CHECK(s[i] == p[i - 1]);
            CHECK(is_member(s));
        }
    }
}

TEST_CASE("Artin relations on member points") {
    auto pts = sample_member_points(100);
    for (const auto& p : pts) {
        CHECK(same(apply_word({1, 2, 1}, p), apply_word({2, 1, 2}, p)));
        CHECK(same(apply_word({2, 3, 2}, p), apply_word({3, 2, 3}, p)));
        CHECK(same(apply_word({1, 3}, p), apply_word({3, 1}, p)));
    }
}

TEST_CASE("pure generators") {
    CHECK(pure_generator(2, 1) == BraidWord{1, 1});
    CHECK(pure_generator(4, 1) == BraidWord{-3, -2, 1, 1, 2, 3});
    CHECK(parse_word("b31") == BraidWord{-2, 1, 1, 2});
    CHECK(parse_word("s1 s2' s3") == BraidWord{1, -2, 3});
    CHECK(parse_word("s1 s1'").empty());
    CHECK(parse_word("b21'") == BraidWord{-1, -1});
    CHECK_THROWS(parse_word("x9"));
    CHECK(format_word({1, -2}) == "s1 s2'");
    auto pts = sample_member_points(20);
    for (const auto& p : pts) {
        CHECK(same(apply_word(b(2, 1), p), apply_sigma(1, apply_sigma(1, p))));
        CHECK(apply_word({}, p) == p);
    }
}

TEST_CASE("pure braid relations") {
    auto pts = sample_member_points(100);
    // lhs = b_rs b_ij b_rs^-1 for all i > j, r > s
    int checked = 0;
    for (int i = 2; i <= 4; ++i)
        for (int j = 1; j < i; ++j)
            for (int r = 2; r <= 4; ++r)
                for (int s = 1; s < r; ++s) {
                    BraidWord rhs;
                    if ((j < s && s < r && r < i) || (s < r && r < j && j < i)) {
                        rhs = b(i, j);
                    } else if (s < j && j == r && r < i) {
                        rhs = cat({inv(b(i, s)), b(i, j), b(i, s)});
                    } else if (j == s && s < r && r < i) {
                        rhs = cat({inv(b(i, j)), inv(b(i, r)), b(i, j), b(i, r), b(i, j)});
                    } else if (s < j && j < r && r < i) {
                        rhs = cat({inv(b(r, j)), inv(b(j, s)), b(r, j), b(j, s), b(i, j), inv(b(j, s)), inv(b(r, j)),
                                   b(j, s), b(r, j)});
                    } else {
                        continue;
                    }
                    BraidWord lhs = cat({b(r, s), b(i, j), inv(b(r, s))});
                    for (const auto& p : pts) CHECK(same(apply_word(lhs, p), apply_word(rhs, p)));
                    ++checked;
                }
    CHECK(checked > 0);
}
