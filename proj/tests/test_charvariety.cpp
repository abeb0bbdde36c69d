#include "doctest.h"
#include "helpers.hpp"

using namespace garnier;
using namespace testing_support;

TEST_CASE("ideal at the identity representation") {
    Point twos = constant_point(field_sqrt2_sqrt5(), 2);
    for (const auto& v : eval_ideal(twos)) CHECK(v.is_zero());
    CHECK(is_member(twos));
    twos[P21] = Number(twos[0].field(), 3);
    CHECK(!eval_ideal(twos)[0].is_zero());
    CHECK(!is_member(twos));
}

TEST_CASE("ideal vanishes on traces of random rational SL2 tuples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        Point p = point_of(random_tuple(rng));
        CHECK(nonzero_generators(p).empty());
    }
}

TEST_CASE("random integer tuples are not members") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-3, 3);
    int members = 0;
    for (int i = 0; i < 50; ++i) {
        Point p;
        for (auto& x : p) x = Number(rationals(), dist(rng));
        members += is_member(p);
    }
    CHECK(members <= 2);
}

TEST_CASE("completion of Table 2 rows") {
    auto r1 = table2_completions(table2_row(1));
    REQUIRE(!r1.empty());
    for (const auto& p : r1) CHECK(is_member(p));
    // keys of equal table entries coincide, others differ
    const auto& row = table2_row(1);
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j)
            CHECK((r1[0][i].key() == r1[0][j].key()) == (std::string(row.entries[i]) == row.entries[j]));
    auto r54 = table2_completions(table2_row(54));
    REQUIRE(!r54.empty());
    CHECK(is_member(r54[0]));
    PartialPoint twos;
    for (auto& x : twos) x = Number(field_sqrt2_sqrt5(), 2);
    auto c = complete_point(twos);
    bool found = false;
    for (const auto& p : c) found |= (point_key(p) == point_key(constant_point(field_sqrt2_sqrt5(), 2)));
    CHECK(found);
}

TEST_CASE("completion recovers triple traces of rational tuples") {
    std::mt19937 rng(21);
    for (int i = 0; i < 20; ++i) {
        Point p = point_of(random_tuple(rng));
        auto c = complete_point(partial_of(p));
        bool found = false;
        for (const auto& q : c) found |= point_key(q) == point_key(p);
        CHECK(found);
    }
}

TEST_CASE("trace evaluator matches direct products") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> letter(1, 4), sgn(0, 3), len(0, 7);
    for (int t = 0; t < 10; ++t) {
        auto m = random_tuple(rng);
        Point p = point_of(m);
        TraceEvaluator ev(p);
        for (int k = 0; k < 30; ++k) {
            std::vector<int> w;
            const int n = len(rng);
            QM prod = {Number(rationals(), 1), Number(rationals(), 0), Number(rationals(), 0), Number(rationals(), 1)};
            for (int i = 0; i < n; ++i) {
                int l = letter(rng);
                bool inv = sgn(rng) == 0;
                w.push_back(inv ? -l : l);
                prod = prod * (inv ? m[l - 1].inv() : m[l - 1]);
            }
            CHECK(ev.trace(w) == prod.tr());
        }
    }
}
