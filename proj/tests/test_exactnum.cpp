#include "doctest.h"
#include "garnier/exactnum.hpp"
#include "garnier/radical.hpp"

#include <random>

using namespace garnier;

namespace {
Number sqrt2_in(const Field* f) { return Number(field_sqrt2(), ZPoly{0, 1}, 1).lift_to(f); }
Number sqrt5_in(const Field* f) { return Number(field_sqrt5(), ZPoly{0, 1}, 1).lift_to(f); }
}  // namespace

TEST_CASE("field descriptors") {
    CHECK(rationals()->degree == 1);
    CHECK(field_sqrt2()->degree == 2);
    const Field* k = field_sqrt2_sqrt5();
    CHECK(k->degree == 4);
    Number t = Number::generator(k);
    Number r = sqrt2_in(k) + sqrt5_in(k);
    CHECK(r == t);
    Number t2 = t * t;
    CHECK((t2 * t2 - 14 * t2 + Number(k, 9)).is_zero());
    CHECK_THROWS_AS(field_from_minpoly({1, 0, 2}, {0, 1}), ArithmeticError);          // not monic
    CHECK_THROWS_AS(field_from_minpoly({1, 2, 1}, {-2, 0}), ArithmeticError);         // not squarefree
    CHECK_THROWS_AS(field_from_minpoly({-2, 0, 1}, {-2, 2}), ArithmeticError);        // two roots
    CHECK_THROWS_AS(field_from_minpoly({-2, 0, 1}, {2, 3}), ArithmeticError);         // no root
    CHECK(field_from_minpoly({-2, 0, 1}, {1, 2}) == field_sqrt2());
}

TEST_CASE("basic arithmetic") {
    const Field* q2 = field_sqrt2();
    Number s = Number::generator(q2);
    CHECK((s * s).is_integer_value(2));
    CHECK(s.inverse() == s * Number(q2, mpq_class(1, 2)));
    const Field* q5 = field_sqrt5();
    Number phi = (Number(q5, 1) + Number::generator(q5)) * Number(q5, mpq_class(1, 2));
    CHECK((phi * phi - phi - Number(q5, 1)).is_zero());
    CHECK_THROWS_AS(Number(q2, 0).inverse(), ArithmeticError);
    CHECK_THROWS_AS(Number::generator(q2) + Number::generator(q5), ArithmeticError);
    // rationals lift into any field
    CHECK((Number(rationals(), 3) + s) == s + 3);
}

TEST_CASE("field axioms on random elements") {
    const Field* k = field_sqrt2_sqrt5();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-9, 9);
    auto rnd = [&] {
        ZPoly c(4);
        for (auto& v : c) v = dist(rng);
        return Number(k, c, std::abs(dist(rng)) + 1);
    };
    for (int i = 0; i < 50; ++i) {
        Number a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_integer_value(1));
        CHECK(Number::decode(k, a.encode()) == a);
    }
}

TEST_CASE("canonical keys") {
    const Field* k = field_sqrt2_sqrt5();
    CHECK(Number(k, 0).key() == (Number(k, 1) - Number(k, 1)).key());
    Number s2 = sqrt2_in(k);
    CHECK((s2 * Number(k, mpq_class(1, 2))).key() == s2.inverse().key());
    CHECK(s2.key() != sqrt5_in(k).key());
}

TEST_CASE("numeric intervals") {
    auto iv = Number(rationals(), 0).numeric_interval(10);
    CHECK(iv.lo <= 0);
    CHECK(iv.hi >= 0);
    Number s2 = Number::generator(field_sqrt2());
    auto i2 = s2.numeric_interval(20);
    CHECK(i2.hi - i2.lo <= mpq_class(1, 1 << 20));
    CHECK(std::abs(i2.lo.get_d() - 1.41421356) < 1e-6);
    const Field* q5 = field_sqrt5();
    Number phi = (Number(q5, 1) + Number::generator(q5)) * Number(q5, mpq_class(1, 2));
    auto ip = phi.numeric_interval(30);
    CHECK(std::abs(ip.lo.get_d() - 1.6180339) < 1e-6);
    // refining stays inside the coarser interval
    auto coarse = phi.numeric_interval(8), fine = phi.numeric_interval(40);
    CHECK(fine.lo >= coarse.lo);
    CHECK(fine.hi <= coarse.hi);
    CHECK((sqrt2_in(field_sqrt2_sqrt5()) - sqrt5_in(field_sqrt2_sqrt5())).sign() == -1);
}

TEST_CASE("exact square roots") {
    CHECK(*exact_sqrt(Number(rationals(), 4)) == Number(rationals(), 2));
    CHECK(!exact_sqrt(Number(rationals(), 2)));
    CHECK(!exact_sqrt(Number(rationals(), -4)));
    const Field* k = field_sqrt2_sqrt5();
    Number s2 = sqrt2_in(k), s5 = sqrt5_in(k);
    // sqrt(7 + 2 sqrt10) = sqrt2 + sqrt5
    auto r = exact_sqrt(Number(k, 7) + 2 * s2 * s5);
    REQUIRE(r);
    CHECK(*r == s2 + s5);
    // phi^2 has root phi; 2 has root sqrt2; 10 has root sqrt10
    Number phi = (Number(k, 1) + s5) * Number(k, mpq_class(1, 2));
    CHECK(*exact_sqrt(phi * phi) == phi);
    CHECK(*exact_sqrt(Number(k, 2)) == s2);
    CHECK(*exact_sqrt(Number(k, 10)) == s2 * s5);
    CHECK(!exact_sqrt(Number(k, 3)));
    CHECK(!exact_sqrt(-Number(k, 2)));
    CHECK(!exact_sqrt(s2));
    // generic route agrees with the tower formula on random squares
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int i = 0; i < 30; ++i) {
        Number x = Number(k, dist(rng)) + dist(rng) * s2 + dist(rng) * s5 + Number(k, mpq_class(dist(rng), 2)) * s2 * s5;
        if (x.is_zero()) continue;
        auto y = exact_sqrt(x * x);
        REQUIRE(y);
        CHECK((*y == x || *y == -x));
        CHECK(y->sign() >= 0);
    }
}

TEST_CASE("cyclotomic real subfields") {
    const Field* f5 = field_cyclotomic_real(5);
    CHECK(f5->degree == 2);
    Number c = Number::generator(f5);  // 2cos(2pi/5) = (sqrt5 - 1)/2
    CHECK((c * c + c - Number(f5, 1)).is_zero());
    const Field* f7 = field_cyclotomic_real(7);
    CHECK(f7->degree == 3);
    Number c7 = Number::generator(f7);
    CHECK(chebyshev_eval(7, c7).is_integer_value(2));
    const Field* f24 = field_cyclotomic_real(24);
    CHECK(f24->degree == 4);
    Number c24 = Number::generator(f24);
    // 2cos(pi/4) = sqrt2 squared is 2
    Number s = chebyshev_eval(3, c24);
    CHECK((s * s).is_integer_value(2));
    CHECK(*exact_sqrt(Number(f24, 2)) == s);
    CHECK(exact_sqrt(Number(f24, 3)).has_value());
    CHECK(chebyshev_eval(4, c24).is_integer_value(0) == false);
}

TEST_CASE("field declaration round trip") {
    const Field* k = field_sqrt2_sqrt5();
    CHECK(field_from_declaration(field_declaration(k)) == k);
}

TEST_CASE("radical tower") {
    const Field* k = field_sqrt2_sqrt5();
    auto t = RadicalTower::create(k);
    ExtNumber w = t->sqrt(Number(k, -2));  // sqrt2^2 - 4
    CHECK(t->size() == 1);
    CHECK((w * w) == t->embed(Number(k, -2)));
    ExtNumber v = t->sqrt(Number(k, -8));  // reuses the radicand
    CHECK(t->size() == 1);
    CHECK(v * v == t->embed(Number(k, -8)));
    ExtNumber u = t->sqrt(Number(k, -3));
    CHECK(t->size() == 2);
    ExtNumber x = w + u * t->embed(sqrt2_in(k)) + t->one();
    CHECK((x * x.inverse()) == t->one());
    CHECK(t->sqrt(Number(k, 4)).is_base());
    ExtNumber z = w * w;
    CHECK(z.key() == Number(k, -2).key());
    CHECK(t->sqrt(Number(k, 2)).is_base());
    ExtNumber uw = t->sqrt(Number(k, 2) * Number(k, 1));
    CHECK(uw.is_base());
    ExtNumber m = t->sqrt(Number(k, 24));  // sqrt(-2 * -3 * 4) = 2 w u
    CHECK(m * m == t->embed(Number(k, 24)));
    CHECK(t->size() == 2);
}
