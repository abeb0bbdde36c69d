#pragma once
// The 15 trace coordinates of the five-holed sphere character variety.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "garnier/exactnum.hpp"

namespace garnier {

enum Coord : int {
    P1 = 0, P2, P3, P4, PINF, P21, P31, P32, P41, P42, P43, P321, P432, P431, P421
};

inline constexpr int kCoords = 15;
extern const std::array<const char*, kCoords> kCoordNames;

using Point = std::array<Number, kCoords>;
using PartialPoint = std::array<Number, 11>;  // p1..p4, p_inf, p21..p43

Point constant_point(const Field* f, long v);
std::string point_key(const Point& p);
const Field* point_field(const Point& p);

std::array<Number, kCoords> eval_ideal(const Point& p);
bool is_member(const Point& p);
// 1-based indices of the nonvanishing generators.
std::vector<int> nonzero_generators(const Point& p);

class UnderdeterminedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Roots in the field of a x^2 + b x + c = 0; throws UnderdeterminedError
// when all three coefficients vanish.
std::vector<Number> solve_quadratic(const Number& a, const Number& b, const Number& c);

// Solve f1..f4 for the triple traces; keep in-field member points.
std::vector<Point> complete_point(const PartialPoint& partial);
PartialPoint partial_of(const Point& p);

// Trace of a word in M1..M4 (letters 1..4, negative = inverse), computed
// from the coordinates with the skein relations. The product is taken in
// the written order: word {a, b, c} means Tr(Ma Mb Mc).
class TraceEvaluator {
public:
    explicit TraceEvaluator(const Point& p) : p_(p) {}
    Number trace(const std::vector<int>& word);
    Number pair(int i, int j);  // Tr(Mi Mj) for any i != j

private:
    Number lookup(const std::vector<int>& descending);
    const Point& p_;
    std::map<std::vector<int>, Number> memo_;
};

}  // namespace garnier
