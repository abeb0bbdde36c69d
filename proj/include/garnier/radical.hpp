#pragma once
// Multi-quadratic extensions K(sqrt d1, ..., sqrt dm) over a base field K.
// An element is a vector of base coefficients indexed by subsets S of the
// radicands: x = sum_S x_S w_S with w_S = prod_{i in S} sqrt(d_i).

#include <memory>
#include <string>
#include <vector>

#include "garnier/exactnum.hpp"

namespace garnier {

class ExtNumber;

class RadicalTower : public std::enable_shared_from_this<RadicalTower> {
public:
    static std::shared_ptr<RadicalTower> create(const Field* base);

    const Field* base() const { return base_; }
    int size() const { return static_cast<int>(radicands_.size()); }
    const std::vector<Number>& radicands() const { return radicands_; }
    // prod_{i in mask} d_i
    const Number& mask_product(unsigned mask) const { return mask_prod_[mask]; }

    // Square root of a base element. Reuses existing radicands when d times a
    // product of them is a square in K; otherwise appends d as a new radicand.
    ExtNumber sqrt(const Number& d);

    ExtNumber embed(const Number& x);
    ExtNumber zero();
    ExtNumber one();

    std::string declaration() const;

private:
    explicit RadicalTower(const Field* base) : base_(base), mask_prod_{Number(base, 1)} {}
    const Field* base_;
    std::vector<Number> radicands_;
    std::vector<Number> mask_prod_;
};

using TowerPtr = std::shared_ptr<RadicalTower>;

class ExtNumber {
public:
    ExtNumber() = default;
    ExtNumber(TowerPtr t, const Number& base_value);
    ExtNumber(TowerPtr t, std::vector<Number> comps);

    const TowerPtr& tower() const { return tower_; }
    Number component(unsigned mask) const;
    const std::vector<Number>& components() const { return c_; }

    bool is_zero() const;
    bool is_base() const;  // only the mask-0 component is nonzero
    Number base_value() const;  // throws unless is_base()

    ExtNumber operator-() const;
    ExtNumber& operator+=(const ExtNumber& o);
    ExtNumber& operator-=(const ExtNumber& o);
    ExtNumber& operator*=(const ExtNumber& o);
    ExtNumber& operator/=(const ExtNumber& o) { return *this *= o.inverse(); }
    friend ExtNumber operator+(ExtNumber a, const ExtNumber& b) { return a += b; }
    friend ExtNumber operator-(ExtNumber a, const ExtNumber& b) { return a -= b; }
    friend ExtNumber operator*(ExtNumber a, const ExtNumber& b) { return a *= b; }
    friend ExtNumber operator/(ExtNumber a, const ExtNumber& b) { return a /= b; }
    ExtNumber operator*(const Number& s) const;
    ExtNumber operator+(const Number& s) const;
    ExtNumber operator-(const Number& s) const;
    bool operator==(const ExtNumber& o) const;
    bool operator!=(const ExtNumber& o) const { return !(*this == o); }

    ExtNumber inverse() const;
    // Negate every component whose mask contains radicand i.
    ExtNumber conjugate(int i) const;

    std::string key() const;
    std::string encode() const;  // "mask:scalar|mask:scalar"
    std::string pretty() const;

private:
    void widen(size_t n);
    TowerPtr tower_;
    std::vector<Number> c_;
};

struct Mat2 {
    ExtNumber a, b, c, d;

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    ExtNumber trace() const { return a + d; }
    ExtNumber det() const { return a * d - b * c; }
    Mat2 inverse() const;  // general 2x2 inverse
    bool is_scalar(long v) const;
    std::string key() const { return a.key() + "/" + b.key() + "/" + c.key() + "/" + d.key(); }
    static Mat2 identity(const TowerPtr& t);
    static Mat2 from_base(const TowerPtr& t, const Number& a, const Number& b, const Number& c, const Number& d);
};

}  // namespace garnier
