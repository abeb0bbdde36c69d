#include "garnier/radical.hpp"

namespace garnier {

std::shared_ptr<RadicalTower> RadicalTower::create(const Field* base) {
    return std::shared_ptr<RadicalTower>(new RadicalTower(base));
}

ExtNumber RadicalTower::embed(const Number& x) { return ExtNumber(shared_from_this(), x); }
ExtNumber RadicalTower::zero() { return embed(Number(base_, 0)); }
ExtNumber RadicalTower::one() { return embed(Number(base_, 1)); }

ExtNumber RadicalTower::sqrt(const Number& d0) {
    Number d = d0.field() == base_ ? d0 : d0.lift_to(base_);
    if (auto r = exact_sqrt(d)) return embed(*r);
    const unsigned masks = 1u << radicands_.size();
    for (unsigned s = 1; s < masks; ++s) {
        if (auto y = exact_sqrt(d * mask_prod_[s])) {
            std::vector<Number> comps(masks, Number(base_, 0));
            comps[s] = *y / mask_prod_[s];
            return ExtNumber(shared_from_this(), comps);
        }
    }
    radicands_.push_back(d);
    std::vector<Number> prods(2u * masks, Number(base_, 1));
    for (unsigned s = 0; s < masks; ++s) {
        prods[s] = mask_prod_[s];
        prods[s | masks] = mask_prod_[s] * d;
    }
    mask_prod_ = std::move(prods);
    std::vector<Number> comps(2u * masks, Number(base_, 0));
    comps[masks] = Number(base_, 1);
    return ExtNumber(shared_from_this(), comps);
}

std::string RadicalTower::declaration() const {
    std::string s = "radicands:";
    for (size_t i = 0; i < radicands_.size(); ++i) {
        if (i) s += "|";
        s += radicands_[i].encode();
    }
    return s;
}

ExtNumber::ExtNumber(TowerPtr t, const Number& base_value) : tower_(std::move(t)), c_{base_value} {
    if (c_[0].field() != tower_->base()) c_[0] = c_[0].lift_to(tower_->base());
}

ExtNumber::ExtNumber(TowerPtr t, std::vector<Number> comps) : tower_(std::move(t)), c_(std::move(comps)) {}

void ExtNumber::widen(size_t n) {
    while (c_.size() < n) c_.emplace_back(tower_->base(), 0);
}

Number ExtNumber::component(unsigned mask) const {
    return mask < c_.size() ? c_[mask] : Number(tower_->base(), 0);
}

bool ExtNumber::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExtNumber::is_base() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Number ExtNumber::base_value() const {
    if (!is_base()) throw ArithmeticError("value is not in the base field");
    return c_[0];
}

ExtNumber ExtNumber::operator-() const {
    ExtNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ExtNumber& ExtNumber::operator+=(const ExtNumber& o) {
    if (!tower_) tower_ = o.tower_;
    widen(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

ExtNumber& ExtNumber::operator-=(const ExtNumber& o) { return *this += -o; }

ExtNumber& ExtNumber::operator*=(const ExtNumber& o) {
    const size_t n = std::max(c_.size(), o.c_.size());
    std::vector<Number> out(n, Number(tower_->base(), 0));
    for (unsigned s = 0; s < c_.size(); ++s) {
        if (c_[s].is_zero()) continue;
        for (unsigned t = 0; t < o.c_.size(); ++t) {
            if (o.c_[t].is_zero()) continue;
            Number p = c_[s] * o.c_[t];
            if (s & t) p *= tower_->mask_product(s & t);
            out[s ^ t] += p;
        }
    }
    c_ = std::move(out);
    return *this;
}

ExtNumber ExtNumber::operator*(const Number& s) const {
    ExtNumber r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

ExtNumber ExtNumber::operator+(const Number& s) const {
    ExtNumber r = *this;
    r.c_[0] += s;
    return r;
}

ExtNumber ExtNumber::operator-(const Number& s) const {
    ExtNumber r = *this;
    r.c_[0] -= s;
    return r;
}

bool ExtNumber::operator==(const ExtNumber& o) const {
    const size_t n = std::max(c_.size(), o.c_.size());
    for (unsigned i = 0; i < n; ++i)
        if (component(i) != o.component(i)) return false;
    return true;
}

ExtNumber ExtNumber::conjugate(int i) const {
    ExtNumber r = *this;
    for (unsigned s = 0; s < r.c_.size(); ++s)
        if (s & (1u << i)) r.c_[s] = -r.c_[s];
    return r;
}

ExtNumber ExtNumber::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    // Multiply by conjugates from the top radical down; the denominator
    // loses one radical per step and ends in the base field.
    ExtNumber num(tower_, Number(tower_->base(), 1));
    ExtNumber den = *this;
    for (int i = tower_->size() - 1; i >= 0; --i) {
        ExtNumber c = den.conjugate(i);
        num *= c;
        den *= c;
    }
    Number inv = den.component(0).inverse();
    return num * inv;
}

std::string ExtNumber::key() const {
    std::string k = component(0).key();
    for (unsigned s = 1; s < c_.size(); ++s) {
        if (c_[s].is_zero()) continue;
        k += "|" + std::to_string(s) + "=" + c_[s].key();
    }
    return k;
}

std::string ExtNumber::encode() const {
    std::string k = "0:" + component(0).encode();
    for (unsigned s = 1; s < c_.size(); ++s) {
        if (c_[s].is_zero()) continue;
        k += "|" + std::to_string(s) + ":" + c_[s].encode();
    }
    return k;
}

std::string ExtNumber::pretty() const {
    std::string k = component(0).pretty();
    for (unsigned s = 1; s < c_.size(); ++s) {
        if (c_[s].is_zero()) continue;
        k += " + (" + c_[s].pretty() + ")w" + std::to_string(s);
    }
    return k;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const {
    ExtNumber di = det().inverse();
    return {d * di, -b * di, -c * di, a * di};
}

bool Mat2::is_scalar(long v) const {
    ExtNumber z = a.tower()->zero();
    ExtNumber e = a.tower()->embed(Number(a.tower()->base(), v));
    return a == e && d == e && b == z && c == z;
}

Mat2 Mat2::identity(const TowerPtr& t) { return {t->one(), t->zero(), t->zero(), t->one()}; }

Mat2 Mat2::from_base(const TowerPtr& t, const Number& a, const Number& b, const Number& c, const Number& d) {
    return {t->embed(a), t->embed(b), t->embed(c), t->embed(d)};
}

}  // namespace garnier
