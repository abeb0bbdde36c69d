#pragma once
// Exact arithmetic in real number fields Q[x]/(m(x)) with a designated real root.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace garnier {

using ZPoly = std::vector<mpz_class>;  // c0 + c1 x + ... (low degree first)
using QPoly = std::vector<mpq_class>;

class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RationalInterval {
    mpq_class lo, hi;
};

struct Field {
    std::string name;
    ZPoly minpoly;  // monic, degree n
    RationalInterval selector;
    int degree = 1;
    // reduction[k] holds x^(n+k) expressed in the power basis (k = 0 .. n-2)
    std::vector<ZPoly> reduction;
    std::vector<std::complex<long double>> roots;  // all complex roots
    int designated = 0;                            // index into roots
    mpz_class denominator_bound;                   // |discriminant| of minpoly
    std::vector<std::vector<std::complex<long double>>> vandermonde_inverse;
};

// Registry; returned pointers are valid for the lifetime of the program.
const Field* field_from_minpoly(const ZPoly& poly, const RationalInterval& selector,
                                const std::string& name = "");
const Field* rationals();
const Field* field_sqrt2();
const Field* field_sqrt5();
const Field* field_sqrt2_sqrt5();
// Q(2cos(2 pi / m))
const Field* field_cyclotomic_real(int m);
const Field* field_by_name(const std::string& name);

// Header representation used by file formats: "minpoly:c0,c1,...;selector:lo,hi".
std::string field_declaration(const Field* f);
const Field* field_from_declaration(const std::string& decl);

class Number {
public:
    Number();  // zero in Q
    explicit Number(const Field* f);
    Number(const Field* f, long v);
    Number(const Field* f, const mpq_class& q);
    Number(const Field* f, ZPoly num, mpz_class den);

    static Number generator(const Field* f);

    const Field* field() const { return field_; }
    const ZPoly& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }
    mpq_class coeff(int i) const;

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer_value(long v) const;

    Number operator-() const;
    Number& operator+=(const Number& o);
    Number& operator-=(const Number& o);
    Number& operator*=(const Number& o);
    Number& operator/=(const Number& o);
    friend Number operator+(Number a, const Number& b) { return a += b; }
    friend Number operator-(Number a, const Number& b) { return a -= b; }
    friend Number operator*(Number a, const Number& b) { return a *= b; }
    friend Number operator/(Number a, const Number& b) { return a /= b; }
    friend Number operator+(Number a, long b) { return a += Number(a.field_, b); }
    friend Number operator-(Number a, long b) { return a -= Number(a.field_, b); }
    friend Number operator*(Number a, long b);
    friend Number operator*(long b, Number a) { return std::move(a) * b; }
    friend Number operator-(long b, const Number& a) { return Number(a.field_, b) - a; }
    bool operator==(const Number& o) const;
    bool operator!=(const Number& o) const { return !(*this == o); }

    Number inverse() const;
    Number square() const { return *this * *this; }

    // Deterministic injective key (within one field).
    std::string key() const;
    // "c0/d0,c1/d1,..." in lowest terms.
    std::string encode() const;
    static Number decode(const Field* f, const std::string& text);
    // Human readable approximate value.
    std::string pretty() const;

    long double approx() const;
    std::complex<long double> embed(int root_index) const;
    // Exact sign of the designated real embedding.
    int sign() const;
    RationalInterval numeric_interval(int precision_bits) const;

    // Value in a larger shipped field (throws when no embedding is known).
    Number lift_to(const Field* target) const;

private:
    void normalize();
    void align(const Number& o);
    const Field* field_;
    ZPoly num_;
    mpz_class den_;
};

// Exact square root in the field, or nullopt. The returned root has
// nonnegative designated embedding when the field is real.
std::optional<Number> exact_sqrt(const Number& d);

// Polynomial helpers exposed for tests.
int count_real_roots(const ZPoly& p, const mpq_class& lo, const mpq_class& hi);  // in (lo, hi]
bool is_squarefree(const ZPoly& p);
ZPoly chebyshev_like(int k);  // C_k with C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}
Number chebyshev_eval(int k, const Number& c);

}  // namespace garnier
