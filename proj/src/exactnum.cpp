#include "garnier/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace garnier {

namespace {

using cld = std::complex<long double>;

QPoly to_q(const ZPoly& p) {
    QPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i];
    return r;
}

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        mpq_class f = a.back() / b.back();
        const int shift = static_cast<int>(a.size()) - 1 - db;
        for (int i = 0; i <= db; ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

QPoly qderiv(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

mpq_class qeval(const QPoly& p, const mpq_class& x) {
    mpq_class r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

QPoly qgcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Resultant over Q by the Euclidean recursion.
mpq_class resultant(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    const int m = static_cast<int>(a.size()) - 1;
    const int n = static_cast<int>(b.size()) - 1;
    if (n == 0) {
        mpq_class r = 1;
        for (int i = 0; i < m; ++i) r *= b[0];
        return r;
    }
    if (m < n) {
        mpq_class r = resultant(b, a);
        return ((m * n) % 2) ? mpq_class(-r) : r;
    }
    QPoly r = qrem(a, b);
    if (r.empty()) return 0;
    const int dr = static_cast<int>(r.size()) - 1;
    mpq_class lc = 1;
    for (int i = 0; i < m - dr; ++i) lc *= b.back();
    mpq_class sub = resultant(b, r);
    mpq_class out = lc * sub;
    return ((m * n) % 2) ? mpq_class(-out) : out;
}

int sign_variations(const std::vector<QPoly>& seq, const mpq_class& x) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
        const int s = sgn(qeval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> seq{p, qderiv(p)};
    while (!seq.back().empty()) {
        QPoly r = qrem(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(r);
    }
    return seq;
}

std::vector<cld> poly_roots(const ZPoly& p) {
    const int n = static_cast<int>(p.size()) - 1;
    std::vector<cld> roots(n);
    long double bound = 1;
    for (int i = 0; i < n; ++i) bound = std::max(bound, 1 + std::fabs(static_cast<long double>(p[i].get_d())));
    for (int i = 0; i < n; ++i)
        roots[i] = std::polar(bound * 0.9L, 2 * std::numbers::pi_v<long double> * (i + 0.25L) / n);
    auto eval = [&](cld x) {
        cld r = 0;
        for (int i = n; i >= 0; --i) r = r * x + static_cast<long double>(p[i].get_d());
        return r;
    };
    for (int iter = 0; iter < 5000; ++iter) {
        long double delta = 0;
        for (int i = 0; i < n; ++i) {
            cld denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            cld step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-30L) break;
    }
    // Newton polish
    for (auto& r : roots) {
        for (int it = 0; it < 5; ++it) {
            cld v = 0, dv = 0;
            for (int i = n; i >= 0; --i) {
                dv = dv * r + v;
                v = v * r + static_cast<long double>(p[i].get_d());
            }
            if (std::abs(dv) > 0) r -= v / dv;
        }
        if (std::fabs(r.imag()) < 1e-15L * (1 + std::abs(r))) r = cld(r.real(), 0);
    }
    return roots;
}

std::vector<std::vector<cld>> invert_vandermonde(const std::vector<cld>& roots) {
    const int n = static_cast<int>(roots.size());
    std::vector<std::vector<cld>> a(n, std::vector<cld>(2 * n));
    for (int e = 0; e < n; ++e) {
        cld pw = 1;
        for (int k = 0; k < n; ++k) {
            a[e][k] = pw;
            pw *= roots[e];
        }
        a[e][n + e] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        cld d = a[c][c];
        for (auto& v : a[c]) v /= d;
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            cld f = a[r][c];
            if (f == cld(0)) continue;
            for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    // a = [I | V^-1] where V[e][k] = r_e^k; we need y = V^-1 s
    std::vector<std::vector<cld>> inv(n, std::vector<cld>(n));
    for (int k = 0; k < n; ++k)
        for (int e = 0; e < n; ++e) inv[k][e] = a[k][n + e];
    return inv;
}

struct Registry {
    std::mutex mu;
    std::vector<std::unique_ptr<Field>> fields;
    std::map<std::pair<const Field*, const Field*>, Number> embeddings;
};

Registry& registry() {
    static Registry r;
    return r;
}

std::string zpoly_text(const ZPoly& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += p[i].get_str();
    }
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

const Field* build_field(const ZPoly& poly, const RationalInterval& sel, const std::string& name,
                         const mpz_class* bound_override) {
    if (poly.size() < 2) throw ArithmeticError("minimal polynomial must have positive degree");
    if (poly.back() != 1) throw ArithmeticError("minimal polynomial must be monic");
    if (sel.lo > sel.hi) throw ArithmeticError("selector interval is empty");
    QPoly qp = to_q(poly);
    if (!is_squarefree(poly)) throw ArithmeticError("minimal polynomial is not squarefree");
    const int nroots = (sel.lo == sel.hi) ? (qeval(qp, sel.lo) == 0 ? 1 : 0)
                                          : count_real_roots(poly, sel.lo, sel.hi) +
                                                (qeval(qp, sel.lo) == 0 ? 1 : 0);
    if (nroots != 1) throw ArithmeticError("selector must isolate exactly one real root");

    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    for (const auto& f : reg.fields)
        if (f->minpoly == poly && f->selector.lo == sel.lo && f->selector.hi == sel.hi) return f.get();

    auto f = std::make_unique<Field>();
    f->minpoly = poly;
    f->selector = sel;
    f->degree = static_cast<int>(poly.size()) - 1;
    f->name = name.empty() ? ("minpoly[" + zpoly_text(poly) + "]") : name;
    const int n = f->degree;
    // x^n = -sum a_i x^i; build x^(n+k)
    ZPoly cur(n);
    for (int i = 0; i < n; ++i) cur[i] = -poly[i];
    for (int k = 0; k + 1 < n; ++k) {
        f->reduction.push_back(cur);
        ZPoly next(n);
        for (int i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
        for (int i = 0; i < n; ++i) next[i] -= cur[n - 1] * poly[i];
        cur = next;
    }
    if (n == 1) {
        f->roots = {cld(static_cast<long double>(mpz_class(-poly[0]).get_d()), 0)};
        f->designated = 0;
    } else {
        f->roots = poly_roots(poly);
        const long double lo = sel.lo.get_d(), hi = sel.hi.get_d();
        int best = -1;
        long double best_d = 1e300L;
        for (int i = 0; i < n; ++i) {
            const auto& r = f->roots[i];
            if (r.imag() != 0) continue;
            long double d = std::max({lo - r.real(), r.real() - hi, 0.0L});
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        if (best < 0) throw ArithmeticError("numeric root location failed");
        f->designated = best;
    }
    f->vandermonde_inverse = invert_vandermonde(f->roots);
    if (bound_override) {
        f->denominator_bound = *bound_override;
    } else {
        mpq_class disc = resultant(qp, qderiv(qp));
        f->denominator_bound = abs(disc.get_num());
        if (f->denominator_bound == 0) f->denominator_bound = 1;
    }
    reg.fields.push_back(std::move(f));
    return reg.fields.back().get();
}

void register_embedding(const Field* from, const Field* to, const Number& image) {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    reg.embeddings.emplace(std::make_pair(from, to), image);
}

void mul_into(const Field* f, const ZPoly& a, const ZPoly& b, ZPoly& out) {
    const int n = f->degree;
    ZPoly prod(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    for (int k = 0; k + 1 < n; ++k) {
        const mpz_class& c = prod[n + k];
        if (c == 0) continue;
        const ZPoly& red = f->reduction[k];
        for (int i = 0; i < n; ++i)
            if (red[i] != 0) mpz_addmul(prod[i].get_mpz_t(), c.get_mpz_t(), red[i].get_mpz_t());
    }
    prod.resize(n);
    out = std::move(prod);
}

}  // namespace

int count_real_roots(const ZPoly& p, const mpq_class& lo, const mpq_class& hi) {
    auto seq = sturm_sequence(to_q(p));
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

bool is_squarefree(const ZPoly& p) {
    QPoly q = to_q(p);
    trim(q);
    QPoly g = qgcd(q, qderiv(q));
    return g.size() <= 1;
}

ZPoly chebyshev_like(int k) {
    ZPoly a{2}, b{0, 1};
    if (k == 0) return a;
    for (int i = 1; i < k; ++i) {
        ZPoly c(b.size() + 1);
        for (size_t j = 0; j < b.size(); ++j) c[j + 1] += b[j];
        for (size_t j = 0; j < a.size(); ++j) c[j] -= a[j];
        a = b;
        b = c;
    }
    return b;
}

Number chebyshev_eval(int k, const Number& c) {
    if (k < 0) k = -k;
    Number a(c.field(), 2), b = c;
    if (k == 0) return a;
    for (int i = 1; i < k; ++i) {
        Number next = c * b - a;
        a = b;
        b = next;
    }
    return b;
}

const Field* field_from_minpoly(const ZPoly& poly, const RationalInterval& selector,
                                const std::string& name) {
    return build_field(poly, selector, name, nullptr);
}

const Field* rationals() {
    static const Field* f = build_field({-1, 1}, {1, 1}, "QQ", nullptr);
    return f;
}

const Field* field_sqrt2() {
    static const Field* f = build_field({-2, 0, 1}, {1, 2}, "QQ(sqrt2)", nullptr);
    return f;
}

const Field* field_sqrt5() {
    static const Field* f = build_field({-5, 0, 1}, {2, 3}, "QQ(sqrt5)", nullptr);
    return f;
}

const Field* field_sqrt2_sqrt5() {
    static const Field* f = [] {
        const Field* big = build_field({9, 0, -14, 0, 1}, {3, 4}, "QQ(sqrt2,sqrt5)", nullptr);
        // sqrt2 = (t^3 - 11 t)/6, sqrt5 = (17 t - t^3)/6 with t = sqrt2 + sqrt5
        register_embedding(field_sqrt2(), big, Number(big, ZPoly{0, -11, 0, 1}, 6));
        register_embedding(field_sqrt5(), big, Number(big, ZPoly{0, 17, 0, -1}, 6));
        return big;
    }();
    return f;
}

const Field* field_cyclotomic_real(int m) {
    if (m <= 0) throw ArithmeticError("cyclotomic level must be positive");
    if (m <= 4 || m == 6) return rationals();
    // minimal polynomial of 2cos(2 pi/m): product over k < m/2 coprime to m, rounded
    std::vector<long double> rs;
    for (int k = 1; 2 * k < m; ++k)
        if (std::gcd(k, m) == 1) rs.push_back(2 * std::cos(2 * std::numbers::pi_v<long double> * k / m));
    std::vector<long double> c{1};
    for (long double r : rs) {
        std::vector<long double> nc(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            nc[i] -= r * c[i];
        }
        c = nc;
    }
    ZPoly poly;
    for (long double v : c) poly.push_back(mpz_class(static_cast<double>(std::llround(v))));
    long double gap = 4;
    for (size_t i = 1; i < rs.size(); ++i) gap = std::min(gap, std::fabs(rs[i] - rs[0]));
    const long double r0 = rs[0];
    const long scale = 1L << 30;
    mpq_class lo(static_cast<long>(std::floor((r0 - gap / 3) * scale)), scale);
    mpq_class hi(static_cast<long>(std::ceil((r0 + gap / 3) * scale)), scale);
    lo.canonicalize();
    hi.canonicalize();
    mpz_class one = 1;
    return build_field(poly, {lo, hi}, "QQ(2cos(2pi/" + std::to_string(m) + "))", &one);
}

const Field* field_by_name(const std::string& name) {
    if (name == "QQ" || name == "Q" || name == "rationals") return rationals();
    if (name == "sqrt2") return field_sqrt2();
    if (name == "sqrt5") return field_sqrt5();
    if (name == "sqrt2_sqrt5" || name == "table2") return field_sqrt2_sqrt5();
    if (name.rfind("cyclo", 0) == 0) return field_cyclotomic_real(std::stoi(name.substr(5)));
    throw ArithmeticError("unknown field preset: " + name);
}

std::string field_declaration(const Field* f) {
    return "minpoly:" + zpoly_text(f->minpoly) + ";selector:" + f->selector.lo.get_str() + "," +
           f->selector.hi.get_str();
}

const Field* field_from_declaration(const std::string& decl) {
    auto parts = split(decl, ';');
    if (parts.size() != 2 || parts[0].rfind("minpoly:", 0) != 0 || parts[1].rfind("selector:", 0) != 0)
        throw ArithmeticError("bad field declaration: " + decl);
    ZPoly poly;
    for (const auto& t : split(parts[0].substr(8), ',')) poly.push_back(mpz_class(t));
    auto sel = split(parts[1].substr(9), ',');
    if (sel.size() != 2) throw ArithmeticError("bad selector in field declaration");
    // Reuse presets so that embeddings stay registered.
    for (const Field* p : {rationals(), field_sqrt2(), field_sqrt5(), field_sqrt2_sqrt5()})
        if (p->minpoly == poly && p->selector.lo == mpq_class(sel[0]) && p->selector.hi == mpq_class(sel[1]))
            return p;
    return field_from_minpoly(poly, {mpq_class(sel[0]), mpq_class(sel[1])});
}

// ---------------------------------------------------------------- Number

Number::Number() : Number(rationals()) {}

Number::Number(const Field* f) : field_(f), num_(f->degree), den_(1) {}

Number::Number(const Field* f, long v) : field_(f), num_(f->degree), den_(1) { num_[0] = v; }

Number::Number(const Field* f, const mpq_class& q) : field_(f), num_(f->degree), den_(q.get_den()) {
    num_[0] = q.get_num();
}

Number::Number(const Field* f, ZPoly num, mpz_class den) : field_(f), num_(std::move(num)), den_(std::move(den)) {
    if (static_cast<int>(num_.size()) > f->degree) {
        // reduce higher powers
        ZPoly low(num_.begin(), num_.begin() + f->degree);
        for (size_t k = f->degree; k < num_.size(); ++k) {
            if (num_[k] == 0) continue;
            const size_t idx = k - f->degree;
            if (idx >= f->reduction.size()) {
                // fall back to repeated multiplication for very long inputs
                Number x = generator(f), acc(f, 1);
                for (size_t i = 0; i < k; ++i) acc *= x;
                for (int i = 0; i < f->degree; ++i) low[i] += num_[k] * acc.num_[i];
                continue;
            }
            for (int i = 0; i < f->degree; ++i) low[i] += num_[k] * f->reduction[idx][i];
        }
        num_ = std::move(low);
    }
    num_.resize(f->degree);
    if (den_ == 0) throw ArithmeticError("zero denominator");
    normalize();
}

Number Number::generator(const Field* f) {
    Number r(f);
    if (f->degree == 1) {
        r.num_[0] = -f->minpoly[0];
    } else {
        r.num_[1] = 1;
    }
    return r;
}

mpq_class Number::coeff(int i) const {
    mpq_class q(num_[i], den_);
    q.canonicalize();
    return q;
}

void Number::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        den_ /= g;
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    if (is_zero()) den_ = 1;
}

bool Number::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool Number::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool Number::is_integer_value(long v) const { return is_rational() && den_ == 1 && num_[0] == v; }

void Number::align(const Number& o) {
    if (field_ == o.field_) return;
    if (field_->degree == 1 && field_ == rationals()) {
        *this = lift_to(o.field_);
        return;
    }
    throw ArithmeticError("incompatible fields: " + field_->name + " vs " + o.field_->name);
}

Number Number::operator-() const {
    Number r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

Number& Number::operator+=(const Number& o) {
    if (field_ != o.field_) {
        if (o.field_ == rationals()) return *this += o.lift_to(field_);
        align(o);
    }
    if (den_ == o.den_) {
        for (int i = 0; i < field_->degree; ++i) num_[i] += o.num_[i];
    } else {
        for (int i = 0; i < field_->degree; ++i) {
            num_[i] *= o.den_;
            mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Number& Number::operator-=(const Number& o) { return *this += -o; }

Number& Number::operator*=(const Number& o) {
    if (field_ != o.field_) {
        if (o.field_ == rationals()) return *this *= o.lift_to(field_);
        align(o);
    }
    if (field_->degree == 1) {
        num_[0] *= o.num_[0];
    } else {
        mul_into(field_, num_, o.num_, num_);
    }
    den_ *= o.den_;
    normalize();
    return *this;
}

Number operator*(Number a, long b) {
    for (auto& c : a.num_) c *= b;
    a.normalize();
    return a;
}

Number& Number::operator/=(const Number& o) { return *this *= o.inverse(); }

bool Number::operator==(const Number& o) const {
    if (field_ != o.field_) {
        if (o.field_ == rationals()) return *this == o.lift_to(field_);
        if (field_ == rationals()) return lift_to(o.field_) == o;
        return false;
    }
    return den_ == o.den_ && num_ == o.num_;
}

Number Number::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    const int n = field_->degree;
    if (n == 1) return Number(field_, mpq_class(den_, num_[0]));
    // extended Euclid: find u with u * a = 1 mod m
    QPoly a(n);
    for (int i = 0; i < n; ++i) a[i] = mpq_class(num_[i], den_);
    for (auto& c : a) c.canonicalize();
    QPoly m = to_q(field_->minpoly);
    QPoly r0 = m, r1 = a, s0{}, s1{1};
    trim(r1);
    while (r1.size() > 1) {
        QPoly q;
        QPoly rem = r0;
        const int db = static_cast<int>(r1.size()) - 1;
        q.assign(std::max<int>(0, static_cast<int>(rem.size()) - db), 0);
        while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
            mpq_class f = rem.back() / r1.back();
            const int shift = static_cast<int>(rem.size()) - 1 - db;
            q[shift] = f;
            for (int i = 0; i <= db; ++i) rem[i + shift] -= f * r1[i];
            rem.pop_back();
            trim(rem);
        }
        // s2 = s0 - q s1
        QPoly qs(q.size() + s1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        QPoly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw ArithmeticError("inverse: non-invertible element (reducible minimal polynomial?)");
    mpq_class c = r1[0];
    QPoly u = s1;
    u = qrem(u, m);
    u.resize(n, 0);
    mpz_class den = 1;
    for (auto& v : u) {
        v /= c;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
    ZPoly num(n);
    for (int i = 0; i < n; ++i) num[i] = u[i].get_num() * (den / u[i].get_den());
    return Number(field_, num, den);
}

std::string Number::key() const {
    std::string k = den_.get_str(16);
    for (const auto& c : num_) {
        k.push_back(':');
        k += c.get_str(16);
    }
    return k;
}

std::string Number::encode() const {
    std::string s;
    for (int i = 0; i < field_->degree; ++i) {
        if (i) s.push_back(',');
        s += coeff(i).get_str();
        if (coeff(i).get_den() == 1) s += "/1";
    }
    return s;
}

Number Number::decode(const Field* f, const std::string& text) {
    auto parts = split(text, ',');
    if (static_cast<int>(parts.size()) != f->degree)
        throw ArithmeticError("scalar has " + std::to_string(parts.size()) + " coefficients, field degree is " +
                              std::to_string(f->degree));
    mpz_class den = 1;
    std::vector<mpq_class> qs;
    for (const auto& p : parts) {
        mpq_class q;
        if (q.set_str(p, 10) != 0) throw ArithmeticError("bad rational: " + p);
        q.canonicalize();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        qs.push_back(q);
    }
    ZPoly num;
    for (auto& q : qs) num.push_back(q.get_num() * (den / q.get_den()));
    return Number(f, num, den);
}

std::string Number::pretty() const {
    if (is_rational()) return coeff(0).get_str();
    std::ostringstream os;
    os.precision(12);
    os << static_cast<double>(approx());
    return os.str();
}

std::complex<long double> Number::embed(int root_index) const {
    const cld r = field_->roots[root_index];
    cld v = 0;
    for (int i = field_->degree - 1; i >= 0; --i) v = v * r + static_cast<long double>(num_[i].get_d());
    return v / static_cast<long double>(den_.get_d());
}

long double Number::approx() const { return embed(field_->designated).real(); }

namespace {
struct QInterval {
    mpq_class lo, hi;
};
QInterval imul(const QInterval& a, const QInterval& b) {
    mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}
}  // namespace

RationalInterval Number::numeric_interval(int precision_bits) const {
    if (is_rational()) {
        mpq_class v = coeff(0);
        return {v, v};
    }
    QPoly m = to_q(field_->minpoly);
    mpq_class lo = field_->selector.lo, hi = field_->selector.hi;
    mpq_class target(1);
    target /= mpq_class(mpz_class(1) << precision_bits);
    const int slo = sgn(qeval(m, lo));
    for (int iter = 0; iter < 100000; ++iter) {
        // evaluate by Horner on intervals
        QInterval x{lo, hi};
        QInterval acc{coeff(field_->degree - 1), coeff(field_->degree - 1)};
        for (int i = field_->degree - 2; i >= 0; --i) {
            acc = imul(acc, x);
            acc.lo += coeff(i);
            acc.hi += coeff(i);
        }
        if (acc.hi - acc.lo <= target) return {acc.lo, acc.hi};
        mpq_class mid = (lo + hi) / 2;
        const int sm = sgn(qeval(m, mid));
        if (sm == 0) {
            lo = hi = mid;
        } else if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw ArithmeticError("numeric_interval did not converge");
}

int Number::sign() const {
    if (is_zero()) return 0;
    for (int bits = 16;; bits *= 2) {
        auto iv = numeric_interval(bits);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
        if (bits > (1 << 16)) throw ArithmeticError("sign undecidable");
    }
}

Number Number::lift_to(const Field* target) const {
    if (target == field_) return *this;
    if (field_ == rationals()) return Number(target, coeff(0));
    if (is_rational()) return Number(target, coeff(0));
    Number image;
    {
        auto& reg = registry();
        std::lock_guard<std::mutex> lock(reg.mu);
        auto it = reg.embeddings.find({field_, target});
        if (it == reg.embeddings.end())
            throw ArithmeticError("no embedding from " + field_->name + " into " + target->name);
        image = it->second;
    }
    Number acc(target);
    for (int i = field_->degree - 1; i >= 0; --i) acc = acc * image + Number(target, coeff(i));
    return acc;
}

// ---------------------------------------------------------------- square roots

std::optional<Number> exact_sqrt(const Number& d) {
    const Field* f = d.field();
    if (d.is_zero()) return d;
    if (f->degree == 1) {
        mpq_class q = d.coeff(0);
        if (q < 0) return std::nullopt;
        mpz_class a = q.get_num(), b = q.get_den();
        if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return std::nullopt;
        mpz_class ra, rb;
        mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
        mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
        return Number(f, mpq_class(ra, rb));
    }
    const int n = f->degree;
    // a = d * den^2 has integral coordinates; sqrt(d) = sqrt(a) / den
    const mpz_class& den = d.denominator();
    ZPoly anum = d.numerators();
    for (auto& c : anum) c *= den;
    Number a(f, anum, 1);

    // Norm must be a rational square.
    {
        QPoly m = to_q(f->minpoly), ap = to_q(a.numerators());
        trim(ap);
        mpq_class norm = resultant(m, ap);
        if (norm < 0) return std::nullopt;
        if (!mpz_perfect_square_p(norm.get_num_mpz_t()) || !mpz_perfect_square_p(norm.get_den_mpz_t()))
            return std::nullopt;
    }
    std::vector<cld> vals(n);
    long double scale = 1;
    for (const auto& c : anum) scale = std::max(scale, std::fabs(static_cast<long double>(c.get_d())));
    std::vector<int> free_idx;  // real roots and one representative per conjugate pair
    std::vector<int> partner(n, -1);
    for (int e = 0; e < n; ++e) {
        vals[e] = a.embed(e);
        const auto& r = f->roots[e];
        if (r.imag() == 0) {
            if (vals[e].real() < -1e-12L * scale) return std::nullopt;
            free_idx.push_back(e);
        } else if (r.imag() > 0) {
            free_idx.push_back(e);
            for (int o = 0; o < n; ++o)
                if (o != e && std::abs(f->roots[o] - std::conj(r)) < 1e-9L * (1 + std::abs(r))) partner[e] = o;
        }
    }
    std::vector<cld> base(n);
    for (int e = 0; e < n; ++e) base[e] = std::sqrt(vals[e]);
    const long double B = static_cast<long double>(f->denominator_bound.get_d());
    const int k = static_cast<int>(free_idx.size());
    const unsigned long total = 1UL << (k - 1);  // overall sign fixed
    std::vector<cld> s(n);
    for (unsigned long g = 0; g < total; ++g) {
        const unsigned long pattern = g ^ (g >> 1);
        for (int t = 0; t < k; ++t) {
            const int e = free_idx[t];
            const long double sg = (pattern >> t) & 1UL ? -1.0L : 1.0L;
            s[e] = sg * base[e];
            if (partner[e] >= 0) s[partner[e]] = std::conj(s[e]);
        }
        ZPoly cand(n);
        bool plausible = true;
        for (int c = 0; c < n && plausible; ++c) {
            cld y = 0;
            for (int e = 0; e < n; ++e) y += f->vandermonde_inverse[c][e] * s[e];
            const long double v = y.real() * B;
            const long double rv = std::nearbyint(v);
            if (std::fabs(v - rv) > 1e-3L || std::fabs(y.imag()) * B > 1e-3L ||
                std::fabs(rv) > 9.0e18L) {
                plausible = false;
                break;
            }
            cand[c] = mpz_class(static_cast<double>(rv));
            if (std::fabs(rv) >= 9.0e15L) {
                // beyond double precision: rebuild from long long
                cand[c] = mpz_class(std::to_string(static_cast<long long>(rv)));
            }
        }
        if (!plausible) continue;
        Number y(f, cand, f->denominator_bound);
        if (y * y == a) {
            Number root = y / Number(f, mpq_class(den));
            if (root.sign() < 0) root = -root;
            return root;
        }
    }
    return std::nullopt;
}

}  // namespace garnier
