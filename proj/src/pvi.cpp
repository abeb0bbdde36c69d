#include "garnier/pvi.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace garnier {

std::string pvi_key(const PviPoint& q) {
    std::string k;
    for (int i = 0; i < 7; ++i) {
        if (i) k += ';';
        k += q[i].key();
    }
    return k;
}

std::string pvi_text(const PviPoint& q) {
    std::string s = "(";
    for (int i = 0; i < 7; ++i) s += (i ? ", " : "") + q[i].pretty();
    return s + ")";
}

// ------------------------------------------------------------ projections

const std::array<Proj, 4>& all_projections() {
    static const std::array<Proj, 4> a{Proj::tilde, Proj::hat, Proj::check, Proj::bar};
    return a;
}

const char* proj_name(Proj w) {
    switch (w) {
        case Proj::tilde: return "tilde";
        case Proj::hat: return "hat";
        case Proj::check: return "check";
        default: return "bar";
    }
}

Proj proj_from_name(const std::string& name) {
    for (Proj w : all_projections())
        if (name == proj_name(w)) return w;
    throw std::invalid_argument("unknown projection: " + name);
}

const std::array<int, 7>& proj_slots(Proj w) {
    static const std::array<int, 7> tilde{P1, P2, P3, P321, P21, P31, P32};
    static const std::array<int, 7> hat{P2, P3, P4, P432, P32, P42, P43};
    static const std::array<int, 7> check{P1, P2, P4, P421, P21, P41, P42};
    static const std::array<int, 7> bar{P1, P3, P4, P431, P31, P41, P43};
    switch (w) {
        case Proj::tilde: return tilde;
        case Proj::hat: return hat;
        case Proj::check: return check;
        default: return bar;
    }
}

PviPoint project(const Point& p, Proj w) {
    PviPoint q;
    const auto& s = proj_slots(w);
    for (int i = 0; i < 7; ++i) q[i] = p[s[i]];
    return q;
}

const std::array<int, 3>& proj_subgroup(Proj w) {
    // indices into (b21, b31, b32, b41, b42, b43)
    static const std::array<int, 3> tilde{0, 1, 2};
    static const std::array<int, 3> hat{2, 4, 5};
    static const std::array<int, 3> check{0, 3, 4};
    static const std::array<int, 3> bar{1, 3, 5};
    switch (w) {
        case Proj::tilde: return tilde;
        case Proj::hat: return hat;
        case Proj::check: return check;
        default: return bar;
    }
}

// ------------------------------------------------------------ braid action

namespace {
Number w1(const PviPoint& q) { return q[Q1] * q[QINF] + q[Q3] * q[Q2]; }
Number w2(const PviPoint& q) { return q[Q2] * q[QINF] + q[Q3] * q[Q1]; }
Number w3(const PviPoint& q) { return q[Q3] * q[QINF] + q[Q2] * q[Q1]; }
}  // namespace

// From (N1,N2,N3) -> (N2, N2 N1 N2^-1, N3) and (N1, N3, N3 N2 N3^-1),
// traces reduced with the skein relation.
PviPoint pvi_sigma(int i, const PviPoint& q) {
    const Number &a = q[Q1], &b = q[Q2], &c = q[Q3], &inf = q[QINF];
    const Number &x21 = q[Q21], &x31 = q[Q31], &x32 = q[Q32];
    switch (i) {
        case 1: return {b, a, c, inf, x21, x32, w2(q) - x31 - x21 * x32};
        case -1: return {b, a, c, inf, x21, w1(q) - x32 - x21 * x31, x31};
        case 2: return {a, c, b, inf, x31, w3(q) - x21 - x31 * x32, x32};
        case -2: return {a, c, b, inf, w2(q) - x31 - x21 * x32, x21, x32};
        default: throw std::invalid_argument("pvi_sigma: letter must be +-1 or +-2");
    }
}

PviPoint pvi_braid(const std::vector<int>& word, const PviPoint& q) {
    PviPoint r = q;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = pvi_sigma(*it, r);
    return r;
}

const std::vector<PointMap<PviPoint>>& p3_generators() {
    static const std::vector<PointMap<PviPoint>> g = {
        [](const PviPoint& q) { return pvi_braid({1, 1}, q); },
        [](const PviPoint& q) { return pvi_braid({-2, 1, 1, 2}, q); },
        [](const PviPoint& q) { return pvi_braid({2, 2}, q); },
    };
    return g;
}

OrbitResult<PviPoint> p3_orbit(const PviPoint& q, size_t cap) {
    return enumerate_orbit(q, p3_generators(), cap, [](const PviPoint& x) { return pvi_key(x); });
}

// ------------------------------------------------------------ Okamoto

OmegaPoint omega_from_q(const PviPoint& q) {
    const Number &a = q[Q1], &b = q[Q2], &c = q[Q3], &inf = q[QINF];
    Number w4 = c * c + b * b + a * a + inf * inf + c * b * a * inf;
    return {w1(q), w2(q), w3(q), w4, q[Q21], q[Q31], q[Q32]};
}

Okamoto okamoto_from_name(const std::string& n) {
    static const std::vector<std::pair<std::string, Okamoto>> names = {
        {"s1", Okamoto::s1},         {"s2", Okamoto::s2}, {"s3", Okamoto::s3}, {"sinf", Okamoto::sinf},
        {"sdelta", Okamoto::sdelta}, {"r1", Okamoto::r1}, {"r2", Okamoto::r2}, {"r3", Okamoto::r3},
        {"P13", Okamoto::P13},       {"P23", Okamoto::P23}};
    for (const auto& [s, g] : names)
        if (s == n) return g;
    throw std::invalid_argument("unknown Okamoto generator: " + n);
}

OmegaPoint okamoto_generator(Okamoto g, const OmegaPoint& x) {
    const Number &o1 = x[0], &o2 = x[1], &o3 = x[2], &o4 = x[3], &a = x[4], &b = x[5], &c = x[6];
    switch (g) {
        case Okamoto::r1: return {o1, -o2, -o3, o4, -a, -b, c};
        case Okamoto::r2: return {-o1, o2, -o3, o4, -a, b, -c};
        case Okamoto::r3: return {-o1, -o2, o3, o4, a, -b, -c};
        case Okamoto::P13: return {o3, o2, o1, o4, c, o2 - b - a * c, a};
        case Okamoto::P23: return {o1, o3, o2, o4, o2 - b - a * c, a, c};
        default: return x;
    }
}

PviPoint okamoto_on_q(Okamoto g, const PviPoint& q) {
    const Number &a = q[Q1], &b = q[Q2], &c = q[Q3], &inf = q[QINF];
    const Number &x21 = q[Q21], &x31 = q[Q31], &x32 = q[Q32];
    switch (g) {
        case Okamoto::r1: return {a, -b, -c, inf, -x21, -x31, x32};
        case Okamoto::r2: return {-a, b, -c, inf, -x21, x31, -x32};
        case Okamoto::r3: return {-a, -b, c, inf, x21, -x31, -x32};
        case Okamoto::P13: return {c, b, a, inf, x32, w2(q) - x31 - x21 * x32, x21};
        case Okamoto::P23: return {a, c, b, inf, w2(q) - x31 - x21 * x32, x21, x32};
        default: return q;
    }
}

int okamoto_omega_group_order() {
    // Act on a generic omega vector; the q_ij part is ignored here.
    const Field* f = rationals();
    auto key = [](const OmegaPoint& x) {
        return x[0].key() + ";" + x[1].key() + ";" + x[2].key() + ";" + x[3].key();
    };
    OmegaPoint x0{Number(f, 3), Number(f, 5), Number(f, 7), Number(f, 11), Number(f, 0), Number(f, 0), Number(f, 0)};
    std::vector<PointMap<OmegaPoint>> gens;
    for (Okamoto g : {Okamoto::r1, Okamoto::r2, Okamoto::r3, Okamoto::P13, Okamoto::P23})
        gens.push_back([g](const OmegaPoint& x) {
            OmegaPoint y = okamoto_generator(g, x);
            for (int i = 4; i < 7; ++i) y[i] = x[i];
            return y;
        });
    return static_cast<int>(enumerate_orbit(x0, gens, 1000, key).size());
}

// ------------------------------------------------------------ theta

ThetaTuple theta_transform(ThetaGen t, const ThetaTuple& th) {
    const mpq_class &a = th[0], &b = th[1], &c = th[2], &d = th[3];
    switch (t) {
        case ThetaGen::alpha: return {a + 1, b + 1, c + 1, d + 1};
        case ThetaGen::beta: return {b, a, d - 2, c};
        case ThetaGen::gamma: return {c, d - 2, a, b};
        case ThetaGen::sdelta: {
            mpq_class delta = (a + b + c + d) / 2;
            return {a - delta, b - delta, c - delta, d - delta};
        }
        default: return {-a, b, c, d};
    }
}

const std::vector<ThetaComposite>& theta_composites() {
    static const std::vector<ThetaComposite> list = [] {
        using G = ThetaGen;
        std::vector<ThetaComposite> out;
        const std::vector<std::pair<std::string, std::vector<G>>> heads = {
            {"", {}},
            {"a", {G::alpha}},
            {"b", {G::beta}},
            {"g", {G::gamma}},
            {"ab", {G::alpha, G::beta}},
            {"ag", {G::alpha, G::gamma}},
            {"bg", {G::beta, G::gamma}},
            {"abg", {G::alpha, G::beta, G::gamma}},
        };
        const std::vector<std::pair<std::string, std::vector<G>>> tails = {
            {"", {}}, {"sd", {G::sdelta}}, {"sd.s1", {G::sdelta, G::s1}}};
        for (const auto& [tn, tw] : tails)
            for (const auto& [hn, hw] : heads) {
                std::string name = hn.empty() && tn.empty() ? "id" : hn.empty() ? tn : tn.empty() ? hn : hn + "." + tn;
                std::vector<G> w = hw;
                w.insert(w.end(), tw.begin(), tw.end());
                out.push_back({name, w});
            }
        return out;
    }();
    return list;
}

ThetaTuple apply_composite(const ThetaComposite& c, const ThetaTuple& th) {
    ThetaTuple r = th;
    for (auto it = c.word.rbegin(); it != c.word.rend(); ++it) r = theta_transform(*it, r);
    return r;
}

const Field* theta_field(int level) { return field_cyclotomic_real(2 * level); }

std::array<Number, 4> q_from_theta(const ThetaTuple& th, int level) {
    if (level <= 0) throw std::invalid_argument("cyclotomic level must be positive");
    const Field* f = theta_field(level);
    // c = 2cos(pi / level)
    Number c = f->degree == 1 ? Number(f, std::lround(2 * std::cos(std::numbers::pi / level))) : Number::generator(f);
    std::array<Number, 4> out;
    for (int i = 0; i < 4; ++i) {
        mpq_class t = th[i] * level;
        t.canonicalize();
        if (t.get_den() != 1)
            throw std::invalid_argument("theta denominator " + mpz_class(th[i].get_den()).get_str() +
                                        " does not divide the level " + std::to_string(level));
        mpz_class k = t.get_num();
        k = k % (2 * level);
        if (k < 0) k += 2 * level;
        out[i] = chebyshev_eval(static_cast<int>(k.get_si()), c);
    }
    return out;
}

// ------------------------------------------------------------ predicates

std::optional<int> okid_predicate(const PviPoint& q) {
    for (int eps : {1, -1}) {
        if (q[Q21] == eps * q[Q3] && q[Q31] == eps * q[Q2] && q[Q32] == eps * q[Q1] &&
            q[QINF].is_integer_value(2 * eps))
            return eps;
    }
    return std::nullopt;
}

bool okred_predicate(const PviPoint& q) {
    const Number &a = q[Q1], &b = q[Q2], &c = q[Q3];
    Number sa = 4 - a * a, sb = 4 - b * b, sc = 4 - c * c;
    Number t21 = a * b - 2 * q[Q21], t31 = a * c - 2 * q[Q31], t32 = b * c - 2 * q[Q32];
    if (t21 * t21 != sa * sb || t31 * t31 != sa * sc || t32 * t32 != sb * sc) return false;
    if (t21 * t31 * t32 != sa * sb * sc) return false;
    return 4 * q[QINF] == a * b * c - t21 * c - t31 * b - t32 * a;
}

// ------------------------------------------------------------ seeds

namespace {

mpq_class parse_rational(const std::string& s) {
    mpq_class v(s);
    v.canonicalize();
    return v;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

SeedFile parse_seed_file(const std::string& text) {
    SeedFile f;
    bool have_level = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!have_level) {
            if (tok.size() != 2 || tok[0] != "level")
                throw std::invalid_argument("seed file line " + std::to_string(lineno) + ": expected 'level N'");
            f.level = std::stoi(tok[1]);
            if (f.level <= 0) throw std::invalid_argument("seed file: level must be positive");
            have_level = true;
            continue;
        }
        if (tok.size() != 11)
            throw std::invalid_argument("seed file line " + std::to_string(lineno) + ": expected 11 fields");
        const Field* fld = theta_field(f.level);
        Seed s;
        s.line = lineno;
        for (int i = 0; i < 4; ++i) s.theta[i] = parse_rational(tok[i]);
        for (int i = 0; i < 7; ++i) s.omega[i] = Number::decode(fld, tok[4 + i]);
        auto qs = q_from_theta(s.theta, f.level);
        PviPoint q{qs[0], qs[1], qs[2], qs[3], s.omega[4], s.omega[5], s.omega[6]};
        OmegaPoint w = omega_from_q(q);
        for (int i = 0; i < 4; ++i)
            if (w[i] != s.omega[i])
                throw std::invalid_argument("seed file line " + std::to_string(lineno) + ": omega_" +
                                            std::to_string(i + 1) + " disagrees with the thetas");
        f.seeds.push_back(s);
    }
    if (!have_level) throw std::invalid_argument("seed file: missing 'level N' header");
    return f;
}

std::optional<Seed> seed_from_pvi(const PviPoint& q, int level) {
    const Field* f = theta_field(level);
    PviPoint ql;
    try {
        for (int i = 0; i < 7; ++i) ql[i] = q[i].lift_to(f);
    } catch (const ArithmeticError&) {
        return std::nullopt;
    }
    Seed s;
    for (int i = 0; i < 4; ++i) {
        bool found = false;
        for (int k = 0; k <= level && !found; ++k) {
            ThetaTuple t{mpq_class(k, level), 0, 0, 0};
            t[0].canonicalize();
            if (q_from_theta(t, level)[0] == ql[i]) {
                s.theta[i] = t[0];
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    s.omega = omega_from_q(ql);
    return s;
}

std::string format_seed_file(const SeedFile& f) {
    std::string s = "level " + std::to_string(f.level) + "\n";
    for (const auto& sd : f.seeds) {
        for (int i = 0; i < 4; ++i) s += sd.theta[i].get_str() + " ";
        for (int i = 0; i < 7; ++i) s += sd.omega[i].encode() + (i == 6 ? "\n" : " ");
    }
    return s;
}

// ------------------------------------------------------------ expansion

namespace {

struct Tagged {
    PviPoint q;
    ThetaTuple theta;
};

// Generators of steps 1 and 2 with their effect on the thetas.
std::vector<PointMap<Tagged>> expansion_generators() {
    auto swap = [](ThetaTuple t, int i, int j) {
        std::swap(t[i], t[j]);
        return t;
    };
    auto shift = [](ThetaTuple t, int i, int j) {
        t[i] += 1;
        t[j] += 1;
        return t;
    };
    std::vector<PointMap<Tagged>> g;
    g.push_back([=](const Tagged& x) { return Tagged{okamoto_on_q(Okamoto::r1, x.q), shift(x.theta, 1, 2)}; });
    g.push_back([=](const Tagged& x) { return Tagged{okamoto_on_q(Okamoto::r2, x.q), shift(x.theta, 0, 2)}; });
    g.push_back([=](const Tagged& x) { return Tagged{okamoto_on_q(Okamoto::r3, x.q), shift(x.theta, 0, 1)}; });
    g.push_back([=](const Tagged& x) { return Tagged{okamoto_on_q(Okamoto::P13, x.q), swap(x.theta, 0, 2)}; });
    g.push_back([=](const Tagged& x) { return Tagged{okamoto_on_q(Okamoto::P23, x.q), swap(x.theta, 1, 2)}; });
    g.push_back([=](const Tagged& x) { return Tagged{pvi_sigma(1, x.q), swap(x.theta, 0, 1)}; });
    g.push_back([=](const Tagged& x) { return Tagged{pvi_sigma(2, x.q), swap(x.theta, 1, 2)}; });
    return g;
}

}  // namespace

PointSet<PviPoint> expand_seeds(const SeedFile& f, ExpandStats* stats, size_t cap) {
    ExpandStats st;
    st.seeds = f.seeds.size();
    st.omega_group_order = okamoto_omega_group_order();
    PointSet<PviPoint> out;
    auto gens = expansion_generators();
    auto tkey = [](const Tagged& x) { return pvi_key(x.q); };
    for (const auto& s : f.seeds) {
        auto qs = q_from_theta(s.theta, f.level);
        Tagged seed{{qs[0], qs[1], qs[2], qs[3], s.omega[4], s.omega[5], s.omega[6]}, s.theta};
        auto orb = enumerate_orbit(seed, gens, cap, tkey);
        if (!orb.finite())
            throw std::runtime_error("expand: braid closure of seed on line " + std::to_string(s.line) +
                                     " exceeded the cap");
        st.braid_closure += orb.size();
        std::set<std::string> merged;
        for (const auto& x : orb.points) {
            OmegaPoint w = omega_from_q(x.q);
            for (const auto& comp : theta_composites()) {
                ThetaTuple th = apply_composite(comp, x.theta);
                bool on_level = true;
                for (auto& t : th) {
                    mpq_class k = t * f.level;
                    k.canonicalize();
                    on_level = on_level && k.get_den() == 1;
                }
                if (!on_level) {
                    ++st.off_level;
                    continue;
                }
                auto q3 = q_from_theta(th, f.level);
                PviPoint m{q3[0], q3[1], q3[2], q3[3], x.q[Q21], x.q[Q31], x.q[Q32]};
                OmegaPoint wm = omega_from_q(m);
                if (wm[0] != w[0] || wm[1] != w[1] || wm[2] != w[2] || wm[3] != w[3]) {
                    ++st.rejected_theta;
                    continue;
                }
                std::string k = pvi_key(m);
                if (!merged.insert(k).second || out.contains(k)) continue;
                ++st.theta_images;
                auto p3 = p3_orbit(m, cap);
                if (!p3.finite())
                    throw std::runtime_error("expand: P3 orbit exceeded the cap for seed on line " +
                                             std::to_string(s.line));
                for (size_t i = 0; i < p3.size(); ++i) out.insert(p3.keys[i], p3.points[i]);
            }
        }
    }
    if (stats) *stats = st;
    return out;
}

}  // namespace garnier
