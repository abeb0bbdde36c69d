#include "garnier/matching.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "garnier/monodromy.hpp"

namespace garnier {

void CandidateSet::add(const Point& p, const std::string& origin) {
    std::string k = point_key(p);
    points.insert(k, p);
    auto& prov = provenance[k];
    if (prov.empty()) {
        prov = origin;
        return;
    }
    // keep the list sorted and free of repeats
    std::set<std::string> parts;
    size_t start = 0;
    while (start <= prov.size()) {
        size_t end = prov.find(',', start);
        if (end == std::string::npos) end = prov.size();
        parts.insert(prov.substr(start, end - start));
        start = end + 1;
    }
    parts.insert(origin);
    prov.clear();
    for (const auto& s : parts) prov += (prov.empty() ? "" : ",") + s;
}

Point pi_1234(const Point& p) {
    return {p[P4],  p[P1],  p[P2],  p[P3],   p[PINF], p[P41],  p[P42],  p[P21],
            p[P43], p[P31], p[P32], p[P421], p[P321], p[P432], p[P431]};
}

PviPoint pi_123(const PviPoint& q) { return {q[Q3], q[Q1], q[Q2], q[QINF], q[Q31], q[Q32], q[Q21]}; }

namespace {

// A point under construction: which coordinates are already fixed.
struct Partial {
    Point p;
    std::array<bool, kCoords> known{};

    bool set(int slot, const Number& v) {
        if (known[slot]) return p[slot] == v;
        p[slot] = v;
        known[slot] = true;
        return true;
    }
    bool set_projection(const PviPoint& q, Proj w) {
        const auto& s = proj_slots(w);
        for (int i = 0; i < 7; ++i)
            if (!set(s[i], q[i])) return false;
        return true;
    }
    bool ready() const {
        for (int s = 0; s < kCoords; ++s)
            if (s != PINF && s != P321 && !known[s]) return false;
        return true;
    }
};

const Field* field_of(const PviPoint& q) {
    for (const auto& x : q)
        if (x.field() != rationals()) return x.field();
    return rationals();
}

// Finish a partial with every coordinate except p321 and p_inf.
std::vector<Point> lift_partial(const Partial& part) {
    Point base = part.p;
    const Field* f = point_field(base);
    for (auto& x : base)
        if (x.field() != f) x = x.lift_to(f);
    auto f1_at = [&](long x) {
        Point q = base;
        q[P321] = Number(f, x);
        q[PINF] = Number(f, 0);
        return eval_ideal(q)[0];
    };
    Number c0 = f1_at(0), cp = f1_at(1), cm = f1_at(-1);
    Number a = (cp + cm) * Number(f, mpq_class(1, 2)) - c0;
    Number b = (cp - cm) * Number(f, mpq_class(1, 2));
    std::vector<Point> out;
    for (const auto& r : solve_quadratic(a, b, c0)) {
        Point q = base;
        q[P321] = r;
        q[PINF] = Number(f, 0);
        // f5 = -2 p_inf + (terms free of p_inf)
        q[PINF] = eval_ideal(q)[4] * Number(f, mpq_class(1, 2));
        if (is_member(q)) out.push_back(q);
    }
    return out;
}

// Columns shared by projection w and the coordinates already known.
std::vector<int> shared_positions(Proj w, const std::set<int>& known_slots) {
    std::vector<int> pos;
    const auto& s = proj_slots(w);
    for (int i = 0; i < 7; ++i)
        if (known_slots.count(s[i])) pos.push_back(i);
    return pos;
}

std::set<int> slots_of(std::initializer_list<Proj> ws) {
    std::set<int> r;
    for (Proj w : ws)
        for (int s : proj_slots(w)) r.insert(s);
    return r;
}

std::string key_at(const PviPoint& q, const std::vector<int>& pos) {
    std::string k;
    for (int i : pos) k += q[i].key() + ";";
    return k;
}

std::string key_from_point(const Point& p, Proj w, const std::vector<int>& pos) {
    std::string k;
    for (int i : pos) k += p[proj_slots(w)[i]].key() + ";";
    return k;
}

using Index = std::unordered_map<std::string, std::vector<const PviPoint*>>;

Index build_index(const PviSet& e, const std::vector<int>& pos) {
    Index idx;
    for (const auto& [k, q] : e) idx[key_at(q, pos)].push_back(&q);
    return idx;
}

void close_under_pi(CandidateSet& c) {
    std::vector<std::pair<Point, std::string>> base;
    for (const auto& [k, p] : c.points) base.emplace_back(p, c.provenance[k]);
    for (const auto& [p, prov] : base) {
        Point q = p;
        for (int power = 1; power <= 3; ++power) {
            q = pi_1234(q);
            std::string tag = prov;
            // tag every origin with the power applied
            size_t start = 0;
            while (start <= tag.size()) {
                size_t end = tag.find(',', start);
                if (end == std::string::npos) end = tag.size();
                std::string one = tag.substr(start, end - start);
                auto cut = one.rfind(":pi");
                if (cut != std::string::npos) one = one.substr(0, cut);
                c.add(q, one + ":pi" + std::to_string(power));
                start = end + 1;
            }
        }
    }
}

// Known-slot equations of an O_ID projection with sign eps.
bool impose_oid(Partial& part, Proj w, int eps, const Field* f) {
    const auto& s = proj_slots(w);
    const std::pair<int, int> links[3] = {{Q21, Q3}, {Q31, Q2}, {Q32, Q1}};
    bool changed = true;
    if (!part.set(s[QINF], Number(f, 2 * eps))) return false;
    while (changed) {
        changed = false;
        for (auto [a, b] : links) {
            int sa = s[a], sb = s[b];
            if (part.known[sa] && part.known[sb]) {
                if (part.p[sa] != eps * part.p[sb]) return false;
            } else if (part.known[sb]) {
                part.set(sa, eps * part.p[sb]);
                changed = true;
            } else if (part.known[sa]) {
                part.set(sb, eps * part.p[sa]);
                changed = true;
            }
        }
    }
    return true;
}

struct Placement {
    Proj o;     // the Okamoto-type projection
    Proj e1, e2;  // the other two (E-type for E x E x O; O_ID for E x O x O)
    const char* name;
};

}  // namespace

std::vector<Point> lift_projections(const PviPoint& hat, const PviPoint& check, const PviPoint& bar) {
    Partial part;
    if (!part.set_projection(hat, Proj::hat) || !part.set_projection(check, Proj::check) ||
        !part.set_projection(bar, Proj::bar))
        return {};
    return lift_partial(part);
}

std::vector<PviPoint> ored_completions(const PviPoint& q) {
    const Field* f = field_of(q);
    const Number &a = q[Q1], &b = q[Q2], &c = q[Q3];
    Number sa = 4 - a * a, sb = 4 - b * b, sc = 4 - c * c;
    Number t31 = a * c - 2 * q[Q31], t32 = b * c - 2 * q[Q32];
    std::vector<Number> t21s;
    if (!sc.is_zero()) {
        t21s.push_back(t31 * t32 / sc);
    } else if (auto r = exact_sqrt(sa * sb)) {
        t21s.push_back(*r);
        if (!r->is_zero()) t21s.push_back(-*r);
    }
    std::vector<PviPoint> out;
    for (const auto& t21 : t21s) {
        PviPoint r = q;
        r[Q21] = (a * b - t21) * Number(f, mpq_class(1, 2));
        r[QINF] = (a * b * c - t21 * c - t31 * b - t32 * a) * Number(f, mpq_class(1, 4));
        if (okred_predicate(r)) out.push_back(r);
    }
    return out;
}

std::vector<PviPoint> oid_completions(const PviPoint& q) {
    const Field* f = field_of(q);
    std::vector<PviPoint> out;
    for (int eps : {1, -1}) {
        if (q[Q31] != eps * q[Q2] || q[Q32] != eps * q[Q1]) continue;
        PviPoint r = q;
        r[Q21] = eps * q[Q3];
        r[QINF] = Number(f, 2 * eps);
        if (out.empty() || pvi_key(out.back()) != pvi_key(r)) out.push_back(r);
    }
    return out;
}

CandidateSet match_three_e45(const PviSet& e) {
    CandidateSet c;
    c.label = "E45xE45xE45";
    auto check_pos = shared_positions(Proj::check, slots_of({Proj::hat}));
    auto bar_pos = shared_positions(Proj::bar, slots_of({Proj::hat, Proj::check}));
    std::vector<int> hat_pos_for_check;
    for (int i : check_pos) {
        int slot = proj_slots(Proj::check)[i];
        const auto& hs = proj_slots(Proj::hat);
        hat_pos_for_check.push_back(static_cast<int>(std::find(hs.begin(), hs.end(), slot) - hs.begin()));
    }
    Index check_idx = build_index(e, check_pos);
    Index bar_idx = build_index(e, bar_pos);
    for (const auto& [hk, hat] : e) {
        auto ci = check_idx.find(key_at(hat, hat_pos_for_check));
        if (ci == check_idx.end()) continue;
        for (const PviPoint* check : ci->second) {
            Partial part;
            if (!part.set_projection(hat, Proj::hat) || !part.set_projection(*check, Proj::check)) continue;
            auto bi = bar_idx.find(key_from_point(part.p, Proj::bar, bar_pos));
            if (bi == bar_idx.end()) continue;
            for (const PviPoint* bar : bi->second) {
                Partial full = part;
                if (!full.set_projection(*bar, Proj::bar)) continue;
                for (const auto& p : lift_partial(full)) c.add(p, "E45^3:pi0");
            }
        }
    }
    close_under_pi(c);
    return c;
}

CandidateSet match_e45_oid_oid(const PviSet& e) {
    CandidateSet c;
    c.label = "E45xOIDxOID";
    // o is the E-type projection here; e1, e2 carry O_ID signs
    const Placement cases[3] = {{Proj::bar, Proj::hat, Proj::check, "A2.1"},
                                {Proj::check, Proj::hat, Proj::bar, "A2.2"},
                                {Proj::hat, Proj::bar, Proj::check, "A2.3"}};
    for (const auto& pl : cases) {
        for (const auto& [k, q] : e) {
            const Field* f = field_of(q);
            for (int e1 : {1, -1})
                for (int e2 : {1, -1}) {
                    Partial part;
                    part.set_projection(q, pl.o);
                    // values fixed by one projection feed the other; two rounds settle all
                    bool ok = true;
                    for (int round = 0; round < 2 && ok; ++round)
                        ok = impose_oid(part, pl.e1, e1, f) && impose_oid(part, pl.e2, e2, f);
                    if (!ok || !part.ready()) continue;
                    for (const auto& p : lift_partial(part)) c.add(p, std::string("E45xOIDxOID/") + pl.name + ":pi0");
                }
        }
    }
    close_under_pi(c);
    return c;
}

namespace {

template <class Completions>
CandidateSet match_e45_e45_o(const PviSet& e, const std::string& label, Completions complete) {
    CandidateSet c;
    c.label = label;
    const Placement cases[3] = {{Proj::bar, Proj::hat, Proj::check, "bar"},
                                {Proj::hat, Proj::bar, Proj::check, "hat"},
                                {Proj::check, Proj::bar, Proj::hat, "check"}};
    for (const auto& pl : cases) {
        auto pos2 = shared_positions(pl.e2, slots_of({pl.e1}));
        std::vector<int> pos1;
        for (int i : pos2) {
            int slot = proj_slots(pl.e2)[i];
            const auto& s1 = proj_slots(pl.e1);
            pos1.push_back(static_cast<int>(std::find(s1.begin(), s1.end(), slot) - s1.begin()));
        }
        Index idx = build_index(e, pos2);
        for (const auto& [k, q1] : e) {
            auto it = idx.find(key_at(q1, pos1));
            if (it == idx.end()) continue;
            for (const PviPoint* q2 : it->second) {
                Partial part;
                if (!part.set_projection(q1, pl.e1) || !part.set_projection(*q2, pl.e2)) continue;
                // the O projection: q1, q2, q3, q31, q32 known; q21 and q_inf open
                PviPoint o;
                const auto& so = proj_slots(pl.o);
                for (int i = 0; i < 7; ++i) o[i] = part.known[so[i]] ? part.p[so[i]] : Number(field_of(q1), 0);
                for (const auto& filled : complete(o)) {
                    Partial full = part;
                    if (!full.set_projection(filled, pl.o) || !full.ready()) continue;
                    for (const auto& p : lift_partial(full)) c.add(p, label + "/" + pl.name + ":pi0");
                }
            }
        }
    }
    close_under_pi(c);
    return c;
}

// g(x, y, z) = z^2 + x^2 + y^2 - x y z - 4
bool quadric(const Number& x, const Number& y, const Number& z) { return (z * z + x * x + y * y - x * y * z - 4).is_zero(); }

}  // namespace

CandidateSet match_e45_e45_ored(const PviSet& e) {
    return match_e45_e45_o(e, "E45xE45xORED", [](const PviPoint& q) { return ored_completions(q); });
}

CandidateSet match_e45_e45_oid(const PviSet& e) {
    return match_e45_e45_o(e, "E45xE45xOID", [](const PviPoint& q) { return oid_completions(q); });
}

OredOredCheck check_e45_ored_ored(const PviSet& e) {
    OredOredCheck r;
    for (const auto& [k, q] : e) {
        bool g21 = quadric(q[Q2], q[Q1], q[Q21]);
        bool g31 = quadric(q[Q3], q[Q1], q[Q31]);
        bool g32 = quadric(q[Q3], q[Q2], q[Q32]);
        // any two of the three pairs share an index
        if (int(g21) + int(g31) + int(g32) >= 2) {
            ++r.passing;
            r.keys.push_back(k);
        }
    }
    return r;
}

bool word_trace_scalar(const Point& p, const std::vector<int>& word) {
    TraceEvaluator ev(p);
    Number t = ev.trace(word);
    int eps;
    if (t.is_integer_value(2))
        eps = 1;
    else if (t.is_integer_value(-2))
        eps = -1;
    else
        return false;
    // words of length <= 3 span the generated algebra
    std::vector<std::vector<int>> spans = {{}};
    for (size_t len = 1; len <= 3; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : spans)
            if (w.size() == len - 1)
                for (int g = 1; g <= 4; ++g) {
                    auto x = w;
                    x.push_back(g);
                    next.push_back(x);
                }
        spans.insert(spans.end(), next.begin(), next.end());
    }
    for (const auto& w : spans) {
        std::vector<int> full = word;
        full.insert(full.end(), w.begin(), w.end());
        if (ev.trace(full) != eps * ev.trace(w)) return false;
    }
    return true;
}

bool minf_is_scalar(const Point& p) {
    if (!p[PINF].is_integer_value(2) && !p[PINF].is_integer_value(-2)) return false;
    try {
        auto t = reconstruct(p);
        Mat2 m = t.product();
        return m.is_scalar(1) || m.is_scalar(-1);
    } catch (const ChartError&) {
        return word_trace_scalar(p, {4, 3, 2, 1});
    }
}

CandidateSet assemble_candidates(const std::vector<const CandidateSet*>& parts, AssembleStats* stats) {
    CandidateSet u;
    u.label = "union";
    for (const auto* part : parts)
        for (const auto& [k, p] : part->points) {
            auto it = part->provenance.find(k);
            u.add(p, it == part->provenance.end() ? part->label : it->second);
        }
    AssembleStats st;
    st.union_size = u.size();
    std::vector<std::string> drop;
    for (const auto& [k, p] : u.points)
        if (minf_is_scalar(p)) drop.push_back(k);
    for (const auto& k : drop) {
        u.points.erase(k);
        u.provenance.erase(k);
    }
    st.removed = drop.size();
    if (stats) *stats = st;
    return u;
}

bool trace_reducible(const Point& p) {
    TraceEvaluator ev(p);
    std::vector<std::vector<int>> elems;
    for (int a = 1; a <= 4; ++a) elems.push_back({a});
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) elems.push_back({a, b});
    auto inverse = [](std::vector<int> w) {
        std::reverse(w.begin(), w.end());
        for (int& x : w) x = -x;
        return w;
    };
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j) {
            std::vector<int> w = elems[i];
            for (const auto& part : {elems[j], inverse(elems[i]), inverse(elems[j])})
                w.insert(w.end(), part.begin(), part.end());
            if (!ev.trace(w).is_integer_value(2)) return false;
        }
    return true;
}

Relevance relevance_check(const Point& p) {
    static const char* names[5] = {"M1", "M2", "M3", "M4", "M_inf"};
    const std::vector<int> words[5] = {{1}, {2}, {3}, {4}, {4, 3, 2, 1}};
    // an irreducible tuple is determined by its traces, so the trace test is
    // exact there; a reducible tuple is not relevant either way
    for (int i = 0; i < 5; ++i)
        if (word_trace_scalar(p, words[i])) return {false, std::string(names[i]) + " = +-I"};
    MonodromyTuple t;
    try {
        t = reconstruct(p);
    } catch (const ChartError&) {
        if (trace_reducible(p)) return {false, "reducible (trace test)"};
        throw;
    }
    for (int i = 0; i < 4; ++i)
        if (t.m[i].is_scalar(1) || t.m[i].is_scalar(-1)) return {false, std::string(names[i]) + " = +-I"};
    Mat2 prod = t.product();
    if (prod.is_scalar(1) || prod.is_scalar(-1)) return {false, "M_inf = +-I"};
    if (is_reducible(t)) return {false, "reducible"};
    return {true, "irreducible, no generator is +-I"};
}

}  // namespace garnier
