#include "garnier/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace garnier {

Point apply_sigma(int i, const Point& q) {
    const Number &p1 = q[P1], &p2 = q[P2], &p3 = q[P3], &p4 = q[P4], &pi = q[PINF];
    const Number &p21 = q[P21], &p31 = q[P31], &p32 = q[P32], &p41 = q[P41], &p42 = q[P42], &p43 = q[P43];
    const Number &p321 = q[P321], &p432 = q[P432], &p431 = q[P431], &p421 = q[P421];
    switch (i) {
        case 1:
            return {p2, p1, p3, p4, pi, p21, p32, p1 * p3 - p31 - p21 * p32 + p2 * p321, p42,
                    p1 * p4 - p41 - p21 * p42 + p2 * p421, p43, p321,
                    p1 * p43 - p431 - p21 * p432 + p2 * pi, p432, p421};
        case 2:
            return {p1, p3, p2, p4, pi, p31, p1 * p2 - p21 - p31 * p32 + p3 * p321, p32, p41, p43,
                    p2 * p4 - p42 - p32 * p43 + p3 * p432, p321, p432,
                    p2 * p41 - p421 - p32 * p431 + p3 * pi, p431};
        case 3:
            return {p1, p2, p4, p3, pi, p21, p41, p42, p1 * p3 - p31 - p41 * p43 + p4 * p431,
                    p2 * p3 - p32 - p42 * p43 + p4 * p432, p43, p421, p432, p431,
                    p21 * p3 - p321 - p421 * p43 + p4 * pi};
    }
    throw std::invalid_argument("sigma index must be 1, 2 or 3");
}

Point apply_sigma_inverse(int i, const Point& q) {
    const Number &p1 = q[P1], &p2 = q[P2], &p3 = q[P3], &p4 = q[P4], &pi = q[PINF];
    const Number &p21 = q[P21], &p31 = q[P31], &p32 = q[P32], &p41 = q[P41], &p42 = q[P42], &p43 = q[P43];
    const Number &p321 = q[P321], &p432 = q[P432], &p431 = q[P431], &p421 = q[P421];
    // Matrix level: (.., Mi, Mi+1, ..) -> (.., Mi^-1 Mi+1 Mi, Mi, ..)
    switch (i) {
        case 1:
            return {p2, p1, p3, p4, pi, p21, p2 * p3 - p32 - p21 * p31 + p1 * p321, p31,
                    p2 * p4 - p42 - p21 * p41 + p1 * p421, p41, p43, p321, p431,
                    p2 * p43 - p432 - p21 * p431 + p1 * pi, p421};
        case 2:
            return {p1, p3, p2, p4, pi, p1 * p3 - p31 - p21 * p32 + p2 * p321, p21, p32, p41,
                    p3 * p4 - p43 - p32 * p42 + p2 * p432, p42, p321, p432, p421,
                    p3 * p41 - p431 - p32 * p421 + p2 * pi};
        case 3:
            return {p1, p2, p4, p3, pi, p21, p1 * p4 - p41 - p31 * p43 + p3 * p431,
                    p2 * p4 - p42 - p32 * p43 + p3 * p432, p31, p32, p43,
                    p4 * p21 - p421 - p321 * p43 + p3 * pi, p432, p431, p321};
    }
    throw std::invalid_argument("sigma index must be 1, 2 or 3");
}

Point apply_letter(int letter, const Point& p) {
    return letter > 0 ? apply_sigma(letter, p) : apply_sigma_inverse(-letter, p);
}

Point apply_word(const BraidWord& w, const Point& p) {
    Point q = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it) q = apply_letter(*it, q);
    return q;
}

BraidWord free_reduce(BraidWord w) {
    BraidWord out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

BraidWord inverse_word(const BraidWord& w) {
    BraidWord r(w.rbegin(), w.rend());
    for (auto& l : r) l = -l;
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return free_reduce(r);
}

BraidWord pure_generator(int i, int j) {
    if (!(i > j && j >= 1 && i <= 4)) throw std::invalid_argument("pure generator needs 4 >= i > j >= 1");
    // beta_ij = sigma_{i-1}^-1 ... sigma_{j+1}^-1 sigma_j^2 sigma_{j+1} ... sigma_{i-1}
    BraidWord w;
    for (int k = i - 1; k > j; --k) w.push_back(-k);
    w.push_back(j);
    w.push_back(j);
    for (int k = j + 1; k < i; ++k) w.push_back(k);
    return w;
}

const std::vector<BraidWord>& pure_generators() {
    static const std::vector<BraidWord> gens = {pure_generator(2, 1), pure_generator(3, 1), pure_generator(3, 2),
                                                pure_generator(4, 1), pure_generator(4, 2), pure_generator(4, 3)};
    return gens;
}

const std::vector<std::string>& pure_generator_names() {
    static const std::vector<std::string> names = {"b21", "b31", "b32", "b41", "b42", "b43"};
    return names;
}

BraidWord parse_word(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    BraidWord w;
    while (is >> tok) {
        bool inv = false;
        while (!tok.empty() && tok.back() == '\'') {
            inv = !inv;
            tok.pop_back();
        }
        if (tok.size() == 2 && tok[0] == 's' && tok[1] >= '1' && tok[1] <= '3') {
            w.push_back(inv ? -(tok[1] - '0') : (tok[1] - '0'));
        } else if (tok.size() == 3 && tok[0] == 'b') {
            BraidWord g = pure_generator(tok[1] - '0', tok[2] - '0');
            if (inv) g = inverse_word(g);
            w.insert(w.end(), g.begin(), g.end());
        } else {
            throw std::invalid_argument("bad braid token: " + tok);
        }
    }
    return free_reduce(w);
}

std::string format_word(const BraidWord& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s.push_back(' ');
        s += "s" + std::to_string(std::abs(w[i]));
        if (w[i] < 0) s.push_back('\'');
    }
    return s;
}

}  // namespace garnier
