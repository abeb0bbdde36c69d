#include "garnier/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "garnier/pvi.hpp"
#include "garnier/table2.hpp"

namespace garnier {

namespace {

constexpr const char* kHeader = "field ";

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

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

template <size_t N>
const Field* common_field(const PointSet<std::array<Number, N>>& s, const Field* field) {
    if (field) return field;
    const Field* f = rationals();
    for (const auto& [k, p] : s)
        for (const auto& x : p)
            if (x.field()->degree > f->degree) f = x.field();
    return f;
}

template <size_t N>
void write_arrays(std::ostream& out, const PointSet<std::array<Number, N>>& s, const Field* field) {
    const Field* f = common_field(s, field);
    out << kHeader << field_declaration(f) << '\n';
    for (const auto& [k, p] : s) {
        for (size_t i = 0; i < N; ++i) {
            if (i) out << ';';
            out << p[i].lift_to(f).encode();
        }
        out << '\n';
    }
}

template <size_t N, class KeyFn>
PointSet<std::array<Number, N>> read_arrays(std::istream& in, KeyFn key) {
    std::string line;
    if (!std::getline(in, line) || line.rfind(kHeader, 0) != 0) throw FormatError("missing field header");
    const Field* f = nullptr;
    try {
        f = field_from_declaration(trim(line.substr(6)));
    } catch (const ArithmeticError& e) {
        throw FormatError(e.what());
    }
    PointSet<std::array<Number, N>> s;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        auto parts = split(line, ';');
        if (parts.size() != N)
            throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(N) + " fields, got " +
                              std::to_string(parts.size()));
        std::array<Number, N> p;
        try {
            for (size_t i = 0; i < N; ++i) p[i] = Number::decode(f, parts[i]);
        } catch (const ArithmeticError& e) {
            throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
        }
        s.insert(key(p), p);
    }
    return s;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw FormatError("cannot write " + path);
    return f;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot read " + path);
    return f;
}

bool is_symbolic(const std::string& t) {
    for (char c : t)
        if (std::isalpha(static_cast<unsigned char>(c))) return true;
    return false;
}

}  // namespace

std::string partial_key(const PartialPoint& p) {
    std::string k;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) k.push_back(';');
        k += p[i].key();
    }
    return k;
}

void write_points(std::ostream& out, const PointSet<Point>& s, const Field* field) { write_arrays(out, s, field); }
PointSet<Point> read_points(std::istream& in) { return read_arrays<kCoords>(in, point_key); }
void write_partials(std::ostream& out, const PointSet<PartialPoint>& s, const Field* field) {
    write_arrays(out, s, field);
}
PointSet<PartialPoint> read_partials(std::istream& in) { return read_arrays<11>(in, partial_key); }
void write_pvi_points(std::ostream& out, const PointSet<PviPoint>& s, const Field* field) {
    write_arrays(out, s, field);
}
PointSet<PviPoint> read_pvi_points(std::istream& in) { return read_arrays<7>(in, pvi_key); }

void save_points(const std::string& path, const PointSet<Point>& s) {
    auto f = open_out(path);
    write_points(f, s);
}
PointSet<Point> load_points(const std::string& path) {
    auto f = open_in(path);
    return read_points(f);
}
void save_pvi_points(const std::string& path, const PointSet<PviPoint>& s) {
    auto f = open_out(path);
    write_pvi_points(f, s);
}
PointSet<PviPoint> load_pvi_points(const std::string& path) {
    auto f = open_in(path);
    return read_pvi_points(f);
}

void save_candidates(const std::string& path, const CandidateSet& c) {
    save_points(path, c.points);
    auto prov = open_out(path + ".prov");
    prov << "label " << c.label << '\n';
    size_t i = 0;
    for (const auto& [k, p] : c.points) {
        auto it = c.provenance.find(k);
        prov << i++ << ' ' << (it == c.provenance.end() ? "" : it->second) << '\n';
    }
}

CandidateSet load_candidates(const std::string& path) {
    CandidateSet c;
    c.points = load_points(path);
    std::vector<std::string> keys;
    for (const auto& [k, p] : c.points) keys.push_back(k);
    auto prov = open_in(path + ".prov");
    std::string line;
    if (std::getline(prov, line) && line.rfind("label", 0) == 0) c.label = trim(line.substr(5));
    while (std::getline(prov, line)) {
        if (trim(line).empty()) continue;
        std::istringstream ls(line);
        size_t idx;
        std::string origin;
        if (!(ls >> idx) || idx >= keys.size()) throw FormatError("bad provenance line: " + line);
        std::getline(ls, origin);
        origin = trim(origin);
        if (!origin.empty()) c.provenance[keys[idx]] = origin;
    }
    return c;
}

std::vector<Point> parse_inline_point(const std::string& text, const Field* field) {
    auto parts = split(text, ';');
    if (parts.size() != kCoords && parts.size() != 11)
        throw FormatError("a point needs 15 or 11 entries, got " + std::to_string(parts.size()));
    bool symbolic = false;
    for (auto& t : parts) {
        t = trim(t);
        symbolic = symbolic || is_symbolic(t);
    }
    const Field* f = symbolic ? field_sqrt2_sqrt5() : field;
    auto scalar = [&](const std::string& t) {
        if (is_symbolic(t)) return table2_symbol(t);
        // a bare rational is accepted in any field
        if (t.find(',') == std::string::npos && f->degree > 1) return Number(f, mpq_class(t));
        return Number::decode(f, t);
    };
    try {
        if (parts.size() == 11) {
            PartialPoint pp;
            for (int i = 0; i < 11; ++i) pp[i] = scalar(parts[i]);
            return complete_point(pp);
        }
        Point p;
        for (int i = 0; i < kCoords; ++i) p[i] = scalar(parts[i]);
        return {p};
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bad scalar: ") + e.what());
    } catch (const ArithmeticError& e) {
        throw FormatError(e.what());
    }
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string read_file(const std::string& path) {
    auto f = open_in(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace garnier
