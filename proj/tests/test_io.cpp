#include <cstdio>
#include <sstream>

#include "doctest.h"
#include "garnier/io.hpp"
#include "helpers.hpp"

using namespace garnier;
using namespace testing_support;

namespace {

PointSet<Point> orbit_set(int row) {
    auto c = table2_completions(table2_row(row));
    REQUIRE(!c.empty());
    auto orb = p4_orbit(c[0]);
    PointSet<Point> s;
    for (size_t i = 0; i < orb.size(); ++i) s.insert(orb.keys[i], orb.points[i]);
    return s;
}

std::string tmp_path(const char* name) { return std::string("/tmp/garnier_test_") + name; }

}  // namespace

TEST_CASE("point files round-trip") {
    for (int row : {1, 7, 25, 40}) {
        auto s = orbit_set(row);
        std::stringstream buf;
        write_points(buf, s);
        auto text = buf.str();
        auto t = read_points(buf);
        CHECK(t == s);
        for (const auto& [k, p] : s) CHECK(point_key(t.at(k)) == k);
        // saving again is byte-identical
        std::stringstream again;
        write_points(again, t);
        CHECK(again.str() == text);
    }
    PointSet<Point> empty;
    std::stringstream buf;
    write_points(buf, empty);
    CHECK(read_points(buf).empty());
}

TEST_CASE("lines are sorted by key") {
    auto s = orbit_set(3);
    std::stringstream buf;
    write_points(buf, s);
    std::string header, line;
    std::getline(buf, header);
    CHECK(header.rfind("field minpoly:", 0) == 0);
    const Field* f = field_from_declaration(header.substr(6));
    std::string prev;
    while (std::getline(buf, line)) {
        std::istringstream one(header + "\n" + line + "\n");
        auto single = read_points(one);
        REQUIRE(single.size() == 1);
        std::string k = single.begin()->first;
        CHECK(prev < k);
        prev = k;
        CHECK(single.begin()->second[0].field() == f);
    }
}

TEST_CASE("partial and 7-tuple files") {
    PointSet<PartialPoint> ps;
    PointSet<PviPoint> qs;
    for (const auto& row : table2_rows()) {
        auto pp = table2_partial(row);
        ps.insert(partial_key(pp), pp);
        auto c = table2_completions(row);
        if (!c.empty()) {
            auto q = project(c[0], Proj::hat);
            qs.insert(pvi_key(q), q);
        }
    }
    std::stringstream a, b;
    write_partials(a, ps);
    write_pvi_points(b, qs);
    CHECK(read_partials(a) == ps);
    CHECK(read_pvi_points(b) == qs);
}

TEST_CASE("malformed files are rejected") {
    std::istringstream no_header("1;2;3\n");
    CHECK_THROWS_AS(read_points(no_header), FormatError);
    std::istringstream short_line("field minpoly:0,1;selector:-1,1\n2;2;2\n");
    CHECK_THROWS_AS(read_points(short_line), FormatError);
    std::istringstream bad_scalar("field minpoly:0,1;selector:-1,1\nx;2;2;2;2;2;2;2;2;2;2;2;2;2;2\n");
    CHECK_THROWS_AS(read_points(bad_scalar), FormatError);
}

TEST_CASE("candidate sets keep provenance") {
    CandidateSet c;
    c.label = "demo";
    auto s = orbit_set(1);
    int i = 0;
    for (const auto& [k, p] : s) c.add(p, i++ % 2 ? "E45^3:pi0" : "E45xOIDxOID/A2.1:pi1");
    std::string path = tmp_path("cand.txt");
    save_candidates(path, c);
    auto d = load_candidates(path);
    CHECK(d.label == "demo");
    CHECK(d.points == c.points);
    CHECK(d.provenance == c.provenance);
    std::remove(path.c_str());
    std::remove((path + ".prov").c_str());
}

TEST_CASE("inline points") {
    auto pts = parse_inline_point("2;2;2;2;2;2;2;2;2;2;2;2;2;2;2", rationals());
    REQUIRE(pts.size() == 1);
    CHECK(is_member(pts[0]));
    // an 11-entry row is completed
    const auto& row = table2_row(25);
    std::string text;
    for (int k = 0; k < 11; ++k) text += std::string(k ? ";" : "") + row.entries[k];
    auto comp = parse_inline_point(text, rationals());
    CHECK(!comp.empty());
    for (const auto& p : comp) CHECK(is_member(p));
    CHECK_THROWS_AS(parse_inline_point("1;2;3", rationals()), FormatError);
}

TEST_CASE("content hash") {
    CHECK(content_hash("") == "cbf29ce484222325");
    CHECK(content_hash("a") != content_hash("b"));
}
