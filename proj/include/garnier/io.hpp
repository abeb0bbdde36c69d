#pragma once
// Point files: a field header, then one point per line, sorted by key.
//
//   field minpoly:c0,...;selector:lo,hi
//   enc;enc;...;enc
//
// The same layout holds 15-tuples, 11-entry partial points and 7-tuples.
// A candidate set adds a sidecar "<path>.prov" with "index label" lines.

#include <iosfwd>
#include <string>

#include "garnier/matching.hpp"
#include "garnier/monodromy.hpp"
#include "garnier/orbits.hpp"

namespace garnier {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All scalars are written in `field`; values from a subfield are lifted.
void write_points(std::ostream& out, const PointSet<Point>& s, const Field* field = nullptr);
PointSet<Point> read_points(std::istream& in);
void write_partials(std::ostream& out, const PointSet<PartialPoint>& s, const Field* field = nullptr);
PointSet<PartialPoint> read_partials(std::istream& in);
void write_pvi_points(std::ostream& out, const PointSet<PviPoint>& s, const Field* field = nullptr);
PointSet<PviPoint> read_pvi_points(std::istream& in);

std::string partial_key(const PartialPoint& p);

void save_points(const std::string& path, const PointSet<Point>& s);
PointSet<Point> load_points(const std::string& path);
void save_pvi_points(const std::string& path, const PointSet<PviPoint>& s);
PointSet<PviPoint> load_pvi_points(const std::string& path);

void save_candidates(const std::string& path, const CandidateSet& c);
CandidateSet load_candidates(const std::string& path);

// One inline point: 15 (or 11, completed) encodings separated by ';', in
// the given field. Table 2 symbols (phi, psi, r2, ...) are accepted too.
std::vector<Point> parse_inline_point(const std::string& text, const Field* field);

// FNV-1a over the bytes, as 16 hex digits.
std::string content_hash(const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace garnier
