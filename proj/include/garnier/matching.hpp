#pragma once
// Candidate points assembled from three PVI projections.

#include <map>
#include <string>
#include <vector>

#include "garnier/charvariety.hpp"
#include "garnier/orbits.hpp"
#include "garnier/pvi.hpp"

namespace garnier {

using PviSet = PointSet<PviPoint>;

struct CandidateSet {
    std::string label;
    PointSet<Point> points;
    // point key -> comma separated producing algorithms
    std::map<std::string, std::string> provenance;

    void add(const Point& p, const std::string& origin);
    size_t size() const { return points.size(); }
};

// Relabelling M1 -> M2 -> M3 -> M4 -> M1 on coordinates, and the induced
// cyclic relabelling (N1, N2, N3) -> (N3, N1, N2) of a 7-tuple.
Point pi_1234(const Point& p);
PviPoint pi_123(const PviPoint& q);

// Lift three projections (hat, check, bar) agreeing on their shared
// columns: p321 from the f1 quadratic (roots in the working field), p_inf
// from f5, then membership in the full ideal.
std::vector<Point> lift_projections(const PviPoint& hat, const PviPoint& check, const PviPoint& bar);

// The O_RED and O_ID completions of a 7-tuple whose q1, q2, q3, q31, q32 are
// known: all admissible (q21, q_inf).
std::vector<PviPoint> ored_completions(const PviPoint& q);
std::vector<PviPoint> oid_completions(const PviPoint& q);

// Each algorithm builds the tilde-free set over all placements, then adds
// the three pi_1234 images. Provenance strings name the placement and power.
CandidateSet match_three_e45(const PviSet& e);
CandidateSet match_e45_oid_oid(const PviSet& e);
CandidateSet match_e45_e45_ored(const PviSet& e);
CandidateSet match_e45_e45_oid(const PviSet& e);

// Two O_RED projections and one in E: a relevant point forces the E
// projection to satisfy the reducibility quadric for two pairs sharing an
// index. Points of E passing that test are reported; none means empty.
struct OredOredCheck {
    size_t passing = 0;
    std::vector<std::string> keys;
    bool empty() const { return passing == 0; }
};
OredOredCheck check_e45_ored_ored(const PviSet& e);

// M_inf = +-I, decided on reconstructed matrices; points without a chart
// fall back to the trace test Tr(M W) = +-Tr(W) on words of length <= 2.
bool minf_is_scalar(const Point& p);
// Tr(X W) = eps Tr(W) for all W in a spanning set; X given as a word.
bool word_trace_scalar(const Point& p, const std::vector<int>& word);

struct AssembleStats {
    size_t union_size = 0;
    size_t removed = 0;
};
CandidateSet assemble_candidates(const std::vector<const CandidateSet*>& parts, AssembleStats* stats = nullptr);

// Every commutator of generators and their pairwise products has trace 2.
bool trace_reducible(const Point& p);

struct Relevance {
    bool relevant = false;
    std::string reason;
};
Relevance relevance_check(const Point& p);

}  // namespace garnier
