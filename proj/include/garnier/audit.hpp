#pragma once
// Table 2 verification and the property suites shared by the CLI and the
// acceptance runner.

#include <string>
#include <vector>

#include "garnier/monodromy.hpp"
#include "garnier/orbits.hpp"
#include "garnier/table2.hpp"

namespace garnier {

struct RowCheck {
    int row = 0;
    bool completed = false;
    size_t size = 0;
    OrbitStatus status = OrbitStatus::finite;
    bool size_ok = false;
    std::string order;  // formatted group order, empty when not computed
    bool order_ok = false;
    std::string chart;
    std::string error;
};

// Complete the row, enumerate its P4 orbit, optionally reconstruct and
// count the monodromy group.
RowCheck check_table2_row(const Table2Row& row, size_t cap = 12288, bool with_order = true);
std::string expected_order_text(const Table2Row& row);

struct RoundTripCheck {
    int row = 0;
    size_t charts = 0;
    bool verified = false;  // every chart reproduces all traces
    bool agree = false;     // charts agree pairwise on traces and group order
    std::string detail;
};
RoundTripCheck round_trip_row(const Table2Row& row);

// Row 25: the reconstructed tuple reproduces every coordinate exactly, and
// the printed complex matrices (evaluated numerically) have the same traces.
struct Row25Check {
    bool exact = false;
    bool printed = false;
    double printed_error = 0;
    std::string chart;
};
Row25Check check_row25();

struct PropertyResult {
    std::string name;
    bool pass = true;
    size_t checked = 0;
    std::string witness;
};

// Points drawn from the orbits of small Table 2 rows.
std::vector<Point> table2_sample_points(size_t n, unsigned seed = 1);
std::vector<OrbitResult<Point>> table2_orbits(size_t max_size = 100000);

PropertyResult audit_artin(const std::vector<Point>& pts);
PropertyResult audit_pure_relations(const std::vector<Point>& pts);
PropertyResult audit_ideal_invariance(const std::vector<OrbitResult<Point>>& orbits);
PropertyResult audit_symmetries(const std::vector<Point>& pts, const std::vector<int>& rows);
PropertyResult audit_intertwining(const std::vector<Point>& pts);
PropertyResult audit_skein(const std::vector<int>& rows, unsigned seed, int pairs_per_row = 20);
PropertyResult audit_projections(const std::vector<OrbitResult<Point>>& orbits, size_t cap = 10000);

struct AuditOptions {
    unsigned seed = 1;
    size_t sample = 100;
    bool all_rows = false;  // symmetry orbit sizes on every row, else a subset
};
std::vector<PropertyResult> run_property_audit(const AuditOptions& opt);

}  // namespace garnier
