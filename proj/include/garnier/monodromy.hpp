#pragma once
// Explicit monodromy tuples realizing a point, and their group orders.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "garnier/charvariety.hpp"
#include "garnier/radical.hpp"

namespace garnier {

class ChartError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MonodromyTuple {
    TowerPtr tower;
    std::array<Mat2, 4> m;  // M1..M4
    std::string chart;      // e.g. "U0(i=4,j=2,k=1,l=3)"

    Mat2 product() const;  // M4 M3 M2 M1
};

// Every chart that applies and whose output verifies.
std::vector<MonodromyTuple> reconstruct_all(const Point& p);
// Every chart whose nondegeneracy conditions hold, with its verification
// verdict. Theorem charts that verify are always reported; the degenerate
// branches report each enumerated normal form.
struct ChartAttempt {
    std::string chart;
    bool verified;
};
std::vector<ChartAttempt> chart_attempts(const Point& p);

// First verified chart; throws ChartError("no relevant chart") otherwise.
MonodromyTuple reconstruct(const Point& p);

// The 15 coordinates of a tuple, computed from matrix products.
std::array<ExtNumber, kCoords> tuple_traces(const MonodromyTuple& t);
bool verify_traces(const MonodromyTuple& t, const Point& p);
// Tr(AB) + Tr(A^-1 B) = Tr(A) Tr(B) over all ordered pairs of generators
// and their pairwise products.
bool skein_audit(const MonodromyTuple& t);

enum class OrderStatus { finite, infinite, exceeded };

struct GroupOrder {
    OrderStatus status = OrderStatus::exceeded;
    long sl2_count = 0;          // distinct elements found in SL2
    long projective_count = 0;   // sl2_count / 2 when -I is in the group
    bool contains_minus_identity = false;
    std::string reason;
};

GroupOrder group_order(const MonodromyTuple& t, long cap = 121);
std::string format_order(const GroupOrder& g);  // "24", "infinite", "exceeded"

// Is the tuple reducible (a common eigenvector)? Decided exactly: the
// group is reducible iff Tr of every commutator [A,B] over generators and
// their pairwise products equals 2.
bool is_reducible(const MonodromyTuple& t);

// Text dump: header with field and tower declaration, then one line per
// matrix holding four encoded entries row-major.
std::string dump_tuple(const MonodromyTuple& t);

}  // namespace garnier
