#pragma once
// Symmetries of the variety and the quotient of orbit lists.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "garnier/orbits.hpp"

namespace garnier {

enum class Sym { P13, P23, P34, P1inf, sign1, sign2, sign3, sign4, perm_12_34, perm_1234 };

const std::vector<Sym>& all_symmetries();
std::string sym_name(Sym s);
Sym sym_from_name(const std::string& name);
// Braid words for P13, P23, P34.
const BraidWord& sym_braid_word(Sym s);

Point apply_symmetry(Sym s, const Point& p);

// A coordinate map (i -> sign * p[src]) used for signs, permutations and their products.
struct SignedPerm {
    std::array<int, kCoords> src{};
    std::array<int, kCoords> sign{};
    Point apply(const Point& p) const;
    SignedPerm then(const SignedPerm& next) const;  // next after this
    std::string key() const;
    static SignedPerm identity();
};

SignedPerm signed_perm_of(Sym s);  // signs and permutations only
// Closure of <sign1..sign4, perm_12_34, perm_1234>.
const std::vector<SignedPerm>& sign_perm_group();

struct AuditItem {
    std::string name;
    bool pass = true;
    std::string witness;  // key of a failing point
};

using PointFn = std::function<Point(const Point&)>;

struct SymmetryTable {
    std::array<PointFn, 4> sign;
    PointFn perm_12_34, perm_1234;
    static SymmetryTable standard();
};

// The intertwining relations between braid generators and signs/permutations.
std::vector<AuditItem> commutation_audit(const std::vector<Point>& pts,
                                         const SymmetryTable& table = SymmetryTable::standard());

// Orbit-level quotient. Each entry of `orbits` is a full P4 orbit.
struct QuotientResult {
    std::vector<size_t> after_finite_subgroup;  // indices into the input (C2')
    std::vector<std::vector<size_t>> buckets;   // groups of C2' indices
    std::vector<size_t> representatives;        // final classes (C2)
};

std::vector<size_t> quotient_by_finite_subgroup(const std::vector<OrbitResult<Point>>& orbits);
QuotientResult quotient(const std::vector<OrbitResult<Point>>& orbits);
// Bucket key: orbit size plus the sign-normalized sorted (p1..p4, p_inf).
std::string bucket_key(const Point& p, size_t orbit_size);

}  // namespace garnier
