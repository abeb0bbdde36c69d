#pragma once
// The four-holed sphere side: 7-tuples, the P3 action, projections,
// Okamoto transformations, theta parameters and the expansion algorithm.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "garnier/charvariety.hpp"
#include "garnier/orbits.hpp"

namespace garnier {

enum QCoord : int { Q1 = 0, Q2, Q3, QINF, Q21, Q31, Q32 };
using PviPoint = std::array<Number, 7>;
// (w1, w2, w3, w4, q21, q31, q32)
using OmegaPoint = std::array<Number, 7>;
using ThetaTuple = std::array<mpq_class, 4>;  // (t1, t2, t3, t_inf)

std::string pvi_key(const PviPoint& q);
std::string pvi_text(const PviPoint& q);  // human readable

enum class Proj { tilde, hat, check, bar };
const std::array<Proj, 4>& all_projections();
const char* proj_name(Proj w);
Proj proj_from_name(const std::string& name);
// Coordinates of the 15-tuple read by each projection, in 7-tuple order.
const std::array<int, 7>& proj_slots(Proj w);
PviPoint project(const Point& p, Proj w);
// The three P4 generators (indices into pure_generators()) acting on a
// projection as (b21, b31, b32) of P3.
const std::array<int, 3>& proj_subgroup(Proj w);

// sigma_i^{PVI} for i = 1, 2; negative i applies the inverse.
PviPoint pvi_sigma(int i, const PviPoint& q);
PviPoint pvi_braid(const std::vector<int>& word, const PviPoint& q);  // rightmost first
// P3 generators in the order b21, b31, b32.
const std::vector<PointMap<PviPoint>>& p3_generators();
OrbitResult<PviPoint> p3_orbit(const PviPoint& q, size_t cap = 100000);

OmegaPoint omega_from_q(const PviPoint& q);

enum class Okamoto { s1, s2, s3, sinf, sdelta, r1, r2, r3, P13, P23 };
Okamoto okamoto_from_name(const std::string& name);
OmegaPoint okamoto_generator(Okamoto g, const OmegaPoint& x);
// The same generator lifted to 7-tuples (s-generators are the identity).
PviPoint okamoto_on_q(Okamoto g, const PviPoint& q);
// Order of the group generated by r1, r2, r3, P13, P23 acting on (w1..w4).
int okamoto_omega_group_order();

enum class ThetaGen { alpha, beta, gamma, sdelta, s1 };
ThetaTuple theta_transform(ThetaGen t, const ThetaTuple& th);
struct ThetaComposite {
    std::string name;
    std::vector<ThetaGen> word;  // applied right to left
};
const std::vector<ThetaComposite>& theta_composites();  // the 24 maps
ThetaTuple apply_composite(const ThetaComposite& c, const ThetaTuple& th);

// Field of 2cos(pi k / level) values: Q(2cos(2 pi / (2 level))).
const Field* theta_field(int level);
// (q1, q2, q3, q_inf) = 2cos(pi theta_i); throws when a denominator does
// not divide the level.
std::array<Number, 4> q_from_theta(const ThetaTuple& th, int level);

// Common sign eps with q21 = eps q3, q31 = eps q2, q32 = eps q1, q_inf = 2 eps.
std::optional<int> okid_predicate(const PviPoint& q);
bool okred_predicate(const PviPoint& q);

struct Seed {
    ThetaTuple theta;
    OmegaPoint omega;  // (w1..w4, q21, q31, q32)
    int line = 0;
};
struct SeedFile {
    int level = 1;
    std::vector<Seed> seeds;
};
// Header "level N"; rows "t1 t2 t3 tinf w1 w2 w3 w4 q21 q31 q32" with
// scalars in Number::encode form; '#' starts a comment. Rows whose omegas
// disagree with their thetas are rejected with an error.
SeedFile parse_seed_file(const std::string& text);
// A seed whose thetas reproduce q1, q2, q3, q_inf at the given level, when
// such thetas exist (k / level with 0 <= k <= level).
std::optional<Seed> seed_from_pvi(const PviPoint& q, int level);
std::string format_seed_file(const SeedFile& f);

struct ExpandStats {
    size_t seeds = 0;
    size_t braid_closure = 0;   // points after steps 1 and 2
    size_t theta_images = 0;    // merged points after steps 3 and 4
    size_t rejected_theta = 0;  // composites whose image fails the omega system
    size_t off_level = 0;       // composites whose thetas need a finer level
    int omega_group_order = 0;
};
PointSet<PviPoint> expand_seeds(const SeedFile& f, ExpandStats* stats = nullptr, size_t cap = 1000000);

}  // namespace garnier
