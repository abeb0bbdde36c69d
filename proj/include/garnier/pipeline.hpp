#pragma once
// The staged classification: expansion, matching, assembly, extraction,
// orbit partition and quotient, checkpointed to a work directory.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "garnier/matching.hpp"
#include "garnier/pvi.hpp"
#include "garnier/symmetry.hpp"

namespace garnier {

struct StageCount {
    std::string stage;
    size_t count = 0;
    std::optional<size_t> reference;  // published count, when one exists
    bool resumed = false;             // loaded from a checkpoint
};

struct PipelineOptions {
    std::string workdir;     // empty: keep everything in memory
    size_t expand_cap = 1000000;
    size_t orbit_cap = 100000;
    bool compare_reference = true;  // warn when a stage count differs
};

struct ClassRow {
    size_t orbit_size = 0;
    Point point;
    std::string group_order;  // formatted, or the chart error
    Relevance relevance;
};

struct PipelineResult {
    std::vector<StageCount> stages;
    std::vector<std::string> warnings;
    std::vector<ClassRow> classes;  // final representatives, by size then key
};

PipelineResult run_pipeline(const SeedFile& seeds, const PipelineOptions& opt, std::ostream* log = nullptr);

// Synthetic seeds: every projection of every point of the given orbits that
// has thetas at this level.
SeedFile seeds_from_orbits(const std::vector<OrbitResult<Point>>& orbits, int level);

// Text table mirroring Table 2: size, the 11 printed coordinates, the four
// triple traces, group order and relevance.
std::string format_classes(const std::vector<ClassRow>& rows);

}  // namespace garnier
