#include "garnier/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <ostream>
#include <sstream>

#include "garnier/io.hpp"
#include "garnier/monodromy.hpp"

namespace garnier {

namespace fs = std::filesystem;

namespace {

class Stages {
public:
    Stages(const PipelineOptions& opt, PipelineResult& res, std::ostream* log) : opt_(opt), res_(res), log_(log) {
        if (!opt.workdir.empty()) fs::create_directories(opt.workdir);
    }

    std::string path(const std::string& name) const {
        return opt_.workdir.empty() ? std::string() : (fs::path(opt_.workdir) / name).string();
    }
    bool have(const std::string& name) const {
        std::string p = path(name);
        return !p.empty() && fs::exists(p);
    }

    void count(const std::string& stage, size_t n, std::optional<size_t> ref, bool resumed) {
        res_.stages.push_back({stage, n, ref, resumed});
        if (log_) {
            *log_ << "stage " << stage << ": " << n;
            if (ref) *log_ << " (reference " << *ref << ")";
            if (resumed) *log_ << " [checkpoint]";
            *log_ << std::endl;
        }
        if (opt_.compare_reference && ref && *ref != n) {
            std::ostringstream w;
            w << "stage " << stage << " has " << n << " points, reference " << *ref;
            res_.warnings.push_back(w.str());
        }
    }

    // Loads the checkpoint when present, else computes and saves it.
    CandidateSet candidates(const std::string& file, const std::string& stage, std::optional<size_t> ref,
                            const std::function<CandidateSet()>& make) {
        bool resumed = have(file);
        CandidateSet c = resumed ? load_candidates(path(file)) : make();
        if (!resumed && !opt_.workdir.empty()) save_candidates(path(file), c);
        count(stage, c.size(), ref, resumed);
        return c;
    }

    PointSet<Point> points(const std::string& file, const std::string& stage, std::optional<size_t> ref,
                           const std::function<PointSet<Point>()>& make) {
        bool resumed = have(file);
        PointSet<Point> s = resumed ? load_points(path(file)) : make();
        if (!resumed && !opt_.workdir.empty()) save_points(path(file), s);
        count(stage, s.size(), ref, resumed);
        return s;
    }

private:
    const PipelineOptions& opt_;
    PipelineResult& res_;
    std::ostream* log_;
};

PointSet<Point> seeds_of(const std::vector<OrbitResult<Point>>& orbits, const std::vector<size_t>& idx) {
    PointSet<Point> s;
    for (size_t i : idx) s.insert(point_key(orbits[i].seed), orbits[i].seed);
    return s;
}

}  // namespace

PipelineResult run_pipeline(const SeedFile& seeds, const PipelineOptions& opt, std::ostream* log) {
    PipelineResult res;
    Stages st(opt, res, log);

    PviSet e;
    if (st.have("e45.txt")) {
        e = load_pvi_points(st.path("e45.txt"));
        st.count("E45", e.size(), 86768, true);
    } else {
        ExpandStats es;
        e = expand_seeds(seeds, &es, opt.expand_cap);
        if (!opt.workdir.empty()) save_pvi_points(st.path("e45.txt"), e);
        st.count("E45", e.size(), 86768, false);
    }

    auto a1 = st.candidates("cand_e45_cubed.txt", "E45^3", 3355200, [&] { return match_three_e45(e); });
    auto a2 = st.candidates("cand_e45_oid_oid.txt", "E45xOIDxOID", 6385, [&] { return match_e45_oid_oid(e); });
    auto a3 = st.candidates("cand_e45_e45_ored.txt", "E45xE45xORED", 342368, [&] { return match_e45_e45_ored(e); });
    auto a4 = st.candidates("cand_e45_e45_oid.txt", "E45xE45xOID", 245760, [&] { return match_e45_e45_oid(e); });
    auto oo = check_e45_ored_ored(e);
    if (log) *log << "E45xOREDxORED necessary condition: " << oo.passing << " E45 points pass" << std::endl;
    if (!oo.empty())
        res.warnings.push_back("E45xOREDxORED not excluded: " + std::to_string(oo.passing) +
                               " E45 points pass the necessary condition");

    AssembleStats as;
    bool resumed_c = st.have("c.txt");
    CandidateSet c = resumed_c ? load_candidates(st.path("c.txt")) : assemble_candidates({&a1, &a2, &a3, &a4}, &as);
    if (resumed_c) {
        // the union size is not recoverable from C itself
        std::ifstream in(st.path("union.txt"));
        size_t n = 0;
        if (in >> n) st.count("union", n, 3461273, true);
    } else {
        if (!opt.workdir.empty()) {
            save_candidates(st.path("c.txt"), c);
            std::ofstream(st.path("union.txt")) << as.union_size << '\n';
        }
        st.count("union", as.union_size, 3461273, false);
    }
    st.count("C", c.size(), 3287140, resumed_c);

    auto c0 = st.points("c0.txt", "C0", 1270050,
                        [&] { return extract_finite(c.points, p4_generators(), key_of); });

    std::vector<OrbitResult<Point>> orbits;
    bool resumed_c1 = st.have("c1.txt");
    if (resumed_c1) {
        for (const auto& [k, p] : load_points(st.path("c1.txt"))) orbits.push_back(p4_orbit(p, opt.orbit_cap));
    } else {
        orbits = orbit_partition(c0, p4_generators(), key_of);
        if (!opt.workdir.empty()) {
            std::vector<size_t> all(orbits.size());
            for (size_t i = 0; i < all.size(); ++i) all[i] = i;
            save_points(st.path("c1.txt"), seeds_of(orbits, all));
        }
    }
    st.count("C1 orbits", orbits.size(), 17946, resumed_c1);

    auto q = quotient(orbits);
    st.count("C2' orbits", q.after_finite_subgroup.size(), 122, false);
    if (!opt.workdir.empty()) save_points(st.path("c2.txt"), seeds_of(orbits, q.representatives));
    st.count("C2 classes", q.representatives.size(), 54, false);

    for (size_t i : q.representatives) {
        ClassRow r;
        r.orbit_size = orbits[i].size();
        r.point = orbits[i].seed;
        try {
            r.group_order = format_order(group_order(reconstruct(r.point)));
        } catch (const ChartError& err) {
            r.group_order = err.what();
        }
        try {
            r.relevance = relevance_check(r.point);
        } catch (const ChartError& err) {
            r.relevance = {false, err.what()};
        }
        res.classes.push_back(std::move(r));
    }
    std::sort(res.classes.begin(), res.classes.end(), [](const ClassRow& a, const ClassRow& b) {
        return a.orbit_size != b.orbit_size ? a.orbit_size < b.orbit_size : point_key(a.point) < point_key(b.point);
    });
    return res;
}

SeedFile seeds_from_orbits(const std::vector<OrbitResult<Point>>& orbits, int level) {
    SeedFile f;
    f.level = level;
    std::set<std::string> seen;
    for (const auto& orb : orbits)
        for (const auto& p : orb.points)
            for (Proj w : all_projections()) {
                auto s = seed_from_pvi(project(p, w), level);
                if (!s) continue;
                std::string k;
                for (const auto& t : s->theta) k += t.get_str() + " ";
                for (const auto& x : s->omega) k += x.key() + " ";
                if (!seen.insert(k).second) continue;
                s->line = static_cast<int>(f.seeds.size()) + 2;
                f.seeds.push_back(*s);
            }
    return f;
}

std::string format_classes(const std::vector<ClassRow>& rows) {
    std::ostringstream os;
    os << "#  size | p1 p2 p3 p4 | p_inf | p21 p31 p32 p41 p42 p43 | p321 p432 p431 p421 | order | relevance\n";
    int idx = 0;
    for (const auto& r : rows) {
        os << ++idx << "  " << r.orbit_size << " |";
        for (int i = 0; i < kCoords; ++i) {
            os << ' ' << r.point[i].pretty();
            if (i == P4 || i == PINF || i == P43) os << " |";
        }
        os << " | " << r.group_order << " | " << (r.relevance.relevant ? "relevant" : r.relevance.reason) << '\n';
    }
    return os.str();
}

}  // namespace garnier
