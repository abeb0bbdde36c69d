// garnier: command-line front end for the exact P4 orbit engine.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "garnier/audit.hpp"
#include "garnier/io.hpp"
#include "garnier/matching.hpp"
#include "garnier/monodromy.hpp"
#include "garnier/pipeline.hpp"
#include "garnier/pvi.hpp"
#include "garnier/symmetry.hpp"
#include "garnier/table2.hpp"
#include "json.hpp"

using namespace garnier;

namespace {

struct Common {
    std::string field = "sqrt2_sqrt5";
    std::string minpoly;  // a full field declaration overrides the preset
    size_t cap = 12288;
    int workers = 1;
    std::string report;  // optional copy of the report

    const Field* resolve() const { return minpoly.empty() ? field_by_name(field) : field_from_declaration(minpoly); }
};

// Accumulates a report; the header pins down everything that determines it.
class Report {
public:
    Report(const std::string& cmd, const CLI::App* sub, const Field* f) {
        os_ << "# garnier " << cmd << '\n';
        std::istringstream cfg(sub->config_to_str(true, false));
        for (std::string line; std::getline(cfg, line);)
            if (!line.empty()) os_ << "# config " << line << '\n';
        if (f) os_ << "# field " << field_declaration(f) << '\n';
    }
    void input(const std::string& path) { os_ << "# input " << path << ' ' << content_hash(read_file(path)) << '\n'; }
    template <class T>
    Report& operator<<(const T& x) {
        os_ << x;
        return *this;
    }
    int finish(const Common& c, int status) {
        std::cout << os_.str();
        if (!c.report.empty()) {
            std::ofstream out(c.report);
            out << os_.str();
        }
        return status;
    }

private:
    std::ostringstream os_;
};

void add_common(CLI::App* sub, Common& c, bool with_cap = true) {
    sub->add_option("--field", c.field, "field preset: Q, sqrt2, sqrt5, sqrt2_sqrt5, cycloN")->capture_default_str();
    sub->add_option("--minpoly", c.minpoly, "field declaration minpoly:c0,..;selector:lo,hi");
    if (with_cap) sub->add_option("--cap", c.cap, "orbit size cap")->capture_default_str();
    sub->add_option("--workers", c.workers, "worker count (results do not depend on it)")->capture_default_str();
    sub->add_option("--report", c.report, "also write the report to this file");
}

struct PointSource {
    std::string point;
    std::string in;
    int row = 0;

    void add(CLI::App* sub, bool partial_ok = true) {
        sub->add_option("--point", point,
                        partial_ok ? "inline point: 15 entries, or 11 to be completed, separated by ';'"
                                   : "inline point: 15 entries separated by ';'");
        sub->add_option("--in", in, "point file");
        sub->add_option("--row", row, "Table 2 row (completed)")->check(CLI::Range(1, 54));
    }

    std::vector<Point> load(const Field* f, Report* rep) const {
        if (row) return table2_completions(table2_row(row));
        if (!in.empty()) {
            if (rep) rep->input(in);
            std::vector<Point> out;
            for (const auto& [k, p] : load_points(in)) out.push_back(p);
            return out;
        }
        if (!point.empty()) return parse_inline_point(point, f);
        throw CLI::ValidationError("one of --point, --in or --row is required");
    }
};

std::string coords(const Point& p) {
    std::string s;
    for (int i = 0; i < kCoords; ++i) s += (i ? " " : "") + std::string(kCoordNames[i]) + "=" + p[i].pretty();
    return s;
}

std::string join(const std::vector<int>& v, const char* prefix) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::string(prefix) + std::to_string(x);
    return s;
}

const char* status_text(const OrbitResult<Point>& o) { return o.finite() ? "finite" : "cap_exceeded"; }

std::vector<PointMap<Point>> b4_generators() {
    std::vector<PointMap<Point>> g;
    for (int l : {1, 2, 3}) g.push_back([l](const Point& p) { return apply_letter(l, p); });
    return g;
}

// ---------------------------------------------------------------- commands

int cmd_verify_table2(const CLI::App* sub, const Common& c, const std::vector<int>& rows, bool no_orders) {
    Report rep("verify-table2", sub, field_sqrt2_sqrt5());
    int size_ok = 0, order_ok = 0, n = 0;
    for (const auto& row : table2_rows()) {
        if (!rows.empty() && std::find(rows.begin(), rows.end(), row.index) == rows.end()) continue;
        ++n;
        auto r = check_table2_row(row, c.cap, !no_orders);
        rep << "row " << row.index << " size " << r.size << (r.status == OrbitStatus::finite ? "" : " cap_exceeded")
            << " expect " << row.orbit_size << (r.size_ok ? " ok" : " FAIL");
        if (!no_orders)
            rep << " | order " << (r.order.empty() ? r.error : r.order) << " expect " << expected_order_text(row)
                << (r.order_ok ? " ok" : " FAIL");
        rep << '\n';
        size_ok += r.size_ok;
        order_ok += r.order_ok;
    }
    rep << "summary: " << size_ok << "/" << n << " size matches";
    if (!no_orders) rep << ", " << order_ok << "/" << n << " order matches";
    rep << '\n';
    bool pass = size_ok == n && (no_orders || order_ok == n);
    return rep.finish(c, pass ? 0 : 1);
}

int cmd_orbit(const CLI::App* sub, const Common& c, const PointSource& src, const std::string& gens,
              const std::string& dump) {
    const Field* f = c.resolve();
    Report rep("orbit", sub, f);
    auto pts = src.load(f, &rep);
    if (pts.empty()) {
        rep << "no in-field completion\n";
        return rep.finish(c, 2);
    }
    int status = 0;
    PointSet<Point> all;
    for (const auto& p : pts) {
        auto bad = nonzero_generators(p);
        if (!bad.empty()) {
            rep << "rejected: not a member, nonzero " << join(bad, "f") << '\n';
            status = 2;
            continue;
        }
        auto o = gens == "b4" ? enumerate_orbit(p, b4_generators(), c.cap, key_of) : p4_orbit(p, c.cap);
        rep << point_key(p) << '\t' << o.size() << '\t' << status_text(o) << '\n';
        if (!o.finite()) status = std::max(status, 1);
        for (size_t i = 0; i < o.size(); ++i) all.insert(o.keys[i], o.points[i]);
    }
    if (!dump.empty()) save_points(dump, all);
    return rep.finish(c, status);
}

int cmd_complete(const CLI::App* sub, const Common& c, const PointSource& src, const std::string& out) {
    const Field* f = c.resolve();
    Report rep("complete", sub, f);
    auto pts = src.load(f, &rep);
    PointSet<Point> s;
    for (const auto& p : pts) {
        rep << coords(p) << (is_member(p) ? "" : "  (not a member)") << '\n';
        s.insert(point_key(p), p);
    }
    rep << pts.size() << " completion(s)\n";
    if (!out.empty()) save_points(out, s);
    return rep.finish(c, pts.empty() ? 1 : 0);
}

int cmd_project(const CLI::App* sub, const Common& c, const PointSource& src, const std::string& which) {
    const Field* f = c.resolve();
    Report rep("project", sub, f);
    int status = 0;
    for (const auto& p : src.load(f, &rep))
        for (Proj w : all_projections()) {
            if (which != "all" && which != proj_name(w)) continue;
            PviPoint q = project(p, w);
            auto o = p3_orbit(q, c.cap);
            rep << proj_name(w) << '\t' << pvi_text(q) << "\tP3 orbit " << o.size() << ' '
                << (o.finite() ? "finite" : "cap_exceeded") << '\n';
            if (!o.finite()) status = 1;
        }
    return rep.finish(c, status);
}

int cmd_monodromy(const CLI::App* sub, const Common& c, const PointSource& src, bool all_charts) {
    const Field* f = c.resolve();
    Report rep("monodromy", sub, f);
    int status = 0;
    for (const auto& p : src.load(f, &rep)) {
        try {
            auto tuples = all_charts ? reconstruct_all(p) : std::vector<MonodromyTuple>{reconstruct(p)};
            if (tuples.empty()) throw ChartError("no relevant chart");
            for (const auto& t : tuples) {
                bool ok = verify_traces(t, p);
                rep << "chart " << t.chart << " verify " << (ok ? "ok" : "FAIL") << '\n' << dump_tuple(t);
                if (!ok) status = 1;
            }
        } catch (const ChartError& e) {
            rep << "no chart: " << e.what() << '\n';
            status = 1;
        }
    }
    return rep.finish(c, status);
}

int cmd_group_order(const CLI::App* sub, const Common& c, const PointSource& src, long cap) {
    const Field* f = c.resolve();
    Report rep("group-order", sub, f);
    int status = 0;
    for (const auto& p : src.load(f, &rep)) {
        try {
            auto t = reconstruct(p);
            auto g = group_order(t, cap);
            rep << "order " << format_order(g) << " (SL2 elements " << g.sl2_count
                << (g.contains_minus_identity ? ", contains -I" : "") << (g.reason.empty() ? "" : "; " + g.reason)
                << ")\n";
            if (src.row && format_order(g) != expected_order_text(table2_row(src.row))) {
                rep << "expected " << expected_order_text(table2_row(src.row)) << " FAIL\n";
                status = 1;
            }
        } catch (const ChartError& e) {
            rep << "no chart: " << e.what() << '\n';
            status = 1;
        }
        if (src.row) break;  // one completion suffices for a row
    }
    return rep.finish(c, status);
}

int cmd_expand(const CLI::App* sub, const Common& c, const std::string& seeds, const std::string& out, size_t cap) {
    SeedFile sf = parse_seed_file(read_file(seeds));
    Report rep("expand", sub, theta_field(sf.level));
    rep.input(seeds);
    ExpandStats st;
    auto e = expand_seeds(sf, &st, cap);
    rep << "seeds " << st.seeds << "\nomega group order " << st.omega_group_order << "\nbraid closure points "
        << st.braid_closure << "\ntheta images " << st.theta_images << "\nrejected by omega " << st.rejected_theta
        << "\noff-level thetas " << st.off_level << "\nE45 points " << e.size() << '\n';
    if (!out.empty()) save_pvi_points(out, e);
    return rep.finish(c, 0);
}

int cmd_match(const CLI::App* sub, const Common& c, const std::string& in, const std::string& outdir) {
    Report rep("match", sub, nullptr);
    rep.input(in);
    auto e = load_pvi_points(in);
    std::filesystem::create_directories(outdir);
    std::vector<CandidateSet> parts = {match_three_e45(e), match_e45_oid_oid(e), match_e45_e45_ored(e),
                                       match_e45_e45_oid(e)};
    const char* files[] = {"cand_e45_cubed.txt", "cand_e45_oid_oid.txt", "cand_e45_e45_ored.txt",
                           "cand_e45_e45_oid.txt"};
    const char* names[] = {"E45^3", "E45xOIDxOID", "E45xE45xORED", "E45xE45xOID"};
    for (size_t i = 0; i < parts.size(); ++i) {
        save_candidates(outdir + "/" + files[i], parts[i]);
        rep << names[i] << ' ' << parts[i].size() << '\n';
    }
    auto oo = check_e45_ored_ored(e);
    rep << "E45xOREDxORED " << (oo.empty() ? "empty" : "undetermined") << " (" << oo.passing
        << " E45 points pass the necessary condition)\n";
    AssembleStats as;
    auto all = assemble_candidates({&parts[0], &parts[1], &parts[2], &parts[3]}, &as);
    save_candidates(outdir + "/c.txt", all);
    rep << "union " << as.union_size << "\nscalar M_inf removed " << as.removed << "\nC " << all.size() << '\n';
    return rep.finish(c, 0);
}

int cmd_extract(const CLI::App* sub, const Common& c, const std::string& in, const std::string& out) {
    Report rep("extract", sub, nullptr);
    rep.input(in);
    auto s = load_points(in);
    auto c0 = extract_finite(s, p4_generators(), key_of);
    rep << "C " << s.size() << "\nC0 " << c0.size() << '\n';
    if (!out.empty()) save_points(out, c0);
    return rep.finish(c, 0);
}

int cmd_quotient(const CLI::App* sub, const Common& c, const std::string& in, const std::string& out) {
    Report rep("quotient", sub, nullptr);
    rep.input(in);
    auto c0 = load_points(in);
    std::vector<OrbitResult<Point>> orbits;
    try {
        orbits = orbit_partition(c0, p4_generators(), key_of);
    } catch (const std::runtime_error& e) {
        rep << "contract violation: " << e.what() << '\n';
        return rep.finish(c, 3);
    }
    auto q = quotient(orbits);
    rep << "C1 orbits " << orbits.size() << "\nC2' orbits " << q.after_finite_subgroup.size() << "\nC2 classes "
        << q.representatives.size() << '\n';
    PointSet<Point> reps;
    for (size_t i : q.representatives) {
        rep << orbits[i].size() << '\t' << point_key(orbits[i].seed) << '\n';
        reps.insert(point_key(orbits[i].seed), orbits[i].seed);
    }
    if (!out.empty()) save_points(out, reps);
    return rep.finish(c, 0);
}

int cmd_classify(const CLI::App* sub, const Common& c, const std::string& seeds, const std::string& workdir,
                 bool no_reference) {
    SeedFile sf = parse_seed_file(read_file(seeds));
    Report rep("classify", sub, theta_field(sf.level));
    rep.input(seeds);
    PipelineOptions opt;
    opt.workdir = workdir;
    opt.compare_reference = !no_reference;
    auto r = run_pipeline(sf, opt, &std::cerr);
    for (const auto& s : r.stages) {
        rep << "stage " << s.stage << ' ' << s.count;
        if (s.reference) rep << " reference " << *s.reference << (*s.reference == s.count ? " ok" : " differs");
        rep << '\n';
    }
    for (const auto& w : r.warnings) rep << "warning: " << w << '\n';
    rep << format_classes(r.classes);
    return rep.finish(c, 0);
}

int cmd_audit(const CLI::App* sub, const Common& c, unsigned seed, size_t sample, bool all_rows,
              const std::string& json_out) {
    Report rep("audit", sub, nullptr);
    AuditOptions opt;
    opt.seed = seed;
    opt.sample = sample;
    opt.all_rows = all_rows;
    auto results = run_property_audit(opt);

    // negative control: the sign map with p421 left unchanged must be caught
    auto pts = table2_sample_points(sample, seed);
    SymmetryTable bad = SymmetryTable::standard();
    bad.sign[3] = [](const Point& p) {
        Point q = signed_perm_of(Sym::sign4).apply(p);
        q[P421] = -q[P421];
        return q;
    };
    PropertyResult control;
    control.name = "negative control detected";
    control.pass = false;
    for (const auto& item : commutation_audit(pts, bad)) {
        ++control.checked;
        if (!item.pass) {
            control.pass = true;
            control.witness = item.name;
        }
    }
    results.push_back(control);

    nlohmann::json j = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        rep << (r.pass ? "pass " : "FAIL ") << r.name << " checked=" << r.checked;
        if (!r.witness.empty()) rep << " witness=" << r.witness;
        rep << '\n';
        j.push_back({{"property", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"witness", r.witness}});
    }
    if (!json_out.empty()) std::ofstream(json_out) << j.dump(2) << '\n';
    return rep.finish(c, all ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite P4 orbits on the five-holed sphere character variety"};
    app.require_subcommand(1);
    Common common;

    auto* v = app.add_subcommand("verify-table2", "complete, enumerate and count every Table 2 row");
    std::vector<int> rows;
    bool no_orders = false;
    add_common(v, common);
    v->add_option("--row", rows, "restrict to these rows")->check(CLI::Range(1, 54));
    v->add_flag("--no-orders", no_orders, "skip the monodromy group orders");

    auto* orb = app.add_subcommand("orbit", "enumerate the orbit of a point");
    PointSource orb_src;
    std::string gens = "p4", dump;
    add_common(orb, common);
    orb_src.add(orb);
    orb->add_option("--gens", gens, "p4 (pure braids) or b4 (sigma_1..3)")
        ->check(CLI::IsMember({"p4", "b4"}))
        ->capture_default_str();
    orb->add_option("--dump", dump, "write every orbit point to this point file");

    auto* cmp = app.add_subcommand("complete", "solve for the triple traces");
    PointSource cmp_src;
    std::string cmp_out;
    add_common(cmp, common, false);
    cmp_src.add(cmp);
    cmp->add_option("--out", cmp_out, "point file for the completions");

    auto* prj = app.add_subcommand("project", "the four PVI projections and their P3 orbits");
    PointSource prj_src;
    std::string which = "all";
    add_common(prj, common);
    prj_src.add(prj);
    prj->add_option("--proj", which, "all, tilde, hat, check or bar")
        ->check(CLI::IsMember({"all", "tilde", "hat", "check", "bar"}))
        ->capture_default_str();

    auto* mono = app.add_subcommand("monodromy", "reconstruct monodromy matrices");
    PointSource mono_src;
    bool all_charts = false;
    add_common(mono, common, false);
    mono_src.add(mono);
    mono->add_flag("--all-charts", all_charts, "every chart that applies");

    auto* go = app.add_subcommand("group-order", "count the monodromy group");
    PointSource go_src;
    long go_cap = 121;
    add_common(go, common, false);
    go_src.add(go);
    go->add_option("--elements", go_cap, "element cap")->capture_default_str();

    auto* ex = app.add_subcommand("expand", "expand a seed file into E45");
    std::string seeds, ex_out;
    size_t ex_cap = 1000000;
    add_common(ex, common, false);
    ex->add_option("--seeds", seeds, "seed file")->required();
    ex->add_option("--out", ex_out, "7-tuple point file");
    ex->add_option("--expand-cap", ex_cap, "closure cap per seed")->capture_default_str();

    auto* ma = app.add_subcommand("match", "candidate points from three projections");
    std::string ma_in, ma_dir;
    add_common(ma, common, false);
    ma->add_option("--in", ma_in, "E45 7-tuple file")->required();
    ma->add_option("--out-dir", ma_dir, "directory for candidate files")->required();

    auto* et = app.add_subcommand("extract", "keep the points with finite orbit inside the set");
    std::string et_in, et_out;
    add_common(et, common, false);
    et->add_option("--in", et_in, "point file")->required();
    et->add_option("--out", et_out, "point file for C0");

    auto* qu = app.add_subcommand("quotient", "partition into orbits and reduce by the symmetry group");
    std::string qu_in, qu_out;
    add_common(qu, common, false);
    qu->add_option("--in", qu_in, "C0 point file")->required();
    qu->add_option("--out", qu_out, "point file of representatives");

    auto* cl = app.add_subcommand("classify", "the staged pipeline from seeds to representatives");
    std::string cl_seeds, workdir;
    bool no_reference = false;
    add_common(cl, common, false);
    cl->add_option("--seeds", cl_seeds, "seed file")->required();
    cl->add_option("--workdir", workdir, "checkpoint directory (resumable)")->required();
    cl->add_flag("--no-reference", no_reference, "do not compare stage counts with the published ones");

    auto* au = app.add_subcommand("audit", "property suites with witnesses");
    unsigned seed = 1;
    size_t sample = 100;
    bool all_rows = false;
    std::string json_out;
    add_common(au, common, false);
    au->add_option("--seed", seed, "sampling seed")->capture_default_str();
    au->add_option("--sample", sample, "member points sampled")->capture_default_str();
    au->add_flag("--all-rows", all_rows, "symmetry orbit sizes on every row");
    au->add_option("--json", json_out, "machine-readable results");

    CLI11_PARSE(app, argc, argv);

    try {
        if (common.workers < 1) throw CLI::ValidationError("--workers must be positive");
        common.resolve();
        if (*v) return cmd_verify_table2(v, common, rows, no_orders);
        if (*orb) return cmd_orbit(orb, common, orb_src, gens, dump);
        if (*cmp) return cmd_complete(cmp, common, cmp_src, cmp_out);
        if (*prj) return cmd_project(prj, common, prj_src, which);
        if (*mono) return cmd_monodromy(mono, common, mono_src, all_charts);
        if (*go) return cmd_group_order(go, common, go_src, go_cap);
        if (*ex) return cmd_expand(ex, common, seeds, ex_out, ex_cap);
        if (*ma) return cmd_match(ma, common, ma_in, ma_dir);
        if (*et) return cmd_extract(et, common, et_in, et_out);
        if (*qu) return cmd_quotient(qu, common, qu_in, qu_out);
        if (*cl) return cmd_classify(cl, common, cl_seeds, workdir, no_reference);
        if (*au) return cmd_audit(au, common, seed, sample, all_rows, json_out);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
