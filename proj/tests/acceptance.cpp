// Acceptance runner: one verdict line per criterion.
//
//   acceptance                  all criteria; exit 0 iff every one passes
//   acceptance --criterion N    only criterion N (repeatable)
//   acceptance --known-discrepancies
//       exit 0 when the only failures are the recorded Table 2 size
//       mismatches (row 42: 432 found, 480 printed; row 52: 1440 found,
//       2160 printed); verdict lines are unchanged

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "garnier/audit.hpp"

using namespace garnier;

namespace {

struct Verdict {
    bool pass = false;
    bool known = false;  // fails only through recorded discrepancies
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict criterion1() {
    Verdict v;
    int ok = 0;
    std::ostringstream bad;
    bool only_recorded = true;
    for (const auto& row : table2_rows()) {
        auto r = check_table2_row(row, 12288, false);
        if (r.size_ok) {
            ++ok;
            continue;
        }
        bad << " row " << r.row << ": " << r.size << (r.status == OrbitStatus::finite ? "" : "+ (cap)") << " vs " << row.orbit_size << ";";
        bool recorded = r.status == OrbitStatus::finite && ((r.row == 42 && r.size == 432) || (r.row == 52 && r.size == 1440));
        if (!recorded) only_recorded = false;
    }
    v.pass = ok == static_cast<int>(table2_rows().size());
    v.known = !v.pass && only_recorded;
    v.detail = std::to_string(ok) + "/" + std::to_string(table2_rows().size()) + " sizes match" + bad.str();
    return v;
}

Verdict criterion2() {
    Verdict v;
    int ok = 0;
    std::ostringstream bad;
    for (const auto& row : table2_rows()) {
        auto comps = table2_completions(row);
        std::string got = "no completion";
        if (!comps.empty()) {
            try {
                got = format_order(group_order(reconstruct(comps[0])));
            } catch (const ChartError& e) {
                got = e.what();
            }
        }
        if (got == expected_order_text(row))
            ++ok;
        else
            bad << " row " << row.index << ": " << got << " vs " << expected_order_text(row) << ";";
    }
    v.pass = ok == static_cast<int>(table2_rows().size());
    v.detail = std::to_string(ok) + "/" + std::to_string(table2_rows().size()) + " orders match" + bad.str();
    return v;
}

Verdict criterion3() {
    Verdict v;
    auto r = check_row25();
    v.pass = r.exact && r.printed;
    std::ostringstream os;
    os << "exact traces " << (r.exact ? "ok" : "FAIL") << " (" << r.chart << "), printed matrices "
       << (r.printed ? "ok" : "FAIL") << " (max deviation " << r.printed_error << ")";
    v.detail = os.str();
    return v;
}

Verdict criterion4(unsigned seed) {
    Verdict v;
    AuditOptions opt;
    opt.seed = seed;
    opt.sample = 100;
    opt.all_rows = true;
    auto results = run_property_audit(opt);
    v.pass = true;
    const char* tags[] = {"a", "a", "b", "c", "d", "e", "f"};
    std::ostringstream os;
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        v.pass = v.pass && r.pass;
        os << (i ? "; " : "") << "(" << tags[i] << ") " << r.name << " " << (r.pass ? "ok" : "FAIL") << " ["
           << r.checked << "]";
        if (!r.pass) os << " witness " << r.witness;
    }
    v.detail = os.str();
    return v;
}

Verdict criterion5() {
    Verdict v;
    int ok = 0;
    size_t charts = 0;
    std::ostringstream bad;
    for (const auto& row : table2_rows()) {
        auto r = round_trip_row(row);
        charts += r.charts;
        if (r.verified && r.agree)
            ++ok;
        else
            bad << " row " << r.row << ": " << r.detail;
    }
    v.pass = ok == static_cast<int>(table2_rows().size());
    v.detail = std::to_string(ok) + "/" + std::to_string(table2_rows().size()) + " rows, " + std::to_string(charts) +
               " verified charts" + bad.str();
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> only;
    bool known = false;
    unsigned seed = 1;
    app.add_option("--criterion", only, "run only these criteria")->check(CLI::Range(1, 6));
    app.add_flag("--known-discrepancies", known, "tolerate the recorded Table 2 size mismatches in the exit status");
    app.add_option("--seed", seed, "seed for sampled properties");
    CLI11_PARSE(app, argc, argv);
    std::set<int> want(only.begin(), only.end());
    if (want.empty()) want = {1, 2, 3, 4, 5, 6};

    bool all_pass = true, tolerated = true;
    auto report = [&](int n, const char* title, const Verdict& v, double secs) {
        std::printf("criterion %d %-28s %s  %s  (%.1fs)\n", n, title, v.pass ? "PASS" : "FAIL", v.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && v.pass;
        tolerated = tolerated && (v.pass || v.known);
    };
    using Fn = Verdict (*)();
    struct Item {
        int n;
        const char* title;
        Fn fn;
    };
    const Item items[] = {{1, "table 2 orbit sizes", criterion1},
                          {2, "table 3 group orders", criterion2},
                          {3, "row 25 matrices", criterion3},
                          {5, "reconstruction round-trip", criterion5}};
    for (int n : want) {
        auto t0 = std::chrono::steady_clock::now();
        if (n == 4) {
            Verdict v = criterion4(seed);
            report(4, "property suites", v, seconds_since(t0));
        } else if (n == 6) {
            std::printf("criterion 6 %-28s not run (external data missing)\n", "full classification");
        } else {
            for (const auto& it : items)
                if (it.n == n) {
                    Verdict v = it.fn();
                    report(n, it.title, v, seconds_since(t0));
                }
        }
    }
    if (all_pass) return 0;
    return known && tolerated ? 0 : 1;
}
