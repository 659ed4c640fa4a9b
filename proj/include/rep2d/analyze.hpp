// Full-grid analysis pipeline with per-phase wall-clock timings; the CLI and
// the acceptance suite both drive this.
#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "rep2d/dbf.hpp"
#include "rep2d/grid.hpp"
#include "rep2d/quartics.hpp"
#include "rep2d/runs2d.hpp"

namespace rep2d {

struct AnalysisOptions {
    bool runs = true;
    bool quartics = true;
    bool tandems = true;
    bool listings = false;
    int threads = 1;
};

struct PhaseTimings {
    double dbf_ms = 0, runs_ms = 0, prq_ms = 0, quartics_ms = 0, tandems_ms = 0, total_ms = 0;
};

struct AnalysisReport {
    int rows = 0, cols = 0;

    long long runs2d_count = -1;           // -1: section not computed
    long long prq_occurrence_count = -1;
    long long distinct_prq_count = -1;
    long long distinct_quartic_count = -1;
    long long primitively_rooted_count = -1;
    long long thin_count = -1;
    long long thick_count = -1;
    long long distinct_tandem_count = -1;

    // populated when listings are requested (sizes match the counts)
    std::vector<Run2D> runs;
    std::vector<QuarticOcc> prq_occs;
    std::vector<DistinctQuartic> quartics;
    std::vector<Tandem> tandems;

    PhaseTimings timings;
};

inline AnalysisReport analyze(const Grid& g, const AnalysisOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };
    AnalysisReport rep;
    rep.rows = g.rows;
    rep.cols = g.cols;
    const auto t_total = clock::now();

    auto t = clock::now();
    Dbf2D dbf(g);
    rep.timings.dbf_ms = ms_since(t);

    std::vector<Run2D> runs;
    if (opt.runs || opt.quartics) {
        t = clock::now();
        EnumerateOptions eopt;
        eopt.threads = opt.threads;
        runs = enumerate_runs2d(g, dbf, eopt);
        rep.timings.runs_ms = ms_since(t);
    }
    if (opt.runs) rep.runs2d_count = static_cast<long long>(runs.size());

    if (opt.quartics) {
        t = clock::now();
        auto occs = prq_occurrences(g, runs);
        rep.timings.prq_ms = ms_since(t);
        rep.prq_occurrence_count = static_cast<long long>(occs.size());

        t = clock::now();
        auto groups = build_components(g, dbf, occs);
        rep.distinct_prq_count = static_cast<long long>(groups.size());
        auto quartics = distinct_quartics_from_groups(g, dbf, groups);
        rep.timings.quartics_ms = ms_since(t);
        rep.distinct_quartic_count = static_cast<long long>(quartics.size());
        rep.primitively_rooted_count = rep.thin_count = rep.thick_count = 0;
        for (const auto& q : quartics) {
            switch (q.cls) {
                case QuarticClass::PrimitivelyRooted: ++rep.primitively_rooted_count; break;
                case QuarticClass::Thin: ++rep.thin_count; break;
                case QuarticClass::Thick: ++rep.thick_count; break;
            }
        }
        if (opt.listings) {
            rep.prq_occs = std::move(occs);
            rep.quartics = std::move(quartics);
        }
    }

    if (opt.tandems) {
        t = clock::now();
        auto tandems = distinct_tandems(g, dbf);
        rep.timings.tandems_ms = ms_since(t);
        rep.distinct_tandem_count = static_cast<long long>(tandems.size());
        if (opt.listings) rep.tandems = std::move(tandems);
    }

    if (opt.runs && opt.listings) rep.runs = std::move(runs);
    rep.timings.total_ms = ms_since(t_total);
    return rep;
}

}  // namespace rep2d
