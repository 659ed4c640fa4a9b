// rep2d command line: analyze grids, generate fixtures, run the oracle
// verification sweep, and benchmark scaling.
//
// Exit codes: 0 success, 1 verification discrepancy, 2 usage/parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "rep2d/analyze.hpp"
#include "rep2d/brute.hpp"
#include "rep2d/grid.hpp"
#include "rep2d/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << data;
}

const char* class_name(rep2d::QuarticClass c) {
    switch (c) {
        case rep2d::QuarticClass::PrimitivelyRooted: return "primitively-rooted";
        case rep2d::QuarticClass::Thin: return "thin";
        case rep2d::QuarticClass::Thick: return "thick";
    }
    return "?";
}

json report_to_json(const rep2d::AnalysisReport& rep, const rep2d::AnalysisOptions& opt,
                    bool with_timings) {
    json out;
    out["dims"] = {{"rows", rep.rows}, {"cols", rep.cols}};
    json counts;
    if (rep.runs2d_count >= 0) counts["runs2d"] = rep.runs2d_count;
    if (rep.prq_occurrence_count >= 0) {
        counts["prq_occurrences"] = rep.prq_occurrence_count;
        counts["distinct_prq"] = rep.distinct_prq_count;
        counts["distinct_quartics"] = rep.distinct_quartic_count;
        counts["primitively_rooted"] = rep.primitively_rooted_count;
        counts["thin"] = rep.thin_count;
        counts["thick"] = rep.thick_count;
    }
    if (rep.distinct_tandem_count >= 0) counts["distinct_tandems"] = rep.distinct_tandem_count;
    out["counts"] = counts;
    if (opt.listings) {
        json listings;
        if (rep.runs2d_count >= 0) {
            json arr = json::array();
            for (const auto& r : rep.runs)
                arr.push_back({{"i1", r.rect.i1},
                               {"i2", r.rect.i2},
                               {"j1", r.rect.j1},
                               {"j2", r.rect.j2},
                               {"hper", r.hper},
                               {"vper", r.vper}});
            listings["runs2d"] = arr;
        }
        if (rep.prq_occurrence_count >= 0) {
            json arr = json::array();
            for (const auto& o : rep.prq_occs)
                arr.push_back({{"i", o.i}, {"j", o.j}, {"root_h", o.root_h}, {"root_w", o.root_w}});
            listings["prq_occurrences"] = arr;
            json qarr = json::array();
            for (const auto& q : rep.quartics)
                qarr.push_back({{"root_h", q.root_h},
                                {"root_w", q.root_w},
                                {"exp_r", q.exp_r},
                                {"exp_c", q.exp_c},
                                {"class", class_name(q.cls)},
                                {"content", {q.content.id[0], q.content.id[1], q.content.id[2],
                                             q.content.id[3]}},
                                {"witness", {{"i", q.witness.i}, {"j", q.witness.j}}}});
            listings["quartics"] = qarr;
        }
        if (rep.distinct_tandem_count >= 0) {
            json arr = json::array();
            for (const auto& t : rep.tandems)
                arr.push_back({{"h", t.h},
                               {"w", t.w},
                               {"content", {t.content.id[0], t.content.id[1], t.content.id[2],
                                            t.content.id[3]}},
                               {"witness", {{"i", t.witness.i}, {"j", t.witness.j}}}});
            listings["tandems"] = arr;
        }
        out["listings"] = listings;
    }
    if (with_timings)
        out["timings_ms"] = {{"dbf", rep.timings.dbf_ms},
                             {"runs2d", rep.timings.runs_ms},
                             {"prq", rep.timings.prq_ms},
                             {"quartics", rep.timings.quartics_ms},
                             {"tandems", rep.timings.tandems_ms},
                             {"total", rep.timings.total_ms}};
    return out;
}

int ceil_log2(int n) {
    int k = 0;
    while ((1 << k) < n) ++k;
    return k;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"repetition structure of 2D strings: 2D-runs, quartics, tandems"};
    app.require_subcommand(1);

    // --- analyze ---
    std::string an_input, an_report = "all", an_out;
    bool an_list = false, an_timings = false;
    int an_threads = 1;
    auto* an = app.add_subcommand("analyze", "analyze a grid file and emit a JSON report");
    an->add_option("input", an_input, "grid file path, or - for stdin")->required();
    an->add_option("--report", an_report, "comma list of sections: runs2d,quartics,tandems,all");
    an->add_flag("--list", an_list, "include full listings in the report");
    an->add_flag("--timings", an_timings, "include wall-clock phase timings (non-deterministic)");
    an->add_option("--out", an_out, "output path (default stdout)");
    an->add_option("--threads", an_threads, "worker threads for the runs enumeration")
        ->check(CLI::Range(1, 256));

    // --- generate ---
    std::string gen_kind, gen_out;
    int gen_m = 0, gen_n = 0, gen_sigma = 0;
    std::uint64_t gen_seed = 0;
    bool gen_has_seed = false;
    auto* gen = app.add_subcommand("generate", "write a fixture grid in the text format");
    gen->add_option("--kind", gen_kind, "unary | fig3 | rowladder | random")->required();
    gen->add_option("--m", gen_m, "rows");
    gen->add_option("--n", gen_n, "cols");
    gen->add_option("--sigma", gen_sigma, "alphabet size (random)");
    gen->add_option("--seed", gen_seed, "seed (random)")->each([&](const std::string&) {
        gen_has_seed = true;
    });
    gen->add_option("--out,-o", gen_out, "output path (default stdout)");

    // --- verify ---
    rep2d::VerifyOptions vopt;
    auto* ver = app.add_subcommand("verify", "diff the efficient algorithms against the oracles");
    ver->add_flag("--exhaustive-binary-4x4", vopt.exhaustive_binary_4x4,
                  "sweep all 2^16 binary 4x4 grids");
    ver->add_option("--max-n", vopt.max_n, "max random grid dimension (<= 10)");
    ver->add_option("--sigma", vopt.sigma, "alphabet size for random trials");
    ver->add_option("--trials", vopt.trials, "number of random trials");
    ver->add_option("--seed", vopt.seed, "trial seed");
    ver->add_flag("--inject-fault", vopt.inject_fault)->group("");  // test-only hook

    // --- bench ---
    std::string bench_sizes, bench_kinds, bench_out;
    std::uint64_t bench_seed = 1;
    int bench_threads = 1;
    auto* ben = app.add_subcommand("bench", "emit scaling counts and timings as CSV");
    ben->add_option("--sizes", bench_sizes, "comma list of n (grids are n x n)")->required();
    ben->add_option("--kinds", bench_kinds, "comma list: unary,random,rowladder")->required();
    ben->add_option("--seed", bench_seed, "seed for random grids");
    ben->add_option("--out", bench_out, "output path (default stdout)");
    ben->add_option("--threads", bench_threads)->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (an->parsed()) {
            rep2d::AnalysisOptions opt;
            opt.runs = opt.quartics = opt.tandems = false;
            opt.listings = an_list;
            opt.threads = an_threads;
            std::stringstream ss(an_report);
            std::string sec;
            while (std::getline(ss, sec, ',')) {
                if (sec == "all")
                    opt.runs = opt.quartics = opt.tandems = true;
                else if (sec == "runs2d")
                    opt.runs = true;
                else if (sec == "quartics")
                    opt.quartics = true;
                else if (sec == "tandems")
                    opt.tandems = true;
                else {
                    std::cerr << "error: unknown report section: " << sec << "\n";
                    return 2;
                }
            }
            const rep2d::Grid g = rep2d::parse_grid(read_input(an_input));
            const auto rep = rep2d::analyze(g, opt);
            write_output(an_out, report_to_json(rep, opt, an_timings).dump(2) + "\n");
            return 0;
        }

        if (gen->parsed()) {
            rep2d::GenParams p;
            if (gen->count("--m")) p.m = gen_m;
            if (gen->count("--n")) p.n = gen_n;
            if (gen->count("--sigma")) p.sigma = gen_sigma;
            if (gen_has_seed) p.seed = gen_seed;
            const rep2d::Grid g = rep2d::generate(gen_kind, p);
            write_output(gen_out, rep2d::serialize(g));
            return 0;
        }

        if (ver->parsed()) {
            const int bad = rep2d::run_verify(vopt, std::cerr);
            return bad == 0 ? 0 : 1;
        }

        if (ben->parsed()) {
            std::vector<int> sizes;
            {
                std::stringstream ss(bench_sizes);
                std::string tok;
                while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
            }
            std::vector<std::string> kinds;
            {
                std::stringstream ss(bench_kinds);
                std::string tok;
                while (std::getline(ss, tok, ',')) kinds.push_back(tok);
            }
            std::ostringstream csv;
            csv << "kind,n,runs2d,distinct_quartics,distinct_tandems,runs2d_norm,"
                   "dbf_ms,runs_ms,prq_ms,quartics_ms,tandems_ms,total_ms\n";
            for (const auto& kind : kinds) {
                for (int n : sizes) {
                    rep2d::Grid g;
                    if (kind == "unary")
                        g = rep2d::make_unary(n, n);
                    else if (kind == "rowladder")
                        g = rep2d::make_rowladder(n, n);
                    else if (kind == "random")
                        g = rep2d::make_random(n, n, 2, bench_seed);
                    else
                        throw std::invalid_argument("bench: unknown kind: " + kind);
                    rep2d::AnalysisOptions opt;
                    opt.threads = bench_threads;
                    const auto rep = rep2d::analyze(g, opt);
                    const double denom =
                        static_cast<double>(n) * n * ceil_log2(n) * ceil_log2(n);
                    csv << kind << ',' << n << ',' << rep.runs2d_count << ','
                        << rep.distinct_quartic_count << ',' << rep.distinct_tandem_count << ','
                        << (denom > 0 ? static_cast<double>(rep.runs2d_count) / denom : 0.0) << ','
                        << rep.timings.dbf_ms << ',' << rep.timings.runs_ms << ','
                        << rep.timings.prq_ms << ',' << rep.timings.quartics_ms << ','
                        << rep.timings.tandems_ms << ',' << rep.timings.total_ms << '\n';
                }
            }
            write_output(bench_out, csv.str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
