// coxspec: build the double-coset level store, enumerate Salem spectral
// radii, mark primitivity, analyze envelopes/gaps/Hilbert balls, run the
// invariant suites, and export catalogs.
//
// Exit codes: 0 ok, 1 config, 2 store, 3 checkpoint, 4 missing input,
// 5 verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "coxspec/catalog.hpp"
#include "coxspec/hilbert.hpp"
#include "coxspec/store.hpp"
#include "coxspec/verify.hpp"

namespace fs = std::filesystem;
using namespace coxspec;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitStore = 2;
constexpr int kExitCheckpoint = 3;
constexpr int kExitMissing = 4;
constexpr int kExitVerify = 5;

struct missing_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string default_store_dir() {
    const char* env = std::getenv("COXSPEC_STORE");
    return env && *env ? env : "store";
}

LevelStore load_store(const std::string& dir, int need_level) {
    if (!fs::exists(fs::path(dir) / "level_0.jsonl"))
        throw missing_input_error("no store at " + dir + " (run `coxspec build`)");
    LevelStore store = LevelStore::load(dir);
    if (store.built_depth() < need_level)
        throw incomplete_store_error("store at " + dir + " is built to level " +
                                     std::to_string(store.built_depth()) +
                                     ", need " + std::to_string(need_level));
    return store;
}

Catalog load_catalog(const std::string& path) {
    if (!fs::exists(path))
        throw missing_input_error("no catalog at " + path + " (run `coxspec enumerate`)");
    return Catalog::load_jsonl(path);
}

void print_level_summary(const Catalog& cat, int n) {
    auto idx = cat.level_indices(n);
    if (idx.empty()) {
        std::cout << "level " << n << ": 0 distinct radii\n";
        return;
    }
    std::cout << "level " << n << ": " << idx.size() << " distinct radii; min "
              << cat.record(idx.front()).salem.radius.decimal() << "; max "
              << cat.record(idx.back()).salem.radius.decimal() << "\n";
}

int cmd_build(const std::string& store_dir, int max_level) {
    LevelStore store;
    if (fs::exists(fs::path(store_dir) / "level_0.jsonl"))
        store = LevelStore::load(store_dir);
    while (store.built_depth() < max_level) {
        std::cerr << "building level " << store.built_depth() + 1 << "...\n";
        store.build_next_level();
    }
    for (int n = 1; n <= max_level; ++n)
        std::cout << "level " << n << ": " << store.class_count(n) << " classes\n";
    store.save(store_dir);
    return 0;
}

int cmd_enumerate(const std::string& store_dir, const std::string& catalog_path,
                  int target_level, int threads, const std::string& checkpoint_dir,
                  bool symmetry_reduction) {
    LevelStore store = load_store(store_dir, target_level);
    Catalog cat;
    if (fs::exists(catalog_path)) cat = Catalog::load_jsonl(catalog_path);

    EnumerateOptions opts;
    opts.threads = threads;
    opts.symmetry_reduction = symmetry_reduction;
    opts.checkpoint_dir = checkpoint_dir;
    opts.progress = [](std::uint64_t done, std::uint64_t total) {
        std::cerr << "\r  " << done << "/" << total << " permutations" << std::flush;
        if (done == total) std::cerr << "\n";
    };

    if (cat.max_enumerated_level() >= target_level) {
        for (int n = 1; n <= target_level; ++n) print_level_summary(cat, n);
        return 0;
    }
    for (int n = cat.max_enumerated_level() + 1; n <= target_level; ++n) {
        std::cerr << "enumerating level " << n << "...\n";
        cat.enumerate_level(store, n, opts);
        cat.export_jsonl(catalog_path);
        print_level_summary(cat, n);
    }
    if (!cat.non_salem().empty()) {
        std::cerr << "note: " << cat.non_salem().size()
                  << " witnesses had quadratic (non-Salem) radii, excluded\n";
    }
    return 0;
}

int cmd_primitive(const std::string& catalog_path) {
    Catalog cat = load_catalog(catalog_path);
    cat.mark_primitive();
    cat.export_jsonl(catalog_path);
    for (int n = 1; n <= cat.max_enumerated_level(); ++n) {
        std::size_t prim = 0;
        for (std::size_t i : cat.level_indices(n))
            if (cat.record(i).primitive) ++prim;
        std::cout << "level " << n << ": " << prim << " new primitive\n";
    }
    return 0;
}

int cmd_analyze(const std::string& catalog_path, const std::string& report_dir,
                const std::string& basepoint_spec) {
    Catalog cat = load_catalog(catalog_path);
    if (cat.size() == 0) throw missing_input_error("catalog is empty: " + catalog_path);
    fs::create_directories(report_dir);

    EnvelopeSummary env = cat.envelopes();
    {
        std::ofstream out(fs::path(report_dir) / "envelopes.csv");
        out << "level,m_tilde,M,m_tilde_degree,M_degree\n";
        for (const auto& row : env.rows) {
            const auto& lo = cat.record(row.min_new_index).salem;
            const auto& hi = cat.record(row.max_index).salem;
            out << row.level << ',' << lo.radius.decimal() << ','
                << hi.radius.decimal() << ',' << lo.degree() << ',' << hi.degree()
                << '\n';
        }
        for (const auto& row : env.rows)
            std::cout << "level " << row.level << ": m~ "
                      << cat.record(row.min_new_index).salem.radius.decimal() << ", M "
                      << cat.record(row.max_index).salem.radius.decimal() << "\n";
        if (env.delta) std::cout << "delta = " << *env.delta << "\n";
    }
    {
        std::ofstream out(fs::path(report_dir) / "gaps.csv");
        out << "level,count,mean,std\n";
        out.precision(4);
        out.setf(std::ios::fixed);
        for (const auto& row : env.rows) {
            if (cat.level_indices(row.level).size() < 2) continue;
            GapRow g = cat.gap_stats(row.level);
            out << g.level << ',' << g.count << ',' << g.mean << ',' << g.stddev
                << '\n';
        }
    }
    ConePoint base =
        basepoint_spec.empty() ? default_basepoint() : ConePoint::parse(basepoint_spec);
    auto rows = ball_report(cat, base, cat.max_enumerated_level());
    write_ball_csv((fs::path(report_dir) / "ball.csv").string(), rows);
    for (const auto& r : rows)
        std::cout << "level " << r.level << ": t^ " << r.t_hat << ", log m~ "
                  << r.log_m_tilde << "\n";
    return 0;
}

int cmd_verify(const std::string& suite) {
    auto results = run_verify(suite);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.suite << ": " << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : kExitVerify;
}

int cmd_export(const std::string& catalog_path, const std::string& out_path,
               const std::string& format, int level, bool primitive_only) {
    Catalog cat = load_catalog(catalog_path);
    if (format == "jsonl")
        cat.export_jsonl(out_path);
    else
        cat.export_csv(out_path, level, primitive_only);
    return 0;
}

int cmd_demazure(const std::string& store_dir, const std::string& word_path) {
    if (!fs::exists(word_path)) throw missing_input_error("no word file: " + word_path);
    TripleTuple tuple;
    std::ifstream in(word_path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int a, b, c;
        if (ls >> a >> b >> c) tuple.emplace_back(a, b, c);
    }
    LevelStore store = load_store(store_dir, 0);
    const CosetRecord& rec = store.demazure_project(trans(tuple));
    std::cout << "level " << rec.level << "\n";
    for (const auto& t : rec.tuple)
        std::cout << t.m[0] << ' ' << t.m[1] << ' ' << t.m[2] << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"s0-level filtration of W(E10): double cosets, Salem spectral "
                 "radii, and Hilbert-metric reports"};
    app.require_subcommand(1);

    std::string store_dir = default_store_dir();
    std::string catalog_path;
    std::string checkpoint_dir;
    std::string basepoint;
    std::string suite;
    std::string format = "jsonl";
    std::string out_path;
    std::string word_path;
    int max_level = 3;
    int level = -1;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    std::string symmetry = "off";
    bool primitive_only = false;

    auto* build = app.add_subcommand("build", "build the coset store");
    build->add_option("--max-level", max_level, "deepest level to build")
        ->check(CLI::PositiveNumber);
    build->add_option("--store", store_dir, "store directory");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate Salem radii");
    enumerate->add_option("--level", level, "enumerate through this level")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--max-level", max_level, "alias for --level")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--store", store_dir, "store directory");
    enumerate->add_option("--out", catalog_path, "catalog JSONL path");
    enumerate->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--checkpoint", checkpoint_dir, "checkpoint directory");
    enumerate->add_option("--symmetry-reduction", symmetry, "on or off")
        ->check(CLI::IsMember({"on", "off"}));

    auto* primitive = app.add_subcommand("primitive", "mark primitive Salem records");
    primitive->add_option("--store", store_dir, "store directory");
    primitive->add_option("--out", catalog_path, "catalog JSONL path");

    auto* analyze = app.add_subcommand("analyze", "envelope, gap, and ball reports");
    analyze->add_option("--store", store_dir, "store directory");
    analyze->add_option("--out", catalog_path, "catalog JSONL path");
    std::string report_dir = ".";
    analyze->add_option("--report-dir", report_dir, "where to write CSV reports");
    analyze->add_option("--basepoint", basepoint, "c0,...,c10 (rationals allowed)");

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite,
                       "kappa|trans|canonical|demazure|salem|hilbert|submult");

    auto* exp = app.add_subcommand("export", "export the catalog");
    exp->add_option("--store", store_dir, "store directory");
    exp->add_option("--catalog", catalog_path, "catalog JSONL path");
    exp->add_option("--out", out_path, "output file")->required();
    exp->add_option("--format", format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    exp->add_option("--level", level, "restrict to one first_level");
    exp->add_flag("--primitive-only", primitive_only, "only primitive records");

    auto* demazure =
        app.add_subcommand("demazure", "project a word file onto its representative");
    demazure->add_option("--store", store_dir, "store directory");
    demazure->add_option("file", word_path, "word file, one triple `i j k` per line")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (catalog_path.empty())
        catalog_path = (fs::path(store_dir) / "catalog.jsonl").string();

    try {
        if (build->parsed()) return cmd_build(store_dir, max_level);
        if (enumerate->parsed()) {
            int target = level > 0 ? level : max_level;
            return cmd_enumerate(store_dir, catalog_path, target, threads,
                                 checkpoint_dir, symmetry == "on");
        }
        if (primitive->parsed()) return cmd_primitive(catalog_path);
        if (analyze->parsed()) return cmd_analyze(catalog_path, report_dir, basepoint);
        if (verify->parsed()) return cmd_verify(suite);
        if (exp->parsed())
            return cmd_export(catalog_path, out_path, format, level, primitive_only);
        if (demazure->parsed()) return cmd_demazure(store_dir, word_path);
    } catch (const checkpoint_corruption_error& e) {
        std::cerr << "checkpoint error: " << e.what() << "\n";
        return kExitCheckpoint;
    } catch (const missing_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissing;
    } catch (const store_corruption_error& e) {
        std::cerr << "store error: " << e.what() << "\n";
        return kExitStore;
    } catch (const incomplete_store_error& e) {
        std::cerr << "store error: " << e.what() << "\n";
        return kExitStore;
    } catch (const out_of_depth_error& e) {
        std::cerr << "store error: " << e.what() << "\n";
        return kExitStore;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
