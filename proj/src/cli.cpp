#include "wcg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wcg/differential.hpp"
#include "wcg/io.hpp"
#include "wcg/pipeline.hpp"
#include "wcg/recognition.hpp"

namespace wcg::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitIoFailure = 3;

std::uint64_t random_seed_value() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failed: " + path);
    return buffer.str();
}

std::string format_report_kv(const PipelineReport& r) {
    std::ostringstream s;
    s << "n " << r.n << "\n"
      << "m_input " << r.m_input << "\n"
      << "repair_edges " << r.repair_edges << "\n"
      << "input_was_weakly_chordal " << (r.input_was_weakly_chordal ? 1 : 0) << "\n"
      << "fill_added " << r.fill_added << "\n"
      << "fill_deleted " << r.fill_deleted << "\n"
      << "fill_retained " << r.fill_retained << "\n"
      << "rounds " << r.rounds << "\n"
      << "seed " << r.seed.value << "\n";
    return s.str();
}

std::string format_report_json(const PipelineReport& r) {
    nlohmann::json j{
        {"n", r.n},
        {"m_input", r.m_input},
        {"repair_edges", r.repair_edges},
        {"input_was_weakly_chordal", r.input_was_weakly_chordal},
        {"fill_added", r.fill_added},
        {"fill_deleted", r.fill_deleted},
        {"fill_retained", r.fill_retained},
        {"rounds", r.rounds},
        {"seed", r.seed.value},
    };
    return j.dump(2) + "\n";
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct GenerateConfig {
    int n = 0;
    std::optional<int> m;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "edgelist";
    std::string stages_dir;
    std::string stats_path;
    std::string tie_break = "highest";
};

int run_generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err) {
    Seed seed{cfg.seed ? *cfg.seed : random_seed_value()};
    if (!cfg.seed) err << "seed " << seed.value << "\n";

    PipelineOptions options;
    options.tie_break = cfg.tie_break == "random" ? TieBreak::SeededRandom : TieBreak::HighestIndex;
    auto result = generate_weakly_chordal(cfg.n, cfg.m, seed, options);

    const bool dot = cfg.format == "dot";
    std::string document = dot ? export_dot(result.graph) : write_edge_list(result.graph);
    if (cfg.out_path.empty()) {
        out << document;
    } else {
        write_file(cfg.out_path, document);
    }

    if (!cfg.stages_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.stages_dir, ec);
        if (ec) throw std::runtime_error("cannot create directory: " + cfg.stages_dir);
        const std::string ext = dot ? ".dot" : ".edgelist";
        auto stage_path = [&](const char* name) {
            return (std::filesystem::path(cfg.stages_dir) / (name + ext)).string();
        };
        if (dot) {
            write_file(stage_path("arbitrary"), export_dot(result.arbitrary));
            write_file(stage_path("chordal"), export_dot(result.chordal, result.fill_edges));
            write_file(stage_path("weakly_chordal"), export_dot(result.graph, result.retained_fill));
        } else {
            write_file(stage_path("arbitrary"), write_edge_list(result.arbitrary));
            write_file(stage_path("chordal"), write_edge_list(result.chordal));
            write_file(stage_path("weakly_chordal"), write_edge_list(result.graph));
        }
    }

    if (!cfg.stats_path.empty()) {
        write_file(cfg.stats_path, ends_with(cfg.stats_path, ".json")
                                       ? format_report_json(result.report)
                                       : format_report_kv(result.report));
    }
    return kExitOk;
}

int run_check(const std::string& path, std::ostream& out) {
    Graph g = parse_edge_list(read_file(path));
    auto verdict = is_weakly_chordal(g);
    if (verdict.weakly_chordal) {
        out << "weakly chordal\n";
        return kExitOk;
    }
    out << "not weakly chordal\n";
    out << (verdict.hole_location == HoleLocation::InGraph ? "hole in G:" : "hole in complement:");
    for (int v : *verdict.hole) out << " " << v;
    out << "\n";
    return kExitCheckFailed;
}

struct DifftestConfig {
    int n = 0;
    std::string count = "100";
    std::uint64_t seed = 1;
};

int run_difftest(const DifftestConfig& cfg, std::ostream& out) {
    std::vector<DetectorMismatch> mismatches;
    if (cfg.count == "exhaustive") {
        if (cfg.n < 2 || cfg.n > 6) {
            throw CLI::ValidationError("difftest", "--count exhaustive supports 2 <= n <= 6");
        }
        mismatches = difftest_exhaustive(cfg.n);
    } else {
        int trials = 0;
        try {
            trials = std::stoi(cfg.count);
        } catch (const std::exception&) {
            throw CLI::ValidationError("difftest", "--count must be an integer or 'exhaustive'");
        }
        if (trials < 1) throw CLI::ValidationError("difftest", "--count must be positive");
        mismatches = difftest_random(cfg.n, trials, Seed{cfg.seed});
    }
    for (const auto& mm : mismatches) {
        out << "mismatch: edge {" << mm.edge.u << "," << mm.edge.v << "} detector="
            << (mm.detector_allows ? "allow" : "reject")
            << " oracle=" << (mm.oracle_allows ? "allow" : "reject") << "\n";
        std::istringstream doc(write_edge_list(mm.graph));
        std::string line;
        while (std::getline(doc, line)) out << "  " << line << "\n";
    }
    out << "mismatches " << mismatches.size() << "\n";
    return mismatches.empty() ? kExitOk : kExitCheckFailed;
}

struct BatchConfig {
    int count = 0;
    int n = 0;
    std::optional<int> m;
    std::uint64_t seed = 1;
    int jobs = 1;
};

int run_batch(const BatchConfig& cfg, std::ostream& out) {
    std::vector<Seed> seeds;
    seeds.reserve(static_cast<std::size_t>(cfg.count));
    SplitMix64 master(Seed{cfg.seed});
    for (int i = 0; i < cfg.count; ++i) seeds.push_back(master.fork());

    std::vector<PipelineReport> reports(seeds.size());
    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            reports[i] = generate_weakly_chordal(cfg.n, cfg.m, seeds[i]).report;
        }
    };
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || seeds.size() < 2) {
        run_range(0, seeds.size());
    } else {
        std::vector<std::future<void>> workers;
        const std::size_t chunk = (seeds.size() + jobs - 1) / jobs;
        for (std::size_t begin = 0; begin < seeds.size(); begin += chunk) {
            std::size_t end = std::min(begin + chunk, seeds.size());
            workers.push_back(std::async(std::launch::async, run_range, begin, end));
        }
        for (auto& w : workers) w.get();
    }

    auto summarize = [&](const char* name, auto field) {
        long long lo = 0, hi = 0, total = 0;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            long long x = field(reports[i]);
            if (i == 0 || x < lo) lo = x;
            if (i == 0 || x > hi) hi = x;
            total += x;
        }
        out << name << " mean " << std::fixed << std::setprecision(2)
            << (reports.empty() ? 0.0 : static_cast<double>(total) / reports.size())
            << " min " << lo << " max " << hi << "\n";
    };

    int early = 0;
    for (const auto& r : reports) early += r.input_was_weakly_chordal ? 1 : 0;
    out << "runs " << reports.size() << "\n";
    out << "early_exit " << early << "\n";
    summarize("fill_added", [](const PipelineReport& r) { return r.fill_added; });
    summarize("fill_deleted", [](const PipelineReport& r) { return r.fill_deleted; });
    summarize("fill_retained", [](const PipelineReport& r) { return r.fill_retained; });
    summarize("rounds", [](const PipelineReport& r) { return r.rounds; });
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"random graph to weakly chordal graph pipeline"};
    app.require_subcommand(1);

    GenerateConfig gen;
    auto* generate = app.add_subcommand("generate", "generate a weakly chordal graph");
    generate->add_option("--n", gen.n, "vertex count (>= 2)")->required();
    generate->add_option("--m", gen.m, "edge count of the random input (sampled when absent)");
    generate->add_option("--seed", gen.seed, "64-bit seed (random and printed when absent)");
    generate->add_option("--out", gen.out_path, "output file (stdout when absent)");
    generate->add_option("--format", gen.format, "output format")
        ->check(CLI::IsMember({"edgelist", "dot"}))
        ->capture_default_str();
    generate->add_option("--emit-stages", gen.stages_dir,
                         "directory for arbitrary/chordal/weakly_chordal stage files");
    generate->add_option("--stats", gen.stats_path,
                         "write the run report (key/value lines, or JSON for *.json)");
    generate->add_option("--tie-break", gen.tie_break, "minimum-degree tie-break rule")
        ->check(CLI::IsMember({"highest", "random"}))
        ->capture_default_str();

    std::string check_path;
    auto* check = app.add_subcommand("check", "test whether an edge-list file is weakly chordal");
    check->add_option("path", check_path, "edge-list file")->required();

    DifftestConfig diff;
    auto* difftest = app.add_subcommand("difftest", "compare deletion detectors against the oracle");
    difftest->add_option("--n", diff.n, "vertex count")->required();
    difftest->add_option("--count", diff.count, "number of random trials, or 'exhaustive'")
        ->capture_default_str();
    difftest->add_option("--seed", diff.seed, "seed for random trials")->capture_default_str();

    BatchConfig batch;
    auto* batch_cmd = app.add_subcommand("batch", "run many seeds and summarize fill statistics");
    batch_cmd->add_option("--count", batch.count, "number of runs")->required();
    batch_cmd->add_option("--n", batch.n, "vertex count (>= 2)")->required();
    batch_cmd->add_option("--m", batch.m, "edge count (sampled per run when absent)");
    batch_cmd->add_option("--seed", batch.seed, "master seed")->capture_default_str();
    batch_cmd->add_option("--jobs", batch.jobs, "parallel pipeline instances")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadFlags;
    }

    try {
        if (*generate) return run_generate(gen, out, err);
        if (*check) return run_check(check_path, out);
        if (*difftest) return run_difftest(diff, out);
        if (*batch_cmd) return run_batch(batch, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoFailure;
    }
    return kExitBadFlags;
}

}  // namespace wcg::cli
