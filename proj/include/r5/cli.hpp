#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "r5/compare.hpp"
#include "r5/env.hpp"
#include "r5/record.hpp"
#include "r5/selftest.hpp"
#include "r5/vcs.hpp"
#include "r5/walks.hpp"

namespace r5::cli {

// Exit codes. Each cause maps to exactly one code.
enum ExitCode : int {
    kOk = 0,
    kGateRefused = 1,     // dirty tree or no repository, and no override
    kMismatch = 2,        // replicate/compare found a difference
    kUsageOrIo = 3,       // bad arguments, unreadable or invalid files, git missing
    kSelfTestFailed = 4,  // golden vectors do not reproduce on this build
};

inline constexpr const char* kDirtyMessage = "Repository is dirty, please commit first";
inline constexpr const char* kNoRepoMessage = "No git repository found, cannot record a revision";

enum class ReportFormat { Text, Json };

struct RunConfig {
    WalkParams walk;
    std::filesystem::path out = "results.json";
    bool allow_dirty = false;
    std::filesystem::path workdir = ".";
};

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

inline std::string format_positions(const std::vector<std::int64_t>& positions) {
    return detail::int_list(positions);
}

/// Gate, self-test, generate, write, print. The record is the only place the
/// timestamp appears, so stdout is identical across runs of one config.
inline int cmd_run(const RunConfig& config, Streams io,
                   std::chrono::system_clock::time_point now = std::chrono::system_clock::now()) {
    try {
        config.walk.validate();
    } catch (const DomainError& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }

    VcsState vcs;
    try {
        vcs = capture_vcs(config.workdir);
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }
    if (!config.allow_dirty) {
        if (!vcs.revision && !vcs.dirty) {
            io.out << kNoRepoMessage << '\n';
            return kGateRefused;
        }
        if (vcs.dirty) {
            io.out << kDirtyMessage << '\n';
            return kGateRefused;
        }
    }

    const SelfTestReport check = self_test();
    if (!check.passed()) {
        io.err << format_self_test(check);
        return kSelfTestFailed;
    }

    const Walk walk = generate_walk(config.walk);
    const ResultRecord record = build_record(walk, config.walk, capture_env(), vcs, now);
    try {
        write_record(record, config.out);
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }
    io.out << format_positions(walk.positions) << '\n';
    return kOk;
}

inline void print_report(const ComparisonReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Json) {
        out << canonical_dump(report_to_json(report)) << '\n';
    } else {
        out << format_report_text(report);
    }
}

/// Re-runs a record's parameters on this build and compares the data.
inline int cmd_replicate(const std::filesystem::path& record_path, ReportFormat format, Streams io) {
    ResultRecord stored;
    try {
        stored = read_record(record_path);
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }
    ResultRecord rerun = stored;
    rerun.data = generate_walk(stored.parameters).positions;
    const ComparisonReport report = compare_records(stored, rerun, false);
    print_report(report, format, io.out);
    return report.match() ? kOk : kMismatch;
}

inline int cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b, bool strict,
                       ReportFormat format, Streams io) {
    ResultRecord ra;
    ResultRecord rb;
    try {
        ra = read_record(a);
        rb = read_record(b);
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }
    const ComparisonReport report = compare_records(ra, rb, strict);
    print_report(report, format, io.out);
    return report.match() ? kOk : kMismatch;
}

inline int cmd_selftest(Streams io) {
    const SelfTestReport report = self_test();
    io.out << format_self_test(report);
    return report.passed() ? kOk : kSelfTestFailed;
}

inline int cmd_env(Streams io) {
    io.out << canonical_dump(env_to_json(capture_env())) << '\n';
    return kOk;
}

inline bool allow_dirty_from_env() {
    const char* v = std::getenv("R5_ALLOW_DIRTY");
    return v != nullptr && std::string(v) == "1";
}

/// Full command line front end. argv[0] is the program name.
inline int run_cli(const std::vector<std::string>& argv, Streams io) {
    CLI::App app{"Reproducible random-walk experiments with provenance-stamped results", "r5walk"};
    app.require_subcommand(1);

    RunConfig run;
    std::string seed_text = "0";
    std::string scheme_text = "bigint";
    std::string model_text = "uniform";
    std::string out_path = "results.json";
    std::string workdir = ".";
    std::string format_text = "text";
    bool strict = false;
    std::string record_path;
    std::string path_a;
    std::string path_b;

    const std::vector<std::string> models{"choice-legacy", "choice-modern", "uniform",
                                          "uniform-vectorized"};
    auto* run_cmd = app.add_subcommand("run", "Generate a walk and write a result record");
    run_cmd->add_option("--count", run.walk.count, "Number of steps")->capture_default_str();
    run_cmd->add_option("--x0", run.walk.x0, "Initial position")->capture_default_str();
    run_cmd->add_option("--step", run.walk.step, "Step size")->capture_default_str();
    run_cmd->add_option("--seed", seed_text, "Non-negative decimal seed")->capture_default_str();
    run_cmd->add_option("--seed-scheme", scheme_text, "Seed interpretation")
        ->check(CLI::IsMember({"bigint", "legacy"}))
        ->capture_default_str();
    run_cmd->add_option("--model", model_text, "Sampling model")
        ->check(CLI::IsMember(models))
        ->capture_default_str();
    run_cmd->add_option("--out", out_path, "Result file")->capture_default_str();
    run_cmd->add_flag("--allow-dirty", run.allow_dirty,
                      "Run even if tracked files are modified (also R5_ALLOW_DIRTY=1)");
    run_cmd->add_option("--workdir", workdir, "Working tree checked for cleanliness")
        ->capture_default_str();

    auto* rep_cmd = app.add_subcommand("replicate", "Re-run a record's parameters and compare");
    rep_cmd->add_option("record", record_path, "Result file")->required();

    auto* cmp_cmd = app.add_subcommand("compare", "Compare two result files");
    cmp_cmd->add_option("a", path_a, "First result file")->required();
    cmp_cmd->add_option("b", path_b, "Second result file")->required();
    cmp_cmd->add_flag("--strict", strict, "Also compare revision, dirty flag and system");

    for (auto* sub : {rep_cmd, cmp_cmd}) {
        sub->add_option("--format", format_text, "Report format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    }

    auto* selftest_cmd = app.add_subcommand("selftest", "Check the golden vectors");
    auto* env_cmd = app.add_subcommand("env", "Print the environment fingerprint as JSON");

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        io.out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }

    const ReportFormat format = format_text == "json" ? ReportFormat::Json : ReportFormat::Text;

    if (*run_cmd) {
        try {
            run.walk.seed.scheme = parse_seed_scheme(scheme_text);
            run.walk.seed.value = SeedValue::from_decimal(seed_text);
            run.walk.model = parse_walk_model(model_text);
        } catch (const DomainError& e) {
            io.err << "error: " << e.what() << '\n';
            return kUsageOrIo;
        }
        run.out = out_path;
        run.workdir = workdir;
        run.allow_dirty = run.allow_dirty || allow_dirty_from_env();
        return cmd_run(run, io);
    }
    if (*rep_cmd) return cmd_replicate(record_path, format, io);
    if (*cmp_cmd) return cmd_compare(path_a, path_b, strict, format, io);
    if (*selftest_cmd) return cmd_selftest(io);
    if (*env_cmd) return cmd_env(io);
    return kUsageOrIo;
}

}  // namespace r5::cli
