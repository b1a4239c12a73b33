#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rcag/calibration.hpp"
#include "rcag/errors.hpp"
#include "rcag/harness.hpp"
#include "rcag/io.hpp"
#include "rcag/parallel.hpp"
#include "rcag/process.hpp"
#include "rcag/randomness_tests.hpp"
#include "rcag/report.hpp"
#include "rcag/thresholds.hpp"

namespace {

constexpr int kExitNotReject = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

struct Common {
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool quiet = false;
};

std::vector<rcag::VertexPair> parse_pairing(const std::string& text) {
    std::vector<rcag::VertexPair> pairs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string token = text.substr(pos, comma - pos);
        const auto dash = token.find('-');
        if (dash == std::string::npos) {
            throw rcag::ParseError("pairing entry '" + token + "' is not of the form i-j");
        }
        try {
            const unsigned long a = std::stoul(token.substr(0, dash));
            const unsigned long b = std::stoul(token.substr(dash + 1));
            if (a == 0 || b == 0) {
                throw rcag::ParseError("pairing indices are 1-based");
            }
            pairs.emplace_back(static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1));
        } catch (const std::logic_error&) {
            throw rcag::ParseError("pairing entry '" + token + "' is not of the form i-j");
        }
        pos = comma + 1;
    }
    return pairs;
}

void emit(const std::string& json, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << json;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + out_path + "'");
    }
    out << json;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomness tests for circular time series based on random circular arc graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--seed", common.seed, "Master seed for every random stream")->capture_default_str();
    app.add_option("--workers", common.workers, "Worker threads for replicate loops")->capture_default_str();
    app.add_flag("-q,--quiet", common.quiet, "Suppress the human-readable summary on stderr");

    // test
    auto* test_cmd = app.add_subcommand("test", "Run RCAG-EP and/or RCAG-DD on a data file");
    std::string test_path;
    std::string which = "both";
    double alpha = 0.05;
    std::string unit = "radians";
    std::string rescale = "none";
    std::string thresholds_opt = "bundled";
    bool calibrate_if_missing = false;
    std::size_t calib_k = rcag::kDefaultCalibrationReplicates;
    std::string pairing_text;
    std::string out_path;
    test_cmd->add_option("path", test_path, "Data file, one angle per line")->required();
    test_cmd->add_option("--test", which, "ep, dd or both")
        ->check(CLI::IsMember({"ep", "dd", "both"}))
        ->capture_default_str();
    test_cmd->add_option("--alpha", alpha, "Significance level")->capture_default_str();
    test_cmd->add_option("--unit", unit, "radians or degrees")->capture_default_str();
    test_cmd->add_option("--rescale", rescale, "none, latitude or longitude")->capture_default_str();
    test_cmd->add_option("--thresholds", thresholds_opt, "bundled, reference, or a threshold file")
        ->capture_default_str();
    test_cmd->add_flag("--calibrate-if-missing", calibrate_if_missing,
                       "Calibrate a missing DD threshold instead of failing");
    test_cmd->add_option("--calibration-k", calib_k, "Replicates for on-the-fly calibration")->capture_default_str();
    test_cmd->add_option("--pairing", pairing_text, "Explicit EP matching, e.g. 8-7,4-3 (1-based)");
    test_cmd->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    // power
    auto* power_cmd = app.add_subcommand("power", "Estimate rejection rates on simulated series");
    rcag::PowerConfig power;
    std::string power_thresholds = "bundled";
    std::string power_out;
    power_cmd->add_option("--process", power.process, "Process spec, e.g. lar1:rho=0.9")->required();
    power_cmd->add_option("--m", power.m, "Series length")->capture_default_str();
    power_cmd->add_option("--reps", power.replicates, "Replicates")->capture_default_str();
    power_cmd->add_option("--alpha", power.alpha, "Significance level")->capture_default_str();
    power_cmd->add_option("--test", power.test, "ep or dd")->check(CLI::IsMember({"ep", "dd"}))->capture_default_str();
    power_cmd->add_option("--thresholds", power_thresholds, "bundled, reference, or a threshold file")
        ->capture_default_str();
    power_cmd->add_option("--out", power_out, "Write the JSON report here instead of stdout");

    // calibrate
    auto* calib_cmd = app.add_subcommand("calibrate", "Calibrate RCAG-DD thresholds by simulation");
    std::vector<std::size_t> calib_m;
    std::vector<double> calib_alpha{0.10, 0.05, 0.01};
    std::size_t k = rcag::kDefaultCalibrationReplicates;
    std::string calib_out;
    calib_cmd->add_option("--m", calib_m, "Even series lengths")->required()->delimiter(',');
    calib_cmd->add_option("--alpha", calib_alpha, "Levels")->delimiter(',')->capture_default_str();
    calib_cmd->add_option("--k", k, "Null replicates per length")->capture_default_str();
    calib_cmd->add_option("--out", calib_out, "Threshold file; existing entries are kept")->required();

    // validate-theory
    auto* theory_cmd = app.add_subcommand("validate-theory", "Check the theoretical properties numerically");
    std::size_t draws = rcag::kDefaultTheoryDraws;
    std::string theory_out;
    theory_cmd->add_option("--draws", draws, "Monte-Carlo draws per property")->capture_default_str();
    theory_cmd->add_option("--out", theory_out, "Write the JSON report here instead of stdout");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Simulate a circular series");
    std::string gen_process;
    std::size_t gen_m = 1000;
    std::string gen_out;
    std::string gen_unit = "radians";
    gen_cmd->add_option("--process", gen_process, "Process spec, e.g. car:p=2,kappa=3,alpha=0.5,0.5")->required();
    gen_cmd->add_option("--m", gen_m, "Series length")->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "Output file (stdout when omitted)");
    gen_cmd->add_option("--unit", gen_unit, "radians or degrees")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    const rcag::RngSeed seed{common.seed, 0};
    try {
        if (*test_cmd) {
            const auto series =
                rcag::parse_angles(std::filesystem::path(test_path), rcag::parse_angle_unit(unit),
                                   rcag::parse_rescale(rescale));
            std::vector<rcag::TestOutcome> outcomes;
            if (which == "ep" || which == "both") {
                rcag::EpOptions opts;
                if (!pairing_text.empty()) {
                    opts.pairing = parse_pairing(pairing_text);
                }
                outcomes.push_back(rcag::ep_test(series, alpha, seed, opts));
            }
            if (which == "dd" || which == "both") {
                rcag::ThresholdTable table = rcag::resolve_threshold_table(thresholds_opt);
                const auto [len, level] = rcag::dd_threshold_key(series.size(), alpha);
                if (!table.contains(len, level)) {
                    if (!calibrate_if_missing) {
                        throw rcag::MissingThreshold(len, level);
                    }
                    const double levels[] = {level};
                    for (auto& e : rcag::calibrate_threshold(len, levels, calib_k, seed.child("calibrate"),
                                                             common.workers)) {
                        table.upsert(e);
                    }
                }
                outcomes.push_back(rcag::dd_test(series, alpha, table));
            }
            bool any = false;
            for (const auto& o : outcomes) {
                any = any || rcag::rejects(o.decision);
                if (!common.quiet) {
                    std::cerr << rcag::to_text(o);
                }
            }
            emit(outcomes.size() == 1 ? rcag::to_json(outcomes.front()) : rcag::to_json(outcomes), out_path);
            return any ? kExitReject : kExitNotReject;
        }
        if (*power_cmd) {
            power.seed = seed;
            power.workers = common.workers;
            const auto table =
                power.test == "dd" ? rcag::resolve_threshold_table(power_thresholds) : rcag::ThresholdTable{};
            const auto report = rcag::run_power(power, table);
            if (!common.quiet) {
                std::cerr << rcag::to_text(report);
                std::cerr << "wall_time: " << report.wall_time << " s\n";
            }
            emit(rcag::to_json(report), power_out);
            return kExitNotReject;
        }
        if (*calib_cmd) {
            rcag::ThresholdTable table;
            if (std::filesystem::exists(calib_out)) {
                table = rcag::threshold_store_load(calib_out);
            }
            for (std::size_t m : calib_m) {
                for (auto& e : rcag::calibrate_threshold(m, calib_alpha, k, seed, common.workers)) {
                    if (!common.quiet) {
                        std::cerr << "m = " << e.m << ", alpha = " << e.alpha << ": C = " << e.c << "\n";
                    }
                    table.upsert(std::move(e));
                }
            }
            rcag::threshold_store_save(calib_out, table);
            return kExitNotReject;
        }
        if (*theory_cmd) {
            const auto v = rcag::validate_theory(seed, draws, common.workers);
            if (!common.quiet) {
                std::cerr << rcag::to_text(v);
            }
            emit(rcag::to_json(v), theory_out);
            return v.all_passed() ? kExitNotReject : kExitReject;
        }
        if (*gen_cmd) {
            const auto spec = rcag::parse_process_spec(gen_process);
            const auto series = rcag::generate(spec, gen_m, seed);
            const auto u = rcag::parse_angle_unit(gen_unit);
            if (gen_out.empty()) {
                rcag::write_angles(std::cout, series, u);
            } else {
                rcag::write_angles(std::filesystem::path(gen_out), series, u);
            }
            return kExitNotReject;
        }
    } catch (const rcag::MissingThreshold& e) {
        std::cerr << "error: " << e.what() << "\n  then pass --thresholds <file>, or add --calibrate-if-missing\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
