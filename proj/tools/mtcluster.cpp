#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtc/io.hpp"
#include "mtc/report.hpp"
#include "mtc/svg.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitEmptyCandidates = 3;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct RunOptions {
    std::string systems = "km,xm,em,an,ff,ds";
    std::string mrs = "mr1.1,mr1.2,mr2.1,mr2.2,mr3.1,mr3.2,mr4.1,mr4.2,mr5.1,mr5.2,mr6";
    int trials = 100;
    std::uint64_t seed = 0;
    bool normalize = true;
    double eps = 0.1;
    int min_pts = 8;
    std::string linkage = "average";
    int k = 0; // 0: per-system defaults
    int jobs = 1;
    bool keep_data = false;
    std::string output = ".";
};

int cmd_run(const RunOptions& opt) {
    mtc::CampaignConfig config;
    for (const std::string& name : split_list(opt.systems))
        config.systems.push_back(mtc::parse_system(name));
    for (const std::string& name : split_list(opt.mrs))
        config.mrs.push_back(mtc::parse_mr(name));
    if (config.systems.empty() || config.mrs.empty())
        throw mtc::ConfigError("need at least one system and one relation");

    // A relation nothing in the requested set can execute is a configuration
    // error rather than an all-N/A row.
    for (mtc::MrId mr : config.mrs) {
        bool any = false;
        for (mtc::SystemKind system : config.systems)
            if (mtc::applicable(mr, system)) any = true;
        if (!any)
            throw mtc::ConfigError(std::string(mtc::mr_name(mr)) +
                                   " not applicable to " + opt.systems);
    }

    config.n_trials = opt.trials;
    config.master_seed = opt.seed;
    config.params.normalize = opt.normalize;
    config.params.eps = opt.eps;
    config.params.min_pts = opt.min_pts;
    config.params.linkage = mtc::parse_linkage(opt.linkage);
    if (opt.k > 0) config.params.k = opt.k;
    config.jobs = opt.jobs;
    config.keep_artifacts = opt.keep_data;

    fs::path out_dir(opt.output);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    {
        std::ofstream probe(out_dir / ".write-probe");
        if (!probe) throw mtc::ConfigError("output directory " + out_dir.string() +
                                           " is not writable");
    }
    fs::remove(out_dir / ".write-probe", ec);

    mtc::CampaignResult result = mtc::run_campaign(config);
    mtc::write_trials_csv(result.trials, out_dir / "trials.csv");
    mtc::write_summary_json(config, result.summary, out_dir / "summary.json");
    if (opt.keep_data) {
        for (std::size_t i = 0; i < result.trials.size(); ++i)
            if (result.artifacts[i])
                mtc::write_trial_snapshot(result.trials[i], *result.artifacts[i], out_dir);
    }
    std::cout << "wrote " << (out_dir / "trials.csv").string() << " ("
              << result.trials.size() << " trials) and "
              << (out_dir / "summary.json").string() << "\n";
    return kExitOk;
}

int cmd_report(const std::string& summary_path) {
    mtc::CampaignSummary summary = mtc::read_summary_json(summary_path);
    std::cout << mtc::render_vr_matrix(summary) << '\n'
              << mtc::render_rp_matrix(summary);
    return kExitOk;
}

int cmd_select(const std::string& summary_path, const std::string& scheme_path,
               const std::string& output) {
    mtc::CampaignSummary summary = mtc::read_summary_json(summary_path);
    mtc::SelectionScheme scheme = mtc::read_scheme_json(scheme_path);
    mtc::SelectionResult result = mtc::select_system(summary, scheme);

    if (result.eliminated.empty()) {
        std::cout << "eliminated: none\n";
    } else {
        std::cout << "eliminated:";
        for (mtc::SystemKind s : result.eliminated)
            std::cout << ' ' << mtc::system_name(s);
        std::cout << " (violated a must-have relation)\n";
    }
    std::cout << "scores (ascending):\n";
    for (mtc::SystemKind s : result.ranking) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "  %-4s %.6g",
                      std::string(mtc::system_name(s)).c_str(), result.scores.at(s));
        std::cout << buf << '\n';
    }
    std::cout << "chosen: " << mtc::system_name(result.chosen) << '\n';

    fs::path out = output.empty() ? fs::path(summary_path).parent_path() / "selection.json"
                                  : fs::path(output);
    std::ofstream f(out);
    if (!f) throw mtc::ConfigError("cannot write " + out.string());
    f << mtc::selection_to_json(result).dump(2) << '\n';
    return kExitOk;
}

int cmd_plot(const std::string& run_dir, const std::string& system_name,
             const std::string& mr_str, int trial) {
    mtc::SystemKind system = mtc::parse_system(system_name);
    mtc::MrId mr = mtc::parse_mr(mr_str);
    mtc::TrialSnapshot snapshot = mtc::read_trial_snapshot(run_dir, system, mr, trial);

    std::string name = mtc::snapshot_dir_name(system, mr, trial);
    std::string svg = mtc::render_case_svg(snapshot, name);
    fs::path plot_dir = fs::path(run_dir) / "plots";
    fs::create_directories(plot_dir);
    fs::path out = plot_dir / ("trial_" + name + ".svg");
    std::ofstream f(out, std::ios::binary);
    if (!f) throw mtc::ConfigError("cannot write " + out.string());
    f << svg;
    std::cout << "wrote " << out.string() << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metamorphic-relation workbench for clustering systems"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Execute a trial campaign");
    run->add_option("--systems", run_opt.systems, "Comma-separated systems (km,xm,em,an,ff,ds)");
    run->add_option("--mrs", run_opt.mrs, "Comma-separated relations (mr1.1 ... mr6)");
    run->add_option("--trials", run_opt.trials, "Trials per (system, MR) pair");
    run->add_option("--seed", run_opt.seed, "Master seed");
    run->add_flag("--normalize,!--no-normalize", run_opt.normalize,
                  "Min-max normalize inside the systems (default on)");
    run->add_option("--eps", run_opt.eps, "DBSCAN eps (normalized scale)");
    run->add_option("--min-pts", run_opt.min_pts, "DBSCAN minimum neighborhood size");
    run->add_option("--linkage", run_opt.linkage, "single | complete | average");
    run->add_option("--k", run_opt.k, "Cluster count override (0 = per-system default)");
    run->add_option("--jobs", run_opt.jobs, "Parallel trial workers");
    run->add_flag("--keep-data", run_opt.keep_data,
                  "Store per-trial datasets and outcomes for plotting");
    run->add_option("-o,--output", run_opt.output, "Output directory");

    std::string report_summary;
    CLI::App* report = app.add_subcommand("report", "Render VR / mean-RP matrices");
    report->add_option("summary", report_summary, "Path to summary.json")->required();

    std::string select_summary, select_scheme, select_out;
    CLI::App* select = app.add_subcommand("select", "Rank systems under a weighting scheme");
    select->add_option("summary", select_summary, "Path to summary.json")->required();
    select->add_option("scheme", select_scheme, "Path to the selection scheme JSON")->required();
    select->add_option("-o,--output", select_out, "selection.json location");

    std::string plot_dir, plot_system, plot_mr;
    int plot_trial = 0;
    CLI::App* plot = app.add_subcommand("plot", "Emit a source/follow-up scatter SVG");
    plot->add_option("rundir", plot_dir, "Run output directory (needs --keep-data)")->required();
    plot->add_option("--system", plot_system, "System code")->required();
    plot->add_option("--mr", plot_mr, "Relation id")->required();
    plot->add_option("--trial", plot_trial, "Trial index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run->parsed()) return cmd_run(run_opt);
        if (report->parsed()) return cmd_report(report_summary);
        if (select->parsed()) return cmd_select(select_summary, select_scheme, select_out);
        if (plot->parsed()) return cmd_plot(plot_dir, plot_system, plot_mr, plot_trial);
    } catch (const mtc::EmptyCandidateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEmptyCandidates;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
