#include "mtc/io.hpp"

#include <cstdio>
#include <fstream>

namespace mtc {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::ordered_json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

} // namespace

void write_trials_csv(const std::vector<TrialRecord>& trials,
                      const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
    out << "system,mr,trial,seed,n_samples,rp,d_old,d_new,source_iters,"
           "followup_iters,sfr,pattern,violated\n";
    for (const TrialRecord& t : trials) {
        out << system_name(t.system) << ',' << mr_name(t.mr) << ',' << t.trial << ','
            << t.seed << ',' << t.n_samples << ',' << fmt17(t.rp.rp) << ','
            << t.rp.d_old << ',' << t.rp.d_new << ',' << t.source_iterations << ','
            << t.followup_iterations << ',';
        if (t.sfr) out << fmt17(*t.sfr);
        out << ',' << pattern_name(t.pattern) << ',' << (t.violated ? 1 : 0) << '\n';
    }
}

nlohmann::ordered_json summary_to_json(const CampaignConfig& config,
                                       const CampaignSummary& summary) {
    nlohmann::ordered_json j;
    j["n_trials"] = config.n_trials;
    j["master_seed"] = config.master_seed;
    nlohmann::ordered_json systems = nlohmann::ordered_json::array();
    for (SystemKind s : config.systems) systems.push_back(system_name(s));
    j["systems"] = std::move(systems);
    nlohmann::ordered_json mrs = nlohmann::ordered_json::array();
    for (MrId mr : config.mrs) mrs.push_back(mr_name(mr));
    j["mrs"] = std::move(mrs);
    j["normalize"] = config.params.normalize;

    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    for (const auto& [system, row] : summary.cells) {
        nlohmann::ordered_json srow = nlohmann::ordered_json::object();
        for (const auto& [mr, cell] : row) {
            nlohmann::ordered_json jc;
            jc["applicable"] = cell.applicable;
            if (cell.applicable) {
                jc["trials"] = cell.trials;
                jc["skipped"] = cell.skipped;
                jc["violations"] = cell.violations;
                jc["vr"] = cell.vr;
                if (cell.mean_rp) jc["mean_rp"] = *cell.mean_rp;
                else jc["mean_rp"] = nullptr;
                nlohmann::ordered_json hist = nlohmann::ordered_json::object();
                for (const auto& [kind, count] : cell.pattern_histogram)
                    hist[std::string(pattern_name(kind))] = count;
                jc["patterns"] = std::move(hist);
            }
            srow[std::string(mr_name(mr))] = std::move(jc);
        }
        results[std::string(system_name(system))] = std::move(srow);
    }
    j["results"] = std::move(results);
    return j;
}

void write_summary_json(const CampaignConfig& config, const CampaignSummary& summary,
                        const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
    out << summary_to_json(config, summary).dump(2) << '\n';
}

CampaignSummary read_summary_json(const std::filesystem::path& path) {
    nlohmann::ordered_json j = load_json(path);
    CampaignSummary summary;
    if (!j.contains("results") || !j["results"].is_object())
        throw ConfigError("summary " + path.string() + " has no results object");
    for (const auto& [sys_name, row] : j["results"].items()) {
        SystemKind system = parse_system(sys_name);
        for (const auto& [mr_str, jc] : row.items()) {
            MrId mr = parse_mr(mr_str);
            CellSummary cell;
            cell.applicable = jc.at("applicable").get<bool>();
            if (cell.applicable) {
                cell.trials = jc.at("trials").get<int>();
                if (jc.contains("skipped")) cell.skipped = jc.at("skipped").get<int>();
                cell.violations = jc.at("violations").get<int>();
                cell.vr = jc.at("vr").get<double>();
                if (!jc.at("mean_rp").is_null())
                    cell.mean_rp = jc.at("mean_rp").get<double>();
                for (const auto& [kind_str, count] : jc.at("patterns").items())
                    cell.pattern_histogram[parse_pattern(kind_str)] = count.get<int>();
            }
            summary.cells[system][mr] = std::move(cell);
        }
    }
    return summary;
}

SelectionScheme read_scheme_json(const std::filesystem::path& path) {
    nlohmann::ordered_json j = load_json(path);
    SelectionScheme scheme;
    if (j.contains("must_have"))
        for (const auto& mr : j["must_have"]) scheme.must_have.insert(parse_mr(mr.get<std::string>()));
    if (j.contains("mr_weights"))
        for (const auto& [mr_str, w] : j["mr_weights"].items())
            scheme.mr_weights[parse_mr(mr_str)] = w.get<double>();
    if (j.contains("pattern_weights"))
        for (const auto& [kind_str, w] : j["pattern_weights"].items())
            scheme.pattern_weights[parse_pattern(kind_str)] = w.get<double>();
    scheme.validate();
    return scheme;
}

nlohmann::ordered_json selection_to_json(const SelectionResult& result) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json eliminated = nlohmann::ordered_json::array();
    for (SystemKind s : result.eliminated) eliminated.push_back(system_name(s));
    j["eliminated"] = std::move(eliminated);

    nlohmann::ordered_json scores = nlohmann::ordered_json::object();
    for (const auto& [system, score] : result.scores) {
        nlohmann::ordered_json detail;
        detail["score"] = score;
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const ScoreTerm& t : result.breakdown.at(system)) {
            nlohmann::ordered_json jt;
            jt["mr"] = mr_name(t.mr);
            jt["violated"] = t.violated;
            jt["mr_weight"] = t.mr_weight;
            if (t.violated) {
                jt["pattern"] = pattern_name(t.pattern);
                jt["pattern_weight"] = t.pattern_weight;
            }
            terms.push_back(std::move(jt));
        }
        detail["terms"] = std::move(terms);
        scores[std::string(system_name(system))] = std::move(detail);
    }
    j["scores"] = std::move(scores);

    nlohmann::ordered_json ranking = nlohmann::ordered_json::array();
    for (SystemKind s : result.ranking) ranking.push_back(system_name(s));
    j["ranking"] = std::move(ranking);
    j["chosen"] = system_name(result.chosen);
    return j;
}

std::string snapshot_dir_name(SystemKind system, MrId mr, int trial) {
    std::string name(system_name(system));
    name += "_";
    name += mr_name(mr);
    name += "_" + std::to_string(trial);
    return name;
}

void write_trial_snapshot(const TrialRecord& record, const TrialArtifacts& artifacts,
                          const std::filesystem::path& run_dir) {
    std::filesystem::path dir =
        run_dir / "cases" / snapshot_dir_name(record.system, record.mr, record.trial);
    write_case(artifacts.mr_case, dir);
    nlohmann::ordered_json j;
    j["system"] = system_name(record.system);
    j["source_assignments"] = artifacts.source_outcome.assignments;
    j["followup_assignments"] = artifacts.followup_outcome.assignments;
    j["source_noise"] = artifacts.source_outcome.noise_count;
    j["followup_noise"] = artifacts.followup_outcome.noise_count;
    std::ofstream out(dir / "outcomes.json");
    if (!out) throw ConfigError("cannot write " + (dir / "outcomes.json").string());
    out << j.dump(2) << '\n';
}

TrialSnapshot read_trial_snapshot(const std::filesystem::path& run_dir,
                                  SystemKind system, MrId mr, int trial) {
    std::filesystem::path dir = run_dir / "cases" / snapshot_dir_name(system, mr, trial);
    if (!std::filesystem::exists(dir / "outcomes.json"))
        throw ConfigError("no stored data for trial " + snapshot_dir_name(system, mr, trial) +
                          " under " + run_dir.string() +
                          " (was the run started with --keep-data?)");
    TrialSnapshot snap;
    snap.mr_case.source = read_dataset_csv(dir / "source.csv").first;
    snap.mr_case.followup = read_dataset_csv(dir / "followup.csv").first;
    nlohmann::ordered_json j = load_json(dir / "outcomes.json");
    snap.source_assignments = j.at("source_assignments").get<std::vector<int>>();
    snap.followup_assignments = j.at("followup_assignments").get<std::vector<int>>();
    return snap;
}

} // namespace mtc
