#include "mtc/patterns.hpp"

#include <algorithm>
#include <cmath>

#include "harness_internal.hpp"
#include "mtc/harness.hpp"

namespace mtc {

std::string_view pattern_name(PatternKind kind) {
    switch (kind) {
    case PatternKind::None: return "NONE";
    case PatternKind::Border: return "BORDER";
    case PatternKind::MergeAndSplit: return "MERGE_AND_SPLIT";
    case PatternKind::Split: return "SPLIT";
    case PatternKind::Noise: return "NOISE";
    case PatternKind::Num: return "NUM";
    }
    return "?";
}

PatternKind parse_pattern(std::string_view name) {
    for (PatternKind kind :
         {PatternKind::None, PatternKind::Border, PatternKind::MergeAndSplit,
          PatternKind::Split, PatternKind::Noise, PatternKind::Num})
        if (name == pattern_name(kind)) return kind;
    throw ConfigError("unknown pattern kind '" + std::string(name) + "'");
}

PatternLabel classify_pattern(const MRCase& c, const ClusteringOutcome& source_outcome,
                              const ClusteringOutcome& followup_outcome,
                              const RPResult& rp_result,
                              const PatternThresholds& thresholds) {
    PatternLabel label;
    if (rp_result.rp <= 0.0) return label;

    detail_rp::MappedPairs mp =
        detail_rp::mapped_pairs(c, source_outcome, followup_outcome);
    LabelAlignment alignment =
        align_labels(source_outcome, followup_outcome, c.old_to_new, c);
    detail_rp::MappedEval ev = detail_rp::evaluate_mapped(mp.labels, alignment, {});

    PatternEvidence& evidence = label.evidence;
    evidence.source_clusters = mp.source_k;
    evidence.followup_clusters = mp.followup_k;
    evidence.noise_delta = ev.mapped_fup_noise - ev.mapped_src_noise;

    // (1) NUM: cluster counts differ beyond the relation's expected change.
    bool num = false;
    switch (c.mr_id) {
    case MrId::MR2_2: num = mp.followup_k != 2 * mp.source_k; break;
    case MrId::MR6:
        num = mp.followup_k != mp.source_k && mp.followup_k != mp.source_k + 1;
        break;
    default: num = mp.followup_k != mp.source_k; break;
    }
    if (num) {
        label.kind = PatternKind::Num;
        return label;
    }

    // (2) NOISE: reclustering dominated by noise flips or a large change in
    // the mapped noise count.
    int reclustered = rp_result.d_old + rp_result.d_new;
    bool noise =
        (rp_result.d_old > 0 &&
         ev.noise_flips >= thresholds.noise_dominance * rp_result.d_old) ||
        std::abs(evidence.noise_delta) >=
            std::max(1.0, thresholds.noise_dominance * reclustered);
    if (noise) {
        label.kind = PatternKind::Noise;
        return label;
    }

    // Shares are relative to each source cluster's mapped non-noise size.
    std::vector<int> src_sizes(mp.source_k, 0);
    for (int s = 0; s < mp.source_k; ++s)
        for (int f = 0; f < mp.followup_k; ++f) src_sizes[s] += mp.contingency[s][f];

    // (3)/(4) merge and split structure on the contingency matrix.
    for (int f = 0; f < mp.followup_k; ++f) {
        std::vector<int> heavy;
        for (int s = 0; s < mp.source_k; ++s)
            if (src_sizes[s] > 0 &&
                mp.contingency[s][f] >= thresholds.merge_share * src_sizes[s])
                heavy.push_back(s);
        for (std::size_t a = 0; a < heavy.size(); ++a)
            for (std::size_t b = a + 1; b < heavy.size(); ++b)
                evidence.merged_sources.emplace_back(heavy[a], heavy[b]);
    }
    for (int s = 0; s < mp.source_k; ++s) {
        if (src_sizes[s] == 0) continue;
        int parts = 0;
        for (int f = 0; f < mp.followup_k; ++f)
            if (mp.contingency[s][f] >= thresholds.split_share * src_sizes[s]) parts += 1;
        if (parts >= 2) evidence.split_sources.push_back(s);
    }

    bool merge = !evidence.merged_sources.empty();
    bool split = !evidence.split_sources.empty();
    if (merge && split) label.kind = PatternKind::MergeAndSplit;
    else if (split) label.kind = PatternKind::Split;
    else label.kind = PatternKind::Border;
    return label;
}

} // namespace mtc
