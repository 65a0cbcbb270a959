#include "mtc/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace mtc {

namespace {

std::string vr_cell(const CellSummary& cell) {
    if (!cell.applicable) return "N/A";
    if (cell.vr == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g%%", cell.vr * 100.0);
    return buf;
}

std::string rp_cell(const CellSummary& cell) {
    if (!cell.applicable) return "N/A";
    if (!cell.mean_rp) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", *cell.mean_rp * 100.0);
    return buf;
}

std::string render_matrix(const CampaignSummary& summary,
                          std::string (*format)(const CellSummary&),
                          const std::string& title) {
    std::vector<SystemKind> systems;
    std::set<MrId> mr_set;
    for (const auto& [system, row] : summary.cells) {
        systems.push_back(system);
        for (const auto& [mr, cell] : row) mr_set.insert(mr);
    }

    std::ostringstream out;
    char buf[32];
    out << title << '\n';
    std::snprintf(buf, sizeof buf, "%-8s", "MR");
    out << buf;
    for (SystemKind s : systems) {
        std::snprintf(buf, sizeof buf, "%10s", std::string(system_name(s)).c_str());
        out << buf;
    }
    out << '\n';
    for (MrId mr : mr_set) {
        std::snprintf(buf, sizeof buf, "%-8s", std::string(mr_name(mr)).c_str());
        out << buf;
        for (SystemKind s : systems) {
            const auto& row = summary.cells.at(s);
            auto it = row.find(mr);
            std::string cell = it == row.end() ? "-" : format(it->second);
            std::snprintf(buf, sizeof buf, "%10s", cell.c_str());
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string render_vr_matrix(const CampaignSummary& summary) {
    return render_matrix(summary, vr_cell, "Violation rate (VR)");
}

std::string render_rp_matrix(const CampaignSummary& summary) {
    return render_matrix(summary, rp_cell, "Mean RP over violated trials");
}

} // namespace mtc
