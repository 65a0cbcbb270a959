#include "mtc/common.hpp"

#include <algorithm>
#include <cctype>

namespace mtc {

std::string_view system_name(SystemKind kind) {
    switch (kind) {
    case SystemKind::KM: return "KM";
    case SystemKind::XM: return "XM";
    case SystemKind::EM: return "EM";
    case SystemKind::AN: return "AN";
    case SystemKind::FF: return "FF";
    case SystemKind::DS: return "DS";
    }
    return "?";
}

std::string_view mr_name(MrId id) {
    switch (id) {
    case MrId::MR1_1: return "MR1.1";
    case MrId::MR1_2: return "MR1.2";
    case MrId::MR2_1: return "MR2.1";
    case MrId::MR2_2: return "MR2.2";
    case MrId::MR3_1: return "MR3.1";
    case MrId::MR3_2: return "MR3.2";
    case MrId::MR4_1: return "MR4.1";
    case MrId::MR4_2: return "MR4.2";
    case MrId::MR5_1: return "MR5.1";
    case MrId::MR5_2: return "MR5.2";
    case MrId::MR6: return "MR6";
    }
    return "?";
}

namespace {

std::string to_upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return out;
}

} // namespace

SystemKind parse_system(std::string_view name) {
    std::string up = to_upper(name);
    for (SystemKind kind : all_systems()) {
        if (up == system_name(kind)) return kind;
    }
    throw ConfigError("unknown system '" + std::string(name) +
                      "' (expected one of km, xm, em, an, ff, ds)");
}

MrId parse_mr(std::string_view name) {
    std::string up = to_upper(name);
    for (MrId id : all_mrs()) {
        if (up == mr_name(id)) return id;
    }
    throw ConfigError("unknown metamorphic relation '" + std::string(name) +
                      "' (expected mr1.1 ... mr6)");
}

} // namespace mtc
