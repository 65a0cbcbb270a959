#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtc {

/// Label used for points that no cluster claims.
inline constexpr int kNoise = -1;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run/tool configuration (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A call that violates an operation's preconditions.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A relation applied to a system that cannot support it.
class ApplicabilityError : public Error {
public:
    using Error::Error;
};

/// Selection left no candidate system (CLI exit code 3).
class EmptyCandidateError : public Error {
public:
    using Error::Error;
};

enum class SystemKind { KM, XM, EM, AN, FF, DS };

enum class MrId {
    MR1_1,
    MR1_2,
    MR2_1,
    MR2_2,
    MR3_1,
    MR3_2,
    MR4_1,
    MR4_2,
    MR5_1,
    MR5_2,
    MR6
};

constexpr std::array<SystemKind, 6> all_systems() {
    return {SystemKind::KM, SystemKind::XM, SystemKind::EM,
            SystemKind::AN, SystemKind::FF, SystemKind::DS};
}

constexpr std::array<MrId, 11> all_mrs() {
    return {MrId::MR1_1, MrId::MR1_2, MrId::MR2_1, MrId::MR2_2,
            MrId::MR3_1, MrId::MR3_2, MrId::MR4_1, MrId::MR4_2,
            MrId::MR5_1, MrId::MR5_2, MrId::MR6};
}

std::string_view system_name(SystemKind kind);
std::string_view mr_name(MrId id);

/// Parses "km"/"KM" style codes; throws ConfigError on unknown names.
SystemKind parse_system(std::string_view name);
/// Parses "mr1.1"/"MR1.1" style ids; throws ConfigError on unknown names.
MrId parse_mr(std::string_view name);

} // namespace mtc
