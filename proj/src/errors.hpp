#pragma once

#include <stdexcept>
#include <string>

namespace lenard {

enum class Errc {
    InvalidArgument,
    SingularG,
    AsymmetricG,
    NonSkewF,
    CyclicConstraintViolated,
    CalibrationFailure,
    InvalidC,
    NonFinite,
    CflViolation,
    EdgeDecayViolation,
    UnsupportedJetOrder,
    ConfigInvalid,
    CheckFailed,
    Parse,
    Io,
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::SingularG: return "SingularG";
        case Errc::AsymmetricG: return "AsymmetryG";
        case Errc::NonSkewF: return "NonSkewF";
        case Errc::CyclicConstraintViolated: return "CyclicConstraintViolated";
        case Errc::CalibrationFailure: return "CalibrationFailure";
        case Errc::InvalidC: return "InvalidC";
        case Errc::NonFinite: return "NonFinite";
        case Errc::CflViolation: return "CFLViolation";
        case Errc::EdgeDecayViolation: return "EdgeDecayViolation";
        case Errc::UnsupportedJetOrder: return "UnsupportedJetOrder";
        case Errc::ConfigInvalid: return "ConfigInvalid";
        case Errc::CheckFailed: return "CheckFailed";
        case Errc::Parse: return "Parse";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace lenard
