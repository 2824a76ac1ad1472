#include "lenard/lenard.h"

#include "config.hpp"
#include "errors.hpp"
#include "ladder.hpp"
#include "models.hpp"
#include "run.hpp"

#include <cstring>
#include <string>

struct lenard_model {
    lenard::ModelSpec spec;
};

struct lenard_ladder {
    lenard::Ladder ladder;
};

namespace {

thread_local std::string g_last_error = "no error";

lenard_status status_of(lenard::Errc code) {
    using lenard::Errc;
    switch (code) {
        case Errc::InvalidArgument: return LENARD_ERR_INVALID_ARG;
        case Errc::SingularG: return LENARD_ERR_SINGULAR_G;
        case Errc::AsymmetricG: return LENARD_ERR_ASYMMETRIC_G;
        case Errc::NonSkewF: return LENARD_ERR_NONSKEW_F;
        case Errc::CyclicConstraintViolated: return LENARD_ERR_CYCLIC_CONSTRAINT;
        case Errc::CalibrationFailure: return LENARD_ERR_CALIBRATION;
        case Errc::InvalidC: return LENARD_ERR_INVALID_CONSTANT;
        case Errc::NonFinite: return LENARD_ERR_NONFINITE;
        case Errc::CflViolation: return LENARD_ERR_CFL;
        case Errc::EdgeDecayViolation: return LENARD_ERR_EDGE_DECAY;
        case Errc::UnsupportedJetOrder: return LENARD_ERR_UNSUPPORTED_ORDER;
        case Errc::ConfigInvalid: return LENARD_ERR_CONFIG;
        case Errc::CheckFailed: return LENARD_ERR_CHECK_FAILED;
        case Errc::Parse: return LENARD_ERR_PARSE;
        case Errc::Io: return LENARD_ERR_IO;
    }
    return LENARD_ERR_RUNTIME;
}

template <typename Fn>
lenard_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const lenard::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return LENARD_ERR_INVALID_ARG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LENARD_ERR_RUNTIME;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lenard_status require(bool ok, const char* message) {
    if (ok) return LENARD_OK;
    g_last_error = message;
    return LENARD_ERR_INVALID_ARG;
}

}  // namespace

extern "C" {

const char* lenard_version(void) { return "1.0.0"; }

const char* lenard_last_error(void) { return g_last_error.c_str(); }

const char* lenard_status_name(lenard_status status) {
    switch (status) {
        case LENARD_OK: return "ok";
        case LENARD_ERR_INVALID_ARG: return "invalid argument";
        case LENARD_ERR_SINGULAR_G: return "SingularG";
        case LENARD_ERR_ASYMMETRIC_G: return "AsymmetryG";
        case LENARD_ERR_NONSKEW_F: return "NonSkewF";
        case LENARD_ERR_CYCLIC_CONSTRAINT: return "CyclicConstraintViolated";
        case LENARD_ERR_CALIBRATION: return "CalibrationFailure";
        case LENARD_ERR_INVALID_CONSTANT: return "InvalidConstant";
        case LENARD_ERR_NONFINITE: return "NonFinite";
        case LENARD_ERR_CFL: return "CFLViolation";
        case LENARD_ERR_EDGE_DECAY: return "EdgeDecayViolation";
        case LENARD_ERR_UNSUPPORTED_ORDER: return "UnsupportedJetOrder";
        case LENARD_ERR_CONFIG: return "ConfigInvalid";
        case LENARD_ERR_CHECK_FAILED: return "CheckFailed";
        case LENARD_ERR_PARSE: return "ParseError";
        case LENARD_ERR_IO: return "IoError";
        case LENARD_ERR_RUNTIME: return "RuntimeError";
    }
    return "unknown";
}

void lenard_string_free(char* text) { delete[] text; }

lenard_status lenard_model_preset(const char* name, lenard_model** out) {
    if (auto s = require(name && out, "name and out must be non-null")) return s;
    return guarded([&] {
        *out = new lenard_model{lenard::preset_model(name)};
        return LENARD_OK;
    });
}

lenard_status lenard_model_from_json(const char* json_text, lenard_model** out) {
    if (auto s = require(json_text && out, "json_text and out must be non-null")) return s;
    return guarded([&] {
        *out = new lenard_model{lenard::parse_model_json(json_text)};
        return LENARD_OK;
    });
}

void lenard_model_free(lenard_model* model) { delete model; }

lenard_status lenard_model_dim(const lenard_model* model, int* out) {
    if (auto s = require(model && out, "model and out must be non-null")) return s;
    *out = model->spec.dim;
    return LENARD_OK;
}

lenard_status lenard_model_name(const lenard_model* model, char** out) {
    if (auto s = require(model && out, "model and out must be non-null")) return s;
    *out = dup_string(model->spec.name);
    return LENARD_OK;
}

lenard_status lenard_model_rhs_text(const lenard_model* model, int component, char** out) {
    if (auto s = require(model && out, "model and out must be non-null")) return s;
    return guarded([&] {
        lenard::Characteristics rhs = lenard::model_rhs(model->spec);
        if (component < 0 || component >= rhs.dim()) {
            g_last_error = "component index out of range";
            return LENARD_ERR_INVALID_ARG;
        }
        *out = dup_string(rhs[component].str());
        return LENARD_OK;
    });
}

lenard_status lenard_ladder_generate(const lenard_model* model, int depth, lenard_ladder** out) {
    if (auto s = require(model && out, "model and out must be non-null")) return s;
    return guarded([&] {
        lenard::Characteristics e = lenard::model_e(model->spec);
        *out = new lenard_ladder{lenard::ladder_generate(lenard::default_ladder_seed(model->spec),
                                                         e, depth, model->spec.name)};
        return LENARD_OK;
    });
}

void lenard_ladder_free(lenard_ladder* ladder) { delete ladder; }

lenard_status lenard_ladder_depth(const lenard_ladder* ladder, int* out) {
    if (auto s = require(ladder && out, "ladder and out must be non-null")) return s;
    *out = ladder->ladder.depth();
    return LENARD_OK;
}

lenard_status lenard_ladder_entry_text(const lenard_ladder* ladder, int index, char** out) {
    if (auto s = require(ladder && out, "ladder and out must be non-null")) return s;
    if (index < 0 || index > ladder->ladder.depth()) {
        g_last_error = "ladder index out of range";
        return LENARD_ERR_INVALID_ARG;
    }
    *out = dup_string(ladder->ladder.entries[index].density().str());
    return LENARD_OK;
}

lenard_status lenard_run_config(const char* config_json, const char* command, const char* out_dir,
                                long long seed, int depth, char** summary) {
    if (auto s = require(config_json && summary, "config_json and summary must be non-null"))
        return s;
    return guarded([&]() -> lenard_status {
        lenard::RunOverrides overrides;
        if (command) overrides.command = command;
        if (out_dir) overrides.out_dir = out_dir;
        overrides.seed = seed;
        overrides.depth = depth;
        lenard::RunSummary result = lenard::run_config_text(config_json, overrides);
        *summary = dup_string(result.summary_json);
        if (!result.pass) {
            g_last_error = "check failed: " + result.failed_check;
            return LENARD_ERR_CHECK_FAILED;
        }
        return LENARD_OK;
    });
}

}  // extern "C"
