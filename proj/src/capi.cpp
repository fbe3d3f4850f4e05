#include "hhsmash/hhsmash.h"

#include "hhsmash/error.hpp"
#include "hhsmash/pipeline.hpp"
#include "hhsmash/report.hpp"
#include "hhsmash/scenario.hpp"

#include <new>
#include <optional>
#include <string>

struct hhs_scenario {
    hhs::Scenario scenario;
};

struct hhs_report {
    hhs::CohomologyReport report;
    std::string json;
    std::string text;
};

namespace {

thread_local std::string last_error;

hhs_status input_or_internal(const hhs::Error& e) {
    switch (e.code()) {
    case hhs::ErrorCode::ParseError:
    case hhs::ErrorCode::ValidationError:
    case hhs::ErrorCode::InvalidArgument:
    case hhs::ErrorCode::NotAGroup:
    case hhs::ErrorCode::NotSemisimple:
    case hhs::ErrorCode::NoIntegral:
    case hhs::ErrorCode::IntegralNotTwoSided:
    case hhs::ErrorCode::RelationNotPreserved:
        return HHS_INPUT_ERROR;
    default:
        return HHS_INTERNAL;
    }
}

template <class F>
hhs_status guarded(F&& fn) {
    try {
        last_error.clear();
        return fn();
    } catch (const hhs::Error& e) {
        last_error = e.what();
        return input_or_internal(e);
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return HHS_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HHS_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return HHS_INTERNAL;
    }
}

std::optional<hhs::Scalar> parse_q(const char* q) {
    if (q == nullptr)
        return std::nullopt;
    try {
        return hhs::Scalar::parse(q);
    } catch (const hhs::Error& e) {
        throw hhs::Error(hhs::ErrorCode::ParseError, std::string("q: ") + e.what());
    }
}

hhs_status null_argument() {
    last_error = "null argument";
    return HHS_INPUT_ERROR;
}

} // namespace

extern "C" {

hhs_status hhs_scenario_load(const char* path, const char* q, hhs_scenario** out) {
    if (path == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new hhs_scenario{hhs::load_scenario(path, parse_q(q))};
        return HHS_OK;
    });
}

hhs_status hhs_scenario_parse(const char* json_text, const char* q, hhs_scenario** out) {
    if (json_text == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new hhs_scenario{hhs::parse_scenario(json_text, parse_q(q))};
        return HHS_OK;
    });
}

hhs_status hhs_scenario_builtin(const char* name, const char* q, hhs_scenario** out) {
    if (name == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new hhs_scenario{hhs::builtin_scenario(name, parse_q(q))};
        return HHS_OK;
    });
}

void hhs_scenario_free(hhs_scenario* s) { delete s; }

hhs_status hhs_scenario_set_weight_max(hhs_scenario* s, unsigned weight_max) {
    if (s == nullptr)
        return null_argument();
    s->scenario.params.weight_max = weight_max;
    return HHS_OK;
}

hhs_status hhs_scenario_set_index_max(hhs_scenario* s, unsigned index_max) {
    if (s == nullptr)
        return null_argument();
    s->scenario.params.index_max = index_max;
    return HHS_OK;
}

hhs_status hhs_run(const hhs_scenario* s, hhs_mode mode, unsigned threads, hhs_report** out) {
    if (s == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        const hhs::RunOptions opt{threads == 0 ? 1U : threads};
        hhs::CohomologyReport r;
        switch (mode) {
        case HHS_MODE_COMPUTE:
            r = hhs::run_compute(s->scenario, opt);
            break;
        case HHS_MODE_VERIFY:
            r = hhs::run_verify(s->scenario, opt);
            break;
        case HHS_MODE_TABLES:
            r = hhs::run_tables(s->scenario, opt);
            break;
        default:
            throw hhs::Error(hhs::ErrorCode::InvalidArgument, "unknown mode");
        }
        const bool ok = r.success;
        *out = new hhs_report{std::move(r), {}, {}};
        if (!ok)
            last_error = "some checks failed";
        return ok ? HHS_OK : HHS_VERIFY_FAILED;
    });
}

hhs_status hhs_report_render(hhs_report* r, hhs_format format, const char** out) {
    if (r == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        if (format == HHS_FORMAT_JSON) {
            if (r->json.empty())
                r->json = hhs::report_to_json(r->report);
            *out = r->json.c_str();
        } else if (format == HHS_FORMAT_TEXT) {
            if (r->text.empty())
                r->text = hhs::report_to_text(r->report);
            *out = r->text.c_str();
        } else {
            throw hhs::Error(hhs::ErrorCode::InvalidArgument, "unknown format");
        }
        return HHS_OK;
    });
}

int hhs_report_success(const hhs_report* r) { return r != nullptr && r->report.success ? 1 : 0; }

void hhs_report_free(hhs_report* r) { delete r; }

const char* hhs_last_error(void) { return last_error.c_str(); }

const char* hhs_builtin_names(void) {
    static const std::string names = [] {
        std::string s;
        for (const auto& n : hhs::builtin_names())
            s += n + "\n";
        return s;
    }();
    return names.c_str();
}

} // extern "C"
