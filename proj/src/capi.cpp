#include "latsieve.h"

#include <cstring>
#include <new>
#include <string>

#include "latsieve/report.hpp"

using namespace latsieve;

struct ls_group {
    GroupTable table;
};

namespace {

thread_local std::string g_last_error;

ls_status status_of(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return LS_ERR_PARSE;
        case ErrorCode::ClosureTooLarge:
        case ErrorCode::LatticeTooLarge:
        case ErrorCode::PatternTooLarge: return LS_ERR_CAP;
        case ErrorCode::UnknownId:
        case ErrorCode::UnknownPattern: return LS_ERR_UNKNOWN_ID;
        case ErrorCode::IoError:
        case ErrorCode::CacheCorrupt: return LS_ERR_IO;
        case ErrorCode::Internal: return LS_ERR_INTERNAL;
        default: return LS_ERR_INVALID;
    }
}

char* dup_string(const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) return nullptr;
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

template <typename Fn>
ls_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return LS_OK;
    } catch (const Error& e) {
        g_last_error = std::string(error_code_name(e.code)) + ": " + e.what();
        return status_of(e.code);
    } catch (const Json::exception& e) {
        g_last_error = std::string("json: ") + e.what();
        return LS_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LS_ERR_INTERNAL;
    }
}

ls_status emit(ls_status st, const Json& j, char** json_out) {
    if (st != LS_OK) return st;
    *json_out = dup_string(j.dump(2) + "\n");
    return *json_out ? LS_OK : LS_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* ls_version(void) { return "latsieve 1.0.0"; }

const char* ls_last_error(void) { return g_last_error.c_str(); }

ls_status ls_group_from_text(const char* text, const char* options_json, ls_group** out) {
    if (!text || !out) return LS_ERR_INVALID;
    return guarded([&] {
        ReportOptions opt = options_from_json(options_json ? options_json : "");
        GroupFile f = parse_group_file(text);
        auto* g = new ls_group{realize_group(f, opt.group_caps)};
        *out = g;
    });
}

ls_status ls_group_builtin(const char* id, const char* options_json, ls_group** out) {
    if (!id || !out) return LS_ERR_INVALID;
    return guarded([&] {
        ReportOptions opt = options_from_json(options_json ? options_json : "");
        auto* g = new ls_group{build_builtin(id, opt.group_caps)};
        *out = g;
    });
}

void ls_group_free(ls_group* g) { delete g; }

long ls_group_order(const ls_group* g) { return g ? g->table.order : 0; }

const char* ls_group_name(const ls_group* g) { return g ? g->table.name.c_str() : ""; }

ls_status ls_analyze(const ls_group* g, const char* options_json, char** json_out) {
    if (!g || !json_out) return LS_ERR_INVALID;
    Json j;
    ls_status st = guarded([&] {
        ReportOptions opt = options_from_json(options_json ? options_json : "");
        j = analyze_report(g->table, opt);
    });
    return emit(st, j, json_out);
}

ls_status ls_classify(const ls_group* g, const char* options_json, char** json_out) {
    if (!g || !json_out) return LS_ERR_INVALID;
    Json j;
    ls_status st = guarded([&] {
        ReportOptions opt = options_from_json(options_json ? options_json : "");
        j = classify_report(g->table, opt);
    });
    return emit(st, j, json_out);
}

ls_status ls_validate(const char* selector, const char* options_json, char** json_out) {
    if (!json_out) return LS_ERR_INVALID;
    Json j;
    ls_status st = guarded([&] {
        ReportOptions opt = options_from_json(options_json ? options_json : "");
        ValidateResult r = validate_corpus(selector ? selector : "all", opt);
        j = std::move(r.json);
    });
    return emit(st, j, json_out);
}

ls_status ls_congruences(const char* pattern, char** json_out) {
    if (!pattern || !json_out) return LS_ERR_INVALID;
    Json j;
    ls_status st = guarded([&] { j = congruences_report(pattern); });
    return emit(st, j, json_out);
}

ls_status ls_model_check(const char* file_text, char** json_out) {
    if (!file_text || !json_out) return LS_ERR_INVALID;
    Json j;
    ls_status st = guarded([&] { j = model_report(file_text); });
    return emit(st, j, json_out);
}

ls_status ls_corpus_manifest(char** json_out) {
    if (!json_out) return LS_ERR_INVALID;
    Json j;
    ls_status st = guarded([&] { j = corpus_report(); });
    return emit(st, j, json_out);
}

void ls_buffer_free(char* buf) { std::free(buf); }

}  // extern "C"
