#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "latsieve/catalog.hpp"
#include "latsieve/classify.hpp"
#include "latsieve/model.hpp"
#include "latsieve/pattern.hpp"

namespace latsieve {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "latsieve.report/v1";

struct ReportOptions {
    bool stable = false;  // zero timing fields
    int jobs = 0;         // 0 = hardware concurrency
    std::string cache_dir;
    bool use_cache = false;
    std::vector<std::string> patterns;  // analyze filter; empty = all
    GroupCaps group_caps;
    LatticeCaps lattice_caps;
    SearchBudget budget;
    ClassifyCaps classify_caps;
};

ReportOptions options_from_json(const std::string& options_json);

// `builtin:<id>` or raw file text prefixed with `text:`; the CLI resolves
// paths to text before calling in.
GroupTable load_group_input(const std::string& input, const ReportOptions& opt);

Json analyze_report(const GroupTable& g, const ReportOptions& opt);
Json classify_report(const GroupTable& g, const ReportOptions& opt);
Json congruences_report(const std::string& pattern);
Json model_report(const std::string& file_text);
Json corpus_report();

struct ValidateResult {
    Json json;
    bool ok = false;
    std::string first_failure;
};

// Runs both deciders plus the invariant suites over the selected corpus.
// Selector: "all", a comma-separated id list, "p2", "p3", or "order<=N".
ValidateResult validate_corpus(const std::string& selector, const ReportOptions& opt);

}  // namespace latsieve
