#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latsieve.h"

namespace {

using Json = nlohmann::ordered_json;

struct CommonOpts {
    bool json = false;
    bool stable = false;
    std::string cache_dir;
    int max_order = 0;
    int max_subgroups = 0;
    double budget_secs = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_flag("--json", c.json, "emit the raw JSON report");
    cmd->add_flag("--stable", c.stable, "zero timing fields for byte-stable output");
    cmd->add_option("--cache-dir", c.cache_dir, "persistent lattice cache directory");
    cmd->add_option("--max-order", c.max_order, "group order cap");
    cmd->add_option("--max-subgroups", c.max_subgroups, "lattice node cap");
    cmd->add_option("--budget-secs", c.budget_secs, "per-pattern search budget in seconds");
}

std::string options_json(const CommonOpts& c, int jobs = 0, const std::string& patterns = "") {
    Json j;
    if (c.stable) j["stable"] = true;
    if (!c.cache_dir.empty()) {
        j["cache_dir"] = c.cache_dir;
    } else if (const char* env = std::getenv("LATSIEVE_CACHE"); env && *env) {
        j["cache_dir"] = env;
    }
    if (c.max_order > 0) j["max_order"] = c.max_order;
    if (c.max_subgroups > 0) j["max_subgroups"] = c.max_subgroups;
    if (c.budget_secs > 0) j["budget_secs"] = c.budget_secs;
    if (jobs > 0) j["jobs"] = jobs;
    if (!patterns.empty()) j["patterns"] = patterns;
    return j.dump();
}

int fail_with(ls_status st) {
    std::cerr << "error: " << ls_last_error() << "\n";
    switch (st) {
        case LS_ERR_CAP: return 2;
        case LS_ERR_PARSE: return 3;
        default: return 4;
    }
}

ls_status make_group(const std::string& input, const std::string& opts, ls_group** out) {
    if (input.rfind("builtin:", 0) == 0)
        return ls_group_builtin(input.substr(8).c_str(), opts.c_str(), out);
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << input << "\n";
        return LS_ERR_IO;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return ls_group_from_text(buf.str().c_str(), opts.c_str(), out);
}

struct Buffer {
    char* data = nullptr;
    ~Buffer() { ls_buffer_free(data); }
    Json parse() const { return Json::parse(data); }
};

void print_profile(const Json& j) {
    std::cout << j["group"].get<std::string>() << ": order " << j["order"] << ", "
              << j["subgroups"] << " subgroups, "
              << (j["modular"].get<bool>() ? "modular" : "not modular") << "\n";
    for (const auto& [name, r] : j["patterns"].items()) {
        std::cout << "  " << name << ": " << r["status"].get<std::string>();
        if (r.contains("orders")) {
            std::cout << "  orders (";
            bool first = true;
            for (const auto& o : r["orders"]) {
                if (!first) std::cout << ",";
                std::cout << o;
                first = false;
            }
            std::cout << ")";
        }
        std::cout << "\n";
    }
    if (j.contains("l9_direct")) {
        const auto& d = j["l9_direct"];
        std::cout << "  L9 direct detector: " << d["status"].get<std::string>();
        if (d.contains("orders")) {
            std::cout << "  orders (";
            bool first = true;
            for (const auto& o : d["orders"]) {
                if (!first) std::cout << ",";
                std::cout << o;
                first = false;
            }
            std::cout << ")";
        }
        std::cout << "\n";
        std::cout << "  L9-free: " << (j["l9_free"].get<bool>() ? "yes" : "no") << "\n";
    }
}

void print_classify(const Json& j) {
    std::cout << j["group"].get<std::string>() << ": "
              << (j["in_class"].get<bool>() ? "IN_CLASS" : "NOT_IN_CLASS") << "\n";
    if (j.contains("type")) {
        const auto& t = j["type"];
        std::cout << "  type (|N|=" << t["n_order"] << ", |K|=" << t["k_order"] << ")\n";
        for (const auto& b : t["battens"])
            std::cout << "    batten: " << b["kind"].get<std::string>() << " of order "
                      << b["order"] << "\n";
        for (const auto& c : t["certificates"])
            std::cout << "    action of batten |B|=" << c["batten_order"] << " on the Sylow "
                      << c["prime"] << "-part: " << c["type"].get<std::string>() << "\n";
        if (j.contains("recheck"))
            std::cout << "  re-check: " << j["recheck"].get<std::string>() << "\n";
    } else if (j.contains("candidates")) {
        for (const auto& c : j["candidates"]) {
            std::cout << "  candidate |N|=" << c["n_order"] << " |K|=" << c["k_order"] << ": ";
            if (c["result"] == "passed")
                std::cout << "passed\n";
            else
                std::cout << c["stage"].get<std::string>() << " failed ("
                          << c["detail"].get<std::string>() << ")\n";
        }
    }
    if (j["inconclusive"].get<bool>()) std::cout << "  verdict inconclusive (cap exceeded)\n";
}

void print_validate(const Json& j) {
    std::cout << "corpus " << j["corpus_version"].get<std::string>() << " selector "
              << j["selector"].get<std::string>() << "\n";
    for (const auto& row : j["groups"]) {
        std::cout << "  " << row["id"].get<std::string>() << " (order " << row["order"] << "): "
                  << (row["l9_free"].get<bool>() ? "L9-free" : "not L9-free") << ", "
                  << (row["in_class"].get<bool>() ? "IN_CLASS" : "NOT_IN_CLASS") << ", "
                  << (row["agree"].get<bool>() ? "agree" : "DISAGREE");
        if (row["invariants"] != "ok") std::cout << "  [invariant failures]";
        std::cout << "\n";
    }
    const auto& t = j["totals"];
    std::cout << "groups " << t["groups"] << ", clean " << t["clean"] << ", timeouts "
              << t["timeouts"] << ", inconclusive " << t["inconclusive"] << "\n";
    for (const auto& [name, v] : j["checks"].items())
        std::cout << "check " << name << ": " << v.dump() << "\n";
    std::cout << (j["ok"].get<bool>() ? "VALIDATION PASSED" : "VALIDATION FAILED") << "\n";
    if (j.contains("first_failure"))
        std::cout << "first failure: " << j["first_failure"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latsieve: subgroup-lattice pattern analysis and structural classification"};
    app.require_subcommand(1);

    std::string input, patterns, selector = "all", report_path, pattern = "L9";
    int jobs = 0;

    CommonOpts ca, cc, cv;
    auto* analyze = app.add_subcommand("analyze", "pattern profile of one group");
    analyze->add_option("input", input, "builtin:<id> or a group file path")->required();
    analyze->add_option("--patterns", patterns, "comma-separated pattern subset (default: all)");
    add_common(analyze, ca);

    auto* classify = app.add_subcommand("classify", "structural class decision of one group");
    classify->add_option("input", input, "builtin:<id> or a group file path")->required();
    add_common(classify, cc);

    auto* validate = app.add_subcommand("validate", "cross-validate both deciders on the corpus");
    validate->add_option("--corpus", selector, "all | p2 | p3 | order<=N | id,id,...");
    validate->add_option("-j,--jobs", jobs, "worker threads (default: logical cores)");
    validate->add_option("--report", report_path, "write the JSON report to this path");
    add_common(validate, cv);

    auto* congr = app.add_subcommand("congruences", "congruence relations of a named pattern");
    congr->add_option("--pattern", pattern, "pattern name (default L9)");
    bool congr_json = false;
    congr->add_flag("--json", congr_json, "emit the raw JSON report");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        std::string opts = options_json(ca, 0, patterns);
        ls_group* g = nullptr;
        if (ls_status st = make_group(input, opts, &g); st != LS_OK) return fail_with(st);
        Buffer buf;
        ls_status st = ls_analyze(g, opts.c_str(), &buf.data);
        ls_group_free(g);
        if (st != LS_OK) return fail_with(st);
        Json j = buf.parse();
        if (ca.json)
            std::cout << buf.data;
        else
            print_profile(j);
        return 0;
    }

    if (classify->parsed()) {
        std::string opts = options_json(cc);
        ls_group* g = nullptr;
        if (ls_status st = make_group(input, opts, &g); st != LS_OK) return fail_with(st);
        Buffer buf;
        ls_status st = ls_classify(g, opts.c_str(), &buf.data);
        ls_group_free(g);
        if (st != LS_OK) return fail_with(st);
        Json j = buf.parse();
        if (cc.json)
            std::cout << buf.data;
        else
            print_classify(j);
        if (j["inconclusive"].get<bool>()) return 4;
        return j["in_class"].get<bool>() ? 0 : 1;
    }

    if (validate->parsed()) {
        std::string opts = options_json(cv, jobs);
        Buffer buf;
        ls_status st = ls_validate(selector.c_str(), opts.c_str(), &buf.data);
        if (st != LS_OK) return fail_with(st);
        Json j = buf.parse();
        if (!report_path.empty()) {
            std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "error: cannot write " << report_path << "\n";
                return 4;
            }
            out << buf.data;
        }
        if (cv.json)
            std::cout << buf.data;
        else
            print_validate(j);
        return j["ok"].get<bool>() ? 0 : 1;
    }

    if (congr->parsed()) {
        Buffer buf;
        ls_status st = ls_congruences(pattern.c_str(), &buf.data);
        if (st != LS_OK) return fail_with(st);
        Json j = buf.parse();
        if (congr_json) {
            std::cout << buf.data;
        } else {
            std::cout << "pattern " << pattern << ": " << j["count"] << " congruences\n";
            for (const auto& c : j["congruences"]) {
                std::cout << "  ";
                for (const auto& cls : c) {
                    std::cout << "{";
                    bool first = true;
                    for (const auto& e : cls) {
                        if (!first) std::cout << " ";
                        std::cout << e.get<std::string>();
                        first = false;
                    }
                    std::cout << "} ";
                }
                std::cout << "\n";
            }
            if (j.contains("nontrivial_all_identify_E_D"))
                std::cout << "all non-equality congruences identify E with D: "
                          << (j["nontrivial_all_identify_E_D"].get<bool>() ? "yes" : "NO") << "\n";
        }
        if (j.contains("nontrivial_all_identify_E_D") &&
            !j["nontrivial_all_identify_E_D"].get<bool>())
            return 1;
        return 0;
    }
    return 0;
}
