#include <doctest.h>

#include "latsieve/report.hpp"

using namespace latsieve;

TEST_CASE("analyze report carries the documented witness orders") {
    ReportOptions opt;
    opt.stable = true;
    Json j = analyze_report(build_builtin("D12"), opt);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["order"] == 12);
    CHECK(j["subgroups"] == 16);
    CHECK(j["patterns"]["L9"]["status"] == "witness");
    CHECK(j["l9_direct"]["status"] == "witness");
    CHECK(j["l9_direct"]["orders"] == Json::array({1, 2, 2, 3, 2, 6, 6, 6, 12}));
    CHECK(j["l9_free"] == false);
}

TEST_CASE("analyze honours a pattern filter") {
    ReportOptions opt;
    opt.stable = true;
    opt.patterns = {"L5", "L9"};
    Json j = analyze_report(build_builtin("Q8"), opt);
    CHECK(j["patterns"].contains("L5"));
    CHECK(j["patterns"].contains("L9"));
    CHECK(!j["patterns"].contains("L10"));
    CHECK(j["patterns"]["L5"]["status"] == "free");
    CHECK(j["modular"] == true);
}

TEST_CASE("classify report renders both verdict shapes") {
    ReportOptions opt;
    opt.stable = true;
    Json in = classify_report(build_builtin("A4"), opt);
    CHECK(in["in_class"] == true);
    CHECK(in["type"]["n_order"] == 4);
    CHECK(in["type"]["k_order"] == 3);
    CHECK(in["recheck"] == "ok");

    Json outj = classify_report(build_builtin("D12"), opt);
    CHECK(outj["in_class"] == false);
    CHECK(outj["candidates"].size() == 4);
    for (const auto& c : outj["candidates"]) CHECK(c["stage"] == "decomposition");
}

TEST_CASE("congruence report records the frozen count") {
    Json j = congruences_report("L9");
    CHECK(j["count"] == 2);
    CHECK(j["nontrivial_all_identify_E_D"] == true);
}

TEST_CASE("model report reproduces the violation summary") {
    Json j = model_report(builtin_model_text());
    CHECK(j["outcome"] == "violation");
    CHECK(j["violation"]["pi"] == Json::array({3}));
    CHECK(j["violation"]["c_l_j_order"] == 3);
}

TEST_CASE("corpus report lists every entry") {
    Json j = corpus_report();
    CHECK(j["groups"].size() >= 30);
}

TEST_CASE("validation of a small selection passes and is parallel-stable") {
    ReportOptions opt;
    opt.stable = true;
    opt.jobs = 1;
    ValidateResult one = validate_corpus("D8,Q8,D12,C6,A4,S4", opt);
    CHECK(one.ok);
    opt.jobs = 4;
    ValidateResult four = validate_corpus("D8,Q8,D12,C6,A4,S4", opt);
    CHECK(four.ok);
    CHECK(one.json.dump(2) == four.json.dump(2));
}

TEST_CASE("two-group selector ties modularity to pattern freeness") {
    ReportOptions opt;
    opt.stable = true;
    ValidateResult r = validate_corpus("p2", opt);
    CHECK(r.ok);
    for (const auto& row : r.json["groups"]) {
        CHECK(row["modular"].get<bool>() == row["l9_free"].get<bool>());
        CHECK(row["agree"] == true);
    }
}

TEST_CASE("unknown ids are rejected at selection time") {
    ReportOptions opt;
    CHECK_THROWS_AS(validate_corpus("NoSuchThing", opt), Error);
}

TEST_CASE("frozen corpus verdict table") {
    struct Row {
        const char* id;
        bool modular;
        bool l9_free;
        int subgroups;
    };
    // golden values; every hand-checkable entry verified against the
    // classical subgroup counts
    const std::vector<Row> expected = {
        {"C1", true, true, 1},        {"C2", true, true, 2},
        {"C3", true, true, 2},        {"C4", true, true, 3},
        {"C5", true, true, 2},        {"C6", true, true, 4},
        {"C7", true, true, 2},        {"C8", true, true, 4},
        {"C9", true, true, 3},        {"C10", true, true, 4},
        {"C11", true, true, 2},       {"C12", true, true, 6},
        {"C13", true, true, 2},       {"C14", true, true, 4},
        {"C15", true, true, 4},       {"C16", true, true, 5},
        {"C17", true, true, 2},       {"C18", true, true, 6},
        {"C19", true, true, 2},       {"C20", true, true, 6},
        {"C21", true, true, 4},       {"C22", true, true, 4},
        {"C23", true, true, 2},       {"C24", true, true, 8},
        {"C2xC2", true, true, 5},     {"C2xC2xC2", true, true, 16},
        {"C3xC3", true, true, 6},     {"C5xC5", true, true, 8},
        {"C4xC2", true, true, 8},     {"D8", false, false, 10},
        {"Q8", true, true, 6},        {"D16", false, false, 19},
        {"Q16", false, false, 11},    {"Mod16", true, true, 11},
        {"D10", true, true, 8},       {"D12", false, false, 16},
        {"Dic3", true, true, 8},      {"S3", true, true, 6},
        {"A4", false, true, 10},      {"S4", false, false, 30},
        {"A5", false, false, 59},     {"F20", false, true, 14},
        {"F21", true, true, 10},      {"SL23", false, true, 15},
        {"Q8_on_C3sq", false, true, 68},
        {"L9example_7_3", false, false, 26},
        {"C19xC27_batten", true, true, 26},
        {"C2cube_by_C7", false, true, 25},
        {"C2four_by_C7", false, true, 85},
        {"C5_by_Dic3", false, true, 40},
        {"C2sqxC7_by_C3", false, false, 50},
        {"D8xC3", false, false, 20},  {"Q8xC3", true, true, 12},
        {"A4xC5", false, true, 20},   {"D12xC5", false, false, 32},
        {"F21xC2", true, true, 20},
        {"C19xC27_batten_xC2", true, true, 52},
    };
    for (const Row& row : expected) {
        auto lat = lattice_for(build_builtin(row.id));
        FreenessProfile prof = freeness_profile(*lat);
        CHECK_MESSAGE(prof.modular == row.modular, row.id);
        CHECK_MESSAGE(prof.l9_free() == row.l9_free, row.id);
        CHECK_MESSAGE(lat->size() == row.subgroups, row.id);
    }
}

TEST_CASE("stable analyze output is byte-identical across runs") {
    ReportOptions opt;
    opt.stable = true;
    std::string a = analyze_report(build_builtin("D12"), opt).dump(2);
    std::string b = analyze_report(build_builtin("D12"), opt).dump(2);
    CHECK(a == b);
}

TEST_CASE("group inputs load from builtin ids and raw text") {
    ReportOptions opt;
    GroupTable a = load_group_input("builtin:D8", opt);
    CHECK(a.order == 8);
    GroupTable b = load_group_input("text:group T\ntable 1\n0\n", opt);
    CHECK(b.order == 1);
    CHECK_THROWS_AS(load_group_input("what:ever", opt), Error);
}
