#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "latsieve.h"

using Json = nlohmann::ordered_json;

namespace {

struct Buffer {
    char* data = nullptr;
    ~Buffer() { ls_buffer_free(data); }
    Json parse() const { return Json::parse(data); }
};

}  // namespace

TEST_CASE("version string is present") {
    CHECK(std::string(ls_version()).find("latsieve") != std::string::npos);
}

TEST_CASE("builtin groups construct through the C surface") {
    ls_group* g = nullptr;
    REQUIRE(ls_group_builtin("D12", nullptr, &g) == LS_OK);
    CHECK(ls_group_order(g) == 12);
    CHECK(std::string(ls_group_name(g)) == "D12");
    ls_group_free(g);
}

TEST_CASE("unknown builtin ids set the error message") {
    ls_group* g = nullptr;
    CHECK(ls_group_builtin("NoSuchGroup", nullptr, &g) == LS_ERR_UNKNOWN_ID);
    CHECK(std::string(ls_last_error()).find("NoSuchGroup") != std::string::npos);
}

TEST_CASE("groups parse from file text") {
    ls_group* g = nullptr;
    const char* text = "group T2\ndegree 6\nperm (1 2 3 4 5 6)\nperm (2 6)(3 5)\n";
    REQUIRE(ls_group_from_text(text, nullptr, &g) == LS_OK);
    CHECK(ls_group_order(g) == 12);
    ls_group_free(g);

    CHECK(ls_group_from_text("group X\ndegree 2\nperm (1 5)\n", nullptr, &g) == LS_ERR_PARSE);
}

TEST_CASE("caps map to the dedicated status") {
    ls_group* g = nullptr;
    const char* text = "group big\ndegree 12\nperm (1 2 3 4 5 6 7 8 9 10 11 12)\n";
    CHECK(ls_group_from_text(text, "{\"max_order\":5}", &g) == LS_ERR_CAP);
}

TEST_CASE("analyze and classify round-trip through JSON") {
    ls_group* g = nullptr;
    REQUIRE(ls_group_builtin("A4", nullptr, &g) == LS_OK);
    Buffer a;
    REQUIRE(ls_analyze(g, "{\"stable\":true}", &a.data) == LS_OK);
    Json aj = a.parse();
    CHECK(aj["l9_free"] == true);

    Buffer c;
    REQUIRE(ls_classify(g, "{\"stable\":true}", &c.data) == LS_OK);
    Json cj = c.parse();
    CHECK(cj["in_class"] == true);
    CHECK(cj["type"]["n_order"] == 4);
    ls_group_free(g);
}

TEST_CASE("validate runs a selection") {
    Buffer v;
    REQUIRE(ls_validate("C6,D8,Q8", "{\"stable\":true,\"jobs\":2}", &v.data) == LS_OK);
    Json vj = v.parse();
    CHECK(vj["ok"] == true);
    CHECK(vj["groups"].size() == 3);
}

TEST_CASE("congruences and model checks answer through the C surface") {
    Buffer c;
    REQUIRE(ls_congruences("L9", &c.data) == LS_OK);
    CHECK(c.parse()["count"] == 2);
    CHECK(ls_congruences("L99", &c.data) == LS_ERR_UNKNOWN_ID);

    Buffer m;
    const char* model_text =
        "group m\nmodel 2\nblock H 19 2\n18 0\n0 18\n4 0\n0 4\nblock J 5 2\n0 3\n1 0\n2 3\n1 2\n";
    REQUIRE(ls_model_check(model_text, &m.data) == LS_OK);
    CHECK(m.parse()["outcome"] == "violation");
}

TEST_CASE("corpus manifest is available") {
    Buffer b;
    REQUIRE(ls_corpus_manifest(&b.data) == LS_OK);
    CHECK(b.parse()["groups"].size() >= 30);
}
