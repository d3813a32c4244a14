#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dio/corpus.hpp"

using namespace dio;

TEST_CASE("corpus lists the expected entries") {
    auto ids = corpus_ids();
    REQUIRE(ids.size() == 6);
    CHECK(ids[0] == "base-curve-dossier");
    CHECK(ids[1] == "t10-u3-record");
    CHECK(ids[2] == "t12-m2");
    CHECK(ids[3] == "t12-m3");
    CHECK(ids[4] == "t12alt-u-7-record");
    CHECK(ids[5] == "t44-t4-3-record");
}

TEST_CASE("every corpus entry verifies") {
    auto reports = verify_corpus();
    REQUIRE(reports.size() == 6);
    for (const auto& rep : reports) {
        INFO(rep.id);
        for (const auto& c : rep.checks) {
            INFO(c.name, ": ", c.detail);
            CHECK(c.pass);
        }
        CHECK(rep.passed());
    }
}

TEST_CASE("single-entry filter") {
    auto reports = verify_corpus(std::string("t12-m2"));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].id == "t12-m2");
    CHECK(reports[0].passed());
    CHECK_THROWS_AS(verify_corpus(std::string("nope")), DomainError);
}

TEST_CASE("embedded fixtures match the fixtures directory") {
#ifdef DIOCURVE_SOURCE_DIR
    std::string dir = std::string(DIOCURVE_SOURCE_DIR) + "/fixtures";
    auto from_dir = verify_corpus_dir(dir);
    auto embedded = verify_corpus();
    REQUIRE(from_dir.size() == embedded.size());
    for (std::size_t i = 0; i < from_dir.size(); ++i) {
        CHECK(from_dir[i].id == embedded[i].id);
        CHECK(from_dir[i].passed());
    }
#endif
}

TEST_CASE("corpus entries round trip through serialization") {
    for (const auto& e : corpus_entries()) {
        std::string text = e.data.dump();
        wire::json reparsed = wire::parse(text);
        CHECK(reparsed == e.data);
        if (!e.data.contains("triple") || e.data.at("triple").is_null()) continue;
        DioTriple t = wire::triple_from(e.data.at("triple"));
        wire::json out = wire::to_json(t);
        DioTriple t2 = wire::triple_from(out);
        CHECK(t.same_triple(t2));
        CHECK(wire::to_json(t2) == out);
    }
}

TEST_CASE("report serialization shape") {
    auto reports = verify_corpus(std::string("base-curve-dossier"));
    wire::json j = report_to_json(reports);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("id") == "base-curve-dossier");
    CHECK(j[0].at("pass") == true);
    CHECK(j[0].at("checks").is_array());
    for (const auto& c : j[0].at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("detail"));
    }
}
