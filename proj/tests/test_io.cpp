#include "doctest.h"

#include <fstream>

#include <nlohmann/json.hpp>

#include "reserve/io.hpp"
#include "reserve/mechanisms.hpp"

#include "fixtures.hpp"

using namespace reserve;
using reserve::io::Json;

namespace {

std::string data_path(const std::string& name) {
    return std::string(RESERVE_TEST_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("baseline instance files load into the expected structure") {
    const auto loaded = io::load_instance(data_path("two_patient_hard.json"));
    REQUIRE(loaded.is_baseline());
    const auto& b = loaded.baseline();
    CHECK(b.patient_names == std::vector<std::string>{"i1", "i2"});
    CHECK(b.mode == ReserveMode::Hard);
    CHECK(b.unreserved_capacity == 1);
    REQUIRE(b.n_reserves() == 1);
    CHECK(b.beneficiaries[0] == std::vector<PatientId>{PatientId{0}});
}

TEST_CASE("parse then serialize then parse is the identity") {
    SUBCASE("baseline form") {
        const auto first = io::load_instance(data_path("six_category_soft.json"));
        const Json round = io::serialize_loaded(first);
        const auto second = io::parse_instance(round);
        CHECK(io::serialize_loaded(second) == round);
        CHECK(second.is_baseline());
        CHECK(lower_instance(second.baseline()).category_names ==
              lower_instance(first.baseline()).category_names);
    }
    SUBCASE("raw form") {
        const Instance inst = lower_instance(fixtures::two_patient_hard());
        const Json doc = io::serialize_instance(inst);
        const auto loaded = io::parse_instance(doc);
        REQUIRE_FALSE(loaded.is_baseline());
        CHECK(io::serialize_instance(loaded.raw()) == doc);
        CHECK(loaded.raw().priorities[0].eligible_count() == 1);
    }
}

TEST_CASE("schema violations are parse errors") {
    CHECK_THROWS_WITH_AS(io::parse_instance(Json{{"kind", "nope"}}),
                         doctest::Contains("ParseError"), ReserveError);
    CHECK_THROWS_WITH_AS(io::parse_instance(Json{{"patients", Json::array()}}),
                         doctest::Contains("ParseError"), ReserveError);
    // Validation failures surface with their own codes.
    CHECK_THROWS_WITH_AS(io::load_instance(data_path("malformed.json")),
                         doctest::Contains("MalformedPriority"), ReserveError);
    CHECK_THROWS_WITH_AS(io::load_instance(data_path("no_such_file.json")),
                         doctest::Contains("ParseError"), ReserveError);
}

TEST_CASE("profiles load against an instance") {
    const Instance inst = lower_instance(fixtures::two_patient_hard());
    const auto prefs = io::load_profile(data_path("two_patient_profile.json"), inst);
    REQUIRE(prefs.ranked.size() == 2);
    CHECK(prefs.ranked[0] == std::vector<CategoryId>{CategoryId{0}, CategoryId{1}});
    CHECK(prefs.ranked[1] == std::vector<CategoryId>{CategoryId{1}});

    Json bad = Json::parse(R"({"kind":"profile","preferences":[
        {"patient":"i1","ranking":["u","c"]},
        {"patient":"i2","ranking":["u","c"]}]})");
    CHECK_THROWS_WITH_AS(io::parse_profile(bad, inst), doctest::Contains("InvalidProfile"),
                         ReserveError);
}

TEST_CASE("precedence strings resolve category names") {
    const Instance inst = lower_instance(fixtures::two_patient_hard());
    const auto order = io::parse_precedence(inst, "u,c");
    CHECK(order.sequence == std::vector<CategoryId>{CategoryId{1}, CategoryId{0}});
    CHECK_THROWS_WITH_AS(io::parse_precedence(inst, "u,x"),
                         doctest::Contains("UnknownCategory"), ReserveError);
    CHECK_THROWS_AS(io::parse_precedence(inst, "u"), ReserveError);
}

TEST_CASE("reports serialize deterministically") {
    const Instance inst = lower_instance(fixtures::two_patient_hard());
    const auto order = io::parse_precedence(inst, "c,u");
    StepTrace trace;
    const Matching mu = sequential_reserve_matching(inst, order, &trace);

    Json mechanism;
    mechanism["name"] = "sequential";
    const Json once = io::result_report(inst, mu, mechanism, &trace);
    const Json twice = io::result_report(inst, mu, mechanism, &trace);
    CHECK(once.dump() == twice.dump());

    CHECK(once.at("matching").at("i1") == "c");
    CHECK(once.at("matching").at("i2") == "u");
    CHECK(once.at("cutoffs").at("max").at("u") == "i2");
    CHECK(once.at("cutoffs").at("min").at("u").is_null());
    CHECK(once.at("trace").size() == 2);

    // Key order is pinned, so the serialized bytes are stable.
    CHECK(once.dump().find("\"mechanism\"") < once.dump().find("\"matching\""));
    CHECK(io::to_text(once).find("matching.i1: c") != std::string::npos);
}
