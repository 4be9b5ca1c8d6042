#include "doctest.h"

#include <random>

#include "reserve/core.hpp"
#include "reserve/generate.hpp"
#include "reserve/oracle.hpp"

#include "fixtures.hpp"

using namespace reserve;
using fixtures::make_matching;

namespace {

Instance two_category_instance(int q) {
    Instance inst;
    inst.patient_names = {"i1", "i2"};
    inst.category_names = {"c1", "c2"};
    inst.capacities = {1, 1};
    inst.total_units = q;
    inst.priorities.emplace_back(std::vector<PatientId>{PatientId{0}, PatientId{1}}, 2);
    inst.priorities.emplace_back(std::vector<PatientId>{PatientId{1}, PatientId{0}}, 2);
    return inst;
}

/// Replaces every priority order's eligibility with all-eligible.
Instance make_soft(Instance inst) {
    for (auto& order : inst.priorities) {
        std::vector<PatientId> ranking(order.ranking().begin(), order.ranking().end());
        order = PriorityOrder(std::move(ranking), inst.n_patients());
    }
    return inst;
}

} // namespace

TEST_CASE("validate_instance accepts a consistent instance") {
    CHECK_NOTHROW(validate_instance(two_category_instance(2)));
}

TEST_CASE("validate_instance rejects a capacity/total mismatch") {
    CHECK_THROWS_WITH_AS(validate_instance(two_category_instance(3)),
                         doctest::Contains("CapacityMismatch"), ReserveError);
}

TEST_CASE("validate_instance rejects a priority order that misses a patient") {
    Instance inst = two_category_instance(2);
    // A ranking over a single patient cannot cover both.
    CHECK_THROWS_AS(inst.priorities[0] = PriorityOrder({PatientId{0}, PatientId{0}}, 1),
                    ReserveError);
    inst.priorities[0] = PriorityOrder({PatientId{0}}, 1);
    CHECK_THROWS_WITH_AS(validate_instance(inst), doctest::Contains("MalformedPriority"),
                         ReserveError);
}

TEST_CASE("validate_instance rejects duplicate patient ids") {
    Instance inst = two_category_instance(2);
    inst.patient_names = {"i1", "i1"};
    CHECK_THROWS_WITH_AS(validate_instance(inst), doctest::Contains("DuplicatePatient"),
                         ReserveError);
}

TEST_CASE("eligibility follows the sentinel position") {
    const Instance inst = lower_instance(fixtures::two_patient_hard());
    CHECK_FALSE(is_eligible(inst, PatientId{1}, fixtures::kC));
    CHECK(is_eligible(inst, PatientId{1}, fixtures::kUTwo));
    CHECK(is_eligible(inst, PatientId{0}, fixtures::kC));

    SUBCASE("sentinel ranked last means everyone is eligible") {
        for (int i = 0; i < inst.n_patients(); ++i)
            CHECK(is_eligible(inst, PatientId{i}, fixtures::kUTwo));
    }
    SUBCASE("unknown ids are rejected") {
        CHECK_THROWS_WITH_AS(is_eligible(inst, PatientId{7}, fixtures::kC),
                             doctest::Contains("UnknownPatient"), ReserveError);
        CHECK_THROWS_WITH_AS(is_eligible(inst, PatientId{0}, CategoryId{9}),
                             doctest::Contains("UnknownCategory"), ReserveError);
    }
}

TEST_CASE("complies_with_eligibility") {
    const Instance inst = lower_instance(fixtures::two_patient_hard());
    CHECK(complies_with_eligibility(inst, make_matching(2, {{0, 0}, {1, 1}})));
    CHECK_FALSE(complies_with_eligibility(inst, make_matching(2, {{1, 0}})));
    CHECK(complies_with_eligibility(inst, Matching(2)));
}

TEST_CASE("is_non_wasteful") {
    const Instance hard = lower_instance(fixtures::two_patient_hard());
    // i2 unmatched but ineligible for the idle preferential unit.
    CHECK(is_non_wasteful(hard, make_matching(2, {{0, 1}})));

    // Under soft reserves the same assignment wastes the preferential unit.
    const Instance soft = make_soft(hard);
    CHECK_FALSE(is_non_wasteful(soft, make_matching(2, {{0, 1}})));

    CHECK(is_non_wasteful(hard, make_matching(2, {{0, 0}, {1, 1}})));
}

TEST_CASE("respects_priorities") {
    const Instance six = lower_instance(fixtures::six_category_soft());
    // The step-table outcome of processing cp,c,cs,ch,ct,u in order.
    const Matching phi = make_matching(7, {{0, 1}, {2, 0}, {1, 2}, {3, 3}, {6, 4}, {4, 5}});
    CHECK(respects_priorities(six, phi));
    CHECK(complies_with_eligibility(six, phi));
    CHECK(is_non_wasteful(six, phi));

    SUBCASE("direct violation") {
        Instance inst = two_category_instance(2);
        inst.category_names = {"c", "d"};
        inst = validate_instance(inst);
        // i2 matched while the higher-priority i1 stays unmatched.
        CHECK_FALSE(respects_priorities(inst, make_matching(2, {{1, 0}})));
    }
    SUBCASE("vacuous when everyone is matched") {
        const Instance inst = validate_instance(two_category_instance(2));
        CHECK(respects_priorities(inst, make_matching(2, {{0, 0}, {1, 1}})));
    }
}

TEST_CASE("matched_set restricts to the requested subset") {
    const Matching mu = make_matching(3, {{0, 0}, {2, 0}});
    const std::vector<PatientId> subset{PatientId{1}, PatientId{2}};
    CHECK(matched_set(mu) == std::vector<PatientId>{PatientId{0}, PatientId{2}});
    CHECK(matched_set(mu, subset) == std::vector<PatientId>{PatientId{2}});
}

TEST_CASE("a zero-capacity category satisfies every axiom trivially") {
    Instance inst = two_category_instance(1);
    inst.capacities = {1, 0};
    inst = validate_instance(inst);
    const Matching mu = make_matching(2, {{0, 0}});
    CHECK(complies_with_eligibility(inst, mu));
    CHECK(is_non_wasteful(inst, mu));
    CHECK(respects_priorities(inst, mu));
}

TEST_CASE("soft instances: every axiom-satisfying matching fills min(q, patients)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = make_soft(random_instance(rng));
        const auto expected =
            static_cast<size_t>(std::min(inst.total_units, inst.n_patients()));
        for (const Matching& mu : axiom_satisfying_set(inst, SizeGuard::matchings()))
            REQUIRE(matched_set(mu).size() == expected);
    }
}

TEST_CASE("axiom predicates are pure") {
    const Instance inst = lower_instance(fixtures::two_patient_hard());
    const Matching mu = make_matching(2, {{0, 0}, {1, 1}});
    const Matching copy = mu;
    (void)complies_with_eligibility(inst, mu);
    (void)is_non_wasteful(inst, mu);
    (void)respects_priorities(inst, mu);
    CHECK(mu == copy);
    CHECK(complies_with_eligibility(inst, mu) == complies_with_eligibility(inst, mu));
}
