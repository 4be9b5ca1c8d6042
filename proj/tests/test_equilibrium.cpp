#include "doctest.h"

#include <random>
#include <set>

#include "reserve/equilibrium.hpp"
#include "reserve/generate.hpp"
#include "reserve/oracle.hpp"

#include "fixtures.hpp"

using namespace reserve;
using fixtures::kC;
using fixtures::kUTwo;
using fixtures::make_matching;

namespace {

const Instance& hard_instance() {
    static const Instance inst = lower_instance(fixtures::two_patient_hard());
    return inst;
}

CutoffVector make_cutoffs(std::initializer_list<std::optional<int>> values) {
    CutoffVector f;
    for (const auto& v : values)
        f.cutoff.push_back(v ? std::optional(PatientId{*v}) : std::nullopt);
    return f;
}

// phi under precedence u then c: only i1 matched. phi' under c then u.
const Matching phi = make_matching(2, {{0, 1}});
const Matching phi_prime = make_matching(2, {{0, 0}, {1, 1}});

} // namespace

TEST_CASE("budget_set") {
    const Instance& inst = hard_instance();
    SUBCASE("a patient always affords a category whose cutoff she is") {
        const auto budget = budget_set(inst, make_cutoffs({0, 1}), PatientId{0});
        CHECK(budget == std::vector<CategoryId>{kC, kUTwo});
        CHECK(budget_set(inst, make_cutoffs({std::nullopt, 1}), PatientId{1}) ==
              std::vector<CategoryId>{kUTwo});
    }
    SUBCASE("a sentinel cutoff admits exactly the eligible") {
        const auto budget = budget_set(inst, make_cutoffs({std::nullopt, std::nullopt}), PatientId{1});
        CHECK(budget == std::vector<CategoryId>{kUTwo}); // ineligible for c
    }
    SUBCASE("cutoffs exclude lower-ranked patients") {
        // f_u = i2, f_c = i1.
        const auto budget = budget_set(inst, make_cutoffs({0, 1}), PatientId{1});
        CHECK(budget == std::vector<CategoryId>{kUTwo});
    }
    SUBCASE("an ineligible patient cannot be a cutoff") {
        CHECK_THROWS_AS(budget_set(inst, make_cutoffs({1, 0}), PatientId{0}), ReserveError);
    }
}

TEST_CASE("is_cutoff_equilibrium") {
    const Instance& inst = hard_instance();
    SUBCASE("supporting vector for the efficient matching") {
        CHECK(is_cutoff_equilibrium(inst, make_cutoffs({0, 1}), phi_prime));
    }
    SUBCASE("a patient cutoff on an under-filled category fails") {
        CHECK_FALSE(is_cutoff_equilibrium(inst, make_cutoffs({0, 0}), phi));
    }
    SUBCASE("vacuous on an empty instance") {
        Instance empty;
        empty.category_names = {"c"};
        empty.capacities = {0};
        empty.priorities.emplace_back(std::vector<PatientId>{}, 0);
        empty.total_units = 0;
        CHECK(is_cutoff_equilibrium(empty, make_cutoffs({std::nullopt}), Matching(0)));
    }
}

TEST_CASE("max_cutoff_vector") {
    const Instance& inst = hard_instance();
    SUBCASE("full categories cut at their weakest member") {
        CHECK(max_cutoff_vector(inst, phi_prime) == make_cutoffs({0, 1}));
    }
    SUBCASE("under-filled categories keep the sentinel") {
        CHECK(max_cutoff_vector(inst, phi) == make_cutoffs({std::nullopt, 0}));
        CHECK(max_cutoff_vector(inst, Matching(2)) ==
              make_cutoffs({std::nullopt, std::nullopt}));
    }
    SUBCASE("a zero-capacity category keeps the sentinel") {
        Instance inst0 = inst;
        inst0.capacities = {0, 1};
        inst0.total_units = 1;
        inst0 = validate_instance(inst0);
        const auto f = max_cutoff_vector(inst0, make_matching(2, {{0, 1}}));
        CHECK(f == make_cutoffs({std::nullopt, 0}));
    }
}

TEST_CASE("min_cutoff_vector") {
    const Instance& inst = hard_instance();
    SUBCASE("all matched: all sentinels") {
        CHECK(min_cutoff_vector(inst, phi_prime) ==
              make_cutoffs({std::nullopt, std::nullopt}));
    }
    SUBCASE("an unmatched eligible patient pins the cutoff above her") {
        // i2 unmatched: for u the last matched patient above i2 is i1; for c
        // the sentinel outranks i2, so the cutoff stays the sentinel.
        CHECK(min_cutoff_vector(inst, phi) == make_cutoffs({std::nullopt, 0}));
    }
}

TEST_CASE("enumerate_equilibrium_cutoffs") {
    const Instance& inst = hard_instance();
    SUBCASE("degenerate interval is a singleton") {
        const auto supports = enumerate_equilibrium_cutoffs(inst, phi);
        REQUIRE(supports.size() == 1);
        CHECK(supports.front() == make_cutoffs({std::nullopt, 0}));
    }
    SUBCASE("product of the per-category intervals") {
        const auto supports = enumerate_equilibrium_cutoffs(inst, phi_prime);
        CHECK(supports.size() == 4); // {i2, -} x {i1, -}
        const std::set<CutoffVector> expected{
            make_cutoffs({0, 1}), make_cutoffs({0, std::nullopt}),
            make_cutoffs({std::nullopt, 1}), make_cutoffs({std::nullopt, std::nullopt})};
        CHECK(std::set<CutoffVector>(supports.begin(), supports.end()) == expected);
    }
    SUBCASE("members support, non-members do not") {
        const auto supports = enumerate_equilibrium_cutoffs(inst, phi_prime);
        const std::set<CutoffVector> support_set(supports.begin(), supports.end());
        int total = 0;
        for_each_cutoff_vector(inst, SizeGuard::matchings(), [&](const CutoffVector& f) {
            ++total;
            CHECK(is_cutoff_equilibrium(inst, f, phi_prime) == support_set.count(f));
            return true;
        });
        CHECK(total == 6);
    }
    SUBCASE("requires an axiom-satisfying matching") {
        CHECK_THROWS_WITH_AS(enumerate_equilibrium_cutoffs(inst, make_matching(2, {{1, 1}})),
                             doctest::Contains("AxiomViolation"), ReserveError);
    }
}

TEST_CASE("maximum cutoffs dominate minimum cutoffs on axiom-satisfying matchings") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Instance inst = random_instance(rng);
        for (const Matching& mu : axiom_satisfying_set(inst, SizeGuard::matchings())) {
            const auto top = max_cutoff_vector(inst, mu);
            const auto bottom = min_cutoff_vector(inst, mu);
            for (int c = 0; c < inst.n_categories(); ++c)
                REQUIRE(inst.priority(CategoryId{c})
                            .weakly_above(top.cutoff[static_cast<size_t>(c)],
                                          bottom.cutoff[static_cast<size_t>(c)]));
        }
    }
}

TEST_CASE("budget sets are antitone in cutoffs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Instance inst = random_instance(rng);
        if (inst.n_patients() == 0)
            continue;
        std::vector<CutoffVector> vectors = all_cutoff_vectors(inst, SizeGuard::matchings());
        std::uniform_int_distribution<size_t> pick(0, vectors.size() - 1);
        const CutoffVector f = vectors[pick(rng)];
        // Raise one category's cutoff by one step where possible. The ladder
        // of valid cutoffs is the eligible patients in rank order, then the
        // sentinel.
        for (int c = 0; c < inst.n_categories(); ++c) {
            const auto& order = inst.priority(CategoryId{c});
            std::vector<std::optional<PatientId>> ladder;
            for (int pos = 0; pos < order.eligible_count(); ++pos)
                ladder.push_back(order.ranking()[static_cast<size_t>(pos)]);
            ladder.push_back(std::nullopt);
            const auto current = std::find(ladder.begin(), ladder.end(),
                                           f.cutoff[static_cast<size_t>(c)]);
            if (current == ladder.begin())
                continue;
            CutoffVector raised = f;
            raised.cutoff[static_cast<size_t>(c)] = *(current - 1);
            for (int i = 0; i < inst.n_patients(); ++i) {
                const auto before = budget_set(inst, f, PatientId{i});
                const auto after = budget_set(inst, raised, PatientId{i});
                REQUIRE(std::includes(before.begin(), before.end(), after.begin(), after.end()));
            }
        }
    }
}
