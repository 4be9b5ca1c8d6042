#include "reserve/generate.hpp"

#include <algorithm>
#include <numeric>

namespace reserve {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

Instance random_instance(std::mt19937_64& rng, const RawInstanceParams& params) {
    const int n = draw(rng, params.min_patients, params.max_patients);
    const int max_cats = std::min(params.max_categories, params.max_units);
    const int n_cats = draw(rng, std::max(params.min_categories, 1), std::max(max_cats, 1));

    Instance inst;
    for (int i = 0; i < n; ++i)
        inst.patient_names.push_back("i" + std::to_string(i + 1));
    for (int c = 0; c < n_cats; ++c)
        inst.category_names.push_back("c" + std::to_string(c + 1));

    // Each category gets one unit, the remainder is spread at random.
    inst.capacities.assign(static_cast<size_t>(n_cats), 1);
    int spare = draw(rng, 0, params.max_units - n_cats);
    for (int k = 0; k < spare; ++k)
        ++inst.capacities[static_cast<size_t>(draw(rng, 0, n_cats - 1))];
    inst.total_units = std::accumulate(inst.capacities.begin(), inst.capacities.end(), 0);

    std::vector<PatientId> ranking(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        ranking[static_cast<size_t>(i)] = PatientId{i};
    for (int c = 0; c < n_cats; ++c) {
        std::shuffle(ranking.begin(), ranking.end(), rng);
        inst.priorities.emplace_back(ranking, draw(rng, 0, n));
    }
    return validate_instance(std::move(inst));
}

BaselineInstance random_baseline(std::mt19937_64& rng, const BaselineInstanceParams& params) {
    BaselineInstance b;
    const int n = draw(rng, params.min_patients, params.max_patients);
    for (int i = 0; i < n; ++i)
        b.patient_names.push_back("i" + std::to_string(i + 1));

    const int max_reserves = std::min(params.max_reserves, params.max_units - 1);
    const int n_reserves = draw(rng, params.min_reserves, std::max(max_reserves, params.min_reserves));
    for (int c = 0; c < n_reserves; ++c)
        b.reserve_names.push_back("c" + std::to_string(c + 1));

    // One unit per category including the unreserved one, remainder random.
    b.unreserved_capacity = 1;
    b.reserve_capacities.assign(static_cast<size_t>(n_reserves), 1);
    int spare = draw(rng, 0, params.max_units - n_reserves - 1);
    for (int k = 0; k < spare; ++k) {
        const int target = draw(rng, 0, n_reserves);
        if (target == n_reserves)
            ++b.unreserved_capacity;
        else
            ++b.reserve_capacities[static_cast<size_t>(target)];
    }

    b.beneficiaries.assign(static_cast<size_t>(n_reserves), {});
    if (params.disjoint_beneficiaries) {
        // Assign each patient to at most one preferential category.
        for (int i = 0; i < n; ++i) {
            const int target = draw(rng, 0, n_reserves); // n_reserves means none
            if (target < n_reserves)
                b.beneficiaries[static_cast<size_t>(target)].push_back(PatientId{i});
        }
    } else {
        for (int c = 0; c < n_reserves; ++c)
            for (int i = 0; i < n; ++i)
                if (draw(rng, 0, 2) == 0)
                    b.beneficiaries[static_cast<size_t>(c)].push_back(PatientId{i});
    }

    b.mode = params.soft_only || draw(rng, 0, 1) == 0 ? ReserveMode::Soft : ReserveMode::Hard;
    validate_baseline(b);
    return b;
}

} // namespace reserve
